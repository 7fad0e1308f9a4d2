#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "tfg/error.hpp"

namespace tfg {

/// Permutation of {0, ..., n-1} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(size_t n) : map_(n) { std::iota(map_.begin(), map_.end(), 0); }
  explicit Permutation(std::vector<uint32_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (uint32_t v : map_) {
      require(v < map_.size() && !seen[v], errc::bad_config, "not a permutation");
      seen[v] = true;
    }
  }

  static Permutation transposition(size_t n, size_t i, size_t j) {
    Permutation p(n);
    std::swap(p.map_[i], p.map_[j]);
    return p;
  }

  static Permutation cycle3(size_t n, size_t i, size_t j, size_t k) {
    Permutation p(n);
    p.map_[i] = (uint32_t)j;
    p.map_[j] = (uint32_t)k;
    p.map_[k] = (uint32_t)i;
    return p;
  }

  size_t size() const { return map_.size(); }
  uint32_t operator()(size_t i) const { return map_[i]; }
  const std::vector<uint32_t>& one_line() const { return map_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    // (a*b)(i) = a(b(i))
    require(a.size() == b.size(), errc::bad_config, "permutation size mismatch");
    std::vector<uint32_t> m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = a.map_[b.map_[i]];
    Permutation p;
    p.map_ = std::move(m);
    return p;
  }

  Permutation inv() const {
    std::vector<uint32_t> m(size());
    for (size_t i = 0; i < size(); ++i) m[map_[i]] = (uint32_t)i;
    Permutation p;
    p.map_ = std::move(m);
    return p;
  }

  bool is_identity() const {
    for (size_t i = 0; i < size(); ++i)
      if (map_[i] != i) return false;
    return true;
  }

  /// 0 for even, 1 for odd.
  int parity() const {
    std::vector<bool> seen(size(), false);
    int par = 0;
    for (size_t i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      size_t len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = map_[j];
        ++len;
      }
      par ^= (int)((len - 1) & 1);
    }
    return par;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.map_ == b.map_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<uint32_t> map_;
};

/// Closure of a generating set under composition (plain BFS; fine for the
/// desk-scale groups handled here).
inline std::set<Permutation> permutation_closure(const std::vector<Permutation>& gens,
                                                 size_t cap = 2000000) {
  require(!gens.empty(), errc::bad_config, "empty generating set");
  std::set<Permutation> seen;
  std::vector<Permutation> frontier;
  Permutation id(gens[0].size());
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Permutation> nxt;
    for (const Permutation& p : frontier) {
      for (const Permutation& g : gens) {
        Permutation q = g * p;
        if (seen.insert(q).second) {
          require(seen.size() <= cap, errc::resource_cap, "closure cap exceeded");
          nxt.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(nxt);
  }
  return seen;
}

/// Do the consecutive 3-cycles (1,2,3), (2,3,4), ..., (n-2,n-1,n) generate the
/// alternating group A_n? Verified by brute-force closure against the full
/// list of even permutations.
inline bool alternating_gen_check(int n, size_t* closure_size = nullptr) {
  require(n >= 3 && n <= 9, errc::bad_config, "exhaustive check supported for 3 <= n <= 9");
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < n; ++i) gens.push_back(Permutation::cycle3((size_t)n, i, i + 1, i + 2));
  auto closure = permutation_closure(gens);
  if (closure_size) *closure_size = closure.size();
  // enumerate all even permutations
  std::vector<uint32_t> base(n);
  std::iota(base.begin(), base.end(), 0);
  size_t even_count = 0;
  bool all_even_in_closure = true;
  do {
    Permutation p{std::vector<uint32_t>(base)};
    if (p.parity() == 0) {
      ++even_count;
      if (!closure.count(p)) all_even_in_closure = false;
    }
  } while (std::next_permutation(base.begin(), base.end()));
  for (const Permutation& p : closure)
    if (p.parity() != 0) return false;
  return all_even_in_closure && closure.size() == even_count;
}

}  // namespace tfg
