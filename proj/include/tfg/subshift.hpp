#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "tfg/quadreal.hpp"
#include "tfg/word.hpp"

namespace tfg {

struct Caps {
  int language_max_len = 4096;   // longest word the oracle will enumerate
  int order_cap = 720;           // default cap for order()
  int span_cap = 64;             // cylinder refinement cap (decompose, recoding)
  int evolve_cap = 48;           // substitution evolution depth for points
  int measure_block_cap = 24;    // largest k for k-block frequencies
  int recognizability_cap = 64;  // max radius when locating block grids
};

/// Disjoint sorted union of half-open arcs [lo, hi) inside [0,1).
struct ArcSet {
  struct Arc {
    QuadReal lo, hi;
  };
  std::vector<Arc> arcs;

  bool empty() const { return arcs.empty(); }

  QuadReal length() const {
    QuadReal s;
    for (const Arc& a : arcs) s += a.hi - a.lo;
    return s;
  }

  static ArcSet full() { return ArcSet{{Arc{QuadReal(0), QuadReal(1)}}}; }

  // interval [lo, hi) with 0 <= lo < 1, 0 < hi <= 1 allowed to wrap when lo >= hi
  static ArcSet interval_mod1(const QuadReal& lo, const QuadReal& hi) {
    QuadReal l = lo.frac();
    QuadReal h = hi - QuadReal(Rational(lo.floor()));  // keep hi relative to reduced lo
    ArcSet r;
    if (h <= QuadReal(1)) {
      if (l < h) r.arcs.push_back(Arc{l, h});
    } else {
      QuadReal h2 = h - QuadReal(1);
      if (!(h2 == l)) {
        r.arcs.push_back(Arc{QuadReal(0), h2});
        r.arcs.push_back(Arc{l, QuadReal(1)});
      } else {
        return full();
      }
    }
    return r;
  }

  ArcSet intersect(const ArcSet& o) const {
    ArcSet r;
    for (const Arc& x : arcs) {
      for (const Arc& y : o.arcs) {
        QuadReal lo = x.lo < y.lo ? y.lo : x.lo;
        QuadReal hi = x.hi < y.hi ? x.hi : y.hi;
        if (lo < hi) r.arcs.push_back(Arc{lo, hi});
      }
    }
    std::sort(r.arcs.begin(), r.arcs.end(),
              [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
    return r;
  }

  // shift every arc by delta (mod 1)
  ArcSet rotate(const QuadReal& delta) const {
    ArcSet r;
    for (const Arc& a : arcs) {
      ArcSet piece = interval_mod1(a.lo + delta, a.hi + delta);
      for (const Arc& p : piece.arcs) r.arcs.push_back(p);
    }
    std::sort(r.arcs.begin(), r.arcs.end(),
              [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
    return r;
  }

  bool contains(const QuadReal& t) const {
    for (const Arc& a : arcs)
      if (a.lo <= t && t < a.hi) return true;
    return false;
  }
};

enum class SystemKind { SFT, Substitution, Sturmian };

class SubshiftSystem;
using SystemPtr = std::shared_ptr<const SubshiftSystem>;

/// A computable point of the subshift. Coordinates over any finite window can
/// be evaluated exactly.
class PointHandle {
 public:
  struct SturmianPoint {
    QuadReal t;  // in [0,1), right-continuous coding
  };
  struct SeedPoint {
    Letter left, right;  // sigma^p(left).sigma^p(right) two-sided limit
    int power = 1;       // p with sigma^p(left) ending in left etc.
  };
  struct AddressPoint {
    // nested block addresses, level 1 upward: (v_j, k_j) with
    // sigma(v_{j+1})[k_{j+1}] = v_j; list is repeated cyclically
    std::vector<std::pair<Letter, int>> cycle;
  };

  PointHandle() = default;
  static PointHandle sturmian(QuadReal t) {
    PointHandle p;
    p.sturmian_ = SturmianPoint{t.frac()};
    return p;
  }
  static PointHandle seed(Letter l, Letter r, int power) {
    PointHandle p;
    p.seed_ = SeedPoint{l, r, power};
    return p;
  }
  static PointHandle address(std::vector<std::pair<Letter, int>> cycle) {
    PointHandle p;
    p.address_ = AddressPoint{std::move(cycle)};
    return p;
  }

  const std::optional<SturmianPoint>& sturmian_point() const { return sturmian_; }
  const std::optional<SeedPoint>& seed_point() const { return seed_; }
  const std::optional<AddressPoint>& address_point() const { return address_; }

 private:
  std::optional<SturmianPoint> sturmian_;
  std::optional<SeedPoint> seed_;
  std::optional<AddressPoint> address_;
};

/// Two-sided subshift with an exact language oracle.
///
/// The shift map phi acts by (phi x)_i = x_{i+1}; on cylinders this moves the
/// window one step left, i.e. phi([w at offset o]) = [w at offset o-1].
class SubshiftSystem : public std::enable_shared_from_this<SubshiftSystem> {
 public:
  static SystemPtr make_sft(Alphabet ab, std::vector<Word> forbidden, Caps caps = {}) {
    auto sys = std::shared_ptr<SubshiftSystem>(new SubshiftSystem(std::move(ab), caps));
    sys->kind_ = SystemKind::SFT;
    sys->forbidden_ = std::move(forbidden);
    sys->init_sft();
    return sys;
  }

  static SystemPtr make_substitution(Alphabet ab, std::vector<Word> rules,
                                     std::vector<PointHandle> points = {}, Caps caps = {}) {
    auto sys = std::shared_ptr<SubshiftSystem>(new SubshiftSystem(std::move(ab), caps));
    sys->kind_ = SystemKind::Substitution;
    sys->rules_ = std::move(rules);
    sys->points_ = std::move(points);
    sys->init_substitution();
    return sys;
  }

  static SystemPtr make_sturmian(QuadReal alpha, std::vector<PointHandle> points = {},
                                 Caps caps = {}) {
    auto sys = std::shared_ptr<SubshiftSystem>(
        new SubshiftSystem(Alphabet({"0", "1"}), caps));
    sys->kind_ = SystemKind::Sturmian;
    sys->alpha_ = alpha.frac();
    require(!sys->alpha_.is_rational(), errc::bad_config,
            "sturmian parameter must be irrational");
    require(QuadReal(0) < sys->alpha_ && sys->alpha_ < QuadReal(1), errc::bad_config,
            "sturmian parameter must lie in (0,1)");
    if (points.empty()) {
      points.push_back(PointHandle::sturmian(QuadReal(0)));
      points.push_back(PointHandle::sturmian(QuadReal(Rational(1, 2))));
    }
    sys->points_ = std::move(points);
    sys->validate_points();
    return sys;
  }

  SystemKind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const Caps& caps() const { return caps_; }
  const QuadReal& sturmian_alpha() const {
    require(kind_ == SystemKind::Sturmian, errc::unsupported_system, "not a sturmian system");
    return alpha_;
  }
  const std::vector<Word>& substitution_rules() const {
    require(kind_ == SystemKind::Substitution, errc::unsupported_system,
            "not a substitution system");
    return rules_;
  }
  const std::vector<PointHandle>& distinguished_points() const { return points_; }

  bool uniquely_ergodic() const { return kind_ != SystemKind::SFT; }

  /// All length-n words of the language, sorted. The reference stays valid for
  /// the lifetime of the system.
  const std::vector<Word>& words(int n) const {
    require(n >= 1, errc::bad_config, "words(n) needs n >= 1");
    require(n <= caps_.language_max_len, errc::resource_cap,
            "language cap exceeded: " + std::to_string(n));
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = word_cache_.find(n);
    if (it != word_cache_.end()) return it->second;
    std::vector<Word> ws = enumerate_words(n);
    std::sort(ws.begin(), ws.end());
    return word_cache_.emplace(n, std::move(ws)).first->second;
  }

  bool contains(const Word& w) const {
    if (w.empty()) return true;
    const auto& ws = words((int)w.size());
    return std::binary_search(ws.begin(), ws.end(), w);
  }

  long word_index(const Word& w) const {
    const auto& ws = words((int)w.size());
    auto it = std::lower_bound(ws.begin(), ws.end(), w);
    require(it != ws.end() && *it == w, errc::not_closed,
            "word not in language: " + w.str(alphabet_));
    return it - ws.begin();
  }

  /// Coordinates x_i..x_j of a distinguished-style point.
  Word point_coords(const PointHandle& p, long i, long j) const {
    require(i <= j, errc::bad_config, "point_coords needs i <= j");
    if (p.sturmian_point()) {
      require(kind_ == SystemKind::Sturmian, errc::unsupported_system, "point kind mismatch");
      std::vector<Letter> v;
      for (long k = i; k <= j; ++k) {
        QuadReal t = (p.sturmian_point()->t + alpha_ * QuadReal(Rational(k))).frac();
        v.push_back(t < alpha_ ? 0 : 1);
      }
      return Word(std::move(v));
    }
    if (p.seed_point()) return seed_coords(*p.seed_point(), i, j);
    if (p.address_point()) return address_coords(*p.address_point(), i, j);
    fail(errc::bad_config, "uninitialized point handle");
  }

  /// Admissibility domain of a word under the rotation coding:
  /// { t : coding of t starts with w }, as exact arcs.
  ArcSet sturmian_domain(const Word& w) const {
    require(kind_ == SystemKind::Sturmian, errc::unsupported_system, "not a sturmian system");
    ArcSet dom = ArcSet::full();
    for (size_t j = 0; j < w.size(); ++j) {
      ArcSet ij = w[j] == 0 ? ArcSet::interval_mod1(QuadReal(0), alpha_)
                            : ArcSet::interval_mod1(alpha_, QuadReal(1));
      dom = dom.intersect(ij.rotate(-alpha_ * QuadReal(Rational((long)j))));
      if (dom.empty()) break;
    }
    return dom;
  }

  /// Image word under the substitution.
  Word apply_substitution(const Word& w) const {
    Word out;
    for (size_t i = 0; i < w.size(); ++i) out = out + rules_.at(w[i]);
    return out;
  }

  Word iterate_substitution(Letter a, int k) const {
    Word w = Word::single(a);
    for (int i = 0; i < k; ++i) {
      require((long)w.size() <= 4 * caps_.language_max_len, errc::resource_cap,
              "substitution word growth cap");
      w = apply_substitution(w);
    }
    return w;
  }

  /// Letter incidence counts: m[a][b] = occurrences of a in sigma(b).
  std::vector<std::vector<long>> incidence() const {
    size_t k = alphabet_.size();
    std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
    for (size_t b = 0; b < k; ++b)
      for (size_t i = 0; i < rules_[b].size(); ++i) m[rules_[b][i]][b]++;
    return m;
  }

  bool same_system(const SubshiftSystem& o) const { return this == &o; }

 private:
  SubshiftSystem(Alphabet ab, Caps caps) : alphabet_(std::move(ab)), caps_(caps) {}

  void init_substitution() {
    require(rules_.size() == alphabet_.size(), errc::bad_config,
            "substitution needs one rule per letter");
    for (const Word& w : rules_)
      require(!w.empty(), errc::bad_config, "substitution images must be non-empty");
    // primitivity: some power of the incidence matrix is strictly positive
    size_t k = alphabet_.size();
    auto m = incidence();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) reach[i][j] = m[i][j] > 0;
    bool primitive = false;
    auto cur = reach;
    size_t bound = (k - 1) * (k - 1) + 1;
    for (size_t e = 1; e <= std::max<size_t>(bound, 1); ++e) {
      bool all = true;
      for (size_t i = 0; i < k && all; ++i)
        for (size_t j = 0; j < k && all; ++j) all = cur[i][j];
      if (all) {
        primitive = true;
        break;
      }
      // cur = cur * reach (boolean)
      std::vector<std::vector<bool>> nxt(k, std::vector<bool>(k, false));
      for (size_t i = 0; i < k; ++i)
        for (size_t l = 0; l < k; ++l)
          if (cur[i][l])
            for (size_t j = 0; j < k; ++j)
              if (reach[l][j]) nxt[i][j] = true;
      cur = nxt;
    }
    require(primitive, errc::bad_config, "substitution is not primitive");
    for (const PointHandle& p : points_)
      require(p.seed_point() || p.address_point(), errc::bad_config,
              "substitution system points must be seeds or addresses");
    validate_points();
  }

  void validate_points() const {
    for (const PointHandle& p : points_) {
      if (p.seed_point()) {
        const auto& s = *p.seed_point();
        Word l = iterate_substitution(s.left, s.power);
        Word r = iterate_substitution(s.right, s.power);
        require(l[l.size() - 1] == s.left, errc::bad_config,
                "left seed letter not fixed by the given power");
        require(r[0] == s.right, errc::bad_config,
                "right seed letter not fixed by the given power");
      }
      if (p.address_point()) {
        const auto& a = *p.address_point();
        require(!a.cycle.empty(), errc::bad_config, "empty address cycle");
        for (size_t j = 0; j < a.cycle.size(); ++j) {
          auto [v, kk] = a.cycle[(j + 1) % a.cycle.size()];
          auto [vc, kc] = a.cycle[j];
          (void)kc;
          const Word& img = rules_.at(v);
          require(kk >= 0 && (size_t)kk < img.size(), errc::bad_config,
                  "address index out of range");
          require(img[kk] == vc, errc::bad_config, "incompatible address chain");
        }
      }
      // window sanity: the first few coordinates must be computable and legal
      Word w = point_coords(p, -4, 4);
      require(contains(w), errc::bad_config, "point window leaves the language");
    }
  }

  void init_sft() {
    size_t maxlen = 1;
    for (const Word& f : forbidden_) maxlen = std::max(maxlen, f.size());
    sft_k_ = std::max<size_t>(1, maxlen > 1 ? maxlen - 1 : 1);
    // vertices: admissible words of length k (no forbidden factor)
    std::vector<Word> verts;
    std::vector<Word> cur;
    for (size_t a = 0; a < alphabet_.size(); ++a) cur.push_back(Word::single(Letter(a)));
    for (size_t len = 1; len < sft_k_; ++len) {
      std::vector<Word> nxt;
      for (const Word& w : cur)
        for (size_t a = 0; a < alphabet_.size(); ++a) {
          Word e = w.append(Letter(a));
          if (!has_forbidden_factor(e)) nxt.push_back(e);
        }
      cur = std::move(nxt);
    }
    for (const Word& w : cur)
      if (!has_forbidden_factor(w)) verts.push_back(w);
    // prune to the bi-infinite part
    std::set<Word> alive(verts.begin(), verts.end());
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<Word> keep;
      for (const Word& u : alive) {
        bool has_out = false, has_in = false;
        for (size_t a = 0; a < alphabet_.size() && !(has_out && has_in); ++a) {
          if (!has_out) {
            Word e = u.append(Letter(a));
            if (!has_forbidden_factor(e) && alive.count(e.suffix(sft_k_))) has_out = true;
          }
          if (!has_in) {
            Word e = u.prepend(Letter(a));
            if (!has_forbidden_factor(e) && alive.count(e.prefix(sft_k_))) has_in = true;
          }
        }
        if (has_out && has_in) keep.insert(u);
      }
      if (keep.size() != alive.size()) {
        alive = std::move(keep);
        changed = true;
      }
    }
    require(!alive.empty(), errc::bad_config, "empty shift of finite type");
    sft_vertices_.assign(alive.begin(), alive.end());
  }

  bool has_forbidden_factor(const Word& w) const {
    for (const Word& f : forbidden_) {
      if (f.size() > w.size()) continue;
      for (size_t i = 0; i + f.size() <= w.size(); ++i)
        if (w.sub(i, f.size()) == f) return true;
    }
    return false;
  }

  std::vector<Word> enumerate_words(int n) const {
    switch (kind_) {
      case SystemKind::SFT: return sft_words(n);
      case SystemKind::Substitution: return substitution_words(n);
      case SystemKind::Sturmian: return sturmian_words(n);
    }
    fail(errc::bad_config, "unreachable");
  }

  std::vector<Word> sft_words(int n) const {
    std::set<Word> out;
    if ((size_t)n <= sft_k_) {
      for (const Word& v : sft_vertices_)
        for (size_t i = 0; i + n <= v.size(); ++i) out.insert(v.sub(i, n));
      return {out.begin(), out.end()};
    }
    // extend paths to length n
    std::set<Word> cur(sft_vertices_.begin(), sft_vertices_.end());
    std::set<Word> av(sft_vertices_.begin(), sft_vertices_.end());
    for (size_t len = sft_k_; len < (size_t)n; ++len) {
      std::set<Word> nxt;
      for (const Word& w : cur)
        for (size_t a = 0; a < alphabet_.size(); ++a) {
          Word e = w.append(Letter(a));
          if (!has_forbidden_factor(e.suffix(std::min(e.size(), sft_k_ + 1))) &&
              av.count(e.suffix(sft_k_)))
            nxt.insert(e);
        }
      cur = std::move(nxt);
    }
    return {cur.begin(), cur.end()};
  }

  std::vector<Word> substitution_words(int n) const {
    // fixpoint of S -> S union factors<=n(sigma(S)), starting from the letters
    std::set<Word> S;
    for (size_t a = 0; a < alphabet_.size(); ++a) S.insert(Word::single(Letter(a)));
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<Word> add;
      for (const Word& u : S) {
        Word img = apply_substitution(u);
        size_t maxl = std::min<size_t>(n, img.size());
        for (size_t len = 1; len <= maxl; ++len)
          for (size_t i = 0; i + len <= img.size(); ++i) {
            Word f = img.sub(i, len);
            if (!S.count(f) && !add.count(f)) add.insert(f);
          }
      }
      if (!add.empty()) {
        grew = true;
        S.insert(add.begin(), add.end());
      }
    }
    std::vector<Word> out;
    for (const Word& w : S)
      if ((int)w.size() == n) out.push_back(w);
    return out;
  }

  std::vector<Word> sturmian_words(int n) const {
    // grow admissible words letter by letter, tracking the coding domain
    std::vector<std::pair<Word, ArcSet>> frontier;
    frontier.push_back({Word(), ArcSet::full()});
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<Word, ArcSet>> nxt;
      QuadReal shift = -alpha_ * QuadReal(Rational((long)j));
      for (auto& [w, dom] : frontier) {
        for (Letter a : {Letter(0), Letter(1)}) {
          ArcSet ia = a == 0 ? ArcSet::interval_mod1(QuadReal(0), alpha_)
                             : ArcSet::interval_mod1(alpha_, QuadReal(1));
          ArcSet d = dom.intersect(ia.rotate(shift));
          if (!d.empty()) nxt.push_back({w.append(a), std::move(d)});
        }
      }
      frontier = std::move(nxt);
    }
    std::vector<Word> out;
    for (auto& [w, dom] : frontier) out.push_back(w);
    return out;
  }

  Word seed_coords(const PointHandle::SeedPoint& s, long i, long j) const {
    Word left = Word::single(s.left), right = Word::single(s.right);
    int guard = 0;
    while ((long)left.size() < std::max(0L, -i) + 1 ||
           (long)right.size() < std::max(0L, j) + 1) {
      left = iterate_substitution_word(left, s.power);
      right = iterate_substitution_word(right, s.power);
      require(++guard <= caps_.evolve_cap, errc::resource_cap,
              "substitution evolution cap exceeded");
    }
    // left word occupies coordinates [-|left|, -1], right word [0, |right|-1]
    std::vector<Letter> v;
    for (long k = i; k <= j; ++k) {
      if (k < 0) {
        long idx = (long)left.size() + k;
        require(idx >= 0, errc::resource_cap, "seed window under-run");
        v.push_back(left[idx]);
      } else {
        v.push_back(right[k]);
      }
    }
    return Word(std::move(v));
  }

  Word iterate_substitution_word(Word w, int k) const {
    for (int i = 0; i < k; ++i) w = apply_substitution(w);
    return w;
  }

  Word address_coords(const PointHandle::AddressPoint& ad, long i, long j) const {
    // Walk up the block tower until sigma^m(v_m) strictly covers [i, j] around
    // the tracked origin, then read the window off the materialized word.
    size_t K = alphabet_.size();
    std::vector<long> len(K, 1);  // len[a] = |sigma^m(a)|
    long origin = 0;              // index of coordinate 0 inside sigma^m(v_m)
    for (int m = 1; m <= caps_.evolve_cap; ++m) {
      auto [v, kk] = ad.cycle[(m - 1) % ad.cycle.size()];
      const Word& img = rules_.at(v);
      long prefix = 0;
      for (int t = 0; t < kk; ++t) prefix += len[img[t]];
      origin += prefix;
      // advance letter lengths to level m
      std::vector<long> len2(K);
      for (size_t a = 0; a < K; ++a) {
        long s = 0;
        for (size_t t = 0; t < rules_[a].size(); ++t) {
          s += len[rules_[a][t]];
          require(s < (1L << 56), errc::resource_cap, "address expansion overflow");
        }
        len2[a] = s;
      }
      len = std::move(len2);
      if (origin + i >= 0 && origin + j < len[v]) {
        Word wm = iterate_substitution(v, m);
        std::vector<Letter> out;
        for (long k = i; k <= j; ++k) out.push_back(wm[origin + k]);
        return Word(std::move(out));
      }
    }
    fail(errc::resource_cap, "address evolution cap (window straddles every level)");
  }

  Alphabet alphabet_;
  Caps caps_;
  SystemKind kind_ = SystemKind::SFT;

  std::vector<Word> forbidden_;  // SFT
  size_t sft_k_ = 1;
  std::vector<Word> sft_vertices_;

  std::vector<Word> rules_;  // substitution images per letter

  QuadReal alpha_;  // sturmian

  std::vector<PointHandle> points_;

  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<Word>> word_cache_;
};

}  // namespace tfg
