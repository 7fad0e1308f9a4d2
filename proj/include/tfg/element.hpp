#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <vector>

#include "tfg/clopen.hpp"

namespace tfg {

/// Element of the topological full group, stored as a block code: a window
/// [-L, R] and one shift amount per language word of that length. The element
/// maps x to phi^{n(w)}(x) where w is the window of x.
///
/// Elements are validated on construction (the induced map must be a
/// homeomorphism) and kept with a minimal window.
class FullGroupElement {
 public:
  FullGroupElement() = default;

  static FullGroupElement identity(SystemPtr sys) {
    std::vector<int> code(sys->words(1).size(), 0);
    return FullGroupElement(std::move(sys), 0, 0, std::move(code), false);
  }

  /// phi^k as an element (n constant equal to k).
  static FullGroupElement shift_power(SystemPtr sys, int k) {
    std::vector<int> code(sys->words(1).size(), k);
    return FullGroupElement(std::move(sys), 0, 0, std::move(code), false);
  }

  /// Build from an explicit code table; validates bijectivity.
  static FullGroupElement from_code(SystemPtr sys, int L, int R,
                                    const std::map<Word, int>& code) {
    require(L >= 0 && R >= 0, errc::bad_config, "window radii must be >= 0");
    const auto& ws = sys->words(L + R + 1);
    std::vector<int> v(ws.size());
    size_t seen = 0;
    for (size_t i = 0; i < ws.size(); ++i) {
      auto it = code.find(ws[i]);
      require(it != code.end(), errc::not_closed,
              "code not total: missing " + ws[i].str(sys->alphabet()));
      v[i] = it->second;
      ++seen;
    }
    require(seen == code.size(), errc::not_closed, "code keyed on words outside the language");
    return FullGroupElement(std::move(sys), L, R, std::move(v), true);
  }

  /// Piecewise phi powers: shift k_i on the clopen piece A_i, identity off
  /// their union. Pieces must be pairwise disjoint.
  static FullGroupElement from_pieces(SystemPtr sys,
                                      const std::vector<std::pair<ClopenSet, int>>& pieces) {
    long o = 0, e = 0;
    for (auto& [A, k] : pieces) {
      if (A.is_empty()) continue;
      o = std::min(o, A.offset());
      e = std::max(e, A.end());
    }
    for (size_t i = 0; i < pieces.size(); ++i)
      for (size_t j = i + 1; j < pieces.size(); ++j)
        require(clopen_disjoint(pieces[i].first, pieces[j].first),
                errc::disjointness_violated, "overlapping pieces");
    int L = (int)std::max(0L, -o), R = (int)std::max(0L, e);
    const auto& ws = sys->words(L + R + 1);
    std::vector<int> code(ws.size(), 0);
    for (auto& [A, k] : pieces) {
      if (A.is_empty() || k == 0) continue;
      ClopenSet r = A.refined(-L, R);
      for (const Word& w : r.words()) code[sys->word_index(w)] = k;
    }
    return FullGroupElement(std::move(sys), L, R, std::move(code), true);
  }

  const SystemPtr& system() const { return sys_; }
  int left_radius() const { return L_; }
  int right_radius() const { return R_; }
  int window_len() const { return L_ + R_ + 1; }
  int max_shift() const { return max_abs_; }
  bool is_identity() const { return max_abs_ == 0; }
  const std::vector<int>& code() const { return code_; }

  /// Value of the cocycle on the cylinder [w at offset]; the word must cover
  /// the element's window.
  int cocycle(const Word& w, long offset) const {
    require(offset <= -L_ && offset + (long)w.size() - 1 >= R_, errc::word_too_short,
            "word does not cover the element window");
    Word c = w.sub((size_t)(-L_ - offset), window_len());
    return code_[sys_->word_index(c)];
  }
  int cocycle(const Word& w) const { return cocycle(w, -L_); }

  /// Cocycle at the point phi^j(p).
  int cocycle_at(const PointHandle& p, long j) const {
    Word w = sys_->point_coords(p, j - L_, j + R_);
    return code_[sys_->word_index(w)];
  }

  friend bool equal(const FullGroupElement& a, const FullGroupElement& b) {
    require(a.sys_->same_system(*b.sys_), errc::bad_config, "elements over different systems");
    int L = std::max(a.L_, b.L_), R = std::max(a.R_, b.R_);
    const auto& ws = a.sys_->words(L + R + 1);
    for (const Word& w : ws) {
      if (a.code_[a.sys_->word_index(w.sub(L - a.L_, a.window_len()))] !=
          b.code_[b.sys_->word_index(w.sub(L - b.L_, b.window_len()))])
        return false;
    }
    return true;
  }

  /// First language word (and offset) on which the two elements differ.
  friend std::optional<std::pair<Word, long>> disagreement_witness(
      const FullGroupElement& a, const FullGroupElement& b) {
    int L = std::max(a.L_, b.L_), R = std::max(a.R_, b.R_);
    for (const Word& w : a.sys_->words(L + R + 1)) {
      if (a.code_[a.sys_->word_index(w.sub(L - a.L_, a.window_len()))] !=
          b.code_[b.sys_->word_index(w.sub(L - b.L_, b.window_len()))])
        return std::make_pair(w, (long)-L);
    }
    return std::nullopt;
  }

  /// Function composition: (a*b)(x) = a(b(x)). Cocycle n(x) = n_a(b x) + n_b(x).
  friend FullGroupElement compose(const FullGroupElement& a, const FullGroupElement& b) {
    require(a.sys_->same_system(*b.sys_), errc::bad_config, "elements over different systems");
    int Nb = b.max_abs_;
    int L = std::max(b.L_, a.L_ + Nb), R = std::max(b.R_, a.R_ + Nb);
    const auto& ws = a.sys_->words(L + R + 1);
    std::vector<int> code(ws.size());
    for (size_t i = 0; i < ws.size(); ++i) {
      const Word& w = ws[i];
      int nb = b.code_[b.sys_->word_index(w.sub(L - b.L_, b.window_len()))];
      // (b x)|[-La, Ra] = x|[-La + nb, Ra + nb]
      int na = a.code_[a.sys_->word_index(w.sub(L - a.L_ + nb, a.window_len()))];
      code[i] = na + nb;
    }
    FullGroupElement out(a.sys_, L, R, std::move(code), false);
    out.canonicalize();
    return out;
  }

  friend FullGroupElement inverse(const FullGroupElement& a) {
    int N = a.max_abs_;
    if (N == 0) return a;  // identity
    int L = a.L_ + N, R = a.R_ + N;
    const auto& ws = a.sys_->words(L + R + 1);
    std::vector<int> code(ws.size());
    for (size_t i = 0; i < ws.size(); ++i) {
      int k = a.preimage_shift(ws[i], L);
      code[i] = -k;
    }
    FullGroupElement out(a.sys_, L, R, std::move(code), false);
    out.canonicalize();
    return out;
  }

  friend FullGroupElement power(const FullGroupElement& a, long k) {
    if (k == 0) return identity(a.sys_);
    FullGroupElement base = k > 0 ? a : inverse(a);
    long e = std::labs(k);
    FullGroupElement acc = base;
    for (long i = 1; i < e; ++i) acc = compose(acc, base);
    return acc;
  }

  friend FullGroupElement conjugate(const FullGroupElement& g, const FullGroupElement& h) {
    // g h g^{-1}
    return compose(compose(g, h), inverse(g));
  }

  friend FullGroupElement commutator(const FullGroupElement& a, const FullGroupElement& b) {
    // [a, b] = a^{-1} b^{-1} a b
    return compose(compose(inverse(a), inverse(b)), compose(a, b));
  }

  /// Least k in [1, cap] with a^k = id, or nullopt if none (order may exceed
  /// the cap or be infinite).
  friend std::optional<long> order(const FullGroupElement& a, long cap) {
    FullGroupElement p = a;
    for (long k = 1; k <= cap; ++k) {
      if (p.is_identity()) return k;
      p = compose(p, a);
    }
    return std::nullopt;
  }

  /// Cocycle-zero locus {x : n(x) = 0}; for aperiodic systems this is exactly
  /// the fixed-point set.
  friend ClopenSet fixed_set(const FullGroupElement& a) {
    const auto& ws = a.sys_->words(a.window_len());
    std::set<Word> sel;
    for (size_t i = 0; i < ws.size(); ++i)
      if (a.code_[i] == 0) sel.insert(ws[i]);
    if (sel.empty()) return ClopenSet::empty_set(a.sys_);
    return ClopenSet::from_words(a.sys_, -a.L_, a.window_len(), std::move(sel)).reduced();
  }

  /// Image set a(A).
  friend ClopenSet image(const FullGroupElement& a, const ClopenSet& A) {
    if (A.is_empty()) return A;
    long o = std::min((long)-a.L_, A.offset());
    long e = std::max((long)a.R_, A.end());
    ClopenSet r = A.refined(o, e);
    int N = a.max_abs_;
    // target window [o - N, e + N]; each piece [w at o-k] fills in
    long to = o - N, te = e + N;
    int tlen = (int)(te - to + 1);
    std::set<Word> out;
    const auto& tws = a.sys_->words(tlen);
    for (const Word& w : r.words()) {
      int k = a.code_[a.sys_->word_index(w.sub((size_t)(-a.L_ - o), a.window_len()))];
      // piece [w at o - k]: collect language words on [to, te] matching it
      size_t pos = (size_t)(o - k - to);
      for (const Word& v : tws)
        if (v.sub(pos, r.len()) == w) out.insert(v);
    }
    if (out.empty()) return ClopenSet::empty_set(a.sys_);
    return ClopenSet::from_words(a.sys_, to, tlen, std::move(out)).reduced();
  }

  friend ClopenSet preimage(const FullGroupElement& a, const ClopenSet& A) {
    return image(inverse(a), A);
  }

  /// Support {x : a(x) != x} (complement of the cocycle-zero locus).
  friend ClopenSet support(const FullGroupElement& a) {
    return clopen_complement(fixed_set(a));
  }

  std::string str() const {
    std::string s = "window [" + std::to_string(-L_) + "," + std::to_string(R_) + "]";
    const auto& ws = sys_->words(window_len());
    s += " {";
    bool first = true;
    for (size_t i = 0; i < ws.size(); ++i) {
      if (code_[i] == 0) continue;
      if (!first) s += ", ";
      s += ws[i].str(sys_->alphabet()) + ":" + std::to_string(code_[i]);
      first = false;
    }
    return s + "}";
  }

 private:
  FullGroupElement(SystemPtr sys, int L, int R, std::vector<int> code, bool validate)
      : sys_(std::move(sys)), L_(L), R_(R), code_(std::move(code)) {
    require(code_.size() == sys_->words(window_len()).size(), errc::not_closed,
            "code size mismatch");
    refresh_max();
    if (validate) {
      validate_bijective();
      canonicalize();
    }
  }

  void refresh_max() {
    max_abs_ = 0;
    for (int c : code_) max_abs_ = std::max(max_abs_, std::abs(c));
  }

  // the unique k with n(x|[-L+k, R+k]) = k for any x whose enlarged window is v
  int preimage_shift(const Word& v, int enlargedL) const {
    int N = max_abs_;
    int found = 0, count = 0;
    for (int k = -N; k <= N; ++k) {
      // candidate preimage x = phi^{-k}(y) has window y|[-L-k, R-k]
      Word c = v.sub((size_t)(enlargedL - L_ - k), window_len());
      if (code_[sys_->word_index(c)] == k) {
        found = k;
        ++count;
      }
    }
    require(count == 1, errc::not_bijective, "inverse shift not unique");
    return found;
  }

  void validate_bijective() const {
    int N = max_abs_;
    if (N == 0) return;
    int L = L_ + N, R = R_ + N;
    for (const Word& v : sys_->words(L + R + 1)) {
      int count = 0;
      for (int k = -N; k <= N; ++k) {
        Word c = v.sub((size_t)(L - L_ - k), window_len());
        if (code_[sys_->word_index(c)] == k) ++count;
      }
      require(count == 1, errc::not_bijective,
              count == 0 ? "window word with no preimage" : "window word with two preimages");
    }
  }

  void canonicalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      int lj = max_trim(true);
      if (lj > 0) {
        apply_trim(true, lj);
        changed = true;
      }
      int rj = max_trim(false);
      if (rj > 0) {
        apply_trim(false, rj);
        changed = true;
      }
    }
    refresh_max();
  }

  // is the code a function of the window with j letters cut from one side?
  bool trim_valid(bool left, int j) const {
    int sub_len = window_len() - j;
    const auto& ws = sys_->words(window_len());
    const auto& subw = sys_->words(sub_len);
    std::vector<int> val(subw.size());
    std::vector<bool> seen(subw.size(), false);
    for (size_t i = 0; i < ws.size(); ++i) {
      Word s = left ? ws[i].suffix(sub_len) : ws[i].prefix(sub_len);
      long k = sys_->word_index(s);
      if (!seen[k]) {
        seen[k] = true;
        val[k] = code_[i];
      } else if (val[k] != code_[i]) {
        return false;
      }
    }
    return true;
  }

  int max_trim(bool left) const {
    int lo = 0, hi = left ? L_ : R_;  // trim_valid is monotone downward in j
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (trim_valid(left, mid))
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  }

  void apply_trim(bool left, int j) {
    int sub_len = window_len() - j;
    const auto& ws = sys_->words(window_len());
    const auto& subw = sys_->words(sub_len);
    std::vector<int> val(subw.size());
    for (size_t i = 0; i < ws.size(); ++i) {
      Word s = left ? ws[i].suffix(sub_len) : ws[i].prefix(sub_len);
      val[sys_->word_index(s)] = code_[i];
    }
    code_ = std::move(val);
    if (left)
      L_ -= j;
    else
      R_ -= j;
  }

  SystemPtr sys_;
  int L_ = 0, R_ = 0;
  std::vector<int> code_;
  int max_abs_ = 0;
};

}  // namespace tfg
