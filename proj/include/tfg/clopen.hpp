#pragma once

#include <map>
#include <set>
#include <vector>

#include "tfg/subshift.hpp"

namespace tfg {

/// Finite union of cylinders, kept in canonical form: every cylinder is
/// refined to one common window [offset, offset+len-1] and the words are a
/// sorted set. The empty set has len == 0.
class ClopenSet {
 public:
  ClopenSet() = default;
  explicit ClopenSet(SystemPtr sys) : sys_(std::move(sys)) {}

  static ClopenSet empty_set(SystemPtr sys) { return ClopenSet(std::move(sys)); }

  static ClopenSet full_set(SystemPtr sys) {
    ClopenSet a(sys);
    a.offset_ = 0;
    a.len_ = 1;
    const auto& ws = sys->words(1);
    a.words_.insert(ws.begin(), ws.end());
    return a;
  }

  static ClopenSet cylinder(SystemPtr sys, const Word& w, long offset) {
    require(!w.empty(), errc::bad_config, "cylinder word must be non-empty");
    ClopenSet a(sys);
    if (!sys->contains(w)) return a;  // not in the language: empty set
    a.offset_ = offset;
    a.len_ = (int)w.size();
    a.words_.insert(w);
    return a;
  }

  static ClopenSet from_words(SystemPtr sys, long offset, int len, std::set<Word> words) {
    ClopenSet a(sys);
    if (words.empty()) return a;
    a.offset_ = offset;
    a.len_ = len;
    a.words_ = std::move(words);
    for (const Word& w : a.words_) {
      require((int)w.size() == len, errc::bad_config, "mixed word lengths in clopen set");
      require(sys->contains(w), errc::not_closed, "clopen word outside the language");
    }
    return a;
  }

  const SystemPtr& system() const { return sys_; }
  bool is_empty() const { return words_.empty(); }
  long offset() const { return offset_; }
  int len() const { return len_; }
  long end() const { return offset_ + len_ - 1; }  // last constrained coordinate
  const std::set<Word>& words() const { return words_; }

  bool is_full() const {
    if (is_empty()) return false;
    return words_.size() == sys_->words(len_).size();
  }

  /// Same set, expressed on the (larger) window [new_offset, new_end].
  ClopenSet refined(long new_offset, long new_end) const {
    if (is_empty()) return *this;
    require(new_offset <= offset_ && new_end >= end(), errc::bad_config,
            "refinement must enlarge the window");
    int new_len = (int)(new_end - new_offset + 1);
    if (new_len == len_ && new_offset == offset_) return *this;
    ClopenSet out(sys_);
    out.offset_ = new_offset;
    out.len_ = new_len;
    size_t pos = (size_t)(offset_ - new_offset);
    for (const Word& v : sys_->words(new_len))
      if (words_.count(v.sub(pos, len_))) out.words_.insert(v);
    return out;
  }

  /// Drop constrained coordinates that carry no information. Deterministic;
  /// each side is trimmed by binary search, so wide windows collapse fast.
  ClopenSet reduced() const {
    if (is_empty()) return *this;
    ClopenSet cur = *this;
    bool changed = true;
    while (changed && cur.len_ > 1) {
      changed = false;
      int lj = cur.max_trim(true);
      if (lj > 0) {
        cur = cur.trimmed(true, lj);
        changed = true;
      }
      if (cur.len_ > 1) {
        int rj = cur.max_trim(false);
        if (rj > 0) {
          cur = cur.trimmed(false, rj);
          changed = true;
        }
      }
    }
    return cur;
  }

  friend ClopenSet clopen_union(const ClopenSet& a, const ClopenSet& b) {
    check_same(a, b);
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    auto [ra, rb] = common(a, b);
    ClopenSet out(a.sys_);
    out.offset_ = ra.offset_;
    out.len_ = ra.len_;
    out.words_ = ra.words_;
    out.words_.insert(rb.words_.begin(), rb.words_.end());
    return out.reduced();
  }

  friend ClopenSet clopen_intersect(const ClopenSet& a, const ClopenSet& b) {
    check_same(a, b);
    if (a.is_empty() || b.is_empty()) return ClopenSet::empty_set(a.sys_ ? a.sys_ : b.sys_);
    auto [ra, rb] = common(a, b);
    ClopenSet out(a.sys_);
    out.offset_ = ra.offset_;
    out.len_ = ra.len_;
    for (const Word& w : ra.words_)
      if (rb.words_.count(w)) out.words_.insert(w);
    if (out.words_.empty()) return ClopenSet::empty_set(a.sys_);
    return out.reduced();
  }

  friend ClopenSet clopen_complement(const ClopenSet& a) {
    require(a.sys_ != nullptr, errc::bad_config, "complement of detached set");
    if (a.is_empty()) return full_set(a.sys_);
    ClopenSet out(a.sys_);
    out.offset_ = a.offset_;
    out.len_ = a.len_;
    for (const Word& w : a.sys_->words(a.len_))
      if (!a.words_.count(w)) out.words_.insert(w);
    if (out.words_.empty()) return ClopenSet::empty_set(a.sys_);
    return out.reduced();
  }

  friend ClopenSet clopen_minus(const ClopenSet& a, const ClopenSet& b) {
    return clopen_intersect(a, clopen_complement(b));
  }

  /// phi^k(A): the window of every cylinder moves k steps left.
  friend ClopenSet clopen_shift(const ClopenSet& a, long k) {
    if (a.is_empty()) return a;
    ClopenSet out = a;
    out.offset_ -= k;
    return out;
  }

  friend bool clopen_equal(const ClopenSet& a, const ClopenSet& b) {
    check_same(a, b);
    if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
    auto [ra, rb] = common(a, b);
    return ra.words_ == rb.words_;
  }

  friend bool clopen_subset(const ClopenSet& a, const ClopenSet& b) {
    check_same(a, b);
    if (a.is_empty()) return true;
    if (b.is_empty()) return false;
    auto [ra, rb] = common(a, b);
    for (const Word& w : ra.words_)
      if (!rb.words_.count(w)) return false;
    return true;
  }

  friend bool clopen_disjoint(const ClopenSet& a, const ClopenSet& b) {
    return clopen_intersect(a, b).is_empty();
  }

  /// Does phi^j(p) belong to this set?
  bool contains_point(const PointHandle& p, long j = 0) const {
    if (is_empty()) return false;
    Word w = sys_->point_coords(p, offset_ + j, end() + j);
    return words_.count(w) != 0;
  }

  std::string str() const {
    if (is_empty()) return "{}";
    std::string s = "[offset " + std::to_string(offset_) + "] {";
    bool first = true;
    for (const Word& w : words_) {
      if (!first) s += ", ";
      s += w.str(sys_->alphabet());
      first = false;
    }
    return s + "}";
  }

 private:
  // membership determined by the window with j letters cut from one side?
  bool trim_valid(bool left, int j) const {
    int sub_len = len_ - j;
    const auto& subw = sys_->words(sub_len);
    // 0 unseen, 1 all-in, 2 all-out, 3 mixed
    std::vector<uint8_t> state(subw.size(), 0);
    for (const Word& w : sys_->words(len_)) {
      Word s = left ? w.suffix(sub_len) : w.prefix(sub_len);
      long idx = sys_->word_index(s);
      uint8_t in = words_.count(w) ? 1 : 2;
      if (state[idx] == 0)
        state[idx] = in;
      else if (state[idx] != in)
        return false;
    }
    return true;
  }

  int max_trim(bool left) const {
    int lo = 0, hi = len_ - 1;  // trim_valid is monotone downward in j
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (trim_valid(left, mid))
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  }

  ClopenSet trimmed(bool left, int j) const {
    ClopenSet nxt(sys_);
    nxt.offset_ = left ? offset_ + j : offset_;
    nxt.len_ = len_ - j;
    for (const Word& w : words_)
      nxt.words_.insert(left ? w.suffix(len_ - j) : w.prefix(len_ - j));
    return nxt;
  }

  static void check_same(const ClopenSet& a, const ClopenSet& b) {
    if (a.sys_ && b.sys_)
      require(a.sys_->same_system(*b.sys_), errc::bad_config,
              "clopen sets over different systems");
  }

  static std::pair<ClopenSet, ClopenSet> common(const ClopenSet& a, const ClopenSet& b) {
    long o = std::min(a.offset_, b.offset_);
    long e = std::max(a.end(), b.end());
    return {a.refined(o, e), b.refined(o, e)};
  }

  SystemPtr sys_;
  long offset_ = 0;
  int len_ = 0;
  std::set<Word> words_;
};

/// Cylinder in dot notation: the word occupies [offset, offset+|w|-1].
inline ClopenSet cylinder(SystemPtr sys, const Word& w, long offset) {
  return ClopenSet::cylinder(std::move(sys), w, offset);
}

}  // namespace tfg
