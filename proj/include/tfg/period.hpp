#pragma once

#include <numeric>
#include <vector>

#include "tfg/element.hpp"

namespace tfg {

/// How the transversal representative is picked inside each cycle of window
/// words. Both choices are valid; the signature does not depend on it.
enum class TransversalPolicy { LexLeast, LexGreatest };

/// Partition of the space by least period under a finite-order element:
/// for each n, a clopen V_n with V_n, g(V_n), ..., g^{n-1}(V_n) disjoint and
/// covering { x : least period of x is n }.
struct PeriodDecomposition {
  struct Part {
    long period;
    ClopenSet transversal;  // V_n
    ClopenSet level;        // f^{-1}(n)
  };
  long order = 1;  // lcm of the occurring periods
  std::vector<Part> parts;
};

namespace detail {

// rotation-minimal (or -maximal) selection of one cylinder per word orbit
inline ClopenSet period_transversal(const FullGroupElement& g,
                                    const std::vector<FullGroupElement>& pw, long d,
                                    const ClopenSet& level, TransversalPolicy policy) {
  const SystemPtr& sys = g.system();
  int M = 1;
  for (long j = 1; j < d; ++j)
    M = std::max(M, std::max(pw[j].left_radius(), pw[j].right_radius()));
  M = std::max(M, (int)std::max(-level.offset(), level.end()));
  int K = 0;
  for (long j = 1; j < d; ++j) K = std::max(K, pw[j].max_shift());

  while (true) {
    require(2 * (M + K) + 1 <= sys->caps().language_max_len, errc::resource_cap,
            "transversal span cap exceeded");
    int Mo = M + K;
    ClopenSet lv = level.refined(-M, M);
    const auto& outer = sys->words(2 * Mo + 1);
    std::set<Word> picked;
    bool tie = false;
    for (const Word& W : outer) {
      Word center = W.sub((size_t)(Mo - M), 2 * M + 1);
      if (!lv.words().count(center)) continue;
      // inner windows of the orbit points g^j(x)
      std::vector<Word> label((size_t)d);
      for (long j = 0; j < d; ++j) {
        int cum = j == 0 ? 0
                         : pw[j].code()[sys->word_index(W.sub(
                               (size_t)(Mo - pw[j].left_radius()), pw[j].window_len()))];
        label[(size_t)j] = W.sub((size_t)(Mo - M + cum), 2 * M + 1);
      }
      bool best = true;
      for (long t = 1; t < d && best; ++t) {
        int cmp = 0;
        for (long j = 0; j < d && cmp == 0; ++j) {
          const Word& a = label[(size_t)j];
          const Word& b = label[(size_t)((j + t) % d)];
          cmp = a < b ? -1 : (b < a ? 1 : 0);
        }
        if (cmp == 0) {
          tie = true;
          best = false;
        } else if (policy == TransversalPolicy::LexLeast ? cmp > 0 : cmp < 0) {
          best = false;
        }
      }
      if (tie) break;
      if (best) picked.insert(W);
    }
    if (tie) {
      // two distinct orbit points share every inner window: refine further
      ++M;
      continue;
    }
    ClopenSet V = picked.empty()
                      ? ClopenSet::empty_set(sys)
                      : ClopenSet::from_words(sys, -Mo, 2 * Mo + 1, std::move(picked))
                            .reduced();
    // exact verification of the transversal contract
    ClopenSet acc = ClopenSet::empty_set(sys);
    ClopenSet cur = V;
    for (long j = 0; j < d; ++j) {
      require(clopen_disjoint(acc, cur), errc::not_bijective,
              "transversal orbit not disjoint");
      acc = clopen_union(acc, cur);
      cur = image(g, cur);
    }
    require(clopen_equal(acc, level), errc::not_bijective,
            "transversal orbit does not cover its level set");
    require(clopen_equal(cur, V), errc::not_bijective, "transversal does not close up");
    return V;
  }
}

}  // namespace detail

/// Least-period partition with transversals. Terminates once the period
/// levels cover the space, so the bound caps the largest least period (the
/// group order, their lcm, may be far larger).
inline PeriodDecomposition period_decomposition(
    const FullGroupElement& g, long period_cap = 0,
    TransversalPolicy policy = TransversalPolicy::LexLeast) {
  const SystemPtr& sys = g.system();
  if (period_cap <= 0) period_cap = sys->caps().order_cap;

  PeriodDecomposition out;
  std::vector<FullGroupElement> pw;  // pw[j] = g^j
  pw.push_back(FullGroupElement::identity(sys));
  ClopenSet covered = ClopenSet::empty_set(sys);
  for (long n = 1; !covered.is_full(); ++n) {
    require(n <= period_cap, errc::infinite_order,
            "least periods exceed cap " + std::to_string(period_cap));
    pw.push_back(compose(pw.back(), g));
    ClopenSet level = clopen_minus(fixed_set(pw[n]), covered);
    if (level.is_empty()) continue;
    ClopenSet V = n == 1 ? level : detail::period_transversal(g, pw, n, level, policy);
    out.parts.push_back({n, V, level});
    covered = clopen_union(covered, level);
    out.order = std::lcm(out.order, n);
  }
  return out;
}

/// Union of the even-period transversals; its mod-2 class is the signature of
/// a finite-order element.
inline ClopenSet even_period_set(const PeriodDecomposition& pd, const SystemPtr& sys) {
  ClopenSet acc = ClopenSet::empty_set(sys);
  for (const auto& part : pd.parts)
    if (part.period % 2 == 0) acc = clopen_union(acc, part.transversal);
  return acc;
}

}  // namespace tfg
