#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tfg/gf2.hpp"
#include "tfg/measure.hpp"
#include "tfg/period.hpp"

namespace tfg {

/// Coordinates of clopen-set classes recovered from exact trace values.
/// Two presentation classes are supported:
///  - dyadic traces (the shipped substitution system): one coordinate, the
///    exact dyadic measure; the mod-2 quotient is trivial.
///  - quadratic traces (sturmian): integer coordinates (a, b) with
///    mu = a + b*alpha; the mod-2 quotient is (Z/2)^2.
class K0Presentation {
 public:
  enum class TraceClass { Dyadic, Quadratic };

  explicit K0Presentation(SystemPtr sys) : sys_(std::move(sys)), measure_(measure_for(sys_)) {
    switch (sys_->kind()) {
      case SystemKind::Sturmian:
        cls_ = TraceClass::Quadratic;
        break;
      case SystemKind::Substitution:
        cls_ = TraceClass::Dyadic;
        break;
      default:
        fail(errc::unsupported_system, "no trace presentation for this system kind");
    }
  }

  TraceClass trace_class() const { return cls_; }
  const SystemPtr& system() const { return sys_; }
  size_t mod2_rank() const { return cls_ == TraceClass::Quadratic ? 2 : 0; }

  /// Exact coordinates with respect to the declared basis.
  std::vector<Rational> class_of(const ClopenSet& A) const {
    QuadReal mu = (*measure_)(A);
    if (cls_ == TraceClass::Dyadic) {
      require(mu.is_rational(), errc::unsupported_system, "trace outside the dyadics");
      Rational v = mu.rat();
      mpz_class den = v.get_den();
      while (den % 2 == 0) den /= 2;
      require(den == 1, errc::unsupported_system, "trace denominator is not a power of two");
      return {v};
    }
    // mu = a + b*alpha with integer a, b
    const QuadReal& alpha = sys_->sturmian_alpha();
    require(alpha.irr() != 0, errc::unsupported_system, "degenerate rotation number");
    Rational b = mu.irr() / alpha.irr();
    Rational a = mu.rat() - b * alpha.rat();
    require(is_integer(a) && is_integer(b), errc::unsupported_system,
            "trace outside Z + Z*alpha");
    return {a, b};
  }

  Mod2Class class_mod2(const ClopenSet& A) const {
    auto co = class_of(A);
    if (cls_ == TraceClass::Dyadic) return Mod2Class();  // 2-divisible group
    auto bit = [](const Rational& q) {
      mpz_class r = q.get_num() % 2;
      return (uint8_t)(r != 0);
    };
    return Mod2Class({bit(co[0]), bit(co[1])});
  }

  Mod2Class zero_class() const { return Mod2Class::zero(mod2_rank()); }

  bool is_2divisible(const ClopenSet& A) const { return class_mod2(A).is_zero(); }

 private:
  SystemPtr sys_;
  std::shared_ptr<const InvariantMeasure> measure_;
  TraceClass cls_;
};

/// Signature of a finite-order element: the mod-2 class of the union of its
/// even-period transversals.
inline Mod2Class compute_sgn_finite(const FullGroupElement& g, const K0Presentation& pres,
                                    TransversalPolicy policy = TransversalPolicy::LexLeast,
                                    long order_cap = 0) {
  PeriodDecomposition pd = period_decomposition(g, order_cap, policy);
  ClopenSet G = even_period_set(pd, g.system());
  if (G.is_empty()) return pres.zero_class();
  return pres.class_mod2(G);
}

/// Indices n >= 1 where the forward orbit of p crosses to the backward side
/// under g, and where the backward orbit crosses forward. Both are empty
/// exactly when g preserves the one-sided orbits of p.
struct CrossingSets {
  std::vector<long> forward_to_backward;  // A
  std::vector<long> backward_to_forward;  // B
};

inline CrossingSets crossing_sets(const FullGroupElement& g, const PointHandle& p) {
  CrossingSets cs;
  long N = g.max_shift();
  for (long n = 1; n <= N; ++n) {
    if (n + g.cocycle_at(p, n) <= 0) cs.forward_to_backward.push_back(n);
    if (g.cocycle_at(p, 1 - n) >= n) cs.backward_to_forward.push_back(n);
  }
  return cs;
}

inline bool preserves_orbit_sides(const FullGroupElement& g, const PointHandle& p) {
  CrossingSets cs = crossing_sets(g, p);
  return cs.forward_to_backward.empty() && cs.backward_to_forward.empty();
}

/// Index-zero elements factor as a product of two parts, each preserving the
/// one-sided orbits of one distinguished point.
struct Decomposition {
  FullGroupElement part_x;  // preserves the orbit sides of x
  FullGroupElement part_y;  // preserves the orbit sides of y
  std::vector<long> crossings_down;  // A
  std::vector<long> crossings_up;    // B
  ClopenSet neighborhood;            // the cylinder U around x
};

struct DecomposeOptions {
  bool reverse_pi = false;  // use the order-reversing bijection A -> B
  int span_cap = 0;         // neighborhood refinement cap (0: system cap)
  long order_cap = 0;       // used only by callers verifying finite order
};

inline Decomposition decompose(const FullGroupElement& g, const PointHandle& x,
                               const PointHandle& y, DecomposeOptions opts = {}) {
  const SystemPtr& sys = g.system();
  require(measure_for(sys)->index(g) == 0, errc::nonzero_index,
          "decomposition needs an index-zero element");
  CrossingSets cs = crossing_sets(g, x);
  const auto& A = cs.forward_to_backward;
  const auto& B = cs.backward_to_forward;
  require(A.size() == B.size(), errc::nonzero_index, "crossing sets of unequal size");

  Decomposition out{FullGroupElement::identity(sys), FullGroupElement::identity(sys),
                    A, B, ClopenSet::empty_set(sys)};
  if (A.empty()) {
    out.part_x = g;
    return out;
  }

  long l = std::max(A.back(), B.back());
  int cap = opts.span_cap > 0 ? opts.span_cap : sys->caps().span_cap;

  for (int k = 1;; ++k) {
    require(k <= cap, errc::resource_cap, "neighborhood search exhausted");
    Word w = sys->point_coords(x, -k, k);
    ClopenSet U = cylinder(sys, w, -k);
    // the powers phi^{-l}(U) ... phi^{l}(U) must be pairwise disjoint
    bool ok = true;
    for (long j = 1; j <= 2 * l && ok; ++j)
      if (!clopen_disjoint(U, clopen_shift(U, j))) ok = false;
    if (!ok) continue;
    // V must avoid y, phi(y), ..., phi^{2l-1}(y)
    std::vector<std::pair<ClopenSet, int>> pieces;
    std::vector<long> sortedA = A, sortedB = B;
    std::vector<long> piB = sortedB;
    if (opts.reverse_pi) std::reverse(piB.begin(), piB.end());
    for (size_t i = 0; i < sortedA.size(); ++i) {
      long n = sortedA[i], m = piB[i];
      pieces.push_back({clopen_shift(U, n), (int)(1 - m - n)});
    }
    std::vector<long> piAinv = sortedA;
    if (opts.reverse_pi) std::reverse(piAinv.begin(), piAinv.end());
    for (size_t i = 0; i < sortedB.size(); ++i) {
      // pi^{-1}(m) pairs with m the same way pieces were built above
      long m = piB[i], n = sortedA[i];
      pieces.push_back({clopen_shift(U, 1 - m), (int)(m - 1 + n)});
    }
    ClopenSet V = ClopenSet::empty_set(sys);
    for (auto& [P, s] : pieces) V = clopen_union(V, P);
    for (long j = 0; j <= 2 * l - 1 && ok; ++j)
      if (V.contains_point(y, j)) ok = false;
    if (!ok) continue;

    FullGroupElement g2 = FullGroupElement::from_pieces(sys, pieces);
    FullGroupElement g1 = compose(g, inverse(g2));
    // contract checks: exact factorization and one-sided orbit preservation
    require(equal(compose(g1, g2), g), errc::not_bijective, "factorization failed");
    require(preserves_orbit_sides(g1, x), errc::not_bijective,
            "first factor moves points across the cut at x");
    require(preserves_orbit_sides(g2, y), errc::not_bijective,
            "second factor moves points across the cut at y");
    out.part_x = g1;
    out.part_y = g2;
    out.neighborhood = U;
    return out;
  }
}

struct SgnOptions {
  bool swap_points = false;
  bool reverse_pi = false;
  TransversalPolicy policy = TransversalPolicy::LexLeast;
  long order_cap = 0;
};

/// Signature of an index-zero element via the two distinguished points.
inline Mod2Class sgn(const FullGroupElement& g, const K0Presentation& pres,
                     SgnOptions opts = {}) {
  const SystemPtr& sys = g.system();
  const auto& pts = sys->distinguished_points();
  require(pts.size() >= 2, errc::bad_config, "system needs two distinguished points");
  const PointHandle& x = pts[opts.swap_points ? 1 : 0];
  const PointHandle& y = pts[opts.swap_points ? 0 : 1];
  DecomposeOptions dopts;
  dopts.reverse_pi = opts.reverse_pi;
  dopts.order_cap = opts.order_cap;
  Decomposition dec = decompose(g, x, y, dopts);
  Mod2Class s1 = compute_sgn_finite(dec.part_x, pres, opts.policy, opts.order_cap);
  Mod2Class s2 = compute_sgn_finite(dec.part_y, pres, opts.policy, opts.order_cap);
  return s1 + s2;
}

/// First return map of U, extended by the identity off U, as a block code.
inline FullGroupElement first_return(const SystemPtr& sys, const ClopenSet& U_in) {
  require(!U_in.is_empty(), errc::bad_config, "first return needs a non-empty set");
  require(sys->uniquely_ergodic(), errc::unsupported_system,
          "first return supported on minimal system kinds");
  ClopenSet U = U_in.reduced();
  long a = U.offset(), b = U.end();
  int cap = sys->caps().span_cap;
  // scan forward: x in U returns at r iff x|[a+r, b+r] spells a word of U
  std::vector<std::pair<ClopenSet, int>> pieces;
  std::vector<Word> active(U.words().begin(), U.words().end());
  int len = U.len();
  for (int r = 1; !active.empty(); ++r) {
    require(r <= cap, errc::return_time_cap, "return time cap exceeded");
    // extend all active words one letter to the right
    std::vector<Word> next;
    std::set<Word> returned;
    const auto& ws = sys->words(len + r);
    for (const Word& w : active)
      for (const Word& v : ws) {
        if (v.prefix(len + r - 1) != w) continue;
        if (U.words().count(v.suffix(len))) {
          returned.insert(v);
        } else {
          next.push_back(v);
        }
      }
    if (!returned.empty())
      pieces.push_back(
          {ClopenSet::from_words(sys, a, len + r, std::move(returned)), r});
    active = std::move(next);
  }
  return FullGroupElement::from_pieces(sys, pieces);
}

}  // namespace tfg
