#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tfg/element.hpp"

namespace tfg {

namespace detail {

// characteristic polynomial of an integer matrix, monic, via Faddeev-LeVerrier
inline std::vector<Rational> charpoly(const std::vector<std::vector<long>>& m) {
  size_t k = m.size();
  std::vector<std::vector<Rational>> M(k, std::vector<Rational>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) M[i][j] = m[i][j];
  std::vector<std::vector<Rational>> Mk = M;
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  for (size_t s = 1; s <= k; ++s) {
    if (s > 1) {
      // Mk = M * (Mk + c_{k-s+1} I)
      std::vector<std::vector<Rational>> t = Mk;
      for (size_t i = 0; i < k; ++i) t[i][i] += c[k - s + 1];
      std::vector<std::vector<Rational>> nm(k, std::vector<Rational>(k, Rational(0)));
      for (size_t i = 0; i < k; ++i)
        for (size_t l = 0; l < k; ++l)
          if (M[i][l] != 0)
            for (size_t j = 0; j < k; ++j) nm[i][j] += M[i][l] * t[l][j];
      Mk = std::move(nm);
    }
    Rational tr(0);
    for (size_t i = 0; i < k; ++i) tr += Mk[i][i];
    c[k - s] = -tr / Rational((long)s);
  }
  return c;  // c[0] + c[1] x + ... + c[k] x^k
}

inline QuadReal eval_poly(const std::vector<Rational>& c, const QuadReal& x) {
  QuadReal acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + QuadReal(c[i]);
  return acc;
}

// largest real root of a monic rational polynomial, restricted to roots that
// are rational or quadratic irrationals; everything else is rejected
inline QuadReal perron_root(std::vector<Rational> c) {
  std::vector<QuadReal> roots;
  // strip rational roots by trial over divisors of the constant term
  while (c.size() > 3) {
    // scale to integer coefficients
    mpz_class den(1);
    for (const Rational& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const Rational& q : c) ic.push_back(mpz_class(q * Rational(den)));
    mpz_class a0 = ic.front(), an = ic.back();
    if (a0 == 0) {
      roots.push_back(QuadReal(0));
      c.erase(c.begin());
      continue;
    }
    mpz_class aa0 = abs(a0), aan = abs(an);
    require(aa0.fits_slong_p() && aan.fits_slong_p(), errc::resource_cap,
            "charpoly coefficients too large");
    bool found = false;
    for (long p = 1; p <= aa0.get_si() && !found; ++p) {
      if (aa0 % p != 0) continue;
      for (long q = 1; q <= aan.get_si() && !found; ++q) {
        if (aan % q != 0) continue;
        for (int sg : {1, -1}) {
          Rational cand(p * sg, q);
          cand.canonicalize();
          if (eval_poly(c, QuadReal(cand)).is_zero()) {
            roots.push_back(QuadReal(cand));
            // synthetic division by (x - cand)
            std::vector<Rational> nc(c.size() - 1);
            Rational carry = c.back();
            for (size_t i = c.size() - 1; i-- > 0;) {
              nc[i] = carry;
              if (i > 0) carry = c[i] + carry * cand;
            }
            c = std::move(nc);
            found = true;
            break;
          }
        }
      }
    }
    if (!found) fail(errc::irrational_frequency, "expansion factor outside supported fields");
  }
  if (c.size() == 3) {
    // x^2 + bx + c0 after dividing by the lead
    Rational b = c[1] / c[2], c0 = c[0] / c[2];
    Rational disc = b * b - 4 * c0;
    require(disc >= 0, errc::irrational_frequency, "complex expansion factor");
    // disc = s^2 * d with d square-free
    mpz_class num = disc.get_num(), den = disc.get_den();
    mpz_class nd = num * den;  // sqrt(num/den) = sqrt(num*den)/den
    mpz_class s(1);
    long d = 1;
    for (long p = 2; mpz_class(p) * p <= nd; ++p) {
      while (nd % (mpz_class(p) * p) == 0) {
        nd /= mpz_class(p) * p;
        s *= p;
      }
    }
    require(nd.fits_slong_p(), errc::resource_cap, "discriminant too large");
    d = nd.get_si();
    Rational sq(s, den);
    sq.canonicalize();
    roots.push_back(QuadReal(-b / 2, sq / 2, d == 1 ? 0 : d));
    roots.push_back(QuadReal(-b / 2, -sq / 2, d == 1 ? 0 : d));
    if (d == 1) {
      roots.pop_back();
      roots.back() = QuadReal(-b / 2 + sq / 2);
      roots.push_back(QuadReal(-b / 2 - sq / 2));
    }
  } else if (c.size() == 2) {
    roots.push_back(QuadReal(-c[0] / c[1]));
  }
  require(!roots.empty(), errc::irrational_frequency, "no usable expansion factor");
  QuadReal best = roots[0];
  for (const QuadReal& r : roots)
    if (best < r) best = r;
  require(best.sign() > 0, errc::irrational_frequency, "expansion factor not positive");
  return best;
}

}  // namespace detail

/// Exact unique invariant measure of a substitution or Sturmian subshift,
/// evaluated on cylinders, plus the index map built on top of it.
class InvariantMeasure {
 public:
  explicit InvariantMeasure(SystemPtr sys) : sys_(std::move(sys)) {
    require(sys_->uniquely_ergodic(), errc::unsupported_system,
            "no canonical invariant measure for this system kind");
    if (sys_->kind() == SystemKind::Substitution)
      lambda_ = detail::perron_root(detail::charpoly(sys_->incidence()));
  }

  const SystemPtr& system() const { return sys_; }

  /// mu of the cylinder [w at any offset] (shift invariance makes the offset
  /// irrelevant).
  QuadReal word_measure(const Word& w) const {
    require(!w.empty(), errc::bad_config, "measure of empty word");
    if (!sys_->contains(w)) return QuadReal(0);
    if (sys_->kind() == SystemKind::Sturmian) return sys_->sturmian_domain(w).length();
    std::lock_guard<std::mutex> lock(mutex_);
    int k = (int)w.size();
    auto it = freq_.find(k);
    if (it == freq_.end()) it = freq_.emplace(k, block_frequencies(k)).first;
    return it->second.at(w);
  }

  QuadReal operator()(const ClopenSet& A) const {
    QuadReal s(0);
    if (A.is_empty()) return s;
    for (const Word& w : A.words()) s += word_measure(w);
    return s;
  }

  /// Index map: integral of the cocycle. Exact; the result must be an integer.
  long index(const FullGroupElement& g) const {
    require(g.system()->same_system(*sys_), errc::bad_config, "element over different system");
    const auto& ws = sys_->words(g.window_len());
    QuadReal s(0);
    for (size_t i = 0; i < ws.size(); ++i)
      if (g.code()[i] != 0) s += QuadReal(Rational(g.code()[i])) * word_measure(ws[i]);
    require(s.is_rational(), errc::non_integer_index, "index with irrational part");
    require(is_integer(s.rat()), errc::non_integer_index, "fractional index");
    long v = s.rat().get_num().fits_slong_p() ? s.rat().get_num().get_si() : 0;
    require(s.rat().get_num().fits_slong_p(), errc::resource_cap, "index out of range");
    return v;
  }

 private:
  // exact k-block frequencies: Perron eigenvector of the k-block incidence
  std::map<Word, QuadReal> block_frequencies(int k) const {
    require(k <= sys_->caps().measure_block_cap, errc::resource_cap,
            "block frequency cap exceeded");
    const auto& words = sys_->words(k);
    size_t m = words.size();
    auto idx = [&](const Word& w) { return (size_t)sys_->word_index(w); };
    // M[u][v] = occurrences of u among the first |sigma(v0)| windows of sigma(v)
    std::vector<std::vector<long>> M(m, std::vector<long>(m, 0));
    for (size_t v = 0; v < m; ++v) {
      Word img = sys_->apply_substitution(words[v]);
      size_t lead = sys_->substitution_rules()[words[v][0]].size();
      require(img.size() >= lead + k - 1, errc::resource_cap, "block image too short");
      for (size_t i = 0; i < lead; ++i) M[idx(img.sub(i, k))][v]++;
    }
    // primitivity of the block matrix
    {
      std::vector<std::vector<bool>> r(m, std::vector<bool>(m));
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) r[i][j] = M[i][j] > 0;
      auto cur = r;
      bool prim = false;
      for (size_t e = 1; e <= (m - 1) * (m - 1) + 1; ++e) {
        bool all = true;
        for (size_t i = 0; i < m && all; ++i)
          for (size_t j = 0; j < m && all; ++j) all = cur[i][j];
        if (all) {
          prim = true;
          break;
        }
        std::vector<std::vector<bool>> nxt(m, std::vector<bool>(m, false));
        for (size_t i = 0; i < m; ++i)
          for (size_t l = 0; l < m; ++l)
            if (cur[i][l])
              for (size_t j = 0; j < m; ++j)
                if (r[l][j]) nxt[i][j] = true;
        cur = std::move(nxt);
      }
      require(prim, errc::unsupported_system, "block substitution not primitive");
    }
    // kernel of (M - lambda I) over the quadratic field
    std::vector<std::vector<QuadReal>> A(m, std::vector<QuadReal>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        A[i][j] = QuadReal(Rational(M[i][j]));
        if (i == j) A[i][j] -= lambda_;
      }
    std::vector<QuadReal> f = kernel_vector(A);
    // normalize: sum 1, all entries positive
    QuadReal s(0);
    for (const QuadReal& x : f) s += x;
    require(s.sign() != 0, errc::irrational_frequency, "degenerate frequency vector");
    for (QuadReal& x : f) x = x / s;
    std::map<Word, QuadReal> out;
    for (size_t i = 0; i < m; ++i) {
      require(f[i].sign() > 0, errc::irrational_frequency, "non-positive block frequency");
      out.emplace(words[i], f[i]);
    }
    return out;
  }

  // one-dimensional kernel of a square matrix over the field
  static std::vector<QuadReal> kernel_vector(std::vector<std::vector<QuadReal>> A) {
    size_t m = A.size();
    std::vector<long> pivot_col(m, -1);
    size_t row = 0;
    for (size_t col = 0; col < m && row < m; ++col) {
      size_t p = row;
      while (p < m && A[p][col].is_zero()) ++p;
      if (p == m) continue;
      std::swap(A[p], A[row]);
      QuadReal inv = QuadReal(1) / A[row][col];
      for (size_t j = col; j < m; ++j) A[row][j] = A[row][j] * inv;
      for (size_t i = 0; i < m; ++i) {
        if (i == row || A[i][col].is_zero()) continue;
        QuadReal f = A[i][col];
        for (size_t j = col; j < m; ++j) A[i][j] -= f * A[row][j];
      }
      pivot_col[row] = (long)col;
      ++row;
    }
    require(row == m - 1, errc::irrational_frequency,
            "frequency eigenspace is not one-dimensional");
    // free column = the one that is no pivot
    std::vector<bool> is_pivot(m, false);
    for (size_t i = 0; i < row; ++i) is_pivot[pivot_col[i]] = true;
    size_t free_col = 0;
    while (free_col < m && is_pivot[free_col]) ++free_col;
    std::vector<QuadReal> x(m, QuadReal(0));
    x[free_col] = QuadReal(1);
    for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = -A[i][free_col];
    return x;
  }

  SystemPtr sys_;
  QuadReal lambda_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::map<Word, QuadReal>> freq_;
};

/// Shared per-system measure instances (systems are immutable).
inline std::shared_ptr<const InvariantMeasure> measure_for(const SystemPtr& sys) {
  static std::mutex mu;
  static std::map<const SubshiftSystem*, std::weak_ptr<const InvariantMeasure>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = reg[sys.get()];
  if (auto sp = slot.lock()) return sp;
  auto sp = std::make_shared<const InvariantMeasure>(sys);
  slot = sp;
  return sp;
}

inline QuadReal measure(const SystemPtr& sys, const ClopenSet& A) {
  return (*measure_for(sys))(A);
}

inline long index(const FullGroupElement& g) { return measure_for(g.system())->index(g); }

}  // namespace tfg
