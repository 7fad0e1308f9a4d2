#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "tfg/error.hpp"

namespace tfg {

using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long floor_rational(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  require(f.fits_slong_p(), errc::resource_cap, "rational floor out of range");
  return f.get_si();
}

inline bool is_square_free(long d) {
  if (d < 0) return false;
  if (d < 2) return true;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

/// Exact element a + b*sqrt(d) of a real quadratic field (d square-free, d = 0
/// means plain rational). All arithmetic and comparisons are exact.
class QuadReal {
 public:
  QuadReal() : a_(0), b_(0), d_(0) {}
  QuadReal(const Rational& a) : a_(a), b_(0), d_(0) { a_.canonicalize(); }
  QuadReal(long n) : a_(n), b_(0), d_(0) {}
  QuadReal(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    // gmp rationals built from (num, den) are not canonical by themselves
    a_.canonicalize();
    b_.canonicalize();
    require(is_square_free(d), errc::bad_config, "radicand must be square-free and >= 0");
    if (b_ == 0 || d_ <= 1) {
      if (d_ == 1) a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  }

  const Rational& rat() const { return a_; }
  const Rational& irr() const { return b_; }
  long radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadReal operator-() const { return QuadReal(-a_, -b_, d_); }

  friend QuadReal operator+(const QuadReal& x, const QuadReal& y) {
    long d = merge(x, y);
    return QuadReal(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadReal operator-(const QuadReal& x, const QuadReal& y) { return x + (-y); }
  friend QuadReal operator*(const QuadReal& x, const QuadReal& y) {
    long d = merge(x, y);
    return QuadReal(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadReal operator/(const QuadReal& x, const QuadReal& y) {
    require(!y.is_zero(), errc::bad_config, "division by zero");
    // 1/(a+b√d) = (a-b√d)/(a²-b²d)
    Rational nrm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.d_);
    QuadReal conj(y.a_ / nrm, -y.b_ / nrm, y.d_);
    return x * conj;
  }

  QuadReal& operator+=(const QuadReal& y) { return *this = *this + y; }
  QuadReal& operator-=(const QuadReal& y) { return *this = *this - y; }
  QuadReal& operator*=(const QuadReal& y) { return *this = *this * y; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // sign of a + b√d, exact
  int sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // |a| vs |b|√d: compare a² with b²d
    Rational a2 = a_ * a_, b2d = b_ * b_ * Rational(d_);
    int c = cmp(a2, b2d);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
  }

  friend bool operator==(const QuadReal& x, const QuadReal& y) { return (x - y).is_zero(); }
  friend bool operator!=(const QuadReal& x, const QuadReal& y) { return !(x == y); }
  friend bool operator<(const QuadReal& x, const QuadReal& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadReal& x, const QuadReal& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadReal& x, const QuadReal& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadReal& x, const QuadReal& y) { return (x - y).sign() >= 0; }

  double approx() const { return a_.get_d() + b_.get_d() * std::sqrt(double(d_)); }

  long floor() const {
    if (b_ == 0) return floor_rational(a_);
    long guess = (long)std::floor(approx());
    // fix up the float guess exactly
    while (*this < QuadReal(Rational(guess))) --guess;
    while (*this >= QuadReal(Rational(guess + 1))) ++guess;
    return guess;
  }

  QuadReal frac() const { return *this - QuadReal(Rational(floor())); }

  std::string str() const {
    if (b_ == 0) return a_.get_str();
    std::string s = a_.get_str();
    s += (b_ > 0 ? " + " : " - ");
    Rational ab = abs(b_);
    if (ab != 1) s += ab.get_str() + "*";
    s += "sqrt(" + std::to_string(d_) + ")";
    return s;
  }

 private:
  static long merge(const QuadReal& x, const QuadReal& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    require(x.d_ == y.d_, errc::unsupported_system, "mixed quadratic fields");
    return x.d_;
  }

  Rational a_, b_;
  long d_;
};

}  // namespace tfg
