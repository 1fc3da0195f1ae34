#pragma once

// Exact arithmetic: GMP-backed rationals, quadratic irrationals a + b*sqrt(d)
// and polynomials of degree at most two. No floating point is used for any
// decision made here; to_double() exists for rendering only.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tiltwall {

using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& n);

class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  // Integer-valued gmpxx expressions such as a * b.
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& e) : q_(Integer(e)) {}  // NOLINT(google-explicit-constructor)

  /// Accepts "p", "p/q", with optional sign and surrounding whitespace.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Integer floor() const;
  Integer ceil() const;
  Rational abs() const { return Rational(::abs(q_)); }
  double to_double() const { return q_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);
inline std::string to_string(const Rational& q) { return q.str(); }

/// Writes n = k^2 * d with d squarefree (sign kept in d). Returns {k, d}.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

/// Exact real number a + b*sqrt(d) with d squarefree; b == 0 iff d == 0.
class QuadraticIrrational {
 public:
  QuadraticIrrational() = default;
  QuadraticIrrational(Rational a)  // NOLINT(google-explicit-constructor)
      : a_(std::move(a)) {}
  QuadraticIrrational(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticIrrational(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticIrrational(Rational a, Rational b, const Integer& d);

  /// Principal square root of a nonnegative rational.
  static QuadraticIrrational sqrt(const Rational& q);
  static QuadraticIrrational parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  int sign() const;
  QuadraticIrrational conjugate() const { return {a_, -b_, d_}; }
  /// (a + b sqrt d)(a - b sqrt d), always rational.
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }
  double to_double() const;
  std::string str() const;

  // Arithmetic is closed within one field Q(sqrt d); mixing two distinct
  // irrational fields throws std::domain_error.
  QuadraticIrrational& operator+=(const QuadraticIrrational& o);
  QuadraticIrrational& operator-=(const QuadraticIrrational& o);
  QuadraticIrrational& operator*=(const QuadraticIrrational& o);
  QuadraticIrrational& operator/=(const QuadraticIrrational& o);

  friend QuadraticIrrational operator+(QuadraticIrrational x, const QuadraticIrrational& y) { return x += y; }
  friend QuadraticIrrational operator-(QuadraticIrrational x, const QuadraticIrrational& y) { return x -= y; }
  friend QuadraticIrrational operator*(QuadraticIrrational x, const QuadraticIrrational& y) { return x *= y; }
  friend QuadraticIrrational operator/(QuadraticIrrational x, const QuadraticIrrational& y) { return x /= y; }
  friend QuadraticIrrational operator-(const QuadraticIrrational& x) { return {-x.a_, -x.b_, x.d_}; }

  friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y);

 private:
  Integer common_field(const QuadraticIrrational& o) const;

  Rational a_;
  Rational b_;
  Integer d_ = 0;
};

using QI = QuadraticIrrational;

/// Total order on real values, exact across different quadratic fields.
std::strong_ordering qi_compare(const QuadraticIrrational& x, const QuadraticIrrational& y);

std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& x);
inline std::string to_string(const QuadraticIrrational& x) { return x.str(); }

/// c0 + c1*x + c2*x^2.
struct QuadPoly {
  Rational c0;
  Rational c1;
  Rational c2;

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  int degree() const;
  Rational operator()(const Rational& x) const { return c0 + x * (c1 + x * c2); }
  QuadraticIrrational operator()(const QuadraticIrrational& x) const;
  QuadPoly derivative() const { return {c1, c2 * Rational(2), Rational()}; }
  /// p(-x).
  QuadPoly reflected() const { return {c0, -c1, c2}; }
  std::string str() const;

  QuadPoly& operator+=(const QuadPoly& o);
  QuadPoly& operator-=(const QuadPoly& o);
  friend QuadPoly operator+(QuadPoly p, const QuadPoly& q) { return p += q; }
  friend QuadPoly operator-(QuadPoly p, const QuadPoly& q) { return p -= q; }
  friend QuadPoly operator-(const QuadPoly& p) { return {-p.c0, -p.c1, -p.c2}; }
  friend QuadPoly operator*(const Rational& s, const QuadPoly& p) { return {s * p.c0, s * p.c1, s * p.c2}; }
  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadPoly& p);

struct QuadRoots {
  std::vector<QuadraticIrrational> values;  // ascending
  bool double_root = false;
};

/// Real roots of a nonzero polynomial; throws std::invalid_argument
/// ("indeterminate roots") for the zero polynomial.
QuadRoots quad_roots(const QuadPoly& p);

inline QuadraticIrrational quad_eval(const QuadPoly& p, const QuadraticIrrational& x) { return p(x); }

}  // namespace tiltwall
