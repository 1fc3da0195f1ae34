#include "tiltwall/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tiltwall {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

// Sign of a + b*sqrt(d) with d >= 0 not a perfect square > 1.
int sign_in_field(const Rational& a, const Rational& b, const Integer& d) {
  const int sa = a.sign();
  const int sb = (d == 0) ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const int c = cmp((a * a).raw(), (b * b * Rational(d)).raw());
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string s = strip_spaces(text);
  if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  const std::string_view den_text = std::string_view(s).substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(std::string_view(s).substr(0, slash)), parse_integer(den_text));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
  if (n == 0) return {Integer(0), Integer(0)};
  Integer rest = abs(n);
  Integer k = 1;
  Integer d = (n < 0) ? -1 : 1;
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    mpz_sqrt(k.get_mpz_t(), rest.get_mpz_t());
    return {k, d};
  }
  for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
        rest /= p;
        k *= p;
      } else {
        d *= p;
      }
    }
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      k *= r;
      rest = 1;
      break;
    }
  }
  d *= rest;
  return {k, d};
}

QuadraticIrrational::QuadraticIrrational(Rational a, Rational b, const Integer& d) : a_(std::move(a)) {
  if (d < 0) throw std::domain_error("negative radicand");
  if (b.is_zero() || d == 0) return;
  auto [k, core] = squarefree_decompose(d);
  if (core == 1) {
    a_ += b * Rational(k);
    return;
  }
  b_ = b * Rational(k);
  d_ = core;
}

QuadraticIrrational QuadraticIrrational::sqrt(const Rational& q) {
  if (q.sign() < 0) throw std::domain_error("square root of a negative rational");
  // sqrt(p/q) = sqrt(p*q)/q
  return {Rational(), Rational(Integer(1), q.den()), q.num() * q.den()};
}

int QuadraticIrrational::sign() const { return sign_in_field(a_, b_, d_); }

double QuadraticIrrational::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::string QuadraticIrrational::str() const {
  if (is_rational()) return a_.str();
  std::string radical;
  const Rational mag = b_.abs();
  if (mag == Rational(1)) {
    radical = "sqrt(" + d_.get_str(10) + ")";
  } else {
    radical = mag.str() + "*sqrt(" + d_.get_str(10) + ")";
  }
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + radical;
  return a_.str() + (b_.sign() < 0 ? "-" : "+") + radical;
}

QuadraticIrrational QuadraticIrrational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return QuadraticIrrational(Rational::parse(s));
  const auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size()) {
    throw std::invalid_argument("malformed radical in '" + std::string(text) + "'");
  }
  const Integer d = parse_integer(std::string_view(s).substr(pos + 5, close - pos - 5));
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // Split head into rational part and coefficient at the last sign that is
  // not the leading character.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    const bool sign_here = head[i] == '+' || head[i] == '-';
    const bool sign_before = head[i - 1] == '+' || head[i - 1] == '-';
    if (sign_here && !sign_before) {
      split = i;
      break;
    }
  }
  Rational a;
  std::string coeff = head;
  if (split != std::string::npos) {
    a = Rational::parse(head.substr(0, split));
    coeff = head.substr(split);
  }
  if (coeff.size() > 1 && coeff.front() == '+') coeff.erase(0, 1);
  Rational b(1);
  if (coeff.empty() || coeff == "+") {
    b = Rational(1);
  } else if (coeff == "-") {
    b = Rational(-1);
  } else {
    b = Rational::parse(coeff);
  }
  return {a, b, d};
}

Integer QuadraticIrrational::common_field(const QuadraticIrrational& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw std::domain_error("arithmetic across different quadratic fields: sqrt(" + d_.get_str() +
                          ") and sqrt(" + o.d_.get_str() + ")");
}

QuadraticIrrational& QuadraticIrrational::operator+=(const QuadraticIrrational& o) {
  const Integer d = common_field(o);
  *this = QuadraticIrrational(a_ + o.a_, b_ + o.b_, d);
  return *this;
}

QuadraticIrrational& QuadraticIrrational::operator-=(const QuadraticIrrational& o) {
  const Integer d = common_field(o);
  *this = QuadraticIrrational(a_ - o.a_, b_ - o.b_, d);
  return *this;
}

QuadraticIrrational& QuadraticIrrational::operator*=(const QuadraticIrrational& o) {
  const Integer d = common_field(o);
  const Rational rd(d);
  *this = QuadraticIrrational(a_ * o.a_ + b_ * o.b_ * rd, a_ * o.b_ + b_ * o.a_, d);
  return *this;
}

QuadraticIrrational& QuadraticIrrational::operator/=(const QuadraticIrrational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  *this *= o.conjugate();
  *this = QuadraticIrrational(a_ / n, b_ / n, d_);
  return *this;
}

std::strong_ordering qi_compare(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  int s = 0;
  if (x.radicand() == 0 || y.radicand() == 0 || x.radicand() == y.radicand()) {
    s = (x - y).sign();
  } else {
    // x - y = u - c*sqrt(e) with u in Q(sqrt d): compare u against c*sqrt(e).
    const QuadraticIrrational u(x.rational_part() - y.rational_part(), x.radical_coefficient(), x.radicand());
    const Rational c = y.radical_coefficient();
    const int su = u.sign();
    const int sv = -c.sign();
    if (sv == 0) {
      s = su;
    } else if (su == 0 || su == sv) {
      s = (su == 0) ? sv : su;
    } else {
      // Opposite signs: the larger magnitude wins; compare u^2 with c^2 e.
      const int m = (u * u - QuadraticIrrational(c * c * Rational(y.radicand()))).sign();
      s = (m > 0) ? su : (m < 0 ? sv : 0);
    }
  }
  return s <=> 0;
}

std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  return qi_compare(x, y);
}

std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& x) { return os << x.str(); }

int QuadPoly::degree() const {
  if (!c2.is_zero()) return 2;
  if (!c1.is_zero()) return 1;
  return c0.is_zero() ? -1 : 0;
}

QuadraticIrrational QuadPoly::operator()(const QuadraticIrrational& x) const {
  return QuadraticIrrational(c0) + x * (QuadraticIrrational(c1) + x * QuadraticIrrational(c2));
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
  c0 += o.c0;
  c1 += o.c1;
  c2 += o.c2;
  return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) {
  c0 -= o.c0;
  c1 -= o.c1;
  c2 -= o.c2;
  return *this;
}

std::string QuadPoly::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const char* mono) {
    if (c.is_zero()) return;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (*mono == '\0') {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << "*";
      os << mono;
    }
    first = false;
  };
  term(c2, "x^2");
  term(c1, "x");
  term(c0, "");
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadPoly& p) { return os << p.str(); }

QuadRoots quad_roots(const QuadPoly& p) {
  QuadRoots out;
  if (p.c2.is_zero()) {
    if (p.c1.is_zero()) {
      if (p.c0.is_zero()) throw std::invalid_argument("indeterminate roots");
      return out;
    }
    out.values.emplace_back(-p.c0 / p.c1);
    return out;
  }
  const Rational disc = p.c1 * p.c1 - Rational(4) * p.c2 * p.c0;
  const Rational two_a = Rational(2) * p.c2;
  if (disc.sign() < 0) return out;
  if (disc.is_zero()) {
    out.values.emplace_back(-p.c1 / two_a);
    out.double_root = true;
    return out;
  }
  const QuadraticIrrational root = QuadraticIrrational::sqrt(disc);
  QuadraticIrrational r1 = (QuadraticIrrational(-p.c1) - root) / QuadraticIrrational(two_a);
  QuadraticIrrational r2 = (QuadraticIrrational(-p.c1) + root) / QuadraticIrrational(two_a);
  if (r2 < r1) std::swap(r1, r2);
  out.values = {r1, r2};
  return out;
}

}  // namespace tiltwall
