#include "tiltwall/lattice.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tiltwall {

SurfaceConfig SurfaceConfig::with_defaults(std::int64_t L2, std::int64_t minimal_discriminant) {
  SurfaceConfig cfg;
  cfg.L2 = L2;
  cfg.v0_step = L2;
  cfg.v1_step = L2;
  cfg.v2_denominator = 2;
  cfg.minimal_discriminant = minimal_discriminant;
  cfg.validate();
  return cfg;
}

// ch2 is integral on abelian surfaces of Picard rank one (c1^2/2 = k^2 L^2/2
// with L^2 even), so both presets use v2_denominator = 1.
SurfaceConfig SurfaceConfig::preset(std::string_view name) {
  if (name == "ppas") return SurfaceConfig{2, 2, 2, 1, 4};
  if (name == "abelian-(1,2)") return SurfaceConfig{4, 4, 4, 1, 8};
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> SurfaceConfig::preset_names() { return {"ppas", "abelian-(1,2)"}; }

void SurfaceConfig::validate() const {
  if (L2 <= 0 || v0_step <= 0 || v1_step <= 0 || v2_denominator <= 0 || minimal_discriminant <= 0) {
    throw std::invalid_argument("surface config fields must be positive integers");
  }
}

ChernClass ChernClass::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '(') s.erase(0, 1);
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw std::invalid_argument("a class needs three components: '" + std::string(text) + "'");
  return {parse_integer(parts[0]), parse_integer(parts[1]), Rational::parse(parts[2])};
}

std::string ChernClass::str() const {
  return "(" + v0.get_str() + "," + v1.get_str() + "," + v2.str() + ")";
}

ChernClass& ChernClass::operator+=(const ChernClass& o) {
  v0 += o.v0;
  v1 += o.v1;
  v2 += o.v2;
  return *this;
}

ChernClass& ChernClass::operator-=(const ChernClass& o) {
  v0 -= o.v0;
  v1 -= o.v1;
  v2 -= o.v2;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ChernClass& v) { return os << v.str(); }

bool lex_less(const ChernClass& a, const ChernClass& b) {
  if (a.v0 != b.v0) return a.v0 < b.v0;
  if (a.v1 != b.v1) return a.v1 < b.v1;
  return a.v2 < b.v2;
}

const Rational& Slope::value() const {
  if (infinite_) throw std::logic_error("slope is +infinity");
  return value_;
}

std::string Slope::str() const { return infinite_ ? "+inf" : value_.str(); }

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

TwistedClass twist(const ChernClass& v, const Rational& beta) {
  const Rational v0(v.v0);
  const Rational v1(v.v1);
  return {v0, v1 - beta * v0, v.v2 - beta * v1 + beta * beta / Rational(2) * v0};
}

Rational discriminant(const ChernClass& v) {
  const Rational v1(v.v1);
  return v1 * v1 - Rational(2) * Rational(v.v0) * v.v2;
}

Rational discriminant(const TwistedClass& t) { return t.t1 * t.t1 - Rational(2) * t.t0 * t.t2; }

CentralCharge central_charge(const ChernClass& v, const Rational& a, const Rational& beta) {
  if (a.sign() < 0) throw std::invalid_argument("central charge needs a >= 0");
  const TwistedClass t = twist(v, beta);
  return {-(t.t2 - a * t.t0), t.t1};
}

Slope tilt_slope(const ChernClass& v, const Rational& a, const Rational& beta) {
  const CentralCharge z = central_charge(v, a, beta);
  if (z.im.is_zero()) return Slope::infinity();
  return Slope(-z.re / z.im);
}

Slope mu_slope(const ChernClass& v) {
  if (v.v0 == 0) return Slope::infinity();
  return Slope(Rational(v.v1, v.v0));
}

bool is_kernel_class(const ChernClass& v, const Rational& beta) {
  const TwistedClass t = twist(v, beta);
  return t.t1.is_zero() && t.t2.is_zero();
}

QuadPoly chd_polynomial(const ChernClass& v) {
  return {v.v2, Rational(v.v1), Rational(v.v0) / Rational(2)};
}

Intercept p_intercept(const ChernClass& v) {
  if (v.v0 == 0) {
    if (v.v1 == 0) throw std::invalid_argument("no hyperbola");
    return {QuadraticIrrational(v.v2 / Rational(v.v1)), false};
  }
  // ch2^beta = (v0/2) beta^2 - v1 beta + v2; its discriminant in beta is Delta(v).
  const Rational delta = discriminant(v);
  if (delta.sign() < 0) throw std::invalid_argument("no real intercept");
  const QuadraticIrrational root = QuadraticIrrational::sqrt(delta);
  const QuadraticIrrational v0(Rational(v.v0));
  const QuadraticIrrational v1(Rational(v.v1));
  // (v1 - sqrt(Delta)) / v0 is the smaller root for v0 > 0 and the larger one
  // for v0 < 0.
  return {(v1 - root) / v0, delta.is_zero()};
}

ChernClass class_dual(const ChernClass& v) { return {v.v0, -v.v1, v.v2}; }

ChernClass class_shift(const ChernClass& v) { return -v; }

ChernClass line_bundle_class(long k, const SurfaceConfig& cfg) {
  const Integer L2(static_cast<long>(cfg.L2));
  const Integer kk(k);
  return {L2, Integer(kk * L2), Rational(Integer(kk * kk * L2)) / Rational(2)};
}

std::optional<std::string> lattice_violation(const ChernClass& v, const SurfaceConfig& cfg) {
  auto divisible = [](const Integer& x, std::int64_t step) {
    return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(step)) != 0;
  };
  if (!divisible(v.v0, cfg.v0_step)) return "v0 = " + v.v0.get_str() + " is not a multiple of " + std::to_string(cfg.v0_step);
  if (!divisible(v.v1, cfg.v1_step)) return "v1 = " + v.v1.get_str() + " is not a multiple of " + std::to_string(cfg.v1_step);
  const Integer den(static_cast<long>(cfg.v2_denominator));
  if (mpz_divisible_p(den.get_mpz_t(), v.v2.den().get_mpz_t()) == 0) {
    return "v2 = " + v.v2.str() + " does not lie in (1/" + std::to_string(cfg.v2_denominator) + ")Z";
  }
  return std::nullopt;
}

void require_lattice(const ChernClass& v, const SurfaceConfig& cfg) {
  if (auto why = lattice_violation(v, cfg)) throw std::invalid_argument("lattice violation: " + *why);
}

}  // namespace tiltwall
