#pragma once

// Numerical Chern classes v = (L^2 ch0, L ch1, ch2) on a polarized surface of
// Picard rank one, and the pointwise tilt-stability quantities attached to
// them. The vertical coordinate of the (alpha, beta)-plane is carried as
// a = alpha^2 / 2 so that every quantity stays rational.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltwall/exactnum.hpp"

namespace tiltwall {

struct SurfaceConfig {
  std::int64_t L2 = 1;
  std::int64_t v0_step = 1;
  std::int64_t v1_step = 1;
  std::int64_t v2_denominator = 2;
  std::int64_t minimal_discriminant = 1;

  /// Steps default to L2, ch2 denominator to 2.
  static SurfaceConfig with_defaults(std::int64_t L2, std::int64_t minimal_discriminant);
  /// "ppas" or "abelian-(1,2)"; throws std::invalid_argument otherwise.
  static SurfaceConfig preset(std::string_view name);
  static std::vector<std::string> preset_names();

  /// Throws std::invalid_argument on non-positive fields.
  void validate() const;

  friend bool operator==(const SurfaceConfig&, const SurfaceConfig&) = default;
};

struct ChernClass {
  Integer v0;
  Integer v1;
  Rational v2;

  ChernClass() = default;
  ChernClass(Integer v0_, Integer v1_, Rational v2_) : v0(std::move(v0_)), v1(std::move(v1_)), v2(std::move(v2_)) {}
  ChernClass(long v0_, long v1_, Rational v2_) : v0(v0_), v1(v1_), v2(std::move(v2_)) {}

  /// "v0,v1,v2" with v2 a rational literal; parentheses are optional.
  static ChernClass parse(std::string_view text);
  std::string str() const;

  ChernClass& operator+=(const ChernClass& o);
  ChernClass& operator-=(const ChernClass& o);
  friend ChernClass operator+(ChernClass a, const ChernClass& b) { return a += b; }
  friend ChernClass operator-(ChernClass a, const ChernClass& b) { return a -= b; }
  friend ChernClass operator-(const ChernClass& a) { return {-a.v0, -a.v1, -a.v2}; }
  friend bool operator==(const ChernClass&, const ChernClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const ChernClass& v);

/// Lexicographic order on (v0, v1, v2).
bool lex_less(const ChernClass& a, const ChernClass& b);

/// ch^beta: t0 = v0, t1 = L ch1^beta, t2 = ch2^beta.
struct TwistedClass {
  Rational t0;
  Rational t1;
  Rational t2;
  friend bool operator==(const TwistedClass&, const TwistedClass&) = default;
};

/// Extended rational: a finite value or +infinity.
class Slope {
 public:
  Slope(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static Slope infinity() { return Slope(); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error for +infinity.
  const Rational& value() const;
  std::string str() const;

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  Slope() : infinite_(true) {}
  Rational value_;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

struct CentralCharge {
  Rational re;
  Rational im;
  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

struct Intercept {
  QuadraticIrrational value;
  bool double_root = false;
};

TwistedClass twist(const ChernClass& v, const Rational& beta);
Rational discriminant(const ChernClass& v);
Rational discriminant(const TwistedClass& t);
/// Requires a >= 0.
CentralCharge central_charge(const ChernClass& v, const Rational& a, const Rational& beta);
Slope tilt_slope(const ChernClass& v, const Rational& a, const Rational& beta);
Slope mu_slope(const ChernClass& v);
bool is_kernel_class(const ChernClass& v, const Rational& beta);
/// ch2^{-x}(v) = v2 + v1 x + (v0/2) x^2.
QuadPoly chd_polynomial(const ChernClass& v);
/// beta-intercept of the relevant branch of the hyperbola nu_{0,beta}(v) = 0.
Intercept p_intercept(const ChernClass& v);

ChernClass class_dual(const ChernClass& v);
ChernClass class_shift(const ChernClass& v);
ChernClass line_bundle_class(long k, const SurfaceConfig& cfg);

/// Empty when v lies in the lattice of cfg, otherwise a description.
std::optional<std::string> lattice_violation(const ChernClass& v, const SurfaceConfig& cfg);
/// Throws std::invalid_argument on lattice violation.
void require_lattice(const ChernClass& v, const SurfaceConfig& cfg);

}  // namespace tiltwall
