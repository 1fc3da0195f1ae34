#include "tiltwall/piecewise.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tiltwall {

namespace {

using Bound = std::optional<QuadraticIrrational>;

// min over [lo, hi] of p is >= 0; empty bounds are infinite.
bool nonnegative_on(const QuadPoly& p, const Bound& lo, const Bound& hi) {
  if (lo && hi && *hi < *lo) return true;
  if (p.c2.sign() < 0 && (!lo || !hi)) return false;
  if (p.c2.is_zero()) {
    if (p.c1.is_zero()) return p.c0.sign() >= 0;
    if (p.c1.sign() > 0 && !lo) return false;
    if (p.c1.sign() < 0 && !hi) return false;
  }
  if (lo && p(*lo).sign() < 0) return false;
  if (hi && p(*hi).sign() < 0) return false;
  if (p.c2.sign() > 0) {
    const QuadraticIrrational vertex(-p.c1 / (Rational(2) * p.c2));
    const bool inside = (!lo || *lo <= vertex) && (!hi || vertex <= *hi);
    if (inside && p(vertex).sign() < 0) return false;
  }
  return true;
}

}  // namespace

void PiecewiseQuadratic::check_shape() const {
  if (pieces.size() != breakpoints.size() + 1) throw std::invalid_argument("need one more piece than breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) throw std::invalid_argument("breakpoints must be strictly ascending");
  }
}

std::size_t PiecewiseQuadratic::piece_index(const QuadraticIrrational& x) const {
  std::size_t i = 0;
  while (i < breakpoints.size() && breakpoints[i] < x) ++i;
  return i;
}

QuadraticIrrational PiecewiseQuadratic::operator()(const QuadraticIrrational& x) const {
  return pieces.at(piece_index(x))(x);
}

QuadraticIrrational PiecewiseQuadratic::left_derivative(std::size_t breakpoint) const {
  return pieces.at(breakpoint).derivative()(breakpoints.at(breakpoint));
}

QuadraticIrrational PiecewiseQuadratic::right_derivative(std::size_t breakpoint) const {
  return pieces.at(breakpoint + 1).derivative()(breakpoints.at(breakpoint));
}

bool PiecewiseQuadratic::is_continuous() const {
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (pieces[i](breakpoints[i]) != pieces[i + 1](breakpoints[i])) return false;
  }
  return true;
}

bool PiecewiseQuadratic::is_nonnegative(const std::optional<QuadraticIrrational>& lower) const {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Bound lo = (i == 0) ? Bound{} : Bound{breakpoints[i - 1]};
    const Bound hi = (i == breakpoints.size()) ? Bound{} : Bound{breakpoints[i]};
    if (lower && (!lo || *lo < *lower)) lo = lower;
    if (!nonnegative_on(pieces[i], lo, hi)) return false;
  }
  return true;
}

bool PiecewiseQuadratic::is_monotone(int direction, const std::optional<QuadraticIrrational>& lower) const {
  const Rational sign(direction > 0 ? 1 : -1);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Bound lo = (i == 0) ? Bound{} : Bound{breakpoints[i - 1]};
    const Bound hi = (i == breakpoints.size()) ? Bound{} : Bound{breakpoints[i]};
    if (lower && (!lo || *lo < *lower)) lo = lower;
    if (!nonnegative_on(sign * pieces[i].derivative(), lo, hi)) return false;
  }
  return true;
}

std::string PiecewiseQuadratic::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) os << "; ";
    os << pieces[i] << " | ";
    if (breakpoints.empty()) {
      os << "all x";
    } else if (i == 0) {
      os << "x <= " << breakpoints[0];
    } else if (i == breakpoints.size()) {
      os << "x >= " << breakpoints[i - 1];
    } else {
      os << breakpoints[i - 1] << " <= x <= " << breakpoints[i];
    }
  }
  os << "}";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PiecewiseQuadratic& f) { return os << f.str(); }

PiecewiseQuadratic serre_dual_function(const PiecewiseQuadratic& f) {
  PiecewiseQuadratic out;
  out.breakpoints.reserve(f.breakpoints.size());
  for (auto it = f.breakpoints.rbegin(); it != f.breakpoints.rend(); ++it) out.breakpoints.push_back(-*it);
  out.pieces.reserve(f.pieces.size());
  for (auto it = f.pieces.rbegin(); it != f.pieces.rend(); ++it) out.pieces.push_back(it->reflected());
  return out;
}

PiecewiseQuadratic subtract(const PiecewiseQuadratic& f, const QuadPoly& p) {
  PiecewiseQuadratic out = f;
  for (auto& piece : out.pieces) piece -= p;
  return out;
}

}  // namespace tiltwall
