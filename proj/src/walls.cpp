#include "tiltwall/walls.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace tiltwall {

NumericalWall NumericalWall::semicircle(Rational center, Rational radius_sq) {
  if (radius_sq.sign() <= 0) throw std::invalid_argument("semicircle needs radius_sq > 0");
  return NumericalWall(Semicircle{std::move(center), std::move(radius_sq)});
}

NumericalWall NumericalWall::vertical(Rational beta) { return NumericalWall(VerticalLine{std::move(beta)}); }

const Semicircle& NumericalWall::as_semicircle() const {
  if (!is_semicircle()) throw std::logic_error("wall is vertical");
  return std::get<Semicircle>(shape_);
}

const VerticalLine& NumericalWall::as_vertical() const {
  if (!is_vertical()) throw std::logic_error("wall is a semicircle");
  return std::get<VerticalLine>(shape_);
}

QuadraticIrrational NumericalWall::radius() const { return QuadraticIrrational::sqrt(as_semicircle().radius_sq); }

std::string NumericalWall::str() const {
  if (is_vertical()) return "vertical(beta=" + as_vertical().beta.str() + ")";
  const auto& c = as_semicircle();
  return "semicircle(center=" + c.center.str() + ", radius_sq=" + c.radius_sq.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const NumericalWall& w) { return os << w.str(); }

std::optional<NumericalWall> wall_between(const ChernClass& v, const ChernClass& w) {
  const Rational v0(v.v0), v1(v.v1), w0(w.v0), w1(w.v1);
  const Rational d01 = v0 * w1 - v1 * w0;
  const Rational d02 = v0 * w.v2 - v.v2 * w0;
  const Rational d12 = v1 * w.v2 - v.v2 * w1;
  if (!d01.is_zero()) {
    const Rational center = d02 / d01;
    const Rational radius_sq = center * center - Rational(2) * d12 / d01;
    if (radius_sq.sign() <= 0) return std::nullopt;
    return NumericalWall::semicircle(center, radius_sq);
  }
  if (!d02.is_zero()) return NumericalWall::vertical(d12 / d02);
  return std::nullopt;
}

std::optional<Rational> wall_a_at(const NumericalWall& wall, const Rational& beta) {
  if (wall.is_vertical()) throw std::invalid_argument("no height");
  const auto& c = wall.as_semicircle();
  const Rational offset = beta - c.center;
  const Rational h = c.radius_sq - offset * offset;
  if (h.sign() < 0) return std::nullopt;
  return h / Rational(2);
}

Nesting nesting(const NumericalWall& w1, const NumericalWall& w2) {
  if (w1.is_vertical() || w2.is_vertical()) throw std::invalid_argument("nesting needs two semicircles");
  const auto& a = w1.as_semicircle();
  const auto& b = w2.as_semicircle();
  if (a == b) return {NestingKind::equal};
  const Rational dist_sq = (a.center - b.center) * (a.center - b.center);
  const Rational sum = a.radius_sq + b.radius_sq;
  const Rational four_prod = Rational(4) * a.radius_sq * b.radius_sq;
  const int inner = (a.radius_sq < b.radius_sq) ? 0 : 1;
  // d <= |r1 - r2|  <=>  2 r1 r2 <= R1 + R2 - d^2
  const Rational gap_in = sum - dist_sq;
  if (gap_in.sign() > 0 && four_prod <= gap_in * gap_in && a.radius_sq != b.radius_sq) {
    return {NestingKind::nested, inner};
  }
  // d >= r1 + r2  <=>  2 r1 r2 <= d^2 - R1 - R2
  const Rational gap_out = dist_sq - sum;
  if (gap_out.sign() > 0 && four_prod <= gap_out * gap_out) return {NestingKind::disjoint};
  return {NestingKind::crossing};
}

std::string to_string(NestingKind k) {
  switch (k) {
    case NestingKind::disjoint: return "disjoint";
    case NestingKind::nested: return "nested";
    case NestingKind::equal: return "equal";
    case NestingKind::crossing: return "crossing";
  }
  return "?";
}

Rational hyperbola_a_at(const ChernClass& v, const Rational& beta) {
  if (v.v0 == 0) throw std::invalid_argument("hyperbola of a rank zero class is vertical");
  return twist(v, beta).t2 / Rational(v.v0);
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TILTWALL_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

namespace {

// Feasible heights as an interval [lo, hi]; hi empty means unbounded.
struct HeightInterval {
  Rational lo;
  std::optional<Rational> hi;
  bool empty = false;

  // Intersect with {a : c + k a >= 0}.
  void require_nonnegative(const Rational& c, const Rational& k) {
    if (empty) return;
    if (k.is_zero()) {
      if (c.sign() < 0) empty = true;
      return;
    }
    const Rational bound = -c / k;
    if (k.sign() > 0) {
      lo = std::max(lo, bound);
    } else {
      hi = hi ? std::min(*hi, bound) : bound;
    }
    if (hi && *hi < lo) empty = true;
  }
};

// Integer hull containing every x with A x^2 + B x + C <= 0, A > 0.
std::pair<Integer, Integer> nonpositive_hull(const Rational& A, const Rational& B, const Rational& C) {
  auto q = [&](const Integer& x) {
    const Rational r(x);
    return A * r * r + B * r + C;
  };
  const Rational vertex = -B / (Rational(2) * A);
  const double disc = std::max(0.0, B.to_double() * B.to_double() - 4.0 * A.to_double() * C.to_double());
  const double root = std::sqrt(disc) / (2.0 * A.to_double());
  Integer lo(std::floor(vertex.to_double() - root) - 1.0);
  Integer hi(std::ceil(vertex.to_double() + root) + 1.0);
  lo = std::min(lo, vertex.floor());
  hi = std::max(hi, vertex.ceil());
  while (q(lo).sign() <= 0) lo -= 1;
  while (q(hi).sign() <= 0) hi += 1;
  return {lo, hi};
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

struct RawCandidate {
  NumericalWall wall;
  ChernClass witness;
  Rational cross_a;
};

struct SearchContext {
  const ChernClass& v;
  const Rational& beta;
  const EnumerationOptions& options;
  const SurfaceConfig& cfg;
  Rational t_v;
  Rational t2_v;
  Rational delta_v;
};

void scan_rank(const SearchContext& ctx, const Integer& w0, std::vector<RawCandidate>& out) {
  const Rational v0(ctx.v.v0);
  const Rational rw0(w0);
  const Integer step1(static_cast<long>(ctx.cfg.v1_step));
  const Integer den(static_cast<long>(ctx.cfg.v2_denominator));
  const Rational low = ctx.beta * rw0;  // t > 0  <=>  w1 > beta w0
  const Rational high = low + ctx.t_v;
  // w1 = k * step1 with low < w1 <= high
  const Integer k_first = floor_div(low.floor(), step1) + 1;
  Integer k_last = floor_div(high.floor(), step1);
  for (Integer k = k_first; k <= k_last; ++k) {
    const Integer w1 = k * step1;
    if (Rational(w1) <= low) continue;
    const Rational t = Rational(w1) - low;
    const Rational d = v0 * t - rw0 * ctx.t_v;
    if (d.is_zero()) continue;  // vertical or no wall
    // At the crossing height a, ch2^beta(w) = (t2_v t - a d) / t_v, so every
    // discriminant condition is linear in a.
    const Rational t_u = ctx.t_v - t;
    const Rational u0 = v0 - rw0;
    const Rational c1 = t * t - Rational(2) * t * rw0 * ctx.t2_v / ctx.t_v;
    const Rational k1 = Rational(2) * rw0 * d / ctx.t_v;
    const Rational c2 = t_u * t_u - Rational(2) * t_u * u0 * ctx.t2_v / ctx.t_v;
    const Rational k2 = -Rational(2) * u0 * d / ctx.t_v;
    HeightInterval heights{ctx.options.a_min, ctx.options.a_max};
    heights.require_nonnegative(c1, k1);
    heights.require_nonnegative(c2, k2);
    heights.require_nonnegative(ctx.delta_v - c1 - c2, -k1 - k2);
    if (heights.empty) continue;
    if (!heights.hi) throw std::logic_error("unbounded wall heights for " + ctx.v.str());
    // w2 = ch2^beta(w) + beta w1 - beta^2/2 w0, affine in a.
    const Rational shift = ctx.beta * Rational(w1) - ctx.beta * ctx.beta / Rational(2) * rw0;
    auto w2_at = [&](const Rational& a) { return (ctx.t2_v * t - a * d) / ctx.t_v + shift; };
    Rational w2_lo = w2_at(heights.lo);
    Rational w2_hi = w2_at(*heights.hi);
    if (w2_hi < w2_lo) std::swap(w2_lo, w2_hi);
    const Integer n_first = (w2_lo * Rational(den)).ceil();
    const Integer n_last = (w2_hi * Rational(den)).floor();
    for (Integer n = n_first; n <= n_last; ++n) {
      const ChernClass w{w0, w1, Rational(n, den)};
      const ChernClass u = ctx.v - w;
      const Rational dw = discriminant(w);
      const Rational du = discriminant(u);
      if (dw.sign() < 0 || du.sign() < 0) continue;
      const Rational total = dw + du;
      if (ctx.options.strict ? !(total < ctx.delta_v) : !(total <= ctx.delta_v)) continue;
      const auto wall = wall_between(ctx.v, w);
      if (!wall || !wall->is_semicircle()) continue;
      const auto a = wall_a_at(*wall, ctx.beta);
      if (!a || *a < ctx.options.a_min || (ctx.options.a_max && *ctx.options.a_max < *a)) continue;
      out.push_back({*wall, lex_less(u, w) ? u : w, *a});
    }
  }
}

}  // namespace

std::vector<WallCandidate> enumerate_candidates(const ChernClass& v, const Rational& beta_star,
                                                const EnumerationOptions& options, const SurfaceConfig& cfg) {
  cfg.validate();
  if (options.a_min.sign() <= 0) throw std::invalid_argument("a_min must be positive");
  if (options.a_max && *options.a_max < options.a_min) throw std::invalid_argument("a_max < a_min");
  const Rational delta_v = discriminant(v);
  if (delta_v.sign() < 0) throw std::invalid_argument("class has negative discriminant");
  if (v.v0 != 0) {
    const Rational mu(v.v1, v.v0);
    if ((v.v0 > 0 && beta_star >= mu) || (v.v0 < 0 && beta_star <= mu)) {
      throw std::invalid_argument("wrong side of vertical wall");
    }
  } else if (v.v1 <= 0) {
    throw std::invalid_argument("rank zero class needs v1 > 0");
  }
  const TwistedClass tv = twist(v, beta_star);
  SearchContext ctx{v, beta_star, options, cfg, tv.t1, tv.t2, delta_v};

  // |w0| bound: Delta(w) >= 0 at a = a_min with t = t_v, hulled with the
  // segment between 0 and v0 where Delta(w) grows with a.
  const Rational nu = (tv.t2 - options.a_min * tv.t0) / tv.t1;
  auto [lo, hi] = nonpositive_hull(Rational(2) * options.a_min, Rational(2) * tv.t1 * nu, -tv.t1 * tv.t1);
  lo = std::min(lo, std::min(Integer(0), v.v0));
  hi = std::max(hi, std::max(Integer(0), v.v0));
  // Im Z(w) cannot change sign along a wall (the vertical wall of w would
  // need a = -Delta(w) / (2 w0^2) <= 0), so 0 <= t_w <= t_v holds at both
  // ends s -/+ rho, giving |2 w0 - v0| rho <= t_v(s). The ratio t_v(s) / rho
  // is largest on the smallest wall through (beta_star, a_min).
  {
    const Rational v0(v.v0);
    Rational s;
    if (v.v0 == 0) {
      s = v.v2 / Rational(v.v1);  // concentric walls
    } else {
      const Rational mu = Rational(v.v1) / v0;
      s = (mu + beta_star) / Rational(2) +
          (Rational(2) * options.a_min + delta_v / (v0 * v0)) / (Rational(2) * (beta_star - mu));
    }
    const Rational rho_sq = (beta_star - s) * (beta_star - s) + Rational(2) * options.a_min;
    const Rational t_s = Rational(v.v1) - s * v0;
    auto fits = [&](const Integer& w0) {
      const Rational d(Integer(2 * w0 - v.v0));
      return d * d * rho_sq <= t_s * t_s;
    };
    const double half = t_s.to_double() / (2.0 * std::sqrt(rho_sq.to_double()));
    Integer a(std::floor(v0.to_double() / 2.0 - half));
    Integer b(std::ceil(v0.to_double() / 2.0 + half));
    while (!fits(a) && a < b) a += 1;
    while (fits(a - 1)) a -= 1;
    while (!fits(b) && b > a) b -= 1;
    while (fits(b + 1)) b += 1;
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
  const Integer step0(static_cast<long>(cfg.v0_step));
  std::vector<Integer> ranks;
  for (Integer k = ceil_div(lo, step0); k * step0 <= hi; ++k) ranks.push_back(k * step0);

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(ranks.size())));
  std::vector<std::vector<RawCandidate>> found(threads);
  if (threads == 1) {
    for (const auto& w0 : ranks) scan_rank(ctx, w0, found[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned i = 0; i < threads; ++i) {
      pool.emplace_back([&, i] {
        try {
          for (std::size_t j = i; j < ranks.size(); j += threads) scan_rank(ctx, ranks[j], found[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  auto key_less = [](const NumericalWall& a, const NumericalWall& b) {
    const auto& x = a.as_semicircle();
    const auto& y = b.as_semicircle();
    if (x.center != y.center) return x.center < y.center;
    return x.radius_sq < y.radius_sq;
  };
  std::map<NumericalWall, WallCandidate, decltype(key_less)> by_wall(key_less);
  for (auto& bucket : found) {
    for (auto& raw : bucket) {
      auto it = by_wall.find(raw.wall);
      if (it == by_wall.end()) {
        by_wall.emplace(raw.wall, WallCandidate{raw.wall, raw.witness, {raw.witness}, raw.cross_a});
      } else {
        it->second.witnesses.push_back(raw.witness);
      }
    }
  }
  std::vector<WallCandidate> out;
  out.reserve(by_wall.size());
  for (auto& [wall, cand] : by_wall) {
    std::sort(cand.witnesses.begin(), cand.witnesses.end(), lex_less);
    cand.witnesses.erase(std::unique(cand.witnesses.begin(), cand.witnesses.end()), cand.witnesses.end());
    cand.witness = cand.witnesses.front();
    out.push_back(std::move(cand));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const WallCandidate& a, const WallCandidate& b) { return b.cross_a < a.cross_a; });
  return out;
}

namespace {

// Sign of nu(v) - nu(w) with +infinity == +infinity.
int slope_difference_sign(const ChernClass& v, const ChernClass& w, const Rational& a, const Rational& beta) {
  const auto c = tilt_slope(v, a, beta) <=> tilt_slope(w, a, beta);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Rational grid_floor(double x, const Rational& step) {
  return Rational(Integer(std::floor(x / step.to_double()))) * step;
}

}  // namespace

bool slope_crossing_oracle(const ChernClass& v, const ChernClass& w, const NumericalWall& wall,
                           const Rational& grid_step) {
  if (grid_step.sign() <= 0) return false;
  const Rational margin = Rational(8) * grid_step;
  if (wall.is_vertical()) {
    const Rational& b0 = wall.as_vertical().beta;
    std::vector<Rational> betas{b0};
    for (Rational b = grid_floor((b0 - margin).to_double(), grid_step); b <= b0 + margin; b += grid_step) {
      if (b != b0) betas.push_back(b);
    }
    for (Rational a = grid_step; a <= Rational(2) * margin; a += grid_step) {
      for (const auto& b : betas) {
        const bool equal = slope_difference_sign(v, w, a, b) == 0;
        if (equal != (b == b0)) return false;
      }
    }
    return true;
  }

  // Inside and outside the reported semicircle the sign of nu(v) - nu(w),
  // corrected by the signs of the imaginary parts, must be constant and
  // opposite; on the wall it must vanish.
  const auto& c = wall.as_semicircle();
  const double radius = std::sqrt(c.radius_sq.to_double());
  const Rational b_lo = grid_floor(c.center.to_double() - radius, grid_step) - margin;
  const Rational b_hi = grid_floor(c.center.to_double() + radius, grid_step) + grid_step + margin;
  const Rational a_hi = c.radius_sq / Rational(2) + margin;
  int inside_sign = 0;
  int outside_sign = 0;
  for (Rational b = b_lo; b <= b_hi; b += grid_step) {
    const TwistedClass tv = twist(v, b);
    const TwistedClass tw = twist(w, b);
    if (tv.t1.is_zero() || tw.t1.is_zero()) continue;
    const int heart = tv.t1.sign() * tw.t1.sign();
    const auto top = wall_a_at(wall, b);
    for (Rational a = grid_step; a <= a_hi; a += grid_step) {
      const int s = slope_difference_sign(v, w, a, b) * heart;
      const int side = top ? (a < *top ? -1 : (a == *top ? 0 : 1)) : 1;
      if (side == 0) {
        if (s != 0) return false;
        continue;
      }
      if (s == 0) return false;
      int& expected = (side < 0) ? inside_sign : outside_sign;
      if (expected == 0) expected = s;
      if (expected != s) return false;
    }
  }
  return inside_sign != 0 && outside_sign != 0 && inside_sign == -outside_sign;
}

}  // namespace tiltwall
