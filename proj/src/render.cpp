#include "tiltwall/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tiltwall {

std::string approx(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

namespace {

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string interval_text(const PiecewiseQuadratic& f, std::size_t i) {
  const auto& b = f.breakpoints;
  if (b.empty()) return "all x";
  if (i == 0) return "x <= " + b[0].str();
  if (i == b.size()) return "x >= " + b[i - 1].str();
  return b[i - 1].str() + " <= x <= " + b[i].str();
}

std::string leaf_list(const std::vector<LeafInfo>& leaves) {
  std::string out;
  for (const auto& l : leaves) {
    if (!out.empty()) out += " ";
    out += l.cls.str();
    if (!l.label.empty()) out += "[" + l.label + "]";
  }
  return out;
}

// Maps (beta, alpha) or (x, y) to pixels with a common scale on both axes
// unless told otherwise.
struct Frame {
  double x0, x1, y0, y1;
  double width = 640, height = 400, margin = 40;
  double sx() const { return (width - 2 * margin) / (x1 - x0); }
  double sy() const { return (height - 2 * margin) / (y1 - y0); }
  double px(double x) const { return margin + (x - x0) * sx(); }
  double py(double y) const { return height - margin - (y - y0) * sy(); }
};

std::string svg_open(const Frame& fr) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(fr.width) << "\" height=\"" << fixed(fr.height)
     << "\" viewBox=\"0 0 " << fixed(fr.width) << " " << fixed(fr.height) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string render_candidates_table(const std::vector<WallCandidate>& cands, bool with_approx) {
  std::vector<std::string> header{"#", "center", "radius_sq", "cross_a", "witness"};
  if (with_approx) {
    header.push_back("radius~");
    header.push_back("cross_a~");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto& s = cands[i].wall.as_semicircle();
    std::vector<std::string> r{std::to_string(i + 1), s.center.str(), s.radius_sq.str(), cands[i].cross_a.str(),
                               cands[i].witness.str()};
    if (with_approx) {
      r.push_back(approx(std::sqrt(s.radius_sq.to_double())));
      r.push_back(approx(cands[i].cross_a.to_double()));
    }
    rows.push_back(std::move(r));
  }
  return render_table(header, rows);
}

std::string render_candidates_csv(const std::vector<WallCandidate>& cands, bool with_approx) {
  std::ostringstream os;
  os << "center,radius_sq,cross_a,witness_v0,witness_v1,witness_v2";
  if (with_approx) os << ",radius_approx,cross_a_approx";
  os << "\n";
  for (const auto& c : cands) {
    const auto& s = c.wall.as_semicircle();
    os << s.center << "," << s.radius_sq << "," << c.cross_a << "," << to_string(c.witness.v0) << ","
       << to_string(c.witness.v1) << "," << c.witness.v2;
    if (with_approx) os << "," << approx(std::sqrt(s.radius_sq.to_double())) << "," << approx(c.cross_a.to_double());
    os << "\n";
  }
  return os.str();
}

std::string render_function_table(const PiecewiseQuadratic& f, bool with_approx) {
  std::vector<std::string> header{"interval", "piece"};
  if (with_approx) header.push_back("left end~");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    std::vector<std::string> r{interval_text(f, i), f.pieces[i].str()};
    if (with_approx) r.push_back(i == 0 ? "-inf" : approx(f.breakpoints[i - 1].to_double()));
    rows.push_back(std::move(r));
  }
  return render_table(header, rows);
}

std::string render_function_csv(const PiecewiseQuadratic& f, const Rational& lo, const Rational& hi,
                                const Rational& step, bool with_approx) {
  if (step.sign() <= 0) throw std::invalid_argument("step must be positive");
  std::ostringstream os;
  os << "x,value" << (with_approx ? ",value_approx" : "") << "\n";
  for (Rational x = lo; x <= hi; x += step) {
    const QI y = f(QI(x));
    os << x << "," << y;
    if (with_approx) os << "," << approx(y.to_double());
    os << "\n";
  }
  return os.str();
}

std::string render_breakpoints_table(const std::vector<BreakpointReport>& reports, bool with_approx) {
  std::vector<std::string> header{"x", "jump", "differentiable", "overlap", "leaves", "tags"};
  if (with_approx) header.insert(header.begin() + 1, "x~");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    std::string tags;
    for (const auto& t : r.tags) {
      if (!tags.empty()) tags += "; ";
      tags += t.conditions + " (" + to_string(t.status) + ")";
    }
    std::vector<std::string> row{r.x.str(), r.derivative_jump.str(), r.differentiable ? "yes" : "no",
                                 r.overlap ? "yes" : "no", leaf_list(r.contributing_leaves), tags.empty() ? "-" : tags};
    if (with_approx) row.insert(row.begin() + 1, approx(r.x.to_double()));
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string render_factors_table(const std::vector<HNFactor>& factors, bool with_approx) {
  std::vector<std::string> header{"#", "class", "slope", "label"};
  if (with_approx) header.push_back("slope~");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::string> r{std::to_string(i + 1), factors[i].cls.str(), factors[i].slope.str(),
                               factors[i].label.empty() ? "-" : factors[i].label};
    if (with_approx) r.push_back(factors[i].slope.is_infinite() ? "inf" : approx(factors[i].slope.value().to_double()));
    rows.push_back(std::move(r));
  }
  return render_table(header, rows);
}

std::string render_validation(const ValidationReport& report) {
  if (report.ok()) return "ok\n";
  std::ostringstream os;
  for (const auto& v : report.violations) os << v.path << ": " << v.invariant << ": " << v.detail << "\n";
  return os.str();
}

std::string render_walls_svg(const ChernClass& v, const Rational& beta_star, const std::vector<WallCandidate>& cands) {
  double lo = beta_star.to_double() - 1, hi = beta_star.to_double() + 1, top = 1;
  std::optional<double> mu;
  if (v.v0 != 0) mu = Rational(v.v1, v.v0).to_double();
  if (mu) {
    lo = std::min(lo, *mu - 1);
    hi = std::max(hi, *mu + 1);
  }
  for (const auto& c : cands) {
    const auto& s = c.wall.as_semicircle();
    const double r = std::sqrt(s.radius_sq.to_double());
    lo = std::min(lo, s.center.to_double() - r - 0.5);
    hi = std::max(hi, s.center.to_double() + r + 0.5);
    top = std::max(top, r * 1.15);
  }
  // equal scales keep semicircles round
  Frame fr{lo, hi, 0, top};
  fr.height = std::min(600.0, std::max(200.0, fr.margin * 2 + (fr.width - 2 * fr.margin) * top / (hi - lo)));
  const double scale = std::min(fr.sx(), fr.sy());
  fr.width = 2 * fr.margin + scale * (hi - lo);
  fr.height = 2 * fr.margin + scale * top;

  std::ostringstream os;
  os << svg_open(fr);
  os << "<g class=\"axis\" stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << fixed(fr.px(lo)) << "\" y1=\"" << fixed(fr.py(0)) << "\" x2=\"" << fixed(fr.px(hi))
     << "\" y2=\"" << fixed(fr.py(0)) << "\"/>\n</g>\n";
  os << "<text x=\"" << fixed(fr.px(hi) - 10) << "\" y=\"" << fixed(fr.py(0) + 16)
     << "\" font-size=\"12\">beta</text>\n";
  for (long k = static_cast<long>(std::ceil(lo)); k <= static_cast<long>(std::floor(hi)); ++k) {
    os << "<text class=\"tick\" x=\"" << fixed(fr.px(k)) << "\" y=\"" << fixed(fr.py(0) + 14)
       << "\" font-size=\"10\" text-anchor=\"middle\">" << k << "</text>\n";
  }
  if (mu) {
    os << "<line class=\"vertical-wall\" x1=\"" << fixed(fr.px(*mu)) << "\" y1=\"" << fixed(fr.py(0)) << "\" x2=\""
       << fixed(fr.px(*mu)) << "\" y2=\"" << fixed(fr.py(top)) << "\" stroke=\"green\" stroke-dasharray=\"6 4\"/>\n";
  }
  // H_v: alpha^2 = 2 ch2^beta(v) / v0, sampled at rational beta
  if (v.v0 != 0) {
    const int n = 240;
    const Rational rlo = Rational(Integer(static_cast<long>(std::floor(lo * 48))), Integer(48));
    const Rational span = Rational(Integer(static_cast<long>(std::ceil(hi * 48))), Integer(48)) - rlo;
    std::string pts;
    for (int i = 0; i <= n; ++i) {
      const Rational beta = rlo + span * Rational(Integer(i), Integer(n));
      const Rational a = hyperbola_a_at(v, beta);
      if (a.sign() < 0) continue;
      const double alpha = std::sqrt(2 * a.to_double());
      if (alpha > top) continue;
      if (!pts.empty()) pts += " ";
      pts += fixed(fr.px(beta.to_double())) + "," + fixed(fr.py(alpha));
    }
    os << "<polyline class=\"hyperbola\" points=\"" << pts
       << "\" fill=\"none\" stroke=\"orange\" stroke-dasharray=\"4 3\"/>\n";
  } else {
    // v0 = 0: H_v is the vertical line beta = v2 / v1
    const double b = (v.v2 / Rational(v.v1)).to_double();
    os << "<polyline class=\"hyperbola\" points=\"" << fixed(fr.px(b)) << "," << fixed(fr.py(0)) << " "
       << fixed(fr.px(b)) << "," << fixed(fr.py(top)) << "\" fill=\"none\" stroke=\"orange\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "<line class=\"query\" x1=\"" << fixed(fr.px(beta_star.to_double())) << "\" y1=\"" << fixed(fr.py(0))
     << "\" x2=\"" << fixed(fr.px(beta_star.to_double())) << "\" y2=\"" << fixed(fr.py(top))
     << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto& s = cands[i].wall.as_semicircle();
    const double c = s.center.to_double(), r = std::sqrt(s.radius_sq.to_double());
    const double rp = r * scale;
    os << "<path class=\"wall\" d=\"M " << fixed(fr.px(c - r)) << " " << fixed(fr.py(0)) << " A " << fixed(rp) << " "
       << fixed(rp) << " 0 0 1 " << fixed(fr.px(c + r)) << " " << fixed(fr.py(0))
       << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    os << "<text class=\"wall-label\" x=\"" << fixed(fr.px(c)) << "\" y=\"" << fixed(fr.py(r) - 4)
       << "\" font-size=\"11\" text-anchor=\"middle\">W" << (i + 1) << " " << esc(s.center.str()) << ", "
       << esc(s.radius_sq.str()) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::pair<Rational, Rational> default_window(const PiecewiseQuadratic& f) {
  if (f.breakpoints.empty()) return {Rational(-2), Rational(2)};
  const long first = static_cast<long>(std::floor(f.breakpoints.front().to_double()));
  const long last = static_cast<long>(std::ceil(f.breakpoints.back().to_double()));
  return {Rational(std::min(first, 0L) - 1), Rational(last + 1)};
}

std::string render_function_svg(const PiecewiseQuadratic& f, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("empty plotting window");
  const int n = 400;
  std::vector<std::pair<double, double>> pts;
  double ymin = 0, ymax = 1;
  for (int i = 0; i <= n; ++i) {
    const Rational x = lo + (hi - lo) * Rational(Integer(i), Integer(n));
    const double y = f(QI(x)).to_double();
    pts.emplace_back(x.to_double(), y);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  Frame fr{lo.to_double(), hi.to_double(), ymin, ymax * 1.05};
  std::ostringstream os;
  os << svg_open(fr);
  os << "<g class=\"axis\" stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << fixed(fr.px(fr.x0)) << "\" y1=\"" << fixed(fr.py(0)) << "\" x2=\"" << fixed(fr.px(fr.x1))
     << "\" y2=\"" << fixed(fr.py(0)) << "\"/>\n";
  if (fr.x0 <= 0 && 0 <= fr.x1) {
    os << "<line x1=\"" << fixed(fr.px(0)) << "\" y1=\"" << fixed(fr.py(fr.y0)) << "\" x2=\"" << fixed(fr.px(0))
       << "\" y2=\"" << fixed(fr.py(fr.y1)) << "\"/>\n";
  }
  os << "</g>\n";
  for (long k = static_cast<long>(std::ceil(fr.x0)); k <= static_cast<long>(std::floor(fr.x1)); ++k) {
    os << "<text class=\"tick\" x=\"" << fixed(fr.px(k)) << "\" y=\"" << fixed(fr.py(0) + 14)
       << "\" font-size=\"10\" text-anchor=\"middle\">" << k << "</text>\n";
  }
  for (const auto& b : f.breakpoints) {
    const double x = b.to_double();
    if (x < fr.x0 || x > fr.x1) continue;
    os << "<line class=\"breakpoint\" x1=\"" << fixed(fr.px(x)) << "\" y1=\"" << fixed(fr.py(fr.y0)) << "\" x2=\""
       << fixed(fr.px(x)) << "\" y2=\"" << fixed(fr.py(fr.y1)) << "\" stroke=\"gray\" stroke-dasharray=\"3 3\"/>\n";
    os << "<text class=\"breakpoint-label\" x=\"" << fixed(fr.px(x)) << "\" y=\"" << fixed(fr.margin - 6)
       << "\" font-size=\"10\" text-anchor=\"middle\">" << esc(b.str()) << "</text>\n";
  }
  std::string path;
  for (const auto& [x, y] : pts) {
    if (!path.empty()) path += " ";
    path += fixed(fr.px(x)) + "," + fixed(fr.py(y));
  }
  os << "<polyline class=\"graph\" points=\"" << path << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tiltwall
