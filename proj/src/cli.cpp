#include "tiltwall/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tiltwall/catalog.hpp"
#include "tiltwall/checks.hpp"
#include "tiltwall/render.hpp"

namespace tiltwall {

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string preset = "ppas";
  std::string config_path;
  std::string format = "table";
  bool approx = false;
};

void add_common(CLI::App* cmd, Common& c, const std::vector<std::string>& formats) {
  cmd->add_option("--preset", c.preset, "Surface preset: ppas or abelian-(1,2)")->capture_default_str();
  cmd->add_option("--config", c.config_path, "Surface config JSON file (overrides --preset)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_flag("--approx", c.approx, "Add 6-digit decimal columns");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SurfaceConfig surface(const Common& c) {
  if (!c.config_path.empty()) return config_from_json(parse_json_text(read_file(c.config_path)));
  return SurfaceConfig::preset(c.preset);
}

// A tree file holds either a tree or an exported scenario.
HNTree load_tree_file(const std::string& path) {
  const Json j = parse_json_text(read_file(path));
  if (j.is_object() && j.contains("id") && j.contains("tree")) {
    if (j.at("tree").is_null()) throw UsageError("scenario has no tree");
    return tree_from_json(j.at("tree"));
  }
  return tree_from_json(j);
}

struct TreeSource {
  std::string scenario;
  std::string tree_path;
  std::string cls;
};

void add_tree_source(CLI::App* cmd, TreeSource& s, bool allow_class) {
  auto* a = cmd->add_option("--scenario", s.scenario, "Catalog scenario id");
  auto* b = cmd->add_option("--tree", s.tree_path, "Tree JSON file");
  a->excludes(b);
  if (allow_class) cmd->add_option("--class", s.cls, "Class v0,v1,v2 with a trivial tree")->excludes(a)->excludes(b);
}

HNTree resolve_tree(const TreeSource& s, const Common& c, const SurfaceConfig** cfg_out, SurfaceConfig& storage) {
  if (!s.scenario.empty()) {
    const Scenario& sc = load_scenario(s.scenario);
    if (!sc.tree) throw UsageError("scenario '" + sc.id + "' records walls only");
    storage = sc.config;
    *cfg_out = &storage;
    return *sc.tree;
  }
  storage = surface(c);
  *cfg_out = &storage;
  if (!s.tree_path.empty()) return load_tree_file(s.tree_path);
  if (!s.cls.empty()) return HNTree::trivial(ChernClass::parse(s.cls));
  throw UsageError("a tree source is required (--scenario, --tree or --class)");
}

void require_valid(const HNTree& t, const SurfaceConfig* cfg) {
  ValidationReport r = validate_tree(t, cfg);
  if (!r.ok()) throw TreeValidationError(std::move(r));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tilt-stability walls, destabilization trees and Chern degree functions (exact arithmetic)", "tiltwall"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tiltwall 1.0");

  // walls
  Common walls_c;
  std::string w_class, w_beta, w_amin = "1/100", w_amax;
  bool w_strict = false;
  unsigned w_threads = 0;
  auto* walls = app.add_subcommand("walls", "Candidate walls crossing the segment beta = B, a >= amin (a = alpha^2/2)");
  walls->add_option("--class", w_class, "Class v0,v1,v2 = (L^2 ch0, L ch1, ch2)")->required();
  walls->add_option("--beta", w_beta, "Query line beta (rational)")->required();
  walls->add_option("--amin", w_amin, "Lowest height a (positive rational)")->capture_default_str();
  walls->add_option("--amax", w_amax, "Highest height a (default: unbounded)");
  walls->add_flag("--strict", w_strict, "Require Delta(w) + Delta(v-w) < Delta(v)");
  walls->add_option("--threads", w_threads, "Worker threads (default: TILTWALL_THREADS or hardware)");
  add_common(walls, walls_c, {"table", "json", "csv", "svg"});
  walls->footer("CSV columns: center,radius_sq,cross_a,witness_v0,witness_v1,witness_v2"
                "[,radius_approx,cross_a_approx]");

  // chd
  Common chd_c;
  TreeSource chd_s;
  int chd_k = 0;
  bool chd_dual = false, chd_breaks = false;
  std::string chd_from, chd_to, chd_step = "1/8";
  auto* chd = app.add_subcommand("chd", "Assemble chd^0 or chd^1 from a destabilization tree");
  add_tree_source(chd, chd_s, true);
  chd->add_option("--k", chd_k, "Which function: 0 or 1")->check(CLI::IsMember({0, 1}))->capture_default_str();
  chd->add_flag("--dual", chd_dual, "Reflect x -> -x (Serre dual function)");
  chd->add_flag("--breakpoints", chd_breaks, "Also print the breakpoint report (table format)");
  chd->add_option("--from", chd_from, "CSV/SVG window start");
  chd->add_option("--to", chd_to, "CSV/SVG window end");
  chd->add_option("--step", chd_step, "CSV sampling step")->capture_default_str();
  add_common(chd, chd_c, {"table", "json", "csv", "svg"});
  chd->footer("CSV columns: x,value[,value_approx]; values are exact");

  // validate
  Common val_c;
  TreeSource val_s;
  auto* val = app.add_subcommand("validate", "Check the numerical invariants of a destabilization tree");
  add_tree_source(val, val_s, false);
  add_common(val, val_c, {"table", "json"});

  // hn
  Common hn_c;
  TreeSource hn_s;
  std::string hn_a, hn_beta;
  auto* hn = app.add_subcommand("hn", "HN factors of the root at (a, beta)");
  add_tree_source(hn, hn_s, true);
  hn->add_option("--a", hn_a, "Height a = alpha^2/2")->required();
  hn->add_option("--beta", hn_beta, "beta")->required();
  add_common(hn, hn_c, {"table", "json"});

  // catalog
  std::string cat_id;
  bool cat_export = false;
  auto* cat = app.add_subcommand("catalog", "List or show the built-in scenarios");
  cat->add_option("--id", cat_id, "Scenario id");
  cat->add_flag("--export", cat_export, "Print JSON (all scenarios unless --id)");

  // check
  CheckOptions chk_opt;
  std::string chk_format = "table";
  auto* chk = app.add_subcommand("check", "Run every catalog regression and property suite");
  chk->add_option("--seed", chk_opt.seed, "Random seed")->capture_default_str();
  chk->add_option("--format", chk_format, "Output format")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (walls->parsed()) {
      const SurfaceConfig cfg = surface(walls_c);
      const ChernClass v = ChernClass::parse(w_class);
      require_lattice(v, cfg);
      const Rational beta = Rational::parse(w_beta);
      EnumerationOptions o;
      o.a_min = Rational::parse(w_amin);
      if (!w_amax.empty()) o.a_max = Rational::parse(w_amax);
      o.strict = w_strict;
      o.threads = w_threads ? w_threads : default_thread_count();
      const auto cands = enumerate_candidates(v, beta, o, cfg);
      if (walls_c.format == "json") {
        Json j{{"class", to_json(v)}, {"beta", beta.str()}, {"a_min", o.a_min.str()}, {"config", to_json(cfg)}};
        j["a_max"] = o.a_max ? Json(o.a_max->str()) : Json(nullptr);
        j["walls"] = Json::array();
        for (const auto& c : cands) j["walls"].push_back(to_json(c));
        out << j.dump(2) << "\n";
      } else if (walls_c.format == "csv") {
        out << render_candidates_csv(cands, walls_c.approx);
      } else if (walls_c.format == "svg") {
        out << render_walls_svg(v, beta, cands);
      } else {
        out << "class " << v << ", beta = " << beta << ", a >= " << o.a_min;
        if (o.a_max) out << ", a <= " << *o.a_max;
        out << ", Delta = " << discriminant(v) << "\n";
        out << render_candidates_table(cands, walls_c.approx);
      }
      return kOk;
    }

    if (chd->parsed()) {
      SurfaceConfig storage;
      const SurfaceConfig* cfg = nullptr;
      const HNTree tree = resolve_tree(chd_s, chd_c, &cfg, storage);
      require_valid(tree, chd_s.cls.empty() ? cfg : nullptr);
      PiecewiseQuadratic f = chd_k == 0 ? assemble_chd0(tree) : assemble_chd1(tree);
      if (chd_dual) f = serre_dual_function(f);
      auto [lo, hi] = default_window(f);
      if (!chd_from.empty()) lo = Rational::parse(chd_from);
      if (!chd_to.empty()) hi = Rational::parse(chd_to);
      if (chd_c.format == "json") {
        Json j{{"class", to_json(tree.root_class())}, {"k", chd_k}, {"dual", chd_dual}, {"function", to_json(f)}};
        j["breakpoints"] = Json::array();
        for (const auto& r : classify_breakpoints(tree)) j["breakpoints"].push_back(to_json(r));
        out << j.dump(2) << "\n";
      } else if (chd_c.format == "csv") {
        out << render_function_csv(f, lo, hi, Rational::parse(chd_step), chd_c.approx);
      } else if (chd_c.format == "svg") {
        out << render_function_svg(f, lo, hi);
      } else {
        out << "chd" << chd_k << (chd_dual ? " (reflected)" : "") << " of " << tree.root_class() << "\n";
        out << render_function_table(f, chd_c.approx);
        if (chd_breaks) out << "\n" << render_breakpoints_table(classify_breakpoints(tree), chd_c.approx);
      }
      return kOk;
    }

    if (val->parsed()) {
      SurfaceConfig storage;
      const SurfaceConfig* cfg = nullptr;
      const HNTree tree = resolve_tree(val_s, val_c, &cfg, storage);
      const auto report = validate_tree(tree, cfg);
      if (val_c.format == "json") {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << render_validation(report);
      }
      return report.ok() ? kOk : kInvalid;
    }

    if (hn->parsed()) {
      SurfaceConfig storage;
      const SurfaceConfig* cfg = nullptr;
      const HNTree tree = resolve_tree(hn_s, hn_c, &cfg, storage);
      require_valid(tree, hn_s.cls.empty() ? cfg : nullptr);
      const auto factors = hn_factors_at(tree, Rational::parse(hn_a), Rational::parse(hn_beta));
      if (hn_c.format == "json") {
        Json j = Json::array();
        for (const auto& f : factors) j.push_back(to_json(f));
        out << j.dump(2) << "\n";
      } else {
        out << render_factors_table(factors, hn_c.approx);
      }
      return kOk;
    }

    if (cat->parsed()) {
      if (cat_export) {
        if (!cat_id.empty()) {
          out << export_scenario(load_scenario(cat_id)).dump(2) << "\n";
        } else {
          Json j = Json::array();
          for (const auto& s : all_scenarios()) j.push_back(export_scenario(s));
          out << j.dump(2) << "\n";
        }
      } else if (!cat_id.empty()) {
        const Scenario& s = load_scenario(cat_id);
        out << "id       " << s.id << "\npreset   " << s.preset << "\nclass    " << s.cls
            << "\nDelta    " << discriminant(s.cls) << "\n";
        if (s.expected_chd0) out << "chd0     " << *s.expected_chd0 << "\n";
        for (const auto& w : s.expected_walls) out << "wall     " << w.wall << " for " << w.cls << "\n";
        out << "notes    " << s.notes << "\n";
      } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : all_scenarios()) {
          rows.push_back({s.id, s.preset, s.cls.str(), s.tree ? (s.trivial ? "trivial" : "tree") : "walls only"});
        }
        out << render_table({"id", "preset", "class", "kind"}, rows);
      }
      return kOk;
    }

    if (chk->parsed()) {
      chk_opt.threads = default_thread_count();
      const auto results = run_all_checks(chk_opt);
      bool ok = true;
      for (const auto& r : results) ok = ok && r.passed;
      if (chk_format == "json") {
        Json j = Json::array();
        for (const auto& r : results) {
          j.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail},
                       {"seconds", r.seconds}});
        }
        out << j.dump(2) << "\n";
      } else {
        out << render_check_matrix(results);
      }
      return ok ? kOk : kInvalid;
    }
  } catch (const TreeValidationError& e) {
    err << "tree validation failed:\n" << render_validation(e.report());
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tiltwall
