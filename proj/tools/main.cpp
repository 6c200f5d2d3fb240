// Command-line driver: single runs, convergence tables, shock-profile
// comparisons, timing benchmarks, and the kernel property suite, emitting CSV
// files under an output directory.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aoweno/aoweno.hpp"

namespace {

using namespace aoweno;

struct Options {
  std::string config_path;
  std::string problem;
  std::string scheme;
  std::string schemes;      // comma list (shock/bench)
  std::string resolutions;  // comma list (converge)
  std::string jump_policy;
  std::string out_dir, cache_dir;
  int n = 0, ny = 0, repeats = 0;
  bool kh_as_printed = false;
  bool seed_cache = false;

  CLI::App* cmd = nullptr;
  bool given(const std::string& flag) const {
    const CLI::Option* opt = cmd->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  }
};

void add_common_flags(CLI::App* cmd, Options& o) {
  o.cmd = cmd;
  cmd->add_option("--config", o.config_path, "INI-style configuration file");
  cmd->add_option("--problem", o.problem, "catalog problem name");
  cmd->add_option("--n", o.n, "grid resolution override (x intervals)");
  cmd->add_option("--ny", o.ny, "y resolution override (2D only)");
  cmd->add_option("--out-dir", o.out_dir, "output directory (default out)");
  cmd->add_option("--cache-dir", o.cache_dir,
                  "reference cache directory (default cache)");
  cmd->add_option("--jump-policy", o.jump_policy,
                  "state for a node exactly on an initial jump: left|right|average");
  cmd->add_flag("--kh-as-printed", o.kh_as_printed,
                "kelvin_helmholtz: repeat the first perturbation bump verbatim");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

JumpPolicy jump_from_string(const std::string& s) {
  if (s == "left") return JumpPolicy::left_state;
  if (s == "right") return JumpPolicy::right_state;
  if (s == "average") return JumpPolicy::average;
  throw ConfigError("unknown jump policy '" + s +
                    "' (expected one of: left right average)");
}

Beta5 beta5_from_string(const std::string& s) {
  if (s == "v1") return Beta5::v1;
  if (s == "v2") return Beta5::v2;
  if (s == "v3") return Beta5::v3;
  throw ConfigError("unknown beta5 variant '" + s + "' (expected one of: v1 v2 v3)");
}

/// Everything a subcommand needs, with precedence flags > config > defaults.
struct Session {
  Config cfg;
  Problem problem;
  SchemeParams scheme;
  std::vector<SchemeParams> scheme_list;
  int nx = 0, ny = 0;
  int repeats = 3;
  std::vector<int> resolutions;
  std::string out_dir = "out";
  std::string cache_dir = "cache";
};

Session make_session(const Options& o, bool needs_problem) {
  Session s;
  if (!o.config_path.empty()) {
    s.cfg = Config::parse_file(o.config_path);
    s.cfg.validate(config_schema());
  }
  const Config& cfg = s.cfg;

  s.out_dir = o.given("--out-dir") ? o.out_dir
                                   : cfg.get_string("output", "dir", "out");
  s.cache_dir = o.given("--cache-dir")
                    ? o.cache_dir
                    : cfg.get_string("output", "cache_dir", "cache");

  const std::string pname =
      o.given("--problem") ? o.problem : cfg.get_string("problem", "name", "");
  if (needs_problem) {
    if (pname.empty())
      throw ConfigError("no problem selected: pass --problem or set [problem] name");
    ProblemOptions po;
    const std::string jp = o.given("--jump-policy")
                               ? o.jump_policy
                               : cfg.get_string("problem", "jump_policy", "");
    if (!jp.empty()) po.jump = jump_from_string(jp);
    po.kh_as_printed = o.given("--kh-as-printed")
                           ? o.kh_as_printed
                           : cfg.get_bool("problem", "kh_as_printed", false);
    s.problem = build_problem(pname, po);

    Problem& p = s.problem;
    if (cfg.has("problem", "t_end"))
      p.t_end = cfg.get_double("problem", "t_end", p.t_end);
    if (cfg.has("run", "cfl")) p.step.cfl = cfg.get_double("run", "cfl", p.step.cfl);
    if (cfg.has("run", "dt_mode")) {
      const std::string m = cfg.get_string("run", "dt_mode", "");
      if (m == "cfl")
        p.step.mode = StepControl::Mode::Cfl;
      else if (m == "power")
        p.step.mode = StepControl::Mode::Power;
      else
        throw ConfigError("unknown dt_mode '" + m + "' (expected: cfl power)");
    }
    if (cfg.has("run", "dt_coeff"))
      p.step.coeff = cfg.get_double("run", "dt_coeff", p.step.coeff);
    if (cfg.has("run", "dt_exponent"))
      p.step.exponent = cfg.get_double("run", "dt_exponent", p.step.exponent);
    if (cfg.has("scheme", "characteristic"))
      p.characteristic = cfg.get_bool("scheme", "characteristic", true);

    s.nx = o.given("--n") ? o.n : cfg.get_int("problem", "n", p.x.n);
    s.ny = o.given("--ny") ? o.ny : cfg.get_int("problem", "ny", 0);
    if (s.nx < 8) throw ConfigError("resolution must be at least 8 intervals");
  }

  const auto apply_tuning = [&cfg](SchemeParams sp) {
    sp.gamma_hi = cfg.get_double("scheme", "gamma_hi", sp.gamma_hi);
    sp.gamma_lo = cfg.get_double("scheme", "gamma_lo", sp.gamma_lo);
    sp.gamma_avg = cfg.get_double("scheme", "gamma_avg", sp.gamma_avg);
    sp.epsilon = cfg.get_double("scheme", "epsilon", sp.epsilon);
    if (cfg.has("scheme", "beta5"))
      sp.beta5 = beta5_from_string(cfg.get_string("scheme", "beta5", ""));
    return sp;
  };

  const std::string sname =
      o.given("--scheme") ? o.scheme : cfg.get_string("scheme", "name", "ao53");
  s.scheme = apply_tuning(SchemeParams::defaults(scheme_from_string(sname)));

  std::string list = o.given("--schemes") ? o.schemes
                                          : cfg.get_string("run", "schemes", "");
  if (list.empty()) list = "js,z,zq,ao53,aon53,ao543";
  for (const std::string& name : split_list(list))
    s.scheme_list.push_back(
        apply_tuning(SchemeParams::defaults(scheme_from_string(name))));

  s.repeats = o.given("--repeats") ? o.repeats : cfg.get_int("run", "repeats", 3);

  std::string res = o.given("--resolutions")
                        ? o.resolutions
                        : cfg.get_string("run", "resolutions", "");
  if (res.empty())
    res = needs_problem && s.problem.kind == ProblemKind::euler2 ? "10,20,40,80"
                                                                 : "20,40,80,160";
  for (const std::string& tok : split_list(res)) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 8) throw std::invalid_argument(tok);
      s.resolutions.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("bad resolution '" + tok + "' in list");
    }
  }
  return s;
}

std::string ensure_out_dir(const Session& s) {
  std::filesystem::create_directories(s.out_dir);
  return s.out_dir;
}

std::string order_field(double v) { return std::isnan(v) ? "" : csv::format(v); }

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_run(const Options& o) {
  const Session s = make_session(o, true);
  const Problem& p = s.problem;
  std::printf("running %s with %s at n=%d ...\n", p.name.c_str(),
              to_string(s.scheme.variant).c_str(), s.nx);
  const SimResult r = run_simulation(p, s.scheme, s.nx, s.ny);

  const std::string dir = ensure_out_dir(s);
  const std::string stem = dir + "/run_" + p.name + "_" +
                           to_string(s.scheme.variant) + "_n" +
                           std::to_string(s.nx);
  csv::Table t;
  if (p.kind == ProblemKind::scalar) {
    t.header = {"x", "u"};
    for (int j = 0; j < r.x.npts(); ++j)
      t.rows.push_back({csv::format(r.x.x(j)), csv::format(r.u1.at(0, j))});
  } else if (p.kind == ProblemKind::euler1) {
    t.header = {"x", "density", "velocity", "pressure"};
    for (int j = 0; j < r.x.npts(); ++j) {
      const Prim1 w = primitive(
          Cons1{r.u1.at(0, j), r.u1.at(1, j), r.u1.at(2, j)}, p.gas);
      t.rows.push_back({csv::format(r.x.x(j)), csv::format(w.rho),
                        csv::format(w.u), csv::format(w.p)});
    }
  } else {
    t.header = {"x", "y", "density", "velocity_x", "velocity_y", "pressure"};
    for (int jy = 0; jy < r.y.npts(); ++jy)
      for (int jx = 0; jx < r.x.npts(); ++jx) {
        const Prim2 w =
            primitive(Cons2{r.u2.at(0, jx, jy), r.u2.at(1, jx, jy),
                            r.u2.at(2, jx, jy), r.u2.at(3, jx, jy)},
                      p.gas);
        t.rows.push_back({csv::format(r.x.x(jx)), csv::format(r.y.x(jy)),
                          csv::format(w.rho), csv::format(w.u),
                          csv::format(w.v), csv::format(w.p)});
      }
  }
  const std::string path = stem + ".csv";
  csv::write(path, t);
  std::printf("wrote %s (%ld steps, %.2fs)\n", path.c_str(), r.steps, r.seconds);

  if (p.kind == ProblemKind::euler2 && p.has_slice) {
    csv::Table ts;
    ts.header = {"x", "density"};
    const auto prof = slice_density(r, p.slice_y);
    for (int jx = 0; jx < r.x.npts(); ++jx)
      ts.rows.push_back({csv::format(r.x.x(jx)), csv::format(prof[jx])});
    const std::string spath = stem + "_slice.csv";
    csv::write(spath, ts);
    std::printf("wrote %s (cut at y=%g)\n", spath.c_str(), p.slice_y);
  }
  return 0;
}

int cmd_converge(const Options& o) {
  const Session s = make_session(o, true);
  const Problem& p = s.problem;
  std::printf("convergence study: %s with %s at n = {", p.name.c_str(),
              to_string(s.scheme.variant).c_str());
  for (std::size_t i = 0; i < s.resolutions.size(); ++i)
    std::printf("%s%d", i ? "," : "", s.resolutions[i]);
  std::printf("}\n");

  const auto rows = convergence_study(p, s.scheme, s.resolutions, s.cache_dir);

  csv::Table t;
  t.header = {"N", "linf", "linf_order", "l1", "l1_order", "seconds"};
  for (const ConvergeRow& r : rows)
    t.rows.push_back({csv::format(r.n), csv::format(r.linf),
                      order_field(r.linf_order), csv::format(r.l1),
                      order_field(r.l1_order), csv::format(r.seconds)});
  const std::string path = ensure_out_dir(s) + "/converge_" + p.name + "_" +
                           to_string(s.scheme.variant) + ".csv";
  csv::write(path, t);

  for (const ConvergeRow& r : rows)
    std::printf("  N=%5d  linf %.4e (%5.2f)  l1 %.4e (%5.2f)  %.2fs\n", r.n,
                r.linf, r.linf_order, r.l1, r.l1_order, r.seconds);
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int cmd_shock(const Options& o) {
  const Session s = make_session(o, true);
  const Problem& p = s.problem;

  if (o.seed_cache) {
    if (p.ref.kind != RefRecipe::Kind::self)
      throw ConfigError("problem '" + p.name +
                        "' has an exact reference; nothing to seed");
    std::printf("seeding reference cache: %s with %s at n=%d ...\n",
                p.name.c_str(), to_string(p.ref.scheme).c_str(), p.ref.n);
    const auto [fine, v] = self_reference(p, s.cache_dir);
    std::printf("cached %zu reference values under %s\n", v.size(),
                s.cache_dir.c_str());
    return 0;
  }

  std::printf("shock comparison: %s at n=%d\n", p.name.c_str(), s.nx);
  const ShockResult r = shock_comparison(p, s.scheme_list, s.nx, s.cache_dir);

  const std::string dir = ensure_out_dir(s);
  const std::string stem =
      dir + "/shock_" + p.name + "_n" + std::to_string(s.nx);
  csv::Table t;
  t.header = {"x", "reference"};
  for (const auto& name : r.scheme_names) t.header.push_back(name);
  for (int j = 0; j < r.x.npts(); ++j) {
    std::vector<std::string> row{csv::format(r.x.x(j)),
                                 csv::format(r.reference[j])};
    for (const auto& prof : r.profiles) row.push_back(csv::format(prof[j]));
    t.rows.push_back(std::move(row));
  }
  csv::write(stem + ".csv", t);

  csv::Table ts;
  ts.header = {"scheme", "l1", "seconds"};
  for (std::size_t i = 0; i < r.scheme_names.size(); ++i) {
    ts.rows.push_back({r.scheme_names[i], csv::format(r.l1[i]),
                       csv::format(r.seconds[i])});
    std::printf("  %-8s l1 %.4e  %.2fs\n", r.scheme_names[i].c_str(), r.l1[i],
                r.seconds[i]);
  }
  csv::write(stem + "_summary.csv", ts);
  std::printf("wrote %s.csv and %s_summary.csv\n", stem.c_str(), stem.c_str());
  return 0;
}

int cmd_bench(const Options& o) {
  const Session s = make_session(o, true);
  const Problem& p = s.problem;
  std::printf("benchmark: %s at n=%d, %d repeats (median)\n", p.name.c_str(),
              s.nx, s.repeats);
  const auto rows = benchmark(p, s.scheme_list, s.nx, s.repeats);

  csv::Table t;
  t.header = {"scheme", "seconds", "relative"};
  for (const BenchRow& r : rows) {
    t.rows.push_back({r.scheme, csv::format(r.seconds), csv::format(r.relative)});
    std::printf("  %-8s %8.3fs  x%.4f\n", r.scheme.c_str(), r.seconds,
                r.relative);
  }
  const std::string path =
      ensure_out_dir(s) + "/bench_" + p.name + "_n" + std::to_string(s.nx) + ".csv";
  csv::write(path, t);
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int cmd_props(const Options& o) {
  const Session s = make_session(o, false);
  const auto results = property_suite();

  csv::Table t;
  t.header = {"property", "measured_order", "stated_order", "pass"};
  bool all = true;
  for (const PropResult& r : results) {
    const bool ok = r.measured >= r.stated - 0.3;
    all = all && ok;
    t.rows.push_back({r.name, csv::format(r.measured), csv::format(r.stated),
                      ok ? "true" : "false"});
    std::printf("  %-28s measured %6.3f  stated >= %.1f  %s\n", r.name.c_str(),
                r.measured, r.stated, ok ? "ok" : "FAIL");
  }
  const std::string path = ensure_out_dir(s) + "/props.csv";
  csv::write(path, t);
  std::printf("wrote %s\n", path.c_str());
  if (!all) throw NumericalError("a measured kernel order fell below its bound");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Adaptive-order WENO benchmark driver: runs catalog problems and emits "
      "CSV tables"};
  app.require_subcommand(1);

  Options run_o, conv_o, shock_o, bench_o, props_o;

  CLI::App* run = app.add_subcommand("run", "single simulation -> field CSV");
  add_common_flags(run, run_o);
  run->add_option("--scheme", run_o.scheme, "reconstruction scheme");

  CLI::App* conv =
      app.add_subcommand("converge", "error/order table over resolutions");
  add_common_flags(conv, conv_o);
  conv->add_option("--scheme", conv_o.scheme, "reconstruction scheme");
  conv->add_option("--resolutions", conv_o.resolutions,
                   "comma-separated interval counts");

  CLI::App* shock = app.add_subcommand(
      "shock", "profiles and L1 errors against the reference");
  add_common_flags(shock, shock_o);
  shock->add_option("--schemes", shock_o.schemes, "comma-separated scheme list");
  shock->add_flag("--seed-cache", shock_o.seed_cache,
                  "compute and cache the reference profile, then exit");

  CLI::App* bench =
      app.add_subcommand("bench", "relative cost table (median wall time)");
  add_common_flags(bench, bench_o);
  bench->add_option("--schemes", bench_o.schemes, "comma-separated scheme list");
  bench->add_option("--repeats", bench_o.repeats, "timing repeats (default 3)");

  CLI::App* props = app.add_subcommand(
      "props", "measured convergence orders of the reconstruction kernel");
  add_common_flags(props, props_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  try {
    if (run->parsed()) return cmd_run(run_o);
    if (conv->parsed()) return cmd_converge(conv_o);
    if (shock->parsed()) return cmd_shock(shock_o);
    if (bench->parsed()) return cmd_bench(bench_o);
    if (props->parsed()) return cmd_props(props_o);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return 2;
  }
  return 0;
}
