#include "wpnum_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "wpnum/io.hpp"
#include "wpnum/project.hpp"
#include "wpnum/wp.hpp"
#include "wpnum_cli/parallel.hpp"
#include "wpnum_cli/verify.hpp"

namespace wpnum::cli {

namespace fs = std::filesystem;

int default_workers() {
  if (const char* env = std::getenv("WPNUM_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(std::min(n, 256L));
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Output paths must sit in an existing directory; the file itself may be new.
void require_writable_parent(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent))
    throw ParameterError("output directory does not exist: " + parent.string());
}

void write_text(const std::string& path, const std::string& text) {
  require_writable_parent(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw ParameterError("write failed: " + path);
}

struct VerifyArgs {
  VerifyConfig cfg;
  std::string out = "verify_report.json";
  std::string config;
  CLI::Option* nr = nullptr;
  CLI::Option* ntheta = nullptr;
  CLI::Option* degree = nullptr;
  CLI::Option* tol = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* trials = nullptr;
};

int cmd_verify(VerifyArgs& a, std::ostream& out) {
  // Precedence: flags given on the command line, then the config file, then defaults.
  VerifyConfig cfg;
  if (!a.config.empty()) cfg = apply_config_file(cfg, a.config);
  if (a.nr->count()) cfg.nr = a.cfg.nr;
  if (a.ntheta->count()) cfg.ntheta = a.cfg.ntheta;
  if (a.degree->count()) cfg.degree = a.cfg.degree;
  if (a.tol->count()) cfg.tol_scale = a.cfg.tol_scale;
  if (a.seed->count()) cfg.seed = a.cfg.seed;
  if (a.trials->count()) cfg.trials = a.cfg.trials;
  cfg.timings = a.cfg.timings;
  validate(cfg);
  require_writable_parent(a.out);

  const Report report = run_verify(cfg);
  write_text(a.out, to_json(report));
  int failed = 0;
  for (const auto& r : report.checks) {
    out << (r.pass ? "PASS " : "FAIL ") << r.check << " value=" << num(r.value) << "\n";
    if (!r.pass) ++failed;
  }
  out << (report.pass() ? "all checks passed" : std::to_string(failed) + " check(s) failed")
      << "; report written to " << a.out << "\n";
  return report.pass() ? kPass : kCheckFailure;
}

struct ProjectArgs {
  std::string input;
  std::string out;
  int degree = 32;
  int nr = 64;
  int ntheta = 256;
};

int cmd_project(const ProjectArgs& a, std::ostream& out, std::ostream& err) {
  if (a.degree < 0) throw ParameterError("--degree must be >= 0");
  if (!a.out.empty()) require_writable_parent(a.out);
  std::optional<QuadratureRule> rule;
  std::vector<Complex> samples;
  if (fs::path(a.input).extension() == ".csv") {
    SampledGrid grid = read_grid_csv(a.input);
    rule.emplace(std::move(grid.rule));
    samples = std::move(grid.values);
  } else {
    const CoefficientFile file = read_coefficient_file(a.input);
    if (file.kind != CoefficientKind::harmonic_beltrami)
      throw ParameterError("project: coefficient input must have kind harmonic_beltrami");
    const HarmonicBeltrami mu = to_harmonic_beltrami(file);
    rule.emplace(disk_rule(a.nr, a.ntheta));
    samples = sample(*rule, mu.as_differential().field());
  }

  const HarmonicBeltrami p = p_project(*rule, samples, a.degree);
  // Residual of the trivial part mu - P(mu): its moments up to N, scaled by sup |mu|.
  std::vector<Complex> rest(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    rest[i] = samples[i] - p(rule->nodes()[i]);
    sup = std::max(sup, std::abs(samples[i]));
  }
  const MomentVector m = moments(*rule, rest, a.degree);
  constexpr double kTol = 1e-8;
  const double residual = m.max_abs();
  const bool trivial = residual <= kTol * sup;

  const std::string json = to_json(coefficient_file(p));
  std::ostream& summary = a.out.empty() ? err : out;
  if (a.out.empty())
    out << json;
  else
    write_text(a.out, json);
  summary << "degree=" << a.degree << " nodes=" << rule->size()
          << " max_residual_moment=" << num(residual) << " tolerance=" << num(kTol * sup)
          << " trivial_part_ok=" << (trivial ? "true" : "false") << "\n";
  return trivial ? kPass : kCheckFailure;
}

struct WulfArgs {
  double r = 0.0;
  double t = 0.0;
  int trials = 1000;
  std::uint64_t seed = 42;
  std::string out;
};

int cmd_wulf(const WulfArgs& a, std::ostream& out) {
  if (a.trials < 1) throw ParameterError("--trials must be >= 1");
  if (!(1.0 < a.t && a.t < a.r) || !std::isfinite(a.r))
    throw ParameterError("need 1 < t < r (got r=" + num(a.r) + ", t=" + num(a.t) + ")");
  if (!a.out.empty()) require_writable_parent(a.out);
  const auto rows = parallel_map(a.trials, default_workers(), [&](int k) {
    return wulf_trial(a.r, a.t, a.seed, 0, static_cast<std::uint64_t>(k));
  });
  std::ostringstream csv;
  csv << "trial,sup,norm,bound,ratio\n";
  double max_ratio = 0.0;
  bool violated = false;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& w = rows[k];
    csv << k << ',' << num(w.sup) << ',' << num(w.norm) << ',' << num(w.bound) << ','
        << num(w.ratio) << '\n';
    max_ratio = std::max(max_ratio, w.ratio);
    violated = violated || !(w.ratio <= 1.0);
  }
  if (a.out.empty())
    out << csv.str();
  else
    write_text(a.out, csv.str());
  out << "max_ratio=" << num(max_ratio) << " trials=" << a.trials
      << " violations=" << (violated ? "yes" : "no") << "\n";
  return violated ? kCheckFailure : kPass;
}

struct GridArgs {
  std::string input;
  std::string field;
  std::string out;
  int nr = 64;
  int ntheta = 256;
};

int cmd_grid(const GridArgs& a, std::ostream& out) {
  if (a.input.empty() == a.field.empty())
    throw ParameterError("grid: give exactly one of --input or --field");
  if (!a.out.empty()) require_writable_parent(a.out);
  const QuadratureRule rule = disk_rule(a.nr, a.ntheta);
  Field f;
  if (!a.input.empty()) {
    const CoefficientFile file = read_coefficient_file(a.input);
    if (file.kind != CoefficientKind::harmonic_beltrami)
      throw ParameterError("grid: coefficient input must have kind harmonic_beltrami");
    f = to_harmonic_beltrami(file).as_differential().field();
  } else if (a.field == "radial") {
    f = [](Complex z) { return Complex(std::norm(z) - 0.5); };
  } else if (a.field == "zero") {
    f = [](Complex) { return Complex(0.0); };
  } else {
    throw ParameterError("grid: unknown --field '" + a.field + "' (radial, zero)");
  }
  const std::string csv = to_csv(rule, sample(rule, f));
  if (a.out.empty())
    out << csv;
  else
    write_text(a.out, csv);
  return kPass;
}

struct GramArgs {
  int degree = 10;
  bool quadrature = false;
  int nr = 64;
  int ntheta = 256;
  std::string format = "csv";
  std::string out;
};

int cmd_gram(const GramArgs& a, std::ostream& out) {
  if (a.degree < 0) throw ParameterError("--degree must be >= 0");
  if (!a.out.empty()) require_writable_parent(a.out);
  const GramMatrix g = a.quadrature ? wp_gram(a.degree, disk_rule(a.nr, a.ntheta))
                                    : wp_gram(a.degree);
  std::ostringstream s;
  if (a.format == "csv") {
    s << "i,j,re,im\n";
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j)
        s << i << ',' << j << ',' << num(g(i, j).real()) << ',' << num(g(i, j).imag()) << '\n';
  } else {
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (int i = 0; i < g.size(); ++i) {
      nlohmann::ordered_json rr = nlohmann::ordered_json::array(), ii = rr;
      for (int j = 0; j < g.size(); ++j) {
        rr.push_back(g(i, j).real());
        ii.push_back(g(i, j).imag());
      }
      re.push_back(rr);
      im.push_back(ii);
    }
    const nlohmann::ordered_json doc = {
        {"basis", g.basis()}, {"size", g.size()}, {"re", re}, {"im", im}};
    s << doc.dump(2) << '\n';
  }
  if (a.out.empty())
    out << s.str();
  else
    write_text(a.out, s.str());
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical toolkit for Weil-Petersson class Teichmueller space checks", "wpnum"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the verification suite and write a JSON report");
  va.nr = verify->add_option("--nr", va.cfg.nr, "Radial nodes of the disk rule (default 64)");
  va.ntheta = verify->add_option("--ntheta", va.cfg.ntheta, "Angular nodes of the disk rule (default 256)");
  va.degree = verify->add_option("--degree", va.cfg.degree, "Projection truncation N (default 32)");
  va.tol = verify->add_option("--tol-scale", va.cfg.tol_scale, "Multiplier for every tolerance (default 1)");
  va.seed = verify->add_option("--seed", va.cfg.seed, "Global seed (default 42)");
  va.trials = verify->add_option("--trials", va.cfg.trials,
                                 "Wulf trials per (r,t); caps the other ensembles (default 1000)");
  verify->add_option("--out", va.out, "Report path (default verify_report.json)");
  verify->add_option("--config", va.config, "JSON config file; flags override its keys");
  verify->add_flag("--timings", va.cfg.timings, "Record runtime_ms (the report is then not reproducible)");

  ProjectArgs pa;
  auto* project = app.add_subcommand("project", "Project a Beltrami grid or coefficient file onto harmonic Beltramis");
  project->add_option("input", pa.input, "Grid CSV (x,y,weight,re,im) or coefficient JSON")->required();
  project->add_option("--degree", pa.degree, "Truncation N (default 32)");
  project->add_option("--nr", pa.nr, "Radial nodes used to sample coefficient input");
  project->add_option("--ntheta", pa.ntheta, "Angular nodes used to sample coefficient input");
  project->add_option("--out", pa.out, "Output coefficient file (stdout if omitted)");

  WulfArgs wa;
  auto* wulf = app.add_subcommand("wulf", "Random trials of the annulus sup bound C(r,t)");
  wulf->add_option("--r", wa.r, "Outer radius")->required();
  wulf->add_option("--t", wa.t, "Inner sup radius, 1 < t < r")->required();
  wulf->add_option("--trials", wa.trials, "Number of trials (default 1000)");
  wulf->add_option("--seed", wa.seed, "Global seed (default 42)");
  wulf->add_option("--out", wa.out, "CSV output path (stdout if omitted)");

  GridArgs ga;
  auto* grid = app.add_subcommand("grid", "Sample a Beltrami field on the disk rule as grid CSV");
  grid->add_option("--input", ga.input, "Harmonic Beltrami coefficient file");
  grid->add_option("--field", ga.field, "Built-in field: radial (|z|^2 - 1/2) or zero");
  grid->add_option("--nr", ga.nr, "Radial nodes (default 64)");
  grid->add_option("--ntheta", ga.ntheta, "Angular nodes (default 256)");
  grid->add_option("--out", ga.out, "CSV output path (stdout if omitted)");

  GramArgs gra;
  auto* gram = app.add_subcommand("gram", "Gram matrix of the harmonic basis (1-|z|^2)^2 conj(z^n)");
  gram->add_option("--degree", gra.degree, "Largest basis index N (default 10)");
  gram->add_flag("--quadrature", gra.quadrature, "Use the disk rule instead of the closed form");
  gram->add_option("--nr", gra.nr, "Radial nodes for --quadrature");
  gram->add_option("--ntheta", gra.ntheta, "Angular nodes for --quadrature");
  gram->add_option("--format", gra.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  gram->add_option("--out", gra.out, "Output path (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(va, out);
    if (*project) return cmd_project(pa, out, err);
    if (*wulf) return cmd_wulf(wa, out);
    if (*grid) return cmd_grid(ga, out);
    if (*gram) return cmd_gram(gra, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace wpnum::cli
