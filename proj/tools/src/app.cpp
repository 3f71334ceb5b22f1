#include "weakkam/app/app.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <set>
#include <sstream>

#include "weakkam/weakkam.hpp"

namespace weakkam::app {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s, std::size_t line, const std::string& key) {
  const std::string t = trim(s);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigParseError(line, key + ": expected a finite real, got '" + t + "'");
  }
  return v;
}

std::size_t parse_count(const std::string& s, std::size_t line, const std::string& key) {
  const std::string t = trim(s);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || *end != '\0' || errno == ERANGE || v < 0) {
    throw ConfigParseError(line, key + ": expected a nonnegative integer, got '" + t + "'");
  }
  return static_cast<std::size_t>(v);
}

std::optional<double> parse_auto_real(const std::string& s, std::size_t line,
                                      const std::string& key, bool positive) {
  if (trim(s) == "auto") return std::nullopt;
  const double v = parse_real(s, line, key);
  if (positive && !(v > 0.0)) throw ConfigParseError(line, key + " must be > 0");
  return v;
}

// const(c) -> c
std::optional<double> const_argument(const std::string& spec) {
  if (spec.rfind("const(", 0) != 0 || spec.back() != ')') return std::nullopt;
  const std::string inner = spec.substr(6, spec.size() - 7);
  char* end = nullptr;
  const double v = std::strtod(inner.c_str(), &end);
  if (inner.empty() || *end != '\0' || !std::isfinite(v)) return std::nullopt;
  return v;
}

bool is_samples(const std::string& spec) { return spec.rfind("samples:", 0) == 0; }

void check_field_spec(const std::string& spec, std::size_t line, const std::string& key,
                      const std::set<std::string>& names) {
  if (names.count(spec) || is_samples(spec) || const_argument(spec)) return;
  std::string list;
  for (const auto& n : names) list += n + ", ";
  throw ConfigParseError(line, key + ": unknown value '" + spec + "' (expected one of " + list +
                                   "const(c), samples:path)");
}

std::vector<double> read_samples(const std::filesystem::path& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot read samples file " + path.string());
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(parse_real(tok, lineno, path.filename().string()));
  }
  if (out.size() != n) {
    throw ConfigurationError(path.string() + ": expected " + std::to_string(n) +
                             " samples, found " + std::to_string(out.size()));
  }
  return out;
}

struct Field {
  std::vector<double> samples;
  ScalarField value;       // empty for sampled fields
  ScalarField derivative;  // empty for sampled fields
};

Field make_field(const std::string& spec, const PeriodicGrid& grid,
                 const std::filesystem::path& base_dir) {
  const double c = grid.circumference();
  const double k = 2.0 * std::numbers::pi / c;
  Field f;
  if (spec == "one_minus_cos") {
    f.value = [k](double x) { return 0.5 * (1.0 - std::cos(k * x)); };
    f.derivative = [k](double x) { return 0.5 * k * std::sin(k * x); };
  } else if (spec == "sin2") {
    f.value = [k](double x) { return std::pow(std::sin(k * x), 2); };
    f.derivative = [k](double x) { return k * std::sin(2.0 * k * x); };
  } else if (spec == "zero") {
    f.value = [](double) { return 0.0; };
    f.derivative = [](double) { return 0.0; };
  } else if (spec == "cos2pix") {
    f.value = [k](double x) { return std::cos(k * x); };
    f.derivative = [k](double x) { return -k * std::sin(k * x); };
  } else if (spec == "neg_cos2pix") {
    f.value = [k](double x) { return -std::cos(k * x); };
    f.derivative = [k](double x) { return k * std::sin(k * x); };
  } else if (auto v = const_argument(spec)) {
    const double cv = *v;
    f.value = [cv](double) { return cv; };
    f.derivative = [](double) { return 0.0; };
  } else if (is_samples(spec)) {
    std::filesystem::path p = spec.substr(8);
    if (p.is_relative()) p = base_dir / p;
    f.samples = read_samples(p, grid.size());
    return f;
  } else {
    throw ConfigurationError("unknown field '" + spec + "'");
  }
  f.samples.resize(grid.size());
  for (Node i = 0; i < grid.size(); ++i) f.samples[i] = f.value(grid.position(i));
  return f;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::set<std::string> kKeys = {
    "preset",          "grid.n",          "grid.dt",
    "grid.circumference", "grid.v_max",   "grid.p_max",
    "potential",       "custom.drift",    "discount.a",
    "discount.class",  "discount.A",      "discount.lambda_schedule",
    "discount.max_iters", "discount.orbit_steps", "tolerance.aubry",
    "tolerance.class", "tolerance.fix",   "output.dir",
    "seed"};

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  cfg.base_dir = base_dir;
  std::map<std::string, std::size_t> seen;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const std::string body = trim(raw);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigParseError(line, "expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (!kKeys.count(key)) throw ConfigParseError(line, "unknown key '" + key + "'");
    if (value.empty()) throw ConfigParseError(line, key + ": empty value");
    if (auto it = seen.find(key); it != seen.end()) {
      throw ConfigParseError(line, "key '" + key + "' already set on line " +
                                       std::to_string(it->second));
    }
    seen[key] = line;

    if (key == "preset") {
      if (value != "example1" && value != "example2" && value != "custom") {
        throw ConfigParseError(line, "preset must be example1, example2 or custom");
      }
      cfg.preset = value;
    } else if (key == "grid.n") {
      cfg.n = parse_count(value, line, key);
      if (cfg.n < 4) throw ConfigParseError(line, "grid.n must be >= 4");
    } else if (key == "grid.dt") {
      cfg.dt = parse_auto_real(value, line, key, true);
    } else if (key == "grid.circumference") {
      cfg.circumference = parse_real(value, line, key);
      if (!(cfg.circumference > 0.0)) throw ConfigParseError(line, key + " must be > 0");
    } else if (key == "grid.v_max") {
      cfg.v_max = parse_auto_real(value, line, key, true);
    } else if (key == "grid.p_max") {
      cfg.p_max = parse_auto_real(value, line, key, true);
    } else if (key == "potential") {
      check_field_spec(value, line, key,
                       {"default", "one_minus_cos", "sin2", "zero", "cos2pix", "neg_cos2pix"});
      cfg.potential = value;
    } else if (key == "custom.drift") {
      cfg.custom_drift = parse_real(value, line, key);
    } else if (key == "discount.a") {
      check_field_spec(value, line, key, {"cos2pix", "neg_cos2pix"});
      cfg.a = value;
    } else if (key == "discount.class") {
      if (value != "auto" && value.rfind("at:", 0) != 0) parse_count(value, line, key);
      if (value.rfind("at:", 0) == 0) parse_real(value.substr(3), line, key);
      cfg.class_select = value;
    } else if (key == "discount.A") {
      cfg.A = parse_auto_real(value, line, key, true);
    } else if (key == "discount.lambda_schedule") {
      std::vector<double> sched;
      std::stringstream ss(value);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        const double v = parse_real(tok, line, key);
        if (!(v > 0.0)) throw ConfigParseError(line, key + ": lambdas must be > 0");
        if (!sched.empty() && !(v < sched.back())) {
          throw ConfigParseError(line, key + " must be strictly decreasing");
        }
        sched.push_back(v);
      }
      if (sched.empty()) throw ConfigParseError(line, key + ": empty schedule");
      cfg.lambda_schedule = std::move(sched);
    } else if (key == "discount.max_iters") {
      cfg.max_iters = parse_count(value, line, key);
      if (cfg.max_iters == 0) throw ConfigParseError(line, key + " must be >= 1");
    } else if (key == "discount.orbit_steps") {
      cfg.orbit_steps = parse_count(value, line, key);
      if (cfg.orbit_steps < 2) throw ConfigParseError(line, key + " must be >= 2");
    } else if (key == "tolerance.aubry") {
      cfg.tol_aubry = parse_auto_real(value, line, key, true);
    } else if (key == "tolerance.class") {
      cfg.tol_class = parse_auto_real(value, line, key, true);
    } else if (key == "tolerance.fix") {
      cfg.tol_fix = parse_auto_real(value, line, key, true);
    } else if (key == "output.dir") {
      cfg.output_dir = value;
    } else if (key == "seed") {
      cfg.seed = parse_count(value, line, key);
    }
  }
  if (cfg.preset == "example2" && (cfg.potential == "cos2pix" || cfg.potential == "neg_cos2pix")) {
    throw ConfigParseError(seen.count("potential") ? seen["potential"] : 0,
                           "example2 needs a nonnegative potential vanishing somewhere");
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError(0, "cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  ExperimentConfig cfg = parse_config(buf.str(), path.parent_path());
  return cfg;
}

namespace {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

class Report {
 public:
  void line(const std::string& s) { out_ << s << '\n'; }
  void kv(const std::string& k, const std::string& v) { out_ << k << " = " << v << '\n'; }
  void kv(const std::string& k, double v) { kv(k, fmt(v)); }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigurationError("cannot write " + p.string());
  out << content;
}

std::string opt_or(const std::optional<double>& v, const std::string& fallback) {
  return v ? fmt(*v) : fallback;
}

void echo_config(Report& r, const ExperimentConfig& c) {
  r.line("[config]");
  r.kv("preset", c.preset);
  r.kv("grid.n", std::to_string(c.n));
  r.kv("grid.dt", opt_or(c.dt, "auto"));
  r.kv("grid.circumference", c.circumference);
  r.kv("grid.v_max", opt_or(c.v_max, "auto"));
  r.kv("grid.p_max", opt_or(c.p_max, "auto"));
  r.kv("potential", c.potential);
  r.kv("custom.drift", c.custom_drift);
  r.kv("discount.a", c.a);
  r.kv("discount.class", c.class_select);
  r.kv("discount.A", opt_or(c.A, "auto"));
  std::string sched;
  for (std::size_t i = 0; i < c.lambda_schedule.size(); ++i) {
    sched += (i ? "," : "") + fmt(c.lambda_schedule[i]);
  }
  r.kv("discount.lambda_schedule", sched);
  r.kv("discount.max_iters", std::to_string(c.max_iters));
  r.kv("discount.orbit_steps", std::to_string(c.orbit_steps));
  r.kv("tolerance.aubry", opt_or(c.tol_aubry, "auto"));
  r.kv("tolerance.class", opt_or(c.tol_class, "auto"));
  r.kv("tolerance.fix", opt_or(c.tol_fix, "auto"));
  r.kv("output.dir", c.output_dir.string());
  r.kv("seed", std::to_string(c.seed));
}

HamiltonianSpec make_spec(const ExperimentConfig& c, const PeriodicGrid& grid) {
  std::string pot = c.potential;
  if (pot == "default") {
    pot = c.preset == "example1" ? "one_minus_cos" : c.preset == "example2" ? "sin2" : "zero";
  }
  Field f = make_field(pot, grid, c.base_dir);
  std::optional<HamiltonianSpec> spec;
  if (c.preset == "example1") {
    spec = f.value ? HamiltonianSpec::example1(grid, f.value, f.derivative)
                   : HamiltonianSpec::example1_from_samples(grid, f.samples);
  } else if (c.preset == "example2") {
    spec = f.value ? HamiltonianSpec::example2(grid, f.value)
                   : HamiltonianSpec::example2_from_samples(grid, f.samples);
  } else {
    double umax = 0.0;
    for (double u : f.samples) umax = std::max(umax, std::abs(u));
    const double v_max = c.v_max.value_or(4.0 * (1.0 + std::abs(c.custom_drift) + std::sqrt(umax)));
    const double p_max = c.p_max.value_or(default_momentum_radius(v_max));
    const double drift = c.custom_drift;
    auto samples = std::make_shared<std::vector<double>>(f.samples);
    const double dx = grid.dx();
    const std::size_t n = grid.size();
    ScalarField value = f.value;
    // off-grid potential: closed form when available, else periodic linear interpolation
    ScalarField pot_at = value ? value : ScalarField([samples, dx, n](double x) {
      const double s = x / dx;
      const double fl = std::floor(s);
      const double t = s - fl;
      const long long i = static_cast<long long>(fl);
      const std::size_t a = static_cast<std::size_t>(((i % static_cast<long long>(n)) + n) % n);
      return (1.0 - t) * (*samples)[a] + t * (*samples)[(a + 1) % n];
    });
    spec = HamiltonianSpec::custom(
        grid, [drift, pot_at](double x, double v) { return 0.25 * (v + drift) * (v + drift) + pot_at(x); },
        v_max, p_max, f.samples);
  }
  if (c.v_max) spec->set_velocity_bound(*c.v_max);
  if (c.p_max) spec->set_momentum_radius(*c.p_max);
  else if (c.v_max) spec->set_momentum_radius(default_momentum_radius(*c.v_max));
  return *spec;
}

std::size_t select_class(const ExperimentConfig& c, const WeakKamAtlas& atlas,
                         std::span<const double> a) {
  const std::size_t count = atlas.classes.size();
  if (c.class_select == "auto") {
    std::size_t best = 0;
    double best_min = -kInf;
    for (std::size_t i = 0; i < count; ++i) {
      double m = kInf;
      for (Node x : atlas.classes[i].nodes) m = std::min(m, a[x]);
      if (m > best_min) {
        best_min = m;
        best = i;
      }
    }
    return best;
  }
  if (c.class_select.rfind("at:", 0) == 0) {
    return atlas.class_near(std::strtod(c.class_select.c_str() + 3, nullptr));
  }
  const std::size_t i = std::strtoull(c.class_select.c_str(), nullptr, 10);
  if (i >= count) {
    throw ConfigurationError("discount.class = " + std::to_string(i) + " but only " +
                             std::to_string(count) + " static classes were found");
  }
  return i;
}

void write_class_table(Report& r, const WeakKamAtlas& atlas) {
  r.line("[classes]");
  r.line("# index basepoint position size");
  for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
    const auto& cls = atlas.classes[i];
    r.line(std::to_string(i) + " " + std::to_string(cls.basepoint) + " " +
           fmt(atlas.grid.position(cls.basepoint)) + " " + std::to_string(cls.nodes.size()));
  }
}

}  // namespace

RunSummary run_experiment(const ExperimentConfig& config) {
  RunSummary summary;
  Report report;
  report.line("# weakkam run report");
  echo_config(report, config);
  std::vector<Check> checks;

  auto flush_report = [&]() {
    report.line("[checks]");
    for (const auto& c : checks) {
      report.line(std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail);
    }
    report.line("[result]");
    report.kv("exit_code", std::to_string(summary.exit_code));
    if (!summary.message.empty()) report.kv("message", summary.message);
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    write_file(config.output_dir / "report.txt", report.str());
  };

  try {
    std::filesystem::create_directories(config.output_dir);
    const PeriodicGrid grid(config.n, config.circumference);
    const HamiltonianSpec spec = make_spec(config, grid);
    const double dt = config.dt.value_or(grid.dx());
    const ActionKernel kernel = build_action_kernel(grid, spec, dt);

    AtlasTolerances tol = AtlasTolerances::defaults(grid.dx(), dt);
    if (config.tol_aubry) tol.aubry = *config.tol_aubry;
    if (config.tol_class) tol.class_sep = *config.tol_class;
    const double tol_fix = config.tol_fix.value_or(SolverOptions{}.tol_fix);
    const WeakKamAtlas atlas = build_atlas(kernel, tol);

    report.line("[model]");
    report.kv("dx", grid.dx());
    report.kv("dt", dt);
    report.kv("v_max", spec.v_max());
    report.kv("p_max", spec.p_max());
    report.kv("stencil_half_width", std::to_string(kernel.stencil_half_width()));
    report.kv("tolerance.aubry.resolved", tol.aubry);
    report.kv("tolerance.class.resolved", tol.class_sep);
    report.kv("tolerance.fixed.resolved", tol.fixed);
    report.kv("tolerance.fix.resolved", tol_fix);
    report.kv("c0", atlas.c0);
    report.kv("aubry_nodes", std::to_string(atlas.aubry.size()));
    report.kv("barrier_lipschitz", atlas.lipschitz_kappa);
    write_class_table(report, atlas);

    for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
      const double defect = fixed_point_defect(elementary_solution(atlas, i), atlas.reduced);
      checks.push_back({"elementary_solution_" + std::to_string(i), defect <= tol.fixed,
                        "fixed-point defect " + fmt(defect) + " <= " + fmt(tol.fixed)});
    }

    const std::vector<double> a = make_field(config.a, grid, config.base_dir).samples;
    const std::size_t i0 = select_class(config, atlas, a);
    const ConditionAReport cond = verify_condition_a(a, atlas.classes, i0);
    report.line("[selection]");
    report.kv("class", std::to_string(i0));
    report.kv("x0", std::to_string(atlas.classes[i0].basepoint));
    report.kv("condition_a", cond.passed ? "pass" : "fail");
    report.kv("epsilon", cond.epsilon);
    report.kv("condition_a_message", cond.message);
    if (!cond.passed) {
      summary.exit_code = kExitConditionA;
      summary.message = cond.message;
      flush_report();
      return summary;
    }

    const Node x0 = atlas.classes[i0].basepoint;
    const std::vector<MatherMeasure> measures = class_measures(atlas, i0);

    // reference v0: elementary solution of smallest sup-norm
    std::size_t ref = 0;
    double ref_sup = kInf;
    for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
      double s = 0.0;
      for (double v : elementary_solution(atlas, i)) s = std::max(s, std::abs(v));
      if (s < ref_sup) {
        ref_sup = s;
        ref = i;
      }
    }
    const std::vector<double> v0 = elementary_solution(atlas, ref);
    double a_sup = 0.0;
    for (double v : a) a_sup = std::max(a_sup, std::abs(v));
    const double A = config.A.value_or(a_sup * ref_sup + 1.0);
    const double C = selection_constant(measures, a, A, atlas.barrier, x0);

    report.kv("measures", std::to_string(measures.size()));
    for (std::size_t m = 0; m < measures.size(); ++m) {
      std::string nodes;
      for (Node y : measures[m].cycle) nodes += " " + std::to_string(y);
      report.kv("measure_" + std::to_string(m), "cycle" + nodes + ", mean action " +
                                                    fmt(mather_mean_action(measures[m], kernel)));
    }
    report.kv("reference_class", std::to_string(ref));
    report.kv("A", A);
    report.kv("C", C);

    std::vector<double> target(grid.size());
    for (Node x = 0; x < grid.size(); ++x) target[x] = atlas.barrier(x0, x) + C;

    DiscountProblem base{config.lambda_schedule.front(), a, A,
                         std::make_shared<SparseKernel>(atlas.reduced), atlas.c0, dt};
    SolverOptions opts;
    opts.tol_fix = tol_fix;
    opts.max_iters = config.max_iters;
    opts.subsolution_tol = tol.fixed;
    const std::vector<SweepRow> rows = lambda_sweep(base, config.lambda_schedule, v0, target, opts);

    report.line("[sweep]");
    report.line("# lambda sup_error residual iterations");
    std::string conv = "lambda,sup_error,residual,iterations\n";
    for (const auto& r : rows) {
      const std::string row = fmt(r.lambda) + "," + fmt(r.sup_error) + "," + fmt(r.residual) +
                              "," + std::to_string(r.iterations);
      conv += row + "\n";
      report.line(row);
    }
    write_file(config.output_dir / "convergence.csv", conv);

    const SweepRow& last = rows.back();
    std::string prof = "x,U,a,v0,h_inf_target,u_lambda_min_lambda\n";
    const auto pot = spec.potential_samples();
    for (Node x = 0; x < grid.size(); ++x) {
      prof += fmt(grid.position(x)) + "," + fmt(pot.empty() ? 0.0 : pot[x]) + "," + fmt(a[x]) +
              "," + fmt(v0[x]) + "," + fmt(target[x]) + "," + fmt(last.solution.u[x]) + "\n";
    }
    write_file(config.output_dir / "profiles.csv", prof);

    checks.push_back({"final_sup_error", last.sup_error <= 0.1,
                      fmt(last.sup_error) + " <= 0.1 at lambda " + fmt(last.lambda)});
    double worst_res = 0.0;
    for (const auto& r : rows) worst_res = std::max(worst_res, r.residual);
    checks.push_back({"residuals", worst_res <= tol_fix, fmt(worst_res) + " <= " + fmt(tol_fix)});
    checks.push_back({"sweep_trend", rows.front().sup_error >= last.sup_error - 0.02,
                      fmt(rows.front().sup_error) + " >= " + fmt(last.sup_error) + " - 0.02"});

    double leq = -kInf;
    for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
      for (const auto& m : class_measures(atlas, i)) {
        double s = 0.0;
        for (const auto& [y, w] : m.weights) s += w * a[y] * last.solution.u[y];
        leq = std::max(leq, s);
      }
    }
    checks.push_back({"mather_bound", leq <= A + 0.05,
                      "max sum mu a u_lambda " + fmt(leq) + " <= A + 0.05"});

    if (last.lambda <= 1e-3) {
      DiscountProblem p = base;
      p.lambda = last.lambda;
      double worst = kInf;
      for (Node z = 0; z < grid.size(); ++z) {
        const OrbitOccupation occ = calibrated_orbit(last.solution, p, z, config.orbit_steps);
        worst = std::min(worst, OrbitOccupation::integrate(occ.window_measure, a));
      }
      checks.push_back({"orbit_occupation", worst >= -0.05,
                        "min over z of sum mu_z a " + fmt(worst) + " >= -0.05"});
    }

    for (const auto& c : checks) {
      if (!c.passed) ++summary.checks_failed;
    }
    summary.message = "final sup error " + fmt(last.sup_error) + ", " +
                      std::to_string(summary.checks_failed) + " check(s) failed";
  } catch (const ConvergenceError& e) {
    summary.exit_code = kExitNoConvergence;
    summary.message = e.what();
  } catch (const ConfigurationError& e) {
    summary.exit_code = kExitConfig;
    summary.message = e.what();
  } catch (const NumericalError& e) {
    summary.exit_code = std::string(e.what()).find("condition (a)") != std::string::npos
                            ? kExitConditionA
                            : kExitNoConvergence;
    summary.message = e.what();
  }
  flush_report();
  return summary;
}

}  // namespace weakkam::app
