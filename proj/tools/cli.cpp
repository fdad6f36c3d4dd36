#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "fracml/csv.hpp"
#include "fracml/stability.hpp"

namespace fracml::cli {

namespace {

using csv::format_number;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw ConfigError("cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string format_complex(Complex z) {
  std::string s = format_number(z.real());
  if (!std::signbit(z.imag())) s += '+';
  return s + format_number(z.imag()) + "i";
}

int exit_for(Stability s) {
  switch (s) {
    case Stability::stable:
      return kStable;
    case Stability::unstable:
      return kUnstable;
    case Stability::marginal:
      return kUndecided;
  }
  return kUndecided;
}

int exit_for(EmpiricalVerdict v) {
  switch (v) {
    case EmpiricalVerdict::decaying:
      return kStable;
    case EmpiricalVerdict::growing:
    case EmpiricalVerdict::diverged:
      return kUnstable;
    case EmpiricalVerdict::inconclusive:
      return kUndecided;
  }
  return kUndecided;
}

SweepAxis parse_axis(const std::string& spec, const std::string& name) {
  // lo:hi:count
  SweepAxis axis;
  std::stringstream ss(spec);
  std::string lo, hi, count;
  if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') ||
      !std::getline(ss, count) || count.find(':') != std::string::npos) {
    throw ConfigError(name + ": expected lo:hi:count, got '" + spec + "'");
  }
  try {
    axis.lo = csv::parse_number(lo, 0);
    axis.hi = csv::parse_number(hi, 0);
    const double c = csv::parse_number(count, 0);
    if (c < 1 || c != std::floor(c)) throw ConfigError("bad count");
    axis.count = static_cast<std::size_t>(c);
  } catch (const std::exception&) {
    throw ConfigError(name + ": expected lo:hi:count, got '" + spec + "'");
  }
  return axis;
}

SweepAxis axis_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number_unsigned()) {
    throw ConfigError(path + ": expected [lo, hi, count]");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<std::size_t>()};
}

std::size_t sweep_threads(const EnvLookup& env) {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  const auto value = env("FRACML_THREADS");
  if (!value || value->empty()) return threads;
  std::size_t cap = 0;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(*value, &pos);
    if (pos != value->size() || v < 1) throw ConfigError("");
    cap = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ConfigError("FRACML_THREADS must be a positive integer, got '" +
                      *value + "'");
  }
  return std::min(threads, cap);
}

// classify ------------------------------------------------------------------

struct ClassifyArgs {
  double alpha = 1.0;
  std::size_t n = 1;
  double a0 = 0.0, a1 = 0.0, a2 = 0.0;
  std::string mode = "circulant";
  std::string matrix;
  std::size_t samples = kDefaultBoundarySamples;
  std::string out;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const FractionalOrder alpha(a.alpha);
  Spectrum spectrum;
  if (!a.matrix.empty()) {
    std::ifstream in(a.matrix);
    if (!in) throw ConfigError("cannot open matrix '" + a.matrix + "'");
    spectrum = dense_eigenvalues(csv::read_matrix(in));
  } else if (a.mode == "circulant") {
    spectrum = circulant_eigenvalues({a.a0, a.a1, a.a2, a.n});
  } else if (a.mode == "symmetric") {
    spectrum = symmetric_eigenvalues(a.a1, a.a2, a.n).full;
  } else if (a.mode == "asymmetric") {
    spectrum = asymmetric_eigenvalues(a.a1, a.a2, a.n);
  } else {
    throw ConfigError("unknown classify mode '" + a.mode +
                      "' (expected circulant, symmetric or asymmetric)");
  }
  const EigenvalueRegion region(alpha, {a.samples, kDefaultBoundaryBand});
  const Verdict overall = region.classify(spectrum);

  Sink sink(a.out, out);
  std::ostream& o = *sink;
  o << "source," << to_string(spectrum.source) << '\n';
  o << "index,re,im,verdict,margin\n";
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const Complex z = spectrum.eigenvalues[i];
    const Verdict v = region.classify(z);
    o << i << ',' << format_number(z.real()) << ',' << format_number(z.imag())
      << ',' << to_string(v.status) << ',' << format_number(v.margin) << '\n';
  }
  o << "verdict," << to_string(overall.status) << '\n';
  o << "margin," << format_number(overall.margin) << '\n';
  o << "witness," << (overall.witness ? format_complex(*overall.witness) : "none")
    << '\n';
  return exit_for(overall.status);
}

// boundary ------------------------------------------------------------------

struct BoundaryArgs {
  double alpha = 1.0;
  std::size_t samples = kDefaultBoundarySamples;
  bool gamma = false;
  std::optional<std::size_t> n, j;
  std::string out;
};

int cmd_boundary(const BoundaryArgs& a, std::ostream& out) {
  const FractionalOrder alpha(a.alpha);
  BoundaryCurve curve = [&] {
    if (!a.gamma) return boundary_beta(alpha, a.samples);
    if (!a.n) return boundary_gamma_infinity(alpha, a.samples);
    const std::size_t j = a.j ? *a.j : innermost_cardioid_index(*a.n);
    return boundary_gamma(alpha, *a.n, j, a.samples);
  }();
  Sink sink(a.out, out);
  csv::write_boundary(*sink, curve);
  return kStable;
}

// region --------------------------------------------------------------------

struct RegionArgs {
  std::string mode;
  double alpha = 1.0;
  std::size_t n = 0;
  std::size_t samples = kDefaultBoundarySamples;
  std::string out;
};

void write_quadrilateral(std::ostream& o, const Quadrilateral& q) {
  const bool odd = q.parity == Parity::odd;
  o << "label,a2,a1\n";
  auto row = [&](const char* label, Point2 p) {
    o << label << ',' << format_number(p.x) << ',' << format_number(p.y) << '\n';
  };
  row("Q1", q.q1);
  row(odd ? "Q2'" : "Q2", q.q2);
  row("Q3", q.q3);
  row(odd ? "Q4'" : "Q4", q.q4);
}

void write_asymmetric(std::ostream& o, const AsymmetricRegion& r) {
  o << "element,t,a1,a2\n";
  if (!r.cardioid()) {
    o << "interval,0," << format_number(r.interval().lo) << ",0\n";
    o << "interval,1," << format_number(r.interval().hi) << ",0\n";
    return;
  }
  const BoundaryCurve& c = *r.cardioid();
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    o << "cardioid," << format_number(c.t[k]) << ',' << format_number(c.points[k].x)
      << ',' << format_number(c.points[k].y) << '\n';
  }
  // The line a1 = 1 closes the region where the cardioid bulges past it.
  for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
    const double u = c.points[k].x - 1.0;
    const double v = c.points[k + 1].x - 1.0;
    if (u * v >= 0.0) continue;
    const double s = u / (u - v);
    const double t = c.t[k] + s * (c.t[k + 1] - c.t[k]);
    const double y = c.points[k].y + s * (c.points[k + 1].y - c.points[k].y);
    o << "line," << format_number(t) << ",1," << format_number(y) << '\n';
  }
}

int cmd_region(const RegionArgs& a, std::ostream& out) {
  const FractionalOrder alpha(a.alpha);
  const StabilityOptions opts{a.samples, kDefaultBoundaryBand};
  Sink sink(a.out, out);
  if (a.mode == "symmetric") {
    write_quadrilateral(*sink, symmetric_region(alpha, a.n, opts).vertices());
  } else if (a.mode == "asymmetric") {
    write_asymmetric(*sink, asymmetric_region(alpha, a.n, opts));
  } else if (a.mode == "thermo-symmetric") {
    const auto r = thermodynamic_region(alpha, CouplingMode::symmetric, opts);
    write_quadrilateral(*sink, std::get<SymmetricRegion>(r).vertices());
  } else if (a.mode == "thermo-asymmetric") {
    const auto r = thermodynamic_region(alpha, CouplingMode::asymmetric, opts);
    write_asymmetric(*sink, std::get<AsymmetricRegion>(r));
  } else {
    throw ConfigError("unknown region mode '" + a.mode +
                      "' (expected symmetric, asymmetric, thermo-symmetric or "
                      "thermo-asymmetric)");
  }
  return kStable;
}

// simulate ------------------------------------------------------------------

struct SimulateArgs {
  std::string config;
  SimulationOverrides overrides;
  std::string out;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const nlohmann::json doc = a.config.empty()
                                 ? nlohmann::json::object()
                                 : parse_document(read_file(a.config));
  const SimulationConfig cfg = load_simulation(doc, a.overrides);
  const Trajectory traj = simulate(cfg.system);
  {
    Sink sink(a.out, out);
    csv::write_trajectory(*sink, traj);
  }
  const std::size_t window = std::min(cfg.window, (cfg.system.horizon + 1) / 4);
  EmpiricalVerdict verdict = EmpiricalVerdict::inconclusive;
  if (traj.diverged()) {
    verdict = EmpiricalVerdict::diverged;
  } else if (window > 0) {
    verdict = classify_trajectory(traj, window, cfg.reference);
  }
  double amplitude = 0.0;
  for (double v : traj.state(traj.length() - 1)) {
    amplitude = std::max(amplitude, std::abs(v - cfg.reference));
  }
  err << "verdict=" << to_string(verdict) << " steps=" << traj.length() - 1
      << " final_amplitude=" << format_number(amplitude)
      << " reference=" << format_number(cfg.reference) << '\n';
  return exit_for(verdict);
}

// sweep ---------------------------------------------------------------------

struct SweepArgs {
  std::string config;
  std::optional<std::string> mode, p1, p2;
  std::optional<double> alpha;
  std::optional<std::size_t> n, horizon, samples;
  std::optional<std::uint64_t> seed;
  bool simulate = false;
  std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, const EnvLookup& env) {
  // Config shape: {"family", "alpha", "n", "p1": [lo, hi, count],
  // "p2": [...], "simulate", "horizon", "seed", "window", "amplitude"}.
  const nlohmann::json doc = a.config.empty()
                                 ? nlohmann::json::object()
                                 : parse_document(read_file(a.config));
  if (!doc.is_object()) throw ConfigError("/: config must be a JSON object");
  SweepConfig cfg;
  auto need = [&](const char* key, const char* flag) -> const nlohmann::json& {
    if (!doc.contains(key)) {
      throw ConfigError(std::string("missing ") + flag + " (or '" + key +
                        "' in the config)");
    }
    return doc[key];
  };
  try {
    cfg.family = parse_sweep_family(a.mode ? *a.mode
                                           : need("family", "--mode").get<std::string>());
    cfg.alpha = a.alpha ? *a.alpha : need("alpha", "--alpha").get<double>();
    cfg.n = a.n ? *a.n : need("n", "--n").get<std::size_t>();
    cfg.p1 = a.p1 ? parse_axis(*a.p1, "--p1") : axis_from_json(need("p1", "--p1"), "/p1");
    cfg.p2 = a.p2 ? parse_axis(*a.p2, "--p2") : axis_from_json(need("p2", "--p2"), "/p2");
    cfg.simulate = a.simulate || doc.value("simulate", false);
    if (a.horizon) {
      cfg.horizon = *a.horizon;
    } else if (doc.contains("horizon")) {
      cfg.horizon = doc["horizon"].get<std::size_t>();
    }
    if (a.seed) {
      cfg.seed = *a.seed;
    } else if (doc.contains("seed")) {
      cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("window")) cfg.window = doc["window"].get<std::size_t>();
    if (doc.contains("amplitude")) cfg.amplitude = doc["amplitude"].get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("sweep config: ") + e.what());
  }
  if (a.samples) cfg.stability.samples = *a.samples;
  cfg.window = std::min(cfg.window, cfg.horizon / 4);
  cfg.threads = sweep_threads(env);
  const auto cells = sweep(cfg);
  Sink sink(a.out, out);
  csv::write_sweep(*sink, cells);
  return kStable;
}

EnvLookup default_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (!v) return std::nullopt;
    return std::string(v);
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const EnvLookup& env_in) {
  const EnvLookup env = env_in ? env_in : default_env();
  CLI::App app{"Stability analysis and simulation of fractional coupled map lattices",
               "fracml"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Classify a coupling spectrum");
  classify->add_option("--alpha", ca.alpha, "Fractional order in (0, 1]")->required();
  classify->add_option("--n", ca.n, "Lattice size");
  classify->add_option("--a0", ca.a0, "Left-neighbour weight");
  classify->add_option("--a1", ca.a1, "Self weight");
  classify->add_option("--a2", ca.a2, "Right-neighbour weight");
  classify->add_option("--mode", ca.mode, "circulant | symmetric | asymmetric");
  classify->add_option("--matrix", ca.matrix, "CSV file with a dense matrix");
  classify->add_option("--samples", ca.samples, "Boundary samples");
  classify->add_option("--out", ca.out, "Output file (default stdout)");

  BoundaryArgs ba;
  auto* boundary = app.add_subcommand("boundary", "Sample a boundary curve");
  boundary->add_option("--alpha", ba.alpha, "Fractional order in (0, 1]")->required();
  boundary->add_option("--samples", ba.samples, "Number of samples");
  boundary->add_flag("--gamma", ba.gamma,
                     "Scaled cardioid gamma_j (without --n: thermodynamic limit)");
  boundary->add_option("--n", ba.n, "Lattice size for --gamma");
  boundary->add_option("--j", ba.j, "Cardioid index (default: innermost)");
  boundary->add_option("--out", ba.out, "Output file (default stdout)");

  RegionArgs ra;
  auto* region = app.add_subcommand("region", "Describe a coupling-plane stability region");
  region->add_option("--mode", ra.mode,
                     "symmetric | asymmetric | thermo-symmetric | thermo-asymmetric")
      ->required();
  region->add_option("--alpha", ra.alpha, "Fractional order in (0, 1]")->required();
  region->add_option("--n", ra.n, "Lattice size");
  region->add_option("--samples", ra.samples, "Boundary samples");
  region->add_option("--out", ra.out, "Output file (default stdout)");

  SimulateArgs sa;
  auto& so = sa.overrides;
  auto* sim = app.add_subcommand("simulate", "Simulate a lattice and emit its trajectory");
  sim->add_option("--config", sa.config, "JSON config file");
  sim->add_option("--mode", so.mode, "Coupling type (overrides coupling.type)");
  sim->add_option("--alpha", so.alpha);
  sim->add_option("--n", so.n);
  sim->add_option("--a0", so.a0);
  sim->add_option("--a1", so.a1);
  sim->add_option("--a2", so.a2);
  sim->add_option("--mu", so.mu);
  sim->add_option("--delta", so.delta);
  sim->add_option("--eps", so.eps);
  sim->add_option("--horizon", so.horizon);
  sim->add_option("--seed", so.seed);
  sim->add_option("--out", sa.out, "Output file (default stdout)");

  SweepArgs wa;
  auto* sw = app.add_subcommand("sweep", "Stability map over a parameter grid");
  sw->add_option("--config", wa.config, "JSON config file");
  sw->add_option("--mode", wa.mode,
                 "symmetric | asymmetric | logistic-cubic | logistic-circle");
  sw->add_option("--alpha", wa.alpha);
  sw->add_option("--n", wa.n);
  sw->add_option("--p1", wa.p1, "First axis lo:hi:count");
  sw->add_option("--p2", wa.p2, "Second axis lo:hi:count");
  sw->add_flag("--simulate", wa.simulate, "Add the empirical verdict column");
  sw->add_option("--horizon", wa.horizon);
  sw->add_option("--seed", wa.seed);
  sw->add_option("--samples", wa.samples, "Boundary samples");
  sw->add_option("--out", wa.out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto* sub : app.get_subcommands()) {
      out << sub->help();
      return 0;
    }
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (classify->parsed()) return cmd_classify(ca, out);
    if (boundary->parsed()) return cmd_boundary(ba, out);
    if (region->parsed()) return cmd_region(ra, out);
    if (sim->parsed()) return cmd_simulate(sa, out, err);
    if (sw->parsed()) return cmd_sweep(wa, out, env);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace fracml::cli
