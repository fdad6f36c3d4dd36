#include "fracml/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fracml {

LatticeState::LatticeState(std::vector<double> values) : x_(std::move(values)) {
  if (x_.empty()) throw std::invalid_argument("lattice state needs N >= 1");
}

double LatticeState::site(std::size_t k) const {
  const std::size_t n = x_.size();
  if (k > n + 1) throw std::out_of_range("site index beyond N + 1");
  if (k == 0) return x_[n - 1];
  if (k == n + 1) return x_[0];
  return x_[k - 1];
}

void SystemSpec::validate() const {
  FractionalOrder{alpha};
  if (n == 0) throw std::invalid_argument("lattice size N must be >= 1");
  if (horizon == 0) throw std::invalid_argument("horizon T must be >= 1");
  if (horizon > horizon_cap) {
    throw std::invalid_argument("horizon " + std::to_string(horizon) +
                                " exceeds the cap of " +
                                std::to_string(horizon_cap) + " steps");
  }
  if (!(divergence_cutoff > 0.0)) {
    throw std::invalid_argument("divergence cutoff must be positive");
  }
  if (const auto* c = std::get_if<CirculantSpec>(&coupling)) {
    c->validate();
    if (c->n != n) {
      throw std::invalid_argument("coupling lattice size differs from N");
    }
  }
  if (const auto* v = std::get_if<std::vector<double>>(&initial)) {
    if (v->size() != n) {
      throw std::invalid_argument("initial condition has " +
                                  std::to_string(v->size()) +
                                  " sites, expected " + std::to_string(n));
    }
    for (double x : *v) {
      if (!std::isfinite(x)) {
        throw std::invalid_argument("initial condition must be finite");
      }
    }
  } else {
    const auto& p = std::get<UniformPerturbation>(initial);
    if (!(p.amplitude > 0.0) || !std::isfinite(p.base)) {
      throw std::invalid_argument("perturbation amplitude must be positive");
    }
  }
}

std::vector<double> initial_state(const InitialCondition& ic, std::size_t n) {
  if (const auto* v = std::get_if<std::vector<double>>(&ic)) return *v;
  const auto& p = std::get<UniformPerturbation>(ic);
  // Raw 53-bit draws keep the sequence identical across standard libraries.
  std::mt19937_64 rng(p.seed);
  std::vector<double> x(n);
  for (auto& xi : x) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    xi = p.base + p.amplitude * (2.0 * u - 1.0);
  }
  return x;
}

Trajectory::Trajectory(FractionalOrder alpha, std::size_t n, std::size_t horizon)
    : alpha_(alpha), n_(n), horizon_(horizon) {
  data_.reserve((horizon + 1) * n);
}

std::span<const double> Trajectory::state(std::size_t t) const {
  if (t >= length()) throw std::out_of_range("trajectory index out of range");
  return std::span<const double>(data_).subspan(t * n_, n_);
}

void Trajectory::push(std::span<const double> x) {
  if (x.size() != n_) throw std::invalid_argument("state dimension mismatch");
  data_.insert(data_.end(), x.begin(), x.end());
}

namespace {

bool out_of_bounds(std::span<const double> x, double cutoff) {
  return std::any_of(x.begin(), x.end(), [cutoff](double v) {
    return !std::isfinite(v) || std::abs(v) > cutoff;
  });
}

}  // namespace

void apply_maps(const MapTriple& maps, std::span<const double> x,
                std::span<double> out) {
  const std::size_t n = x.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double left = x[(k + n - 1) % n];
    const double right = x[(k + 1) % n];
    out[k] = maps.f0(left) + maps.f1(x[k]) + maps.f2(right);
  }
}

Trajectory simulate_linear(const SystemSpec& spec) {
  spec.validate();
  const auto* a = std::get_if<CirculantSpec>(&spec.coupling);
  if (a == nullptr) {
    throw std::invalid_argument("simulate_linear needs a circulant coupling");
  }
  const FractionalOrder alpha(spec.alpha);
  const std::size_t n = spec.n;
  const KernelWeights w(alpha, spec.horizon + 1);
  Trajectory traj(alpha, n, spec.horizon);

  const std::vector<double> x0 = initial_state(spec.initial, n);
  traj.push(x0);
  std::vector<double> conv(n);
  std::vector<double> next(n);
  for (std::size_t t = 0; t < spec.horizon; ++t) {
    memory_convolution(w, traj.data(), n, t, conv);
    // X_{t+1} = X_0 + (A - I) S_t with periodic nearest neighbours.
    for (std::size_t k = 0; k < n; ++k) {
      const double s = conv[k];
      const double as = a->a0 * conv[(k + n - 1) % n] + a->a1 * s +
                        a->a2 * conv[(k + 1) % n];
      next[k] = x0[k] + (as - s);
    }
    if (out_of_bounds(next, spec.divergence_cutoff)) {
      traj.mark_diverged();
      break;
    }
    traj.push(next);
  }
  return traj;
}

Trajectory simulate_nonlinear(const SystemSpec& spec) {
  spec.validate();
  const auto* maps = std::get_if<MapTriple>(&spec.coupling);
  if (maps == nullptr) {
    throw std::invalid_argument("simulate_nonlinear needs a map triple");
  }
  const FractionalOrder alpha(spec.alpha);
  const std::size_t n = spec.n;
  const KernelWeights w(alpha, spec.horizon + 1);
  Trajectory traj(alpha, n, spec.horizon);

  const std::vector<double> x0 = initial_state(spec.initial, n);
  traj.push(x0);
  // Increments F(X_j) - X_j, one row per step.
  std::vector<double> increments;
  increments.reserve((spec.horizon + 1) * n);
  std::vector<double> fx(n);
  std::vector<double> conv(n);
  std::vector<double> next(n);
  for (std::size_t t = 0; t < spec.horizon; ++t) {
    const auto xt = traj.state(t);
    apply_maps(*maps, xt, fx);
    for (std::size_t k = 0; k < n; ++k) increments.push_back(fx[k] - xt[k]);
    if (out_of_bounds(std::span<const double>(increments).subspan(t * n, n),
                      spec.divergence_cutoff)) {
      traj.mark_diverged();
      break;
    }
    memory_convolution(w, increments, n, t, conv);
    for (std::size_t k = 0; k < n; ++k) next[k] = x0[k] + conv[k];
    if (out_of_bounds(next, spec.divergence_cutoff)) {
      traj.mark_diverged();
      break;
    }
    traj.push(next);
  }
  return traj;
}

Trajectory simulate(const SystemSpec& spec) {
  if (std::holds_alternative<CirculantSpec>(spec.coupling)) {
    return simulate_linear(spec);
  }
  return simulate_nonlinear(spec);
}

Equilibrium find_homogeneous_equilibrium(const MapTriple& maps, double guess,
                                         double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  auto g = [&maps](double x) { return maps.f0(x) + maps.f1(x) + maps.f2(x) - x; };
  auto dg = [&maps](double x) {
    return maps.f0.derivative(x) + maps.f1.derivative(x) +
           maps.f2.derivative(x) - 1.0;
  };
  constexpr std::size_t kMaxIterations = 100;
  double x = guess;
  for (std::size_t it = 0; it <= kMaxIterations; ++it) {
    const double gx = g(x);
    if (!std::isfinite(gx)) {
      throw EquilibriumError("equilibrium residual is not finite", x);
    }
    if (std::abs(gx) <= tol) return {x, std::abs(gx), it};
    if (it == kMaxIterations) break;
    const double d = dg(x);
    if (!std::isfinite(d) || std::abs(d) < 1e-14) {
      throw EquilibriumError("g'(x) vanishes near x = " + std::to_string(x), x);
    }
    x -= gx / d;
  }
  throw EquilibriumError("Newton iteration did not converge in 100 steps; last "
                         "iterate " + std::to_string(x),
                         x);
}

LinearizedCoupling linearize_at(const MapTriple& maps, double x_star) {
  return {maps.f0.derivative(x_star), maps.f1.derivative(x_star),
          maps.f2.derivative(x_star)};
}

std::string to_string(EmpiricalVerdict v) {
  switch (v) {
    case EmpiricalVerdict::decaying:
      return "decaying";
    case EmpiricalVerdict::growing:
      return "growing";
    case EmpiricalVerdict::inconclusive:
      return "inconclusive";
    case EmpiricalVerdict::diverged:
      return "diverged";
  }
  return "unknown";
}

EmpiricalVerdict classify_trajectory(const Trajectory& traj, std::size_t window,
                                     double reference) {
  if (traj.diverged()) return EmpiricalVerdict::diverged;
  if (window == 0) throw std::invalid_argument("window must be >= 1");
  const std::size_t len = traj.length();
  if (len < 4 * window) {
    throw std::invalid_argument("trajectory of length " + std::to_string(len) +
                                " is shorter than 4 windows of " +
                                std::to_string(window));
  }
  auto deviation = [&](std::size_t from, std::size_t to) {
    double m = 0.0;
    for (std::size_t t = from; t < to; ++t) {
      for (double v : traj.state(t)) m = std::max(m, std::abs(v - reference));
    }
    return m;
  };
  const double e = deviation(0, window);
  const double h = deviation(len - window, len);
  if (h == 0.0 || h < kDecayFactor * e) return EmpiricalVerdict::decaying;
  if (h > kGrowthFactor * e) return EmpiricalVerdict::growing;
  return EmpiricalVerdict::inconclusive;
}

}  // namespace fracml
