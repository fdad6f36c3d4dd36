#pragma once

// Direct simulation of fractional coupled map lattices with full power-law
// memory:
//
//   linear     X_{t+1} = X_0 + (A - I) sum_{j=0}^{t} w[t-j] X_j
//   nonlinear  X_{t+1} = X_0 + sum_{j=0}^{t} w[t-j] (F(X_j) - X_j)
//
// with periodic boundaries. Every step reads the whole history, so a run of
// horizon T costs O(T^2 N) time and O(T N) memory.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fracml/fracops.hpp"
#include "fracml/maps.hpp"
#include "fracml/spectra.hpp"

namespace fracml {

inline constexpr std::size_t kDefaultHorizonCap = 100000;
inline constexpr double kDefaultDivergenceCutoff = 1e8;
inline constexpr double kDefaultPerturbation = 0.01;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Periodic site accessor: index 0 maps to N and N+1 to 1 (1-based sites).
class LatticeState {
 public:
  explicit LatticeState(std::vector<double> values);

  std::size_t size() const noexcept { return x_.size(); }
  /// 1-based periodic access; k in [0, N+1].
  double site(std::size_t k) const;
  std::span<const double> values() const noexcept { return x_; }

 private:
  std::vector<double> x_;
};

struct UniformPerturbation {
  double base = 0.0;
  double amplitude = kDefaultPerturbation;
  std::uint64_t seed = kDefaultSeed;
};

using InitialCondition = std::variant<std::vector<double>, UniformPerturbation>;

using Coupling = std::variant<CirculantSpec, MapTriple>;

struct SystemSpec {
  double alpha = 1.0;
  std::size_t n = 1;
  Coupling coupling = CirculantSpec{};
  InitialCondition initial = UniformPerturbation{};
  std::size_t horizon = 1;
  double divergence_cutoff = kDefaultDivergenceCutoff;
  std::size_t horizon_cap = kDefaultHorizonCap;

  void validate() const;
};

/// Draws the initial state (explicit vector or seeded uniform in
/// [base - amplitude, base + amplitude]^N).
std::vector<double> initial_state(const InitialCondition& ic, std::size_t n);

class Trajectory {
 public:
  Trajectory(FractionalOrder alpha, std::size_t n, std::size_t horizon);

  FractionalOrder alpha() const noexcept { return alpha_; }
  std::size_t dimension() const noexcept { return n_; }
  std::size_t horizon() const noexcept { return horizon_; }
  /// Number of stored states; horizon + 1 unless the run diverged.
  std::size_t length() const noexcept { return data_.size() / n_; }
  bool diverged() const noexcept { return diverged_; }

  std::span<const double> state(std::size_t t) const;
  std::span<const double> data() const noexcept { return data_; }

  void push(std::span<const double> x);
  void mark_diverged() noexcept { diverged_ = true; }

 private:
  FractionalOrder alpha_;
  std::size_t n_;
  std::size_t horizon_;
  std::vector<double> data_;
  bool diverged_ = false;
};

Trajectory simulate_linear(const SystemSpec& spec);
Trajectory simulate_nonlinear(const SystemSpec& spec);
/// Dispatches on the coupling alternative.
Trajectory simulate(const SystemSpec& spec);

/// F(X) for the map triple with periodic neighbours.
void apply_maps(const MapTriple& maps, std::span<const double> x,
                std::span<double> out);

struct Equilibrium {
  double x_star = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
};

class EquilibriumError : public std::runtime_error {
 public:
  EquilibriumError(const std::string& what, double last_iterate)
      : std::runtime_error(what), last_iterate_(last_iterate) {}
  double last_iterate() const noexcept { return last_iterate_; }

 private:
  double last_iterate_;
};

/// Newton iteration on g(x) = f0(x) + f1(x) + f2(x) - x, at most 100 steps.
Equilibrium find_homogeneous_equilibrium(const MapTriple& maps, double guess,
                                         double tol = 1e-12);

struct LinearizedCoupling {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;

  CirculantSpec circulant(std::size_t n) const { return {a0, a1, a2, n}; }
};

/// (f0'(x*), f1'(x*), f2'(x*)).
LinearizedCoupling linearize_at(const MapTriple& maps, double x_star);

enum class EmpiricalVerdict { decaying, growing, inconclusive, diverged };

std::string to_string(EmpiricalVerdict v);

inline constexpr std::size_t kDefaultWindow = 100;
inline constexpr double kDecayFactor = 0.2;
inline constexpr double kGrowthFactor = 5.0;

/// Compares the largest deviation from `reference` over the last `window`
/// states (h) with that over the first `window` states (e): decaying if
/// h < 0.2 e, growing if h > 5 e, diverged if the run was cut off.
/// Requires length >= 4 * window unless the run diverged.
EmpiricalVerdict classify_trajectory(const Trajectory& traj,
                                     std::size_t window = kDefaultWindow,
                                     double reference = 0.0);

}  // namespace fracml
