#pragma once

// Two-parameter stability maps. Each family fixes how a grid point (p1, p2)
// becomes a lattice:
//
//   symmetric        p1 = a2, p2 = a1, a0 = a2            (linear)
//   asymmetric       p1 = a1, p2 = a2, a0 = -a2           (linear)
//   logistic-cubic   p1 = delta, p2 = mu                  (logistic + cubic)
//   logistic-circle  p1 = mu, p2 = delta                  (logistic + circle)
//
// All families are analysed at the origin, which is a homogeneous
// equilibrium of every one of them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracml/dynamics.hpp"
#include "fracml/stability.hpp"

namespace fracml {

enum class SweepFamily { symmetric, asymmetric, logistic_cubic, logistic_circle };

std::string to_string(SweepFamily f);
SweepFamily parse_sweep_family(const std::string& name);

struct SweepAxis {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 1;

  double value(std::size_t i) const;
};

inline constexpr std::size_t kMaxAnalyticCells = 1000000;
inline constexpr std::size_t kMaxSimulatedCells = 10000;

struct SweepConfig {
  SweepFamily family = SweepFamily::symmetric;
  double alpha = 1.0;
  std::size_t n = 1;
  SweepAxis p1;
  SweepAxis p2;
  bool simulate = false;
  std::size_t horizon = 2000;
  std::size_t window = kDefaultWindow;
  double amplitude = kDefaultPerturbation;
  std::uint64_t seed = kDefaultSeed;
  StabilityOptions stability;
  std::size_t threads = 1;

  void validate() const;
};

struct CellModel {
  LinearizedCoupling linearization;
  double equilibrium = 0.0;
  Coupling coupling;
};

CellModel cell_model(SweepFamily family, double p1, double p2, std::size_t n);

struct SweepCell {
  double p1 = 0.0;
  double p2 = 0.0;
  Verdict analytic;
  std::optional<EmpiricalVerdict> empirical;
};

/// Seed of cell `index` derived from the base seed (splitmix64 mixing).
std::uint64_t cell_seed(std::uint64_t base, std::size_t index);

/// Row-major over p2 then p1 (p1 varies fastest). Results do not depend on
/// the thread count.
std::vector<SweepCell> sweep(const SweepConfig& config);

}  // namespace fracml
