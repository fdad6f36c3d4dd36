#include "fracml/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fracml {

std::string to_string(SweepFamily f) {
  switch (f) {
    case SweepFamily::symmetric:
      return "symmetric";
    case SweepFamily::asymmetric:
      return "asymmetric";
    case SweepFamily::logistic_cubic:
      return "logistic-cubic";
    case SweepFamily::logistic_circle:
      return "logistic-circle";
  }
  return "unknown";
}

SweepFamily parse_sweep_family(const std::string& name) {
  for (auto f : {SweepFamily::symmetric, SweepFamily::asymmetric,
                 SweepFamily::logistic_cubic, SweepFamily::logistic_circle}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown sweep family '" + name +
                              "' (expected symmetric, asymmetric, "
                              "logistic-cubic or logistic-circle)");
}

double SweepAxis::value(std::size_t i) const {
  if (count <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void SweepConfig::validate() const {
  FractionalOrder{alpha};
  if (n == 0) throw std::invalid_argument("lattice size N must be >= 1");
  for (const auto* axis : {&p1, &p2}) {
    if (axis->count == 0) throw std::invalid_argument("grid axes need >= 1 point");
    if (!std::isfinite(axis->lo) || !std::isfinite(axis->hi)) {
      throw std::invalid_argument("grid bounds must be finite");
    }
  }
  const std::size_t cells = p1.count * p2.count;
  if (p1.count > kMaxAnalyticCells || cells > kMaxAnalyticCells) {
    throw std::invalid_argument("grid of " + std::to_string(cells) +
                                " cells exceeds the analytic cap of " +
                                std::to_string(kMaxAnalyticCells));
  }
  if (simulate && cells > kMaxSimulatedCells) {
    throw std::invalid_argument("grid of " + std::to_string(cells) +
                                " cells exceeds the simulation cap of " +
                                std::to_string(kMaxSimulatedCells));
  }
  if (simulate && horizon < 4 * window) {
    throw std::invalid_argument("simulation horizon must cover 4 windows");
  }
}

CellModel cell_model(SweepFamily family, double p1, double p2, std::size_t n) {
  CellModel m;
  switch (family) {
    case SweepFamily::symmetric:
      m.linearization = {p1, p2, p1};
      m.coupling = m.linearization.circulant(n);
      break;
    case SweepFamily::asymmetric:
      m.linearization = {-p2, p1, p2};
      m.coupling = m.linearization.circulant(n);
      break;
    case SweepFamily::logistic_cubic: {
      MapTriple maps = logistic_cubic(p2, p1);
      m.linearization = linearize_at(maps, 0.0);
      m.coupling = std::move(maps);
      break;
    }
    case SweepFamily::logistic_circle: {
      MapTriple maps = logistic_circle(p1, p2);
      m.linearization = linearize_at(maps, 0.0);
      m.coupling = std::move(maps);
      break;
    }
  }
  return m;
}

std::uint64_t cell_seed(std::uint64_t base, std::size_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<SweepCell> sweep(const SweepConfig& config) {
  config.validate();
  const FractionalOrder alpha(config.alpha);
  const EigenvalueRegion region(alpha, config.stability);
  const std::size_t cells = config.p1.count * config.p2.count;
  std::vector<SweepCell> out(cells);

  auto evaluate = [&](std::size_t idx) {
    SweepCell& cell = out[idx];
    cell.p1 = config.p1.value(idx % config.p1.count);
    cell.p2 = config.p2.value(idx / config.p1.count);
    CellModel model = cell_model(config.family, cell.p1, cell.p2, config.n);
    cell.analytic =
        region.classify(circulant_eigenvalues(model.linearization.circulant(config.n)));
    if (config.simulate) {
      SystemSpec spec;
      spec.alpha = config.alpha;
      spec.n = config.n;
      spec.coupling = std::move(model.coupling);
      spec.initial = UniformPerturbation{model.equilibrium, config.amplitude,
                                         cell_seed(config.seed, idx)};
      spec.horizon = config.horizon;
      cell.empirical = classify_trajectory(simulate(spec), config.window,
                                           model.equilibrium);
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, cells);
  if (threads == 1) {
    for (std::size_t i = 0; i < cells; ++i) evaluate(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells; i = next++) {
        try {
          evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace fracml
