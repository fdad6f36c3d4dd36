#pragma once

// Discrete fractional calculus on the unit-step grid starting at zero.
//
// Every operation here is expressed through the power-law memory weights
//
//     w[n] = Gamma(n + alpha) / (Gamma(alpha) * Gamma(n + 1)),   n = 0, 1, ...
//
// which are tabulated by the recurrence w[n+1] = w[n] * (n + alpha) / (n + 1)
// starting from w[0] = 1. The Gamma functions themselves are never evaluated,
// so the table stays finite for arbitrarily long horizons.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracml {

/// Fractional order alpha in (0, 1].
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha);

  double value() const noexcept { return alpha_; }
  bool is_integer_order() const noexcept { return alpha_ == 1.0; }

  friend bool operator==(FractionalOrder, FractionalOrder) = default;

 private:
  double alpha_;
};

/// Immutable table w[0..size()-1] of memory weights for one order.
class KernelWeights {
 public:
  KernelWeights(FractionalOrder alpha, std::size_t length);

  FractionalOrder order() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t n) const noexcept { return w_[n]; }
  std::span<const double> values() const noexcept { return w_; }

 private:
  FractionalOrder alpha_;
  std::vector<double> w_;
};

KernelWeights kernel_weights(FractionalOrder alpha, std::size_t length);

/// Binomial family phi_alpha(n) = Gamma(n+alpha-1)/(Gamma(alpha)Gamma(n)), n >= 1.
/// Equal to w[n-1].
double binomial_phi(FractionalOrder alpha, std::size_t n);

/// Fractional sum of order alpha evaluated at t = alpha + n:
///     sum_{s=0}^{n} w[n-s] * x[s].
double fractional_sum(FractionalOrder alpha, std::span<const double> x,
                      std::size_t n);

/// Caputo-like difference of order alpha < 1 at t = (1 - alpha) + n, i.e. the
/// order (1 - alpha) fractional sum of the forward difference of x.
/// Requires n + 1 < x.size().
double caputo_difference(FractionalOrder alpha, std::span<const double> x,
                         std::size_t n);

/// Componentwise sum_{j=0}^{t} w[t-j] * X_j over a row-major history of
/// states of dimension `dim` (state j occupies history[j*dim, (j+1)*dim)).
/// Writes the result into `out` (size dim). Cost O((t+1) * dim).
void memory_convolution(const KernelWeights& weights,
                        std::span<const double> history, std::size_t dim,
                        std::size_t t, std::span<double> out);

std::vector<double> memory_convolution(const KernelWeights& weights,
                                       std::span<const double> history,
                                       std::size_t dim, std::size_t t);

/// Scalar solution map of the initial value problem
///     Delta^alpha x(t) = f(x(t + alpha - 1)),  x(0) = x0,
/// in its explicit form x(t) = x0 + sum_{j=0}^{t-1} w[t-1-j] f(x(j)).
/// Returns x(0..horizon).
std::vector<double> scalar_solution(FractionalOrder alpha,
                                    const std::function<double(double)>& f,
                                    double x0, std::size_t horizon);

}  // namespace fracml
