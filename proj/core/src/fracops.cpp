#include "fracml/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracml {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("fractional order must lie in (0, 1], got " +
                                std::to_string(alpha));
  }
}

KernelWeights::KernelWeights(FractionalOrder alpha, std::size_t length)
    : alpha_(alpha) {
  if (length == 0) {
    throw std::invalid_argument("kernel weight table needs length >= 1");
  }
  const double a = alpha.value();
  w_.resize(length);
  w_[0] = 1.0;
  for (std::size_t n = 0; n + 1 < length; ++n) {
    const double k = static_cast<double>(n);
    w_[n + 1] = w_[n] * (k + a) / (k + 1.0);
  }
}

KernelWeights kernel_weights(FractionalOrder alpha, std::size_t length) {
  return KernelWeights(alpha, length);
}

double binomial_phi(FractionalOrder alpha, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("binomial_phi is undefined at n = 0");
  }
  // Tail of the recurrence only; no table needed.
  const double a = alpha.value();
  double w = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double kk = static_cast<double>(k);
    w *= (kk + a) / (kk + 1.0);
  }
  return w;
}

double fractional_sum(FractionalOrder alpha, std::span<const double> x,
                      std::size_t n) {
  if (n >= x.size()) {
    throw std::out_of_range("fractional_sum: index " + std::to_string(n) +
                            " outside signal of length " +
                            std::to_string(x.size()));
  }
  const KernelWeights w(alpha, n + 1);
  double acc = 0.0;
  for (std::size_t s = 0; s <= n; ++s) acc += w[n - s] * x[s];
  return acc;
}

double caputo_difference(FractionalOrder alpha, std::span<const double> x,
                         std::size_t n) {
  if (alpha.is_integer_order()) {
    throw std::invalid_argument(
        "caputo_difference requires alpha < 1; use the forward difference");
  }
  if (n + 1 >= x.size()) {
    throw std::out_of_range("caputo_difference: index " + std::to_string(n) +
                            " needs " + std::to_string(n + 2) + " samples");
  }
  std::vector<double> dx(n + 1);
  for (std::size_t s = 0; s <= n; ++s) dx[s] = x[s + 1] - x[s];
  return fractional_sum(FractionalOrder(1.0 - alpha.value()), dx, n);
}

void memory_convolution(const KernelWeights& weights,
                        std::span<const double> history, std::size_t dim,
                        std::size_t t, std::span<double> out) {
  if (weights.size() < t + 1) {
    throw std::invalid_argument("memory_convolution: " +
                                std::to_string(weights.size()) +
                                " weights precomputed, need " +
                                std::to_string(t + 1));
  }
  if (history.size() < (t + 1) * dim) {
    throw std::out_of_range("memory_convolution: history shorter than t + 1");
  }
  if (out.size() != dim) {
    throw std::invalid_argument("memory_convolution: output size mismatch");
  }
  std::fill(out.begin(), out.end(), 0.0);
  const double* w = weights.values().data();
  const double* h = history.data();
  double* o = out.data();
  for (std::size_t j = 0; j <= t; ++j) {
    const double wj = w[t - j];
    const double* xj = h + j * dim;
    for (std::size_t k = 0; k < dim; ++k) o[k] += wj * xj[k];
  }
}

std::vector<double> memory_convolution(const KernelWeights& weights,
                                       std::span<const double> history,
                                       std::size_t dim, std::size_t t) {
  std::vector<double> out(dim);
  memory_convolution(weights, history, dim, t, out);
  return out;
}

std::vector<double> scalar_solution(FractionalOrder alpha,
                                    const std::function<double(double)>& f,
                                    double x0, std::size_t horizon) {
  const KernelWeights w(alpha, horizon + 1);
  std::vector<double> x(horizon + 1);
  std::vector<double> fx(horizon + 1);
  x[0] = x0;
  for (std::size_t t = 1; t <= horizon; ++t) {
    fx[t - 1] = f(x[t - 1]);
    double acc = 0.0;
    for (std::size_t j = 0; j < t; ++j) acc += w[t - 1 - j] * fx[j];
    x[t] = x0 + acc;
  }
  return x;
}

}  // namespace fracml
