#pragma once

#include <memory>
#include <string>

namespace fracml {

enum class MapKind { linear, logistic, cubic, circle, scaled, negation };

std::string to_string(MapKind kind);

/// Site map with a closed-form derivative. Composite kinds (scaled,
/// negation) wrap another map; copies share the wrapped map.
///
///   linear     a x
///   logistic   mu x (1 - x)
///   cubic      4 x^3 - delta x
///   circle     x + delta sin x
///   scaled     c f(x)
///   negation   -f(x)
class MapSpec {
 public:
  static MapSpec linear(double a);
  static MapSpec logistic(double mu);
  static MapSpec cubic(double delta);
  static MapSpec circle(double delta);
  static MapSpec scaled(double c, MapSpec inner);
  static MapSpec negation(MapSpec inner);

  MapKind kind() const noexcept { return kind_; }
  /// a, mu, delta or c depending on the kind; 0 for negation.
  double parameter() const noexcept { return p_; }
  const MapSpec* inner() const noexcept { return inner_.get(); }

  double operator()(double x) const;
  double derivative(double x) const;

  std::string describe() const;

 private:
  MapSpec(MapKind kind, double p, std::shared_ptr<const MapSpec> inner)
      : kind_(kind), p_(p), inner_(std::move(inner)) {}

  MapKind kind_;
  double p_;
  std::shared_ptr<const MapSpec> inner_;
};

double eval_map(const MapSpec& f, double x);
double eval_map_derivative(const MapSpec& f, double x);

/// Neighbour maps of the nonlinear lattice:
/// x_k <- f0(x_{k-1}) + f1(x_k) + f2(x_{k+1}).
struct MapTriple {
  MapSpec f0;
  MapSpec f1;
  MapSpec f2;
};

/// Logistic self map with the cubic 4x^3 - delta x on both neighbours.
MapTriple logistic_cubic(double mu, double delta);
/// Logistic self map, circle map on the right and its negation on the left.
MapTriple logistic_circle(double mu, double delta);
/// f = logistic(mu); f1 = (1 - eps) f, f0 = f2 = (eps / 2) f.
MapTriple logistic_diffusive(double mu, double eps);
/// f_i(x) = a_i x.
MapTriple linear_triple(double a0, double a1, double a2);

}  // namespace fracml
