#include "fracml/maps.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fracml {

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::linear:
      return "linear";
    case MapKind::logistic:
      return "logistic";
    case MapKind::cubic:
      return "cubic";
    case MapKind::circle:
      return "circle";
    case MapKind::scaled:
      return "scaled";
    case MapKind::negation:
      return "negation";
  }
  return "unknown";
}

MapSpec MapSpec::linear(double a) { return {MapKind::linear, a, nullptr}; }
MapSpec MapSpec::logistic(double mu) { return {MapKind::logistic, mu, nullptr}; }
MapSpec MapSpec::cubic(double delta) { return {MapKind::cubic, delta, nullptr}; }
MapSpec MapSpec::circle(double delta) { return {MapKind::circle, delta, nullptr}; }

MapSpec MapSpec::scaled(double c, MapSpec inner) {
  return {MapKind::scaled, c, std::make_shared<const MapSpec>(std::move(inner))};
}

MapSpec MapSpec::negation(MapSpec inner) {
  return {MapKind::negation, 0.0,
          std::make_shared<const MapSpec>(std::move(inner))};
}

double MapSpec::operator()(double x) const {
  switch (kind_) {
    case MapKind::linear:
      return p_ * x;
    case MapKind::logistic:
      return p_ * x * (1.0 - x);
    case MapKind::cubic:
      return 4.0 * x * x * x - p_ * x;
    case MapKind::circle:
      return x + p_ * std::sin(x);
    case MapKind::scaled:
      return p_ * (*inner_)(x);
    case MapKind::negation:
      return -(*inner_)(x);
  }
  throw std::logic_error("unhandled map kind");
}

double MapSpec::derivative(double x) const {
  switch (kind_) {
    case MapKind::linear:
      return p_;
    case MapKind::logistic:
      return p_ * (1.0 - 2.0 * x);
    case MapKind::cubic:
      return 12.0 * x * x - p_;
    case MapKind::circle:
      return 1.0 + p_ * std::cos(x);
    case MapKind::scaled:
      return p_ * inner_->derivative(x);
    case MapKind::negation:
      return -inner_->derivative(x);
  }
  throw std::logic_error("unhandled map kind");
}

std::string MapSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case MapKind::linear:
      os << p_ << "*x";
      break;
    case MapKind::logistic:
      os << p_ << "*x*(1-x)";
      break;
    case MapKind::cubic:
      os << "4*x^3-" << p_ << "*x";
      break;
    case MapKind::circle:
      os << "x+" << p_ << "*sin(x)";
      break;
    case MapKind::scaled:
      os << p_ << "*(" << inner_->describe() << ")";
      break;
    case MapKind::negation:
      os << "-(" << inner_->describe() << ")";
      break;
  }
  return os.str();
}

double eval_map(const MapSpec& f, double x) { return f(x); }
double eval_map_derivative(const MapSpec& f, double x) {
  return f.derivative(x);
}

MapTriple logistic_cubic(double mu, double delta) {
  return {MapSpec::cubic(delta), MapSpec::logistic(mu), MapSpec::cubic(delta)};
}

MapTriple logistic_circle(double mu, double delta) {
  return {MapSpec::negation(MapSpec::circle(delta)), MapSpec::logistic(mu),
          MapSpec::circle(delta)};
}

MapTriple logistic_diffusive(double mu, double eps) {
  const MapSpec f = MapSpec::logistic(mu);
  return {MapSpec::scaled(eps / 2.0, f), MapSpec::scaled(1.0 - eps, f),
          MapSpec::scaled(eps / 2.0, f)};
}

MapTriple linear_triple(double a0, double a1, double a2) {
  return {MapSpec::linear(a0), MapSpec::linear(a1), MapSpec::linear(a2)};
}

}  // namespace fracml
