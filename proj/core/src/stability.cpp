#include "fracml/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fracml {

namespace {

constexpr double kPi = std::numbers::pi;

// Point of beta for t in [0, pi], from the real closed form.
Point2 beta_point(double alpha, double t) {
  const double radial = std::pow(2.0, alpha) * std::pow(std::sin(t / 2.0), alpha);
  const double phase = alpha * kPi / 2.0 + t * (1.0 - alpha / 2.0);
  return {radial * std::cos(phase) + 1.0, radial * std::sin(phase)};
}

// e^{it}(1 - e^{-it})^alpha on the principal branch.
Complex cardioid_offset(double alpha, double t) {
  const Complex e = std::polar(1.0, t);
  return e * std::pow(Complex(1.0, 0.0) - std::conj(e), alpha);
}

// Fills t and points for M samples, computing the upper half and mirroring
// it so the curve is exactly symmetric about the real axis and closes at
// (1, 0).
template <class UpperHalf>
void sample_mirrored(BoundaryCurve& c, std::size_t samples, UpperHalf point) {
  if (samples < 64) {
    throw std::invalid_argument("boundary sampling needs at least 64 samples");
  }
  c.t.resize(samples + 1);
  c.points.resize(samples + 1);
  const double m = static_cast<double>(samples);
  for (std::size_t k = 0; k <= samples; ++k) {
    c.t[k] = 2.0 * kPi * static_cast<double>(k) / m;
  }
  for (std::size_t k = 0; 2 * k <= samples; ++k) {
    c.points[k] = (k == 0) ? Point2{1.0, 0.0} : point(c.t[k]);
  }
  if (samples % 2 == 0) c.points[samples / 2].y = 0.0;
  for (std::size_t k = samples / 2 + 1; k <= samples; ++k) {
    const Point2 p = c.points[samples - k];
    c.points[k] = {p.x, -p.y};
  }
}

// Membership polygon: the uniform samples plus midpoints wherever the curve
// strays more than `tol` from a chord. Near t = 0 the curve behaves like
// t^alpha, so uniform chords alone misplace it by ~1e-4 at small alpha.
template <class UpperHalf>
std::vector<Point2> refined_vertices(const BoundaryCurve& c, UpperHalf upper,
                                     double tol) {
  auto point = [&](double t) {
    if (t <= kPi) return upper(t);
    const Point2 p = upper(2.0 * kPi - t);
    return Point2{p.x, -p.y};
  };
  auto off_chord = [](Point2 a, Point2 b, Point2 p) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double u = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    u = std::clamp(u, 0.0, 1.0);
    return std::hypot(p.x - a.x - u * dx, p.y - a.y - u * dy);
  };
  std::vector<Point2> out;
  out.reserve(2 * c.points.size());
  auto split = [&](auto&& self, double t0, Point2 p0, double t1, Point2 p1,
                   int depth) -> void {
    const double tm = 0.5 * (t0 + t1);
    const Point2 pm = point(tm);
    if (depth >= 48 || off_chord(p0, p1, pm) <= tol) return;
    self(self, t0, p0, tm, pm, depth + 1);
    out.push_back(pm);
    self(self, tm, pm, t1, p1, depth + 1);
  };
  for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
    out.push_back(c.points[k]);
    split(split, c.t[k], c.points[k], c.t[k + 1], c.points[k + 1], 0);
  }
  out.push_back(c.points.back());
  return out;
}

double refinement_tolerance(double band) { return std::max(0.25 * band, 1e-10); }

Verdict from_margin(double margin, double band, Complex witness) {
  Verdict v;
  v.margin = margin;
  if (margin <= -band) {
    v.status = Stability::stable;
  } else if (margin >= band) {
    v.status = Stability::unstable;
    v.witness = witness;
  } else {
    v.status = Stability::marginal;
    v.witness = witness;
  }
  return v;
}

bool is_real(Complex z) { return std::abs(z.imag()) <= 1e-14; }

}  // namespace

BoundaryCurve boundary_beta(FractionalOrder alpha, std::size_t samples) {
  BoundaryCurve c{alpha, CurveKind::beta, 0, 0, {}, {}};
  const double a = alpha.value();
  sample_mirrored(c, samples, [a](double t) { return beta_point(a, t); });
  return c;
}

namespace {

BoundaryCurve gamma_curve(FractionalOrder alpha, CurveKind kind,
                          std::size_t n, std::size_t j, double scale,
                          std::size_t samples) {
  BoundaryCurve c{alpha, kind, n, j, {}, {}};
  const double a = alpha.value();
  sample_mirrored(c, samples, [a, scale](double t) {
    const Complex b = cardioid_offset(a, t);
    return Point2{b.real() + 1.0, b.imag() / scale};
  });
  return c;
}

}  // namespace

BoundaryCurve boundary_gamma(FractionalOrder alpha, std::size_t n,
                             std::size_t j, std::size_t samples) {
  if (n == 0 || j == 0 || j > n / 2) {
    throw std::invalid_argument("gamma index j must satisfy 1 <= j <= N/2");
  }
  if ((2 * j) % n == 0) {
    throw std::invalid_argument(
        "sin(2 pi j / N) = 0 for j = " + std::to_string(j) + ", N = " +
        std::to_string(n) + "; the eigenvalue is real, use the real interval");
  }
  const double s = std::sin(2.0 * kPi * static_cast<double>(j) /
                            static_cast<double>(n));
  return gamma_curve(alpha, CurveKind::gamma, n, j, 2.0 * s, samples);
}

BoundaryCurve boundary_gamma_infinity(FractionalOrder alpha,
                                      std::size_t samples) {
  return gamma_curve(alpha, CurveKind::gamma_infinity, 0, 0, 2.0, samples);
}

double RealInterval::signed_margin(double x) const noexcept {
  return std::max(lo - x, x - hi);
}

RealInterval real_interval(FractionalOrder alpha) {
  return {1.0 - std::pow(2.0, alpha.value()), 1.0};
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable:
      return "stable";
    case Stability::unstable:
      return "unstable";
    case Stability::marginal:
      return "marginal";
  }
  return "unknown";
}

EigenvalueRegion::EigenvalueRegion(FractionalOrder alpha, StabilityOptions opts)
    : alpha_(alpha),
      opts_(opts),
      interval_(real_interval(alpha)),
      curve_(boundary_beta(alpha, opts.samples)),
      polygon_(refined_vertices(
          curve_, [a = alpha.value()](double t) { return beta_point(a, t); },
          refinement_tolerance(opts.band))) {}

Verdict EigenvalueRegion::classify(Complex lambda) const {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    return {Stability::unstable, lambda, std::numeric_limits<double>::infinity()};
  }
  if (is_real(lambda)) {
    return from_margin(interval_.signed_margin(lambda.real()), opts_.band,
                       lambda);
  }
  return from_margin(polygon_.signed_distance({lambda.real(), lambda.imag()}),
                     opts_.band, lambda);
}

Verdict EigenvalueRegion::classify(const Spectrum& spectrum) const {
  if (spectrum.eigenvalues.empty()) {
    throw std::invalid_argument("cannot classify an empty spectrum");
  }
  Verdict worst;
  bool first = true;
  for (const Complex& z : spectrum.eigenvalues) {
    Verdict v = classify(z);
    // Ties between conjugates go to the upper half-plane.
    if (first || v.margin > worst.margin ||
        (v.margin == worst.margin && z.imag() > worst.witness->imag())) {
      worst = v;
      worst.witness = z;
      first = false;
    }
  }
  if (worst.status == Stability::stable) worst.witness.reset();
  return worst;
}

Verdict eigenvalue_in_region(Complex lambda, FractionalOrder alpha,
                             StabilityOptions opts) {
  return EigenvalueRegion(alpha, opts).classify(lambda);
}

Verdict classify_spectrum(const Spectrum& spectrum, FractionalOrder alpha,
                          StabilityOptions opts) {
  if (spectrum.eigenvalues.empty()) {
    throw std::invalid_argument("cannot classify an empty spectrum");
  }
  return EigenvalueRegion(alpha, opts).classify(spectrum);
}

SymmetricRegion::SymmetricRegion(FractionalOrder alpha, std::size_t n,
                                 double band)
    : alpha_(alpha), interval_(real_interval(alpha)), band_(band) {
  const double a = alpha.value();
  const double p = std::pow(2.0, a);
  quad_.lattice_size = n;
  quad_.q1 = {0.0, 1.0};
  quad_.q3 = {0.0, 1.0 - p};
  if (n == 0 || n % 2 == 0) {
    quad_.parity = Parity::even;
    quad_.q2 = {-std::pow(2.0, a - 2.0), std::pow(2.0, a - 1.0) + 1.0 - p};
    quad_.q4 = {std::pow(2.0, a - 2.0), 1.0 - std::pow(2.0, a - 1.0)};
  } else {
    quad_.parity = Parity::odd;
    const double d = 1.0 + std::cos(kPi / static_cast<double>(n));
    quad_.q2 = {-std::pow(2.0, a - 1.0) / d, p / d + 1.0 - p};
    quad_.q4 = {std::pow(2.0, a - 1.0) / d, -p / d + 1.0};
  }
  if (n == 0) {
    // Dense cosines fill [-1, 1]; the constraints are linear in the cosine
    // so the two ends suffice.
    cosines_ = {1.0, -1.0};
  } else {
    for (std::size_t j = 0; j <= n / 2; ++j) {
      const std::size_t r = std::min(j, n - j);
      cosines_.push_back(2 * r == n ? -1.0
                                    : std::cos(2.0 * kPi * static_cast<double>(r) /
                                               static_cast<double>(n)));
    }
  }
}

Verdict SymmetricRegion::classify(double a2, double a1) const {
  double worst = -std::numeric_limits<double>::infinity();
  double witness = a1;
  for (double c : cosines_) {
    const double lambda = a1 + 2.0 * a2 * c;
    // Distance in the (a2, a1) plane to the nearer strip edge.
    const double m = interval_.signed_margin(lambda) / std::sqrt(1.0 + 4.0 * c * c);
    if (m > worst) {
      worst = m;
      witness = lambda;
    }
  }
  return from_margin(worst, band_, Complex(witness, 0.0));
}

SymmetricRegion symmetric_region(FractionalOrder alpha, std::size_t n,
                                 StabilityOptions opts) {
  if (n < 2) {
    throw std::invalid_argument(
        "symmetric region needs N >= 2; for N = 1 test a0 + a1 + a2 against "
        "the real interval");
  }
  return SymmetricRegion(alpha, n, opts.band);
}

std::size_t innermost_cardioid_index(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("no cardioid applies for N <= 2");
  }
  const std::size_t closed = (n % 2 == 0) ? n / 4 : (n - 1 + 3) / 4;
  // Brute-force argmin of |4j - N| over j = 1..floor(N/2), first on ties.
  std::size_t brute = 1;
  long best = -1;
  for (std::size_t j = 1; j <= n / 2; ++j) {
    const long d = std::labs(4 * static_cast<long>(j) - static_cast<long>(n));
    if (best < 0 || d < best) {
      best = d;
      brute = j;
    }
  }
  if (brute != closed) {
    throw std::logic_error("innermost cardioid index disagrees with brute force");
  }
  return closed;
}

AsymmetricRegion::AsymmetricRegion(FractionalOrder alpha, std::size_t n,
                                   StabilityOptions opts)
    : alpha_(alpha), n_(n), opts_(opts), interval_(real_interval(alpha)) {
  if (n == 0) {
    scale_ = 1.0;
    curve_ = boundary_gamma_infinity(alpha, opts.samples);
  } else if (n >= 3) {
    const std::size_t j = innermost_cardioid_index(n);
    scale_ = std::sin(2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
    curve_ = boundary_gamma(alpha, n, j, opts.samples);
  }
  if (curve_) {
    const double a = alpha.value();
    const double s = 2.0 * scale_;
    polygon_.emplace(refined_vertices(
        *curve_,
        [a, s](double t) {
          const Complex b = cardioid_offset(a, t);
          return Point2{b.real() + 1.0, b.imag() / s};
        },
        refinement_tolerance(opts.band)));
  }
}

Verdict AsymmetricRegion::classify(double a1, double a2) const {
  const double m1 = interval_.signed_margin(a1);
  if (!polygon_) return from_margin(m1, opts_.band, Complex(a1, 0.0));
  const double m2 = polygon_->signed_distance({a1, a2});
  if (m1 >= m2) return from_margin(m1, opts_.band, Complex(a1, 0.0));
  return from_margin(m2, opts_.band, Complex(a1, 2.0 * a2 * scale_));
}

AsymmetricRegion asymmetric_region(FractionalOrder alpha, std::size_t n,
                                   StabilityOptions opts) {
  if (n == 0) throw std::invalid_argument("lattice size N must be >= 1");
  return AsymmetricRegion(alpha, n, opts);
}

ThermodynamicRegion thermodynamic_region(FractionalOrder alpha,
                                         CouplingMode mode,
                                         StabilityOptions opts) {
  if (mode == CouplingMode::symmetric) {
    return SymmetricRegion(alpha, 0, opts.band);
  }
  return AsymmetricRegion(alpha, 0, opts);
}

}  // namespace fracml
