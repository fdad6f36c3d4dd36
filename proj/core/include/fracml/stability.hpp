#pragma once

// Stability regions of the synchronized fixed point.
//
// The fixed point of the linear lattice X_{t+1} = X_0 + (A - I)(w * X)_t is
// asymptotically stable when every eigenvalue of A lies strictly inside the
// cardioid
//
//     beta(t) = 1 + e^{it} (1 - e^{-it})^alpha,   0 <= t <= 2 pi,
//
// which for alpha = 1 is the unit circle. Real eigenvalues reduce to the open
// interval (1 - 2^alpha, 1). Nearest-neighbour couplings with a0 = a2 give a
// quadrilateral in the (a2, a1) plane; a0 = -a2 gives the line a1 = 1 and a
// rescaled cardioid gamma_j in the (a1, a2) plane.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fracml/fracops.hpp"
#include "fracml/geometry.hpp"
#include "fracml/spectra.hpp"

namespace fracml {

inline constexpr std::size_t kDefaultBoundarySamples = 8192;
inline constexpr double kDefaultBoundaryBand = 1e-7;

struct StabilityOptions {
  std::size_t samples = kDefaultBoundarySamples;
  double band = kDefaultBoundaryBand;
};

enum class CurveKind { beta, gamma, gamma_infinity };

struct BoundaryCurve {
  FractionalOrder alpha;
  CurveKind kind = CurveKind::beta;
  std::size_t lattice_size = 0;  // gamma only
  std::size_t index = 0;         // gamma only
  std::vector<double> t;         // M + 1 parameters on [0, 2 pi]
  std::vector<Point2> points;    // M + 1 samples, first == last

  std::size_t sample_count() const noexcept { return points.size() - 1; }
};

/// M >= 64 uniform samples of beta; endpoints duplicated.
BoundaryCurve boundary_beta(FractionalOrder alpha,
                            std::size_t samples = kDefaultBoundarySamples);

/// gamma_j = (Re[b(t)] + 1, Im[b(t)] / (2 sin(2 pi j / N))) with
/// b(t) = e^{it}(1 - e^{-it})^alpha, in the (a1, a2) plane. Requires
/// 1 <= j <= N/2 and sin(2 pi j / N) != 0.
BoundaryCurve boundary_gamma(FractionalOrder alpha, std::size_t n,
                             std::size_t j,
                             std::size_t samples = kDefaultBoundarySamples);

/// Thermodynamic-limit cardioid: gamma with the scaling factor 1/2.
BoundaryCurve boundary_gamma_infinity(
    FractionalOrder alpha, std::size_t samples = kDefaultBoundarySamples);

/// Open interval (1 - 2^alpha, 1).
struct RealInterval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double x) const noexcept { return lo < x && x < hi; }
  /// max(lo - x, x - hi): negative inside, positive outside.
  double signed_margin(double x) const noexcept;
};

RealInterval real_interval(FractionalOrder alpha);

enum class Stability { stable, unstable, marginal };

std::string to_string(Stability s);

struct Verdict {
  Stability status = Stability::stable;
  std::optional<Complex> witness;  // set unless stable
  double margin = 0.0;             // signed distance, positive outside
};

/// Membership test for eigenvalues against the beta cardioid. Immutable;
/// safe to share across threads.
class EigenvalueRegion {
 public:
  explicit EigenvalueRegion(FractionalOrder alpha, StabilityOptions opts = {});

  FractionalOrder alpha() const noexcept { return alpha_; }
  const RealInterval& interval() const noexcept { return interval_; }
  const BoundaryCurve& boundary() const noexcept { return curve_; }

  Verdict classify(Complex lambda) const;
  Verdict classify(const Spectrum& spectrum) const;

 private:
  FractionalOrder alpha_;
  StabilityOptions opts_;
  RealInterval interval_;
  BoundaryCurve curve_;
  ClosedPolygon polygon_;
};

Verdict eigenvalue_in_region(Complex lambda, FractionalOrder alpha,
                             StabilityOptions opts = {});

/// Stable iff every eigenvalue is; otherwise the eigenvalue with the largest
/// margin is the witness. Throws on an empty spectrum.
Verdict classify_spectrum(const Spectrum& spectrum, FractionalOrder alpha,
                          StabilityOptions opts = {});

enum class Parity { even, odd };

/// Vertices in the (a2, a1) plane.
struct Quadrilateral {
  Point2 q1, q2, q3, q4;
  Parity parity = Parity::even;
  std::size_t lattice_size = 0;  // 0 for the thermodynamic limit
};

/// a0 = a2 coupling: the intersection of the strips
/// 1 - 2^alpha < a1 + 2 a2 cos(2 pi j / N) < 1, j = 0..floor(N/2).
class SymmetricRegion {
 public:
  SymmetricRegion(FractionalOrder alpha, std::size_t n, double band);

  const Quadrilateral& vertices() const noexcept { return quad_; }
  std::span<const double> cosines() const noexcept { return cosines_; }

  /// Point (a2, a1) of the coupling plane.
  Verdict classify(double a2, double a1) const;

 private:
  FractionalOrder alpha_;
  RealInterval interval_;
  double band_;
  std::vector<double> cosines_;
  Quadrilateral quad_;
};

/// Requires N >= 2; N = 1 is the real interval on a0 + a1 + a2.
SymmetricRegion symmetric_region(FractionalOrder alpha, std::size_t n,
                                 StabilityOptions opts = {});

/// Index j of the innermost cardioid (maximal sin(2 pi j / N)): floor(N/4)
/// for even N, ceil((N-1)/4) for odd N. Requires N >= 3.
std::size_t innermost_cardioid_index(std::size_t n);

/// a0 = -a2 coupling: a1 in the real interval and, for N >= 3, (a1, a2)
/// inside the innermost gamma cardioid.
class AsymmetricRegion {
 public:
  /// n == 0 selects the thermodynamic limit (gamma_infinity).
  AsymmetricRegion(FractionalOrder alpha, std::size_t n, StabilityOptions opts);

  std::size_t lattice_size() const noexcept { return n_; }
  const RealInterval& interval() const noexcept { return interval_; }
  /// Empty for N <= 2.
  const std::optional<BoundaryCurve>& cardioid() const noexcept {
    return curve_;
  }
  /// Scale s with eigenvalue imaginary part 2 a2 s; 0 for N <= 2.
  double scale() const noexcept { return scale_; }

  Verdict classify(double a1, double a2) const;

 private:
  FractionalOrder alpha_;
  std::size_t n_;
  StabilityOptions opts_;
  RealInterval interval_;
  double scale_ = 0.0;
  std::optional<BoundaryCurve> curve_;
  std::optional<ClosedPolygon> polygon_;
};

AsymmetricRegion asymmetric_region(FractionalOrder alpha, std::size_t n,
                                   StabilityOptions opts = {});

enum class CouplingMode { symmetric, asymmetric };

using ThermodynamicRegion = std::variant<SymmetricRegion, AsymmetricRegion>;

/// N -> infinity: the even-N quadrilateral, or the line a1 = 1 with
/// gamma_infinity.
ThermodynamicRegion thermodynamic_region(FractionalOrder alpha,
                                         CouplingMode mode,
                                         StabilityOptions opts = {});

}  // namespace fracml
