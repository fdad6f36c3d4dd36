#pragma once

// Eigenvalues of lattice connectivity matrices.
//
// Circulant (1-D periodic, nearest neighbour) and block-circulant (2-D
// periodic) couplings have closed-form spectra; anything else goes through
// the dense nonsymmetric solver.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracml {

using Complex = std::complex<double>;

/// Row i couples to i-1 with a0, to itself with a1 and to i+1 with a2,
/// periodically. N = 1 and N = 2 fold the neighbours onto the same entry.
struct CirculantSpec {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  std::size_t n = 1;

  void validate() const;
};

/// N x M periodic lattice: a0 along the first axis, a2 along the second.
struct BlockCirculantSpec {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  std::size_t n = 1;
  std::size_t m = 1;

  void validate() const;
};

class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  std::span<const double> data() const noexcept { return a_; }

  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

DenseMatrix assemble(const CirculantSpec& spec);
DenseMatrix assemble(const BlockCirculantSpec& spec);

enum class SpectrumSource { analytic_circulant, analytic_block, numeric_dense };

std::string to_string(SpectrumSource source);

struct Spectrum {
  std::vector<Complex> eigenvalues;
  SpectrumSource source = SpectrumSource::analytic_circulant;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  Complex sum() const;
  /// Copy sorted by real part, then imaginary part.
  Spectrum canonical() const;
};

Spectrum circulant_eigenvalues(const CirculantSpec& spec);

struct SymmetricSpectrum {
  Spectrum full;                          // j = 0 .. N-1
  std::vector<std::size_t> distinct;      // j = 0 .. floor(N/2)
};

/// a0 = a2 case: lambda_j = a1 + 2 a2 cos(2 pi j / N).
SymmetricSpectrum symmetric_eigenvalues(double a1, double a2, std::size_t n);

/// a0 = -a2 case: lambda_j = a1 + i 2 a2 sin(2 pi j / N).
Spectrum asymmetric_eigenvalues(double a1, double a2, std::size_t n);

Spectrum block_circulant_eigenvalues(const BlockCirculantSpec& spec);

class EigenSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDenseSolverMaxSize = 512;

/// All eigenvalues of a real square matrix (balancing, Hessenberg reduction,
/// Francis double-shift QR). The QR sweep count is capped at 100 * N; a run
/// that exceeds it, or whose eigenvalue sum disagrees with the trace by more
/// than tol * max(1, ||A||_F) * N, throws EigenSolverError.
Spectrum dense_eigenvalues(const DenseMatrix& a, double tol = 1e-9);

/// Greedy nearest-pair matching distance between two multisets: walk `a` in
/// canonical order, pair each value with the closest unmatched value of `b`
/// (ties go to the lexicographically smaller one) and return the largest
/// pair distance. Infinite when the sizes differ.
double multiset_distance(const Spectrum& a, const Spectrum& b);

/// True when every eigenvalue has a conjugate partner within tol.
bool is_conjugate_closed(const Spectrum& s, double tol);

}  // namespace fracml
