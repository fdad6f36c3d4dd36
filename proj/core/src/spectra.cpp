#include "fracml/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fracml {

namespace {

bool lex_less(const Complex& x, const Complex& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

double root_angle(std::size_t j, std::size_t n) {
  return 2.0 * std::numbers::pi * static_cast<double>(j) /
         static_cast<double>(n);
}

}  // namespace

void CirculantSpec::validate() const {
  if (n == 0) throw std::invalid_argument("lattice size N must be >= 1");
  if (!std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(a2)) {
    throw std::invalid_argument("coupling weights must be finite");
  }
}

void BlockCirculantSpec::validate() const {
  if (n == 0 || m == 0) {
    throw std::invalid_argument("lattice sizes N and M must be >= 1");
  }
  if (!std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(a2)) {
    throw std::invalid_argument("coupling weights must be finite");
  }
}

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

DenseMatrix DenseMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw std::invalid_argument("matrix is not square: row " +
                                  std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " +
                                  std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!std::isfinite(rows[i][j])) {
        throw std::invalid_argument("matrix entries must be finite");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

double DenseMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

DenseMatrix assemble(const CirculantSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  DenseMatrix a(n);
  if (n == 1) {
    a(0, 0) = spec.a0 + spec.a1 + spec.a2;
    return a;
  }
  if (n == 2) {
    a(0, 0) = a(1, 1) = spec.a1;
    a(0, 1) = a(1, 0) = spec.a0 + spec.a2;
    return a;
  }
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = spec.a1;
    a(i, (i + 1) % n) = spec.a2;
    a(i, (i + n - 1) % n) = spec.a0;
  }
  return a;
}

DenseMatrix assemble(const BlockCirculantSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  DenseMatrix a(n * m);
  auto site = [m](std::size_t i, std::size_t j) { return i * m + j; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t s = site(i, j);
      a(s, s) += spec.a1;
      // Neighbours (i +- 1, j) and (i, j +- 1); on short axes the two
      // neighbours coincide and their weights add up.
      a(s, site((i + 1) % n, j)) += spec.a0;
      a(s, site((i + n - 1) % n, j)) += spec.a0;
      a(s, site(i, (j + 1) % m)) += spec.a2;
      a(s, site(i, (j + m - 1) % m)) += spec.a2;
    }
  }
  return a;
}

std::string to_string(SpectrumSource source) {
  switch (source) {
    case SpectrumSource::analytic_circulant:
      return "analytic-circulant";
    case SpectrumSource::analytic_block:
      return "analytic-block";
    case SpectrumSource::numeric_dense:
      return "numeric-dense";
  }
  return "unknown";
}

Complex Spectrum::sum() const {
  Complex s{0.0, 0.0};
  for (const auto& z : eigenvalues) s += z;
  return s;
}

Spectrum Spectrum::canonical() const {
  Spectrum out = *this;
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), lex_less);
  return out;
}

Spectrum circulant_eigenvalues(const CirculantSpec& spec) {
  spec.validate();
  Spectrum s;
  s.source = SpectrumSource::analytic_circulant;
  const std::size_t n = spec.n;
  s.eigenvalues.reserve(n);
  if (n == 1) {
    s.eigenvalues.emplace_back(spec.a0 + spec.a1 + spec.a2, 0.0);
    return s;
  }
  if (n == 2) {
    s.eigenvalues.emplace_back(spec.a1 + (spec.a0 + spec.a2), 0.0);
    s.eigenvalues.emplace_back(spec.a1 - (spec.a0 + spec.a2), 0.0);
    return s;
  }
  // lambda_l = a1 + a2 w^l + a0 w^-l with w = exp(i 2 pi / N). The value at
  // N - l is evaluated from the same cos/sin pair so conjugates pair exactly.
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t r = std::min(l, n - l);
    const double th = root_angle(r, n);
    const double c = std::cos(th);
    const double sn =
        (2 * r == n) ? 0.0 : (l <= n - l ? 1.0 : -1.0) * std::sin(th);
    s.eigenvalues.emplace_back(spec.a1 + (spec.a2 + spec.a0) * c,
                               (spec.a2 - spec.a0) * sn + 0.0);
  }
  return s;
}

SymmetricSpectrum symmetric_eigenvalues(double a1, double a2, std::size_t n) {
  if (n == 0) throw std::invalid_argument("lattice size N must be >= 1");
  SymmetricSpectrum out;
  out.full.source = SpectrumSource::analytic_circulant;
  out.full.eigenvalues.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = std::min(j, n - j);
    out.full.eigenvalues.emplace_back(a1 + 2.0 * a2 * std::cos(root_angle(r, n)),
                                      0.0);
  }
  for (std::size_t j = 0; j <= n / 2; ++j) out.distinct.push_back(j);
  return out;
}

Spectrum asymmetric_eigenvalues(double a1, double a2, std::size_t n) {
  if (n == 0) throw std::invalid_argument("lattice size N must be >= 1");
  Spectrum s;
  s.source = SpectrumSource::analytic_circulant;
  s.eigenvalues.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = std::min(j, n - j);
    // sin(pi) evaluates to 1.2e-16 in binary64; N = 2 j is exactly real.
    const double sn = (2 * r == n) ? 0.0 : std::sin(root_angle(r, n));
    const double sign = (j <= n - j) ? 1.0 : -1.0;
    s.eigenvalues.emplace_back(a1, sign * 2.0 * a2 * sn + 0.0);
  }
  return s;
}

Spectrum block_circulant_eigenvalues(const BlockCirculantSpec& spec) {
  spec.validate();
  Spectrum s;
  s.source = SpectrumSource::analytic_block;
  s.eigenvalues.reserve(spec.n * spec.m);
  for (std::size_t k1 = 0; k1 < spec.n; ++k1) {
    const double c1 = std::cos(root_angle(std::min(k1, spec.n - k1), spec.n));
    for (std::size_t k2 = 0; k2 < spec.m; ++k2) {
      const double c2 =
          std::cos(root_angle(std::min(k2, spec.m - k2), spec.m));
      s.eigenvalues.emplace_back(spec.a1 + 2.0 * spec.a0 * c1 + 2.0 * spec.a2 * c2,
                                 0.0);
    }
  }
  return s;
}

double multiset_distance(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const Spectrum ca = a.canonical();
  const Spectrum cb = b.canonical();
  std::vector<bool> used(cb.size(), false);
  double worst = 0.0;
  for (const auto& z : ca.eigenvalues) {
    std::size_t best = cb.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cb.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(z - cb.eigenvalues[k]);
      // Canonical order makes the first strict minimum the lexicographic one.
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

bool is_conjugate_closed(const Spectrum& s, double tol) {
  Spectrum conj = s;
  for (auto& z : conj.eigenvalues) z = std::conj(z);
  return multiset_distance(s, conj) <= tol;
}

}  // namespace fracml
