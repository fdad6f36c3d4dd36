// Dense real nonsymmetric eigenvalues: Parlett-Reinsch balancing, Hessenberg
// reduction by stabilised elementary similarity transforms, then Francis
// double-shift QR on the Hessenberg form (the classic EISPACK hqr scheme).

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fracml/spectra.hpp"

namespace fracml {

namespace {

class Work {
 public:
  explicit Work(const DenseMatrix& m) : n_(m.size()), a_(m.data().begin(), m.data().end()) {}
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

void balance(Work& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const std::size_t n = a.n();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      }
      if (c != 0.0 && r != 0.0) {
        double g = r / radix;
        double f = 1.0;
        const double s = c + r;
        while (c < g) {
          f *= radix;
          c *= sqrdx;
        }
        g = r * radix;
        while (c > g) {
          f /= radix;
          c /= sqrdx;
        }
        if ((c + r) / f < 0.95 * s) {
          done = false;
          g = 1.0 / f;
          for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
          for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
        }
      }
    }
  }
}

void reduce_to_hessenberg(Work& a) {
  const std::size_t n = a.n();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    double x = 0.0;
    std::size_t i = m;
    for (std::size_t j = m; j < n; ++j) {
      if (std::abs(a(j, m - 1)) > std::abs(x)) {
        x = a(j, m - 1);
        i = j;
      }
    }
    if (i != m) {
      for (std::size_t j = m - 1; j < n; ++j) std::swap(a(i, j), a(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, m));
    }
    if (x != 0.0) {
      for (i = m + 1; i < n; ++i) {
        double y = a(i, m - 1);
        if (y != 0.0) {
          y /= x;
          a(i, m - 1) = y;
          for (std::size_t j = m; j < n; ++j) a(i, j) -= y * a(m, j);
          for (std::size_t j = 0; j < n; ++j) a(j, m) += y * a(j, i);
        }
      }
    }
  }
  // Clear the multipliers stored below the subdiagonal.
  for (std::size_t i = 2; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < i; ++j) a(i, j) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix. Indices are signed
// because the deflation loop walks downwards past zero.
std::vector<Complex> hessenberg_qr(Work& a, std::size_t max_sweeps) {
  const int n = static_cast<int>(a.n());
  auto h = [&a](int i, int j) -> double& {
    return a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<Complex> wr(static_cast<std::size_t>(n));

  double anorm = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));
  }

  std::size_t sweeps = 0;
  int nn = n - 1;
  double t = 0.0;  // accumulated exceptional shifts
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l > 0; --l) {
        s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(h(l, l - 1)) <= eps * s) {
          h(l, l - 1) = 0.0;
          break;
        }
      }
      x = h(nn, nn);
      if (l == nn) {
        wr[static_cast<std::size_t>(nn)] = Complex(x + t, 0.0);
        --nn;
      } else {
        y = h(nn - 1, nn - 1);
        w = h(nn, nn - 1) * h(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + std::copysign(z, p);
            const double r1 = x + z;
            const double r2 = (z != 0.0) ? x - w / z : r1;
            wr[static_cast<std::size_t>(nn - 1)] = Complex(r1, 0.0);
            wr[static_cast<std::size_t>(nn)] = Complex(r2, 0.0);
          } else {
            wr[static_cast<std::size_t>(nn - 1)] = Complex(x + p, z);
            wr[static_cast<std::size_t>(nn)] = Complex(x + p, -z);
          }
          nn -= 2;
        } else {
          if (++sweeps > max_sweeps) {
            throw EigenSolverError(
                "dense eigensolver did not converge within " +
                std::to_string(max_sweeps) + " QR sweeps");
          }
          if (its == 10 || its == 20) {
            t += x;
            for (int i = 0; i <= nn; ++i) h(i, i) -= x;
            s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = h(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
            q = h(m + 1, m + 1) - z - r - s;
            r = h(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(h(m - 1, m - 1)) +
                                            std::abs(z) + std::abs(h(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (int i = m; i < nn - 1; ++i) {
            h(i + 2, i) = 0.0;
            if (i != m) h(i + 2, i - 1) = 0.0;
          }
          for (int k = m; k < nn; ++k) {
            if (k != m) {
              p = h(k, k - 1);
              q = h(k + 1, k - 1);
              r = 0.0;
              if (k + 1 != nn) r = h(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double sg = std::sqrt(p * p + q * q + r * r);
            if ((s = std::copysign(sg, p)) != 0.0) {
              if (k == m) {
                if (l != m) h(k, k - 1) = -h(k, k - 1);
              } else {
                h(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = h(k, j) + q * h(k + 1, j);
                if (k + 1 != nn) {
                  p += r * h(k + 2, j);
                  h(k + 2, j) -= p * z;
                }
                h(k + 1, j) -= p * y;
                h(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * h(i, k) + y * h(i, k + 1);
                if (k + 1 != nn) {
                  p += z * h(i, k + 2);
                  h(i, k + 2) -= p * r;
                }
                h(i, k + 1) -= p * q;
                h(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l + 1 < nn);
  }
  return wr;
}

}  // namespace

Spectrum dense_eigenvalues(const DenseMatrix& a, double tol) {
  const std::size_t n = a.size();
  if (n > kDenseSolverMaxSize) {
    throw std::invalid_argument("dense eigensolver is capped at N = " +
                                std::to_string(kDenseSolverMaxSize));
  }
  for (double v : a.data()) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
  Work w(a);
  balance(w);
  reduce_to_hessenberg(w);

  Spectrum s;
  s.source = SpectrumSource::numeric_dense;
  s.eigenvalues = hessenberg_qr(w, 100 * n);

  const double scale = std::max(1.0, a.frobenius_norm());
  const Complex sum = s.sum();
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()) ||
      std::abs(sum - Complex(a.trace(), 0.0)) >
          tol * scale * static_cast<double>(n)) {
    throw EigenSolverError(
        "dense eigensolver result fails the trace check (sum of eigenvalues " +
        std::to_string(sum.real()) + " vs trace " + std::to_string(a.trace()) +
        ")");
  }
  return s;
}

}  // namespace fracml
