#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fracml/spectra.hpp"

using namespace fracml;

namespace {

Spectrum make(std::vector<Complex> z) {
  Spectrum s;
  s.eigenvalues = std::move(z);
  return s;
}

}  // namespace

TEST(Circulant, WorkedExampleUnstableCase) {
  const Spectrum s = circulant_eigenvalues({0.2, -0.5, 0.1, 3});
  const Spectrum expect = make({{-0.2, 0.0}, {-0.65, 0.0866025403784439},
                                {-0.65, -0.0866025403784439}});
  EXPECT_LT(multiset_distance(s, expect), 1e-12);
  EXPECT_EQ(s.source, SpectrumSource::analytic_circulant);
}

TEST(Circulant, WorkedExampleStableCase) {
  const Spectrum s = circulant_eigenvalues({0.2, -0.3, 0.1, 3});
  const Spectrum expect =
      make({{0.0, 0.0}, {-0.45, 0.0866025403784439}, {-0.45, -0.0866025403784439}});
  EXPECT_LT(multiset_distance(s, expect), 1e-12);
}

TEST(Circulant, SmallLatticesFoldNeighbours) {
  const Spectrum one = circulant_eigenvalues({0.3, 0.1, -0.7, 1});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one.eigenvalues[0].real(), -0.3, 1e-15);
  const Spectrum two = circulant_eigenvalues({0.3, 0.1, -0.7, 2});
  EXPECT_LT(multiset_distance(two, make({{-0.3, 0}, {0.5, 0}})), 1e-15);
  EXPECT_LT(multiset_distance(two, dense_eigenvalues(assemble(CirculantSpec{0.3, 0.1, -0.7, 2}))),
            1e-12);
}

TEST(Circulant, DiagonalOnly) {
  const Spectrum s = circulant_eigenvalues({0.0, 0.42, 0.0, 7});
  for (auto z : s.eigenvalues) EXPECT_EQ(z, Complex(0.42, 0.0));
}

TEST(Circulant, PureRotationHasImaginaryUnitPair) {
  // a1 = 0, a2 = 1, a0 = -1, N = 4: eigenvalues 2i sin(2 pi l / 4) ...
  const Spectrum s = circulant_eigenvalues({-0.5, 0.0, 0.5, 4});
  EXPECT_LT(multiset_distance(s, make({{0, 0}, {0, 1}, {0, 0}, {0, -1}})), 1e-15);
}

TEST(Circulant, TraceAndConjugateClosure) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    const CirculantSpec c{u(rng), u(rng), u(rng), 3 + static_cast<std::size_t>(k % 17)};
    const Spectrum s = circulant_eigenvalues(c);
    EXPECT_NEAR(s.sum().real(), assemble(c).trace(), 1e-12);
    EXPECT_NEAR(s.sum().imag(), 0.0, 1e-12);
    EXPECT_TRUE(is_conjugate_closed(s, 1e-14));
  }
}

TEST(Circulant, RejectsEmptyLatticeAndNonFinite) {
  EXPECT_THROW(circulant_eigenvalues({0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(circulant_eigenvalues({0, std::nan(""), 0, 3}), std::invalid_argument);
}

TEST(Symmetric, DistinctValuesForEightSites) {
  const auto s = symmetric_eigenvalues(0.1, 0.05, 8);
  ASSERT_EQ(s.full.size(), 8u);
  ASSERT_EQ(s.distinct.size(), 5u);
  const double expect[] = {0.2, 0.170710678118655, 0.1, 0.0292893218813452, 0.0};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_NEAR(s.full.eigenvalues[s.distinct[k]].real(), expect[k], 1e-14);
    EXPECT_EQ(s.full.eigenvalues[s.distinct[k]].imag(), 0.0);
  }
  EXPECT_LT(multiset_distance(s.full, circulant_eigenvalues({0.05, 0.1, 0.05, 8})), 1e-14);
}

TEST(Asymmetric, SixSites) {
  const Spectrum s = asymmetric_eigenvalues(0.0, 0.2, 6);
  const Spectrum expect = make({{0, 0}, {0, 0.346410161513775}, {0, 0.346410161513775},
                                {0, 0}, {0, -0.346410161513775}, {0, -0.346410161513775}});
  EXPECT_LT(multiset_distance(s, expect), 1e-14);
  for (auto z : s.eigenvalues) EXPECT_EQ(z.real(), 0.0);
  EXPECT_LT(multiset_distance(s, circulant_eigenvalues({-0.2, 0.0, 0.2, 6})), 1e-14);
}

TEST(Symmetric, FourSitesHalfCoupling) {
  const auto s = symmetric_eigenvalues(0.0, 0.5, 4);
  const double expect[] = {1.0, 0.0, -1.0, 0.0};
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(s.full.eigenvalues[j].real(), expect[j], 1e-15);
}

TEST(Asymmetric, PairsAndSmallLattices) {
  const Spectrum six = asymmetric_eigenvalues(0.3, 0.2, 6);
  EXPECT_LT(multiset_distance(six, make({{0.3, 0}, {0.3, 0.346410161513775},
                                         {0.3, 0.346410161513775}, {0.3, 0},
                                         {0.3, -0.346410161513775},
                                         {0.3, -0.346410161513775}})),
            1e-14);
  const Spectrum two = asymmetric_eigenvalues(0.7, -0.4, 2);
  for (auto z : two.eigenvalues) EXPECT_EQ(z, Complex(0.7, 0.0));
  const Spectrum eight = asymmetric_eigenvalues(0.1, 0.25, 8);
  EXPECT_NEAR(eight.eigenvalues[2].imag(), 0.5, 1e-15);
  EXPECT_NEAR(eight.eigenvalues[6].imag(), -0.5, 1e-15);
}

TEST(BlockCirculant, TwoByTwoSignCombinations) {
  const double a0 = 0.1, a1 = -0.2, a2 = 0.3;
  const Spectrum s = block_circulant_eigenvalues({a0, a1, a2, 2, 2});
  EXPECT_LT(multiset_distance(s, make({{a1 + 2 * a0 + 2 * a2, 0}, {a1 + 2 * a0 - 2 * a2, 0},
                                       {a1 - 2 * a0 + 2 * a2, 0}, {a1 - 2 * a0 - 2 * a2, 0}})),
            1e-15);
  const Spectrum d = block_circulant_eigenvalues({0, 0.4, 0, 3, 5});
  ASSERT_EQ(d.size(), 15u);
  for (auto z : d.eigenvalues) EXPECT_NEAR(z.real(), 0.4, 1e-15);
}

TEST(BlockCirculant, MatchesDenseSolver) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t m = 1; m <= 12; m += (n < 4 ? 1 : 5)) {
      const BlockCirculantSpec b{u(rng), u(rng), u(rng), n, m};
      const Spectrum analytic = block_circulant_eigenvalues(b);
      EXPECT_EQ(analytic.source, SpectrumSource::analytic_block);
      EXPECT_LT(multiset_distance(analytic, dense_eigenvalues(assemble(b))), 1e-8)
          << n << "x" << m;
    }
  }
}

TEST(Dense, RandomCirculantsAgreeWithClosedForm) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  for (int k = 0; k < 200; ++k) {
    const CirculantSpec c{u(rng), u(rng), u(rng), size(rng)};
    const Spectrum dense = dense_eigenvalues(assemble(c));
    EXPECT_EQ(dense.source, SpectrumSource::numeric_dense);
    EXPECT_LT(multiset_distance(dense, circulant_eigenvalues(c)), 1e-8) << "case " << k;
  }
}

TEST(Dense, KnownMatrices) {
  // Rotation by 90 degrees.
  EXPECT_LT(multiset_distance(dense_eigenvalues(DenseMatrix::from_rows({{0, -1}, {1, 0}})),
                              make({{0, 1}, {0, -1}})),
            1e-14);
  // Upper triangular.
  EXPECT_LT(multiset_distance(
                dense_eigenvalues(DenseMatrix::from_rows({{2, 5, 1}, {0, -3, 4}, {0, 0, 0.5}})),
                make({{2, 0}, {-3, 0}, {0.5, 0}})),
            1e-12);
  // Companion matrix of (x-1)(x-2)(x-3).
  EXPECT_LT(multiset_distance(
                dense_eigenvalues(DenseMatrix::from_rows({{6, -11, 6}, {1, 0, 0}, {0, 1, 0}})),
                make({{1, 0}, {2, 0}, {3, 0}})),
            1e-10);
  const Spectrum one = dense_eigenvalues(DenseMatrix::from_rows({{-4.25}}));
  EXPECT_EQ(one.eigenvalues.at(0), Complex(-4.25, 0));
}

TEST(Dense, TraceIsPreservedOnRandomMatrices) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (std::size_t n : {3u, 10u, 37u, 80u}) {
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = g(rng);
    const Spectrum s = dense_eigenvalues(a);
    ASSERT_EQ(s.size(), n);
    EXPECT_NEAR(s.sum().real(), a.trace(), 1e-9 * n);
    EXPECT_TRUE(is_conjugate_closed(s, 1e-8));
  }
}

TEST(Dense, RejectsBadInput) {
  EXPECT_THROW(DenseMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
  EXPECT_THROW(DenseMatrix::from_rows({}), std::invalid_argument);
  DenseMatrix a(2);
  a(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(dense_eigenvalues(a), std::invalid_argument);
  EXPECT_THROW(dense_eigenvalues(DenseMatrix(kDenseSolverMaxSize + 1)), std::invalid_argument);
}

TEST(MultisetDistance, SizeMismatchIsInfinite) {
  EXPECT_TRUE(std::isinf(multiset_distance(make({{0, 0}}), make({{0, 0}, {1, 0}}))));
  EXPECT_EQ(multiset_distance(make({{1, 1}, {1, -1}}), make({{1, -1}, {1, 1}})), 0.0);
}
