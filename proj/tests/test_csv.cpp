#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "fracml/csv.hpp"

using namespace fracml;

TEST(Csv, NumbersRoundTrip) {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, -0.0,
                   std::numeric_limits<double>::denorm_min()}) {
    EXPECT_EQ(csv::parse_number(csv::format_number(v), 1), v);
  }
  EXPECT_EQ(csv::parse_number(" +2.5 ", 1), 2.5);
  EXPECT_THROW(csv::parse_number("1.5x", 3), csv::ParseError);
  EXPECT_THROW(csv::parse_number("", 3), csv::ParseError);
}

TEST(Csv, MatrixParsing) {
  std::istringstream in("# 2x2\n1, 2\n\n3,4\n");
  const DenseMatrix m = csv::read_matrix(in);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m(1, 0), 3.0);
  std::istringstream bad("1,2\n3,abc\n");
  try {
    csv::read_matrix(bad);
    FAIL();
  } catch (const csv::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream ragged("1,2\n3\n");
  EXPECT_THROW(csv::read_matrix(ragged), std::invalid_argument);
}

TEST(Csv, TrajectoryRoundTrip) {
  SystemSpec s;
  s.alpha = 0.5;
  s.n = 3;
  s.coupling = logistic_cubic(0.3, 0.2);
  s.horizon = 30;
  const Trajectory traj = simulate(s);
  std::stringstream ss;
  csv::write_trajectory(ss, traj);
  const csv::Table t = csv::read_table(ss);
  ASSERT_EQ(t.header, (std::vector<std::string>{"t", "site_1", "site_2", "site_3"}));
  ASSERT_EQ(t.rows.size(), 31u);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    EXPECT_EQ(csv::parse_number(t.rows[r][0], r + 2), static_cast<double>(r));
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(csv::parse_number(t.rows[r][k + 1], r + 2), traj.state(r)[k]);
    }
  }
}

TEST(Csv, BoundaryAndSpectrumRoundTrip) {
  const BoundaryCurve c = boundary_beta(FractionalOrder(0.3), 128);
  std::stringstream ss;
  csv::write_boundary(ss, c);
  const csv::Table t = csv::read_table(ss);
  ASSERT_EQ(t.rows.size(), 129u);
  EXPECT_EQ(csv::parse_number(t.rows[40][1], 0), c.points[40].x);
  EXPECT_EQ(csv::parse_number(t.rows[40][2], 0), c.points[40].y);

  const Spectrum s = circulant_eigenvalues({0.2, -0.5, 0.1, 5});
  std::stringstream sp;
  csv::write_spectrum(sp, s);
  const csv::Table u = csv::read_table(sp);
  ASSERT_EQ(u.header, (std::vector<std::string>{"index", "re", "im"}));
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(csv::parse_number(u.rows[i][1], 0), s.eigenvalues[i].real());
    EXPECT_EQ(csv::parse_number(u.rows[i][2], 0), s.eigenvalues[i].imag());
  }
}

TEST(Csv, SweepRows) {
  SweepConfig c;
  c.family = SweepFamily::symmetric;
  c.alpha = 0.2;
  c.n = 8;
  c.p1 = {-0.1, 0.1, 2};
  c.p2 = {0.0, 0.5, 2};
  std::stringstream ss;
  csv::write_sweep(ss, sweep(c));
  const csv::Table t = csv::read_table(ss);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.header[2], "analytic_verdict");
  for (const auto& row : t.rows) EXPECT_EQ(row[3], "none");
}

TEST(Csv, TableFieldCountMismatch) {
  std::istringstream in("a,b\n1,2\n3\n");
  try {
    csv::read_table(in);
    FAIL();
  } catch (const csv::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}
