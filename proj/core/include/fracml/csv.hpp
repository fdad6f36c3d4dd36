#pragma once

// CSV emission and parsing. Numbers are written with 17 significant digits so
// every value re-parses to the same double.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracml/dynamics.hpp"
#include "fracml/spectra.hpp"
#include "fracml/stability.hpp"
#include "fracml/sweep.hpp"

namespace fracml::csv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

std::string format_number(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Header line plus rows; every row must have as many fields as the header.
Table read_table(std::istream& in);

/// Headerless rows of reals (one matrix row per line). Blank lines and lines
/// starting with '#' are skipped.
std::vector<std::vector<double>> read_numeric_rows(std::istream& in);
DenseMatrix read_matrix(std::istream& in);

double parse_number(const std::string& field, std::size_t line);

/// t,site_1,...,site_N
void write_trajectory(std::ostream& out, const Trajectory& traj);
/// t,x,y
void write_boundary(std::ostream& out, const BoundaryCurve& curve);
/// p1,p2,analytic_verdict,empirical_verdict,margin
void write_sweep(std::ostream& out, const std::vector<SweepCell>& cells);
/// index,re,im
void write_spectrum(std::ostream& out, const Spectrum& spectrum);

}  // namespace fracml::csv
