#include "fracml/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace fracml::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& field, std::size_t line) {
  const std::string f = trim(field);
  double v = 0.0;
  const char* first = f.data();
  const char* last = f.data() + f.size();
  if (!f.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (f.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("not a number: '" + f + "'", line);
  }
  return v;
}

Table read_table(std::istream& in) {
  Table t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (t.header.empty()) {
      t.header = std::move(fields);
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw ParseError("expected " + std::to_string(t.header.size()) +
                           " fields, found " + std::to_string(fields.size()),
                       lineno);
    }
    t.rows.push_back(std::move(fields));
  }
  if (t.header.empty()) throw ParseError("missing header", lineno);
  return t;
}

std::vector<std::vector<double>> read_numeric_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    std::vector<double> row;
    for (const auto& f : split(s)) row.push_back(parse_number(f, lineno));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix read_matrix(std::istream& in) {
  auto rows = read_numeric_rows(in);
  if (rows.empty()) throw ParseError("matrix file is empty", 0);
  return DenseMatrix::from_rows(rows);
}

void write_trajectory(std::ostream& out, const Trajectory& traj) {
  out << "t";
  for (std::size_t k = 1; k <= traj.dimension(); ++k) out << ",site_" << k;
  out << '\n';
  for (std::size_t t = 0; t < traj.length(); ++t) {
    out << t;
    for (double v : traj.state(t)) out << ',' << format_number(v);
    out << '\n';
  }
}

void write_boundary(std::ostream& out, const BoundaryCurve& curve) {
  out << "t,x,y\n";
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    out << format_number(curve.t[k]) << ',' << format_number(curve.points[k].x)
        << ',' << format_number(curve.points[k].y) << '\n';
  }
}

void write_sweep(std::ostream& out, const std::vector<SweepCell>& cells) {
  out << "p1,p2,analytic_verdict,empirical_verdict,margin\n";
  for (const auto& c : cells) {
    out << format_number(c.p1) << ',' << format_number(c.p2) << ','
        << to_string(c.analytic.status) << ','
        << (c.empirical ? to_string(*c.empirical) : std::string("none")) << ','
        << format_number(c.analytic.margin) << '\n';
  }
}

void write_spectrum(std::ostream& out, const Spectrum& spectrum) {
  out << "index,re,im\n";
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    out << i << ',' << format_number(spectrum.eigenvalues[i].real()) << ','
        << format_number(spectrum.eigenvalues[i].imag()) << '\n';
  }
}

}  // namespace fracml::csv
