#include "io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace grandai {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct CsvRow {
  long a = 0, b = 0;
  double re = 0.0, im = 0.0;
};

std::vector<CsvRow> read_index_pair_csv(const std::string& path, const std::string& expect_header) {
  std::ifstream in(path);
  if (!in) fail_io("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) fail_io("empty CSV: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expect_header) fail_io("unexpected CSV header in " + path + " (want '" + expect_header + "')");
  std::vector<CsvRow> rows;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto f = split_csv_line(line);
    if (f.size() != 4) fail_io(path + ": line " + std::to_string(lineno) + ": expected 4 fields");
    CsvRow r;
    try {
      r.a = std::stol(f[0]);
      r.b = std::stol(f[1]);
      r.re = std::stod(f[2]);
      r.im = std::stod(f[3]);
    } catch (const std::exception&) {
      fail_io(path + ": line " + std::to_string(lineno) + ": parse error");
    }
    if (r.a < 0 || r.b < 0) fail_io(path + ": line " + std::to_string(lineno) + ": negative index");
    rows.push_back(r);
  }
  if (rows.empty()) fail_io(path + ": no data rows");
  return rows;
}

void write_index_pair_csv(const std::string& path, const std::string& header,
                          const std::vector<CsvRow>& rows) {
  std::ofstream out(path);
  if (!out) fail_io("cannot write " + path);
  out << header << "\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g,%.17g\n", r.a, r.b, r.re, r.im);
    out << buf;
  }
  if (!out) fail_io("write failed: " + path);
}

}  // namespace

void write_taps_csv(const TapChannel& ch, const std::string& path) {
  std::vector<CsvRow> rows;
  for (size_t k = 0; k < ch.rows.size(); ++k)
    for (size_t j = 0; j < ch.rows[k].size(); ++j)
      rows.push_back({static_cast<long>(k), static_cast<long>(j), ch.rows[k][j].real(), ch.rows[k][j].imag()});
  write_index_pair_csv(path, "k,j,re,im", rows);
}

TapChannel read_taps_csv(const std::string& path) {
  auto rows = read_index_pair_csv(path, "k,j,re,im");
  long kmax = 0, jmax = 0;
  for (const auto& r : rows) {
    kmax = std::max(kmax, r.a);
    jmax = std::max(jmax, r.b);
  }
  if (kmax > 100000 || jmax > 1000) fail_io(path + ": tap indices implausibly large");
  TapChannel ch;
  ch.rows.assign(kmax + 1, std::vector<cxd>(jmax + 1, cxd(0.0, 0.0)));
  for (const auto& r : rows) ch.rows[r.a][r.b] = cxd(r.re, r.im);
  return ch;
}

void write_impulse_response_csv(const ImpulseResponse& ir, const std::string& path) {
  std::vector<CsvRow> rows;
  for (int s = 0; s < ir.m; ++s)
    for (int p = 0; p < ir.mu; ++p)
      rows.push_back({s, p, ir.g(s, p).real(), ir.g(s, p).imag()});
  write_index_pair_csv(path, "sample,pulse,re,im", rows);
}

ImpulseResponse read_impulse_response_csv(const std::string& path) {
  auto rows = read_index_pair_csv(path, "sample,pulse,re,im");
  long smax = 0, pmax = 0;
  for (const auto& r : rows) {
    smax = std::max(smax, r.a);
    pmax = std::max(pmax, r.b);
  }
  if (smax > 5000000 || pmax > 10000) fail_io(path + ": indices implausibly large");
  ImpulseResponse ir;
  ir.m = static_cast<int>(smax + 1);
  ir.mu = static_cast<int>(pmax + 1);
  ir.g = Eigen::MatrixXcd::Zero(ir.m, ir.mu);
  for (const auto& r : rows) ir.g(r.a, r.b) = cxd(r.re, r.im);
  return ir;
}

}  // namespace grandai
