// Copyright 2026 The cvmultipole Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvmp/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "cvmp/errors.hpp"
#include "json.hpp"

namespace cvmp {
namespace {

// Parses a real number starting at s[pos]; advances pos.
double parse_real(std::string_view s, std::size_t& pos, std::size_t base) {
  double v = 0.0;
  const char* first = s.data() + pos;
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc())
    throw ParseError("expected a number in '" + std::string(s) + "'", base + pos);
  pos = static_cast<std::size_t>(res.ptr - s.data());
  return v;
}

int parse_int(std::string_view s, std::size_t base, const char* what) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError(std::string("expected an integer ") + what + ", got '" + std::string(s) + "'",
                     base + static_cast<std::size_t>(res.ptr - s.data()));
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? s.npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

void expect_header(std::istream& in, const std::string& header) {
  std::string line;
  if (!std::getline(in, line) || line != header)
    throw ParseError("expected CSV header '" + header + "'", 0);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

cplx parse_complex(std::string_view s, std::size_t base) {
  if (s.empty()) throw ParseError("empty complex number", base);
  std::size_t pos = 0;
  auto imag_unit_only = [&](std::size_t at) {
    return at < s.size() && s[at] == 'i' && at + 1 == s.size();
  };
  // Leading pure-imaginary forms "i", "-i", "+i".
  if (imag_unit_only(0)) return {0.0, 1.0};
  if ((s[0] == '-' || s[0] == '+') && imag_unit_only(1)) return {0.0, s[0] == '-' ? -1.0 : 1.0};
  const double first = parse_real(s, pos, base);
  if (pos == s.size()) return {first, 0.0};
  if (s[pos] == 'i') {
    if (pos + 1 != s.size()) throw ParseError("trailing characters after imaginary part", base + pos + 1);
    return {0.0, first};
  }
  if (s[pos] != '+' && s[pos] != '-')
    throw ParseError("expected '+' or '-' before imaginary part", base + pos);
  const double sign = (s[pos] == '-') ? -1.0 : 1.0;
  if (imag_unit_only(pos + 1)) return {first, sign};
  std::size_t p2 = pos + 1;
  if (p2 < s.size() && (s[p2] == '+' || s[p2] == '-'))
    throw ParseError("doubled sign in complex number", base + p2);
  const double second = parse_real(s, p2, base);
  if (p2 >= s.size() || s[p2] != 'i') throw ParseError("imaginary part must end with 'i'", base + p2);
  if (p2 + 1 != s.size()) throw ParseError("trailing characters after imaginary part", base + p2 + 1);
  return {first, sign * second};
}

StateSpec parse_state_spec(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("state spec needs '<kind>:<args>'", s.size());
  const auto kind = s.substr(0, colon);
  const auto args = s.substr(colon + 1);
  const std::size_t base = colon + 1;
  if (args.empty()) throw ParseError("missing arguments for '" + std::string(kind) + "'", base);
  if (kind == "fock") {
    const int n = parse_int(args, base, "Fock level");
    if (n < 0) throw ParseError("Fock level must be nonnegative", base);
    return FockSpec{n};
  }
  if (kind == "coherent") return CoherentSpec{parse_complex(args, base)};
  if (kind == "cat") {
    const auto parts = split(args, ':');
    if (parts.size() < 2 || parts.size() > 3)
      throw ParseError("cat spec is cat:<branches>:<alpha>[:<amps>]", base);
    CatSpec c;
    c.branches = parse_int(parts[0], base, "branch count");
    if (c.branches < 1) throw ParseError("branch count must be positive", base);
    const std::size_t abase = base + parts[0].size() + 1;
    c.alpha = parse_complex(parts[1], abase);
    if (parts.size() == 3) {
      std::size_t off = abase + parts[1].size() + 1;
      for (const auto amp : split(parts[2], ',')) {
        c.amplitudes.push_back(parse_complex(amp, off));
        off += amp.size() + 1;
      }
      if (static_cast<int>(c.amplitudes.size()) != c.branches)
        throw ParseError("cat needs one amplitude per branch", abase + parts[1].size() + 1);
    }
    return c;
  }
  if (kind == "dyad") {
    const auto parts = split(args, ',');
    if (parts.size() < 2 || parts.size() > 3) throw ParseError("dyad spec is dyad:<m>,<n>[,<c>]", base);
    DyadSpec d;
    d.m = parse_int(parts[0], base, "level m");
    d.n = parse_int(parts[1], base + parts[0].size() + 1, "level n");
    if (parts.size() == 3)
      d.mixing = parse_complex(parts[2], base + parts[0].size() + parts[1].size() + 2);
    return d;
  }
  if (kind == "file") return load_state_json(std::string(args));
  throw ParseError("unknown state kind '" + std::string(kind) + "'", 0);
}

ExplicitSpec read_state_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("cutoff") || !j.contains("re"))
    throw ValidationError("state JSON needs \"cutoff\" and \"re\"");
  const int cutoff = j.at("cutoff").get<int>();
  if (cutoff < 0) throw ValidationError("state JSON: cutoff must be nonnegative");
  const std::size_t dim = static_cast<std::size_t>(cutoff) + 1;
  auto read_part = [&](const char* key) {
    std::vector<double> v(dim * dim, 0.0);
    if (!j.contains(key)) return v;
    const auto& rows = j.at(key);
    if (!rows.is_array() || rows.size() != dim)
      throw ValidationError(std::string("state JSON: \"") + key + "\" must have " +
                            std::to_string(dim) + " rows");
    for (std::size_t r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dim)
        throw ValidationError(std::string("state JSON: \"") + key + "\" row " + std::to_string(r) +
                              " must have " + std::to_string(dim) + " entries");
      for (std::size_t c = 0; c < dim; ++c) v[r * dim + c] = rows[r][c].get<double>();
    }
    return v;
  };
  const auto re = read_part("re");
  const auto im = read_part("im");
  std::vector<cplx> data(dim * dim);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = {re[i], im[i]};
  return ExplicitSpec{FockOperator(dim, std::move(data))};
}

ExplicitSpec load_state_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open state file '" + path + "'");
  return read_state_json(in);
}

void write_state_json(std::ostream& out, const FockOperator& rho) {
  nlohmann::json j;
  j["cutoff"] = rho.cutoff();
  auto re = nlohmann::json::array();
  auto im = nlohmann::json::array();
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    auto rr = nlohmann::json::array();
    auto ri = nlohmann::json::array();
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      rr.push_back(rho(r, c).real());
      ri.push_back(rho(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  j["re"] = re;
  j["im"] = im;
  out << j.dump() << '\n';
}

void write_table_csv(std::ostream& out, const MultipoleTable& t) {
  out << "k2,q2,re,im,abs\n";
  for (const auto& [idx, v] : t.entries)
    out << idx.k2() << ',' << idx.q2() << ',' << format_double(v.real()) << ','
        << format_double(v.imag()) << ',' << format_double(std::abs(v)) << '\n';
}

MultipoleTable read_table_csv(std::istream& in, Basis basis) {
  expect_header(in, "k2,q2,re,im,abs");
  MultipoleTable t{basis, 0, {}};
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 5) throw ParseError("expected 5 columns on line " + std::to_string(lineno), 0);
    const TensorIndex idx(std::stoi(cells[0]), std::stoi(cells[1]));
    t.entries[idx] = {std::stod(cells[2]), std::stod(cells[3])};
    t.m2 = std::max(t.m2, idx.k2());
  }
  return t;
}

void write_profile_csv(std::ostream& out, const CumulativeProfile& p) {
  out << "m2,value\n";
  for (const auto& [m2, v] : p.entries) out << m2 << ',' << format_double(v) << '\n';
}

void write_moments_csv(std::ostream& out, const QuadratureMomentSet& m) {
  out << "theta,j,moment\n";
  for (std::size_t k = 0; k < m.phases.size(); ++k)
    for (int j = 0; j <= m.max_power; ++j)
      out << format_double(m.phases[k]) << ',' << j << ',' << format_double(m.moments[k][j]) << '\n';
}

QuadratureMomentSet read_moments_csv(std::istream& in) {
  expect_header(in, "theta,j,moment");
  std::map<double, std::map<int, double>> rows;
  std::vector<double> order;
  std::string line;
  int max_j = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 3) throw ParseError("expected 3 columns in moment CSV", 0);
    const double th = std::stod(cells[0]);
    const int j = std::stoi(cells[1]);
    if (!rows.count(th)) order.push_back(th);
    rows[th][j] = std::stod(cells[2]);
    max_j = std::max(max_j, j);
  }
  QuadratureMomentSet m{order, max_j, {}};
  for (const double th : order) {
    std::vector<double> row(static_cast<std::size_t>(max_j) + 1, 0.0);
    for (const auto& [j, v] : rows[th]) row[j] = v;
    m.moments.push_back(std::move(row));
  }
  return m;
}

}  // namespace cvmp
