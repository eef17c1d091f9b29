#pragma once
// Quotients of Hilbert squares of K3 surfaces: N2, b2 and pi1 from a permutation group
// and an ingested invariant-lattice rank.

#include <fstream>
#include <sstream>

#include "terminvar/finite_group.hpp"
#include "terminvar/hilb2_data.hpp"

namespace terminvar {

struct OddOrderGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct HilbRecord {
  std::string group_id;
  int rank = 0;
  int N2 = 0;
  int b2 = 0;
  GroupFingerprint pi1;
};

// Involutions are the only elements with a codimension-2 fixed locus on S^[2], so N3 = 0.
inline HilbRecord hilb_invariants(const PermGroup &G, int rank, std::string group_id = {}) {
  if (G.order() % 2) throw OddOrderGroup("group of odd order " + std::to_string(G.order()) + " has a terminal quotient");
  const CayleyGroup &C = G.table;
  HilbRecord r;
  r.group_id = std::move(group_id);
  r.rank = rank;
  std::vector<int> involutions;
  for (auto &cls : C.conjugacy_classes()) {
    if (C.order(cls.front()) != 2) continue;
    ++r.N2;
    involutions.insert(involutions.end(), cls.begin(), cls.end());
  }
  r.b2 = rank + r.N2;
  r.pi1 = identify(C.quotient(C.normal_closure(involutions)));
  return r;
}

//===----------------------------------------------------------------------===//
// Table data
//===----------------------------------------------------------------------===//

struct HilbRow {
  std::string id, alias;
  int rank = 0;
  int degree = 0;                  // 0 when no generators ship
  std::vector<std::string> generators;
  int N2 = 0, b2 = 0;
  std::string pi1;

  bool fixtured() const { return !generators.empty(); }
  bool simply_connected() const { return pi1 == "{1}"; }
  PermGroup group() const { return PermGroup::from_cycles(degree, generators); }
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') out.back() += '"', ++i;
      else if (c == '"') quoted = false;
      else out.back() += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line: " + line);
  return out;
}

inline std::string trim(const std::string &s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace detail

// Columns: group_id, alias, rank, perm_degree, generators (';'-separated cycles),
// expected_N2, expected_b2, expected_pi1.
inline std::vector<HilbRow> parse_hilb_csv(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::vector<HilbRow> rows;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    auto f = detail::split_csv_line(line);
    if (f.size() != 8) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 8 fields");
    if (header) {
      header = false;
      if (f[0] == "group_id") continue;
    }
    try {
      HilbRow r;
      r.id = f[0];
      r.alias = f[1];
      r.rank = std::stoi(f[2]);
      r.degree = f[3].empty() ? 0 : std::stoi(f[3]);
      std::stringstream gs(f[4]);
      std::string g;
      while (std::getline(gs, g, ';'))
        if (!detail::trim(g).empty()) r.generators.push_back(detail::trim(g));
      r.N2 = std::stoi(f[5]);
      r.b2 = std::stoi(f[6]);
      r.pi1 = f[7];
      if (r.fixtured() && r.degree <= 0) throw std::invalid_argument("generators need a positive degree");
      rows.push_back(std::move(r));
    } catch (const std::logic_error &e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

inline std::vector<HilbRow> load_hilb_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_hilb_csv(ss.str());
}

inline const std::vector<HilbRow> &hilb_table() {
  static const std::vector<HilbRow> rows = parse_hilb_csv(detail::hilb2_csv);
  return rows;
}

inline const HilbRow &hilb_row(const std::string &id) {
  for (auto &r : hilb_table())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown Hilbert-square row " + id);
}

} // namespace terminvar
