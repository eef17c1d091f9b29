#pragma once
// Table assembly, JSON/CSV/Markdown emission, record serialization and the per-cell
// verification harness.

#include <atomic>
#include <thread>

#include "terminvar/catalogue.hpp"
#include "terminvar/hilb2.hpp"
#include "terminvar/singularities.hpp"
#include "terminvar/topology.hpp"

namespace terminvar {

struct Table {
  std::string name;
  std::string caption;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

inline const std::vector<std::string> &table_names() {
  static const std::vector<std::string> names{"kummer-n2", "kummer-n2-sing", "kummer-n3-sing", "hilb2", "fixed-loci"};
  return names;
}

inline std::string table_caption(const std::string &name) {
  if (name == "kummer-n2") return "Terminalizations of K_2(A)/G";
  if (name == "kummer-n2-sing") return "Terminalizations of K_2(A)/G with simply connected regular locus";
  if (name == "kummer-n3-sing") return "Terminalizations of K_3(A)/G with simply connected regular locus";
  if (name == "hilb2") return "Terminalizations of S^[2]/G";
  if (name == "fixed-loci") return "Number of surfaces and isolated points fixed by G";
  throw std::invalid_argument("unknown table '" + name + "'");
}

// Runs f(0..n-1) on up to `jobs` threads; results keep index order.
template <class T, class F> std::vector<T> parallel_rows(size_t n, int jobs, F f) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < n;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  int k = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int t = 1; t < k; ++t) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline std::string split_string(const std::map<std::vector<std::string>, int> &split) {
  std::string s;
  for (auto &[labels, count] : split) {
    if (!s.empty()) s += " ";
    std::string key;
    for (auto &l : labels) key += (key.empty() ? "" : "+") + l;
    s += (key.empty() ? "none" : key) + ":" + std::to_string(count);
  }
  return s;
}

//===----------------------------------------------------------------------===//
// Computed and expected tables
//===----------------------------------------------------------------------===//

namespace detail {

inline std::string str(int x) { return std::to_string(x); }

inline Table empty_table(const std::string &name) {
  Table t{name, table_caption(name), {}, {}};
  if (name == "kummer-n2") t.columns = {"ID", "G", "order", "G0", "rank", "N2", "N3", "b2", "pi1"};
  if (name == "kummer-n2-sing") t.columns = {"ID", "N2", "N3", "b2", "a2", "a3", "a4", "b4", "chi", "c4", "c2^2"};
  if (name == "kummer-n3-sing") t.columns = {"ID", "i", "N2", "b2", "a2", "s2"};
  if (name == "hilb2") t.columns = {"ID", "alias", "rank", "N2", "b2", "pi1"};
  if (name == "fixed-loci") t.columns = {"G", "surfaces", "points", "split"};
  return t;
}

inline std::string order_of(const std::string &id) { return id.substr(0, id.find(',')); }

} // namespace detail

inline Table computed_table(const std::string &name, int jobs = 1) {
  using detail::str;
  Table t = detail::empty_table(name);
  using Row = std::vector<std::string>;
  if (name == "kummer-n2") {
    auto &rows = k2_table();
    t.rows = parallel_rows<Row>(rows.size(), jobs, [&](size_t i) {
      auto &r = rows[i];
      ActionGroup G = build_group(r.spec);
      InvariantRecord rec = invariant_record(G);
      return Row{r.id,          r.label, std::to_string(G.order()), rec.g0, str(rec.rank()), str(rec.betti.N2),
                 str(rec.betti.N3), str(rec.betti.b2), rec.pi1.name()};
    });
  } else if (name == "kummer-n2-sing") {
    auto &rows = k2_sing_table();
    t.rows = parallel_rows<Row>(rows.size(), jobs, [&](size_t i) {
      auto &r = rows[i];
      ActionGroup G = build_group(k2_row(r.id).spec);
      BettiData b = betti_data(G);
      SingularCensus c = census_n2(G);
      TopologyRecord top = topology_n2(b.b2, b.b3.value_or(0), c.a2, c.a3, c.a4);
      return Row{r.id,       str(b.N2),         str(b.N3),          str(b.b2),         str(c.a2),         str(c.a3),
                 str(c.a4), to_string(top.b4), to_string(top.chi), to_string(top.c4), to_string(top.c2sq)};
    });
  } else if (name == "kummer-n3-sing") {
    for (auto &r : k3_table()) {
      ActionGroup G = build_group(r.spec);
      BettiData b = betti_data(G);
      SingularCensus c = census_n3(r.i);
      t.rows.push_back({r.id, str(r.i), str(b.N2), str(b.b2), str(c.a2), str(c.s2)});
    }
  } else if (name == "hilb2") {
    auto &rows = hilb_table();
    t.rows = parallel_rows<Row>(rows.size(), jobs, [&](size_t i) {
      auto &r = rows[i];
      if (!r.fixtured()) return Row{r.id, r.alias, str(r.rank), "", "", ""};
      HilbRecord h = hilb_invariants(r.group(), r.rank, r.id);
      return Row{r.id, r.alias, str(r.rank), str(h.N2), str(h.b2), h.pi1.name()};
    });
  } else if (name == "fixed-loci") {
    for (auto &r : fixed_loci_table()) {
      GroupFixedLocus f = group_fixed_locus(build_group(r.spec));
      t.rows.push_back({r.group, str(f.surfaces), std::to_string(f.points.size()), split_string(f.split)});
    }
  }
  return t;
}

inline Table expected_table(const std::string &name) {
  using detail::str;
  Table t = detail::empty_table(name);
  if (name == "kummer-n2") {
    for (auto &r : k2_table())
      t.rows.push_back({r.id, r.label, detail::order_of(r.id), r.g0, str(r.rank), str(r.N2), str(r.N3), str(r.b2), r.pi1});
  } else if (name == "kummer-n2-sing") {
    for (auto &r : k2_sing_table())
      t.rows.push_back({r.id, str(r.N2), str(r.N3), str(r.b2), str(r.a2), str(r.a3), str(r.a4), str(r.b4), str(r.chi),
                        r.c4, r.c2sq});
  } else if (name == "kummer-n3-sing") {
    for (auto &r : k3_table()) t.rows.push_back({r.id, str(r.i), str(r.N2), str(r.b2), str(r.a2), str(r.s2)});
  } else if (name == "hilb2") {
    for (auto &r : hilb_table()) t.rows.push_back({r.id, r.alias, str(r.rank), str(r.N2), str(r.b2), r.pi1});
  } else if (name == "fixed-loci") {
    for (auto &r : fixed_loci_table()) {
      std::map<std::vector<std::string>, int> split(r.split.begin(), r.split.end());
      t.rows.push_back({r.group, str(r.surfaces), str(r.points), split_string(split)});
    }
  }
  return t;
}

//===----------------------------------------------------------------------===//
// Emission
//===----------------------------------------------------------------------===//

namespace detail {

inline bool is_integer(const std::string &s) {
  if (s.empty() || s.size() > 18) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline std::string csv_cell(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

} // namespace detail

inline nlohmann::ordered_json table_json(const Table &t) {
  nlohmann::ordered_json j;
  j["table"] = t.name;
  j["caption"] = t.caption;
  j["rows"] = nlohmann::ordered_json::array();
  for (auto &row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (size_t c = 0; c < t.columns.size(); ++c) {
      const std::string &v = row[c];
      if (v.empty()) r[t.columns[c]] = nullptr;
      else if (detail::is_integer(v)) r[t.columns[c]] = std::stoll(v);
      else r[t.columns[c]] = v;
    }
    j["rows"].push_back(r);
  }
  return j;
}

inline std::string format_table(const Table &t, const std::string &format) {
  std::string out;
  if (format == "json") return table_json(t).dump(2) + "\n";
  if (format == "csv") {
    for (size_t c = 0; c < t.columns.size(); ++c) out += (c ? "," : "") + detail::csv_cell(t.columns[c]);
    out += "\n";
    for (auto &row : t.rows) {
      for (size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + detail::csv_cell(row[c]);
      out += "\n";
    }
    return out;
  }
  if (format == "md") {
    out = "### " + t.caption + "\n\n|";
    for (auto &c : t.columns) out += " " + c + " |";
    out += "\n|";
    for (size_t c = 0; c < t.columns.size(); ++c) out += "---|";
    out += "\n";
    for (auto &row : t.rows) {
      out += "|";
      for (auto &v : row) out += " " + (v.empty() ? std::string("-") : v) + " |";
      out += "\n";
    }
    return out;
  }
  throw std::invalid_argument("unknown format '" + format + "' (json, csv, md)");
}

//===----------------------------------------------------------------------===//
// Verification
//===----------------------------------------------------------------------===//

struct CellDiff {
  std::string row, column, expected, computed;
};

struct VerifyReport {
  std::string table;
  size_t rows = 0, cells = 0, skipped_rows = 0;
  std::vector<CellDiff> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Rows of the Hilbert-square table without generators carry only ingested data and are skipped.
inline VerifyReport verify_table(const std::string &name, int jobs = 1) {
  Table exp = expected_table(name), got = computed_table(name, jobs);
  VerifyReport r{name, 0, 0, 0, {}};
  if (exp.rows.size() != got.rows.size())
    r.mismatches.push_back({"*", "row count", std::to_string(exp.rows.size()), std::to_string(got.rows.size())});
  for (size_t i = 0; i < std::min(exp.rows.size(), got.rows.size()); ++i) {
    if (name == "hilb2" && !hilb_table()[i].fixtured()) {
      ++r.skipped_rows;
      continue;
    }
    ++r.rows;
    for (size_t c = 0; c < exp.columns.size(); ++c) {
      ++r.cells;
      if (exp.rows[i][c] != got.rows[i][c]) r.mismatches.push_back({exp.rows[i][0], exp.columns[c], exp.rows[i][c], got.rows[i][c]});
    }
  }
  return r;
}

inline std::string format_verify(const VerifyReport &r) {
  std::string s = r.table + ": " + std::to_string(r.rows) + " rows, " + std::to_string(r.cells) + " cells compared";
  if (r.skipped_rows) s += ", " + std::to_string(r.skipped_rows) + " rank-only rows skipped";
  s += ", " + std::to_string(r.mismatches.size()) + " mismatches\n";
  for (auto &d : r.mismatches)
    s += "  row " + d.row + " column " + d.column + ": expected " + d.expected + ", computed " + d.computed + "\n";
  return s;
}

//===----------------------------------------------------------------------===//
// Records
//===----------------------------------------------------------------------===//

inline nlohmann::ordered_json census_json(const SingularCensus &c) {
  return {{"a2", c.a2}, {"a3", c.a3}, {"a4", c.a4}, {"a6", c.a6}, {"s2", c.s2}, {"smooth", c.smooth}};
}

inline nlohmann::ordered_json topology_json(const TopologyRecord &t) {
  return {{"b4", to_string(t.b4)}, {"chi", to_string(t.chi)}, {"c4", to_string(t.c4)}, {"c2^2", to_string(t.c2sq)}};
}

struct FullRecord {
  size_t order = 0;
  int n = 2;
  InvariantRecord inv;
  std::optional<SingularCensus> census;
  std::optional<TopologyRecord> topology;
  std::string census_note;
};

// k3_index: the i of G = C2^i x <-id> when the group is a catalogue K3 row.
inline FullRecord full_record(const ActionGroup &G, std::optional<int> k3_index = std::nullopt) {
  FullRecord r;
  r.order = G.order();
  r.n = G.n();
  r.inv = invariant_record(G);
  if (G.n() == 2) {
    try {
      r.census = census_n2(G);
    } catch (const UnmatchedLocalModel &e) {
      r.census_note = e.what();
    }
    if (r.census && r.inv.betti.b3)
      r.topology = topology_n2(r.inv.betti.b2, *r.inv.betti.b3, r.census->a2, r.census->a3, r.census->a4);
    else if (r.census)
      r.census_note = "b3 is not determined for a translation group; topology omitted";
  } else if (k3_index) {
    r.census = census_n3(*k3_index);
  } else {
    r.census_note = "n = 3 censuses are available for the catalogue rows only";
  }
  return r;
}

inline nlohmann::ordered_json record_json(const FullRecord &r) {
  const InvariantRecord &v = r.inv;
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["n"] = r.n;
  j["group"] = v.fingerprint.name();
  j["fingerprint"] = v.fingerprint.key();
  j["G0"] = v.g0;
  j["rank_H2A"] = v.betti.rank_H2A;
  j["rank"] = v.rank();
  j["N2"] = v.betti.N2;
  j["N3"] = v.betti.N3;
  j["epsilon"] = v.betti.epsilon;
  j["b2"] = v.betti.b2;
  j["b3"] = v.betti.b3 ? nlohmann::ordered_json(*v.betti.b3) : nlohmann::ordered_json("n/a");
  j["pi1"] = v.pi1.name();
  j["gate"] = to_string(v.gate);
  j["census"] = r.census ? census_json(*r.census) : nlohmann::ordered_json(nullptr);
  j["topology"] = r.topology ? topology_json(*r.topology) : nlohmann::ordered_json(nullptr);
  if (!r.census_note.empty()) j["note"] = r.census_note;
  return j;
}

inline std::string format_record(const FullRecord &r, const std::string &format) {
  nlohmann::ordered_json j = record_json(r);
  if (format == "json") return j.dump(2) + "\n";
  // flat key/value rows for csv and md
  std::vector<std::pair<std::string, std::string>> kv;
  auto flat = [&](const std::string &prefix, const nlohmann::ordered_json &o, auto &self) -> void {
    for (auto &[k, v] : o.items()) {
      if (v.is_object()) self(prefix + k + ".", v, self);
      else kv.push_back({prefix + k, v.is_string() ? v.template get<std::string>() : v.dump()});
    }
  };
  flat("", j, flat);
  std::string out;
  if (format == "csv") {
    for (size_t i = 0; i < kv.size(); ++i) out += (i ? "," : "") + detail::csv_cell(kv[i].first);
    out += "\n";
    for (size_t i = 0; i < kv.size(); ++i) out += (i ? "," : "") + detail::csv_cell(kv[i].second);
    return out + "\n";
  }
  if (format == "md") {
    out = "| field | value |\n|---|---|\n";
    for (auto &[k, v] : kv) out += "| " + k + " | " + v + " |\n";
    return out;
  }
  throw std::invalid_argument("unknown format '" + format + "' (json, csv, md)");
}

inline nlohmann::ordered_json configuration_json(const SingularConfiguration &c) {
  nlohmann::ordered_json j;
  j["surfaces"] = nlohmann::ordered_json::array();
  for (auto &s : c.surfaces) j["surfaces"].push_back({{"id", s.id}, {"type", s.type}, {"pattern", s.pattern}});
  j["points"] = nlohmann::ordered_json::array();
  for (auto &p : c.points)
    j["points"].push_back({{"isotropy", p.isotropy},
                           {"on_surfaces", p.on_surfaces},
                           {"local_model", p.local_model},
                           {"representative", p.representative},
                           {"orbit_size", p.orbit_size},
                           {"translation_type", p.translation_type}});
  j["census"] = census_json(c.census);
  return j;
}

} // namespace terminvar
