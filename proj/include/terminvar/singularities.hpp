#pragma once
// Terminalized singularity counts from the stabilizer census, the n = 3 closed forms,
// smoothness detection and the singular-configuration report.

#include "terminvar/fixed_loci.hpp"

namespace terminvar {

struct UnmatchedLocalModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LocalModel {
  std::string isotropy;              // catalogue name of the stabilizer
  std::vector<std::string> branches; // transversal types of the surfaces through the point, sorted

  bool isolated() const { return branches.empty(); }
  std::string str() const {
    if (isolated()) return "isolated " + isotropy;
    std::string s = isotropy + " on ";
    for (size_t i = 0; i < branches.size(); ++i) s += (i ? "+" : "") + branches[i];
    return s;
  }
};

struct Contribution {
  int a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  bool zero() const { return a2 == 0 && a3 == 0 && a4 == 0 && a6 == 0; }
};

inline Contribution transfer_rule(const LocalModel &m) {
  using B = std::vector<std::string>;
  const B &b = m.branches;
  if (m.isolated()) {
    if (m.isotropy == "C2") return {1, 0, 0, 0};
    if (m.isotropy == "C3") return {0, 1, 0, 0};
    if (m.isotropy == "C4") return {0, 0, 1, 0};
    if (m.isotropy == "C6") return {0, 0, 0, 1};
  } else if (m.isotropy == "C4" && b == B{"A1"}) {
    return {2, 0, 0, 0};
  } else if (m.isotropy == "C6" && b == B{"A1"}) {
    return {0, 2, 0, 0};
  } else if (m.isotropy == "C6" && b == B{"A2"}) {
    return {3, 0, 0, 0};
  } else if ((m.isotropy == "C6" && b == B{"A1", "A2"}) || (m.isotropy == "C3^2" && b == B{"A2", "A2"}) ||
             (m.isotropy == "S3" && b == B{"A1"}) || (m.isotropy == "C3xS3" && b == B{"A1", "A2"}) ||
             (m.isotropy == "BT24" && b == B{"A2"})) {
    return {};
  }
  throw UnmatchedLocalModel("no transfer rule for local model " + m.str());
}

inline LocalModel local_model(const StabilizerReport &r) { return {r.isotropy, r.branch_types()}; }

struct SingularCensus {
  int a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  int s2 = 0;
  bool smooth = false;
};

inline SingularCensus census_from(const StabilizerCensus &c) {
  SingularCensus s;
  for (auto &o : c.orbits) {
    Contribution k = transfer_rule(local_model(o));
    s.a2 += k.a2, s.a3 += k.a3, s.a4 += k.a4, s.a6 += k.a6;
  }
  s.smooth = s.a2 == 0 && s.a3 == 0 && s.a4 == 0 && s.a6 == 0;
  return s;
}

inline SingularCensus census_n2(const ActionGroup &G) {
  if (G.n() != 2) throw std::invalid_argument("census_n2 needs n = 2");
  return census_from(stabilizer_census(G));
}

// G = C2^i x <-id> on K3(A).
inline SingularCensus census_n3(int i) {
  if (i < 0 || i > 4) throw std::invalid_argument("census_n3 needs 0 <= i <= 4");
  int p = 1 << i;
  SingularCensus s;
  s.a2 = 4 * (42 - 7 * p + (p - 1) * (p - 2) / 3);
  s.s2 = (p - 1) * (16 - p) / 2;
  s.smooth = s.a2 == 0 && s.s2 == 0;
  return s;
}

struct Smoothness {
  bool smooth = false;
  std::string witness;
};

inline Smoothness smoothness_flag(const SingularCensus &c) {
  if (c.a2 || c.a3 || c.a4 || c.a6 || c.s2)
    return {false, "a2=" + std::to_string(c.a2) + " a3=" + std::to_string(c.a3) + " a4=" + std::to_string(c.a4) +
                       " s2=" + std::to_string(c.s2)};
  return {true, "empty census"};
}

// Smoothness of a terminalization for any n = 2 action, including actions whose census
// contains local models outside the transfer rules. A point that lies on no singular surface
// and has nontrivial isotropy stays singular; so does any point with a nonzero rule.
inline Smoothness smoothness_n2(const ActionGroup &G) {
  StabilizerCensus c = stabilizer_census(G);
  std::vector<std::string> unmatched;
  for (auto &o : c.orbits) {
    LocalModel m = local_model(o);
    if (m.isolated()) return {false, "isolated point with isotropy " + m.isotropy + " at " + o.point.str()};
    try {
      if (!transfer_rule(m).zero()) return {false, m.str() + " at " + o.point.str()};
    } catch (const UnmatchedLocalModel &) {
      unmatched.push_back(m.str());
    }
  }
  if (!unmatched.empty()) throw UnmatchedLocalModel("undecided local model " + unmatched.front());
  return {true, "every special point resolves"};
}

//===----------------------------------------------------------------------===//
// Configuration report
//===----------------------------------------------------------------------===//

struct SingularConfiguration {
  struct Surface {
    int id;
    std::string type;
    std::string pattern;
  };
  struct Point {
    std::string isotropy;
    std::vector<int> on_surfaces;
    std::string local_model;
    std::string representative;
    size_t orbit_size;
    bool translation_type;
  };
  std::vector<Surface> surfaces;
  std::vector<Point> points;
  SingularCensus census;
};

inline SingularConfiguration configuration_report(const ActionGroup &G) {
  if (G.n() != 2) throw std::invalid_argument("configuration_report needs n = 2");
  StabilizerCensus c = stabilizer_census(G);
  const LineCatalogue &cat = line_catalogue(G.model());
  SingularConfiguration out;
  for (size_t i = 0; i < c.surfaces.surfaces.size(); ++i) {
    auto &s = c.surfaces.surfaces[i];
    out.surfaces.push_back({static_cast<int>(i), s.transversal(), s.pattern});
  }
  for (auto &o : c.orbits)
    out.points.push_back({o.isotropy, o.surface_ids(), local_model(o).str(), o.point.str(&cat), o.orbit_size,
                          o.translation_type});
  std::stable_sort(out.points.begin(), out.points.end(), [](auto &a, auto &b) {
    return std::tie(a.on_surfaces, a.isotropy) < std::tie(b.on_surfaces, b.isotropy);
  });
  out.census = census_from(c);
  return out;
}

} // namespace terminvar
