#pragma once
// Qualifying elements, N2/N3, the BD12 correction, b2, pi1 of the regular locus and the
// canonicity gate.

#include <set>

#include "terminvar/group.hpp"

namespace terminvar {

enum class Qualification { None, InvolutionSurface, Order3Surface };

inline const char *to_string(Qualification q) {
  switch (q) {
  case Qualification::None: return "none";
  case Qualification::InvolutionSurface: return "involution-surface";
  case Qualification::Order3Surface: return "order3-surface";
  }
  return "?";
}

inline bool is_minus_identity(const Mat4 &M) {
  for (int i = 0; i < 16; ++i)
    if (M[i] != (i % 5 == 0 ? -1 : 0)) return false;
  return true;
}

inline Qualification qualify(const Ambient &amb, Code g, int n) {
  const LinearGroup &L = amb.linear_group();
  int l = amb.lin(g);
  const Mat4 &M = L.elements[l].int_matrix;
  int t = amb.trans(g);
  if (n == 2) {
    if (is_minus_identity(M)) return Qualification::InvolutionSurface;
    if (L.order[l] == 3 && amb.act_translation(l, t) == t) return Qualification::Order3Surface;
  } else if (n == 3) {
    if (is_minus_identity(M) && amb.add_translation(t, t) == 0) return Qualification::InvolutionSurface;
  }
  return Qualification::None;
}

inline Qualification qualify(const ActionGroup &G, Code g) { return qualify(G.ambient(), g, G.n()); }

struct SurfaceClasses {
  std::vector<Code> involutions; // class representatives
  std::vector<Code> order3;      // one generator per class of order-3 subgroups
};

inline SurfaceClasses qualifying_classes(const ActionGroup &G) {
  SurfaceClasses out;
  const Ambient &amb = G.ambient();
  std::set<int> seen3;
  for (size_t c = 0; c < G.conjugacy_classes().size(); ++c) {
    Code rep = G.conjugacy_classes()[c].front();
    Qualification q = qualify(G, rep);
    if (q == Qualification::InvolutionSurface) {
      out.involutions.push_back(rep);
    } else if (q == Qualification::Order3Surface) {
      int partner = G.class_of(amb.inverse(rep));
      int key = std::min<int>(static_cast<int>(c), partner);
      if (seen3.insert(key).second) out.order3.push_back(rep);
    }
  }
  return out;
}

inline std::pair<int, int> count_N2_N3(const ActionGroup &G) {
  if (G.n() != 2 && G.n() != 3) return {0, 0};
  auto s = qualifying_classes(G);
  return {static_cast<int>(s.involutions.size()), static_cast<int>(s.order3.size())};
}

inline int rank_H2A(const ActionGroup &G) {
  std::vector<IntMatrix> Ms;
  for (int l : G.linear_image()) Ms.push_back(exterior_square(to_int_matrix(G.model().group.elements[l].int_matrix)));
  return static_cast<int>(fixed_subspace_rank(Ms, 6));
}

inline int bd12_epsilon(const ActionGroup &G) {
  if (G.n() != 2 || g0_name(G) != "BD12") return 0;
  const Ambient &amb = G.ambient();
  for (Code g : qualifying_classes(G).order3) {
    Code g2 = amb.compose(g, g);
    for (Code iota : G.elements()) {
      if (amb.element_order(iota) != 4) continue;
      if (amb.conjugate(iota, g) != g2) continue;
      ActionGroup H = closure(amb, std::vector<Code>{g, iota});
      if (H.order() == 12 && H.translation_subgroup().size() == 1) return 1;
    }
  }
  return 0;
}

struct BettiData {
  int rank_H2A = 0;
  int rank_LG = 0;
  int N2 = 0, N3 = 0;
  int epsilon = 0;
  int b2 = 0;
  std::optional<int> b3; // empty means "n/a"
};

inline std::optional<int> ih3_rank(const ActionGroup &G) {
  if (G.linear_image().size() > 1) return 0;
  return std::nullopt;
}

inline BettiData betti_data(const ActionGroup &G) {
  if (G.n() != 2 && G.n() != 3) throw std::invalid_argument("betti_data needs n in {2,3}");
  BettiData d;
  d.rank_H2A = rank_H2A(G);
  d.rank_LG = d.rank_H2A + 1;
  std::tie(d.N2, d.N3) = count_N2_N3(G);
  d.epsilon = bd12_epsilon(G);
  d.b2 = d.rank_LG + d.N2 + 2 * d.N3 - d.epsilon;
  d.b3 = ih3_rank(G);
  return d;
}

inline std::vector<Code> qualifying_elements(const ActionGroup &G) {
  std::vector<Code> out;
  for (Code c : G.elements())
    if (qualify(G, c) != Qualification::None) out.push_back(c);
  return out;
}

inline GroupFingerprint pi1_regular_locus(const ActionGroup &G) {
  ActionGroup N = normal_closure(G, qualifying_elements(G));
  return quotient_fingerprint(G, N);
}

enum class Gate { TerminalQuotient, StrictlyCanonical };
inline const char *to_string(Gate g) {
  return g == Gate::TerminalQuotient ? "terminal-quotient" : "strictly-canonical";
}

inline Gate canonicity_gate(const ActionGroup &G) {
  auto [n2, n3] = count_N2_N3(G);
  return n2 + n3 > 0 ? Gate::StrictlyCanonical : Gate::TerminalQuotient;
}

struct InvariantRecord {
  GroupFingerprint fingerprint;
  std::string g0;
  BettiData betti;
  GroupFingerprint pi1;
  Gate gate = Gate::TerminalQuotient;
  int rank() const { return betti.rank_LG; }
};

inline InvariantRecord invariant_record(const ActionGroup &G) {
  InvariantRecord r;
  r.fingerprint = fingerprint(G);
  r.g0 = g0_name(G);
  r.betti = betti_data(G);
  r.pi1 = pi1_regular_locus(G);
  r.gate = canonicity_gate(G);
  return r;
}

// [fingerprint, G0-type, rank, N2, N3, b2, pi1]
inline std::string invariant_string(const InvariantRecord &r) {
  return r.fingerprint.key() + " | " + r.g0 + " | " + std::to_string(r.rank()) + " | " +
         std::to_string(r.betti.N2) + " | " + std::to_string(r.betti.N3) + " | " + std::to_string(r.betti.b2) +
         " | " + r.pi1.name();
}

} // namespace terminvar
