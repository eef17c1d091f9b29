#pragma once
// Fixed points of group elements on A and on K2(A): distinct triples, points on the
// P^1-fibres over x+x+y and points of the punctual Hilbert scheme over x+x+x.

#include <set>

#include "terminvar/invariants.hpp"

namespace terminvar {

//===----------------------------------------------------------------------===//
// Points of A
//===----------------------------------------------------------------------===//

inline RationalTorusPoint apply_point(const Ambient &amb, Code g, const RationalTorusPoint &x) {
  const Mat4 &M = amb.linear_part(g).int_matrix;
  auto t = amb.digits(amb.trans(g));
  int64_t m = amb.modulus();
  int64_t d = std::lcm(x.den, m);
  int64_t sx = d / x.den, st = d / m;
  std::array<int64_t, 4> n{};
  for (int i = 0; i < 4; ++i) {
    int64_t s = 0;
    for (int j = 0; j < 4; ++j) s += M[4 * i + j] * x.num[j];
    n[i] = s * sx + t[i] * st;
  }
  return RationalTorusPoint(d, n);
}

struct FixSet {
  enum class Kind { Points, Continuum, Empty };
  Kind kind = Kind::Empty;
  std::vector<RationalTorusPoint> points; // sorted

  size_t size() const { return points.size(); }
  bool contains(const RationalTorusPoint &p) const { return std::binary_search(points.begin(), points.end(), p); }
};

inline std::vector<Rational> translation_rationals(const Ambient &amb, Code g) {
  auto t = amb.digits(amb.trans(g));
  std::vector<Rational> v;
  for (int i = 0; i < 4; ++i) v.emplace_back(t[i], amb.modulus());
  return v;
}

// Solutions of g(x) = x, i.e. (M - I) x = -alpha.
inline FixSet fix_on_A(const Ambient &amb, Code g) {
  IntMatrix M = to_int_matrix(amb.linear_part(g).int_matrix) - IntMatrix::identity(4);
  auto a = translation_rationals(amb, g);
  for (auto &x : a) x = -x;
  CongruenceSolution s = solve_congruence(M, a);
  if (s.continuum) return {FixSet::Kind::Continuum, {}};
  if (s.points.empty()) return {FixSet::Kind::Empty, {}};
  return {FixSet::Kind::Points, std::move(s.points)};
}

inline Code power(const Ambient &amb, Code g, int k) {
  Code r = amb.identity();
  for (int i = 0; i < k; ++i) r = amb.compose(r, g);
  return r;
}

//===----------------------------------------------------------------------===//
// Invariant lines in P(V*)
//===----------------------------------------------------------------------===//

// Eigenlines of the dual action of every non-scalar linear part, with the action table.
struct LineCatalogue {
  std::vector<ProjPoint> lines;
  std::vector<std::vector<int>> act;   // act[l][line]
  std::vector<std::vector<int>> fixed; // eigenlines of the dual of l; empty when scalar
  std::vector<char> scalar;

  int find(const ProjPoint &p) const {
    for (size_t i = 0; i < lines.size(); ++i)
      if (lines[i] == p) return static_cast<int>(i);
    return -1;
  }
};

inline const LineCatalogue &line_catalogue(const SurfaceModel &model) {
  static std::mutex mu;
  static std::map<const SurfaceModel *, std::unique_ptr<LineCatalogue>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto &slot = cache[&model];
  if (slot) return *slot;
  auto cat = std::make_unique<LineCatalogue>();
  const LinearGroup &L = model.group;
  std::vector<CycMatrix2> duals;
  for (auto &p : L.elements) duals.push_back(p.cx_matrix.dual());
  cat->fixed.resize(L.size());
  cat->scalar.resize(L.size());
  for (int l = 0; l < L.size(); ++l) {
    EigenLines e = eigen_lines(duals[l]);
    cat->scalar[l] = e.all;
    for (auto &[lambda, p] : e.lines) {
      int id = cat->find(p);
      if (id < 0) id = static_cast<int>(cat->lines.size()), cat->lines.push_back(p);
      cat->fixed[l].push_back(id);
    }
  }
  cat->act.assign(L.size(), std::vector<int>(cat->lines.size()));
  for (int l = 0; l < L.size(); ++l)
    for (size_t i = 0; i < cat->lines.size(); ++i) {
      int j = cat->find(duals[l].apply(cat->lines[i]));
      if (j < 0) throw std::logic_error("line catalogue is not closed under the linear group");
      cat->act[l][i] = j;
    }
  slot = std::move(cat);
  return *slot;
}

//===----------------------------------------------------------------------===//
// Points of K2(A)
//===----------------------------------------------------------------------===//

struct KummerPoint {
  enum class Variant : uint8_t { Triple, CurveFiber, Punctual };
  enum class Datum : uint8_t { None, Line, MSquared };

  Variant variant = Variant::Triple;
  std::array<RationalTorusPoint, 3> support; // triple: sorted; curve: {x,x,y}; punctual: {x,x,x}
  Datum datum = Datum::None;
  int line = -1; // index into the model's LineCatalogue

  static KummerPoint triple(RationalTorusPoint a, RationalTorusPoint b, RationalTorusPoint c) {
    KummerPoint z;
    z.support = {a, b, c};
    std::sort(z.support.begin(), z.support.end());
    return z;
  }
  static KummerPoint curve(const RationalTorusPoint &x, const RationalTorusPoint &y, int line) {
    KummerPoint z;
    z.variant = Variant::CurveFiber;
    z.support = {x, x, y};
    z.datum = Datum::Line;
    z.line = line;
    return z;
  }
  static KummerPoint punctual(const RationalTorusPoint &x, Datum d, int line = -1) {
    KummerPoint z;
    z.variant = Variant::Punctual;
    z.support = {x, x, x};
    z.datum = d;
    z.line = line;
    return z;
  }

  friend auto operator<=>(const KummerPoint &, const KummerPoint &) = default;
  friend bool operator==(const KummerPoint &, const KummerPoint &) = default;

  std::string str(const LineCatalogue *cat = nullptr) const {
    switch (variant) {
    case Variant::Triple:
      return "[" + support[0].str() + " + " + support[1].str() + " + " + support[2].str() + "]";
    case Variant::CurveFiber:
      return "fibre over 2" + support[0].str() + " + " + support[2].str() + " at " +
             (cat ? cat->lines[line].str() : "line " + std::to_string(line));
    case Variant::Punctual:
      return "H3 over " + support[0].str() + " at " +
             (datum == Datum::MSquared ? std::string("m^2") : (cat ? cat->lines[line].str() : "line " + std::to_string(line)));
    }
    return "?";
  }
};

inline KummerPoint apply(const Ambient &amb, Code g, const KummerPoint &z) {
  const LineCatalogue &cat = line_catalogue(amb.model());
  int l = amb.lin(g);
  KummerPoint w = z;
  switch (z.variant) {
  case KummerPoint::Variant::Triple:
    return KummerPoint::triple(apply_point(amb, g, z.support[0]), apply_point(amb, g, z.support[1]),
                               apply_point(amb, g, z.support[2]));
  case KummerPoint::Variant::CurveFiber:
    w.support = {apply_point(amb, g, z.support[0]), w.support[0], apply_point(amb, g, z.support[2])};
    w.support[1] = w.support[0];
    break;
  case KummerPoint::Variant::Punctual:
    w.support[0] = w.support[1] = w.support[2] = apply_point(amb, g, z.support[0]);
    break;
  }
  if (z.datum == KummerPoint::Datum::Line) w.line = cat.act[l][z.line];
  return w;
}

struct FixedSurface {
  Code generator = 0;
  Qualification type = Qualification::None;
  std::string pattern;
  const char *transversal() const { return type == Qualification::InvolutionSurface ? "A1" : "A2"; }
};

struct K2FixedLocus {
  std::vector<KummerPoint> isolated; // sorted, not on the element's own surface
  std::optional<FixedSurface> surface;
};

inline FixedSurface fixed_surface(const Ambient &amb, Code g) {
  Qualification q = qualify(amb, g, 2);
  if (q == Qualification::None) throw std::invalid_argument("element does not fix a surface");
  RationalTorusPoint a = RationalTorusPoint::from_torsion(amb.translation(g));
  std::string pattern = q == Qualification::InvolutionSurface
                            ? "[(x, -x+a, -a)] with a = " + a.str()
                            : "[(x, g(x), g^2(x))] with g = tau_a T, a = " + a.str();
  return {g, q, pattern};
}

inline K2FixedLocus fixed_points_on_K2(const Ambient &amb, Code g) {
  if (amb.n() != 2) throw std::invalid_argument("fixed_points_on_K2 needs n = 2");
  if (g == amb.identity()) throw std::invalid_argument("fixed_points_on_K2 rejects the identity");
  const LineCatalogue &cat = line_catalogue(amb.model());
  const LinearGroup &L = amb.linear_group();
  int l = amb.lin(g);
  Qualification q = qualify(amb, g, 2);
  K2FixedLocus out;
  if (q != Qualification::None) out.surface = fixed_surface(amb, g);
  std::set<KummerPoint> pts;

  FixSet P = fix_on_A(amb, g);
  auto fixed_by_g = [&](const RationalTorusPoint &x) { return apply_point(amb, g, x) == x; };

  // orbit type {1,1,1}
  for (size_t i = 0; i < P.size(); ++i)
    for (size_t j = i + 1; j < P.size(); ++j) {
      RationalTorusPoint z = -(P.points[i] + P.points[j]);
      if (P.points[j] < z && P.contains(z)) pts.insert(KummerPoint::triple(P.points[i], P.points[j], z));
    }

  // orbit type {2,1}; g^2 = id is the involution surface
  Code g2 = amb.compose(g, g);
  if (g2 != amb.identity()) {
    FixSet X = fix_on_A(amb, g2);
    if (X.kind == FixSet::Kind::Continuum) throw std::logic_error("unexpected continuum for g^2");
    for (auto &x : X.points) {
      RationalTorusPoint gx = apply_point(amb, g, x);
      if (gx == x) continue;
      RationalTorusPoint y = -(x + gx);
      if (fixed_by_g(y)) pts.insert(KummerPoint::triple(x, gx, y));
    }
  }

  // orbit type {3}
  Code g3 = amb.compose(g2, g);
  if (g3 != amb.identity()) {
    FixSet X = fix_on_A(amb, g3);
    if (X.kind == FixSet::Kind::Continuum) throw std::logic_error("unexpected continuum for g^3");
    for (auto &x : X.points) {
      RationalTorusPoint gx = apply_point(amb, g, x);
      if (gx == x) continue;
      RationalTorusPoint ggx = apply_point(amb, g, gx);
      if ((x + gx + ggx).is_zero()) pts.insert(KummerPoint::triple(x, gx, ggx));
    }
  } else {
    // x + g(x) + g^2(x) = (1 + M + M^2) x + (M + 2) a
    IntMatrix M = to_int_matrix(amb.linear_part(g).int_matrix);
    IntMatrix S = IntMatrix::identity(4) + M + M * M;
    auto a = translation_rationals(amb, g);
    IntMatrix Mp2 = M + IntMatrix::identity(4) + IntMatrix::identity(4);
    std::vector<Rational> b(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) b[i] -= Rational(Mp2(i, j)) * a[j];
    CongruenceSolution s = solve_congruence(S, b);
    if (s.continuum) {
      if (q != Qualification::Order3Surface) throw std::logic_error("positive-dimensional 3-orbits for a non-qualifying element");
    } else {
      for (auto &x : s.points) {
        RationalTorusPoint gx = apply_point(amb, g, x);
        if (gx == x) continue;
        pts.insert(KummerPoint::triple(x, gx, apply_point(amb, g, gx)));
      }
    }
  }

  // fibres over x + x + y
  for (auto &x : P.points) {
    RationalTorusPoint y = -(2 * x);
    if (y == x || !P.contains(y)) continue;
    if (cat.scalar[l]) continue; // the whole fibre, part of the involution surface
    for (int line : cat.fixed[l]) pts.insert(KummerPoint::curve(x, y, line));
  }

  // punctual Hilbert scheme over x + x + x
  for (auto &x : P.points) {
    if (!(3 * x).is_zero()) continue;
    int ord = L.order[l];
    if (ord == 2) {
      pts.insert(KummerPoint::punctual(x, KummerPoint::Datum::MSquared));
    } else if (ord == 3) {
      // two lines through m^2, all on the order-3 surface
      if (q != Qualification::Order3Surface) throw std::logic_error("fixed lines through m^2 for a non-qualifying element");
    } else {
      pts.insert(KummerPoint::punctual(x, KummerPoint::Datum::MSquared));
      for (int line : cat.fixed[l]) pts.insert(KummerPoint::punctual(x, KummerPoint::Datum::Line, line));
    }
  }
  out.isolated.assign(pts.begin(), pts.end());
  return out;
}

// Is z on F_g? Assumes g fixes z.
inline bool surface_membership(const Ambient &amb, const KummerPoint &z, Code g) {
  Qualification q = qualify(amb, g, 2);
  if (q == Qualification::None) return false;
  if (apply(amb, g, z) != z) return false;
  switch (z.variant) {
  case KummerPoint::Variant::Triple:
    // a nontrivial cycle on the support: 2-cycle for the involution, 3-cycle for order 3
    for (auto &x : z.support)
      if (apply_point(amb, g, x) != x) return true;
    return false;
  case KummerPoint::Variant::CurveFiber:
    return q == Qualification::InvolutionSurface;
  case KummerPoint::Variant::Punctual:
    if (z.datum == KummerPoint::Datum::MSquared) return q == Qualification::Order3Surface;
    return true;
  }
  return false;
}

inline bool surface_membership(const Ambient &amb, const KummerPoint &z, const FixedSurface &F) {
  return surface_membership(amb, z, F.generator);
}

//===----------------------------------------------------------------------===//
// Stabilizer census
//===----------------------------------------------------------------------===//

struct SurfaceIncidence {
  int surface = -1; // index into SurfaceCatalogue::surfaces
  Code generator = 0;
  const char *type = "A1";
};

// Singular surfaces of X/G: conjugacy classes of qualifying cyclic subgroups.
struct SurfaceCatalogue {
  std::vector<FixedSurface> surfaces;
  std::vector<int> class_to_surface; // conjugacy class index -> surface, -1 if not qualifying
};

inline SurfaceCatalogue surface_catalogue(const ActionGroup &G) {
  SurfaceCatalogue sc;
  sc.class_to_surface.assign(G.conjugacy_classes().size(), -1);
  const Ambient &amb = G.ambient();
  auto s = qualifying_classes(G);
  for (Code g : s.involutions) {
    sc.class_to_surface[G.class_of(g)] = static_cast<int>(sc.surfaces.size());
    sc.surfaces.push_back(fixed_surface(amb, g));
  }
  for (Code g : s.order3) {
    int id = static_cast<int>(sc.surfaces.size());
    sc.class_to_surface[G.class_of(g)] = id;
    sc.class_to_surface[G.class_of(amb.inverse(g))] = id;
    sc.surfaces.push_back(fixed_surface(amb, g));
  }
  return sc;
}

struct StabilizerReport {
  KummerPoint point;            // least point of the orbit
  std::vector<Code> stabilizer; // sorted
  size_t orbit_size = 0;
  std::vector<SurfaceIncidence> on_surfaces; // one per cyclic subgroup <g> with z on F_g
  std::vector<std::vector<int>> branches;     // stabilizer-classes of on_surfaces
  std::string isotropy;                       // catalogue name of the stabilizer
  bool translation_type = false;              // stabilizer consists of translations

  std::vector<std::string> branch_types() const {
    std::vector<std::string> t;
    for (auto &b : branches) t.push_back(on_surfaces[b.front()].type);
    std::sort(t.begin(), t.end());
    return t;
  }
  std::vector<int> surface_ids() const {
    std::set<int> s;
    for (auto &inc : on_surfaces) s.insert(inc.surface);
    return {s.begin(), s.end()};
  }
};

struct StabilizerCensus {
  SurfaceCatalogue surfaces;
  std::vector<StabilizerReport> orbits;
};

inline StabilizerCensus stabilizer_census(const ActionGroup &G) {
  if (G.n() != 2) throw std::invalid_argument("stabilizer_census needs n = 2");
  const Ambient &amb = G.ambient();
  StabilizerCensus out;
  out.surfaces = surface_catalogue(G);

  std::set<KummerPoint> candidates;
  for (auto &cls : G.conjugacy_classes()) {
    if (cls.front() == amb.identity()) continue;
    for (auto &z : fixed_points_on_K2(amb, cls.front()).isolated) candidates.insert(z);
  }

  std::set<KummerPoint> seen;
  for (const KummerPoint &z : candidates) {
    if (seen.count(z)) continue;
    std::set<KummerPoint> orbit;
    for (Code h : G.elements()) orbit.insert(apply(amb, h, z));
    seen.insert(orbit.begin(), orbit.end());

    StabilizerReport rep;
    rep.point = *orbit.begin();
    rep.orbit_size = orbit.size();
    for (Code h : G.elements())
      if (apply(amb, h, rep.point) == rep.point) rep.stabilizer.push_back(h);
    if (rep.orbit_size * rep.stabilizer.size() != G.order())
      throw std::logic_error("orbit-stabilizer mismatch at " + rep.point.str());

    ActionGroup S = closure(amb, rep.stabilizer);
    rep.isotropy = fingerprint(S).name();
    rep.translation_type = std::all_of(rep.stabilizer.begin(), rep.stabilizer.end(),
                                       [&](Code c) { return amb.is_translation(c); });
    // cyclic subgroups <g> through the point, keyed by min(g, g^-1)
    std::map<Code, Code> cyclic;
    for (Code g : rep.stabilizer)
      if (surface_membership(amb, rep.point, g)) cyclic.emplace(std::min(g, amb.inverse(g)), g);
    std::map<Code, int> position;
    for (auto &[key, g] : cyclic) {
      position[key] = static_cast<int>(rep.on_surfaces.size());
      SurfaceIncidence inc;
      inc.generator = g;
      inc.surface = out.surfaces.class_to_surface[G.class_of(g)];
      inc.type = qualify(amb, g, 2) == Qualification::InvolutionSurface ? "A1" : "A2";
      rep.on_surfaces.push_back(inc);
    }
    // branches: orbits of the stabilizer on these cyclic subgroups
    std::vector<int> branch(rep.on_surfaces.size(), -1);
    for (size_t i = 0; i < rep.on_surfaces.size(); ++i) {
      if (branch[i] >= 0) continue;
      int b = static_cast<int>(rep.branches.size());
      rep.branches.push_back({});
      for (Code s : rep.stabilizer) {
        Code c = amb.conjugate(s, rep.on_surfaces[i].generator);
        int j = position.at(std::min(c, amb.inverse(c)));
        if (branch[j] < 0) branch[j] = b, rep.branches[b].push_back(j);
      }
      std::sort(rep.branches[b].begin(), rep.branches[b].end());
    }
    out.orbits.push_back(std::move(rep));
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const StabilizerReport &a, const StabilizerReport &b) { return a.point < b.point; });
  return out;
}

//===----------------------------------------------------------------------===//
// Fixed locus of a whole group
//===----------------------------------------------------------------------===//

struct GroupFixedLocus {
  int surfaces = 0;                            // surfaces fixed pointwise by G
  std::vector<KummerPoint> points;             // isolated G-fixed points
  std::vector<std::vector<std::string>> on;    // per point: sorted labels of the surfaces F_h through it
  std::map<std::vector<std::string>, int> split;
};

inline const char *surface_label(Qualification q) { return q == Qualification::InvolutionSurface ? "-id" : "g3"; }

inline GroupFixedLocus group_fixed_locus(const ActionGroup &G) {
  const Ambient &amb = G.ambient();
  GroupFixedLocus out;
  std::set<Code> whole, cyclic;
  for (Code h : G.elements()) {
    if (qualify(G, h) == Qualification::None) continue;
    Code key = std::min(h, amb.inverse(h));
    cyclic.insert(key);
    if (closure(amb, std::vector<Code>{h}).order() == G.order()) whole.insert(key);
  }
  out.surfaces = static_cast<int>(whole.size());

  // an element with finite fixed locus if there is one, otherwise a generator
  Code probe = amb.identity();
  for (Code h : G.elements())
    if (h != amb.identity() && qualify(G, h) == Qualification::None) {
      probe = h;
      break;
    }
  if (probe == amb.identity()) {
    for (Code h : G.elements())
      if (closure(amb, std::vector<Code>{h}).order() == G.order()) {
        probe = h;
        break;
      }
  }
  if (probe == amb.identity()) return out;
  for (auto &z : fixed_points_on_K2(amb, probe).isolated) {
    bool fixed = std::all_of(G.generators().begin(), G.generators().end(),
                             [&](Code g) { return apply(amb, g, z) == z; });
    if (!fixed) continue;
    std::vector<std::string> labels;
    for (Code key : cyclic)
      if (surface_membership(amb, z, key)) labels.push_back(surface_label(qualify(G, key)));
    std::sort(labels.begin(), labels.end());
    out.points.push_back(z);
    out.split[labels]++;
    out.on.push_back(std::move(labels));
  }
  return out;
}

} // namespace terminvar
