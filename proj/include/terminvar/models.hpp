#pragma once
// The canonical pairs (A, G0): lattice embeddings and generator dictionaries.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "terminvar/algebra.hpp"

namespace terminvar {

using Mat4 = std::array<int, 16>; // row-major, acts on column vectors of Z^4

inline Mat4 mat4_mul(const Mat4 &A, const Mat4 &B) {
  Mat4 C{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) C[4 * i + j] += A[4 * i + k] * B[4 * k + j];
  return C;
}
inline constexpr Mat4 mat4_identity() { return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}; }

inline IntMatrix to_int_matrix(const Mat4 &M) {
  IntMatrix R(4, 4);
  for (int i = 0; i < 16; ++i) R(i / 4, i % 4) = M[i];
  return R;
}

struct LinearPart {
  Mat4 int_matrix = mat4_identity();
  CycMatrix2 cx_matrix;

  IntMatrix int_matrix_big() const { return to_int_matrix(int_matrix); }
  friend LinearPart operator*(const LinearPart &a, const LinearPart &b) {
    return {mat4_mul(a.int_matrix, b.int_matrix), a.cx_matrix * b.cx_matrix};
  }
};

// A finite group of linear parts, sorted by integer-matrix entries.
struct LinearGroup {
  std::vector<LinearPart> elements;
  std::vector<std::vector<int>> mul; // mul[a][b] = index of a*b
  std::vector<int> inv;
  std::vector<int> order;
  int identity = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const Mat4 &M) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), M,
                               [](const LinearPart &p, const Mat4 &m) { return p.int_matrix < m; });
    if (it == elements.end() || it->int_matrix != M) return -1;
    return static_cast<int>(it - elements.begin());
  }
};

enum class ModelName { Generic, E2i, E2Zeta3, E2Zeta6, Quaternionic };

struct SurfaceModel {
  ModelName id;
  std::string name;         // CLI identifier
  std::string display;      // e.g. "E_i^2"
  std::array<std::array<CycNumber, 2>, 4> lattice; // embeddings of the Lambda basis in C^2
  std::map<std::string, LinearPart> dictionary;
  std::map<std::string, std::vector<std::string>> g0_generators; // realizable G0 names
  LinearGroup group;         // closure of the whole dictionary

  const LinearPart &generator(const std::string &sym) const {
    auto it = dictionary.find(sym);
    if (it == dictionary.end())
      throw std::invalid_argument("generator '" + sym + "' is not defined on model " + name);
    return it->second;
  }
  bool realizes(const std::string &g0) const { return g0_generators.count(g0) != 0; }

  // embed(M_Z v) == M_C embed(v) on every lattice basis vector
  bool compatible(const LinearPart &p) const {
    for (int k = 0; k < 4; ++k) {
      std::array<CycNumber, 2> lhs{CycNumber(0), CycNumber(0)};
      for (int j = 0; j < 4; ++j) {
        CycNumber c(p.int_matrix[4 * j + k]);
        lhs[0] = lhs[0] + c * lattice[j][0];
        lhs[1] = lhs[1] + c * lattice[j][1];
      }
      if (lhs != p.cx_matrix.apply(lattice[k])) return false;
    }
    return true;
  }
};

namespace detail {

// Integer matrix of a complex matrix in the lattice basis; throws if M_C does not preserve Lambda.
inline Mat4 integral_matrix(const std::array<std::array<CycNumber, 2>, 4> &lat, const CycMatrix2 &M) {
  auto flat = [](const std::array<CycNumber, 2> &v) {
    std::array<Rational, 8> r;
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 4; ++k) r[4 * c + k] = v[c][k];
    return r;
  };
  std::array<std::array<Rational, 8>, 4> E;
  for (int j = 0; j < 4; ++j) E[j] = flat(lat[j]);
  Mat4 out{};
  for (int k = 0; k < 4; ++k) {
    auto rhs = flat(M.apply(lat[k]));
    // augmented 8 x 5 system
    std::vector<std::array<Rational, 5>> A(8);
    for (int r = 0; r < 8; ++r) {
      for (int j = 0; j < 4; ++j) A[r][j] = E[j][r];
      A[r][4] = rhs[r];
    }
    size_t row = 0;
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    for (int c = 0; c < 4; ++c) {
      size_t p = row;
      while (p < 8 && A[p][c] == 0) ++p;
      if (p == 8) throw std::logic_error("lattice embedding is degenerate");
      std::swap(A[p], A[row]);
      for (size_t r = 0; r < 8; ++r) {
        if (r == row || A[r][c] == 0) continue;
        Rational f = A[r][c] / A[row][c];
        for (int q = c; q < 5; ++q) A[r][q] -= f * A[row][q];
      }
      pivot_row[c] = static_cast<int>(row++);
    }
    for (size_t r = row; r < 8; ++r)
      if (A[r][4] != 0) throw std::logic_error("matrix does not map the lattice into its span");
    for (int c = 0; c < 4; ++c) {
      Rational x = A[pivot_row[c]][4] / A[pivot_row[c]][c];
      if (boost::multiprecision::denominator(x) != 1)
        throw std::logic_error("matrix does not preserve the lattice");
      out[4 * c + k] = static_cast<int>(boost::multiprecision::numerator(x));
    }
  }
  return out;
}

inline LinearGroup close_linear(const std::vector<LinearPart> &gens) {
  std::map<Mat4, CycMatrix2> found{{mat4_identity(), CycMatrix2()}};
  std::vector<LinearPart> frontier{LinearPart{}};
  while (!frontier.empty()) {
    std::vector<LinearPart> next;
    for (auto &x : frontier)
      for (auto &g : gens) {
        LinearPart y = x * g;
        if (found.emplace(y.int_matrix, y.cx_matrix).second) next.push_back(y);
      }
    frontier = std::move(next);
    if (found.size() > 1000) throw std::logic_error("linear group is not finite");
  }
  LinearGroup G;
  for (auto &[m, c] : found) G.elements.push_back({m, c});
  int n = G.size();
  G.mul.assign(n, std::vector<int>(n));
  G.inv.assign(n, -1);
  G.order.assign(n, 0);
  G.identity = G.index_of(mat4_identity());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = G.index_of(mat4_mul(G.elements[a].int_matrix, G.elements[b].int_matrix));
      if (c < 0) throw std::logic_error("linear group not closed");
      G.mul[a][b] = c;
      if (c == G.identity) G.inv[a] = b;
    }
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != G.identity) x = G.mul[x][a], ++k;
    G.order[a] = k;
  }
  return G;
}

inline CycMatrix2 diag(const CycNumber &a, const CycNumber &b) { return {a, CycNumber(0), CycNumber(0), b}; }

inline SurfaceModel make_model(ModelName id) {
  SurfaceModel m;
  m.id = id;
  const CycNumber zero(0), one(1), I = CycNumber::i();
  const CycNumber z3 = CycNumber::zeta(4), z6 = CycNumber::zeta(2);
  const CycMatrix2 minus_id = diag(CycNumber(-1), CycNumber(-1));
  const CycMatrix2 h{zero, CycNumber(-1), one, zero};
  auto product_lattice = [&](const CycNumber &tau) {
    return std::array<std::array<CycNumber, 2>, 4>{
        {{one, zero}, {tau, zero}, {zero, one}, {zero, tau}}};
  };
  std::map<std::string, CycMatrix2> cx;
  switch (id) {
  case ModelName::Generic:
    m.name = "generic", m.display = "A";
    m.lattice = product_lattice(I);
    cx = {{"g2", minus_id}};
    m.g0_generators = {{"{1}", {}}, {"C2", {"g2"}}};
    break;
  case ModelName::E2i:
    m.name = "e2-i", m.display = "E_i^2";
    m.lattice = product_lattice(I);
    cx = {{"g2", minus_id}, {"g4", diag(I, -I)}, {"h", h}, {"k", diag(I, -I)}};
    m.g0_generators = {{"{1}", {}}, {"C2", {"g2"}}, {"C4", {"g4"}}, {"Q8", {"h", "k"}}};
    break;
  case ModelName::E2Zeta3:
    m.name = "e2-zeta3", m.display = "E_zeta3^2";
    m.lattice = product_lattice(z3);
    cx = {{"g2", minus_id}, {"g3", diag(z3, z3.inverse())}};
    m.g0_generators = {{"{1}", {}}, {"C2", {"g2"}}, {"C3", {"g3"}}, {"C6", {"g2", "g3"}}};
    break;
  case ModelName::E2Zeta6:
    m.name = "e2-zeta6", m.display = "E_zeta6^2";
    m.lattice = product_lattice(z6);
    cx = {{"g2", minus_id},
          {"g3", diag(z3, z3.inverse())},
          {"g6", diag(z6, z6.inverse())},
          {"h", h},
          {"l", diag(z6, z6.inverse())}};
    m.g0_generators = {{"{1}", {}}, {"C2", {"g2"}}, {"C3", {"g3"}}, {"C6", {"g6"}}, {"BD12", {"h", "l"}}};
    break;
  case ModelName::Quaternionic: {
    m.name = "quaternionic", m.display = "H/Gamma";
    // q = z1 + j z2, scalars on the right, units act on the left
    Rational half(1, 2);
    CycNumber a = (one + I) * CycNumber(half), b = (one - I) * CycNumber(half);
    m.lattice = {{{one, zero}, {I, zero}, {zero, one}, {a, b}}};
    CycMatrix2 qi = diag(I, -I), qj = h, qk = qi * qj;
    auto avg = [&](int si, int sj, int sk) {
      CycMatrix2 r;
      for (int e = 0; e < 4; ++e)
        r.a[e] = (CycMatrix2().a[e] + CycNumber(si) * qi.a[e] + CycNumber(sj) * qj.a[e] +
                  CycNumber(sk) * qk.a[e]) *
                 CycNumber(half);
      return r;
    };
    CycMatrix2 r = avg(1, 1, -1), t = avg(1, 1, 1);
    cx = {{"g2", minus_id}, {"g3", t * t}, {"g4", qi}, {"g6", t},
          {"h", qj},        {"k", qi},     {"r", r},  {"t", t}};
    m.g0_generators = {{"{1}", {}},      {"C2", {"g2"}},     {"C3", {"g3"}},    {"C4", {"g4"}},
                       {"C6", {"g6"}},   {"Q8", {"h", "k"}}, {"BT24", {"r", "t"}}};
    break;
  }
  }
  std::vector<LinearPart> gens;
  for (auto &[sym, M] : cx) {
    LinearPart p{integral_matrix(m.lattice, M), M};
    if (!m.compatible(p)) throw std::logic_error("compatibility square fails for " + sym);
    if (!(M.det() == CycNumber(1))) throw std::logic_error(sym + " is not symplectic");
    m.dictionary.emplace(sym, p);
    gens.push_back(p);
  }
  m.group = close_linear(gens);
  for (auto &p : m.group.elements)
    if (!m.compatible(p)) throw std::logic_error("compatibility fails in the closure of " + m.name);
  return m;
}

} // namespace detail

inline const SurfaceModel &build_model(ModelName id) {
  static std::once_flag flags[5];
  static std::unique_ptr<SurfaceModel> models[5];
  int k = static_cast<int>(id);
  std::call_once(flags[k], [&] { models[k] = std::make_unique<SurfaceModel>(detail::make_model(id)); });
  return *models[k];
}

inline const std::vector<ModelName> &all_model_names() {
  static const std::vector<ModelName> names{ModelName::Generic, ModelName::E2i, ModelName::E2Zeta3,
                                            ModelName::E2Zeta6, ModelName::Quaternionic};
  return names;
}

inline const SurfaceModel &build_model(const std::string &name) {
  for (ModelName id : all_model_names())
    if (build_model(id).name == name) return build_model(id);
  throw std::invalid_argument("unknown model '" + name + "'");
}

} // namespace terminvar
