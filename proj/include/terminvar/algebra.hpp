#pragma once
// Exact linear algebra over Z, Q, Z/m and Q(zeta12).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace terminvar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt &x) { return x.str(); }

// Canonical "p/q" with q > 0; integers print without denominator.
inline std::string to_string(const Rational &q) {
  BigInt p = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (d == 1) return p.str();
  return p.str() + "/" + d.str();
}

inline Rational parse_rational(const std::string &s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    if (q < 0) p = -p, q = -q;
    return Rational(p, q);
  } catch (const std::exception &) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline int64_t floor_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

//===----------------------------------------------------------------------===//
// IntMatrix
//===----------------------------------------------------------------------===//

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (auto &row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged IntMatrix");
      for (long v : row) a_.emplace_back(v);
    }
  }

  static IntMatrix identity(size_t n) {
    IntMatrix I(n, n);
    for (size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  BigInt &operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const BigInt &operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix &A, const IntMatrix &B) {
    if (A.cols_ != B.rows_) throw std::invalid_argument("IntMatrix shape mismatch");
    IntMatrix C(A.rows_, B.cols_);
    for (size_t i = 0; i < A.rows_; ++i)
      for (size_t k = 0; k < A.cols_; ++k) {
        if (A(i, k) == 0) continue;
        for (size_t j = 0; j < B.cols_; ++j) C(i, j) += A(i, k) * B(k, j);
      }
    return C;
  }
  friend IntMatrix operator-(const IntMatrix &A, const IntMatrix &B) {
    IntMatrix C = A;
    for (size_t i = 0; i < C.a_.size(); ++i) C.a_[i] -= B.a_[i];
    return C;
  }
  friend IntMatrix operator+(const IntMatrix &A, const IntMatrix &B) {
    IntMatrix C = A;
    for (size_t i = 0; i < C.a_.size(); ++i) C.a_[i] += B.a_[i];
    return C;
  }
  friend bool operator==(const IntMatrix &A, const IntMatrix &B) {
    return A.rows_ == B.rows_ && A.cols_ == B.cols_ && A.a_ == B.a_;
  }

  IntMatrix transpose() const {
    IntMatrix T(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
  }

  // Bareiss fraction-free elimination.
  BigInt determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix M = *this;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
      if (M(k, k) == 0) {
        size_t p = k + 1;
        while (p < n && M(p, k) == 0) ++p;
        if (p == n) return 0;
        M.swap_rows(k, p);
        sign = -sign;
      }
      for (size_t i = k + 1; i < n; ++i)
        for (size_t j = k + 1; j < n; ++j)
          M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
      prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
  }

  bool is_unimodular() const {
    if (rows_ != cols_) return false;
    BigInt d = determinant();
    return d == 1 || d == -1;
  }

  void swap_rows(size_t i, size_t j) {
    for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(size_t i, size_t j) {
    for (size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row i += f * row j
  void add_row(size_t i, size_t j, const BigInt &f) {
    for (size_t c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
  }
  void add_col(size_t i, size_t j, const BigInt &f) {
    for (size_t r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

//===----------------------------------------------------------------------===//
// Smith normal form
//===----------------------------------------------------------------------===//

struct SmithForm {
  IntMatrix U, D, V; // U * M * V == D
  size_t rank = 0;
  BigInt diag(size_t i) const { return D(i, i); }
};

inline SmithForm smith_normal_form(const IntMatrix &M) {
  size_t r = M.rows(), c = M.cols();
  SmithForm s{IntMatrix::identity(r), M, IntMatrix::identity(c), 0};
  IntMatrix &D = s.D;
  size_t n = std::min(r, c);
  for (size_t t = 0; t < n; ++t) {
    for (;;) {
      // minimal-absolute-value pivot in the trailing block
      size_t pi = r, pj = c;
      for (size_t i = t; i < r; ++i)
        for (size_t j = t; j < c; ++j)
          if (D(i, j) != 0 && (pi == r || abs(D(i, j)) < abs(D(pi, pj)))) pi = i, pj = j;
      if (pi == r) {
        s.rank = t;
        goto done;
      }
      if (pi != t) D.swap_rows(t, pi), s.U.swap_rows(t, pi);
      if (pj != t) D.swap_cols(t, pj), s.V.swap_cols(t, pj);

      bool clean = true;
      for (size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q = D(i, t) / D(t, t);
        D.add_row(i, t, -q), s.U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q = D(t, j) / D(t, t);
        D.add_col(j, t, -q), s.V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block
      bool divides = true;
      for (size_t i = t + 1; i < r && divides; ++i)
        for (size_t j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row(t, i, 1), s.U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) D.negate_row(t), s.U.negate_row(t);
  }
  s.rank = n;
done:
  return s;
}

//===----------------------------------------------------------------------===//
// Torsion data
//===----------------------------------------------------------------------===//

struct TorsionVector {
  int modulus = 1;
  std::array<int, 4> coords{0, 0, 0, 0};

  TorsionVector() = default;
  TorsionVector(int m, std::array<int, 4> c) : modulus(m), coords(c) {
    for (int &x : coords) x = static_cast<int>(floor_mod(x, m));
  }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
  }
  friend bool operator==(const TorsionVector &, const TorsionVector &) = default;
  friend auto operator<=>(const TorsionVector &, const TorsionVector &) = default;
};

// A point of (Q/Z)^4 stored as num/den with num in [0, den).
struct RationalTorusPoint {
  int64_t den = 1;
  std::array<int64_t, 4> num{0, 0, 0, 0};

  RationalTorusPoint() = default;
  RationalTorusPoint(int64_t d, std::array<int64_t, 4> n) : den(d), num(n) { normalize(); }

  static RationalTorusPoint from_rationals(const std::array<Rational, 4> &q) {
    int64_t d = 1;
    for (auto &x : q) d = std::lcm(d, static_cast<int64_t>(boost::multiprecision::denominator(x)));
    std::array<int64_t, 4> n{};
    for (int i = 0; i < 4; ++i) {
      Rational s = q[i] * d;
      n[i] = floor_mod(static_cast<int64_t>(boost::multiprecision::numerator(s)), d);
    }
    return RationalTorusPoint(d, n);
  }
  static RationalTorusPoint from_torsion(const TorsionVector &t) {
    return RationalTorusPoint(t.modulus, {t.coords[0], t.coords[1], t.coords[2], t.coords[3]});
  }

  void normalize() {
    for (auto &x : num) x = floor_mod(x, den);
    int64_t g = den;
    for (auto x : num) g = std::gcd(g, x);
    if (g > 1) {
      den /= g;
      for (auto &x : num) x /= g;
    }
  }

  Rational coord(int i) const { return Rational(num[i], den); }
  bool is_zero() const { return den == 1; }

  // smallest k > 0 with k*x = 0
  int64_t order() const { return den; }

  friend RationalTorusPoint operator+(const RationalTorusPoint &a, const RationalTorusPoint &b) {
    int64_t d = std::lcm(a.den, b.den);
    std::array<int64_t, 4> n{};
    for (int i = 0; i < 4; ++i) n[i] = a.num[i] * (d / a.den) + b.num[i] * (d / b.den);
    return RationalTorusPoint(d, n);
  }
  friend RationalTorusPoint operator-(const RationalTorusPoint &a) {
    std::array<int64_t, 4> n{};
    for (int i = 0; i < 4; ++i) n[i] = -a.num[i];
    return RationalTorusPoint(a.den, n);
  }
  friend RationalTorusPoint operator-(const RationalTorusPoint &a, const RationalTorusPoint &b) {
    return a + (-b);
  }
  friend RationalTorusPoint operator*(int64_t k, const RationalTorusPoint &a) {
    std::array<int64_t, 4> n{};
    for (int i = 0; i < 4; ++i) n[i] = k * a.num[i];
    return RationalTorusPoint(a.den, n);
  }
  friend bool operator==(const RationalTorusPoint &, const RationalTorusPoint &) = default;
  friend auto operator<=>(const RationalTorusPoint &a, const RationalTorusPoint &b) {
    // lexicographic on the rational coordinates
    for (int i = 0; i < 4; ++i) {
      __int128 l = static_cast<__int128>(a.num[i]) * b.den, r = static_cast<__int128>(b.num[i]) * a.den;
      if (l != r) return l < r ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
      if (i) s += ",";
      s += to_string(coord(i));
    }
    return s + ")";
  }
};

// Solution set of M x = b in (Q/Z)^cols. "continuum" is a value, not an error.
struct CongruenceSolution {
  bool continuum = false;
  std::vector<RationalTorusPoint> points; // sorted; empty when no solution

  bool empty() const { return !continuum && points.empty(); }
};

// All x in (Q/Z)^4 with M x = b mod Z^k, M of shape k x 4.
inline CongruenceSolution solve_congruence(const IntMatrix &M, const std::vector<Rational> &b) {
  if (M.cols() != 4 || b.size() != M.rows())
    throw std::invalid_argument("solve_congruence expects a k x 4 system");
  SmithForm s = smith_normal_form(M);
  size_t k = M.rows();
  std::vector<Rational> c(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) c[i] += Rational(s.U(i, j)) * b[j];
  for (size_t i = s.rank; i < k; ++i)
    if (boost::multiprecision::denominator(c[i]) != 1) return {};
  if (s.rank < 4) return {true, {}};

  // y_i ranges over (c_i + j) / d_i, j < d_i
  std::vector<std::vector<Rational>> choices(4);
  for (size_t i = 0; i < 4; ++i) {
    BigInt d = s.D(i, i);
    for (BigInt j = 0; j < d; ++j) choices[i].push_back((c[i] + Rational(j)) / Rational(d));
  }
  CongruenceSolution out;
  std::array<size_t, 4> idx{0, 0, 0, 0};
  for (;;) {
    std::array<Rational, 4> x{};
    for (size_t r = 0; r < 4; ++r)
      for (size_t j = 0; j < 4; ++j) x[r] += Rational(s.V(r, j)) * choices[j][idx[j]];
    out.points.push_back(RationalTorusPoint::from_rationals(x));
    size_t p = 0;
    while (p < 4 && ++idx[p] == choices[p].size()) idx[p++] = 0;
    if (p == 4) break;
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

//===----------------------------------------------------------------------===//
// Exterior square and invariant ranks
//===----------------------------------------------------------------------===//

inline IntMatrix exterior_square(const IntMatrix &M) {
  if (M.rows() != 4 || M.cols() != 4) throw std::invalid_argument("exterior_square expects 4x4");
  static constexpr std::array<std::pair<int, int>, 6> pairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  IntMatrix W(6, 6);
  for (size_t col = 0; col < 6; ++col) {
    auto [i, j] = pairs[col];
    for (size_t row = 0; row < 6; ++row) {
      auto [k, l] = pairs[row];
      W(row, col) = M(k, i) * M(l, j) - M(l, i) * M(k, j);
    }
  }
  return W;
}

// Rank over Q of a rational matrix given row-wise.
inline size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  size_t rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// dim of the common fixed space of Ms; dim is used when Ms is empty.
inline size_t fixed_subspace_rank(const std::vector<IntMatrix> &Ms, size_t dim) {
  std::vector<std::vector<Rational>> rows;
  for (auto &M : Ms) {
    if (M.rows() != dim || M.cols() != dim) throw std::invalid_argument("fixed_subspace_rank: shape");
    for (size_t i = 0; i < dim; ++i) {
      std::vector<Rational> row(dim);
      for (size_t j = 0; j < dim; ++j) row[j] = Rational(M(i, j) - (i == j ? 1 : 0));
      rows.push_back(std::move(row));
    }
  }
  return dim - rational_rank(std::move(rows));
}

//===----------------------------------------------------------------------===//
// Q(zeta12) = Q[x]/(x^4 - x^2 + 1)
//===----------------------------------------------------------------------===//

class CycNumber {
public:
  CycNumber() = default;
  CycNumber(long v) { c_[0] = v; }
  CycNumber(Rational v) { c_[0] = std::move(v); }
  explicit CycNumber(std::array<Rational, 4> c) : c_(std::move(c)) {}

  // zeta12^k
  static CycNumber zeta(int k) {
    k = static_cast<int>(floor_mod(k, 12));
    CycNumber z;
    z.c_[1] = 1;
    CycNumber r(1);
    for (int i = 0; i < k; ++i) r = r * z;
    return r;
  }
  static CycNumber i() { return zeta(3); }

  const Rational &operator[](int k) const { return c_[k]; }

  friend CycNumber operator+(const CycNumber &a, const CycNumber &b) {
    CycNumber r;
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend CycNumber operator-(const CycNumber &a, const CycNumber &b) {
    CycNumber r;
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend CycNumber operator-(const CycNumber &a) { return CycNumber(0) - a; }
  friend CycNumber operator*(const CycNumber &a, const CycNumber &b) {
    std::array<Rational, 7> p{};
    for (int i = 0; i < 4; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < 4; ++j) p[i + j] += a.c_[i] * b.c_[j];
    }
    // x^6 = -1, x^5 = x^3 - x, x^4 = x^2 - 1
    p[0] -= p[6];
    p[3] += p[5], p[1] -= p[5];
    p[2] += p[4], p[0] -= p[4];
    return CycNumber(std::array<Rational, 4>{p[0], p[1], p[2], p[3]});
  }
  friend bool operator==(const CycNumber &a, const CycNumber &b) { return a.c_ == b.c_; }
  friend bool operator<(const CycNumber &a, const CycNumber &b) { return a.c_ < b.c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return x == 0; });
  }

  // Solve a*y = 1 through the 4x4 multiplication matrix.
  CycNumber inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta12)");
    std::array<std::array<Rational, 5>, 4> A{};
    for (int j = 0; j < 4; ++j) {
      CycNumber col = *this * zeta(j);
      for (int r = 0; r < 4; ++r) A[r][j] = col.c_[r];
    }
    A[0][4] = 1;
    for (int c = 0; c < 4; ++c) {
      int p = c;
      while (A[p][c] == 0) ++p;
      std::swap(A[p], A[c]);
      for (int r = 0; r < 4; ++r) {
        if (r == c || A[r][c] == 0) continue;
        Rational f = A[r][c] / A[c][c];
        for (int k = c; k < 5; ++k) A[r][k] -= f * A[c][k];
      }
    }
    CycNumber y;
    for (int r = 0; r < 4; ++r) y.c_[r] = A[r][4] / A[r][r];
    return y;
  }
  friend CycNumber operator/(const CycNumber &a, const CycNumber &b) { return a * b.inverse(); }

  std::string str() const {
    std::string s;
    static const char *basis[] = {"", "z", "z^2", "z^3"};
    for (int k = 0; k < 4; ++k) {
      if (c_[k] == 0) continue;
      std::string coef = to_string(c_[k]);
      if (!s.empty() && coef[0] != '-') s += "+";
      if (k && (c_[k] == 1 || c_[k] == -1)) s += (c_[k] == 1 ? "" : "-");
      else s += coef + (k ? "*" : "");
      s += basis[k];
    }
    return s.empty() ? "0" : s;
  }

private:
  std::array<Rational, 4> c_{};
};

// Projective point of P^1 over Q(zeta12), first nonzero coordinate 1.
struct ProjPoint {
  std::array<CycNumber, 2> v;

  ProjPoint() = default;
  ProjPoint(CycNumber a, CycNumber b) : v{std::move(a), std::move(b)} { normalize(); }
  void normalize() {
    if (!v[0].is_zero()) {
      v[1] = v[1] / v[0];
      v[0] = 1;
    } else if (!v[1].is_zero()) {
      v[1] = 1;
    } else {
      throw std::domain_error("zero vector is not a projective point");
    }
  }
  friend bool operator==(const ProjPoint &a, const ProjPoint &b) { return a.v == b.v; }
  friend bool operator<(const ProjPoint &a, const ProjPoint &b) {
    return a.v[0] < b.v[0] || (a.v[0] == b.v[0] && a.v[1] < b.v[1]);
  }
  std::string str() const { return "[" + v[0].str() + ":" + v[1].str() + "]"; }
};

struct CycMatrix2 {
  std::array<CycNumber, 4> a{CycNumber(1), CycNumber(0), CycNumber(0), CycNumber(1)};

  CycMatrix2() = default;
  CycMatrix2(CycNumber a00, CycNumber a01, CycNumber a10, CycNumber a11)
      : a{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

  const CycNumber &operator()(int i, int j) const { return a[2 * i + j]; }
  CycNumber det() const { return a[0] * a[3] - a[1] * a[2]; }
  CycNumber trace() const { return a[0] + a[3]; }

  friend CycMatrix2 operator*(const CycMatrix2 &A, const CycMatrix2 &B) {
    return {A(0, 0) * B(0, 0) + A(0, 1) * B(1, 0), A(0, 0) * B(0, 1) + A(0, 1) * B(1, 1),
            A(1, 0) * B(0, 0) + A(1, 1) * B(1, 0), A(1, 0) * B(0, 1) + A(1, 1) * B(1, 1)};
  }
  std::array<CycNumber, 2> apply(const std::array<CycNumber, 2> &x) const {
    return {a[0] * x[0] + a[1] * x[1], a[2] * x[0] + a[3] * x[1]};
  }
  ProjPoint apply(const ProjPoint &p) const {
    auto w = apply(p.v);
    return ProjPoint(w[0], w[1]);
  }
  CycMatrix2 inverse() const {
    CycNumber d = det().inverse();
    return {a[3] * d, -a[1] * d, -a[2] * d, a[0] * d};
  }
  CycMatrix2 transpose() const { return {a[0], a[2], a[1], a[3]}; }
  // (M^{-1})^T, the action on the dual plane
  CycMatrix2 dual() const { return inverse().transpose(); }

  bool is_scalar() const { return a[1].is_zero() && a[2].is_zero() && a[0] == a[3]; }
  bool is_identity() const { return is_scalar() && a[0] == CycNumber(1); }

  // 0 when the order exceeds the bound
  int order(int bound = 24) const {
    CycMatrix2 P = *this;
    for (int k = 1; k <= bound; ++k) {
      if (P.is_identity()) return k;
      P = P * *this;
    }
    return 0;
  }

  friend bool operator==(const CycMatrix2 &A, const CycMatrix2 &B) { return A.a == B.a; }
  std::string str() const {
    return "[[" + a[0].str() + "," + a[1].str() + "],[" + a[2].str() + "," + a[3].str() + "]]";
  }
};

struct EigenLines {
  bool all = false;      // scalar matrix: every line is invariant
  CycNumber scalar;      // the scalar when all
  std::vector<std::pair<CycNumber, ProjPoint>> lines;
};

// Invariant lines of a finite-order 2x2 matrix over Q(zeta12).
inline EigenLines eigen_lines(const CycMatrix2 &M) {
  EigenLines out;
  if (M.is_scalar()) {
    out.all = true;
    out.scalar = M(0, 0);
    return out;
  }
  CycNumber tr = M.trace(), det = M.det();
  std::vector<CycNumber> roots;
  for (int k = 0; k < 12; ++k) {
    CycNumber z = CycNumber::zeta(k);
    if ((z * z - tr * z + det).is_zero()) roots.push_back(z);
  }
  if (roots.size() != 2)
    throw std::domain_error("eigen_lines: characteristic polynomial does not split into distinct roots of unity");
  for (auto &lambda : roots) {
    // kernel of M - lambda
    CycNumber a = M(0, 0) - lambda, b = M(0, 1), c = M(1, 0), d = M(1, 1) - lambda;
    ProjPoint p = (!a.is_zero() || !b.is_zero()) ? ProjPoint(b, -a) : ProjPoint(d, -c);
    out.lines.emplace_back(lambda, p);
  }
  std::sort(out.lines.begin(), out.lines.end(),
            [](auto &x, auto &y) { return x.second < y.second; });
  return out;
}

} // namespace terminvar
