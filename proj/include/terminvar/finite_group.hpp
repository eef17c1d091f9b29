#pragma once
// Abstract finite groups given by multiplication tables: fingerprints, isomorphism
// testing, the named catalogue and permutation groups.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace terminvar {

struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline size_t size_cap() {
  if (const char *env = std::getenv("TERMINVAR_SIZE_CAP")) {
    try {
      return static_cast<size_t>(std::stoull(env));
    } catch (...) {
    }
  }
  return 100000;
}
inline size_t perm_size_cap() {
  if (std::getenv("TERMINVAR_SIZE_CAP")) return size_cap();
  return 10000;
}

struct GroupFingerprint {
  size_t order = 1;
  size_t exponent = 1;
  std::vector<std::pair<int, int>> order_stats; // (element order, count)
  std::vector<int> class_sizes;                 // sorted
  std::vector<int> abelian_invariants;          // prime powers, sorted
  int derived_length = 0;                       // -1 when not solvable
  std::string catalogue_name;                   // empty when unmatched

  // equality ignores the display name
  bool same_invariants(const GroupFingerprint &o) const {
    return order == o.order && exponent == o.exponent && order_stats == o.order_stats &&
           class_sizes == o.class_sizes && abelian_invariants == o.abelian_invariants &&
           derived_length == o.derived_length;
  }
  std::string name() const { return catalogue_name.empty() ? "order-" + std::to_string(order) : catalogue_name; }

  std::string key() const {
    std::string s = std::to_string(order) + "|" + std::to_string(exponent) + "|";
    for (auto [o, c] : order_stats) s += std::to_string(o) + ":" + std::to_string(c) + ",";
    s += "|";
    for (int c : class_sizes) s += std::to_string(c) + ",";
    s += "|";
    for (int a : abelian_invariants) s += std::to_string(a) + ",";
    return s + "|" + std::to_string(derived_length);
  }
};

// A group on {0..n-1} with a full multiplication table.
class CayleyGroup {
public:
  CayleyGroup() : n_(1), table_{0}, inv_{0} {}
  CayleyGroup(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
    identity_ = -1;
    for (int e = 0; e < n_ && identity_ < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::logic_error("table has no identity");
    inv_.assign(n_, -1);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (mul(x, y) == identity_) {
          inv_[x] = y;
          break;
        }
  }

  int size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long k) const {
    int r = identity_;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  int order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  // subgroup generated by gens, as a membership mask
  std::vector<char> closure(const std::vector<int> &gens) const {
    std::vector<char> in(n_, 0);
    std::vector<int> list{identity_};
    in[identity_] = 1;
    for (size_t i = 0; i < list.size(); ++i)
      for (int g : gens) {
        int y = mul(list[i], g);
        if (!in[y]) in[y] = 1, list.push_back(y);
      }
    return in;
  }

  // greedy generating set, elements of large order first
  std::vector<int> generators() const {
    std::vector<int> elems(n_);
    for (int i = 0; i < n_; ++i) elems[i] = i;
    std::vector<int> ord(n_);
    for (int i = 0; i < n_; ++i) ord[i] = order(i);
    std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) { return ord[a] > ord[b]; });
    std::vector<int> gens;
    std::vector<char> in = closure(gens);
    for (int x : elems)
      if (!in[x]) {
        gens.push_back(x);
        in = closure(gens);
      }
    return gens;
  }

  std::vector<std::vector<int>> conjugacy_classes() const {
    auto gens = generators();
    std::vector<int> cls(n_, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < n_; ++x) {
      if (cls[x] >= 0) continue;
      std::vector<int> c{x};
      cls[x] = static_cast<int>(out.size());
      for (size_t i = 0; i < c.size(); ++i)
        for (int g : gens) {
          int y = conj(g, c[i]);
          if (cls[y] < 0) cls[y] = cls[x], c.push_back(y);
        }
      out.push_back(std::move(c));
    }
    return out;
  }

  // normal closure of a set, as a mask
  std::vector<char> normal_closure(const std::vector<int> &S) const {
    auto gens = generators();
    std::vector<int> conjugates;
    std::vector<char> seen(n_, 0);
    for (int s : S) {
      if (seen[s]) continue;
      seen[s] = 1;
      conjugates.push_back(s);
    }
    for (size_t i = 0; i < conjugates.size(); ++i)
      for (int g : gens) {
        int y = conj(g, conjugates[i]);
        if (!seen[y]) seen[y] = 1, conjugates.push_back(y);
      }
    return closure(conjugates);
  }

  // quotient by a normal subgroup given as a mask
  CayleyGroup quotient(const std::vector<char> &N) const {
    std::vector<int> coset(n_, -1), reps;
    std::vector<int> Nlist;
    for (int x = 0; x < n_; ++x)
      if (N[x]) Nlist.push_back(x);
    for (int x = 0; x < n_; ++x) {
      if (coset[x] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back(x);
      for (int k : Nlist) coset[mul(x, k)] = id;
    }
    int q = static_cast<int>(reps.size());
    std::vector<int> t(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) t[static_cast<size_t>(a) * q + b] = coset[mul(reps[a], reps[b])];
    return CayleyGroup(q, std::move(t));
  }

  bool is_normal(const std::vector<char> &N) const {
    for (int g : generators())
      for (int x = 0; x < n_; ++x)
        if (N[x] && !N[conj(g, x)]) return false;
    return true;
  }

  std::vector<char> derived_subgroup() const {
    auto gens = generators();
    std::vector<int> comms;
    for (int a : gens)
      for (int b : gens) comms.push_back(mul(mul(a, b), mul(inv(a), inv(b))));
    return normal_closure(comms);
  }

  GroupFingerprint fingerprint() const;

private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  int identity_ = 0;
};

namespace detail {

inline std::vector<int> prime_factors(long n) {
  std::vector<int> ps;
  for (int p = 2; static_cast<long>(p) * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

// Abelian invariants of G/D via counts of cosets killed by p^k.
inline std::vector<int> abelianization_invariants(const CayleyGroup &G, const std::vector<char> &D) {
  long dsize = 0;
  for (char c : D) dsize += c;
  long q = G.size() / dsize;
  std::vector<int> out;
  for (int p : prime_factors(q)) {
    std::vector<long> ranks; // number of cyclic factors of order >= p^k
    long prev = 1;
    for (long pk = p;; pk *= p) {
      long cnt = 0;
      for (int x = 0; x < G.size(); ++x)
        if (D[G.pow(x, pk)]) ++cnt;
      cnt /= dsize;
      long ratio = cnt / prev, r = 0;
      while (ratio > 1) ratio /= p, ++r;
      if (r == 0) break;
      ranks.push_back(r);
      prev = cnt;
    }
    long pk = p;
    for (size_t k = 0; k < ranks.size(); ++k, pk *= p) {
      long exact = ranks[k] - (k + 1 < ranks.size() ? ranks[k + 1] : 0);
      for (long e = 0; e < exact; ++e) out.push_back(static_cast<int>(pk));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

inline GroupFingerprint CayleyGroup::fingerprint() const {
  GroupFingerprint f;
  f.order = n_;
  std::map<int, int> stats;
  long exponent = 1;
  for (int x = 0; x < n_; ++x) {
    int o = order(x);
    ++stats[o];
    exponent = std::lcm(exponent, static_cast<long>(o));
  }
  f.exponent = exponent;
  f.order_stats.assign(stats.begin(), stats.end());
  for (auto &c : conjugacy_classes()) f.class_sizes.push_back(static_cast<int>(c.size()));
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  auto D = derived_subgroup();
  f.abelian_invariants = detail::abelianization_invariants(*this, D);
  // derived series on the subgroup masks
  CayleyGroup cur = *this;
  std::vector<char> mask = D;
  int len = 0;
  for (;;) {
    long sz = 0;
    for (char c : mask) sz += c;
    if (sz == cur.size()) {
      len = cur.size() == 1 ? len : -1;
      break;
    }
    ++len;
    if (sz == 1) break;
    // restrict to the derived subgroup
    std::vector<int> elems, index(cur.size(), -1);
    for (int x = 0; x < cur.size(); ++x)
      if (mask[x]) index[x] = static_cast<int>(elems.size()), elems.push_back(x);
    int m = static_cast<int>(elems.size());
    std::vector<int> t(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) t[static_cast<size_t>(a) * m + b] = index[cur.mul(elems[a], elems[b])];
    cur = CayleyGroup(m, std::move(t));
    mask = cur.derived_subgroup();
  }
  f.derived_length = len;
  return f;
}

// Generator-image backtracking; meaningful for small groups.
inline bool are_isomorphic(const CayleyGroup &A, const CayleyGroup &B) {
  if (A.size() != B.size()) return false;
  if (!A.fingerprint().same_invariants(B.fingerprint())) return false;
  auto gens = A.generators();
  int n = A.size();
  std::vector<int> ordB(n);
  for (int x = 0; x < n; ++x) ordB[x] = B.order(x);
  std::vector<int> images(gens.size());

  auto extend = [&]() -> bool {
    std::vector<int> phi(n, -1), used(n, 0);
    phi[A.identity()] = B.identity();
    used[B.identity()] = 1;
    std::vector<int> queue{A.identity()};
    for (size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (size_t g = 0; g < gens.size(); ++g) {
        int y = A.mul(x, gens[g]);
        int fy = B.mul(phi[x], images[g]);
        if (phi[y] < 0) {
          if (used[fy]) return false;
          phi[y] = fy, used[fy] = 1;
          queue.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    return static_cast<int>(queue.size()) == n;
  };
  std::function<bool(size_t)> search = [&](size_t k) -> bool {
    if (k == gens.size()) return extend();
    int o = A.order(gens[k]);
    for (int y = 0; y < n; ++y) {
      if (ordB[y] != o) continue;
      images[k] = y;
      if (search(k + 1)) return true;
    }
    return false;
  };
  return search(0);
}

//===----------------------------------------------------------------------===//
// Permutation groups
//===----------------------------------------------------------------------===//

using Perm = std::vector<int>; // image of point i, 0-based

inline Perm perm_mul(const Perm &a, const Perm &b) { // apply a, then b
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

// Parses "(1,2,3)(4,5)" or "(1 2 3)(4 5)"; points are 1-based.
inline Perm parse_cycles(const std::string &s, int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  size_t pos = 0;
  while ((pos = s.find('(', pos)) != std::string::npos) {
    size_t end = s.find(')', pos);
    if (end == std::string::npos) throw std::invalid_argument("unbalanced cycle: " + s);
    std::vector<int> cyc;
    std::string num;
    for (size_t i = pos + 1; i <= end; ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (!num.empty()) {
        int v = std::stoi(num);
        if (v < 1 || v > degree) throw std::invalid_argument("point out of range in " + s);
        cyc.push_back(v - 1);
        num.clear();
      }
    }
    for (size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = end + 1;
  }
  std::vector<char> hit(degree, 0);
  for (int x : p) {
    if (hit[x]) throw std::invalid_argument("cycles overlap in " + s);
    hit[x] = 1;
  }
  return p;
}

inline std::string cycles_string(const Perm &p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      s += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements; // elements[0] is the identity
  CayleyGroup table;

  PermGroup() = default;
  PermGroup(int deg, std::vector<Perm> gens, size_t cap = perm_size_cap()) : degree(deg), generators(std::move(gens)) {
    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::map<Perm, int> index{{id, 0}};
    elements.push_back(id);
    for (size_t i = 0; i < elements.size(); ++i)
      for (auto &g : generators) {
        Perm y = perm_mul(elements[i], g);
        if (index.emplace(y, static_cast<int>(elements.size())).second) {
          elements.push_back(std::move(y));
          if (elements.size() > cap) throw SizeCapExceeded("permutation group exceeds size cap " + std::to_string(cap));
        }
      }
    int n = static_cast<int>(elements.size());
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = index.at(perm_mul(elements[a], elements[b]));
    table = CayleyGroup(n, std::move(t));
  }
  static PermGroup from_cycles(int deg, const std::vector<std::string> &gens) {
    std::vector<Perm> ps;
    for (auto &g : gens) ps.push_back(parse_cycles(g, deg));
    return PermGroup(deg, std::move(ps));
  }
  size_t order() const { return elements.size(); }
};

//===----------------------------------------------------------------------===//
// Named catalogue
//===----------------------------------------------------------------------===//

namespace detail {

inline Perm perm_from(int n, const std::function<int(int)> &f) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = f(i);
  return p;
}

// SL(2,3) on the 8 nonzero vectors of F3^2
inline std::vector<Perm> sl23_perms() {
  auto idx = [](int x, int y) { return 3 * x + y - 1; }; // nonzero (x,y) -> 0..7
  auto mat = [&](int a, int b, int c, int d) {
    return perm_from(8, [&, a, b, c, d](int i) {
      int v = i + 1, x = v / 3, y = v % 3;
      return idx((a * x + b * y) % 3, (c * x + d * y) % 3);
    });
  };
  return {mat(1, 1, 0, 1), mat(1, 0, 1, 1)};
}

struct CatalogueEntry {
  std::string name;
  CayleyGroup group;
  GroupFingerprint fp;
};

inline std::vector<CatalogueEntry> build_catalogue() {
  auto cyc = [](std::initializer_list<std::string> gens, int deg) { return PermGroup::from_cycles(deg, gens).table; };
  // He3 as the affine maps (i,j) -> (i+1,j), (i,j) -> (i, j+i) on F3^2
  auto he3 = [](int extra) {
    int n = 9 + extra;
    Perm u = perm_from(n, [](int p) { return p < 9 ? 3 * ((p / 3 + 1) % 3) + p % 3 : p; });
    Perm s = perm_from(n, [](int p) { return p < 9 ? 3 * (p / 3) + (p % 3 + p / 3) % 3 : p; });
    std::vector<Perm> gens{u, s};
    if (extra) gens.push_back(perm_from(n, [](int p) { return p < 9 ? p : 9 + (p - 8) % 3; }));
    return PermGroup(n, gens).table;
  };
  std::vector<std::pair<std::string, CayleyGroup>> raw = {
      {"{1}", CayleyGroup()},
      {"C2", cyc({"(1,2)"}, 2)},
      {"C3", cyc({"(1,2,3)"}, 3)},
      {"C4", cyc({"(1,2,3,4)"}, 4)},
      {"C5", cyc({"(1,2,3,4,5)"}, 5)},
      {"C6", cyc({"(1,2,3,4,5,6)"}, 6)},
      {"C2^2", cyc({"(1,2)", "(3,4)"}, 4)},
      {"S3", cyc({"(1,2,3)", "(1,2)"}, 3)},
      {"C3^2", cyc({"(1,2,3)", "(4,5,6)"}, 6)},
      {"D4", cyc({"(1,2,3,4)", "(1,3)"}, 4)},
      {"Q8", cyc({"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}, 8)},
      {"A4", cyc({"(1,2,3)", "(1,2)(3,4)"}, 4)},
      {"BD12", cyc({"(1,2,3)", "(1,2)(4,5,6,7)"}, 7)},
      {"C3xS3", cyc({"(1,2,3)", "(4,5,6)", "(4,5)"}, 6)},
      {"BT24", PermGroup(8, sl23_perms()).table},
      {"C3^2⋊C3", he3(0)},
      {"C3^3", cyc({"(1,2,3)", "(4,5,6)", "(7,8,9)"}, 9)},
      {"C3^3⋊₂C3", he3(3)},
  };
  std::vector<CatalogueEntry> out;
  for (auto &[name, G] : raw) {
    GroupFingerprint fp = G.fingerprint();
    fp.catalogue_name = name;
    out.push_back({name, G, fp});
  }
  return out;
}

} // namespace detail

inline const std::vector<detail::CatalogueEntry> &group_catalogue() {
  static const std::vector<detail::CatalogueEntry> cat = detail::build_catalogue();
  return cat;
}

// Fingerprint plus catalogue name; isomorphism is confirmed by backtracking up to order 128.
inline GroupFingerprint identify(const CayleyGroup &G) {
  GroupFingerprint fp = G.fingerprint();
  for (auto &e : group_catalogue()) {
    if (!e.fp.same_invariants(fp)) continue;
    if (fp.order <= 128 && !are_isomorphic(e.group, G)) continue;
    fp.catalogue_name = e.name;
    break;
  }
  return fp;
}

inline const detail::CatalogueEntry *catalogue_entry(const std::string &name) {
  for (auto &e : group_catalogue())
    if (e.name == name) return &e;
  return nullptr;
}

} // namespace terminvar
