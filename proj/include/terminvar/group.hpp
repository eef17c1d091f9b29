#pragma once
// Finite subgroups of A[m] x| L acting on K_n(A). Elements are encoded as integers
// code = t * |L| + l, where t indexes the translation (base-m digits, first coordinate
// most significant) and l indexes the sorted linear group of the model. Sorting codes
// therefore orders elements by (translation coords, int_matrix entries).

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <unordered_map>

#include "terminvar/finite_group.hpp"
#include "terminvar/models.hpp"

namespace terminvar {

using Code = uint32_t;

struct AffineSymplectomorphism {
  TorsionVector translation;
  int linear = 0; // index into the model's linear group

  friend bool operator==(const AffineSymplectomorphism &, const AffineSymplectomorphism &) = default;
};

// The ambient group A[m] x| L with table-driven arithmetic.
class Ambient {
public:
  Ambient(const SurfaceModel &model, int n) : model_(&model), n_(n), m_(n + 1) {
    T_ = m_ * m_ * m_ * m_;
    L_ = model.group.size();
    act_.resize(static_cast<size_t>(L_) * T_);
    for (int l = 0; l < L_; ++l) {
      const Mat4 &M = model.group.elements[l].int_matrix;
      for (int t = 0; t < T_; ++t) {
        auto c = digits(t);
        std::array<int, 4> r{};
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) r[i] += M[4 * i + j] * c[j];
        act_[static_cast<size_t>(l) * T_ + t] = index(r);
      }
    }
    add_.resize(static_cast<size_t>(T_) * T_);
    neg_.resize(T_);
    for (int a = 0; a < T_; ++a) {
      auto ca = digits(a);
      neg_[a] = index({-ca[0], -ca[1], -ca[2], -ca[3]});
      for (int b = 0; b < T_; ++b) {
        auto cb = digits(b);
        add_[static_cast<size_t>(a) * T_ + b] = index({ca[0] + cb[0], ca[1] + cb[1], ca[2] + cb[2], ca[3] + cb[3]});
      }
    }
  }

  const SurfaceModel &model() const { return *model_; }
  const LinearGroup &linear_group() const { return model_->group; }
  int n() const { return n_; }
  int modulus() const { return m_; }
  int translations() const { return T_; }
  int linear_size() const { return L_; }
  size_t size() const { return static_cast<size_t>(T_) * L_; }

  std::array<int, 4> digits(int t) const {
    std::array<int, 4> c{};
    for (int i = 3; i >= 0; --i) c[i] = t % m_, t /= m_;
    return c;
  }
  int index(std::array<int, 4> c) const {
    int t = 0;
    for (int i = 0; i < 4; ++i) t = t * m_ + static_cast<int>(floor_mod(c[i], m_));
    return t;
  }

  Code code(int t, int l) const { return static_cast<Code>(t) * L_ + l; }
  int trans(Code c) const { return static_cast<int>(c / L_); }
  int lin(Code c) const { return static_cast<int>(c % L_); }
  Code identity() const { return code(0, linear_group().identity); }

  // (a, M)(b, N) = (a + M b, M N)
  Code compose(Code x, Code y) const {
    int lx = lin(x), ly = lin(y);
    int t = add_[static_cast<size_t>(trans(x)) * T_ + act_[static_cast<size_t>(lx) * T_ + trans(y)]];
    return code(t, linear_group().mul[lx][ly]);
  }
  // (-M^{-1} a, M^{-1})
  Code inverse(Code x) const {
    int li = linear_group().inv[lin(x)];
    return code(neg_[act_[static_cast<size_t>(li) * T_ + trans(x)]], li);
  }
  Code conjugate(Code g, Code x) const { return compose(compose(g, x), inverse(g)); }
  int act_translation(int l, int t) const { return act_[static_cast<size_t>(l) * T_ + t]; }
  int add_translation(int a, int b) const { return add_[static_cast<size_t>(a) * T_ + b]; }
  int neg_translation(int a) const { return neg_[a]; }
  bool is_translation(Code x) const { return lin(x) == linear_group().identity; }

  AffineSymplectomorphism element(Code c) const {
    return {TorsionVector(m_, digits(trans(c))), lin(c)};
  }
  Code code(const AffineSymplectomorphism &e) const {
    if (e.translation.modulus != m_) throw std::invalid_argument("translation modulus does not match n+1");
    return code(index(e.translation.coords), e.linear);
  }
  const LinearPart &linear_part(Code c) const { return linear_group().elements[lin(c)]; }
  TorsionVector translation(Code c) const { return TorsionVector(m_, digits(trans(c))); }

  int element_order(Code c) const {
    int k = 1;
    for (Code x = c; x != identity(); x = compose(x, c)) ++k;
    return k;
  }

  std::string describe(Code c) const {
    auto d = digits(trans(c));
    std::string s = "t=(";
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(d[i]) + "/" + std::to_string(m_);
    s += ") M=" + to_int_matrix(linear_part(c).int_matrix).str();
    return s;
  }

private:
  const SurfaceModel *model_;
  int n_, m_, T_, L_;
  std::vector<int> act_, add_, neg_;
};

inline const Ambient &ambient_context(const SurfaceModel &model, int n) {
  static std::mutex mu;
  static std::map<std::pair<const SurfaceModel *, int>, std::unique_ptr<Ambient>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto &slot = cache[{&model, n}];
  if (!slot) slot = std::make_unique<Ambient>(model, n);
  return *slot;
}

// A closed finite subgroup of the ambient group.
class ActionGroup {
public:
  ActionGroup() = default;

  // elements must be closed; generators may be any generating set
  ActionGroup(const Ambient &amb, std::vector<Code> elements, std::vector<Code> generators)
      : amb_(&amb), elements_(std::move(elements)), gens_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
    index_.assign(amb.size(), -1);
    for (size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = static_cast<int>(i);
    compute_classes();
  }

  const Ambient &ambient() const { return *amb_; }
  const SurfaceModel &model() const { return amb_->model(); }
  int n() const { return amb_->n(); }
  size_t order() const { return elements_.size(); }
  const std::vector<Code> &elements() const { return elements_; }
  const std::vector<Code> &generators() const { return gens_; }
  bool contains(Code c) const { return index_[c] >= 0; }
  int local_index(Code c) const { return index_[c]; }

  const std::vector<std::vector<Code>> &conjugacy_classes() const { return classes_; }
  int class_of(Code c) const { return class_of_[index_[c]]; }

  // translations in G
  std::vector<Code> translation_subgroup() const {
    std::vector<Code> out;
    for (Code c : elements_)
      if (amb_->is_translation(c)) out.push_back(c);
    return out;
  }
  // image of the linear parts, as sorted indices into the model's linear group
  std::vector<int> linear_image() const {
    std::vector<int> out;
    for (Code c : elements_) out.push_back(amb_->lin(c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  CayleyGroup cayley() const {
    int n = static_cast<int>(order());
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = index_[amb_->compose(elements_[a], elements_[b])];
    return CayleyGroup(n, std::move(t));
  }

  friend bool operator==(const ActionGroup &a, const ActionGroup &b) {
    return a.amb_ == b.amb_ && a.elements_ == b.elements_;
  }

private:
  void compute_classes() {
    class_of_.assign(elements_.size(), -1);
    for (size_t i = 0; i < elements_.size(); ++i) {
      if (class_of_[i] >= 0) continue;
      int id = static_cast<int>(classes_.size());
      std::vector<Code> cls{elements_[i]};
      class_of_[i] = id;
      for (size_t k = 0; k < cls.size(); ++k)
        for (Code g : gens_) {
          Code y = amb_->conjugate(g, cls[k]);
          int j = index_[y];
          if (j < 0) throw std::logic_error("ActionGroup is not closed");
          if (class_of_[j] < 0) class_of_[j] = id, cls.push_back(y);
        }
      std::sort(cls.begin(), cls.end()); // representative = least element
      classes_.push_back(std::move(cls));
    }
  }

  const Ambient *amb_ = nullptr;
  std::vector<Code> elements_;
  std::vector<Code> gens_;
  std::vector<int> index_;
  std::vector<std::vector<Code>> classes_;
  std::vector<int> class_of_;
};

inline ActionGroup closure(const Ambient &amb, const std::vector<Code> &gens, size_t cap = size_cap()) {
  std::vector<char> in(amb.size(), 0);
  std::vector<Code> list{amb.identity()};
  in[amb.identity()] = 1;
  for (size_t i = 0; i < list.size(); ++i)
    for (Code g : gens) {
      Code y = amb.compose(list[i], g);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
        if (list.size() > cap) throw SizeCapExceeded("group exceeds size cap " + std::to_string(cap));
      }
    }
  return ActionGroup(amb, std::move(list), gens);
}

inline ActionGroup closure(const Ambient &amb, const std::vector<AffineSymplectomorphism> &gens) {
  std::vector<Code> cs;
  for (auto &g : gens) cs.push_back(amb.code(g));
  return closure(amb, cs);
}

// A[n+1] x| G0 for a G0 name realized on the model.
inline ActionGroup ambient_group(const SurfaceModel &model, const std::string &g0, int n) {
  if (!model.realizes(g0)) throw std::invalid_argument(g0 + " is not realizable on model " + model.name);
  const Ambient &amb = ambient_context(model, n);
  std::vector<Code> gens;
  for (int i = 0; i < 4; ++i) {
    std::array<int, 4> e{0, 0, 0, 0};
    e[i] = 1;
    gens.push_back(amb.code(amb.index(e), model.group.identity));
  }
  for (auto &sym : model.g0_generators.at(g0))
    gens.push_back(amb.code(0, model.group.index_of(model.generator(sym).int_matrix)));
  return closure(amb, gens);
}

// subgroup generated by a union of conjugacy classes is normal
inline ActionGroup normal_closure(const ActionGroup &G, const std::vector<Code> &S) {
  const Ambient &amb = G.ambient();
  std::vector<char> seen(amb.size(), 0);
  std::vector<Code> gens;
  for (Code s : S) {
    if (!G.contains(s)) throw std::invalid_argument("normal_closure: element not in G");
    for (Code c : G.conjugacy_classes()[G.class_of(s)])
      if (!seen[c]) seen[c] = 1, gens.push_back(c);
  }
  return closure(amb, gens);
}

inline bool is_normal_subgroup(const ActionGroup &G, const ActionGroup &N) {
  for (Code g : G.generators())
    for (Code x : N.elements())
      if (!N.contains(G.ambient().conjugate(g, x))) return false;
  return true;
}

inline CayleyGroup quotient_group(const ActionGroup &G, const ActionGroup &N) {
  if (!is_normal_subgroup(G, N)) throw std::invalid_argument("quotient by a non-normal subgroup");
  CayleyGroup C = G.cayley();
  std::vector<char> mask(G.order(), 0);
  for (Code x : N.elements()) mask[G.local_index(x)] = 1;
  return C.quotient(mask);
}

inline GroupFingerprint quotient_fingerprint(const ActionGroup &G, const ActionGroup &N) {
  return identify(quotient_group(G, N));
}

inline GroupFingerprint fingerprint(const ActionGroup &G) { return identify(G.cayley()); }

// Name of the linear image G0 among the catalogue entries.
inline std::string g0_name(const ActionGroup &G) {
  auto lins = G.linear_image();
  const LinearGroup &L = G.model().group;
  std::vector<int> idx(L.size(), -1);
  for (size_t i = 0; i < lins.size(); ++i) idx[lins[i]] = static_cast<int>(i);
  int k = static_cast<int>(lins.size());
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[static_cast<size_t>(a) * k + b] = idx[L.mul[lins[a]][lins[b]]];
  return identify(CayleyGroup(k, std::move(t))).name();
}

// beta with tau_beta G tau_{-beta} = G_tr x| G0, searched over A[n+1]
inline std::optional<TorsionVector> affine_split_conjugator(const ActionGroup &G) {
  const Ambient &amb = G.ambient();
  std::vector<char> tr(amb.translations(), 0), lin(amb.linear_size(), 0);
  for (Code c : G.elements()) {
    if (amb.is_translation(c)) tr[amb.trans(c)] = 1;
    lin[amb.lin(c)] = 1;
  }
  for (int beta = 0; beta < amb.translations(); ++beta) {
    Code tb = amb.code(beta, amb.linear_group().identity);
    bool ok = true;
    for (Code c : G.elements()) {
      Code y = amb.conjugate(tb, c);
      if (!tr[amb.trans(y)]) {
        ok = false;
        break;
      }
    }
    if (ok) return TorsionVector(amb.modulus(), amb.digits(beta));
  }
  return std::nullopt;
}

inline ActionGroup conjugate_group(const ActionGroup &G, Code g) {
  const Ambient &amb = G.ambient();
  std::vector<Code> elems, gens;
  for (Code c : G.elements()) elems.push_back(amb.conjugate(g, c));
  for (Code c : G.generators()) gens.push_back(amb.conjugate(g, c));
  return ActionGroup(amb, std::move(elems), std::move(gens));
}

//===----------------------------------------------------------------------===//
// Subgroup enumeration by cyclic extension
//===----------------------------------------------------------------------===//

namespace detail {

inline std::vector<Code> normalizer_in(const ActionGroup &A, const ActionGroup &K) {
  std::vector<Code> out;
  const Ambient &amb = A.ambient();
  for (Code g : A.elements()) {
    bool ok = true;
    for (Code k : K.generators())
      if (!K.contains(amb.conjugate(g, k))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

// cheap conjugation-invariant bucket key
inline std::string subgroup_signature(const ActionGroup &H) {
  const Ambient &amb = H.ambient();
  std::map<std::pair<int, int>, int> stats; // (order, linear index) counts
  for (Code c : H.elements()) ++stats[{amb.element_order(c), amb.is_translation(c) ? 0 : 1}];
  std::string s = std::to_string(H.order()) + ":";
  for (auto &[k, v] : stats) s += std::to_string(k.first) + "/" + std::to_string(k.second) + "=" + std::to_string(v) + ",";
  std::vector<size_t> cls;
  for (auto &c : H.conjugacy_classes()) cls.push_back(c.size());
  std::sort(cls.begin(), cls.end());
  for (size_t c : cls) s += std::to_string(c) + ".";
  return s;
}

inline bool conjugate_in(const ActionGroup &A, const ActionGroup &H, const ActionGroup &K) {
  const Ambient &amb = A.ambient();
  for (Code g : A.elements()) {
    bool ok = true;
    for (Code h : H.generators())
      if (!K.contains(amb.conjugate(g, h))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

} // namespace detail

// All subgroups of a solvable ambient group up to conjugacy in the ambient group,
// followed by the filter. Ordered by size, then by the sorted element list.
inline std::vector<ActionGroup> subgroup_classes(const ActionGroup &A) {
  if (A.order() > size_cap()) throw SizeCapExceeded("ambient exceeds size cap");
  const Ambient &amb = A.ambient();
  std::vector<ActionGroup> all;
  std::map<std::string, std::vector<size_t>> buckets;
  std::vector<ActionGroup> layer{closure(amb, std::vector<Code>{})};
  all.push_back(layer[0]);
  buckets[detail::subgroup_signature(layer[0])].push_back(0);
  while (!layer.empty()) {
    std::vector<ActionGroup> next;
    for (const ActionGroup &K : layer) {
      for (Code g : detail::normalizer_in(A, K)) {
        if (K.contains(g)) continue;
        // g^p in K for a prime p
        Code x = g;
        int p = 1;
        do {
          x = amb.compose(x, g);
          ++p;
        } while (!K.contains(x));
        bool prime = p > 1;
        for (int d = 2; d * d <= p; ++d)
          if (p % d == 0) prime = false;
        if (!prime) continue;
        std::vector<Code> gens = K.generators();
        gens.push_back(g);
        ActionGroup H = closure(amb, gens);
        std::string sig = detail::subgroup_signature(H);
        auto &bucket = buckets[sig];
        bool known = false;
        for (size_t idx : bucket)
          if (all[idx].order() == H.order() && detail::conjugate_in(A, H, all[idx])) {
            known = true;
            break;
          }
        if (known) continue;
        bucket.push_back(all.size());
        all.push_back(H);
        next.push_back(H);
      }
    }
    layer = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const ActionGroup &a, const ActionGroup &b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return all;
}

inline bool surjects_onto_linear(const ActionGroup &H, const ActionGroup &A) {
  return H.linear_image() == A.linear_image();
}

} // namespace terminvar
