#pragma once
// Named actions with frozen generators and the expected table data they reproduce.

#include "terminvar/spec_io.hpp"

namespace terminvar {

struct K2Row {
  std::string id;    // catalogue id, e.g. "27,5.b"
  std::string label; // group name as printed in the table
  bool simply_connected;
  GroupSpec spec;
  std::string g0;
  int rank, N2, N3, b2;
  std::string pi1;
};

struct SingRow {
  std::string id; // K2Row id
  int N2, N3, b2;
  int a2, a3, a4;
  int b4, chi;
  std::string c4, c2sq;
};

struct K3Row {
  std::string id;
  int i; // G = C2^i x <-id>
  GroupSpec spec;
  int N2, b2, a2, s2;
};

struct FixedLociRow {
  std::string group;
  GroupSpec spec;
  int surfaces, points;
  // point counts per set of surfaces through them, keyed by the surfaces' labels
  std::vector<std::pair<std::vector<std::string>, int>> split;
};

namespace detail {

inline GroupSpec k2(std::string model, std::vector<GeneratorSpec> g) { return {std::move(model), 2, std::move(g)}; }
inline GeneratorSpec t3(std::array<int, 4> t, std::string m = {}) { return gen(t, 3, std::move(m)); }

} // namespace detail

inline const std::vector<K2Row> &k2_table() {
  using detail::k2;
  using detail::t3;
  static const std::vector<K2Row> rows = [] {
    std::vector<K2Row> r;
    auto add = [&](std::string id, std::string label, bool sc, GroupSpec s, std::string g0, int rank, int N2, int N3,
                   int b2, std::string pi1) {
      r.push_back({std::move(id), std::move(label), sc, std::move(s), std::move(g0), rank, N2, N3, b2, std::move(pi1)});
    };
    GeneratorSpec e1 = t3({1, 0, 0, 0}), e2 = t3({0, 1, 0, 0}), e3 = t3({0, 0, 1, 0}), e4 = t3({0, 0, 0, 1});

    add("2,1", "C2", true, k2("generic", {gen("g2")}), "C2", 7, 1, 0, 8, "{1}");
    add("6,1", "C3⋊C2", true, k2("generic", {e4, gen("g2")}), "C2", 7, 1, 0, 8, "{1}");
    add("18,4", "C3^2⋊_2C2", true, k2("generic", {e4, e3, gen("g2")}), "C2", 7, 1, 0, 8, "{1}");
    add("54,14", "C3^3⋊C2", true, k2("generic", {e4, e3, e2, gen("g2")}), "C2", 7, 1, 0, 8, "{1}");
    add("162,54", "C3^4⋊C2", true, k2("generic", {e4, e3, e2, e1, gen("g2")}), "C2", 7, 1, 0, 8, "{1}");

    GeneratorSpec a = t3({0, 0, 2, 0}, "g3"), b = t3({0, 0, 0, 2}, "g3"), c = t3({0, 0, 2, 1}, "g3"),
                  d = t3({2, 1, 0, 0}, "g3"), e = t3({1, 1, 0, 0}, "g3"), f = t3({1, 2, 0, 2}, "g3");
    GeneratorSpec g3 = gen("g3"), u = t3({1, 2, 0, 0});
    add("3,1.a", "C3", false, k2("e2-zeta3", {a}), "C3", 5, 0, 0, 5, "C3");
    add("3,1.b", "C3", true, k2("e2-zeta3", {g3}), "C3", 5, 0, 1, 7, "{1}");
    add("9,2.a", "C3^2", false, k2("e2-zeta3", {a, b}), "C3", 5, 0, 0, 5, "C3^2");
    add("9,2.b", "C3^2", true, k2("e2-zeta3", {g3, c}), "C3", 5, 0, 3, 11, "{1}");
    add("27,3.a", "C3^2⋊C3", false, k2("e2-zeta3", {a, f, e}), "C3", 5, 0, 0, 5, "C3^2⋊C3");
    add("27,3.b", "C3^2⋊C3", false, k2("e2-zeta3", {g3, c, a}), "C3", 5, 0, 1, 7, "C3");
    add("27,5.a", "C3^3", false, k2("e2-zeta3", {a, b, u}), "C3", 5, 0, 0, 5, "C3^3");
    add("27,5.b", "C3^3", true, k2("e2-zeta3", {g3, c, d}), "C3", 5, 0, 9, 23, "{1}");
    add("81,12.a", "C3^3⋊_2C3", false, k2("e2-zeta3", {a, b, u, e}), "C3", 5, 0, 0, 5, "C3^3⋊₂C3");
    add("81,12.b", "C3^3⋊_2C3", false, k2("e2-zeta3", {g3, c, a, d}), "C3", 5, 0, 3, 11, "C3");
    add("243,37", "C3^4⋊_1C3", false, k2("e2-zeta3", {g3, c, a, d, e}), "C3", 5, 0, 1, 7, "C3^2");

    add("4,1", "C4", false, k2("e2-i", {gen("g4")}), "C4", 5, 1, 0, 6, "C2");
    add("36,9", "C3^2⋊C4", false, k2("e2-i", {e4, e3, gen("g4")}), "C4", 5, 1, 0, 6, "C2");
    add("324,164", "C3^4⋊_4C4", false, k2("e2-i", {e4, e3, e2, e1, gen("g4")}), "C4", 5, 1, 0, 6, "C2");

    GeneratorSpec p = t3({0, 0, 1, 1}, "g3"), q = t3({1, 1, 0, 0}, "g3"), s = t3({0, 0, 0, 1}, "g3"),
                  v = t3({0, 1, 0, 0}, "g3"), g2 = gen("g2");
    add("6,2", "C6", true, k2("e2-zeta6", {g3, g2}), "C6", 5, 1, 1, 8, "{1}");
    add("18,3", "C3⋊C6", true, k2("e2-zeta6", {g3, p, g2}), "C6", 5, 1, 2, 10, "{1}");
    add("54,13", "C3^2⋊_4C6", true, k2("e2-zeta6", {g3, p, q, g2}), "C6", 5, 1, 5, 16, "{1}");
    add("54,5", "C3^2⋊C6", true, k2("e2-zeta6", {g3, p, s, g2}), "C6", 5, 1, 1, 8, "{1}");
    add("162,40", "C3^3⋊_4C6", true, k2("e2-zeta6", {g3, p, s, q, g2}), "C6", 5, 1, 2, 10, "{1}");
    add("486,146", "C3^4⋊_4C6", true, k2("e2-zeta6", {g3, p, s, q, v, g2}), "C6", 5, 1, 1, 8, "{1}");

    GeneratorSpec h = gen("h"), g4 = gen("g4");
    add("8,4", "Q8", false, k2("e2-i", {g2, g4, h}), "Q8", 4, 1, 0, 5, "C2^2");
    add("72,41", "C3^2⋊Q8", false, k2("e2-i", {t3({0, 1, 1, 1}), t3({1, 0, 2, 1}), g2, g4, h}), "Q8", 4, 1, 0, 5, "C2^2");
    add("648,730", "C3^4⋊Q8", false, k2("e2-i", {e4, e3, e2, e1, g2, g4, h}), "Q8", 4, 1, 0, 5, "C2^2");

    add("12,1", "BD12", false, k2("e2-zeta6", {g3, g2, h}), "BD12", 4, 1, 1, 6, "C2");
    add("108,37", "C3^2⋊_3BD12", false, k2("e2-zeta6", {g3, p, q, g2, h}), "BD12", 4, 1, 3, 10, "C2");
    add("972,NA", "C3^4⋊_*BD12", false, k2("e2-zeta6", {g3, p, s, q, v, g2, h}), "BD12", 4, 1, 1, 6, "C2");

    add("24,3", "BT24", true, k2("quaternionic", {g2, g4, g3}), "BT24", 4, 1, 1, 7, "{1}");
    add("216,153", "C3^2⋊BT24", true, k2("quaternionic", {t3({0, 0, 1, 1}), t3({1, 2, 0, 2}), g2, g4, g3}), "BT24", 4, 1,
        1, 7, "{1}");
    add("1944,NA", "C3^4⋊_*BT24", true, k2("quaternionic", {e4, e3, e2, e1, g2, g4, g3}), "BT24", 4, 1, 1, 7, "{1}");
    return r;
  }();
  return rows;
}

inline const std::vector<SingRow> &k2_sing_table() {
  static const std::vector<SingRow> rows = {
      {"2,1", 1, 0, 8, 36, 0, 0, 90, 108, "90", "480"},
      {"6,1", 1, 0, 8, 36, 13, 0, 64, 82, "166/3", "712/3"},
      {"18,4", 1, 0, 8, 36, 16, 0, 58, 76, "142/3", "544/3"},
      {"54,14", 1, 0, 8, 36, 13, 0, 64, 82, "166/3", "712/3"},
      {"162,54", 1, 0, 8, 36, 0, 0, 90, 108, "90", "480"},
      {"3,1.b", 0, 1, 7, 0, 12, 0, 92, 108, "100", "540"},
      {"9,2.b", 0, 3, 11, 0, 15, 0, 126, 150, "140", "500"},
      {"27,5.b", 0, 9, 23, 0, 0, 0, 276, 324, "324", "828"},
      {"6,2", 1, 1, 8, 28, 12, 0, 74, 92, "70", "320"},
      {"18,3", 1, 2, 10, 28, 12, 0, 94, 116, "94", "328"},
      {"54,13", 1, 5, 16, 28, 0, 0, 178, 212, "198", "576"},
      {"54,5", 1, 1, 8, 28, 20, 0, 58, 76, "146/3", "512/3"},
      {"162,40", 1, 2, 10, 28, 12, 0, 94, 116, "94", "328"},
      {"486,146", 1, 1, 8, 28, 12, 0, 74, 92, "70", "320"},
      {"24,3", 1, 1, 7, 20, 12, 3, 63, 79, "235/4", "275"},
      {"216,153", 1, 1, 7, 20, 16, 3, 55, 71, "577/12", "601/3"},
      {"1944,NA", 1, 1, 7, 20, 12, 3, 63, 79, "235/4", "275"},
  };
  return rows;
}

inline const std::vector<K3Row> &k3_table() {
  static const std::vector<K3Row> rows = [] {
    std::vector<K3Row> r;
    const std::array<std::array<int, 4>, 4> basis{{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}};
    const int N2[] = {1, 2, 4, 8, 16}, b2[] = {8, 9, 11, 15, 23}, a2[] = {140, 112, 64, 0, 0}, s2[] = {0, 7, 18, 28, 0};
    const char *ids[] = {"2,1", "4,2", "8,5", "16,14", "32,51"};
    for (int i = 0; i <= 4; ++i) {
      GroupSpec s{"generic", 3, {}};
      for (int k = 0; k < i; ++k) s.generators.push_back(gen(basis[k], 2));
      s.generators.push_back(gen("g2"));
      r.push_back({ids[i], i, s, N2[i], b2[i], a2[i], s2[i]});
    }
    return r;
  }();
  return rows;
}

// Surface labels: "-id" for the involution surface, "g3" for order-3 surfaces.
inline const std::vector<FixedLociRow> &fixed_loci_table() {
  static const std::vector<FixedLociRow> rows = {
      {"C2", {"generic", 2, {gen("g2")}}, 1, 36, {{{}, 36}}},
      {"C3", {"e2-zeta3", 2, {gen("g3")}}, 1, 12, {{{}, 12}}},
      {"C4", {"e2-i", 2, {gen("g4")}}, 0, 16, {{{"-id"}, 8}, {{}, 8}}},
      {"C6", {"e2-zeta3", 2, {gen("g2"), gen("g3")}}, 0, 12, {{{"-id", "g3"}, 2}, {{"-id"}, 4}, {{"g3"}, 6}}},
      {"BT24", {"quaternionic", 2, {gen("r"), gen("t")}}, 0, 2, {{{"g3", "g3", "g3", "g3"}, 2}}},
  };
  return rows;
}

inline const K2Row &k2_row(const std::string &id) {
  for (auto &r : k2_table())
    if (r.id == id) return r;
  std::vector<std::string> alts;
  for (auto &r : k2_table())
    if (r.id.rfind(id + ".", 0) == 0) alts.push_back(r.id);
  if (!alts.empty()) {
    std::string s;
    for (auto &x : alts) s += " k2/" + x;
    throw SpecError("ambiguous row " + id + "; choose one of" + s);
  }
  throw SpecError("unknown K2 catalogue row " + id);
}

inline const K3Row &k3_row(const std::string &id) {
  for (auto &r : k3_table())
    if (r.id == id) return r;
  throw SpecError("unknown K3 catalogue row " + id);
}

inline const SingRow *sing_row(const std::string &id) {
  for (auto &r : k2_sing_table())
    if (r.id == id) return &r;
  return nullptr;
}

// "k2/162,54", "k3/8,5"
inline GroupSpec catalogue_spec(const std::string &name) {
  if (name.rfind("k2/", 0) == 0) return k2_row(name.substr(3)).spec;
  if (name.rfind("k3/", 0) == 0) return k3_row(name.substr(3)).spec;
  throw SpecError("catalogue ids start with k2/ or k3/: " + name);
}

} // namespace terminvar
