#include <gtest/gtest.h>

#include "properties.hpp"

using namespace terminvar;

namespace {

ActionGroup from_spec(const std::string &json) { return build_group(parse_group_spec(json)); }

} // namespace

TEST(Models, LinearGroupsAreUnimodularAndClosed) {
  for (ModelName id : all_model_names()) {
    const SurfaceModel &m = build_model(id);
    for (auto &e : m.group.elements) {
      EXPECT_EQ(to_int_matrix(e.int_matrix).determinant(), 1) << m.name;
      EXPECT_TRUE(m.compatible(e)) << m.name;
    }
  }
  EXPECT_EQ(build_model("quaternionic").group.size(), 24);
  EXPECT_EQ(build_model("e2-zeta6").group.size(), 12);
  EXPECT_EQ(build_model("e2-i").group.size(), 8);
  EXPECT_THROW(build_model("nope"), std::invalid_argument);
}

TEST(Ambient, Orders) {
  EXPECT_EQ(ambient_group(build_model("generic"), "C2", 2).order(), 162u);
  EXPECT_EQ(ambient_group(build_model("e2-zeta3"), "C3", 2).order(), 243u);
  EXPECT_EQ(ambient_group(build_model("quaternionic"), "BT24", 2).order(), 1944u);
  EXPECT_EQ(ambient_group(build_model("generic"), "C2", 3).order(), 512u);
  EXPECT_THROW(ambient_group(build_model("generic"), "C3", 2), std::invalid_argument);
}

TEST(Ambient, CompositionRule) {
  const Ambient &amb = ambient_context(build_model("e2-zeta3"), 2);
  Code g = resolve_generator(amb, gen({0, 0, 2, 1}, 3, "g3"));
  Code h = resolve_generator(amb, gen({1, 0, 0, 0}, 3));
  // (a, M)(b, N) = (a + M b, M N)
  Code gh = amb.compose(g, h);
  EXPECT_EQ(amb.lin(gh), amb.lin(g));
  EXPECT_EQ(amb.trans(gh), amb.add_translation(amb.trans(g), amb.act_translation(amb.lin(g), amb.trans(h))));
  EXPECT_EQ(amb.compose(g, amb.inverse(g)), amb.identity());
  EXPECT_EQ(amb.element_order(g), 3);
}

TEST(Closure, SizeCap) {
  const Ambient &amb = ambient_context(build_model("generic"), 2);
  std::vector<Code> gens{resolve_generator(amb, gen("g2"))};
  EXPECT_THROW(closure(amb, gens, 1), SizeCapExceeded);
  EXPECT_EQ(closure(amb, gens, 2).order(), 2u);
}

TEST(Fingerprint, CatalogueNames) {
  EXPECT_EQ(fingerprint(from_spec(R"({"model":"e2-i","generators":[{"m":"h"},{"m":"k"}]})")).name(), "Q8");
  EXPECT_EQ(fingerprint(from_spec(R"({"model":"quaternionic","generators":[{"m":"r"},{"m":"t"}]})")).name(), "BT24");
  EXPECT_EQ(fingerprint(from_spec(R"({"model":"e2-zeta6","generators":[{"m":"h"},{"m":"l"}]})")).name(), "BD12");
  EXPECT_EQ(fingerprint(build_group(k2_row("27,3.a").spec)).name(), "C3^2⋊C3");
  EXPECT_EQ(fingerprint(build_group(k2_row("81,12.a").spec)).name(), "C3^3⋊₂C3");
}

TEST(Fingerprint, IsomorphismSeparatesEqualOrders) {
  const CayleyGroup &Q8 = catalogue_entry("Q8")->group;
  const CayleyGroup &D4 = catalogue_entry("D4")->group;
  EXPECT_FALSE(are_isomorphic(Q8, D4));
  EXPECT_TRUE(are_isomorphic(Q8, PermGroup::from_cycles(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}).table));
}

TEST(Quotient, Q8ModCenter) {
  ActionGroup G = from_spec(R"({"model":"e2-i","generators":[{"m":"h"},{"m":"k"}]})");
  EXPECT_EQ(G.conjugacy_classes().size(), 5u);
  ActionGroup N = closure(G.ambient(), std::vector<Code>{resolve_generator(G.ambient(), gen("g2"))});
  EXPECT_EQ(quotient_fingerprint(G, N).name(), "C2^2");
}

TEST(Invariants, Examples) {
  auto r = invariant_record(build_group(k2_row("162,54").spec));
  EXPECT_EQ(r.betti.b2, 8);
  EXPECT_EQ(r.pi1.name(), "{1}");
  auto e = invariant_record(build_group(k2_row("12,1").spec));
  EXPECT_EQ(e.betti.epsilon, 1);
  EXPECT_EQ(e.betti.b2, 6);
  auto t = invariant_record(from_spec(R"({"model":"generic","generators":[]})"));
  EXPECT_EQ(t.betti.b2, 7);
  EXPECT_EQ(t.gate, Gate::TerminalQuotient);
  EXPECT_FALSE(t.betti.b3.has_value());
}

TEST(Invariants, EpsilonOnlyForSplitBD12Rows) {
  for (auto &r : k2_table()) {
    int eps = bd12_epsilon(build_group(r.spec));
    bool expect = r.id == "12,1" || r.id == "108,37" || r.id == "972,NA";
    EXPECT_EQ(eps, expect ? 1 : 0) << r.id;
  }
}

TEST(Invariants, QualifyingElements) {
  const Ambient &amb = ambient_context(build_model("e2-zeta3"), 2);
  EXPECT_EQ(qualify(amb, resolve_generator(amb, gen("g2")), 2), Qualification::InvolutionSurface);
  EXPECT_EQ(qualify(amb, resolve_generator(amb, gen("g3")), 2), Qualification::Order3Surface);
  // T(alpha) != alpha
  EXPECT_EQ(qualify(amb, resolve_generator(amb, gen({1, 0, 0, 0}, 3, "g3")), 2), Qualification::None);
}

TEST(Catalogue, Ids) {
  EXPECT_THROW(k2_row("3,1"), SpecError);
  EXPECT_NO_THROW(k2_row("3,1.a"));
  EXPECT_THROW(catalogue_spec("162,54"), SpecError);
  EXPECT_EQ(k2_table().size(), 34u);
  for (auto &r : k2_table()) {
    ActionGroup G = build_group(r.spec);
    if (r.id.find("NA") == std::string::npos) EXPECT_EQ(G.order(), std::stoul(r.id)) << r.id;
  }
  EXPECT_EQ(build_group(k2_row("972,NA").spec).order(), 972u);
  EXPECT_EQ(build_group(k2_row("1944,NA").spec).order(), 1944u);
}

TEST(SpecIo, RoundTripAndErrors) {
  GroupSpec s = k2_row("54,5").spec;
  GroupSpec back = parse_group_spec(to_json(s).dump());
  EXPECT_EQ(build_group(back), build_group(s));
  EXPECT_THROW(parse_group_spec("{"), SpecError);
  EXPECT_THROW(parse_group_spec(R"({"generators":[]})"), SpecError);
  EXPECT_THROW(build_group(parse_group_spec(R"({"model":"generic","generators":[{"m":"g3"}]})")), SpecError);
  EXPECT_THROW(build_group(parse_group_spec(R"({"model":"generic","generators":[{"t":["1/2","0","0","0"]}]})")),
               SpecError);
  EXPECT_THROW(build_group(parse_group_spec(R"({"model":"generic","n":4,"generators":[]})")), SpecError);
  EXPECT_THROW(build_group(parse_group_spec(R"({"model":"torus","generators":[]})")), SpecError);
  EXPECT_THROW(parse_group_spec(R"({"model":"generic","generators":[{"t":["1/3"]}]})"), SpecError);
}

TEST(Enumeration, C2BlockHasFiveClasses) {
  auto got = props::enumerated_strings("generic", "C2");
  EXPECT_EQ(got.size(), 5u);
  EXPECT_EQ(got, props::block_strings({"2,1", "6,1", "18,4", "54,14", "162,54"}));
}

TEST(Enumeration, SubgroupsAreClosedAndSatisfyLagrange) {
  ActionGroup A = ambient_group(build_model("generic"), "C2", 2);
  for (auto &H : subgroup_classes(A)) {
    EXPECT_EQ(A.order() % H.order(), 0u);
    for (Code a : H.generators())
      for (Code b : H.elements()) EXPECT_TRUE(H.contains(A.ambient().compose(a, b)));
  }
}
