#include <gtest/gtest.h>

#include "properties.hpp"

using namespace terminvar;

namespace {

using V = KummerPoint::Variant;

size_t count_variant(const K2FixedLocus &f, V v) {
  return std::count_if(f.isolated.begin(), f.isolated.end(), [&](auto &z) { return z.variant == v; });
}

RationalTorusPoint pt(int64_t den, std::array<int64_t, 4> n) { return RationalTorusPoint(den, n); }

} // namespace

TEST(FixOnA, CountEqualsDeterminantForAllCatalogueElements) {
  auto v = props::fix_count_matches_det();
  EXPECT_TRUE(v.ok) << v.detail;
  EXPECT_GT(v.checked, 5000u);
}

TEST(FixedPoints, MinusIdentity) {
  const Ambient &amb = ambient_context(build_model("generic"), 2);
  auto f = fixed_points_on_K2(amb, resolve_generator(amb, gen("g2")));
  ASSERT_TRUE(f.surface.has_value());
  EXPECT_EQ(f.surface->type, Qualification::InvolutionSurface);
  EXPECT_EQ(f.isolated.size(), 36u);
  EXPECT_EQ(count_variant(f, V::Triple), 35u);
  EXPECT_EQ(count_variant(f, V::Punctual), 1u);
}

TEST(FixedPoints, LinearOrderThree) {
  const Ambient &amb = ambient_context(build_model("e2-zeta3"), 2);
  auto f = fixed_points_on_K2(amb, resolve_generator(amb, gen("g3")));
  ASSERT_TRUE(f.surface.has_value());
  EXPECT_EQ(f.surface->type, Qualification::Order3Surface);
  EXPECT_EQ(f.isolated.size(), 12u);
}

TEST(FixedPoints, TranslationFixes27Triples) {
  const Ambient &amb = ambient_context(build_model("generic"), 2);
  Code t = resolve_generator(amb, gen({1, 0, 0, 0}, 3));
  auto f = fixed_points_on_K2(amb, t);
  EXPECT_FALSE(f.surface.has_value());
  ASSERT_EQ(f.isolated.size(), 27u);
  RationalTorusPoint a = pt(3, {1, 0, 0, 0});
  for (auto &z : f.isolated) {
    ASSERT_EQ(z.variant, V::Triple);
    // [(x, x + a, x - a)]
    auto &s = z.support;
    bool shape = false;
    for (int i = 0; i < 3; ++i) {
      RationalTorusPoint x = s[i];
      std::array<RationalTorusPoint, 3> w{x, x + a, x + (-a)};
      std::sort(w.begin(), w.end());
      if (w == s) shape = true;
    }
    EXPECT_TRUE(shape) << z.str();
  }
}

TEST(FixedPoints, RejectsIdentityAndWrongN) {
  const Ambient &amb = ambient_context(build_model("generic"), 2);
  EXPECT_THROW(fixed_points_on_K2(amb, amb.identity()), std::invalid_argument);
  const Ambient &amb3 = ambient_context(build_model("generic"), 3);
  EXPECT_THROW(fixed_points_on_K2(amb3, resolve_generator(amb3, gen("g2"))), std::invalid_argument);
}

TEST(SurfaceMembership, InvolutionPatterns) {
  const Ambient &amb = ambient_context(build_model("generic"), 2);
  Code g = resolve_generator(amb, gen({1, 0, 0, 0}, 3, "g2")); // tau_a(-id), a = (1/3,0,0,0)
  RationalTorusPoint x = pt(15, {3, 1, 4, 7});
  RationalTorusPoint a = pt(3, {1, 0, 0, 0});
  EXPECT_TRUE(surface_membership(amb, KummerPoint::triple(x, -x + a, -a), g));
  Code minus_id = resolve_generator(amb, gen("g2"));
  auto z = KummerPoint::triple(pt(2, {1, 0, 0, 0}), pt(2, {0, 1, 0, 0}), pt(2, {1, 1, 0, 0}));
  EXPECT_FALSE(surface_membership(amb, z, minus_id));
}

TEST(SurfaceMembership, S3PointOnThreeSurfaces) {
  const Ambient &amb = ambient_context(build_model("generic"), 2);
  RationalTorusPoint a = pt(3, {1, 0, 0, 0});
  auto z = KummerPoint::triple(RationalTorusPoint(), a, -a);
  int on = 0;
  for (int k = 0; k < 3; ++k) on += surface_membership(amb, z, resolve_generator(amb, gen({k, 0, 0, 0}, 3, "g2")));
  EXPECT_EQ(on, 3);
}

TEST(FixedPoints, ConjugationEquivariance) {
  std::mt19937 rng(5);
  for (auto &[id, G] : props::catalogue_groups(false)) {
    const Ambient &amb = G.ambient();
    std::uniform_int_distribution<size_t> e(1, G.order() - 1);
    std::uniform_int_distribution<int> t(0, amb.translations() - 1), l(0, amb.linear_size() - 1);
    for (int k = 0; k < 4; ++k) {
      Code g = G.elements()[e(rng)], h = amb.code(t(rng), l(rng));
      if (g == amb.identity()) continue;
      auto base = fixed_points_on_K2(amb, g).isolated;
      std::vector<KummerPoint> moved;
      for (auto &z : base) moved.push_back(apply(amb, h, z));
      std::sort(moved.begin(), moved.end());
      EXPECT_EQ(fixed_points_on_K2(amb, amb.conjugate(h, g)).isolated, moved) << id << " " << amb.describe(g);
    }
  }
}

TEST(FixedLociTable, AllRows) {
  for (auto &r : fixed_loci_table()) {
    GroupFixedLocus f = group_fixed_locus(build_group(r.spec));
    EXPECT_EQ(f.surfaces, r.surfaces) << r.group;
    EXPECT_EQ(static_cast<int>(f.points.size()), r.points) << r.group;
    std::map<std::vector<std::string>, int> split(r.split.begin(), r.split.end());
    EXPECT_EQ(f.split, split) << r.group;
  }
}

// tau_gamma g_alpha with g_alpha(gamma) != gamma: 9 points off the exceptional locus, 18 on it
TEST(FixedPoints, TwentySevenPointSplit) {
  ActionGroup G = build_group(k2_row("216,153").spec);
  const Ambient &amb = G.ambient();
  const LinearGroup &L = amb.linear_group();
  std::set<Code> subgroups;
  for (Code h : G.elements()) {
    if (amb.element_order(h) != 3 || L.order[amb.lin(h)] != 3 || qualify(G, h) != Qualification::None) continue;
    subgroups.insert(std::min(h, amb.inverse(h)));
    auto f = fixed_points_on_K2(amb, h);
    EXPECT_EQ(f.isolated.size(), 27u) << amb.describe(h);
    EXPECT_EQ(count_variant(f, V::Triple), 9u);
    EXPECT_EQ(count_variant(f, V::CurveFiber), 18u);
  }
  EXPECT_EQ(subgroups.size(), 24u);
}
