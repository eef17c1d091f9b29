#include <gtest/gtest.h>

#include "properties.hpp"

using namespace terminvar;

TEST(TransferRules, Table) {
  auto rule = [](std::string iso, std::vector<std::string> br) { return transfer_rule({iso, br}); };
  EXPECT_EQ(rule("C2", {}).a2, 1);
  EXPECT_EQ(rule("C3", {}).a3, 1);
  EXPECT_EQ(rule("C4", {}).a4, 1);
  EXPECT_EQ(rule("C6", {}).a6, 1);
  EXPECT_EQ(rule("C4", {"A1"}).a2, 2);
  EXPECT_EQ(rule("C6", {"A1"}).a3, 2);
  EXPECT_EQ(rule("C6", {"A2"}).a2, 3);
  EXPECT_TRUE(rule("C6", {"A1", "A2"}).zero());
  EXPECT_TRUE(rule("C3^2", {"A2", "A2"}).zero());
  EXPECT_TRUE(rule("S3", {"A1"}).zero());
  EXPECT_TRUE(rule("C3xS3", {"A1", "A2"}).zero());
  EXPECT_TRUE(rule("BT24", {"A2"}).zero());
  EXPECT_THROW(rule("D4", {"A1"}), UnmatchedLocalModel);
  EXPECT_THROW(rule("Q8", {}), UnmatchedLocalModel);
}

TEST(Census, ExamplesN2) {
  auto c = census_n2(build_group(k2_row("162,54").spec));
  EXPECT_EQ(std::tie(c.a2, c.a3, c.a4), std::make_tuple(36, 0, 0));
  auto d = census_n2(build_group(k2_row("54,14").spec));
  EXPECT_EQ(std::tie(d.a2, d.a3, d.a4), std::make_tuple(36, 13, 0));
}

TEST(Census, AllSimplyConnectedRows) {
  for (auto &s : k2_sing_table()) {
    auto c = census_n2(build_group(k2_row(s.id).spec));
    EXPECT_EQ(std::tie(c.a2, c.a3, c.a4), std::tie(s.a2, s.a3, s.a4)) << s.id;
    EXPECT_EQ(c.a6, 0) << s.id;
  }
}

TEST(Census, ThirdCountClosedForm) {
  auto v = props::a3_closed_form();
  EXPECT_TRUE(v.ok) << v.detail;
}

TEST(Census, OrbitStabilizer) {
  auto v = props::orbit_stabilizer_products();
  EXPECT_TRUE(v.ok) << v.detail;
  EXPECT_GT(v.checked, 0u);
}

TEST(Census, Row216IntermediateCounts) {
  StabilizerCensus c = stabilizer_census(build_group(k2_row("216,153").spec));
  int c4 = 0, c3_tr = 0, c3_lin = 0;
  for (auto &o : c.orbits) {
    if (!local_model(o).isolated()) continue;
    if (o.isotropy == "C4") ++c4;
    if (o.isotropy == "C3") ++(o.translation_type ? c3_tr : c3_lin);
  }
  EXPECT_EQ(c4, 3);
  EXPECT_EQ(c3_tr, 1);
  EXPECT_EQ(c3_lin, 9);
}

TEST(Census, ClosedFormsN3) {
  const int a2[] = {140, 112, 64, 0, 0}, s2[] = {0, 7, 18, 28, 0};
  for (int i = 0; i <= 4; ++i) {
    auto c = census_n3(i);
    EXPECT_EQ(c.a2, a2[i]);
    EXPECT_EQ(c.s2, s2[i]);
    EXPECT_EQ(c.smooth, i == 4);
  }
  EXPECT_THROW(census_n3(5), std::invalid_argument);
  EXPECT_THROW(census_n3(-1), std::invalid_argument);
}

TEST(Smoothness, OnlyTheAffineC3CubeAmongKummerRows) {
  for (auto &r : k2_table()) {
    Smoothness s = smoothness_n2(build_group(r.spec));
    EXPECT_EQ(s.smooth, r.id == "27,5.b") << r.id << ": " << s.witness;
  }
  EXPECT_FALSE(smoothness_flag(census_n2(build_group(k2_row("2,1").spec))).smooth);
  EXPECT_TRUE(smoothness_flag(census_n3(4)).smooth);
}

TEST(Configuration, BT24Report) {
  SingularConfiguration c = configuration_report(build_group(k2_row("24,3").spec));
  EXPECT_EQ(std::tie(c.census.a2, c.census.a3, c.census.a4), std::make_tuple(20, 12, 3));
  EXPECT_EQ(c.surfaces.size(), 2u);
  int bt = 0;
  for (auto &p : c.points) bt += p.isotropy == "BT24";
  EXPECT_EQ(bt, 2);
}
