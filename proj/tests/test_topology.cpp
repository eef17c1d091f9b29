#include <gtest/gtest.h>

#include "properties.hpp"

using namespace terminvar;

TEST(Topology, Examples) {
  TopologyRecord t = topology_n2(8, 0, 36, 0, 0);
  EXPECT_EQ(t.b4, 90);
  EXPECT_EQ(t.chi, 108);
  EXPECT_EQ(t.c4, 90);
  EXPECT_EQ(t.c2sq, 480);
  TopologyRecord s = topology_n2(23, 0, 0, 0, 0);
  EXPECT_EQ(s.b4, 276);
  EXPECT_EQ(s.chi, 324);
  EXPECT_EQ(s.c4, 324);
  EXPECT_EQ(s.c2sq, 828);
  TopologyRecord f = topology_n2(8, 0, 36, 13, 0);
  EXPECT_EQ(to_string(f.c4), "166/3");
  EXPECT_THROW(topology_n2(-1, 0, 0, 0, 0), std::invalid_argument);
}

TEST(Topology, AllSimplyConnectedRowsExactly) {
  for (auto &s : k2_sing_table()) {
    TopologyRecord t = topology_n2(s.b2, 0, s.a2, s.a3, s.a4);
    EXPECT_EQ(t.b4, s.b4) << s.id;
    EXPECT_EQ(t.chi, s.chi) << s.id;
    EXPECT_EQ(t.c4, parse_rational(s.c4)) << s.id;
    EXPECT_EQ(t.c2sq, parse_rational(s.c2sq)) << s.id;
  }
}

TEST(Topology, PoincareIdentityAllRows) {
  auto v = props::poincare_all_rows();
  EXPECT_TRUE(v.ok) << v.detail;
  EXPECT_GE(v.checked, 17u);
}

TEST(Topology, ThirdBettiVanishesWhenLinearPartIsNontrivial) {
  for (auto &r : k2_table()) EXPECT_EQ(betti_data(build_group(r.spec)).b3, 0) << r.id;
}
