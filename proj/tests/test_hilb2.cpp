#include <gtest/gtest.h>

#include <fstream>

#include "terminvar/hilb2.hpp"

using namespace terminvar;

namespace {
HilbRecord rec(int deg, std::vector<std::string> gens, int rank) {
  return hilb_invariants(PermGroup::from_cycles(deg, gens), rank);
}
} // namespace

TEST(Hilb2, Examples) {
  auto c2 = rec(2, {"(1 2)"}, 15);
  EXPECT_EQ(std::tie(c2.N2, c2.b2), std::make_tuple(1, 16));
  EXPECT_EQ(c2.pi1.name(), "{1}");
  auto k4 = rec(4, {"(1 2)", "(3 4)"}, 11);
  EXPECT_EQ(std::tie(k4.N2, k4.b2), std::make_tuple(3, 14));
  EXPECT_EQ(k4.pi1.name(), "{1}");
  auto c4 = rec(4, {"(1 2 3 4)"}, 9);
  EXPECT_EQ(std::tie(c4.N2, c4.b2), std::make_tuple(1, 10));
  EXPECT_EQ(c4.pi1.name(), "C2");
}

TEST(Hilb2, OddOrderRejected) { EXPECT_THROW(rec(3, {"(1 2 3)"}, 1), OddOrderGroup); }

TEST(Hilb2, ElementaryAbelianTwoGroups) {
  for (int k = 1; k <= 4; ++k) {
    std::vector<std::string> gens;
    for (int i = 0; i < k; ++i) gens.push_back("(" + std::to_string(2 * i + 1) + " " + std::to_string(2 * i + 2) + ")");
    auto r = rec(2 * k, gens, 8);
    EXPECT_EQ(r.N2, (1 << k) - 1);
    EXPECT_EQ(r.pi1.name(), "{1}");
  }
}

TEST(Hilb2, EmbeddedTableMatchesDataFile) {
  std::ifstream in(std::string(TERMINVAR_DATA_DIR) + "/hilb2.csv");
  ASSERT_TRUE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), std::string(detail::hilb2_csv));
}

TEST(Hilb2, TableShape) {
  auto &t = hilb_table();
  EXPECT_EQ(t.size(), 74u);
  size_t fixtured = 0, highlighted = 0;
  for (auto &r : t) {
    EXPECT_EQ(r.b2, r.rank + r.N2) << r.id;
    fixtured += r.fixtured();
    highlighted += r.fixtured() && r.simply_connected();
  }
  EXPECT_GE(fixtured, 35u);
  EXPECT_GE(highlighted, 25u);
}

TEST(Hilb2, EveryFixturedRow) {
  for (auto &r : hilb_table()) {
    if (!r.fixtured()) continue;
    PermGroup G = r.group();
    EXPECT_EQ(G.order(), std::stoul(r.id.substr(0, r.id.find(',')))) << r.id;
    HilbRecord h = hilb_invariants(G, r.rank, r.id);
    EXPECT_EQ(h.N2, r.N2) << r.id;
    EXPECT_EQ(h.b2, r.b2) << r.id;
    EXPECT_EQ(h.pi1.name(), r.pi1) << r.id;
  }
  EXPECT_EQ(hilb_invariants(hilb_row("16,14").group(), 8).b2, 23);
  EXPECT_EQ(hilb_invariants(hilb_row("16,9").group(), 4).pi1.name(), "D4");
}

TEST(Hilb2, CsvParsing) {
  auto rows = parse_hilb_csv("group_id,alias,rank,perm_degree,generators,expected_N2,expected_b2,expected_pi1\n"
                             "\"4,2\",C2^2,11,4,(1 2); (3 4),3,14,{1}\n"
                             "\"9,9\",X,3,,,0,3,{1}\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].id, "4,2");
  EXPECT_EQ(rows[0].generators.size(), 2u);
  EXPECT_FALSE(rows[1].fixtured());
  EXPECT_THROW(parse_hilb_csv("a,b\n"), std::invalid_argument);
  EXPECT_THROW(parse_hilb_csv("\"4,2\",C2^2,x,4,(1 2),3,14,{1}\n"), std::invalid_argument);
}

TEST(PermGroup, CyclesAndCap) {
  EXPECT_EQ(cycles_string(parse_cycles("(1 3)(2 4 5)", 5)), "(1,3)(2,4,5)");
  EXPECT_THROW(parse_cycles("(1 6)", 5), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), std::invalid_argument);
  EXPECT_THROW(PermGroup(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)}, 50), SizeCapExceeded);
}
