#include <gtest/gtest.h>

#include "properties.hpp"

using namespace terminvar;

TEST(Properties, ConjugationInvarianceOfRecords) {
  auto v = props::conjugation_invariance(20);
  EXPECT_TRUE(v.ok) << v.detail;
  EXPECT_EQ(v.checked, 20u * (k2_table().size() + k3_table().size()));
}

TEST(Properties, CensusIsConjugationInvariant) {
  std::mt19937 rng(3);
  for (auto &s : k2_sing_table()) {
    ActionGroup G = build_group(k2_row(s.id).spec);
    const Ambient &amb = G.ambient();
    std::uniform_int_distribution<int> t(0, amb.translations() - 1), l(0, amb.linear_size() - 1);
    SingularCensus c = census_n2(conjugate_group(G, amb.code(t(rng), l(rng))));
    EXPECT_EQ(std::tie(c.a2, c.a3, c.a4), std::tie(s.a2, s.a3, s.a4)) << s.id;
  }
}
