#pragma once
// Betti numbers, Euler characteristic and Chern numbers of a terminalization of K2(A)/G
// as functions of b2, b3 and the isolated singularity counts.

#include "terminvar/algebra.hpp"

namespace terminvar {

struct TopologyRecord {
  BigInt b4;
  BigInt chi;
  Rational c4;
  Rational c2sq;

  // b0 = b8 = 1, b1 = b7 = 0, b2 = b6, b3 = b5
  bool poincare_consistent(int b2, int b3) const { return chi == BigInt(2 + 2 * b2 - 2 * b3) + b4; }
};

inline TopologyRecord topology_n2(int b2, int b3, int a2, int a3, int a4) {
  if (b2 < 0 || b3 < 0 || a2 < 0 || a3 < 0 || a4 < 0) throw std::invalid_argument("topology_n2 needs non-negative inputs");
  int sing = a2 + 2 * a3 + 3 * a4;
  TopologyRecord t;
  t.b4 = BigInt(10 * b2 - b3 + 46 - sing);
  t.chi = BigInt(12 * b2 - 3 * b3 + 48 - sing);
  t.c4 = Rational(t.chi) - Rational(a2, 2) - Rational(2 * a3, 3) - Rational(3 * a4, 4);
  t.c2sq = t.c4 / 3 + 720 - 240 * (Rational(a2, 32) + Rational(2 * a3, 27) + Rational(9 * a4, 64));
  return t;
}

} // namespace terminvar
