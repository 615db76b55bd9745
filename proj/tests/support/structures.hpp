#pragma once

#include "phm/fixtures.hpp"

namespace phm::testsupport {

// Sweedler's four-dimensional Hopf algebra over the trivial group: basis
// {1, g, x, gx} with g^2 = 1, x^2 = 0, xg = -gx, Δ(g) = g⊗g,
// Δ(x) = x⊗1 + g⊗x. Noncommutative, antipode of order four.
inline HopfGCoalgebra sweedler_hopf() {
  HopfGCoalgebra h;
  h.group = GroupTable::cyclic(1);
  h.alg.dims = {4};
  Mat mult(4, 16);
  // indices: 0 = 1, 1 = g, 2 = x, 3 = gx
  auto set = [&](int i, int j, int target, int coef) { mult.at(target, i * 4 + j) = coef; };
  for (int j = 0; j < 4; ++j) set(0, j, j, 1);
  set(1, 0, 1, 1);
  set(1, 1, 0, 1);
  set(1, 2, 3, 1);   // g·x = gx
  set(1, 3, 2, 1);   // g·gx = x
  set(2, 0, 2, 1);
  set(2, 1, 3, -1);  // x·g = -gx
  set(3, 0, 3, 1);
  set(3, 1, 2, -1);  // gx·g = -x
  h.alg.mult = {mult};
  Mat unit(4, 1);
  unit.at(0, 0) = 1;
  h.alg.unit = {unit};
  Mat delta(16, 4);
  delta.at(0 * 4 + 0, 0) = 1;   // 1 ↦ 1⊗1
  delta.at(1 * 4 + 1, 1) = 1;   // g ↦ g⊗g
  delta.at(2 * 4 + 0, 2) = 1;   // x ↦ x⊗1 + g⊗x
  delta.at(1 * 4 + 2, 2) = 1;
  delta.at(3 * 4 + 1, 3) = 1;   // gx ↦ gx⊗g + 1⊗gx
  delta.at(0 * 4 + 3, 3) = 1;
  h.comult = {delta};
  h.counit = Mat(1, 4);
  h.counit.at(0, 0) = 1;
  h.counit.at(0, 1) = 1;
  Mat s(4, 4);
  s.at(0, 0) = 1;
  s.at(1, 1) = 1;
  s.at(3, 2) = -1;  // S(x) = -gx
  s.at(2, 3) = 1;   // S(gx) = x
  h.antipode = {s};
  h.labels = {{"1", "g", "x", "gx"}};
  return h;
}

// A zero module in every degree over the given structures.
inline PoissonHopfModule zero_module(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h) {
  const GroupTable& g = h.group;
  PoissonHopfModule m;
  m.dims.assign(g.order, 0);
  for (int d = 0; d < g.order; ++d) {
    m.act.push_back(Mat(0, 0));
    m.lie.push_back(Mat(0, 0));
  }
  m.coaction.rho.assign(static_cast<size_t>(g.order) * g.order, Mat(0, 0));
  return m;
}

}  // namespace phm::testsupport
