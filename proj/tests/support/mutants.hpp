#pragma once

// Deliberately broken fixture variants for the mutation tests. Each mutant
// violates exactly one law family; the expected failure sets are frozen in
// the acceptance suite.

#include "phm/fixtures.hpp"

namespace phm::testsupport {

// F1 with S_g(x) := -x. Violates only the antipode axiom at degree g; the
// derived antipode identities still hold for this particular corruption.
inline Bundle mutant_wrong_antipode() {
  Bundle b = fixture("F1");
  b.name = "F1-wrong-antipode";
  b.hopf.antipode[1].at(1, 1) = -1;
  b.hopf.antipode_inv.clear();
  if (b.expected) b.expected.reset();
  return b;
}

// F1 with the A/M coaction at (g,g) redefined on x to x⊗1. Violates only
// comodule coassociativity: the counit laws avoid the mutated pair, the
// comodule-algebra laws and the action colinearity survive because x⊗1
// squares back to 1⊗1.
inline Bundle mutant_comodule_coassoc() {
  Bundle b = fixture("F1");
  b.name = "F1-coassoc";
  const GroupTable& g = b.hopf.group;
  Mat rho(4, 2);
  rho.at(0, 0) = 1;  // 1 ↦ 1⊗1
  rho.at(2, 1) = 1;  // x ↦ x⊗1
  b.algebra->coaction.rho[g.pair(1, 1)] = rho;
  b.module->coaction.rho[g.pair(1, 1)] = rho;
  if (b.expected) b.expected.reset();
  return b;
}

// F2 with {x,y} := 1. Violates the Leibniz law, and with it the two module
// laws that restate it for M = A.
inline Bundle mutant_leibniz_break() {
  Bundle b = fixture("F2");
  b.name = "F2-leibniz";
  Mat br(4, 16);
  br.at(0, 1 * 4 + 2) = 1;
  br.at(0, 2 * 4 + 1) = -1;
  b.algebra->bracket = {br};
  b.module->lie = {br};
  if (b.expected) b.expected.reset();
  return b;
}

// F1 with ε := 0. Violates the counit laws, the counit unit law, the
// antipode axiom (whose right side is ε(·)1) and the comodule counit law.
inline Bundle mutant_zero_counit() {
  Bundle b = fixture("F1");
  b.name = "F1-zero-counit";
  b.hopf.counit = Mat(1, 2);
  if (b.expected) b.expected.reset();
  return b;
}

// F1 with phi(x) := 0. Violates only the colinearity of phi; the unit and
// center laws survive and the algebra-map flag drops.
inline Bundle mutant_noncolinear_phi() {
  Bundle b = fixture("F1");
  b.name = "F1-phi";
  for (auto& m : b.phi->maps) m.at(1, 1) = 0;
  if (b.expected) b.expected.reset();
  return b;
}

}  // namespace phm::testsupport
