#pragma once

#include "phm/hopf.hpp"
#include "phm/subspace.hpp"

namespace phm {

struct CommutativityRequiredError : Error {
  explicit CommutativityRequiredError(const std::string& msg) : Error(msg) {}
};

// Family of coaction maps rho_{a,b}: M_{ab} -> M_a ⊗ H_b, indexed by
// group.pair(a,b).
struct Coaction {
  std::vector<Mat> rho;
  bool present() const { return !rho.empty(); }
  const Mat& at(const GroupTable& g, int a, int b) const { return rho[g.pair(a, b)]; }
};

// Graded commutative Poisson algebra with an H-coaction; the checkers
// certify comodule-algebra laws and bracket colinearity.
struct ComodulePoissonAlgebra {
  GroupTable group;
  AlgebraFamily alg;
  std::vector<Mat> bracket;  // d x d^2 per degree
  Coaction coaction;
  Labels labels;

  int dim(int a) const { return alg.dims[a]; }
};

// Graded module with an A-action, a Lie A-action and an H-coaction. Derived
// structures (tensors with H, balanced tensors) reuse this container; absent
// pieces are empty.
struct PoissonHopfModule {
  std::vector<int> dims;
  std::vector<Mat> act;  // d_m x (d_a * d_m)
  std::vector<Mat> lie;  // d_m x (d_a * d_m)
  Coaction coaction;
  Labels labels;

  bool has_act() const { return !act.empty(); }
  bool has_lie() const { return !lie.empty(); }
};

// A as a module over itself: action = multiplication, Lie action = bracket.
PoissonHopfModule regular_module(const ComodulePoissonAlgebra& a);

// Family phi_a: H_a -> A_a.
struct ColinearUnitMap {
  std::vector<Mat> maps;
};

struct PhiFlags {
  bool colinear = false;
  bool unital = false;
  bool central = false;
  bool multiplicative = false;
};

Report check_poisson_family(const ComodulePoissonAlgebra& a);
Report check_comodule(const Coaction& c, const std::vector<int>& mdims, const HopfGCoalgebra& h,
                      const Labels* mlabels = nullptr);
Report check_comodule_poisson_algebra(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h);
Report check_poisson_hopf_module(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                 const HopfGCoalgebra& h);
Report check_phi(const ColinearUnitMap& phi, const HopfGCoalgebra& h,
                 const ComodulePoissonAlgebra& a, PhiFlags* flags = nullptr);

// Per-degree Poisson center: vectors whose bracket with everything vanishes.
Subspace poisson_center(const ComodulePoissonAlgebra& a, int degree);

// N⊗H with (N⊗H)_a = ⊕_{uv=a} N_u⊗H_v, summands ordered by u. Carries the
// induced coaction and Lie action; the module action is added on request and
// requires every H_a commutative.
struct TensorWithHopf {
  PoissonHopfModule module;
  std::vector<std::vector<int>> offsets;  // offsets[a][u] = start of N_u⊗H_{u^-1 a}
};
TensorWithHopf tensor_with_hopf(const PoissonHopfModule& n, const ComodulePoissonAlgebra& a,
                                const HopfGCoalgebra& h, bool with_action);

}  // namespace phm
