#pragma once

#include "phm/fundamental.hpp"

namespace phm {

struct NonTrivialComoduleError : Error {
  int alpha, beta;
  NonTrivialComoduleError(int alpha, int beta, const std::string& msg)
      : Error(msg), alpha(alpha), beta(beta) {}
};

// Left B-module carrying a trivial H-comodule structure, in its own
// coordinates. The coaction must land in N_a⊗k·1_b; the transfer maps
// N_{ab} -> N_a extracted from it drive the induced coaction of A⊗_B N.
struct TrivialComoduleModule {
  std::vector<int> dims;
  std::vector<Mat> act;  // d_a x (dim B_a * d_a)
  Coaction coaction;
  Labels labels;
};

// Certifies triviality of the comodule structure and extracts the transfer
// maps; `trivial` is false (with the violating pair recorded) otherwise.
struct TrivialityCheck {
  Report report;
  bool trivial = false;
  std::vector<Mat> transfer;
};
TrivialityCheck extract_transfers(const TrivialComoduleModule& n, const HopfGCoalgebra& h);

// B = A^{AcoH} per degree.
GradedSubspaceFamily compute_base(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h);

// B as a module over itself, with the coaction restricted from A.
TrivialComoduleModule base_module(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h,
                                  const GradedSubspaceFamily& base);
TrivialComoduleModule direct_sum(const TrivialComoduleModule& x, const TrivialComoduleModule& y,
                                 const GradedSubspaceFamily& base, const HopfGCoalgebra& h);

// M^{AcoH} as a trivial-comodule B-module, with the subspaces retained.
struct AcoinvariantModule {
  TrivialComoduleModule mod;
  GradedSubspaceFamily spaces;
  std::vector<Mat> transfer;
  Report report;
};
AcoinvariantModule acoinvariant_module(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                       const HopfGCoalgebra& h, const GradedSubspaceFamily& base);

// A⊗_B N for a trivial comodule N, with the induced module structure
// certified. Refused when N is not trivial or a balancing certificate fails.
struct TrivialInduction {
  Report report;
  bool ok = false;
  std::vector<Mat> transfer;
  BalancedTensor tensor;
};
TrivialInduction induce_from_trivial(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h,
                                     const GradedSubspaceFamily& base,
                                     const TrivialComoduleModule& n);

// B-linear trivial-comodule maps N -> Sub, solved exactly.
MorphismSpace trivial_hom_space(const TrivialComoduleModule& n, const std::vector<int>& sub_dims,
                                const std::vector<Mat>& sub_act,
                                const std::vector<Mat>& n_transfer,
                                const std::vector<Mat>& sub_transfer, const GroupTable& g);

// The adjunction between A⊗_B(-) and (-)^{AcoH} on the instance (M, N):
// psi/psi' between the two hom spaces are mutually inverse, the unit and
// counit are morphisms, and both triangle identities hold.
Report check_adjunction(const PoissonHopfModule& m, const TrivialComoduleModule& n,
                        const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h);

}  // namespace phm
