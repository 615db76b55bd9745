#pragma once

#include "phm/coinvariants.hpp"
#include "phm/hom.hpp"

namespace phm {

// p_a: M_e -> M_a, m ↦ phi_a(S_a^{-1}(m_{(1,a^-1)}))·m_{(0,a)}. Its images
// assemble the coinvariants degreewise.
Mat coinvariant_projection(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                           const HopfGCoalgebra& h, const ColinearUnitMap& phi, int degree);

// The family (p_a(v))_a over a basis of M_e spans exactly the coinvariant
// family space; both inclusions are certified.
Report check_projection_image(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                              const HopfGCoalgebra& h, const ColinearUnitMap& phi);

// Lie action of A_e on the coinvariants, induced through the projection:
// a⋄'p_a(m) = p_a(a⋄m). Refused (well_defined = false) when the kernel
// containment certificate fails.
struct InducedLieAction {
  Report report;
  bool well_defined = false;
  std::vector<Subspace> coh;               // image of p per degree
  std::vector<std::vector<Mat>> action;    // [degree][A_e basis] in coh coordinates
  bool trivial = false;
};
InducedLieAction induced_lie_action(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                    const HopfGCoalgebra& h, const ColinearUnitMap& phi);

// The projection identities: compatibility with the action, stability under
// the Lie action, the factorization through the induced action, the Lie law
// of the induced action, reconstruction, and colinearity of the induced
// action on coinvariant families.
Report check_projection_identities(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                   const HopfGCoalgebra& h, const ColinearUnitMap& phi);

// Retraction of the total coaction M -> M⊗H: certifies λ∘ρ = id, the
// colinearity of λ, and its Lie linearity (which holds when H is commutative
// or phi is multiplicative; the verified route is recorded).
struct Retraction {
  Report report;
  TensorWithHopf mh;
  std::vector<Mat> lambda;  // per degree: (M⊗H)_a -> M_a
  std::string lie_route;
};
Retraction coaction_retraction(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                               const HopfGCoalgebra& h, const ColinearUnitMap& phi);

// Input data for a balanced tensor A⊗_B W: the base subalgebra per degree,
// the W spaces in their own coordinates, the base action on W and the family
// transfer maps W_{ab} -> W_a feeding the induced coaction.
struct BalancedTensorInput {
  GradedSubspaceFamily base;      // B_a as subspaces of A_a
  std::vector<int> w_dims;
  std::vector<Mat> w_action;      // dW x (dimB * dW)
  std::vector<Mat> w_transfer;    // per pair (a,b): W_{ab} -> W_a
};

// Quotient of A_a⊗W_a by the balancing relations (a·b)⊗w - a⊗(b·w),
// with the induced module, Lie and coaction structure. Every induced map
// carries a kernel-containment certificate; failure refuses the structure.
struct BalancedTensor {
  Report report;
  bool well_defined = false;
  BalancedTensorInput input;
  std::vector<Quotient> quot;  // per degree, ambient A_a⊗W_a
  PoissonHopfModule module;
};
BalancedTensor balanced_tensor(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h,
                               const BalancedTensorInput& input);

// Balanced-tensor input for W = M^{AcoH} with the transfer maps of the
// coinvariant family structure.
BalancedTensorInput acoinvariant_tensor_input(const PoissonHopfModule& m,
                                              const ComodulePoissonAlgebra& a,
                                              const HopfGCoalgebra& h);

// Certificate for the fundamental isomorphism A⊗_B M^{AcoH} ≅ M. The
// multiplication map is always certified as a morphism; the inverse is the
// splitting built from phi and the projection when it assembles, otherwise
// plain matrix inversion (recorded in splitting_formula_used).
struct IsoCertificate {
  Report report;
  PhiFlags phi_flags;
  bool lie_trivial_module = false;
  bool lie_trivial_algebra = false;
  bool hypotheses = false;
  bool morphism_ok = false;
  bool iso_ok = false;
  bool coinvariants_match = false;
  bool splitting_formula_used = false;
  std::vector<Mat> forward;  // Φ_a: T_a -> M_a
  std::vector<Mat> inverse;  // Ψ_a: M_a -> T_a
  BalancedTensor tensor;
};
IsoCertificate certify_fundamental_iso(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                       const HopfGCoalgebra& h, const ColinearUnitMap& phi);

}  // namespace phm
