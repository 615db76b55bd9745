#pragma once

#include "phm/poisson.hpp"

namespace phm {

using GradedSubspaceFamily = std::vector<Subspace>;

// Coinvariants of a coaction: families (m_a) in the direct sum of all
// degrees with rho_{a,b}(m_{ab}) = m_a⊗1_b for every pair, together with the
// per-degree projection images.
struct CoinvariantFamily {
  Subspace family_space;  // subspace of ⊕_a M_a
  std::vector<Subspace> per_degree;
  std::vector<int> offsets;  // start of degree a inside the direct sum
  int total_dim = 0;
};

CoinvariantFamily coinvariants(const Coaction& c, const std::vector<int>& mdims,
                               const HopfGCoalgebra& h);

// Per-degree annihilator of the Lie action: {m : a⋄m = 0 for all a}.
GradedSubspaceFamily poisson_annihilator(const PoissonHopfModule& m,
                                         const ComodulePoissonAlgebra& a);

// Per-degree intersection of coinvariants and annihilator.
GradedSubspaceFamily acoinvariants(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                   const HopfGCoalgebra& h);

// Certifies the closure statements: the annihilator is a subcomodule, the
// Poisson center is closed under product/bracket/coaction, the base
// B = A^{AcoH} likewise, and M^{AcoH} is closed under the B-actions.
Report check_substructures(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                           const HopfGCoalgebra& h);

// Transfer matrix M_from -> M_to that maps a coinvariant element to the
// to-degree component of its coinvariant family, computed through the
// coaction and a dual vector of the unit of H_{to^-1·from}. Only meaningful
// on coinvariant inputs.
Mat coinvariant_transfer(const Coaction& c, const std::vector<int>& mdims, const HopfGCoalgebra& h,
                         int from_degree, int to_degree);

// Restriction of a coaction to a subcomodule family, in subspace
// coordinates; nullopt when some rho does not map into sub_a⊗H_b.
std::optional<Coaction> restrict_coaction(const Coaction& c, const std::vector<int>& mdims,
                                          const GradedSubspaceFamily& sub,
                                          const HopfGCoalgebra& h);

// Subspace sub_a ⊗ (all of H_b) inside M_a⊗H_b.
Subspace tensor_with_full(const Subspace& sub, int hdim);

}  // namespace phm
