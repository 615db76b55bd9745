#pragma once

#include "phm/poisson.hpp"

namespace phm {

enum HomConstraint : unsigned {
  kHomNone = 0,
  kHomALinear = 1,
  kHomLieLinear = 2,
  kHomColinear = 4,
};

// Exact basis of all families {f_a: dom_a -> cod_a} satisfying the selected
// linearity and colinearity constraints, found as the kernel of the stacked
// constraint system over the flattened coordinate space.
struct MorphismSpace {
  std::vector<int> dom_dims;
  std::vector<int> cod_dims;
  Subspace flat;  // canonical subspace of ⊕_a Hom(dom_a, cod_a)

  int dim() const { return flat.dim(); }
  std::vector<Mat> family(int k) const;
  std::optional<Mat> coords_of(const std::vector<Mat>& maps) const;
  Mat flatten(const std::vector<Mat>& maps) const;
};

MorphismSpace hom_space(const PoissonHopfModule& dom, const PoissonHopfModule& cod,
                        const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h,
                        unsigned constraints);

// Certifies the correspondence between Lie-linear colinear maps M -> N⊗H and
// Lie-linear maps M -> N: picking the (a,e) summand against the counit is a
// bijection, with inverse built from the coaction. Both composites are
// checked on the computed bases.
Report check_cofree_hom_iso(const PoissonHopfModule& m, const PoissonHopfModule& n,
                            const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h);

// A-linearity, Lie-linearity and colinearity of a given family of maps,
// reported under prefix.action / prefix.lie / prefix.colinearity.
Report check_module_morphism(const std::vector<Mat>& f, const PoissonHopfModule& dom,
                             const PoissonHopfModule& cod, const ComodulePoissonAlgebra& a,
                             const HopfGCoalgebra& h, const std::string& prefix);

}  // namespace phm
