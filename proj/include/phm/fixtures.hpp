#pragma once

#include "phm/bundle.hpp"

namespace phm {

struct UnknownFixtureError : Error {
  explicit UnknownFixtureError(const std::string& name) : Error("unknown fixture '" + name + "'") {}
};

// The named fixture catalog:
//   F1  trivial C2-grading of k[C2], zero bracket, regular coaction, M = A
//   F2  k[x,y]/(x^2,y^2) with {x,y} = xy over the trivial group, M = A
//   F3  F1 with M = A ⊕ A
//   F4  k[C2]⊗k[x,y]/(x^2,y^2) per degree: bracket on the right factor,
//       coaction on the left factor, M = A
std::vector<std::string> fixture_names();
Bundle fixture(const std::string& name);

// Per-α zero bracket for an algebra family.
std::vector<Mat> zero_bracket(const std::vector<int>& dims);

// m ↦ m⊗1 with the identity cross-degree identification; requires equal
// dimensions in every degree.
Coaction trivial_coaction(const std::vector<int>& dims, const HopfGCoalgebra& h);

PoissonHopfModule module_direct_sum(const PoissonHopfModule& x, const PoissonHopfModule& y,
                                    const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h);

}  // namespace phm
