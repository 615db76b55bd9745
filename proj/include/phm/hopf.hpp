#pragma once

#include "phm/algebra.hpp"
#include "phm/group.hpp"

namespace phm {

struct SingularAntipodeError : Error {
  int degree;
  explicit SingularAntipodeError(int degree)
      : Error("antipode is singular at degree " + std::to_string(degree)), degree(degree) {}
};

// Hopf G-coalgebra: a family of algebras H_a with comultiplications
// Δ_{a,b}: H_{ab} -> H_a⊗H_b, a counit on H_e and antipodes S_a: H_a -> H_{a^-1}.
// The antipode axiom is checked in the form
//   m_a(S_{a^-1}⊗id)Δ_{a^-1,a} = ε(·)1_a = m_a(id⊗S_{a^-1})Δ_{a,a^-1}
// with both sides maps H_e -> H_a.
struct HopfGCoalgebra {
  GroupTable group;
  AlgebraFamily alg;
  std::vector<Mat> comult;        // index group.pair(a,b): (d_a*d_b) x d_{ab}
  Mat counit;                     // 1 x d_e
  std::vector<Mat> antipode;      // d_{a^-1} x d_a
  std::vector<Mat> antipode_inv;  // inverse of antipode[a]: d_a x d_{a^-1}; may be empty
  Labels labels;

  int dim(int a) const { return alg.dims[a]; }
  const Mat& delta(int a, int b) const { return comult[group.pair(a, b)]; }
};

void check_hopf_shapes(const HopfGCoalgebra& h);  // throws ShapeError

Report check_g_coalgebra(const HopfGCoalgebra& h);
Report check_hopf_g_coalgebra(const HopfGCoalgebra& h);

// All antipode inverses; throws SingularAntipodeError naming the first
// degree with a singular antipode.
std::vector<Mat> invert_antipode(const HopfGCoalgebra& h);
// Single inverse map for S_a, taken from the cached field when populated.
Mat antipode_inverse(const HopfGCoalgebra& h, int a);
void ensure_antipode_inverses(HopfGCoalgebra& h);

bool hopf_commutative(const HopfGCoalgebra& h);

// Group algebra k[C_n] as a Hopf G-coalgebra over the trivial group.
HopfGCoalgebra build_group_algebra(int n);

// Constant family H_a = K for every degree of g, with the comultiplication,
// counit and antipode of the single-degree Hopf algebra K.
HopfGCoalgebra build_trivial_hopf_g(const HopfGCoalgebra& k_hopf, const GroupTable& g);

}  // namespace phm
