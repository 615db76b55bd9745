#pragma once

#include "phm/report.hpp"

namespace phm {

// Family of finite-dimensional unital algebras, one per group degree, given
// by structure constants. mult[a] maps the tensor square to the algebra in
// the fixed lexicographic basis order (left factor slowest).
struct AlgebraFamily {
  std::vector<int> dims;
  std::vector<Mat> mult;  // d x d^2
  std::vector<Mat> unit;  // d x 1

  int degrees() const { return static_cast<int>(dims.size()); }
};

Report check_algebra_family(const AlgebraFamily& alg, const Labels* labels = nullptr);
Report check_commutativity(const AlgebraFamily& alg, const Labels* labels = nullptr);
bool is_commutative(const AlgebraFamily& alg);

// Left multiplication by the i-th basis vector of degree a.
Mat left_mult(const AlgebraFamily& alg, int a, int basis_index);

}  // namespace phm
