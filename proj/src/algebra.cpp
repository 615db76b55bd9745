#include "phm/algebra.hpp"

namespace phm {

Report check_algebra_family(const AlgebraFamily& alg, const Labels* labels) {
  Report rep;
  for (int a = 0; a < alg.degrees(); ++a) {
    const int d = alg.dims[a];
    const Mat& m = alg.mult[a];
    if (m.rows() != d || m.cols() != d * d || alg.unit[a].rows() != d) {
      throw ShapeError("algebra structure constants have wrong shape at degree " +
                       std::to_string(a));
    }
    const Mat id = Mat::identity(d);
    const std::vector<DomainFactor> triple = {{d, a, labels}, {d, a, labels}, {d, a, labels}};
    rep.add("algebra.associativity", {a},
            map_mismatch(m * kron(m, id), m * kron(id, m), triple));
    const std::vector<DomainFactor> single = {{d, a, labels}};
    rep.add("algebra.unit_left", {a}, map_mismatch(m * kron(alg.unit[a], id), id, single));
    rep.add("algebra.unit_right", {a}, map_mismatch(m * kron(id, alg.unit[a]), id, single));
  }
  return rep;
}

Report check_commutativity(const AlgebraFamily& alg, const Labels* labels) {
  Report rep;
  for (int a = 0; a < alg.degrees(); ++a) {
    const int d = alg.dims[a];
    const std::vector<DomainFactor> pair = {{d, a, labels}, {d, a, labels}};
    rep.add("algebra.commutativity", {a},
            map_mismatch(alg.mult[a], alg.mult[a] * flip(d, d), pair));
  }
  return rep;
}

bool is_commutative(const AlgebraFamily& alg) { return check_commutativity(alg).all_pass(); }

Mat left_mult(const AlgebraFamily& alg, int a, int basis_index) {
  const int d = alg.dims[a];
  Mat e(d, 1);
  e.at(basis_index, 0) = 1;
  return alg.mult[a] * kron(e, Mat::identity(d));
}

}  // namespace phm
