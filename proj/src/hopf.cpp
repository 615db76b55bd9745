#include "phm/hopf.hpp"

#include "phm/subspace.hpp"

namespace phm {

void check_hopf_shapes(const HopfGCoalgebra& h) {
  const int n = h.group.order;
  if (h.alg.degrees() != n) throw ShapeError("algebra family degree count mismatch");
  if (static_cast<int>(h.comult.size()) != n * n) throw ShapeError("comultiplication family incomplete");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Mat& d = h.delta(a, b);
      if (d.rows() != h.dim(a) * h.dim(b) || d.cols() != h.dim(h.group.op(a, b))) {
        throw ShapeError("comultiplication (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                         ", expected " + std::to_string(h.dim(a) * h.dim(b)) + "x" +
                         std::to_string(h.dim(h.group.op(a, b))));
      }
    }
  }
  if (h.counit.rows() != 1 || h.counit.cols() != h.dim(h.group.identity)) {
    throw ShapeError("counit has wrong shape");
  }
  if (static_cast<int>(h.antipode.size()) != n) throw ShapeError("antipode family incomplete");
  for (int a = 0; a < n; ++a) {
    if (h.antipode[a].rows() != h.dim(h.group.inv(a)) || h.antipode[a].cols() != h.dim(a)) {
      throw ShapeError("antipode at degree " + std::to_string(a) + " has wrong shape");
    }
  }
}

Report check_g_coalgebra(const HopfGCoalgebra& h) {
  check_hopf_shapes(h);
  Report rep;
  const GroupTable& g = h.group;
  const Labels* lab = h.labels.empty() ? nullptr : &h.labels;
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      for (int c = 0; c < g.order; ++c) {
        const int ab = g.op(a, b), bc = g.op(b, c), abc = g.op(ab, c);
        const Mat lhs = kron(h.delta(a, b), Mat::identity(h.dim(c))) * h.delta(ab, c);
        const Mat rhs = kron(Mat::identity(h.dim(a)), h.delta(b, c)) * h.delta(a, bc);
        rep.add("coalgebra.coassociativity", {a, b, c},
                map_mismatch(lhs, rhs, {{h.dim(abc), abc, lab}}));
      }
    }
  }
  const int e = g.identity;
  for (int a = 0; a < g.order; ++a) {
    const Mat id = Mat::identity(h.dim(a));
    rep.add("coalgebra.counit_right", {a},
            map_mismatch(kron(id, h.counit) * h.delta(a, e), id, {{h.dim(a), a, lab}}));
    rep.add("coalgebra.counit_left", {a},
            map_mismatch(kron(h.counit, id) * h.delta(e, a), id, {{h.dim(a), a, lab}}));
  }
  return rep;
}

Report check_hopf_g_coalgebra(const HopfGCoalgebra& h) {
  check_hopf_shapes(h);
  Report rep;
  const GroupTable& g = h.group;
  const Labels* lab = h.labels.empty() ? nullptr : &h.labels;
  const int e = g.identity;
  const int de = h.dim(e);

  rep.add("hopf.counit_multiplicative", {},
          map_mismatch(h.counit * h.alg.mult[e], kron(h.counit, h.counit),
                       {{de, e, lab}, {de, e, lab}}));
  {
    Mat one(1, 1);
    one.at(0, 0) = 1;
    rep.add("hopf.counit_unital", {},
            map_mismatch(h.counit * h.alg.unit[e], one, {{1, e, nullptr}}));
  }

  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      const int ab = g.op(a, b);
      const int da = h.dim(a), db = h.dim(b), dab = h.dim(ab);
      // Δ(xy) = Δ(x)Δ(y) with componentwise product on H_a⊗H_b.
      const Mat lhs = h.delta(a, b) * h.alg.mult[ab];
      const Mat mid = kron(kron(Mat::identity(da), flip(db, da)), Mat::identity(db));
      const Mat rhs = kron(h.alg.mult[a], h.alg.mult[b]) * mid * kron(h.delta(a, b), h.delta(a, b));
      rep.add("hopf.comult_multiplicative", {a, b},
              map_mismatch(lhs, rhs, {{dab, ab, lab}, {dab, ab, lab}}));
      rep.add("hopf.comult_unital", {a, b},
              map_mismatch(h.delta(a, b) * h.alg.unit[ab], kron(h.alg.unit[a], h.alg.unit[b]),
                           {{1, ab, nullptr}}));
    }
  }

  for (int a = 0; a < g.order; ++a) {
    const int ai = g.inv(a);
    const int da = h.dim(a);
    const Mat eps_unit = h.alg.unit[a] * h.counit;  // d_a x d_e
    const Mat left = h.alg.mult[a] * kron(h.antipode[ai], Mat::identity(da)) * h.delta(ai, a);
    const Mat right = h.alg.mult[a] * kron(Mat::identity(da), h.antipode[ai]) * h.delta(a, ai);
    rep.add("hopf.antipode_left", {a}, map_mismatch(left, eps_unit, {{de, e, lab}}));
    rep.add("hopf.antipode_right", {a}, map_mismatch(right, eps_unit, {{de, e, lab}}));
  }

  // Consequences of the axioms, reported separately as consistency checks.
  for (int a = 0; a < g.order; ++a) {
    const int ai = g.inv(a);
    const int da = h.dim(a);
    const Mat lhs = h.antipode[a] * h.alg.mult[a];
    const Mat rhs = h.alg.mult[ai] * kron(h.antipode[a], h.antipode[a]) * flip(da, da);
    rep.add("hopf.antipode_antimultiplicative", {a},
            map_mismatch(lhs, rhs, {{da, a, lab}, {da, a, lab}}));
  }
  rep.add("hopf.antipode_unit", {},
          map_mismatch(h.antipode[e] * h.alg.unit[e], h.alg.unit[e], {{1, e, nullptr}}));
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      const int ab = g.op(a, b);
      const int ai = g.inv(a), bi = g.inv(b);
      const Mat lhs = h.delta(bi, ai) * h.antipode[ab];
      const Mat rhs = flip(h.dim(ai), h.dim(bi)) * kron(h.antipode[a], h.antipode[b]) * h.delta(a, b);
      rep.add("hopf.antipode_comultiplication", {a, b},
              map_mismatch(lhs, rhs, {{h.dim(ab), ab, lab}}));
    }
  }
  rep.add("hopf.antipode_counit", {},
          map_mismatch(h.counit * h.antipode[e], h.counit, {{de, e, lab}}));

  for (int a = 0; a < g.order; ++a) {
    const bool invertible = h.dim(a) == h.dim(g.inv(a)) && rank(h.antipode[a]) == h.dim(a);
    if (invertible) {
      rep.add_pass("hopf.antipode_invertible", {a});
    } else {
      rep.add_fail("hopf.antipode_invertible", {a},
                   "rank " + std::to_string(rank(h.antipode[a])) + " < " + std::to_string(h.dim(a)));
    }
  }
  return rep;
}

std::vector<Mat> invert_antipode(const HopfGCoalgebra& h) {
  std::vector<Mat> out;
  out.reserve(h.group.order);
  for (int a = 0; a < h.group.order; ++a) {
    auto inv = inverse(h.antipode[a]);
    if (!inv) throw SingularAntipodeError(a);
    out.push_back(*inv);
  }
  return out;
}

Mat antipode_inverse(const HopfGCoalgebra& h, int a) {
  if (!h.antipode_inv.empty()) return h.antipode_inv[a];
  auto inv = inverse(h.antipode[a]);
  if (!inv) throw SingularAntipodeError(a);
  return *inv;
}

void ensure_antipode_inverses(HopfGCoalgebra& h) {
  if (h.antipode_inv.empty()) h.antipode_inv = invert_antipode(h);
}

bool hopf_commutative(const HopfGCoalgebra& h) { return is_commutative(h.alg); }

HopfGCoalgebra build_group_algebra(int n) {
  if (n < 1) throw Error("group algebra dimension must be at least 1");
  HopfGCoalgebra h;
  h.group = GroupTable::cyclic(1);
  h.alg.dims = {n};
  Mat mult(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult.at((i + j) % n, i * n + j) = 1;
  h.alg.mult = {mult};
  Mat unit(n, 1);
  unit.at(0, 0) = 1;
  h.alg.unit = {unit};
  Mat delta(n * n, n);
  for (int i = 0; i < n; ++i) delta.at(i * n + i, i) = 1;
  h.comult = {delta};
  h.counit = Mat(1, n);
  for (int i = 0; i < n; ++i) h.counit.at(0, i) = 1;
  Mat s(n, n);
  for (int i = 0; i < n; ++i) s.at((n - i) % n, i) = 1;
  h.antipode = {s};
  h.antipode_inv = {s.transposed()};  // permutation, inverse = transpose
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)));
  }
  h.labels = {names};
  return h;
}

HopfGCoalgebra build_trivial_hopf_g(const HopfGCoalgebra& k_hopf, const GroupTable& g) {
  if (k_hopf.group.order != 1) throw Error("expected a single-degree Hopf algebra");
  HopfGCoalgebra h;
  h.group = g;
  const int d = k_hopf.dim(0);
  h.alg.dims.assign(g.order, d);
  h.alg.mult.assign(g.order, k_hopf.alg.mult[0]);
  h.alg.unit.assign(g.order, k_hopf.alg.unit[0]);
  h.comult.assign(static_cast<size_t>(g.order) * g.order, k_hopf.comult[0]);
  h.counit = k_hopf.counit;
  h.antipode.assign(g.order, k_hopf.antipode[0]);
  if (!k_hopf.antipode_inv.empty()) h.antipode_inv.assign(g.order, k_hopf.antipode_inv[0]);
  if (!k_hopf.labels.empty()) h.labels.assign(g.order, k_hopf.labels[0]);
  return h;
}

}  // namespace phm
