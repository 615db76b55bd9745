#include "phm/poisson.hpp"

namespace phm {

PoissonHopfModule regular_module(const ComodulePoissonAlgebra& a) {
  PoissonHopfModule m;
  m.dims = a.alg.dims;
  m.act = a.alg.mult;
  m.lie = a.bracket;
  m.coaction = a.coaction;
  m.labels = a.labels;
  return m;
}

Report check_poisson_family(const ComodulePoissonAlgebra& a) {
  Report rep;
  const Labels* lab = a.labels.empty() ? nullptr : &a.labels;
  rep.merge(check_algebra_family(a.alg, lab));
  rep.merge(check_commutativity(a.alg, lab));
  for (int d = 0; d < a.alg.degrees(); ++d) {
    const int n = a.alg.dims[d];
    const Mat& br = a.bracket[d];
    if (br.rows() != n || br.cols() != n * n) {
      throw ShapeError("bracket has wrong shape at degree " + std::to_string(d));
    }
    const Mat id = Mat::identity(n);
    const std::vector<DomainFactor> two = {{n, d, lab}, {n, d, lab}};
    const std::vector<DomainFactor> three = {{n, d, lab}, {n, d, lab}, {n, d, lab}};

    rep.add("poisson.antisymmetry", {d}, map_mismatch(br, -(br * flip(n, n)), two));

    const Mat inner = br * kron(id, br);  // a⊗b⊗c -> {a,{b,c}}
    const Mat jac =
        inner + inner * permute3(n, n, n, {1, 2, 0}) + inner * permute3(n, n, n, {2, 0, 1});
    rep.add("poisson.jacobi", {d}, map_mismatch(jac, Mat(n, n * n * n), three));

    const Mat& mu = a.alg.mult[d];
    const Mat lhs = br * kron(id, mu);
    const Mat rhs = mu * kron(br, id) + mu * kron(id, br) * kron(flip(n, n), id);
    rep.add("poisson.leibniz", {d}, map_mismatch(lhs, rhs, three));
  }
  return rep;
}

Report check_comodule(const Coaction& c, const std::vector<int>& mdims, const HopfGCoalgebra& h,
                      const Labels* mlabels) {
  const GroupTable& g = h.group;
  if (static_cast<int>(c.rho.size()) != g.order * g.order) {
    throw ShapeError("coaction family incomplete");
  }
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      const Mat& r = c.at(g, a, b);
      if (r.rows() != mdims[a] * h.dim(b) || r.cols() != mdims[g.op(a, b)]) {
        throw ShapeError("coaction (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has shape " + std::to_string(r.rows()) + "x" +
                         std::to_string(r.cols()) + ", expected " +
                         std::to_string(mdims[a] * h.dim(b)) + "x" +
                         std::to_string(mdims[g.op(a, b)]));
      }
    }
  }
  Report rep;
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      for (int cc = 0; cc < g.order; ++cc) {
        const int ab = g.op(a, b), bc = g.op(b, cc), abc = g.op(ab, cc);
        const Mat lhs = kron(c.at(g, a, b), Mat::identity(h.dim(cc))) * c.at(g, ab, cc);
        const Mat rhs = kron(Mat::identity(mdims[a]), h.delta(b, cc)) * c.at(g, a, bc);
        rep.add("comodule.coassociativity", {a, b, cc},
                map_mismatch(lhs, rhs, {{mdims[abc], abc, mlabels}}));
      }
    }
  }
  const int e = g.identity;
  for (int a = 0; a < g.order; ++a) {
    const Mat id = Mat::identity(mdims[a]);
    rep.add("comodule.counit", {a},
            map_mismatch(kron(id, h.counit) * c.at(g, a, e), id, {{mdims[a], a, mlabels}}));
  }
  return rep;
}

namespace {

// Middle-factor swap on (X_a⊗H_b)⊗(Y_a⊗H_b) -> (X_a⊗Y_a)⊗(H_b⊗H_b).
Mat middle_swap(int dx, int dh, int dy) {
  return kron(kron(Mat::identity(dx), flip(dh, dy)), Mat::identity(dh));
}

}  // namespace

Report check_comodule_poisson_algebra(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h) {
  Report rep;
  const GroupTable& g = h.group;
  const Labels* lab = a.labels.empty() ? nullptr : &a.labels;
  rep.merge(check_comodule(a.coaction, a.alg.dims, h, lab));
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const int da = a.dim(al), dh = h.dim(be), dab = a.dim(ab);
      const Mat& rho = a.coaction.at(g, al, be);
      const Mat pair_mult = kron(a.alg.mult[al], h.alg.mult[be]) * middle_swap(da, dh, da);
      const std::vector<DomainFactor> two = {{dab, ab, lab}, {dab, ab, lab}};
      rep.add("comodule_algebra.multiplicative", {al, be},
              map_mismatch(rho * a.alg.mult[ab], pair_mult * kron(rho, rho), two));
      rep.add("comodule_algebra.unital", {al, be},
              map_mismatch(rho * a.alg.unit[ab], kron(a.alg.unit[al], h.alg.unit[be]),
                           {{1, ab, nullptr}}));
      const Mat pair_bracket = kron(a.bracket[al], h.alg.mult[be]) * middle_swap(da, dh, da);
      rep.add("comodule_poisson.bracket_colinearity", {al, be},
              map_mismatch(rho * a.bracket[ab], pair_bracket * kron(rho, rho), two));
    }
  }
  return rep;
}

Report check_poisson_hopf_module(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                 const HopfGCoalgebra& h) {
  Report rep;
  const GroupTable& g = h.group;
  const Labels* alab = a.labels.empty() ? nullptr : &a.labels;
  const Labels* mlab = m.labels.empty() ? nullptr : &m.labels;
  for (int d = 0; d < g.order; ++d) {
    const int da = a.dim(d), dm = m.dims[d];
    if (m.act[d].rows() != dm || m.act[d].cols() != da * dm) {
      throw ShapeError("module action has wrong shape at degree " + std::to_string(d));
    }
    if (m.lie[d].rows() != dm || m.lie[d].cols() != da * dm) {
      throw ShapeError("module Lie action has wrong shape at degree " + std::to_string(d));
    }
    const Mat ida = Mat::identity(da), idm = Mat::identity(dm);
    const Mat& act = m.act[d];
    const Mat& lie = m.lie[d];
    const std::vector<DomainFactor> aam = {{da, d, alab}, {da, d, alab}, {dm, d, mlab}};

    rep.add("module.action_associativity", {d},
            map_mismatch(act * kron(a.alg.mult[d], idm), act * kron(ida, act), aam));
    rep.add("module.action_unit", {d},
            map_mismatch(act * kron(a.alg.unit[d], idm), idm, {{dm, d, mlab}}));

    const Mat swap_am = kron(flip(da, da), idm);
    rep.add("module.lie_module", {d},
            map_mismatch(lie * kron(a.bracket[d], idm),
                         lie * kron(ida, lie) - lie * kron(ida, lie) * swap_am, aam));
    // a⋄(b·m) = {a,b}·m + b·(a⋄m)
    rep.add("module.mixed_leibniz", {d},
            map_mismatch(lie * kron(ida, act),
                         act * kron(a.bracket[d], idm) + act * kron(ida, lie) * swap_am, aam));
    // (ab)⋄m = a·(b⋄m) + b·(a⋄m)
    rep.add("module.lie_of_product", {d},
            map_mismatch(lie * kron(a.alg.mult[d], idm),
                         act * kron(ida, lie) + act * kron(ida, lie) * swap_am, aam));
  }
  rep.merge(check_comodule(m.coaction, m.dims, h, mlab));
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const int da = a.dim(al), dh = h.dim(be), dm = m.dims[al];
      const Mat& rho_m = m.coaction.at(g, al, be);
      const Mat& rho_a = a.coaction.at(g, al, be);
      const std::vector<DomainFactor> am = {{a.dim(ab), ab, alab}, {m.dims[ab], ab, mlab}};
      const Mat act_pair = kron(m.act[al], h.alg.mult[be]) * middle_swap(da, dh, dm);
      rep.add("module.action_colinearity", {al, be},
              map_mismatch(rho_m * m.act[ab], act_pair * kron(rho_a, rho_m), am));
      const Mat lie_pair = kron(m.lie[al], h.alg.mult[be]) * middle_swap(da, dh, dm);
      rep.add("module.lie_colinearity", {al, be},
              map_mismatch(rho_m * m.lie[ab], lie_pair * kron(rho_a, rho_m), am));
    }
  }
  return rep;
}

Subspace poisson_center(const ComodulePoissonAlgebra& a, int degree) {
  const int n = a.alg.dims[degree];
  Mat stacked(0, n);
  for (int i = 0; i < n; ++i) {
    Mat e(n, 1);
    e.at(i, 0) = 1;
    stacked = stacked.vstack(a.bracket[degree] * kron(e, Mat::identity(n)));
  }
  return kernel(stacked);
}

Report check_phi(const ColinearUnitMap& phi, const HopfGCoalgebra& h,
                 const ComodulePoissonAlgebra& a, PhiFlags* flags) {
  Report rep;
  const GroupTable& g = h.group;
  const Labels* hlab = h.labels.empty() ? nullptr : &h.labels;
  if (static_cast<int>(phi.maps.size()) != g.order) throw ShapeError("phi family incomplete");
  for (int d = 0; d < g.order; ++d) {
    if (phi.maps[d].rows() != a.dim(d) || phi.maps[d].cols() != h.dim(d)) {
      throw ShapeError("phi has wrong shape at degree " + std::to_string(d));
    }
  }
  PhiFlags f;
  f.colinear = f.unital = f.central = f.multiplicative = true;
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const auto w = map_mismatch(a.coaction.at(g, al, be) * phi.maps[ab],
                                  kron(phi.maps[al], Mat::identity(h.dim(be))) * h.delta(al, be),
                                  {{h.dim(ab), ab, hlab}});
      if (w) f.colinear = false;
      rep.add("phi.colinearity", {al, be}, w);
    }
  }
  for (int d = 0; d < g.order; ++d) {
    const auto w = map_mismatch(phi.maps[d] * h.alg.unit[d], a.alg.unit[d], {{1, d, nullptr}});
    if (w) f.unital = false;
    rep.add("phi.unit", {d}, w);
  }
  for (int d = 0; d < g.order; ++d) {
    const Subspace center = poisson_center(a, d);
    std::optional<std::string> w;
    for (int j = 0; j < h.dim(d) && !w; ++j) {
      const Mat v = phi.maps[d].col(j);
      if (!center.contains(v)) {
        w = "phi(" + basis_name(hlab, d, j) + ") = " + render_column(v, 0) +
            " is not in the Poisson center";
      }
    }
    if (w) f.central = false;
    rep.add("phi.center", {d}, w);
  }
  // Multiplicativity is a reported flag, not an axiom: some theorem routes
  // need it, phi is not required to satisfy it.
  for (int d = 0; d < g.order; ++d) {
    const int n = h.dim(d);
    if (map_mismatch(phi.maps[d] * h.alg.mult[d],
                     a.alg.mult[d] * kron(phi.maps[d], phi.maps[d]), {{n, d, hlab}, {n, d, hlab}})) {
      f.multiplicative = false;
    }
  }
  if (flags) *flags = f;
  return rep;
}

TensorWithHopf tensor_with_hopf(const PoissonHopfModule& n, const ComodulePoissonAlgebra& a,
                                const HopfGCoalgebra& h, bool with_action) {
  const GroupTable& g = h.group;
  if (with_action && !hopf_commutative(h)) {
    throw CommutativityRequiredError(
        "module action on N⊗H requires every H component to be commutative");
  }
  TensorWithHopf out;
  out.offsets.assign(g.order, std::vector<int>(g.order, 0));
  out.module.dims.assign(g.order, 0);
  for (int al = 0; al < g.order; ++al) {
    int off = 0;
    for (int u = 0; u < g.order; ++u) {
      const int v = g.op(g.inv(u), al);
      out.offsets[al][u] = off;
      off += n.dims[u] * h.dim(v);
    }
    out.module.dims[al] = off;
  }

  // Coaction: on the summand N_u⊗H_{u^-1(ab)}, apply id⊗Δ_{u^-1 a, b}.
  out.module.coaction.rho.assign(static_cast<size_t>(g.order) * g.order, Mat());
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      Mat rho(out.module.dims[al] * h.dim(be), out.module.dims[ab]);
      for (int u = 0; u < g.order; ++u) {
        const int v_src = g.op(g.inv(u), ab);
        const int v_dst = g.op(g.inv(u), al);
        const Mat block = kron(Mat::identity(n.dims[u]), h.delta(v_dst, be));
        const int row0 = out.offsets[al][u] * h.dim(be);
        const int col0 = out.offsets[ab][u];
        for (int r = 0; r < block.rows(); ++r) {
          for (int c = 0; c < block.cols(); ++c) {
            if (sgn(block.at(r, c)) != 0) rho.at(row0 + r, col0 + c) = block.at(r, c);
          }
        }
        (void)v_src;
      }
      out.module.coaction.rho[g.pair(al, be)] = std::move(rho);
    }
  }

  // Lie action (and module action when requested): on A_a⊗N_u⊗H_v apply the
  // coaction of A on the scalar factor, then act summandwise.
  auto build_action = [&](const std::vector<Mat>& per_degree_action) {
    std::vector<Mat> result(g.order);
    for (int al = 0; al < g.order; ++al) {
      const int D = out.module.dims[al];
      const int da = a.dim(al);
      Mat big(D, da * D);
      for (int u = 0; u < g.order; ++u) {
        const int v = g.op(g.inv(u), al);
        const int dn = n.dims[u], dh = h.dim(v);
        if (dn * dh == 0) continue;
        const Mat arrange = kron(kron(Mat::identity(a.dim(u)), flip(h.dim(v), dn)),
                                 Mat::identity(dh));
        const Mat block = kron(per_degree_action[u], h.alg.mult[v]) * arrange *
                          kron(a.coaction.at(g, u, v), Mat::identity(dn * dh));
        const int off = out.offsets[al][u];
        for (int ai = 0; ai < da; ++ai) {
          for (int s = 0; s < dn * dh; ++s) {
            for (int r = 0; r < dn * dh; ++r) {
              const Scalar& val = block.at(r, ai * dn * dh + s);
              if (sgn(val) != 0) big.at(off + r, ai * D + off + s) = val;
            }
          }
        }
      }
      result[al] = std::move(big);
    }
    return result;
  };
  out.module.lie = build_action(n.lie);
  if (with_action) out.module.act = build_action(n.act);
  return out;
}

}  // namespace phm
