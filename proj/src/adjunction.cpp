#include "phm/adjunction.hpp"

namespace phm {

namespace {

Mat restrict_or_throw(const Mat& images, const Subspace& target, const std::string& what) {
  for (int j = 0; j < images.cols(); ++j) {
    if (!target.contains(images.col(j))) {
      throw Error(what + ": column " + std::to_string(j) + " leaves the target subspace");
    }
  }
  return target.coordinate_map() * images;
}

std::optional<Mat> restrict_maybe(const Mat& images, const Subspace& target) {
  for (int j = 0; j < images.cols(); ++j) {
    if (!target.contains(images.col(j))) return std::nullopt;
  }
  return target.coordinate_map() * images;
}

}  // namespace

TrivialityCheck extract_transfers(const TrivialComoduleModule& n, const HopfGCoalgebra& h) {
  TrivialityCheck out;
  const GroupTable& g = h.group;
  out.trivial = true;
  out.transfer.assign(static_cast<size_t>(g.order) * g.order, Mat());
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const int dh = h.dim(be);
      const Mat& unit = h.alg.unit[be];
      int k = -1;
      for (int i = 0; i < dh; ++i) {
        if (sgn(unit.at(i, 0)) != 0) {
          k = i;
          break;
        }
      }
      Mat t(n.dims[al], n.dims[ab]);
      std::optional<std::string> w;
      if (k >= 0) {
        Mat xi(1, dh);
        xi.at(0, k) = Scalar(1) / unit.at(k, 0);
        t = kron(Mat::identity(n.dims[al]), xi) * n.coaction.at(g, al, be);
        const Mat back = kron(Mat::identity(n.dims[al]), unit) * t;
        w = map_mismatch(n.coaction.at(g, al, be), back,
                         {{n.dims[ab], ab, n.labels.empty() ? nullptr : &n.labels}});
        if (w) *w = "coaction is not of the form n_a⊗1_b: " + *w;
      } else if (!n.coaction.at(g, al, be).is_zero()) {
        w = "unit of H is zero at this degree but the coaction is not";
      }
      if (w) out.trivial = false;
      out.report.add("trivial_comodule.form", {al, be}, w);
      out.transfer[g.pair(al, be)] = std::move(t);
    }
  }
  return out;
}

GradedSubspaceFamily compute_base(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h) {
  return acoinvariants(regular_module(a), a, h);
}

TrivialComoduleModule base_module(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h,
                                  const GradedSubspaceFamily& base) {
  const GroupTable& g = h.group;
  TrivialComoduleModule n;
  for (int al = 0; al < g.order; ++al) {
    n.dims.push_back(base[al].dim());
    n.act.push_back(restrict_or_throw(
        a.alg.mult[al] * kron(base[al].inclusion(), base[al].inclusion()), base[al],
        "base multiplication"));
  }
  const auto restricted = restrict_coaction(a.coaction, a.alg.dims, base, h);
  if (!restricted) throw Error("base is not a subcomodule of A");
  n.coaction = *restricted;
  return n;
}

TrivialComoduleModule direct_sum(const TrivialComoduleModule& x, const TrivialComoduleModule& y,
                                 const GradedSubspaceFamily& base, const HopfGCoalgebra& h) {
  const GroupTable& g = h.group;
  TrivialComoduleModule n;
  for (int al = 0; al < g.order; ++al) {
    const int dx = x.dims[al], dy = y.dims[al], db = base[al].dim();
    n.dims.push_back(dx + dy);
    Mat act(dx + dy, db * (dx + dy));
    for (int b = 0; b < db; ++b) {
      for (int r = 0; r < dx; ++r)
        for (int c = 0; c < dx; ++c) act.at(r, b * (dx + dy) + c) = x.act[al].at(r, b * dx + c);
      for (int r = 0; r < dy; ++r)
        for (int c = 0; c < dy; ++c)
          act.at(dx + r, b * (dx + dy) + dx + c) = y.act[al].at(r, b * dy + c);
    }
    n.act.push_back(std::move(act));
  }
  n.coaction.rho.assign(static_cast<size_t>(g.order) * g.order, Mat());
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const int dh = h.dim(be);
      const Mat& rx = x.coaction.at(g, al, be);
      const Mat& ry = y.coaction.at(g, al, be);
      Mat rho((x.dims[al] + y.dims[al]) * dh, x.dims[ab] + y.dims[ab]);
      for (int r = 0; r < rx.rows(); ++r)
        for (int c = 0; c < rx.cols(); ++c) rho.at(r, c) = rx.at(r, c);
      for (int r = 0; r < ry.rows(); ++r)
        for (int c = 0; c < ry.cols(); ++c) rho.at(x.dims[al] * dh + r, x.dims[ab] + c) = ry.at(r, c);
      n.coaction.rho[g.pair(al, be)] = std::move(rho);
    }
  }
  return n;
}

AcoinvariantModule acoinvariant_module(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                       const HopfGCoalgebra& h, const GradedSubspaceFamily& base) {
  const GroupTable& g = h.group;
  AcoinvariantModule out;
  out.spaces = acoinvariants(m, a, h);
  for (int al = 0; al < g.order; ++al) {
    out.mod.dims.push_back(out.spaces[al].dim());
    out.mod.act.push_back(restrict_or_throw(
        m.act[al] * kron(base[al].inclusion(), out.spaces[al].inclusion()), out.spaces[al],
        "base action on coinvariants"));
  }
  const auto restricted = restrict_coaction(m.coaction, m.dims, out.spaces, h);
  if (!restricted) throw Error("M^{AcoH} is not a subcomodule of M");
  out.mod.coaction = *restricted;
  const TrivialityCheck tc = extract_transfers(out.mod, h);
  out.report.merge(tc.report);
  out.transfer = tc.transfer;
  return out;
}

TrivialInduction induce_from_trivial(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h,
                                     const GradedSubspaceFamily& base,
                                     const TrivialComoduleModule& n) {
  TrivialInduction out;
  const TrivialityCheck tc = extract_transfers(n, h);
  out.report.merge(tc.report);
  out.transfer = tc.transfer;
  if (!tc.trivial) {
    out.ok = false;
    return out;
  }
  BalancedTensorInput input;
  input.base = base;
  input.w_dims = n.dims;
  input.w_action = n.act;
  input.w_transfer = tc.transfer;
  out.tensor = balanced_tensor(a, h, input);
  out.report.merge(out.tensor.report);
  if (!out.tensor.well_defined) {
    out.ok = false;
    return out;
  }
  out.report.merge_as("induced", check_poisson_hopf_module(out.tensor.module, a, h));
  out.ok = out.report.all_pass();
  return out;
}

MorphismSpace trivial_hom_space(const TrivialComoduleModule& n, const std::vector<int>& sub_dims,
                                const std::vector<Mat>& sub_act,
                                const std::vector<Mat>& n_transfer,
                                const std::vector<Mat>& sub_transfer, const GroupTable& g) {
  MorphismSpace out;
  out.dom_dims = n.dims;
  out.cod_dims = sub_dims;
  std::vector<int> off(g.order);
  int total = 0;
  for (int d = 0; d < g.order; ++d) {
    off[d] = total;
    total += n.dims[d] * sub_dims[d];
  }
  Mat stacked(0, total);
  // B-linearity per degree.
  for (int d = 0; d < g.order; ++d) {
    const int db = n.act[d].cols() / std::max(1, n.dims[d]);
    for (int b = 0; b < db; ++b) {
      Mat eb(db, 1);
      eb.at(b, 0) = 1;
      const Mat ln = n.act[d] * kron(eb, Mat::identity(n.dims[d]));
      const Mat ls = sub_act[d] * kron(eb, Mat::identity(sub_dims[d]));
      const Mat block = kron(Mat::identity(sub_dims[d]), ln.transposed()) -
                        kron(ls, Mat::identity(n.dims[d]));
      Mat wide(block.rows(), total);
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c)
          if (sgn(block.at(r, c)) != 0) wide.at(r, off[d] + c) = block.at(r, c);
      stacked = stacked.vstack(wide);
    }
  }
  // Transfer compatibility across degrees: f_a∘t^N = t^Sub∘f_{ab}.
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const int rows = sub_dims[al] * n.dims[ab];
      Mat wide(rows, total);
      // f_a ∘ t^N: unknowns of degree a.
      const Mat& tn = n_transfer[g.pair(al, be)];
      for (int r = 0; r < sub_dims[al]; ++r)
        for (int k = 0; k < n.dims[al]; ++k)
          for (int c = 0; c < n.dims[ab]; ++c)
            if (sgn(tn.at(k, c)) != 0)
              wide.at(r * n.dims[ab] + c, off[al] + r * n.dims[al] + k) += tn.at(k, c);
      // -t^Sub ∘ f_{ab}: unknowns of degree ab.
      const Mat& ts = sub_transfer[g.pair(al, be)];
      for (int r = 0; r < sub_dims[al]; ++r)
        for (int s = 0; s < sub_dims[ab]; ++s) {
          if (sgn(ts.at(r, s)) == 0) continue;
          for (int c = 0; c < n.dims[ab]; ++c)
            wide.at(r * n.dims[ab] + c, off[ab] + s * n.dims[ab] + c) -= ts.at(r, s);
        }
      stacked = stacked.vstack(wide);
    }
  }
  out.flat = stacked.rows() == 0 ? Subspace::full(total) : kernel(stacked);
  return out;
}

Report check_adjunction(const PoissonHopfModule& m, const TrivialComoduleModule& n,
                        const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h) {
  Report rep;
  const GroupTable& g = h.group;
  const GradedSubspaceFamily base = compute_base(a, h);

  // A⊗_B N with its certified structure.
  const TrivialInduction ind = induce_from_trivial(a, h, base, n);
  rep.merge_as("induced", ind.report);
  if (!ind.ok) return rep;
  const PoissonHopfModule& tn = ind.tensor.module;

  // M^{AcoH} with its B-module and trivial comodule structure.
  const AcoinvariantModule subm = acoinvariant_module(m, a, h, base);
  rep.merge_as("coinvariants", subm.report);

  const MorphismSpace hom1 = hom_space(tn, m, a, h, kHomALinear | kHomLieLinear | kHomColinear);
  const MorphismSpace hom2 =
      trivial_hom_space(n, subm.mod.dims, subm.mod.act, ind.transfer, subm.transfer, g);

  // u_a: N_a -> (A⊗_B N)_a, n ↦ 1⊗n.
  std::vector<Mat> u(g.order);
  for (int al = 0; al < g.order; ++al) {
    u[al] = ind.tensor.quot[al].projector * kron(a.alg.unit[al], Mat::identity(n.dims[al]));
  }

  // psi: evaluate at 1⊗n and land in M^{AcoH}.
  bool maps_ok = true;
  Mat psi(hom2.dim(), hom1.dim());
  for (int k = 0; k < hom1.dim(); ++k) {
    const auto f = hom1.family(k);
    std::vector<Mat> img(g.order);
    bool lands = true;
    for (int al = 0; al < g.order && lands; ++al) {
      const auto r = restrict_maybe(f[al] * u[al], subm.spaces[al]);
      if (!r) {
        lands = false;
      } else {
        img[al] = *r;
      }
    }
    if (!lands) {
      rep.add_fail("adjunction.psi_lands", {k}, "psi(f) leaves M^{AcoH}");
      maps_ok = false;
      continue;
    }
    rep.add_pass("adjunction.psi_lands", {k});
    const auto coords = hom2.coords_of(img);
    if (!coords) {
      rep.add_fail("adjunction.psi_in_hom", {k}, "psi(f) is not a B-linear trivial-comodule map");
      maps_ok = false;
      continue;
    }
    for (int i = 0; i < hom2.dim(); ++i) psi.at(i, k) = coords->at(i, 0);
  }

  // psi': a⊗n ↦ a·g(n) through the quotient.
  Mat psi_prime(hom1.dim(), hom2.dim());
  for (int k = 0; k < hom2.dim(); ++k) {
    const auto gmaps = hom2.family(k);
    std::vector<Mat> f(g.order);
    bool ok = true;
    for (int al = 0; al < g.order; ++al) {
      const Mat raw = m.act[al] * kron(Mat::identity(a.dim(al)),
                                       subm.spaces[al].inclusion() * gmaps[al]);
      const Mat on_rel =
          raw * kernel(ind.tensor.quot[al].projector).inclusion();
      if (!on_rel.is_zero()) {
        rep.add_fail("adjunction.psi_prime_well_defined", {k, al},
                     "a·g(n) does not kill the balancing relations");
        ok = false;
        break;
      }
      f[al] = raw * ind.tensor.quot[al].section;
    }
    if (!ok) {
      maps_ok = false;
      continue;
    }
    const auto coords = hom1.coords_of(f);
    if (!coords) {
      rep.add_fail("adjunction.psi_prime_in_hom", {k}, "psi'(g) is not a module morphism");
      maps_ok = false;
      continue;
    }
    rep.add_pass("adjunction.psi_prime_well_defined", {k});
    for (int i = 0; i < hom1.dim(); ++i) psi_prime.at(i, k) = coords->at(i, 0);
  }

  if (maps_ok) {
    rep.add("adjunction.psi_inverse_left", {},
            (psi * psi_prime).is_identity()
                ? std::optional<std::string>{}
                : std::optional<std::string>{"psi∘psi' = " + (psi * psi_prime).to_string()});
    rep.add("adjunction.psi_inverse_right", {},
            (psi_prime * psi).is_identity()
                ? std::optional<std::string>{}
                : std::optional<std::string>{"psi'∘psi = " + (psi_prime * psi).to_string()});
  }

  // Unit: n ↦ 1⊗n into (A⊗_B N)^{AcoH}, a morphism of B-modules and trivial
  // comodules.
  const AcoinvariantModule subtn = acoinvariant_module(tn, a, h, base);
  rep.merge_as("unit_target", subtn.report);
  std::vector<Mat> unit_maps(g.order);
  bool unit_ok = true;
  for (int al = 0; al < g.order; ++al) {
    const auto r = restrict_maybe(u[al], subtn.spaces[al]);
    if (!r) {
      unit_ok = false;
      rep.add_fail("adjunction.unit_lands", {al}, "1⊗n is not in (A⊗_B N)^{AcoH}");
      continue;
    }
    unit_maps[al] = *r;
    rep.add_pass("adjunction.unit_lands", {al});
  }
  if (unit_ok) {
    for (int al = 0; al < g.order; ++al) {
      const int db = base[al].dim();
      rep.add("adjunction.unit_linear", {al},
              map_mismatch(unit_maps[al] * n.act[al],
                           subtn.mod.act[al] * kron(Mat::identity(db), unit_maps[al]),
                           {{db, al, nullptr}, {n.dims[al], al, nullptr}}));
    }
    for (int al = 0; al < g.order; ++al) {
      for (int be = 0; be < g.order; ++be) {
        const int ab = g.op(al, be);
        rep.add("adjunction.unit_colinear", {al, be},
                map_mismatch(unit_maps[al] * ind.transfer[g.pair(al, be)],
                             subtn.transfer[g.pair(al, be)] * unit_maps[ab],
                             {{n.dims[ab], ab, nullptr}}));
      }
    }
  }

  // Counit: the multiplication map A⊗_B M^{AcoH} -> M, a module morphism.
  const BalancedTensor tm = balanced_tensor(a, h, acoinvariant_tensor_input(m, a, h));
  rep.merge_as("counit_domain", tm.report);
  std::vector<Mat> counit(g.order);
  for (int al = 0; al < g.order; ++al) {
    const Mat raw = m.act[al] * kron(Mat::identity(a.dim(al)), subm.spaces[al].inclusion());
    const Mat on_rel = raw * kernel(tm.quot[al].projector).inclusion();
    rep.add("adjunction.counit_well_defined", {al},
            on_rel.is_zero() ? std::optional<std::string>{}
                             : std::optional<std::string>{
                                   "multiplication does not kill the balancing relations"});
    counit[al] = raw * tm.quot[al].section;
  }
  rep.merge(check_module_morphism(counit, tm.module, m, a, h, "adjunction.counit"));

  // Triangle on the tensor side: δ_{A⊗N} ∘ (A⊗_B unit) = id.
  if (unit_ok) {
    BalancedTensorInput in2;
    in2.base = base;
    in2.w_dims = subtn.mod.dims;
    in2.w_action = subtn.mod.act;
    in2.w_transfer = subtn.transfer;
    const BalancedTensor t2 = balanced_tensor(a, h, in2);
    rep.merge_as("triangle_domain", t2.report);
    for (int al = 0; al < g.order; ++al) {
      const Mat raw_f2 = kron(Mat::identity(a.dim(al)), unit_maps[al]);
      const Mat on_rel = t2.quot[al].projector * raw_f2 *
                         kernel(ind.tensor.quot[al].projector).inclusion();
      rep.add("adjunction.unit_induced_well_defined", {al},
              on_rel.is_zero() ? std::optional<std::string>{}
                               : std::optional<std::string>{
                                     "A⊗unit does not preserve the balancing relations"});
      const Mat f2 = t2.quot[al].projector * raw_f2 * ind.tensor.quot[al].section;
      const Mat delta_raw =
          tn.act[al] * kron(Mat::identity(a.dim(al)), subtn.spaces[al].inclusion());
      const Mat delta_on_rel = delta_raw * kernel(t2.quot[al].projector).inclusion();
      rep.add("adjunction.triangle_counit_well_defined", {al},
              delta_on_rel.is_zero() ? std::optional<std::string>{}
                                     : std::optional<std::string>{
                                           "multiplication does not kill the balancing relations"});
      const Mat delta = delta_raw * t2.quot[al].section;
      rep.add("adjunction.triangle_tensor", {al},
              map_mismatch(delta * f2, Mat::identity(tn.dims[al]),
                           {{tn.dims[al], al, nullptr}}));
    }
  }

  // Triangle on the coinvariant side: (δ_M)^{AcoH} ∘ unit_{M^{AcoH}} = id.
  {
    const AcoinvariantModule subtm = acoinvariant_module(tm.module, a, h, base);
    rep.merge_as("triangle_coinv", subtm.report);
    for (int al = 0; al < g.order; ++al) {
      const Mat u2 = tm.quot[al].projector *
                     kron(a.alg.unit[al], Mat::identity(subm.mod.dims[al]));
      const auto eps = restrict_maybe(u2, subtm.spaces[al]);
      if (!eps) {
        rep.add_fail("adjunction.triangle_coinvariants", {al},
                     "1⊗m is not in (A⊗_B M^{AcoH})^{AcoH}");
        continue;
      }
      const auto fdelta = restrict_maybe(counit[al] * subtm.spaces[al].inclusion(),
                                         subm.spaces[al]);
      if (!fdelta) {
        rep.add_fail("adjunction.triangle_coinvariants", {al},
                     "restricted counit leaves M^{AcoH}");
        continue;
      }
      rep.add("adjunction.triangle_coinvariants", {al},
              map_mismatch(*fdelta * *eps, Mat::identity(subm.mod.dims[al]),
                           {{subm.mod.dims[al], al, nullptr}}));
    }
  }
  return rep;
}

}  // namespace phm
