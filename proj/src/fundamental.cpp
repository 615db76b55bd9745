#include "phm/fundamental.hpp"

namespace phm {

namespace {

// Membership-checked restriction: expresses each column of images in the
// coordinates of the target subspace.
Mat restrict_columns(const Mat& images, const Subspace& target, const std::string& what) {
  for (int j = 0; j < images.cols(); ++j) {
    if (!target.contains(images.col(j))) {
      throw Error(what + ": column " + std::to_string(j) + " leaves the target subspace");
    }
  }
  return target.coordinate_map() * images;
}

}  // namespace

Mat coinvariant_projection(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                           const HopfGCoalgebra& h, const ColinearUnitMap& phi, int degree) {
  const GroupTable& g = h.group;
  const int al = degree;
  const int dm = m.dims[al], da = a.dim(al);
  const Mat s_inv = antipode_inverse(h, al);  // H_{a^-1} -> H_a
  return m.act[al] * flip(dm, da) * kron(Mat::identity(dm), phi.maps[al] * s_inv) *
         m.coaction.at(g, al, g.inv(al));
}

Report check_projection_image(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                              const HopfGCoalgebra& h, const ColinearUnitMap& phi) {
  Report rep;
  const GroupTable& g = h.group;
  const CoinvariantFamily coh = coinvariants(m.coaction, m.dims, h);
  Mat family(coh.total_dim, m.dims[g.identity]);
  for (int al = 0; al < g.order; ++al) {
    const Mat p = coinvariant_projection(m, a, h, phi, al);
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c) family.at(coh.offsets[al] + r, c) = p.at(r, c);
  }
  const Subspace span = Subspace::span_cols(family);
  rep.add("projector.image_in_coinvariants", {},
          coh.family_space.contains(span)
              ? std::optional<std::string>{}
              : std::optional<std::string>{"projection family leaves the coinvariant space"});
  rep.add("projector.coinvariants_in_image", {},
          span.contains(coh.family_space)
              ? std::optional<std::string>{}
              : std::optional<std::string>{"coinvariant family not reached by the projection"});
  return rep;
}

InducedLieAction induced_lie_action(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                    const HopfGCoalgebra& h, const ColinearUnitMap& phi) {
  InducedLieAction out;
  const GroupTable& g = h.group;
  const int e = g.identity;
  const int dae = a.dim(e), dme = m.dims[e];
  const Labels* alab = a.labels.empty() ? nullptr : &a.labels;

  std::vector<Mat> p(g.order);
  for (int al = 0; al < g.order; ++al) p[al] = coinvariant_projection(m, a, h, phi, al);

  out.well_defined = true;
  for (int al = 0; al < g.order; ++al) {
    const Subspace ker = kernel(p[al]);
    for (int i = 0; i < dae; ++i) {
      Mat ei(dae, 1);
      ei.at(i, 0) = 1;
      const Mat l = m.lie[e] * kron(ei, Mat::identity(dme));
      const Mat residual = p[al] * l * ker.inclusion();
      std::optional<std::string> w;
      if (!residual.is_zero()) {
        w = "kernel containment fails for " + basis_name(alab, e, i) +
            ": p(a⋄·) does not vanish on ker(p)";
        out.well_defined = false;
      }
      out.report.add("induced_lie.well_defined", {al, i}, w);
    }
  }
  if (!out.well_defined) return out;

  out.trivial = true;
  for (int al = 0; al < g.order; ++al) {
    out.coh.push_back(image(p[al]));
    const Subspace& w = out.coh.back();
    const auto x = solve(p[al], w.inclusion());
    if (!x) throw Error("projection section missing");  // image is onto by construction
    std::vector<Mat> per_basis;
    for (int i = 0; i < dae; ++i) {
      Mat ei(dae, 1);
      ei.at(i, 0) = 1;
      const Mat l = m.lie[e] * kron(ei, Mat::identity(dme));
      const Mat act = restrict_columns(p[al] * l * (*x), w, "induced Lie action");
      if (!act.is_zero()) out.trivial = false;
      per_basis.push_back(act);
    }
    out.action.push_back(std::move(per_basis));
  }
  return out;
}

Report check_projection_identities(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                   const HopfGCoalgebra& h, const ColinearUnitMap& phi) {
  Report rep;
  const GroupTable& g = h.group;
  const int e = g.identity;
  const int dae = a.dim(e), dme = m.dims[e];
  const Labels* alab = a.labels.empty() ? nullptr : &a.labels;
  const Labels* mlab = m.labels.empty() ? nullptr : &m.labels;
  const PoissonHopfModule areg = regular_module(a);

  PhiFlags flags;
  check_phi(phi, h, a, &flags);
  const std::string hypothesis_note = (!flags.multiplicative || !flags.central)
                                          ? " (phi is not a central-valued algebra map; the "
                                            "identity is not promised without it)"
                                          : "";

  std::vector<Mat> pm(g.order), pa(g.order);
  for (int al = 0; al < g.order; ++al) {
    pm[al] = coinvariant_projection(m, a, h, phi, al);
    pa[al] = coinvariant_projection(areg, a, h, phi, al);
  }

  for (int al = 0; al < g.order; ++al) {
    // p(a·m) = p(a)·p(m)
    rep.add("projector.action_compatibility", {al},
            map_mismatch(pm[al] * m.act[e], m.act[al] * kron(pa[al], pm[al]),
                         {{dae, e, alab}, {dme, e, mlab}}));
    // p(a⋄p_e(m)) = p(a⋄m)
    rep.add("projector.lie_stability", {al},
            map_mismatch(pm[al] * m.lie[e] * kron(Mat::identity(dae), pm[e]),
                         pm[al] * m.lie[e], {{dae, e, alab}, {dme, e, mlab}}));
  }

  const InducedLieAction ila = induced_lie_action(m, a, h, phi);
  rep.merge(ila.report);
  if (ila.well_defined) {
    for (int al = 0; al < g.order; ++al) {
      // a⋄p(m) = phi(a_{(1)})·(a_{(0)}⋄'p(m)) for a of full degree
      const int da = a.dim(al);
      const Mat lhs = m.lie[al] * kron(Mat::identity(da), pm[al]);
      const Mat x = pm[al] * m.lie[e];  // (u,m) ↦ u⋄'p(m) as a bilinear map
      const Mat rhs = m.act[al] * kron(phi.maps[al], x) *
                      permute3(dae, h.dim(al), dme, {1, 0, 2}) *
                      kron(a.coaction.at(g, e, al), Mat::identity(dme));
      auto w = map_mismatch(lhs, rhs, {{da, al, alab}, {dme, e, mlab}});
      if (w) *w += hypothesis_note;
      rep.add("projector.lie_factorization", {al}, w);
    }

    // {a,c}⋄' = a⋄'∘c⋄' − c⋄'∘a⋄' on the projection image
    for (int al = 0; al < g.order; ++al) {
      std::optional<std::string> w;
      for (int i = 0; i < dae && !w; ++i) {
        for (int j = 0; j < dae && !w; ++j) {
          Mat eij(dae * dae, 1);
          eij.at(i * dae + j, 0) = 1;
          const Mat br = a.bracket[e] * eij;
          Mat lhs(ila.coh[al].dim(), ila.coh[al].dim());
          for (int k = 0; k < dae; ++k) {
            if (sgn(br.at(k, 0)) != 0) lhs = lhs + ila.action[al][k].scaled(br.at(k, 0));
          }
          const Mat rhs =
              ila.action[al][i] * ila.action[al][j] - ila.action[al][j] * ila.action[al][i];
          if (lhs != rhs) {
            w = "witness (" + basis_name(alab, e, i) + "," + basis_name(alab, e, j) + ")";
          }
        }
      }
      rep.add("projector.induced_lie_law", {al}, w);
    }
  }

  // phi(m_{(1)})·p(m_{(0)}) = m
  for (int al = 0; al < g.order; ++al) {
    const int dm = m.dims[al];
    const Mat lhs = m.act[al] * kron(phi.maps[al], pm[al]) * flip(dme, h.dim(al)) *
                    m.coaction.at(g, e, al);
    auto w = map_mismatch(lhs, Mat::identity(dm), {{dm, al, mlab}});
    if (w) *w += hypothesis_note;
    rep.add("projector.reconstruction", {al}, w);
  }

  // The induced action stays inside the coinvariant families:
  // rho(p_{ab}(a⋄m)) = p_a(a⋄m)⊗1_b.
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat lhs = m.coaction.at(g, al, be) * pm[ab] * m.lie[e];
      const Mat rhs = kron(Mat::identity(m.dims[al]), h.alg.unit[be]) * pm[al] * m.lie[e];
      rep.add("projector.induced_lie_colinearity", {al, be},
              map_mismatch(lhs, rhs, {{dae, e, alab}, {dme, e, mlab}}));
    }
  }
  return rep;
}

Retraction coaction_retraction(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                               const HopfGCoalgebra& h, const ColinearUnitMap& phi) {
  Retraction out;
  const GroupTable& g = h.group;
  const int e = g.identity;
  out.mh = tensor_with_hopf(m, a, h, false);

  for (int al = 0; al < g.order; ++al) {
    const int dm = m.dims[al], da = a.dim(al);
    const int ai = g.inv(al);
    const int dme = m.dims[e], dh = h.dim(al), dhi = h.dim(ai);
    const Mat s_inv = antipode_inverse(h, al);  // H_{a^-1} -> H_a
    // On the (e, a) summand: m_e⊗h ↦ phi(h·S^{-1}(m_{(1)}))·m_{(0)}.
    const Mat block = m.act[al] * flip(dm, da) *
                      kron(Mat::identity(dm), phi.maps[al] * h.alg.mult[al] *
                                                  kron(Mat::identity(dh), s_inv)) *
                      permute3(dm, dhi, dh, {0, 2, 1}) *
                      kron(m.coaction.at(g, al, ai), Mat::identity(dh));
    Mat lambda(dm, out.mh.module.dims[al]);
    const int o = out.mh.offsets[al][e];
    for (int r = 0; r < dm; ++r)
      for (int c = 0; c < dme * dh; ++c) lambda.at(r, o + c) = block.at(r, c);
    out.lambda.push_back(std::move(lambda));
  }

  const Labels* mlab = m.labels.empty() ? nullptr : &m.labels;
  for (int al = 0; al < g.order; ++al) {
    // Total coaction M_a -> (M⊗H)_a assembled from all rho_{u, u^-1 a}.
    Mat total(out.mh.module.dims[al], m.dims[al]);
    for (int u = 0; u < g.order; ++u) {
      const Mat& rho = m.coaction.at(g, u, g.op(g.inv(u), al));
      const int o = out.mh.offsets[al][u];
      for (int r = 0; r < rho.rows(); ++r)
        for (int c = 0; c < rho.cols(); ++c)
          if (sgn(rho.at(r, c)) != 0) total.at(o + r, c) = rho.at(r, c);
    }
    out.report.add("retraction.identity", {al},
                   map_mismatch(out.lambda[al] * total, Mat::identity(m.dims[al]),
                                {{m.dims[al], al, mlab}}));
  }
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat lhs = m.coaction.at(g, al, be) * out.lambda[ab];
      const Mat rhs = kron(out.lambda[al], Mat::identity(h.dim(be))) *
                      out.mh.module.coaction.at(g, al, be);
      out.report.add("retraction.colinearity", {al, be},
                     map_mismatch(lhs, rhs, {{out.mh.module.dims[ab], ab, nullptr}}));
    }
  }
  PhiFlags flags;
  check_phi(phi, h, a, &flags);
  if (hopf_commutative(h)) {
    out.lie_route = "H commutative";
  } else if (flags.multiplicative) {
    out.lie_route = "phi algebra map";
  } else {
    out.lie_route = "unverified hypotheses";
  }
  for (int al = 0; al < g.order; ++al) {
    const int da = a.dim(al);
    out.report.add("retraction.lie_linearity", {al},
                   map_mismatch(out.lambda[al] * out.mh.module.lie[al],
                                m.lie[al] * kron(Mat::identity(da), out.lambda[al]),
                                {{da, al, nullptr}, {out.mh.module.dims[al], al, nullptr}}));
  }
  return out;
}

BalancedTensor balanced_tensor(const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h,
                               const BalancedTensorInput& input) {
  BalancedTensor out;
  out.input = input;
  const GroupTable& g = h.group;
  const Labels* alab = a.labels.empty() ? nullptr : &a.labels;

  std::vector<Subspace> rel;
  for (int al = 0; al < g.order; ++al) {
    const int da = a.dim(al), dw = input.w_dims[al], db = input.base[al].dim();
    const int ambient = da * dw;
    Mat rows(da * db * dw, ambient);
    const Mat base_incl = input.base[al].inclusion();
    for (int i = 0; i < da; ++i) {
      Mat ei(da, 1);
      ei.at(i, 0) = 1;
      for (int j = 0; j < db; ++j) {
        const Mat ab = a.alg.mult[al] * kron(ei, base_incl.col(j));
        Mat ejk(db, 1);
        ejk.at(j, 0) = 1;
        for (int k = 0; k < dw; ++k) {
          Mat ek(dw, 1);
          ek.at(k, 0) = 1;
          const Mat bw = input.w_action[al] * kron(ejk, ek);
          const Mat r = kron(ab, ek) - kron(ei, bw);
          for (int c = 0; c < ambient; ++c) rows.at((i * db + j) * dw + k, c) = r.at(c, 0);
        }
      }
    }
    rel.push_back(Subspace::span_rows(ambient, rows));
    out.quot.push_back(quotient(ambient, rel.back()));
  }

  out.well_defined = true;
  out.module.dims.resize(g.order);
  out.module.act.resize(g.order);
  out.module.lie.resize(g.order);
  out.module.coaction.rho.assign(static_cast<size_t>(g.order) * g.order, Mat());
  for (int al = 0; al < g.order; ++al) {
    const int da = a.dim(al), dw = input.w_dims[al];
    out.module.dims[al] = out.quot[al].dim;
    const Mat idw = Mat::identity(dw);
    const Mat rel_incl = rel[al].inclusion();

    auto well_defined_witness = [&](const std::vector<Mat>& per_gen,
                                    const std::string& gen_kind) -> std::optional<std::string> {
      for (size_t i = 0; i < per_gen.size(); ++i) {
        const Mat residual = out.quot[al].projector * per_gen[i] * rel_incl;
        if (!residual.is_zero()) {
          return gen_kind + " by " + basis_name(alab, al, static_cast<int>(i)) +
                 " does not preserve the balancing relations";
        }
      }
      return std::nullopt;
    };

    std::vector<Mat> act_gens, lie_gens;
    for (int i = 0; i < da; ++i) {
      act_gens.push_back(kron(left_mult(a.alg, al, i), idw));
      Mat ei(da, 1);
      ei.at(i, 0) = 1;
      lie_gens.push_back(kron(a.bracket[al] * kron(ei, Mat::identity(da)), idw));
    }
    auto w_act = well_defined_witness(act_gens, "multiplication");
    if (w_act) out.well_defined = false;
    out.report.add("balanced_tensor.action_well_defined", {al}, w_act);
    auto w_lie = well_defined_witness(lie_gens, "bracket");
    if (w_lie) out.well_defined = false;
    out.report.add("balanced_tensor.lie_well_defined", {al}, w_lie);

    out.module.act[al] = out.quot[al].projector * kron(a.alg.mult[al], idw) *
                         kron(Mat::identity(da), out.quot[al].section);
    out.module.lie[al] = out.quot[al].projector * kron(a.bracket[al], idw) *
                         kron(Mat::identity(da), out.quot[al].section);
  }
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat raw = kron(Mat::identity(a.dim(al)), flip(h.dim(be), input.w_dims[al])) *
                      kron(a.coaction.at(g, al, be), input.w_transfer[g.pair(al, be)]);
      const Mat residual =
          kron(out.quot[al].projector, Mat::identity(h.dim(be))) * raw * rel[ab].inclusion();
      std::optional<std::string> w;
      if (!residual.is_zero()) {
        w = "coaction does not preserve the balancing relations";
        out.well_defined = false;
      }
      out.report.add("balanced_tensor.coaction_well_defined", {al, be}, w);
      out.module.coaction.rho[g.pair(al, be)] =
          kron(out.quot[al].projector, Mat::identity(h.dim(be))) * raw * out.quot[ab].section;
    }
  }
  return out;
}

BalancedTensorInput acoinvariant_tensor_input(const PoissonHopfModule& m,
                                              const ComodulePoissonAlgebra& a,
                                              const HopfGCoalgebra& h) {
  const GroupTable& g = h.group;
  const PoissonHopfModule areg = regular_module(a);
  BalancedTensorInput input;
  input.base = acoinvariants(areg, a, h);
  const GradedSubspaceFamily macoh = acoinvariants(m, a, h);
  for (int al = 0; al < g.order; ++al) {
    input.w_dims.push_back(macoh[al].dim());
    input.w_action.push_back(restrict_columns(
        m.act[al] * kron(input.base[al].inclusion(), macoh[al].inclusion()), macoh[al],
        "base action on M^{AcoH}"));
  }
  input.w_transfer.assign(static_cast<size_t>(g.order) * g.order, Mat());
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat t = coinvariant_transfer(m.coaction, m.dims, h, ab, al);
      input.w_transfer[g.pair(al, be)] =
          restrict_columns(t * macoh[ab].inclusion(), macoh[al], "coinvariant transfer");
    }
  }
  return input;
}

IsoCertificate certify_fundamental_iso(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                       const HopfGCoalgebra& h, const ColinearUnitMap& phi) {
  IsoCertificate cert;
  const GroupTable& g = h.group;
  const int e = g.identity;
  const PoissonHopfModule areg = regular_module(a);

  cert.report.merge_as("phi", check_phi(phi, h, a, &cert.phi_flags));

  const InducedLieAction ila_m = induced_lie_action(m, a, h, phi);
  cert.report.merge_as("M", ila_m.report);
  const InducedLieAction ila_a = induced_lie_action(areg, a, h, phi);
  cert.report.merge_as("A", ila_a.report);
  cert.lie_trivial_module = ila_m.well_defined && ila_m.trivial;
  cert.lie_trivial_algebra = ila_a.well_defined && ila_a.trivial;
  cert.hypotheses = cert.phi_flags.colinear && cert.phi_flags.unital && cert.phi_flags.central &&
                    cert.phi_flags.multiplicative && cert.lie_trivial_module &&
                    cert.lie_trivial_algebra;

  const GradedSubspaceFamily macoh = acoinvariants(m, a, h);
  if (ila_m.well_defined && cert.phi_flags.multiplicative && cert.phi_flags.colinear &&
      cert.phi_flags.unital && cert.lie_trivial_module) {
    cert.coinvariants_match = true;
    for (int al = 0; al < g.order; ++al) {
      const bool eq = ila_m.coh[al] == macoh[al];
      if (!eq) cert.coinvariants_match = false;
      cert.report.add("iso.coinvariants_match", {al},
                      eq ? std::optional<std::string>{}
                         : std::optional<std::string>{
                               "M^{coH} has dimension " + std::to_string(ila_m.coh[al].dim()) +
                               " but M^{AcoH} has dimension " + std::to_string(macoh[al].dim())});
    }
  }

  cert.tensor = balanced_tensor(a, h, acoinvariant_tensor_input(m, a, h));
  cert.report.merge_as("tensor", cert.tensor.report);
  if (!cert.tensor.well_defined) return cert;
  cert.report.merge_as("tensor", check_poisson_hopf_module(cert.tensor.module, a, h));

  // Forward map: a⊗m ↦ a·m through the quotient.
  cert.morphism_ok = true;
  std::vector<Mat> raw_forward(g.order);
  for (int al = 0; al < g.order; ++al) {
    raw_forward[al] = m.act[al] * kron(Mat::identity(a.dim(al)), macoh[al].inclusion());
    // Well-definedness: the raw map kills the balancing relations.
    const Mat on_rel = raw_forward[al] * kernel(cert.tensor.quot[al].projector).inclusion();
    std::optional<std::string> w;
    if (!on_rel.is_zero()) {
      w = "multiplication does not kill the balancing relations";
      cert.morphism_ok = false;
    }
    cert.report.add("iso.forward_well_defined", {al}, w);
    cert.forward.push_back(raw_forward[al] * cert.tensor.quot[al].section);
  }
  {
    const Report morphism =
        check_module_morphism(cert.forward, cert.tensor.module, m, a, h, "iso.morphism");
    if (!morphism.all_pass()) cert.morphism_ok = false;
    cert.report.merge(morphism);
  }

  // Inverse: the splitting m ↦ phi(m_{(1,a)}) ⊗ p(m_{(0,e)}) when the
  // projection lands inside M^{AcoH}; otherwise plain inversion.
  bool assemblable = ila_m.well_defined;
  if (assemblable) {
    for (int al = 0; al < g.order && assemblable; ++al) {
      if (!macoh[al].contains(ila_m.coh[al])) assemblable = false;
    }
  }
  cert.splitting_formula_used = assemblable;
  bool inverse_built = true;
  for (int al = 0; al < g.order; ++al) {
    const int dme = m.dims[e];
    if (assemblable) {
      const Mat p = coinvariant_projection(m, a, h, phi, al);
      const Mat p_coords = macoh[al].coordinate_map() * p;
      cert.inverse.push_back(cert.tensor.quot[al].projector * kron(phi.maps[al], p_coords) *
                             flip(dme, h.dim(al)) * m.coaction.at(g, e, al));
    } else {
      if (cert.forward[al].rows() != cert.forward[al].cols()) {
        cert.report.add_fail("iso.inverse_exists", {al},
                             "dimension mismatch: tensor has dimension " +
                                 std::to_string(cert.tensor.module.dims[al]) + ", module " +
                                 std::to_string(m.dims[al]));
        inverse_built = false;
        cert.inverse.push_back(Mat());
        continue;
      }
      const auto inv = inverse(cert.forward[al]);
      if (!inv) {
        cert.report.add_fail("iso.inverse_exists", {al}, "the multiplication map is singular");
        inverse_built = false;
        cert.inverse.push_back(Mat());
        continue;
      }
      cert.inverse.push_back(*inv);
    }
  }
  if (!inverse_built) {
    cert.iso_ok = false;
    return cert;
  }
  cert.iso_ok = true;
  for (int al = 0; al < g.order; ++al) {
    auto w1 = map_mismatch(cert.inverse[al] * cert.forward[al],
                           Mat::identity(cert.tensor.module.dims[al]),
                           {{cert.tensor.module.dims[al], al, nullptr}});
    if (w1) cert.iso_ok = false;
    cert.report.add("iso.left_inverse", {al}, w1);
    auto w2 = map_mismatch(cert.forward[al] * cert.inverse[al], Mat::identity(m.dims[al]),
                           {{m.dims[al], al, nullptr}});
    if (w2) cert.iso_ok = false;
    cert.report.add("iso.right_inverse", {al}, w2);
  }
  return cert;
}

}  // namespace phm
