#include "phm/coinvariants.hpp"

namespace phm {

CoinvariantFamily coinvariants(const Coaction& c, const std::vector<int>& mdims,
                               const HopfGCoalgebra& h) {
  const GroupTable& g = h.group;
  CoinvariantFamily out;
  out.offsets.resize(g.order);
  int total = 0;
  for (int d = 0; d < g.order; ++d) {
    out.offsets[d] = total;
    total += mdims[d];
  }
  out.total_dim = total;

  // Stack the constraints rho_{a,b}(m_{ab}) - m_a⊗1_b = 0 over the direct sum.
  Mat constraints(0, total);
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat& rho = c.at(g, al, be);
      const Mat ins = kron(Mat::identity(mdims[al]), h.alg.unit[be]);  // m_a -> m_a⊗1_b
      Mat block(rho.rows(), total);
      for (int r = 0; r < rho.rows(); ++r) {
        for (int j = 0; j < mdims[ab]; ++j) {
          if (sgn(rho.at(r, j)) != 0) block.at(r, out.offsets[ab] + j) = rho.at(r, j);
        }
        for (int j = 0; j < mdims[al]; ++j) {
          if (sgn(ins.at(r, j)) != 0) block.at(r, out.offsets[al] + j) -= ins.at(r, j);
        }
      }
      constraints = constraints.vstack(block);
    }
  }
  out.family_space = kernel(constraints);

  for (int d = 0; d < g.order; ++d) {
    Mat slice(out.family_space.dim(), mdims[d]);
    for (int i = 0; i < out.family_space.dim(); ++i) {
      for (int j = 0; j < mdims[d]; ++j) {
        slice.at(i, j) = out.family_space.basis.at(i, out.offsets[d] + j);
      }
    }
    out.per_degree.push_back(Subspace::span_rows(mdims[d], slice));
  }
  return out;
}

GradedSubspaceFamily poisson_annihilator(const PoissonHopfModule& m,
                                         const ComodulePoissonAlgebra& a) {
  GradedSubspaceFamily out;
  for (size_t d = 0; d < m.dims.size(); ++d) {
    const int da = a.alg.dims[d], dm = m.dims[d];
    Mat stacked(0, dm);
    for (int i = 0; i < da; ++i) {
      Mat e(da, 1);
      e.at(i, 0) = 1;
      stacked = stacked.vstack(m.lie[d] * kron(e, Mat::identity(dm)));
    }
    out.push_back(kernel(stacked));
  }
  return out;
}

GradedSubspaceFamily acoinvariants(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                                   const HopfGCoalgebra& h) {
  const CoinvariantFamily coh = coinvariants(m.coaction, m.dims, h);
  const GradedSubspaceFamily ann = poisson_annihilator(m, a);
  GradedSubspaceFamily out;
  for (size_t d = 0; d < m.dims.size(); ++d) {
    out.push_back(intersect(coh.per_degree[d], ann[d]));
  }
  return out;
}

Subspace tensor_with_full(const Subspace& sub, int hdim) {
  return Subspace::span_cols(kron(sub.inclusion(), Mat::identity(hdim)));
}

Mat coinvariant_transfer(const Coaction& c, const std::vector<int>& mdims, const HopfGCoalgebra& h,
                         int from_degree, int to_degree) {
  const GroupTable& g = h.group;
  const int be = g.op(g.inv(to_degree), from_degree);
  const int dh = h.dim(be);
  const Mat& unit = h.alg.unit[be];
  int k = -1;
  for (int i = 0; i < dh; ++i) {
    if (sgn(unit.at(i, 0)) != 0) {
      k = i;
      break;
    }
  }
  if (k < 0) {
    // Zero unit forces a zero component; the transfer is the zero map.
    return Mat(mdims[to_degree], mdims[from_degree]);
  }
  Mat xi(1, dh);
  xi.at(0, k) = Scalar(1) / unit.at(k, 0);
  return kron(Mat::identity(mdims[to_degree]), xi) * c.at(g, to_degree, be);
}

std::optional<Coaction> restrict_coaction(const Coaction& c, const std::vector<int>& mdims,
                                          const GradedSubspaceFamily& sub,
                                          const HopfGCoalgebra& h) {
  const GroupTable& g = h.group;
  Coaction out;
  out.rho.assign(static_cast<size_t>(g.order) * g.order, Mat());
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat mapped = c.at(g, al, be) * sub[ab].inclusion();
      const Subspace target = tensor_with_full(sub[al], h.dim(be));
      for (int j = 0; j < mapped.cols(); ++j) {
        if (!target.contains(mapped.col(j))) return std::nullopt;
      }
      out.rho[g.pair(al, be)] =
          kron(sub[al].coordinate_map(), Mat::identity(h.dim(be))) * mapped;
    }
  }
  return out;
}

namespace {

std::optional<std::string> closure_witness(const Mat& images, const Subspace& target,
                                           const std::vector<DomainFactor>& factors) {
  for (int j = 0; j < images.cols(); ++j) {
    if (target.contains(images.col(j))) continue;
    std::vector<int> dims;
    for (const auto& f : factors) dims.push_back(f.dim);
    const auto idx = tensor_index(j, dims);
    std::string name;
    for (size_t k = 0; k < factors.size(); ++k) {
      if (k) name += "⊗";
      name += basis_name(factors[k].labels, factors[k].degree, idx[k]);
    }
    return "image of " + name + " = " + render_column(images, j) + " leaves the subspace";
  }
  return std::nullopt;
}

}  // namespace

Report check_substructures(const PoissonHopfModule& m, const ComodulePoissonAlgebra& a,
                           const HopfGCoalgebra& h) {
  Report rep;
  const GroupTable& g = h.group;
  const PoissonHopfModule areg = regular_module(a);

  const GradedSubspaceFamily mann = poisson_annihilator(m, a);
  const GradedSubspaceFamily center = poisson_annihilator(areg, a);
  const GradedSubspaceFamily macoh = acoinvariants(m, a, h);
  const GradedSubspaceFamily base = acoinvariants(areg, a, h);

  // (1) the annihilator is a subcomodule of M
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat imgs = m.coaction.at(g, al, be) * mann[ab].inclusion();
      rep.add("substructure.annihilator_subcomodule", {al, be},
              closure_witness(imgs, tensor_with_full(mann[al], h.dim(be)),
                              {{mann[ab].dim(), ab, nullptr}}));
    }
  }

  // (2) the Poisson center is a subcomodule Poisson algebra of A
  auto closed_under = [&](const Mat& bilinear, const Subspace& s) {
    return closure_witness(bilinear * kron(s.inclusion(), s.inclusion()), s,
                           {{s.dim(), 0, nullptr}, {s.dim(), 0, nullptr}});
  };
  for (int d = 0; d < g.order; ++d) {
    rep.add("substructure.center_product_closed", {d}, closed_under(a.alg.mult[d], center[d]));
    rep.add("substructure.center_bracket_closed", {d}, closed_under(a.bracket[d], center[d]));
  }
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat imgs = a.coaction.at(g, al, be) * center[ab].inclusion();
      rep.add("substructure.center_subcomodule", {al, be},
              closure_witness(imgs, tensor_with_full(center[al], h.dim(be)),
                              {{center[ab].dim(), ab, nullptr}}));
    }
  }

  // (3) B = A^{AcoH} is a subcomodule Poisson algebra of the center
  for (int d = 0; d < g.order; ++d) {
    rep.add("substructure.base_product_closed", {d}, closed_under(a.alg.mult[d], base[d]));
    rep.add("substructure.base_bracket_closed", {d}, closed_under(a.bracket[d], base[d]));
    std::optional<std::string> w;
    if (!center[d].contains(base[d])) w = "base is not inside the Poisson center";
    rep.add("substructure.base_in_center", {d}, w);
  }
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const Mat imgs = a.coaction.at(g, al, be) * base[ab].inclusion();
      rep.add("substructure.base_subcomodule", {al, be},
              closure_witness(imgs, tensor_with_full(base[al], h.dim(be)),
                              {{base[ab].dim(), ab, nullptr}}));
    }
  }

  // (4) M^{AcoH} is a Poisson B-submodule of M
  for (int d = 0; d < g.order; ++d) {
    const Mat pairs = kron(base[d].inclusion(), macoh[d].inclusion());
    const std::vector<DomainFactor> f = {{base[d].dim(), d, nullptr}, {macoh[d].dim(), d, nullptr}};
    rep.add("substructure.acoinv_action_closed", {d},
            closure_witness(m.act[d] * pairs, macoh[d], f));
    rep.add("substructure.acoinv_lie_closed", {d},
            closure_witness(m.lie[d] * pairs, macoh[d], f));
  }
  return rep;
}

}  // namespace phm
