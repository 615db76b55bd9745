#include "phm/hom.hpp"

namespace phm {

namespace {

std::vector<int> hom_offsets(const std::vector<int>& dom, const std::vector<int>& cod, int* total) {
  std::vector<int> off(dom.size());
  int t = 0;
  for (size_t d = 0; d < dom.size(); ++d) {
    off[d] = t;
    t += dom[d] * cod[d];
  }
  *total = t;
  return off;
}

Mat unflatten_one(const Mat& basis_rows, int row, int offset, int cod, int dom) {
  Mat f(cod, dom);
  for (int r = 0; r < cod; ++r)
    for (int c = 0; c < dom; ++c) f.at(r, c) = basis_rows.at(row, offset + r * dom + c);
  return f;
}

}  // namespace

std::vector<Mat> MorphismSpace::family(int k) const {
  std::vector<Mat> out;
  int total = 0;
  const auto off = hom_offsets(dom_dims, cod_dims, &total);
  for (size_t d = 0; d < dom_dims.size(); ++d) {
    out.push_back(unflatten_one(flat.basis, k, off[d], cod_dims[d], dom_dims[d]));
  }
  return out;
}

Mat MorphismSpace::flatten(const std::vector<Mat>& maps) const {
  int total = 0;
  const auto off = hom_offsets(dom_dims, cod_dims, &total);
  Mat v(total, 1);
  for (size_t d = 0; d < dom_dims.size(); ++d) {
    for (int r = 0; r < cod_dims[d]; ++r)
      for (int c = 0; c < dom_dims[d]; ++c)
        v.at(off[d] + r * dom_dims[d] + c, 0) = maps[d].at(r, c);
  }
  return v;
}

std::optional<Mat> MorphismSpace::coords_of(const std::vector<Mat>& maps) const {
  return flat.coords(flatten(maps));
}

MorphismSpace hom_space(const PoissonHopfModule& dom, const PoissonHopfModule& cod,
                        const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h,
                        unsigned constraints) {
  const GroupTable& g = h.group;
  MorphismSpace out;
  out.dom_dims = dom.dims;
  out.cod_dims = cod.dims;
  int total = 0;
  const auto off = hom_offsets(dom.dims, cod.dims, &total);

  // Stage 1: degree-local constraints. f∘L = L'∘f becomes
  // (I⊗Lᵀ − L'⊗I)·vec(f) = 0 for vec in row-major order.
  std::vector<Subspace> local;
  for (int d = 0; d < g.order; ++d) {
    const int nd = dom.dims[d] * cod.dims[d];
    Mat stacked(0, nd);
    auto add_commutant = [&](const std::vector<Mat>& dom_action,
                             const std::vector<Mat>& cod_action) {
      const int da = a.dim(d);
      for (int i = 0; i < da; ++i) {
        Mat e(da, 1);
        e.at(i, 0) = 1;
        const Mat l = dom_action[d] * kron(e, Mat::identity(dom.dims[d]));
        const Mat lp = cod_action[d] * kron(e, Mat::identity(cod.dims[d]));
        stacked = stacked.vstack(kron(Mat::identity(cod.dims[d]), l.transposed()) -
                                 kron(lp, Mat::identity(dom.dims[d])));
      }
    };
    if (constraints & kHomALinear) add_commutant(dom.act, cod.act);
    if (constraints & kHomLieLinear) add_commutant(dom.lie, cod.lie);
    local.push_back(stacked.rows() == 0 ? Subspace::full(nd) : kernel(stacked));
  }

  if (!(constraints & kHomColinear)) {
    Mat basis(0, total);
    for (int d = 0; d < g.order; ++d) {
      Mat rows(local[d].dim(), total);
      for (int i = 0; i < local[d].dim(); ++i)
        for (int j = 0; j < local[d].ambient; ++j) rows.at(i, off[d] + j) = local[d].basis.at(i, j);
      basis = basis.vstack(rows);
    }
    out.flat = Subspace::span_rows(total, basis);
    return out;
  }

  // Stage 2: colinearity in the coordinates of the local solution spaces.
  std::vector<int> loff(g.order);
  int ltotal = 0;
  for (int d = 0; d < g.order; ++d) {
    loff[d] = ltotal;
    ltotal += local[d].dim();
  }
  Mat stacked(0, ltotal);
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const int rows = cod.dims[al] * h.dim(be) * dom.dims[ab];
      Mat block(rows, ltotal);
      // rho^cod ∘ f_{ab} contribution from the local basis of degree ab.
      for (int t = 0; t < local[ab].dim(); ++t) {
        const Mat f = unflatten_one(local[ab].basis, t, 0, cod.dims[ab], dom.dims[ab]);
        const Mat term = cod.coaction.at(g, al, be) * f;
        for (int r = 0; r < term.rows(); ++r)
          for (int c = 0; c < term.cols(); ++c)
            if (sgn(term.at(r, c)) != 0)
              block.at(r * dom.dims[ab] + c, loff[ab] + t) += term.at(r, c);
      }
      // -(f_a⊗id)∘rho^dom contribution from the local basis of degree a.
      for (int t = 0; t < local[al].dim(); ++t) {
        const Mat f = unflatten_one(local[al].basis, t, 0, cod.dims[al], dom.dims[al]);
        const Mat term = kron(f, Mat::identity(h.dim(be))) * dom.coaction.at(g, al, be);
        for (int r = 0; r < term.rows(); ++r)
          for (int c = 0; c < term.cols(); ++c)
            if (sgn(term.at(r, c)) != 0)
              block.at(r * dom.dims[ab] + c, loff[al] + t) -= term.at(r, c);
      }
      stacked = stacked.vstack(block);
    }
  }
  const Subspace sol = stacked.rows() == 0 ? Subspace::full(ltotal) : kernel(stacked);

  Mat basis(sol.dim(), total);
  for (int i = 0; i < sol.dim(); ++i) {
    for (int d = 0; d < g.order; ++d) {
      for (int t = 0; t < local[d].dim(); ++t) {
        const Scalar& c = sol.basis.at(i, loff[d] + t);
        if (sgn(c) == 0) continue;
        for (int j = 0; j < local[d].ambient; ++j) {
          const Scalar& b = local[d].basis.at(t, j);
          if (sgn(b) != 0) basis.at(i, off[d] + j) += c * b;
        }
      }
    }
  }
  out.flat = Subspace::span_rows(total, basis);
  return out;
}

Report check_module_morphism(const std::vector<Mat>& f, const PoissonHopfModule& dom,
                             const PoissonHopfModule& cod, const ComodulePoissonAlgebra& a,
                             const HopfGCoalgebra& h, const std::string& prefix) {
  Report rep;
  const GroupTable& g = h.group;
  for (int al = 0; al < g.order; ++al) {
    const int da = a.dim(al);
    if (!dom.act.empty() && !cod.act.empty()) {
      rep.add(prefix + ".action", {al},
              map_mismatch(f[al] * dom.act[al], cod.act[al] * kron(Mat::identity(da), f[al]),
                           {{da, al, nullptr}, {dom.dims[al], al, nullptr}}));
    }
    if (!dom.lie.empty() && !cod.lie.empty()) {
      rep.add(prefix + ".lie", {al},
              map_mismatch(f[al] * dom.lie[al], cod.lie[al] * kron(Mat::identity(da), f[al]),
                           {{da, al, nullptr}, {dom.dims[al], al, nullptr}}));
    }
  }
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      rep.add(prefix + ".colinearity", {al, be},
              map_mismatch(cod.coaction.at(g, al, be) * f[ab],
                           kron(f[al], Mat::identity(h.dim(be))) * dom.coaction.at(g, al, be),
                           {{dom.dims[ab], ab, nullptr}}));
    }
  }
  return rep;
}

Report check_cofree_hom_iso(const PoissonHopfModule& m, const PoissonHopfModule& n,
                            const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h) {
  Report rep;
  const GroupTable& g = h.group;
  const TensorWithHopf nh = tensor_with_hopf(n, a, h, false);

  const MorphismSpace big = hom_space(m, nh.module, a, h, kHomLieLinear | kHomColinear);
  const MorphismSpace small = hom_space(m, n, a, h, kHomLieLinear);
  rep.add(
      "cofree_hom.dimensions_match", {},
      big.dim() == small.dim()
          ? std::optional<std::string>{}
          : std::optional<std::string>{"dim " + std::to_string(big.dim()) + " vs " +
                                       std::to_string(small.dim())});

  // gamma: pick the (a,e) summand of N⊗H and apply the counit.
  auto gamma_of = [&](const std::vector<Mat>& f) {
    std::vector<Mat> out;
    for (int al = 0; al < g.order; ++al) {
      const int o = nh.offsets[al][al];  // summand N_a⊗H_e
      const int block = n.dims[al] * h.dim(g.identity);
      Mat pick(block, nh.module.dims[al]);
      for (int r = 0; r < block; ++r) pick.at(r, o + r) = 1;
      out.push_back(kron(Mat::identity(n.dims[al]), h.counit) * pick * f[al]);
    }
    return out;
  };
  // gamma': spread a map through the coaction into every summand.
  auto gamma_prime_of = [&](const std::vector<Mat>& gmaps) {
    std::vector<Mat> out;
    for (int al = 0; al < g.order; ++al) {
      Mat f(nh.module.dims[al], m.dims[al]);
      for (int u = 0; u < g.order; ++u) {
        const int v = g.op(g.inv(u), al);
        const Mat term = kron(gmaps[u], Mat::identity(h.dim(v))) * m.coaction.at(g, u, v);
        const int o = nh.offsets[al][u];
        for (int r = 0; r < term.rows(); ++r)
          for (int c = 0; c < term.cols(); ++c)
            if (sgn(term.at(r, c)) != 0) f.at(o + r, c) = term.at(r, c);
      }
      out.push_back(std::move(f));
    }
    return out;
  };

  bool ok = true;
  Mat gamma(small.dim(), big.dim());
  for (int k = 0; k < big.dim(); ++k) {
    const auto img = gamma_of(big.family(k));
    const auto coords = small.coords_of(img);
    if (!coords) {
      rep.add_fail("cofree_hom.gamma_lands", {k}, "image is not Lie-linear");
      ok = false;
      continue;
    }
    for (int i = 0; i < small.dim(); ++i) gamma.at(i, k) = coords->at(i, 0);
  }
  Mat gamma_prime(big.dim(), small.dim());
  for (int k = 0; k < small.dim(); ++k) {
    const auto img = gamma_prime_of(small.family(k));
    const auto coords = big.coords_of(img);
    if (!coords) {
      rep.add_fail("cofree_hom.gamma_prime_lands", {k},
                   "image is not a Lie-linear colinear map");
      ok = false;
      continue;
    }
    for (int i = 0; i < big.dim(); ++i) gamma_prime.at(i, k) = coords->at(i, 0);
  }
  if (ok) {
    rep.add("cofree_hom.gamma_retracts", {},
            (gamma * gamma_prime).is_identity()
                ? std::optional<std::string>{}
                : std::optional<std::string>{"gamma∘gamma' = " + (gamma * gamma_prime).to_string()});
    rep.add("cofree_hom.gamma_section", {},
            (gamma_prime * gamma).is_identity()
                ? std::optional<std::string>{}
                : std::optional<std::string>{"gamma'∘gamma = " + (gamma_prime * gamma).to_string()});
  }
  return rep;
}

}  // namespace phm
