#include "phm/fixtures.hpp"

namespace phm {

std::vector<std::string> fixture_names() { return {"F1", "F2", "F3", "F4"}; }

std::vector<Mat> zero_bracket(const std::vector<int>& dims) {
  std::vector<Mat> out;
  for (const int d : dims) out.push_back(Mat(d, d * d));
  return out;
}

Coaction trivial_coaction(const std::vector<int>& dims, const HopfGCoalgebra& h) {
  const GroupTable& g = h.group;
  for (int d = 1; d < g.order; ++d) {
    if (dims[d] != dims[0]) throw ShapeError("trivial coaction needs constant dimensions");
  }
  Coaction c;
  c.rho.assign(static_cast<size_t>(g.order) * g.order, Mat());
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      c.rho[g.pair(al, be)] = kron(Mat::identity(dims[al]), h.alg.unit[be]);
    }
  }
  return c;
}

PoissonHopfModule module_direct_sum(const PoissonHopfModule& x, const PoissonHopfModule& y,
                                    const ComodulePoissonAlgebra& a, const HopfGCoalgebra& h) {
  const GroupTable& g = h.group;
  PoissonHopfModule m;
  for (int d = 0; d < g.order; ++d) m.dims.push_back(x.dims[d] + y.dims[d]);
  auto sum_action = [&](const std::vector<Mat>& fx, const std::vector<Mat>& fy) {
    std::vector<Mat> out;
    for (int d = 0; d < g.order; ++d) {
      const int da = a.dim(d), dx = x.dims[d], dy = y.dims[d];
      Mat act(dx + dy, da * (dx + dy));
      for (int i = 0; i < da; ++i) {
        for (int r = 0; r < dx; ++r)
          for (int c = 0; c < dx; ++c) act.at(r, i * (dx + dy) + c) = fx[d].at(r, i * dx + c);
        for (int r = 0; r < dy; ++r)
          for (int c = 0; c < dy; ++c)
            act.at(dx + r, i * (dx + dy) + dx + c) = fy[d].at(r, i * dy + c);
      }
      out.push_back(std::move(act));
    }
    return out;
  };
  m.act = sum_action(x.act, y.act);
  m.lie = sum_action(x.lie, y.lie);
  m.coaction.rho.assign(static_cast<size_t>(g.order) * g.order, Mat());
  for (int al = 0; al < g.order; ++al) {
    for (int be = 0; be < g.order; ++be) {
      const int ab = g.op(al, be);
      const int dh = h.dim(be);
      const Mat& rx = x.coaction.at(g, al, be);
      const Mat& ry = y.coaction.at(g, al, be);
      const int dxa = x.dims[al], dya = y.dims[al];
      Mat rho((dxa + dya) * dh, x.dims[ab] + y.dims[ab]);
      for (int i = 0; i < dxa; ++i)
        for (int j = 0; j < dh; ++j)
          for (int c = 0; c < x.dims[ab]; ++c)
            rho.at(i * dh + j, c) = rx.at(i * dh + j, c);
      for (int i = 0; i < dya; ++i)
        for (int j = 0; j < dh; ++j)
          for (int c = 0; c < y.dims[ab]; ++c)
            rho.at((dxa + i) * dh + j, x.dims[ab] + c) = ry.at(i * dh + j, c);
      m.coaction.rho[g.pair(al, be)] = std::move(rho);
    }
  }
  if (!x.labels.empty() && !y.labels.empty()) {
    for (int d = 0; d < g.order; ++d) {
      std::vector<std::string> names;
      for (const auto& s : x.labels[d]) names.push_back("(" + s + ",0)");
      for (const auto& s : y.labels[d]) names.push_back("(0," + s + ")");
      m.labels.push_back(std::move(names));
    }
  }
  return m;
}

namespace {

// k[x,y]/(x^2,y^2) with basis {1, x, y, xy} and bracket {x,y} = xy.
void grassmann_plane(Mat* mult, Mat* unit, Mat* bracket) {
  *mult = Mat(4, 16);
  auto prod = [](int i, int j) -> int {
    // 0=1, 1=x, 2=y, 3=xy; -1 marks zero products
    if (i == 0) return j;
    if (j == 0) return i;
    if ((i == 1 && j == 2) || (i == 2 && j == 1)) return 3;
    return -1;
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int p = prod(i, j);
      if (p >= 0) mult->at(p, i * 4 + j) = 1;
    }
  }
  *unit = Mat(4, 1);
  unit->at(0, 0) = 1;
  *bracket = Mat(4, 16);
  bracket->at(3, 1 * 4 + 2) = 1;   // {x,y} = xy
  bracket->at(3, 2 * 4 + 1) = -1;  // {y,x} = -xy
}

Bundle fixture_f1() {
  Bundle b;
  b.name = "F1";
  const GroupTable c2 = GroupTable::cyclic(2);
  b.hopf = build_trivial_hopf_g(build_group_algebra(2), c2);

  ComodulePoissonAlgebra a;
  a.group = c2;
  a.alg = b.hopf.alg;
  a.bracket = zero_bracket(a.alg.dims);
  a.coaction.rho = b.hopf.comult;
  a.labels = b.hopf.labels;
  b.algebra = a;
  b.module = regular_module(a);
  ColinearUnitMap phi;
  for (int d = 0; d < c2.order; ++d) phi.maps.push_back(Mat::identity(2));
  b.phi = phi;

  ExpectedValues e;
  e.coinvariant_dims = {1, 1};
  e.annihilator_dims = {2, 2};
  e.acoinvariant_dims = {1, 1};
  e.base_dims = {1, 1};
  e.tensor_dims = {2, 2};
  e.phi_algebra_map = true;
  e.lie_trivial_module = true;
  e.lie_trivial_algebra = true;
  e.hypotheses = true;
  e.isomorphism = true;
  b.expected = e;
  return b;
}

Bundle fixture_f2() {
  Bundle b;
  b.name = "F2";
  b.hopf = build_group_algebra(1);  // H = k over the trivial group

  ComodulePoissonAlgebra a;
  a.group = b.hopf.group;
  a.alg.dims = {4};
  Mat mult, unit, bracket;
  grassmann_plane(&mult, &unit, &bracket);
  a.alg.mult = {mult};
  a.alg.unit = {unit};
  a.bracket = {bracket};
  a.coaction = trivial_coaction(a.alg.dims, b.hopf);
  a.labels = {{"1", "x", "y", "xy"}};
  b.algebra = a;
  b.module = regular_module(a);
  ColinearUnitMap phi;
  phi.maps.push_back(unit);  // phi(1) = 1
  b.phi = phi;

  ExpectedValues e;
  e.coinvariant_dims = {4};
  e.annihilator_dims = {2};
  e.acoinvariant_dims = {2};
  e.base_dims = {2};
  e.tensor_dims = {4};
  e.phi_algebra_map = true;
  e.lie_trivial_module = false;
  e.lie_trivial_algebra = false;
  e.hypotheses = false;
  e.isomorphism = true;
  b.expected = e;
  return b;
}

Bundle fixture_f3() {
  Bundle b = fixture_f1();
  b.name = "F3";
  b.module = module_direct_sum(*b.module, *b.module, *b.algebra, b.hopf);
  ExpectedValues e;
  e.coinvariant_dims = {2, 2};
  e.annihilator_dims = {4, 4};
  e.acoinvariant_dims = {2, 2};
  e.base_dims = {1, 1};
  e.tensor_dims = {4, 4};
  e.phi_algebra_map = true;
  e.lie_trivial_module = true;
  e.lie_trivial_algebra = true;
  e.hypotheses = true;
  e.isomorphism = true;
  b.expected = e;
  return b;
}

Bundle fixture_f4() {
  Bundle b;
  b.name = "F4";
  const GroupTable c2 = GroupTable::cyclic(2);
  b.hopf = build_trivial_hopf_g(build_group_algebra(2), c2);

  // A_a = k[C2] ⊗ k[x,y]/(x^2,y^2); bracket on the right factor, coaction on
  // the left factor.
  Mat pm, pu, pb;
  grassmann_plane(&pm, &pu, &pb);
  const Mat um = b.hopf.alg.mult[0];  // k[C2] multiplication
  const Mat uu = b.hopf.alg.unit[0];
  const Mat udelta = b.hopf.comult[0];

  const Mat arrange = kron(kron(Mat::identity(2), flip(4, 2)), Mat::identity(4));
  const Mat mult = kron(um, pm) * arrange;
  const Mat bracket = kron(um, pb) * arrange;
  const Mat unit = kron(uu, pu);
  const Mat rho_block = permute3(2, 2, 4, {0, 2, 1}) * kron(udelta, Mat::identity(4));

  ComodulePoissonAlgebra a;
  a.group = c2;
  a.alg.dims = {8, 8};
  a.alg.mult = {mult, mult};
  a.alg.unit = {unit, unit};
  a.bracket = {bracket, bracket};
  a.coaction.rho.assign(4, rho_block);
  {
    std::vector<std::string> names;
    for (const std::string u : {"1", "w"})
      for (const std::string p : {"1", "x", "y", "xy"}) names.push_back(u + "⊗" + p);
    a.labels = {names, names};
  }
  b.algebra = a;
  b.module = regular_module(a);

  ColinearUnitMap phi;  // u ↦ u⊗1
  Mat pm_phi(8, 2);
  pm_phi.at(0, 0) = 1;
  pm_phi.at(4, 1) = 1;
  phi.maps = {pm_phi, pm_phi};
  b.phi = phi;

  ExpectedValues e;
  e.coinvariant_dims = {4, 4};
  e.annihilator_dims = {4, 4};
  e.acoinvariant_dims = {2, 2};
  e.base_dims = {2, 2};
  e.tensor_dims = {8, 8};
  e.phi_algebra_map = true;
  e.lie_trivial_module = false;
  e.lie_trivial_algebra = false;
  e.hypotheses = false;
  e.isomorphism = true;
  b.expected = e;
  return b;
}

}  // namespace

Bundle fixture(const std::string& name) {
  if (name == "F1") return fixture_f1();
  if (name == "F2") return fixture_f2();
  if (name == "F3") return fixture_f3();
  if (name == "F4") return fixture_f4();
  throw UnknownFixtureError(name);
}

}  // namespace phm
