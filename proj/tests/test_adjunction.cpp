#include <doctest.h>

#include "phm/adjunction.hpp"
#include "phm/fixtures.hpp"

using namespace phm;

namespace {

int count_fails(const Report& rep, const std::string& prefix) {
  int n = 0;
  for (const auto& r : rep.records) {
    if (!r.pass && r.check.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("the base of F1 is one-dimensional and induces A itself") {
  const Bundle b = fixture("F1");
  const GradedSubspaceFamily base = compute_base(*b.algebra, b.hopf);
  CHECK(base[0].dim() == 1);
  CHECK(base[1].dim() == 1);
  const TrivialComoduleModule nb = base_module(*b.algebra, b.hopf, base);
  const TrivialInduction ind = induce_from_trivial(*b.algebra, b.hopf, base, nb);
  CHECK(ind.ok);
  CHECK(ind.tensor.module.dims == std::vector<int>{2, 2});
  CHECK(check_poisson_hopf_module(ind.tensor.module, *b.algebra, b.hopf).all_pass());
}

TEST_CASE("inducing from B ⊕ B doubles the dimensions") {
  const Bundle b = fixture("F1");
  const GradedSubspaceFamily base = compute_base(*b.algebra, b.hopf);
  const TrivialComoduleModule nb = base_module(*b.algebra, b.hopf, base);
  const TrivialComoduleModule n2 = direct_sum(nb, nb, base, b.hopf);
  const TrivialInduction ind = induce_from_trivial(*b.algebra, b.hopf, base, n2);
  CHECK(ind.ok);
  CHECK(ind.tensor.module.dims == std::vector<int>{4, 4});
}

TEST_CASE("inducing from the zero module gives the zero module") {
  const Bundle b = fixture("F1");
  const GradedSubspaceFamily base = compute_base(*b.algebra, b.hopf);
  TrivialComoduleModule z;
  z.dims = {0, 0};
  z.act = {Mat(0, 0), Mat(0, 0)};
  z.coaction.rho.assign(4, Mat(0, 0));
  const TrivialInduction ind = induce_from_trivial(*b.algebra, b.hopf, base, z);
  CHECK(ind.ok);
  CHECK(ind.tensor.module.dims == std::vector<int>{0, 0});
}

TEST_CASE("a non-trivial comodule is rejected with the violating pair") {
  const Bundle b = fixture("F1");
  const GradedSubspaceFamily base = compute_base(*b.algebra, b.hopf);
  TrivialComoduleModule n;
  n.dims = {1, 1};
  Mat act(1, 1);
  act.at(0, 0) = 1;
  n.act = {act, act};
  n.coaction.rho.assign(4, Mat());
  const GroupTable& g = b.hopf.group;
  for (int al = 0; al < 2; ++al) {
    for (int be = 0; be < 2; ++be) {
      Mat rho(2, 1);
      rho.at(0, 0) = 1;
      n.coaction.rho[g.pair(al, be)] = rho;
    }
  }
  // Corrupt one pair: coaction lands on the x component of H.
  Mat bad(2, 1);
  bad.at(1, 0) = 1;
  n.coaction.rho[g.pair(0, 1)] = bad;
  const TrivialInduction ind = induce_from_trivial(*b.algebra, b.hopf, base, n);
  CHECK(!ind.ok);
  bool found = false;
  for (const auto& r : ind.report.records) {
    if (r.check == "trivial_comodule.form" && !r.pass) {
      found = true;
      CHECK(r.indices == std::vector<int>{0, 1});
    }
  }
  CHECK(found);
}

TEST_CASE("adjunction certifies on F1 with N = B") {
  const Bundle b = fixture("F1");
  const GradedSubspaceFamily base = compute_base(*b.algebra, b.hopf);
  const TrivialComoduleModule nb = base_module(*b.algebra, b.hopf, base);
  const Report rep = check_adjunction(*b.module, nb, *b.algebra, b.hopf);
  CHECK(rep.all_pass());
}

TEST_CASE("adjunction certifies on F3 with N = B ⊕ B") {
  const Bundle b = fixture("F3");
  const GradedSubspaceFamily base = compute_base(*b.algebra, b.hopf);
  const TrivialComoduleModule nb = base_module(*b.algebra, b.hopf, base);
  const TrivialComoduleModule n2 = direct_sum(nb, nb, base, b.hopf);
  const Report rep = check_adjunction(*b.module, n2, *b.algebra, b.hopf);
  CHECK(rep.all_pass());
  CHECK(count_fails(rep, "adjunction") == 0);
}

TEST_CASE("adjunction is vacuous for N = 0") {
  const Bundle b = fixture("F1");
  TrivialComoduleModule z;
  z.dims = {0, 0};
  z.act = {Mat(0, 0), Mat(0, 0)};
  z.coaction.rho.assign(4, Mat(0, 0));
  const Report rep = check_adjunction(*b.module, z, *b.algebra, b.hopf);
  CHECK(rep.all_pass());
}

TEST_CASE("adjunction certifies on F2") {
  const Bundle b = fixture("F2");
  const GradedSubspaceFamily base = compute_base(*b.algebra, b.hopf);
  const TrivialComoduleModule nb = base_module(*b.algebra, b.hopf, base);
  const Report rep = check_adjunction(*b.module, nb, *b.algebra, b.hopf);
  CHECK(rep.all_pass());
}
