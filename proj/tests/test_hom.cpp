#include <doctest.h>

#include "phm/fixtures.hpp"
#include "phm/hom.hpp"
#include "support/structures.hpp"

using namespace phm;

TEST_CASE("unconstrained hom spaces have full dimension") {
  const Bundle b = fixture("F1");
  const MorphismSpace s = hom_space(*b.module, *b.module, *b.algebra, b.hopf, kHomNone);
  CHECK(s.dim() == 2 * 2 + 2 * 2);
}

TEST_CASE("colinear A-linear endomorphisms of F1's module are the scalars") {
  const Bundle b = fixture("F1");
  const MorphismSpace s =
      hom_space(*b.module, *b.module, *b.algebra, b.hopf, kHomALinear | kHomColinear);
  CHECK(s.dim() == 1);
  const std::vector<Mat> id = {Mat::identity(2), Mat::identity(2)};
  const auto coords = s.coords_of(id);
  CHECK(coords.has_value());
}

TEST_CASE("F2 Poisson endomorphisms contain the identity") {
  const Bundle b = fixture("F2");
  const MorphismSpace s =
      hom_space(*b.module, *b.module, *b.algebra, b.hopf, kHomALinear | kHomLieLinear);
  CHECK(s.dim() >= 1);
  const std::vector<Mat> id = {Mat::identity(4)};
  CHECK(s.coords_of(id).has_value());
}

TEST_CASE("hom space members satisfy the constraints exactly") {
  const Bundle b = fixture("F4");
  const MorphismSpace s = hom_space(*b.module, *b.module, *b.algebra, b.hopf,
                                    kHomALinear | kHomLieLinear | kHomColinear);
  CHECK(s.dim() >= 1);
  for (int k = 0; k < s.dim(); ++k) {
    const auto f = s.family(k);
    CHECK(check_module_morphism(f, *b.module, *b.module, *b.algebra, b.hopf, "morphism")
              .all_pass());
  }
}

TEST_CASE("morphisms restrict to the acoinvariants") {
  // Any certified module morphism maps M^{AcoH} into N^{AcoH}.
  for (const std::string name : {"F1", "F2", "F4"}) {
    const Bundle b = fixture(name);
    const MorphismSpace s = hom_space(*b.module, *b.module, *b.algebra, b.hopf,
                                      kHomALinear | kHomLieLinear | kHomColinear);
    const GradedSubspaceFamily acoh = acoinvariants(*b.module, *b.algebra, b.hopf);
    for (int k = 0; k < s.dim(); ++k) {
      const auto f = s.family(k);
      for (int d = 0; d < b.hopf.group.order; ++d) {
        const Mat images = f[d] * acoh[d].inclusion();
        for (int j = 0; j < images.cols(); ++j) CHECK(acoh[d].contains(images.col(j)));
      }
    }
  }
}

TEST_CASE("cofree hom correspondence certifies on the fixtures") {
  for (const std::string name : {"F1", "F2", "F3"}) {
    const Bundle b = fixture(name);
    CHECK(check_cofree_hom_iso(*b.module, *b.module, *b.algebra, b.hopf).all_pass());
  }
}

TEST_CASE("cofree hom correspondence is vacuous on the zero module") {
  const Bundle b = fixture("F1");
  const PoissonHopfModule z = testsupport::zero_module(*b.algebra, b.hopf);
  const Report rep = check_cofree_hom_iso(z, z, *b.algebra, b.hopf);
  CHECK(rep.all_pass());
}

TEST_CASE("identity endomorphism certifies as a module morphism") {
  const Bundle b = fixture("F4");
  std::vector<Mat> id = {Mat::identity(8), Mat::identity(8)};
  CHECK(check_module_morphism(id, *b.module, *b.module, *b.algebra, b.hopf, "m").all_pass());
}
