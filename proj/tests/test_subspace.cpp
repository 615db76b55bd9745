#include <doctest.h>

#include <random>

#include "phm/subspace.hpp"

using namespace phm;

namespace {

Mat random_matrix(std::mt19937& rng, int rows, int cols, int sparsity_pct = 50) {
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> pct(0, 99);
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (pct(rng) < sparsity_pct) continue;
      Scalar v(entry(rng), den(rng));
      v.canonicalize();
      m.at(r, c) = v;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("kernel of the identity is zero") {
  CHECK(kernel(Mat::identity(2)).dim() == 0);
}

TEST_CASE("kernel of [1,-1] is the diagonal") {
  Mat m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  const Subspace k = kernel(m);
  Mat expected(1, 2);
  expected.at(0, 0) = 1;
  expected.at(0, 1) = 1;
  CHECK(k.basis == expected);
}

TEST_CASE("rank plus nullity is the column count") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(1, 8);
    const int rows = size(rng), cols = size(rng);
    const Mat m = random_matrix(rng, rows, cols);
    CHECK(kernel(m).dim() + rank(m) == cols);
  }
}

TEST_CASE("span canonicalization is independent of the generating set") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const Mat rows = random_matrix(rng, 3, 6);
    const Subspace s = Subspace::span_rows(6, rows);
    // Random invertible-ish recombination of the generators.
    Mat mixed(4, 6);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Scalar c = coef(rng);
        for (int k = 0; k < 6; ++k) mixed.at(i, k) += c * rows.at(j, k);
      }
    }
    const Subspace t = Subspace::span_rows(6, mixed);
    CHECK(s.contains(t));
    if (t.dim() == s.dim()) CHECK(s == t);
  }
}

TEST_CASE("intersection is idempotent and respects coordinate spans") {
  Mat e1(1, 2), e2(1, 2);
  e1.at(0, 0) = 1;
  e2.at(0, 1) = 1;
  const Subspace s1 = Subspace::span_rows(2, e1);
  const Subspace s2 = Subspace::span_rows(2, e2);
  CHECK(intersect(s1, s1) == s1);
  CHECK(intersect(s1, s2).dim() == 0);
  CHECK_THROWS_AS(intersect(s1, Subspace::zero(3)), ShapeError);
}

TEST_CASE("random intersections are contained in both factors") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const Subspace a = Subspace::span_rows(5, random_matrix(rng, 3, 5));
    const Subspace b = Subspace::span_rows(5, random_matrix(rng, 3, 5));
    const Subspace c = intersect(a, b);
    CHECK(a.contains(c));
    CHECK(b.contains(c));
    CHECK(c == intersect(b, a));
  }
}

TEST_CASE("quotient by zero is invertible, quotient by everything is zero") {
  const Quotient q0 = quotient(3, Subspace::zero(3));
  CHECK(q0.dim == 3);
  CHECK(inverse(q0.projector).has_value());
  const Quotient q1 = quotient(3, Subspace::full(3));
  CHECK(q1.dim == 0);
}

TEST_CASE("quotient data satisfies its contracts") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Subspace rel = Subspace::span_rows(6, random_matrix(rng, 3, 6));
    const Quotient q = quotient(6, rel);
    CHECK(q.dim == 6 - rel.dim());
    CHECK((q.projector * q.section).is_identity());
    CHECK(kernel(q.projector) == rel);
  }
}

TEST_CASE("solve finds exact particular solutions") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat a = random_matrix(rng, 4, 5);
    const Mat x = random_matrix(rng, 5, 2, 30);
    const Mat b = a * x;
    const auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
  // Inconsistent system.
  Mat a(2, 1), b(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  b.at(0, 0) = 1;
  b.at(1, 0) = 2;
  CHECK(!solve(a, b).has_value());
}

TEST_CASE("inverse round-trips and rejects singular input") {
  std::mt19937 rng(8080);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Mat a = random_matrix(rng, 4, 4, 30);
    const auto inv = inverse(a);
    if (!inv) continue;
    ++found;
    CHECK((a * *inv).is_identity());
    CHECK((*inv * a).is_identity());
  }
  CHECK(found > 5);
  Mat z(2, 2);
  z.at(0, 0) = 1;
  CHECK(!inverse(z).has_value());
}

TEST_CASE("large kernels agree with the exact path") {
  // Big enough to trigger the modular pivot-detection route.
  std::mt19937 rng(616);
  const int rows = 90, cols = 200;
  const Mat m = random_matrix(rng, rows, cols, 85);
  const Subspace k = kernel(m);
  CHECK((m * k.inclusion()).is_zero());
  CHECK(k.dim() + rank(m) == cols);
}

TEST_CASE("coordinates recover members of a subspace") {
  std::mt19937 rng(99);
  const Subspace s = Subspace::span_rows(5, random_matrix(rng, 3, 5));
  for (int trial = 0; trial < 10; ++trial) {
    Mat combo(5, 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < s.dim(); ++i) {
      const Scalar c = coef(rng);
      for (int j = 0; j < 5; ++j) combo.at(j, 0) += c * s.basis.at(i, j);
    }
    const auto coords = s.coords(combo);
    REQUIRE(coords.has_value());
    CHECK(s.inclusion() * *coords == combo);
    CHECK(s.coordinate_map() * combo == *coords);
  }
}
