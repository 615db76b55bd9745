#include <doctest.h>

#include <random>

#include "phm/hopf.hpp"
#include "phm/matrix.hpp"

using namespace phm;

TEST_CASE("exact rational arithmetic round-trips") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 40);
  for (int i = 0; i < 500; ++i) {
    Scalar a(num(rng), den(rng));
    Scalar b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    Scalar c = a + b;
    CHECK(c - b == a);
    CHECK((a * b) * Scalar(7, 3) == a * (b * Scalar(7, 3)));
  }
}

TEST_CASE("scalar parsing enforces canonical form") {
  CHECK(*parse_scalar("3/4") == Scalar(3, 4));
  CHECK(*parse_scalar("-7") == Scalar(-7));
  CHECK(*parse_scalar("0") == Scalar(0));
  std::string err;
  CHECK(!parse_scalar("1/0", &err));
  CHECK(err.find("zero denominator") != std::string::npos);
  CHECK(!parse_scalar("2/4", &err));
  CHECK(!parse_scalar("1/-2", &err));
  CHECK(!parse_scalar("", &err));
  CHECK(!parse_scalar("x", &err));
}

TEST_CASE("kron of identities is the identity") {
  CHECK(kron(Mat::identity(3), Mat::identity(4)) == Mat::identity(12));
}

TEST_CASE("kron matches the columnwise definition f(e_i)⊗g(e_j)") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  Mat f(2, 3), g(3, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) f.at(r, c) = entry(rng);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) g.at(r, c) = entry(rng);
  const Mat fg = kron(f, g);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      // column i*2+j of f⊗g is f(e_i)⊗g(e_j), left factor index slowest
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 3; ++s) CHECK(fg.at(r * 3 + s, i * 2 + j) == f.at(r, i) * g.at(s, j));
    }
  }
}

TEST_CASE("kron is functorial: (f⊗g)(u⊗v) = f(u)⊗g(v)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Mat f(3, 2), g(2, 2), u(2, 1), v(2, 1);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c) f.at(r, c) = entry(rng);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) g.at(r, c) = entry(rng);
    for (int r = 0; r < 2; ++r) {
      u.at(r, 0) = entry(rng);
      v.at(r, 0) = entry(rng);
    }
    CHECK(kron(f, g) * kron(u, v) == kron(f * u, g * v));
  }
}

TEST_CASE("flip swaps tensor factors") {
  Mat u(2, 1), v(3, 1);
  u.at(0, 0) = 2;
  u.at(1, 0) = -1;
  v.at(1, 0) = 5;
  v.at(2, 0) = 7;
  CHECK(flip(2, 3) * kron(u, v) == kron(v, u));
}

TEST_CASE("comultiplication of k[C2] is coassociative as frozen 8x2 matrices") {
  const HopfGCoalgebra k2 = build_group_algebra(2);
  const Mat& delta = k2.comult[0];
  const Mat lhs = kron(delta, Mat::identity(2)) * delta;
  const Mat rhs = kron(Mat::identity(2), delta) * delta;
  // Both composites send 1 to 1⊗1⊗1 and x to x⊗x⊗x.
  Mat expected(8, 2);
  expected.at(0, 0) = 1;
  expected.at(7, 1) = 1;
  CHECK(lhs == expected);
  CHECK(rhs == expected);
}

TEST_CASE("tensor_index decodes lexicographic positions") {
  const auto idx = tensor_index(7, {2, 2, 2});
  CHECK(idx == std::vector<int>{1, 1, 1});
  const auto idx2 = tensor_index(5, {2, 3});
  CHECK(idx2 == std::vector<int>{1, 2});
}
