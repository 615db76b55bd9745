#pragma once

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "phm/rational.hpp"

namespace phm {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Dense exact-rational matrix, row major. Maps act on column vectors from
// the left. All graded structure maps in the library are Mat values.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  Mat(int rows, int cols, std::initializer_list<int> entries);

  static Mat identity(int n);
  static Mat column(const std::vector<Scalar>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat operator-() const;
  bool operator==(const Mat& rhs) const;
  bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

  Mat scaled(const Scalar& s) const;
  Mat transposed() const;
  Mat hstack(const Mat& rhs) const;
  Mat vstack(const Mat& rhs) const;
  Mat col(int c) const;
  Mat rows_slice(int begin, int end) const;

  bool is_zero() const;
  bool is_identity() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> e_;
};

// Kronecker product: (f⊗g)(u⊗v) = f(u)⊗g(v) in lexicographic basis order,
// left factor index varying slowest.
Mat kron(const Mat& f, const Mat& g);

// Flip map U⊗V -> V⊗U as a permutation matrix, du = dim U, dv = dim V.
Mat flip(int du, int dv);

// Permutation of a triple tensor factor: sends e_{i1}⊗e_{i2}⊗e_{i3} to the
// position where factor k of the output is input factor perm[k].
Mat permute3(int d1, int d2, int d3, const std::array<int, 3>& perm);

// Decodes a flat lexicographic tensor index into per-factor indices.
std::vector<int> tensor_index(int flat, const std::vector<int>& dims);

}  // namespace phm
