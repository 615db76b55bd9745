#pragma once

#include <optional>

#include "phm/matrix.hpp"

namespace phm {

// Subspace of Q^ambient in canonical form: basis rows form a reduced row
// echelon matrix with full row rank, so equal subspaces compare bit-exactly.
struct Subspace {
  int ambient = 0;
  Mat basis;  // dim() x ambient, RREF rows

  int dim() const { return basis.rows(); }

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span_rows(int ambient, const Mat& rows);
  static Subspace span_cols(const Mat& cols);

  bool contains(const Mat& column_vector) const;
  bool contains(const Subspace& other) const;
  // Coordinates of a member vector in the canonical basis; nullopt otherwise.
  std::optional<Mat> coords(const Mat& column_vector) const;
  // Inclusion matrix ambient x dim(): columns are the basis vectors.
  Mat inclusion() const;
  // Coordinate matrix dim() x ambient: sends members to basis coordinates
  // (rows of an RREF basis read coordinates off the pivot positions).
  Mat coordinate_map() const;

  bool operator==(const Subspace& rhs) const { return ambient == rhs.ambient && basis == rhs.basis; }
  bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }
};

// Incremental row-echelon accumulator; keeps the basis fully reduced.
class RowReducer {
 public:
  explicit RowReducer(int cols) : cols_(cols) {}
  // Reduces the row against the basis and inserts it if independent.
  bool add_row(std::vector<Scalar> row);
  void add_matrix_rows(const Mat& m);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  // Residual of a vector after reduction (zero iff in the row space).
  std::vector<Scalar> reduce(std::vector<Scalar> row) const;
  Mat rref() const;
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<int> pivots_;  // pivot column of rows_[i]; strictly increasing
};

Subspace kernel(const Mat& m);
Subspace image(const Mat& m);
int rank(const Mat& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace add(const Subspace& a, const Subspace& b);

// Quotient of Q^ambient by a subspace: projector∘section = id on the
// quotient and kernel(projector) = rel.
struct Quotient {
  int dim = 0;
  Mat projector;  // dim x ambient
  Mat section;    // ambient x dim
};
Quotient quotient(int ambient, const Subspace& rel);

std::optional<Mat> solve(const Mat& a, const Mat& b);  // any X with a·X = b
std::optional<Mat> inverse(const Mat& a);

}  // namespace phm
