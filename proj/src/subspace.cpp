#include "phm/subspace.hpp"

#include <algorithm>
#include <cstdint>

namespace phm {

bool RowReducer::add_row(std::vector<Scalar> row) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    if (sgn(row[p]) == 0) continue;
    const Scalar coef = row[p];
    const auto& base = rows_[i];
    for (int j = p; j < cols_; ++j) {
      if (sgn(base[j]) != 0) row[j] -= coef * base[j];
    }
  }
  int pivot = -1;
  for (int j = 0; j < cols_; ++j) {
    if (sgn(row[j]) != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  const Scalar inv = Scalar(1) / row[pivot];
  for (int j = pivot; j < cols_; ++j) {
    if (sgn(row[j]) != 0) row[j] *= inv;
  }
  for (size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = rows_[i][pivot];
    if (sgn(c) == 0) continue;
    auto& base = rows_[i];
    for (int j = pivot; j < cols_; ++j) {
      if (sgn(row[j]) != 0) base[j] -= c * row[j];
    }
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

void RowReducer::add_matrix_rows(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row(cols_);
    for (int j = 0; j < cols_; ++j) row[j] = m.at(i, j);
    add_row(std::move(row));
  }
}

std::vector<Scalar> RowReducer::reduce(std::vector<Scalar> row) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    if (sgn(row[p]) == 0) continue;
    const Scalar coef = row[p];
    const auto& base = rows_[i];
    for (int j = p; j < cols_; ++j) {
      if (sgn(base[j]) != 0) row[j] -= coef * base[j];
    }
  }
  return row;
}

Mat RowReducer::rref() const {
  Mat out(rank(), cols_);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = rows_[i][j];
  return out;
}

Subspace Subspace::zero(int ambient) { return Subspace{ambient, Mat(0, ambient)}; }

Subspace Subspace::full(int ambient) { return Subspace{ambient, Mat::identity(ambient)}; }

Subspace Subspace::span_rows(int ambient, const Mat& rows) {
  if (rows.cols() != ambient) throw ShapeError("span_rows ambient mismatch");
  RowReducer red(ambient);
  red.add_matrix_rows(rows);
  return Subspace{ambient, red.rref()};
}

Subspace Subspace::span_cols(const Mat& cols) {
  return span_rows(cols.rows(), cols.transposed());
}

bool Subspace::contains(const Mat& v) const {
  if (v.rows() != ambient || v.cols() != 1) throw ShapeError("contains: vector shape mismatch");
  RowReducer red(ambient);
  red.add_matrix_rows(basis);
  std::vector<Scalar> row(ambient);
  for (int j = 0; j < ambient; ++j) row[j] = v.at(j, 0);
  for (const auto& e : red.reduce(std::move(row))) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) throw ShapeError("contains: ambient mismatch");
  RowReducer red(ambient);
  red.add_matrix_rows(basis);
  for (int i = 0; i < other.dim(); ++i) {
    std::vector<Scalar> row(ambient);
    for (int j = 0; j < ambient; ++j) row[j] = other.basis.at(i, j);
    for (const auto& e : red.reduce(std::move(row))) {
      if (sgn(e) != 0) return false;
    }
  }
  return true;
}

std::optional<Mat> Subspace::coords(const Mat& v) const {
  if (!contains(v)) return std::nullopt;
  Mat c(dim(), 1);
  int col = 0;
  for (int i = 0; i < dim(); ++i) {
    while (sgn(basis.at(i, col)) == 0) ++col;
    c.at(i, 0) = v.at(col, 0);
  }
  return c;
}

Mat Subspace::inclusion() const { return basis.transposed(); }

Mat Subspace::coordinate_map() const {
  Mat m(dim(), ambient);
  int col = 0;
  for (int i = 0; i < dim(); ++i) {
    while (sgn(basis.at(i, col)) == 0) ++col;
    m.at(i, col) = 1;
  }
  return m;
}

namespace {

constexpr uint64_t kPrime = 2147483647ull;  // 2^31 - 1

uint64_t mulmod(uint64_t a, uint64_t b) { return (a * b) % kPrime; }

uint64_t powmod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

bool scalar_mod(const Scalar& s, uint64_t* out) {
  const uint64_t den = mpz_fdiv_ui(s.get_den().get_mpz_t(), kPrime);
  if (den == 0) return false;
  uint64_t num = mpz_fdiv_ui(s.get_num().get_mpz_t(), kPrime);
  if (sgn(s) < 0 && num != 0) num = kPrime - num;
  *out = mulmod(num, powmod(den, kPrime - 2));
  return true;
}

struct ModpElimination {
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
  std::vector<int> pivot_rows;  // original row indices, one per pivot
};

// Dense elimination mod p; reports a row/column selection whose square
// submatrix is invertible over Q. Fails only if a denominator hits p.
bool eliminate_modp(const Mat& m, ModpElimination* out) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!scalar_mod(m.at(i, j), &a[i][j])) return false;
  std::vector<int> row_of(rows);
  for (int i = 0; i < rows; ++i) row_of[i] = i;
  int rank = 0;
  for (int col = 0; col < cols; ++col) {
    int sel = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) {
      out->free_cols.push_back(col);
      continue;
    }
    std::swap(a[sel], a[rank]);
    std::swap(row_of[sel], row_of[rank]);
    out->pivot_cols.push_back(col);
    out->pivot_rows.push_back(row_of[rank]);
    const uint64_t inv = powmod(a[rank][col], kPrime - 2);
    for (int j = col; j < cols; ++j) a[rank][j] = mulmod(a[rank][j], inv);
    for (int i = rank + 1; i < rows; ++i) {
      const uint64_t c = a[i][col];
      if (c == 0) continue;
      for (int j = col; j < cols; ++j) {
        a[i][j] = (a[i][j] + kPrime - mulmod(c, a[rank][j])) % kPrime;
      }
    }
    ++rank;
  }
  return true;
}

Subspace kernel_exact(const Mat& m) {
  const int n = m.cols();
  RowReducer red(n);
  red.add_matrix_rows(m);
  const Mat r = red.rref();
  const auto& pivots = red.pivots();
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int j = 0; j < n; ++j) {
      if (pi < pivots.size() && pivots[pi] == j) {
        ++pi;
      } else {
        free_cols.push_back(j);
      }
    }
  }
  Mat basis(static_cast<int>(free_cols.size()), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(static_cast<int>(k), free_cols[k]) = 1;
    for (int i = 0; i < r.rows(); ++i) {
      basis.at(static_cast<int>(k), pivots[i]) = -r.at(i, free_cols[k]);
    }
  }
  return Subspace::span_rows(n, basis);
}

// Modular pivot detection plus an exact solve on the selected square block,
// then exact verification. The verified candidate spans the whole kernel:
// rank over Q is at least the rank mod p, so dimensions pin it down.
std::optional<Subspace> kernel_modp(const Mat& m) {
  ModpElimination elim;
  if (!eliminate_modp(m, &elim)) return std::nullopt;
  const int n = m.cols();
  const int r = static_cast<int>(elim.pivot_cols.size());
  const int f = static_cast<int>(elim.free_cols.size());
  if (f == 0) return Subspace::zero(n);
  Mat s(r, r), e(r, f);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) s.at(i, j) = m.at(elim.pivot_rows[i], elim.pivot_cols[j]);
    for (int j = 0; j < f; ++j) e.at(i, j) = m.at(elim.pivot_rows[i], elim.free_cols[j]);
  }
  const auto x = solve(s, -e);
  if (!x) return std::nullopt;
  Mat k(n, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < f; ++j) k.at(elim.pivot_cols[i], j) = x->at(i, j);
  for (int j = 0; j < f; ++j) k.at(elim.free_cols[j], j) = 1;
  if (!(m * k).is_zero()) return std::nullopt;
  return Subspace::span_cols(k);
}

}  // namespace

Subspace kernel(const Mat& m) {
  const int n = m.cols();
  if (n == 0) return Subspace::zero(0);
  if (m.rows() == 0) return Subspace::full(n);
  if (static_cast<long>(m.rows()) * n > 16384) {
    if (auto fast = kernel_modp(m)) return *fast;
  }
  return kernel_exact(m);
}

Subspace image(const Mat& m) { return Subspace::span_cols(m); }

int rank(const Mat& m) {
  RowReducer red(m.cols());
  red.add_matrix_rows(m);
  return red.rank();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) {
    throw ShapeError("intersect: ambient dimension mismatch (" + std::to_string(a.ambient) +
                     " vs " + std::to_string(b.ambient) + ")");
  }
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient);
  const Mat ac = a.inclusion(), bc = b.inclusion();
  const Subspace null = kernel(ac.hstack(bc));
  Mat vecs(a.ambient, null.dim());
  for (int k = 0; k < null.dim(); ++k) {
    for (int i = 0; i < a.ambient; ++i) {
      Scalar v = 0;
      for (int j = 0; j < a.dim(); ++j) v += ac.at(i, j) * null.basis.at(k, j);
      vecs.at(i, k) = v;
    }
  }
  return Subspace::span_cols(vecs);
}

Subspace add(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw ShapeError("add: ambient dimension mismatch");
  return Subspace::span_rows(a.ambient, a.basis.vstack(b.basis));
}

Quotient quotient(int ambient, const Subspace& rel) {
  if (rel.ambient != ambient) throw ShapeError("quotient: ambient dimension mismatch");
  const int r = rel.dim();
  const int q = ambient - r;
  std::vector<int> pivots, complement;
  {
    int col = 0;
    for (int i = 0; i < r; ++i) {
      while (sgn(rel.basis.at(i, col)) == 0) ++col;
      pivots.push_back(col++);
    }
    size_t pi = 0;
    for (int j = 0; j < ambient; ++j) {
      if (pi < pivots.size() && pivots[pi] == j) {
        ++pi;
      } else {
        complement.push_back(j);
      }
    }
  }
  Mat c(ambient, ambient);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < ambient; ++i) c.at(i, j) = rel.basis.at(j, i);
  for (int j = 0; j < q; ++j) c.at(complement[j], r + j) = 1;
  const auto cinv = inverse(c);
  if (!cinv) throw Error("quotient: basis completion not invertible");
  Quotient out;
  out.dim = q;
  out.projector = cinv->rows_slice(r, ambient);
  out.section = Mat(ambient, q);
  for (int j = 0; j < q; ++j) out.section.at(complement[j], j) = 1;
  return out;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
  const int n = a.cols();
  RowReducer red(n + b.cols());
  red.add_matrix_rows(a.hstack(b));
  const Mat r = red.rref();
  const auto& pivots = red.pivots();
  for (const int p : pivots) {
    if (p >= n) return std::nullopt;  // inconsistent
  }
  Mat x(n, b.cols());
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = r.at(i, n + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse: matrix not square");
  const int n = a.rows();
  RowReducer red(2 * n);
  red.add_matrix_rows(a.hstack(Mat::identity(n)));
  if (red.rank() != n) return std::nullopt;
  const auto& pivots = red.pivots();
  for (int i = 0; i < n; ++i) {
    if (pivots[i] != i) return std::nullopt;
  }
  return red.rref().rows_slice(0, n).transposed().rows_slice(n, 2 * n).transposed();
}

}  // namespace phm
