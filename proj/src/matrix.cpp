#include "phm/matrix.hpp"

#include <sstream>

namespace phm {

Mat::Mat(int rows, int cols, std::initializer_list<int> entries) : Mat(rows, cols) {
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw ShapeError("matrix literal size mismatch");
  }
  auto it = entries.begin();
  for (size_t i = 0; i < e_.size(); ++i, ++it) e_[i] = *it;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::column(const std::vector<Scalar>& entries) {
  Mat m(static_cast<int>(entries.size()), 1);
  for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), 0) = entries[i];
  return m;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) {
    throw ShapeError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                     std::to_string(rhs.cols_));
  }
  Mat out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs.at(k, j);
        if (sgn(b) == 0) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum shape mismatch");
  Mat out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix difference shape mismatch");
  Mat out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
  return out;
}

Mat Mat::operator-() const {
  Mat out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
  return out;
}

bool Mat::operator==(const Mat& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

Mat Mat::transposed() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Mat Mat::hstack(const Mat& rhs) const {
  if (rows_ != rhs.rows_) throw ShapeError("hstack row mismatch");
  Mat out(rows_, cols_ + rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
  }
  return out;
}

Mat Mat::vstack(const Mat& rhs) const {
  if (cols_ != rhs.cols_) throw ShapeError("vstack column mismatch");
  Mat out(rows_ + rhs.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < rhs.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = rhs.at(i, j);
  return out;
}

Mat Mat::col(int c) const {
  Mat out(rows_, 1);
  for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, c);
  return out;
}

Mat Mat::rows_slice(int begin, int end) const {
  Mat out(end - begin, cols_);
  for (int i = begin; i < end; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i - begin, j) = at(i, j);
  return out;
}

bool Mat::is_zero() const {
  for (const auto& v : e_)
    if (sgn(v) != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

Mat kron(const Mat& f, const Mat& g) {
  Mat out(f.rows() * g.rows(), f.cols() * g.cols());
  for (int fi = 0; fi < f.rows(); ++fi) {
    for (int fj = 0; fj < f.cols(); ++fj) {
      const Scalar& a = f.at(fi, fj);
      if (sgn(a) == 0) continue;
      for (int gi = 0; gi < g.rows(); ++gi) {
        for (int gj = 0; gj < g.cols(); ++gj) {
          const Scalar& b = g.at(gi, gj);
          if (sgn(b) == 0) continue;
          out.at(fi * g.rows() + gi, fj * g.cols() + gj) = a * b;
        }
      }
    }
  }
  return out;
}

Mat flip(int du, int dv) {
  Mat out(du * dv, du * dv);
  for (int i = 0; i < du; ++i)
    for (int j = 0; j < dv; ++j) out.at(j * du + i, i * dv + j) = 1;
  return out;
}

Mat permute3(int d1, int d2, int d3, const std::array<int, 3>& perm) {
  const std::array<int, 3> dims = {d1, d2, d3};
  const int total = d1 * d2 * d3;
  std::array<int, 3> out_dims = {dims[perm[0]], dims[perm[1]], dims[perm[2]]};
  Mat out(total, total);
  for (int i1 = 0; i1 < d1; ++i1) {
    for (int i2 = 0; i2 < d2; ++i2) {
      for (int i3 = 0; i3 < d3; ++i3) {
        const std::array<int, 3> idx = {i1, i2, i3};
        const int src = (i1 * d2 + i2) * d3 + i3;
        const int dst = (idx[perm[0]] * out_dims[1] + idx[perm[1]]) * out_dims[2] + idx[perm[2]];
        out.at(dst, src) = 1;
      }
    }
  }
  return out;
}

std::vector<int> tensor_index(int flat, const std::vector<int>& dims) {
  std::vector<int> idx(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

}  // namespace phm
