#include "phm/report.hpp"

#include <sstream>

namespace phm {

std::string basis_name(const Labels* labels, int degree, int idx) {
  if (labels && degree < static_cast<int>(labels->size()) &&
      idx < static_cast<int>((*labels)[degree].size())) {
    return (*labels)[degree][idx];
  }
  return "b" + std::to_string(idx);
}

bool Report::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

int Report::fail_count() const {
  int n = 0;
  for (const auto& r : records)
    if (!r.pass) ++n;
  return n;
}

void Report::add_pass(const std::string& check, std::vector<int> indices) {
  records.push_back(CheckRecord{"", check, std::move(indices), true, ""});
}

void Report::add_fail(const std::string& check, std::vector<int> indices, const std::string& witness) {
  records.push_back(CheckRecord{"", check, std::move(indices), false, witness});
}

void Report::add(const std::string& check, std::vector<int> indices,
                 const std::optional<std::string>& witness) {
  if (witness) {
    add_fail(check, std::move(indices), *witness);
  } else {
    add_pass(check, std::move(indices));
  }
}

void Report::merge(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

void Report::merge_as(const std::string& subject, const Report& other) {
  for (auto r : other.records) {
    if (r.subject.empty()) r.subject = subject;
    records.push_back(std::move(r));
  }
}

void Report::set_subject(const std::string& subject) {
  for (auto& r : records) {
    if (r.subject.empty()) r.subject = subject;
  }
}

std::string render_column(const Mat& m, int col) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << m.at(i, col).get_str();
  }
  os << ")";
  return os.str();
}

std::optional<std::string> map_mismatch(const Mat& lhs, const Mat& rhs,
                                        const std::vector<DomainFactor>& factors) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    return "shape mismatch: " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
           " vs " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
  }
  for (int j = 0; j < lhs.cols(); ++j) {
    bool equal = true;
    for (int i = 0; i < lhs.rows() && equal; ++i) {
      if (lhs.at(i, j) != rhs.at(i, j)) equal = false;
    }
    if (equal) continue;
    std::vector<int> dims;
    dims.reserve(factors.size());
    for (const auto& f : factors) dims.push_back(f.dim);
    const auto idx = tensor_index(j, dims);
    std::ostringstream os;
    os << "input ";
    for (size_t k = 0; k < factors.size(); ++k) {
      if (k) os << "⊗";
      os << basis_name(factors[k].labels, factors[k].degree, idx[k]);
    }
    os << ": lhs=" << render_column(lhs, j) << " rhs=" << render_column(rhs, j);
    return os.str();
  }
  return std::nullopt;
}

}  // namespace phm
