#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phm/matrix.hpp"

namespace phm {

// Basis labels per degree, used to make witnesses readable. Optional; index
// names are used when absent.
using Labels = std::vector<std::vector<std::string>>;

std::string basis_name(const Labels* labels, int degree, int idx);

// One certified law instance: a law id, the degree tuple it was checked at,
// and on failure the first offending basis input with both sides rendered.
struct CheckRecord {
  std::string subject;
  std::string check;
  std::vector<int> indices;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::vector<CheckRecord> records;

  bool all_pass() const;
  int fail_count() const;
  void add_pass(const std::string& check, std::vector<int> indices = {});
  void add_fail(const std::string& check, std::vector<int> indices, const std::string& witness);
  void add(const std::string& check, std::vector<int> indices, const std::optional<std::string>& witness);
  void merge(const Report& other);
  void merge_as(const std::string& subject, const Report& other);
  void set_subject(const std::string& subject);
};

// Domain factor of a bilinear/linear law, for decoding witness columns.
struct DomainFactor {
  int dim = 0;
  int degree = 0;
  const Labels* labels = nullptr;
};

// Compares two matrices representing the same map; returns a witness string
// naming the first basis input where they differ, or nullopt when equal.
std::optional<std::string> map_mismatch(const Mat& lhs, const Mat& rhs,
                                        const std::vector<DomainFactor>& factors);

std::string render_column(const Mat& m, int col);

}  // namespace phm
