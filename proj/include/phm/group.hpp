#pragma once

#include <string>
#include <vector>

#include "phm/report.hpp"

namespace phm {

// Finite abelian group given by its multiplication table. Laws are certified
// by check_group rather than assumed; the builders always produce valid
// tables.
struct GroupTable {
  int order = 0;
  std::vector<int> mul;  // order*order, row-major
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> names;

  int op(int a, int b) const { return mul[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  int pair(int a, int b) const { return a * order + b; }

  static GroupTable cyclic(int n);
  // Derives identity/inverses from the table where possible; the laws are
  // still checked separately.
  static GroupTable from_table(int order, std::vector<int> mul);

  bool operator==(const GroupTable& rhs) const {
    return order == rhs.order && mul == rhs.mul;
  }
};

Report check_group(const GroupTable& g);

}  // namespace phm
