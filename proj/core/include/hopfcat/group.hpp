#pragma once

#include <string>
#include <vector>

namespace hopfcat {

/// A finite group as a multiplication table.  Axioms are checked at
/// construction; a bad table throws BadGroupTable.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> mult;  // mult[i][j] = index of g_i g_j
  std::vector<int> inverse;
  int identity = 0;
  std::vector<std::string> names;

  int op(int i, int j) const { return mult[i][j]; }
  int conj(int x, int g) const { return mult[mult[x][g]][inverse[x]]; }  // x g x^-1
  std::vector<int> conjugacy_class(int g) const;
};

GroupTable make_group(std::vector<std::vector<int>> mult, std::vector<std::string> names = {});

GroupTable cyclic_group(int n);
GroupTable symmetric_group_3();

}  // namespace hopfcat
