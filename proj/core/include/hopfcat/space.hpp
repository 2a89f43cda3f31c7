#pragma once

#include <string>
#include <vector>

#include "hopfcat/scalar.hpp"

namespace hopfcat {

/// A finite-dimensional vector space over an exact field.  Labels name the
/// basis vectors for reporting; equality of spaces is dimension + field only.
struct VecSpace {
  Field field;
  std::vector<std::string> labels;

  int dim() const { return static_cast<int>(labels.size()); }

  bool operator==(const VecSpace& o) const {
    return field == o.field && labels.size() == o.labels.size();
  }
  bool operator!=(const VecSpace& o) const { return !(*this == o); }
};

/// dim-n space with labels "<prefix>0", "<prefix>1", ...
VecSpace make_space(Field f, int dim, const std::string& prefix = "e");
VecSpace make_space(Field f, std::vector<std::string> labels);

/// The unit object k, a single basis vector labelled "1".
VecSpace unit_space(Field f);

/// Basis ordered row-major: the index of `a` varies slowest.  Labels "x⊗y".
VecSpace tensor_space(const VecSpace& a, const VecSpace& b);

/// Dual space: same dim and field, labels starred.
VecSpace dual_space(const VecSpace& v);

}  // namespace hopfcat
