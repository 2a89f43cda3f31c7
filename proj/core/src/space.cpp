#include "hopfcat/space.hpp"

#include <unordered_set>

#include "hopfcat/error.hpp"

namespace hopfcat {

namespace {

void check_unique(std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  bool clash = false;
  for (const auto& l : labels)
    if (!seen.insert(l).second) clash = true;
  if (!clash) return;
  // fall back to positional disambiguation
  for (std::size_t i = 0; i < labels.size(); ++i)
    labels[i] += "#" + std::to_string(i);
}

}  // namespace

VecSpace make_space(Field f, int dim, const std::string& prefix) {
  if (dim < 0) throw DimMismatch("negative dimension");
  VecSpace v{f, {}};
  v.labels.reserve(dim);
  for (int i = 0; i < dim; ++i) v.labels.push_back(prefix + std::to_string(i));
  return v;
}

VecSpace make_space(Field f, std::vector<std::string> labels) {
  check_unique(labels);
  return VecSpace{f, std::move(labels)};
}

VecSpace unit_space(Field f) { return VecSpace{f, {"1"}}; }

VecSpace tensor_space(const VecSpace& a, const VecSpace& b) {
  if (a.field != b.field)
    throw FieldMismatch("tensor_space: " + a.field.str() + " vs " + b.field.str());
  VecSpace t{a.field, {}};
  t.labels.reserve(static_cast<std::size_t>(a.dim()) * b.dim());
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels) t.labels.push_back(la + "⊗" + lb);
  check_unique(t.labels);
  return t;
}

VecSpace dual_space(const VecSpace& v) {
  VecSpace d{v.field, {}};
  d.labels.reserve(v.labels.size());
  for (const auto& l : v.labels) d.labels.push_back(l + "*");
  return d;
}

}  // namespace hopfcat
