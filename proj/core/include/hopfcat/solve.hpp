#pragma once

#include "hopfcat/linmap.hpp"

namespace hopfcat {

/// A subspace of an ambient space, witnessed by an inclusion of full column rank.
struct SubspaceWitness {
  VecSpace ambient;
  LinMap inclusion;  // ambient.dim x k

  int dim() const { return inclusion.cols(); }
  const VecSpace& space() const { return inclusion.dom(); }
  std::vector<Scalar> basis_vector(int j) const;
};

/// A quotient of an ambient space, witnessed by projection and section with
/// projection ∘ section = id.
struct QuotientWitness {
  VecSpace ambient;
  LinMap projection;  // q x ambient.dim
  LinMap section;     // ambient.dim x q

  int dim() const { return projection.rows(); }
  const VecSpace& space() const { return projection.cod(); }
};

int rank(const LinMap& f);

/// Exact Gaussian elimination, first nonzero pivot.  Basis spans {v : f v = 0}.
SubspaceWitness kernel(const LinMap& f);

/// Projection cod(f) -> cod(f)/im(f), with a section.
QuotientWitness cokernel(const LinMap& f);

/// Two-sided inverse; throws NotSquare / Singular.
LinMap invert(const LinMap& f);

/// Solve A X = B exactly; throws Singular if any column of B is outside the
/// column span of A.  When A has full column rank the solution is unique.
LinMap solve_columns(const LinMap& a, const LinMap& b);

/// Column spans coincide.
bool same_span(const LinMap& a, const LinMap& b);

}  // namespace hopfcat
