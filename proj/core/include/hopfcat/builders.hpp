#pragma once

#include "hopfcat/group.hpp"
#include "hopfcat/hopf.hpp"

namespace hopfcat {

/// The one-dimensional Hopf algebra k.
HopfPtr trivial_hopf(Field f = rationals());

/// kG with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
HopfPtr group_algebra(const GroupTable& g, Field f = rationals());

/// Sweedler's four-dimensional Hopf algebra over Q: basis {1, g, x, gx},
/// g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x.
HopfPtr sweedler_h4();

/// The Taft algebra of dimension n² over F_p: g^n = 1, x^n = 0, xg = q·gx,
/// Δx = x⊗1 + g⊗x.  Requires q of multiplicative order exactly n in F_p.
HopfPtr taft_algebra(int n, std::uint32_t p, long q);

}  // namespace hopfcat
