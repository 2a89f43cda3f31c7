#pragma once

#include <memory>

#include "hopfcat/report.hpp"
#include "hopfcat/solve.hpp"

namespace hopfcat {

/// A finite-dimensional Hopf algebra given by structure constants.  The
/// antipode inverse is computed at construction; a singular antipode is
/// rejected.  Immutable once built.
struct HopfAlgebra {
  std::string name;
  VecSpace space;        // H
  LinMap mult;           // H⊗H -> H
  LinMap unit;           // k -> H
  LinMap comult;         // H -> H⊗H
  LinMap counit;         // H -> k
  LinMap antipode;       // H -> H
  LinMap antipode_inv;   // cached S^{-1}

  int dim() const { return space.dim(); }
  Field field() const { return space.field; }
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Builds the record, caching S^{-1}; does not run the axiom suite.
HopfPtr make_hopf(std::string name, VecSpace space, LinMap mult, LinMap unit, LinMap comult,
                  LinMap counit, LinMap antipode);

/// Same-algebra test used by the Mismatch guards: pointer equality or equal
/// structure constants.
bool same_hopf(const HopfPtr& a, const HopfPtr& b);

/// Every axiom with pass/fail and a witness basis tuple on failure.
Report verify_hopf_axioms(const HopfAlgebra& h);

/// S^k for any integer k (negative powers use the cached inverse).
LinMap antipode_power(const HopfAlgebra& h, int k);

/// mult ∘ (f⊗g) ∘ comult.
LinMap convolution(const HopfAlgebra& h, const LinMap& f, const LinMap& g);

/// The dual Hopf algebra on H*: convolution product, transposed
/// comultiplication, transposed antipode.
HopfPtr dual_hopf(const HopfPtr& h);

// ---- derived operators shared by the representation machinery ----

/// (Δ⊗id)∘Δ : H -> H⊗H⊗H.
LinMap comult3(const HopfAlgebra& h);
/// mult∘(mult⊗id) : H⊗H⊗H -> H.
LinMap mult3(const HopfAlgebra& h);
/// ε as a column k -> H*.
LinMap counit_element(const HopfAlgebra& h);
/// Evaluation H*⊗H -> k.
LinMap pairing(const HopfAlgebra& h);
/// H⊗H* -> H*, (a, χ) -> χ(a·-).
LinMap dual_left_translation(const HopfAlgebra& h);
/// H*⊗H -> H*, (χ, b) -> χ(-·b).
LinMap dual_right_translation(const HopfAlgebra& h);
/// H⊗H⊗H* -> H*, (l, r, χ) -> χ(l·-·r).
LinMap dual_two_sided_translation(const HopfAlgebra& h);
/// mult_{H*} = dual of Δ, as a map H*⊗H* -> H*.
LinMap dual_mult(const HopfAlgebra& h);

}  // namespace hopfcat
