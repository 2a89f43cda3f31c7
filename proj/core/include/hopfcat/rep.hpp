#pragma once

#include "hopfcat/hopf.hpp"

namespace hopfcat {

struct LeftModule {
  HopfPtr over;
  VecSpace space;
  LinMap act;  // H⊗M -> M
};

struct RightComodule {
  HopfPtr over;
  VecSpace space;
  LinMap coact;  // M -> M⊗H
};

/// Right contramodule over finite-dimensional H, stored in the transcription
/// as a left module over (H*, convolution): contra(ε ⊗ n) = n and
/// contra ∘ (mult_{H*} ⊗ id) = contra ∘ (id ⊗ contra).
struct RightContramodule {
  HopfPtr over;
  VecSpace space;
  LinMap contra;  // H*⊗N -> N
};

/// Module + comodule on one carrier, the raw input of the compatibility checks.
struct BiStructure {
  LeftModule module;
  RightComodule comodule;
};

/// Module + contramodule on one carrier.
struct ContraBiStructure {
  LeftModule module;
  RightContramodule contramodule;
};

Report verify_module(const LeftModule& m);
Report verify_comodule(const RightComodule& c);
Report verify_contramodule(const RightContramodule& n);

LeftModule trivial_module(const HopfPtr& h, const VecSpace& space);
RightComodule trivial_comodule(const HopfPtr& h, const VecSpace& space);
/// M = H with coact = Δ.
RightComodule regular_comodule(const HopfPtr& h);
/// α(χ ⊗ n) = χ(1) n.
RightContramodule trivial_contramodule(const HopfPtr& h, const VecSpace& space);

/// Coaction modified by S^{2k}: coact' = (id ⊗ S^{2k}) ∘ coact.
RightComodule twist_comodule(const RightComodule& c, int k);
/// Action precomposed with S^{2k} on the H factor.
LeftModule twist_module(const LeftModule& m, int k);
/// Contraaction precomposed with S^{2k} on the argument: α'(f) = α(f∘S^{2k});
/// the H* coordinate picks up the transpose of S^{2k}.
RightContramodule twist_contramodule(const RightContramodule& n, int k);

/// Codiagonal coaction ρ(m⊗n) = m₀⊗n₀⊗m₁n₁.
RightComodule tensor_comodules(const RightComodule& a, const RightComodule& b);

/// Dual comodule on W*: ρ(w*) = w*((-)₀) · s((-)₁) for an antipode power s.
RightComodule dual_comodule(const RightComodule& w, const LinMap& s);

/// Internal Homs.  Both carriers are V⊗W* ≅ Hom(W,V) with the map f = E_{ij}
/// at index i·dim(W)+j.  hom_l: ρf(w) = f(w₀)₀ ⊗ f(w₀)₁·S(w₁);
/// hom_r: ρf(w) = f(w₀)₀ ⊗ S⁻¹(w₁)·f(w₀)₁.
RightComodule hom_l(const RightComodule& w, const RightComodule& v);
RightComodule hom_r(const RightComodule& w, const RightComodule& v);

/// Hom(W,V)^H: the comodule maps W -> V, as the kernel of
/// f ↦ coact_V ∘ f − (f⊗id) ∘ coact_W inside V⊗W*.
SubspaceWitness invariants(const RightComodule& w, const RightComodule& v);

/// The currying bijection invariants(T⊗W, V) ↔ invariants(T, hom_l(W,V)),
/// returned as explicit mutually inverse matrices in the witness bases.
struct Bijection {
  SubspaceWitness lhs;   // invariants(T⊗W, V)
  SubspaceWitness rhs;   // invariants(T, hom_l(W,V))
  LinMap forward;        // lhs -> rhs coordinates
  LinMap backward;       // rhs -> lhs coordinates
};
Bijection internal_hom_adjunction(const RightComodule& t, const RightComodule& w,
                                  const RightComodule& v);

/// Membership of a matrix in a witnessed subspace, with coordinates.
bool in_span(const SubspaceWitness& w, const LinMap& columns);

}  // namespace hopfcat
