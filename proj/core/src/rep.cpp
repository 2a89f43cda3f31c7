#include "hopfcat/rep.hpp"

#include "hopfcat/checks.hpp"
#include "hopfcat/error.hpp"

namespace hopfcat {

namespace {

void require_same(const HopfPtr& a, const HopfPtr& b, const char* where) {
  if (!same_hopf(a, b)) throw AlgebraMismatch(where);
}

}  // namespace

Report verify_module(const LeftModule& m) {
  Report rep{"module axioms", {}};
  const HopfAlgebra& h = *m.over;
  const VecSpace& M = m.space;
  check_equal(rep, "associativity", "act∘(m⊗id) = act∘(id⊗act)",
              compose(m.act, tensor_map(h.mult, LinMap::identity(M))),
              compose(m.act, tensor_map(LinMap::identity(h.space), m.act)));
  check_equal(rep, "unitality", "act∘(u⊗id) = id",
              compose(m.act, tensor_map(h.unit, LinMap::identity(M))), LinMap::identity(M));
  return rep;
}

Report verify_comodule(const RightComodule& c) {
  Report rep{"comodule axioms", {}};
  const HopfAlgebra& h = *c.over;
  const VecSpace& M = c.space;
  check_equal(rep, "coassociativity", "(ρ⊗id)∘ρ = (id⊗Δ)∘ρ",
              compose(tensor_map(c.coact, LinMap::identity(h.space)), c.coact),
              compose(tensor_map(LinMap::identity(M), h.comult), c.coact));
  check_equal(rep, "counitality", "(id⊗ε)∘ρ = id",
              compose(tensor_map(LinMap::identity(M), h.counit), c.coact), LinMap::identity(M));
  return rep;
}

Report verify_contramodule(const RightContramodule& n) {
  Report rep{"contramodule axioms", {}};
  const HopfAlgebra& h = *n.over;
  const VecSpace& N = n.space;
  check_equal(rep, "contraassociativity", "α(χ∗ψ ⊗ n) = α(χ ⊗ α(ψ⊗n))",
              compose(n.contra, tensor_map(dual_mult(h), LinMap::identity(N))),
              compose(n.contra, tensor_map(LinMap::identity(dual_space(h.space)), n.contra)));
  check_equal(rep, "unitality", "α(ε⊗n) = n",
              compose(n.contra, tensor_map(counit_element(h), LinMap::identity(N))),
              LinMap::identity(N));
  return rep;
}

LeftModule trivial_module(const HopfPtr& h, const VecSpace& space) {
  // h·m = ε(h) m
  LinMap act = tensor_map(h->counit, LinMap::identity(space));
  return LeftModule{h, space, std::move(act)};
}

RightComodule trivial_comodule(const HopfPtr& h, const VecSpace& space) {
  // m -> m⊗1
  LinMap coact = tensor_map(LinMap::identity(space), h->unit);
  return RightComodule{h, space, std::move(coact)};
}

RightComodule regular_comodule(const HopfPtr& h) { return RightComodule{h, h->space, h->comult}; }

RightContramodule trivial_contramodule(const HopfPtr& h, const VecSpace& space) {
  // α(χ⊗n) = χ(1) n: pair the H* slot with the unit element.
  const int nh = h->dim();
  LinMap eval1(tensor_space(dual_space(h->space), space), space);
  for (int j = 0; j < nh; ++j) {
    const Scalar& uj = h->unit.at(j, 0);
    if (uj.is_zero()) continue;
    for (int a = 0; a < space.dim(); ++a) eval1.at(a, j * space.dim() + a) = uj;
  }
  return RightContramodule{h, space, std::move(eval1)};
}

RightComodule twist_comodule(const RightComodule& c, int k) {
  LinMap tw = apply_cod(c.coact, {c.space, c.over->space}, 1, 1, antipode_power(*c.over, 2 * k));
  return RightComodule{c.over, c.space, std::move(tw)};
}

LeftModule twist_module(const LeftModule& m, int k) {
  LinMap tw = apply_dom(m.act, {m.over->space, m.space}, 0, 1, antipode_power(*m.over, 2 * k));
  return LeftModule{m.over, m.space, std::move(tw)};
}

RightContramodule twist_contramodule(const RightContramodule& n, int k) {
  LinMap s = antipode_power(*n.over, 2 * k).transpose();
  LinMap tw = apply_dom(n.contra, {dual_space(n.over->space), n.space}, 0, 1, s);
  return RightContramodule{n.over, n.space, std::move(tw)};
}

RightComodule tensor_comodules(const RightComodule& a, const RightComodule& b) {
  require_same(a.over, b.over, "tensor_comodules");
  const HopfAlgebra& h = *a.over;
  const VecSpace& H = h.space;
  // a⊗b -> a⊗H⊗b⊗H -> a⊗b⊗H⊗H -> a⊗b⊗H
  LinMap t = tensor_map(a.coact, b.coact);
  t = permute_cod(t, {a.space, H, b.space, H}, {0, 2, 1, 3});
  t = apply_cod(t, {a.space, b.space, H, H}, 2, 2, h.mult);
  return RightComodule{a.over, tensor_space(a.space, b.space), std::move(t)};
}

RightComodule dual_comodule(const RightComodule& w, const LinMap& s) {
  const HopfAlgebra& h = *w.over;
  const int nw = w.space.dim(), nh = h.dim();
  const VecSpace Ws = dual_space(w.space);
  LinMap coact(Ws, tensor_space(Ws, h.space));
  // ρ(e^j) = Σ_{k,b,m} C_W[(j,b),k] s[m,b] e^k ⊗ e_m
  for (int j = 0; j < nw; ++j)
    for (int k = 0; k < nw; ++k)
      for (int b = 0; b < nh; ++b) {
        const Scalar& c = w.coact.at(j * nh + b, k);
        if (c.is_zero()) continue;
        for (int m = 0; m < nh; ++m) {
          const Scalar& sv = s.at(m, b);
          if (!sv.is_zero()) coact.at(k * nh + m, j) += c * sv;
        }
      }
  return RightComodule{w.over, Ws, std::move(coact)};
}

RightComodule hom_l(const RightComodule& w, const RightComodule& v) {
  require_same(w.over, v.over, "hom_l");
  // V ⊗ W* with the S-twisted dual; the combined H-leg is v₁·S(w₁).
  return tensor_comodules(v, dual_comodule(w, w.over->antipode));
}

RightComodule hom_r(const RightComodule& w, const RightComodule& v) {
  require_same(w.over, v.over, "hom_r");
  const HopfAlgebra& h = *w.over;
  const VecSpace& H = h.space;
  const RightComodule ws = dual_comodule(w, h.antipode_inv);
  // V⊗W* -> V⊗H⊗W*⊗H -> V⊗W*⊗(S⁻¹(w₁))⊗(v₁) -> multiply in reverse order
  LinMap t = tensor_map(v.coact, ws.coact);
  t = permute_cod(t, {v.space, H, ws.space, H}, {0, 2, 3, 1});
  t = apply_cod(t, {v.space, ws.space, H, H}, 2, 2, h.mult);
  return RightComodule{w.over, tensor_space(v.space, ws.space), std::move(t)};
}

SubspaceWitness invariants(const RightComodule& w, const RightComodule& v) {
  require_same(w.over, v.over, "invariants");
  const HopfAlgebra& h = *w.over;
  const int nw = w.space.dim(), nv = v.space.dim(), nh = h.dim();
  const VecSpace ambient = tensor_space(v.space, dual_space(w.space));
  // rows: Hom(W, V⊗H) flattened as ((c,d),k); columns: E_{ij}.
  LinMap cond(ambient, make_space(ambient.field, nv * nh * nw, "r"));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nw; ++j) {
      const int col = i * nw + j;
      // + coact_V ∘ E_{ij}: column j of the result is ρ_V(e_i)
      for (int c = 0; c < nv; ++c)
        for (int d = 0; d < nh; ++d) {
          const Scalar& cv = v.coact.at(c * nh + d, i);
          if (!cv.is_zero()) cond.at((c * nh + d) * nw + j, col) += cv;
        }
      // − (E_{ij}⊗id) ∘ coact_W
      for (int k = 0; k < nw; ++k)
        for (int d = 0; d < nh; ++d) {
          const Scalar& cw = w.coact.at(j * nh + d, k);
          if (!cw.is_zero()) cond.at((i * nh + d) * nw + k, col) -= cw;
        }
    }
  return kernel(cond);
}

bool in_span(const SubspaceWitness& w, const LinMap& columns) {
  try {
    (void)solve_columns(w.inclusion, columns);
    return true;
  } catch (const Singular&) {
    return false;
  }
}

Bijection internal_hom_adjunction(const RightComodule& t, const RightComodule& w,
                                  const RightComodule& v) {
  require_same(t.over, w.over, "internal_hom_adjunction");
  require_same(t.over, v.over, "internal_hom_adjunction");
  const int nt = t.space.dim(), nw = w.space.dim(), nv = v.space.dim();

  SubspaceWitness lhs = invariants(tensor_comodules(t, w), v);
  SubspaceWitness rhs = invariants(t, hom_l(w, v));

  // Currying f ↦ (x ↦ f(x⊗-)): V⊗(T⊗W)* -> (V⊗W*)⊗T* is an index reshuffle.
  LinMap curry(lhs.ambient, rhs.ambient);
  const Scalar one = Scalar::one(lhs.ambient.field);
  for (int i = 0; i < nv; ++i)
    for (int a = 0; a < nt; ++a)
      for (int j = 0; j < nw; ++j)
        curry.at((i * nw + j) * nt + a, i * (nt * nw) + a * nw + j) = one;

  LinMap forward = solve_columns(rhs.inclusion, compose(curry, lhs.inclusion));
  LinMap backward = solve_columns(lhs.inclusion, compose(invert(curry), rhs.inclusion));
  if (!compose(forward, backward).is_identity() || !compose(backward, forward).is_identity())
    throw Error("internal_hom_adjunction: currying is not a bijection on invariants");
  return Bijection{std::move(lhs), std::move(rhs), std::move(forward), std::move(backward)};
}

}  // namespace hopfcat
