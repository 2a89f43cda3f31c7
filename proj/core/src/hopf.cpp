#include "hopfcat/hopf.hpp"

#include "hopfcat/checks.hpp"
#include "hopfcat/error.hpp"

namespace hopfcat {

void check_equal(Report& rep, const std::string& id, const std::string& anchor, const LinMap& lhs,
                 const LinMap& rhs) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) {
    rep.add(id, anchor, false, "shape mismatch");
    return;
  }
  for (int c = 0; c < lhs.cols(); ++c)
    for (int r = 0; r < lhs.rows(); ++r)
      if (lhs.at(r, c) != rhs.at(r, c)) {
        rep.add(id, anchor, false,
                "on " + lhs.dom().labels[c] + ": coefficient of " + lhs.cod().labels[r] + " is " +
                    lhs.at(r, c).str() + " vs " + rhs.at(r, c).str());
        return;
      }
  rep.add(id, anchor, true);
}

HopfPtr make_hopf(std::string name, VecSpace space, LinMap mult, LinMap unit, LinMap comult,
                  LinMap counit, LinMap antipode) {
  const int n = space.dim();
  if (mult.rows() != n || mult.cols() != n * n) throw DimMismatch("mult shape");
  if (unit.rows() != n || unit.cols() != 1) throw DimMismatch("unit shape");
  if (comult.rows() != n * n || comult.cols() != n) throw DimMismatch("comult shape");
  if (counit.rows() != 1 || counit.cols() != n) throw DimMismatch("counit shape");
  if (antipode.rows() != n || antipode.cols() != n) throw DimMismatch("antipode shape");
  LinMap sinv = invert(antipode);  // throws Singular when S is not invertible
  auto h = std::make_shared<HopfAlgebra>(HopfAlgebra{std::move(name), std::move(space),
                                                     std::move(mult), std::move(unit),
                                                     std::move(comult), std::move(counit),
                                                     std::move(antipode), std::move(sinv)});
  return h;
}

bool same_hopf(const HopfPtr& a, const HopfPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->space == b->space && a->mult == b->mult && a->unit == b->unit &&
         a->comult == b->comult && a->counit == b->counit && a->antipode == b->antipode;
}

Report verify_hopf_axioms(const HopfAlgebra& h) {
  Report rep{"hopf axioms (" + h.name + ")", {}};
  const VecSpace& H = h.space;
  const LinMap idH = LinMap::identity(H);

  check_equal(rep, "associativity", "m∘(m⊗id) = m∘(id⊗m)",
              compose(h.mult, tensor_map(h.mult, idH)), compose(h.mult, tensor_map(idH, h.mult)));
  check_equal(rep, "left unit", "m∘(u⊗id) = id", compose(h.mult, tensor_map(h.unit, idH)), idH);
  check_equal(rep, "right unit", "m∘(id⊗u) = id", compose(h.mult, tensor_map(idH, h.unit)), idH);
  check_equal(rep, "coassociativity", "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ",
              compose(tensor_map(h.comult, idH), h.comult),
              compose(tensor_map(idH, h.comult), h.comult));
  check_equal(rep, "left counit", "(ε⊗id)∘Δ = id", compose(tensor_map(h.counit, idH), h.comult),
              idH);
  check_equal(rep, "right counit", "(id⊗ε)∘Δ = id", compose(tensor_map(idH, h.counit), h.comult),
              idH);
  check_equal(rep, "comult multiplicative", "Δ∘m = (m⊗m)∘(id⊗σ⊗id)∘(Δ⊗Δ)",
              compose(h.comult, h.mult),
              compose(tensor_map(h.mult, h.mult),
                      apply_cod(tensor_map(h.comult, h.comult), {H, H, H, H}, 1, 2,
                                swap_map(H, H))));
  check_equal(rep, "comult unital", "Δ∘u = u⊗u", compose(h.comult, h.unit),
              tensor_map(h.unit, h.unit));
  check_equal(rep, "counit multiplicative", "ε∘m = ε⊗ε", compose(h.counit, h.mult),
              tensor_map(h.counit, h.counit));
  check_equal(rep, "counit unital", "ε∘u = id_k", compose(h.counit, h.unit),
              LinMap::identity(unit_space(H.field)));

  const LinMap unit_counit = compose(h.unit, h.counit);
  check_equal(rep, "antipode left", "m∘(S⊗id)∘Δ = u∘ε",
              compose(h.mult, tensor_map(h.antipode, idH), h.comult), unit_counit);
  check_equal(rep, "antipode right", "m∘(id⊗S)∘Δ = u∘ε",
              compose(h.mult, tensor_map(idH, h.antipode), h.comult), unit_counit);
  check_equal(rep, "antipode inverse left", "S⁻¹∘S = id", compose(h.antipode_inv, h.antipode),
              idH);
  check_equal(rep, "antipode inverse right", "S∘S⁻¹ = id", compose(h.antipode, h.antipode_inv),
              idH);
  return rep;
}

LinMap antipode_power(const HopfAlgebra& h, int k) {
  LinMap acc = LinMap::identity(h.space);
  const LinMap& step = k >= 0 ? h.antipode : h.antipode_inv;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) acc = compose(step, acc);
  return acc;
}

LinMap convolution(const HopfAlgebra& h, const LinMap& f, const LinMap& g) {
  return compose(h.mult, tensor_map(f, g), h.comult);
}

HopfPtr dual_hopf(const HopfPtr& h) {
  const int n = h->dim();
  const VecSpace Hs = dual_space(h->space);
  const VecSpace HsHs = tensor_space(Hs, Hs);
  auto rehouse = [](LinMap m, const VecSpace& dom, const VecSpace& cod) {
    LinMap out(dom, cod);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
    return out;
  };
  LinMap mult_d = rehouse(h->comult.transpose(), HsHs, Hs);
  LinMap unit_d = rehouse(h->counit.transpose(), unit_space(h->field()), Hs);
  LinMap comult_d = rehouse(h->mult.transpose(), Hs, HsHs);
  LinMap counit_d = rehouse(h->unit.transpose(), Hs, unit_space(h->field()));
  LinMap antipode_d = rehouse(h->antipode.transpose(), Hs, Hs);
  (void)n;
  return make_hopf("dual(" + h->name + ")", Hs, std::move(mult_d), std::move(unit_d),
                   std::move(comult_d), std::move(counit_d), std::move(antipode_d));
}

LinMap comult3(const HopfAlgebra& h) {
  return compose(tensor_map(h.comult, LinMap::identity(h.space)), h.comult);
}

LinMap mult3(const HopfAlgebra& h) {
  return compose(h.mult, tensor_map(h.mult, LinMap::identity(h.space)));
}

LinMap counit_element(const HopfAlgebra& h) {
  LinMap eps(unit_space(h.field()), dual_space(h.space));
  for (int j = 0; j < h.dim(); ++j) eps.at(j, 0) = h.counit.at(0, j);
  return eps;
}

LinMap pairing(const HopfAlgebra& h) {
  const int n = h.dim();
  LinMap ev(tensor_space(dual_space(h.space), h.space), unit_space(h.field()));
  for (int m = 0; m < n; ++m) ev.at(0, m * n + m) = Scalar::one(h.field());
  return ev;
}

LinMap dual_left_translation(const HopfAlgebra& h) {
  const int n = h.dim();
  const VecSpace Hs = dual_space(h.space);
  LinMap out(tensor_space(h.space, Hs), Hs);
  for (int a = 0; a < n; ++a)
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) {
        const Scalar& v = h.mult.at(m, a * n + k);  // coeff of e_m in e_a e_k
        if (!v.is_zero()) out.at(k, a * n + m) = v;
      }
  return out;
}

LinMap dual_right_translation(const HopfAlgebra& h) {
  const int n = h.dim();
  const VecSpace Hs = dual_space(h.space);
  LinMap out(tensor_space(Hs, h.space), Hs);
  for (int m = 0; m < n; ++m)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const Scalar& v = h.mult.at(m, k * n + b);  // coeff of e_m in e_k e_b
        if (!v.is_zero()) out.at(k, m * n + b) = v;
      }
  return out;
}

LinMap dual_two_sided_translation(const HopfAlgebra& h) {
  const int n = h.dim();
  const VecSpace Hs = dual_space(h.space);
  LinMap out(tensor_space(tensor_space(h.space, h.space), Hs), Hs);
  // χ(e_l · e_k · e_r): contract left then right translation.
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int u = 0; u < n; ++u) {
        const Scalar& lu = h.mult.at(u, l * n + k);
        if (lu.is_zero()) continue;
        for (int r = 0; r < n; ++r)
          for (int m = 0; m < n; ++m) {
            const Scalar& um = h.mult.at(m, u * n + r);
            if (um.is_zero()) continue;
            out.at(k, (l * n + r) * n + m) += lu * um;
          }
      }
  return out;
}

LinMap dual_mult(const HopfAlgebra& h) {
  const VecSpace Hs = dual_space(h.space);
  LinMap t = h.comult.transpose();
  LinMap out(tensor_space(Hs, Hs), Hs);
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.cols(); ++c) out.at(r, c) = t.at(r, c);
  return out;
}

}  // namespace hopfcat
