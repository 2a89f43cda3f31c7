#include "hopfcat/builders.hpp"

#include "hopfcat/error.hpp"

namespace hopfcat {

HopfPtr trivial_hopf(Field f) {
  VecSpace H = make_space(f, {"1"});
  const Scalar one = Scalar::one(f);
  LinMap mult(tensor_space(H, H), H), unit(unit_space(f), H), comult(H, tensor_space(H, H)),
      counit(H, unit_space(f)), antipode(H, H);
  mult.at(0, 0) = one;
  unit.at(0, 0) = one;
  comult.at(0, 0) = one;
  counit.at(0, 0) = one;
  antipode.at(0, 0) = one;
  return make_hopf("k", H, mult, unit, comult, counit, antipode);
}

HopfPtr group_algebra(const GroupTable& g, Field f) {
  const int n = g.order;
  VecSpace H = make_space(f, g.names);
  const Scalar one = Scalar::one(f);
  LinMap mult(tensor_space(H, H), H), unit(unit_space(f), H), comult(H, tensor_space(H, H)),
      counit(H, unit_space(f)), antipode(H, H);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult.at(g.op(i, j), i * n + j) = one;
  unit.at(g.identity, 0) = one;
  for (int i = 0; i < n; ++i) {
    comult.at(i * n + i, i) = one;
    counit.at(0, i) = one;
    antipode.at(g.inverse[i], i) = one;
  }
  return make_hopf("k[" + std::to_string(n) + "-group]", H, mult, unit, comult, counit, antipode);
}

HopfPtr sweedler_h4() {
  const Field f = rationals();
  VecSpace H = make_space(f, {"1", "g", "x", "gx"});
  const Scalar one = Scalar::one(f);
  LinMap mult(tensor_space(H, H), H), unit(unit_space(f), H), comult(H, tensor_space(H, H)),
      counit(H, unit_space(f)), antipode(H, H);

  // products as (target index, coefficient); -1 marks zero
  static const int tgt[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, -1, -1}, {3, 2, -1, -1}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, -1, 0, 0}, {1, -1, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (tgt[i][j] >= 0) mult.at(tgt[i][j], i * 4 + j) = Scalar::of_int(f, sgn[i][j]);

  unit.at(0, 0) = one;
  comult.at(0 * 4 + 0, 0) = one;                            // Δ1 = 1⊗1
  comult.at(1 * 4 + 1, 1) = one;                            // Δg = g⊗g
  comult.at(2 * 4 + 0, 2) = one;                            // Δx = x⊗1 + g⊗x
  comult.at(1 * 4 + 2, 2) = one;
  comult.at(3 * 4 + 1, 3) = one;                            // Δ(gx) = gx⊗g + 1⊗gx
  comult.at(0 * 4 + 3, 3) = one;
  counit.at(0, 0) = one;
  counit.at(0, 1) = one;
  antipode.at(0, 0) = one;                                  // S(1) = 1
  antipode.at(1, 1) = one;                                  // S(g) = g
  antipode.at(3, 2) = Scalar::of_int(f, -1);                // S(x) = -gx
  antipode.at(2, 3) = one;                                  // S(gx) = x
  return make_hopf("sweedler_h4", H, mult, unit, comult, counit, antipode);
}

namespace {

// vector arithmetic in H and H⊗H for the Taft construction
using Vec = std::vector<Scalar>;

Vec mul_in(const LinMap& mult, const Vec& u, const Vec& v, int n) {
  Vec w(n, Scalar::zero(u[0].field()));
  for (int a = 0; a < n; ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (v[b].is_zero()) continue;
      for (int i = 0; i < n; ++i) {
        const Scalar& c = mult.at(i, a * n + b);
        if (!c.is_zero()) w[i] += u[a] * v[b] * c;
      }
    }
  }
  return w;
}

Vec mul_in_square(const LinMap& mult, const Vec& u, const Vec& v, int n) {
  // (a⊗b)(c⊗d) = ac⊗bd on coefficient vectors over H⊗H
  const Field f = u[0].field();
  Vec w(static_cast<std::size_t>(n) * n, Scalar::zero(f));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& ua = u[a * n + b];
      if (ua.is_zero()) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const Scalar& vc = v[c * n + d];
          if (vc.is_zero()) continue;
          for (int i = 0; i < n; ++i) {
            const Scalar& m1 = mult.at(i, a * n + c);
            if (m1.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
              const Scalar& m2 = mult.at(j, b * n + d);
              if (!m2.is_zero()) w[i * n + j] += ua * vc * m1 * m2;
            }
          }
        }
    }
  return w;
}

}  // namespace

HopfPtr taft_algebra(int n, std::uint32_t p, long q) {
  if (n < 2) throw BadRootOfUnity("taft needs n >= 2");
  const Field f = prime_field(p);
  const Scalar qs = Scalar::of_int(f, q);
  if (qs.is_zero()) throw BadRootOfUnity("q = 0");
  {
    Scalar acc = Scalar::one(f);
    for (int k = 1; k < n; ++k) {
      acc *= qs;
      if (acc.is_one()) throw BadRootOfUnity("order of q divides " + std::to_string(k));
    }
    acc *= qs;
    if (!acc.is_one()) throw BadRootOfUnity("q^n != 1");
  }

  const int N = n * n;  // basis g^a x^b at index a*n + b
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::string l = "1";
      if (a > 0) l = a == 1 ? "g" : "g^" + std::to_string(a);
      if (b > 0) {
        std::string xs = b == 1 ? "x" : "x^" + std::to_string(b);
        l = a == 0 ? xs : l + xs;
      }
      labels.push_back(l);
    }
  VecSpace H = make_space(f, labels);
  const Scalar one = Scalar::one(f);

  // q-powers
  std::vector<Scalar> qpow(2 * n + 1, Scalar::one(f));
  for (int k = 1; k <= 2 * n; ++k) qpow[k] = qpow[k - 1] * qs;

  LinMap mult(tensor_space(H, H), H);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (b + d >= n) continue;  // x^n = 0
          // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
          mult.at(((a + c) % n) * n + (b + d), (a * n + b) * N + (c * n + d)) = qpow[b * c % n];
        }

  LinMap unit(unit_space(f), H);
  unit.at(0, 0) = one;
  LinMap counit(H, unit_space(f));
  for (int a = 0; a < n; ++a) counit.at(0, a * n) = one;  // ε(g^a) = 1, ε(..x..) = 0

  // Δ and S on generators, extended (anti)multiplicatively by explicit products.
  auto basis_vec = [&](int dim, int idx) {
    Vec v(dim, Scalar::zero(f));
    v[idx] = one;
    return v;
  };
  const Vec dg = [&] {  // Δg = g⊗g
    Vec v(static_cast<std::size_t>(N) * N, Scalar::zero(f));
    v[static_cast<std::size_t>(1 * n + 0) * N + (1 * n + 0)] = one;
    return v;
  }();
  const Vec dx = [&] {  // Δx = x⊗1 + g⊗x
    Vec v(static_cast<std::size_t>(N) * N, Scalar::zero(f));
    v[static_cast<std::size_t>(0 * n + 1) * N + 0] = one;
    v[static_cast<std::size_t>(1 * n + 0) * N + (0 * n + 1)] = one;
    return v;
  }();

  LinMap comult(H, tensor_space(H, H));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec acc = basis_vec(N * N, 0);  // 1⊗1
      for (int i = 0; i < a; ++i) acc = mul_in_square(mult, acc, dg, N);
      for (int i = 0; i < b; ++i) acc = mul_in_square(mult, acc, dx, N);
      for (int r = 0; r < N * N; ++r)
        if (!acc[r].is_zero()) comult.at(r, a * n + b) = acc[r];
    }

  // S(g) = g^{n-1}, S(x) = -g^{n-1} x, S antihomomorphism: S(g^a x^b) = S(x)^b S(g)^a.
  const Vec sg = basis_vec(N, ((n - 1) % n) * n);
  Vec sx = basis_vec(N, (n - 1) * n + 1);
  for (auto& s : sx) s = -s;
  LinMap antipode(H, H);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec acc = basis_vec(N, 0);
      for (int i = 0; i < b; ++i) acc = mul_in(mult, acc, sx, N);
      for (int i = 0; i < a; ++i) acc = mul_in(mult, acc, sg, N);
      for (int r = 0; r < N; ++r)
        if (!acc[r].is_zero()) antipode.at(r, a * n + b) = acc[r];
    }

  return make_hopf("taft(" + std::to_string(n) + "," + std::to_string(p) + "," +
                       std::to_string(q) + ")",
                   H, mult, unit, comult, counit, antipode);
}

}  // namespace hopfcat
