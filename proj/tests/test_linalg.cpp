#include "doctest.h"

#include "hopfcat/error.hpp"
#include "hopfcat/solve.hpp"
#include "test_oracles.hpp"

using namespace hopfcat;

TEST_CASE("scalar arithmetic stays in the declared field") {
  Scalar a = Scalar::of_string(rationals(), "2/4");
  CHECK(a.str() == "1/2");  // lowest terms
  Scalar b = Scalar::of_string(rationals(), "-3");
  CHECK((a * b).str() == "-3/2");
  CHECK((a + b).str() == "-5/2");
  CHECK(a.inverse().str() == "2");

  Field f7 = prime_field(7);
  Scalar c = Scalar::of_int(f7, 10);
  CHECK(c.str() == "3");
  CHECK((c * c).str() == "2");
  CHECK((c.inverse() * c).is_one());
  CHECK_THROWS_AS((void)(a + c), FieldMismatch);
  CHECK_THROWS_AS(prime_field(6), Error);
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), Singular);
}

TEST_CASE("tensor_space ordering and unit") {
  Field q = rationals();
  VecSpace one = make_space(q, 1, "u");
  VecSpace three = make_space(q, 3, "a");
  VecSpace t = tensor_space(one, three);
  CHECK(t.dim() == 3);
  CHECK(t.labels[1] == "u0⊗a1");

  VecSpace two = make_space(q, 2, "b");
  VecSpace tt = tensor_space(two, two);
  REQUIRE(tt.dim() == 4);
  // (0,0),(0,1),(1,0),(1,1)
  CHECK(tt.labels == std::vector<std::string>{"b0⊗b0", "b0⊗b1", "b1⊗b0", "b1⊗b1"});

  CHECK_THROWS_AS(tensor_space(three, make_space(prime_field(5), 2)), FieldMismatch);
}

TEST_CASE("tensor associativity: index maps agree for all triples") {
  Field q = rationals();
  VecSpace a = make_space(q, 3, "a"), b = make_space(q, 2, "b"), c = make_space(q, 2, "c");
  VecSpace left = tensor_space(tensor_space(a, b), c);
  VecSpace right = tensor_space(a, tensor_space(b, c));
  REQUIRE(left.dim() == 12);
  REQUIRE(right.dim() == 12);
  // enumerate all 12 triples; both flattenings give (i*2 + j)*2 + k
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        int flat = (i * 2 + j) * 2 + k;
        CHECK(left.labels[flat] == "a" + std::to_string(i) + "⊗b" + std::to_string(j) + "⊗c" +
                                       std::to_string(k));
        CHECK(right.labels[flat] == "a" + std::to_string(i) + "⊗b" + std::to_string(j) + "⊗c" +
                                        std::to_string(k));
      }
}

TEST_CASE("tensor_map against the brute-force Kronecker oracle") {
  std::mt19937_64 rng(11);
  Field q = rationals();
  VecSpace two = make_space(q, 2);
  LinMap f = oracles::random_map(two, two, rng);
  LinMap g = oracles::random_map(two, two, rng);
  LinMap got = tensor_map(f, g);
  LinMap expect = oracles::kron_oracle(f, g);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(got.at(r, c) == expect.at(r, c));

  CHECK(tensor_map(LinMap::identity(two), LinMap::identity(two)).is_identity());
  CHECK(tensor_map(f, LinMap::zero(two, two)).is_zero());
}

TEST_CASE("Kronecker functoriality on randomized triples") {
  std::mt19937_64 rng(5);
  Field f5 = prime_field(5);
  for (int trial = 0; trial < 10; ++trial) {
    VecSpace a = make_space(f5, 2), b = make_space(f5, 3), c = make_space(f5, 2);
    LinMap f = oracles::random_map(b, c, rng), fp = oracles::random_map(a, b, rng);
    LinMap g = oracles::random_map(b, a, rng), gp = oracles::random_map(c, b, rng);
    CHECK(compose(tensor_map(f, g), tensor_map(fp, gp)) ==
          tensor_map(compose(f, fp), compose(g, gp)));
  }
}

TEST_CASE("kernel: trivial cases and the rank oracle") {
  Field q = rationals();
  VecSpace five = make_space(q, 5);
  CHECK(kernel(LinMap::zero(five, five)).dim() == 5);
  CHECK(kernel(LinMap::identity(five)).dim() == 0);

  std::mt19937_64 rng(23);
  VecSpace six = make_space(q, 6), four = make_space(q, 4);
  LinMap m = oracles::random_map_of_rank(six, four, 3, rng);
  SubspaceWitness ker = kernel(m);
  CHECK(ker.dim() == 3);
  // every basis vector is annihilated
  CHECK(compose(m, ker.inclusion).is_zero());
  // inclusion has full column rank
  CHECK(oracles::rank_oracle(ker.inclusion) == 3);
}

TEST_CASE("rank-nullity on randomized instances") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    Field f = trial % 2 ? Field{7} : rationals();
    VecSpace dom = make_space(f, 2 + static_cast<int>(rng() % 4));
    VecSpace cod = make_space(f, 2 + static_cast<int>(rng() % 4));
    LinMap m = oracles::random_map(dom, cod, rng);
    CHECK(rank(m) == oracles::rank_oracle(m));
    CHECK(rank(m) + kernel(m).dim() == dom.dim());
  }
}

TEST_CASE("cokernel: projection kills the image, section splits") {
  Field q = rationals();
  VecSpace five = make_space(q, 5), three = make_space(q, 3);

  QuotientWitness zero_q = cokernel(LinMap::zero(three, five));
  CHECK(zero_q.dim() == 5);

  std::mt19937_64 rng(41);
  LinMap onto = oracles::random_map_of_rank(five, three, 3, rng);
  CHECK(cokernel(onto).dim() == 0);

  LinMap m = oracles::random_map_of_rank(three, five, 2, rng);
  QuotientWitness q2 = cokernel(m);
  CHECK(q2.dim() == 3);
  CHECK(compose(q2.projection, m).is_zero());
  CHECK(compose(q2.projection, q2.section).is_identity());
}

TEST_CASE("dual_map is the transpose and reverses composition") {
  std::mt19937_64 rng(3);
  Field q = rationals();
  VecSpace two = make_space(q, 2), three = make_space(q, 3);
  LinMap f = oracles::random_map(two, three, rng);
  LinMap d = dual_map(f);
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) CHECK(d.at(c, r) == f.at(r, c));
  CHECK(dual_map(dual_map(f)) == f);

  LinMap g = oracles::random_map(three, two, rng);
  CHECK(dual_map(compose(f, g)) == compose(dual_map(g), dual_map(f)));
}

TEST_CASE("invert: rational diagonal and F7 multiply-back") {
  Field q = rationals();
  VecSpace two = make_space(q, 2);
  LinMap d(two, two);
  d.at(0, 0) = Scalar::of_int(q, 2);
  d.at(1, 1) = Scalar::of_int(q, 3);
  LinMap di = invert(d);
  CHECK(di.at(0, 0).str() == "1/2");
  CHECK(di.at(1, 1).str() == "1/3");

  CHECK(invert(LinMap::identity(two)).is_identity());

  std::mt19937_64 rng(7);
  Field f7 = prime_field(7);
  VecSpace four = make_space(f7, 4);
  LinMap m = [&] {
    for (;;) {
      LinMap cand = oracles::random_map(four, four, rng);
      if (oracles::rank_oracle(cand) == 4) return cand;
    }
  }();
  LinMap mi = invert(m);
  CHECK(compose(m, mi).is_identity());
  CHECK(compose(mi, m).is_identity());

  VecSpace three = make_space(f7, 3);
  CHECK_THROWS_AS(invert(oracles::random_map(three, four, rng)), NotSquare);
  CHECK_THROWS_AS(invert(LinMap::zero(four, four)), Singular);
}

TEST_CASE("permute_cod and apply_cod/apply_dom agree with explicit maps") {
  std::mt19937_64 rng(19);
  Field q = rationals();
  VecSpace a = make_space(q, 2, "a"), b = make_space(q, 3, "b"), c = make_space(q, 2, "c");
  VecSpace abc = tensor_space(tensor_space(a, b), c);
  LinMap f = oracles::random_map(a, abc, rng);

  LinMap p = permute_factors({a, b, c}, {2, 0, 1});
  CHECK(permute_cod(f, {a, b, c}, {2, 0, 1}) == compose(p, f));

  LinMap g = oracles::random_map(b, c, rng);
  LinMap idg = tensor_map(LinMap::identity(a), tensor_map(g, LinMap::identity(c)));
  CHECK(apply_cod(f, {a, b, c}, 1, 1, g) == compose(idg, f));

  LinMap h = oracles::random_map(abc, a, rng);
  CHECK(apply_dom(h, {a, b, c}, 1, 1, g.transpose()) ==
        compose(h, tensor_map(LinMap::identity(a),
                              tensor_map(g.transpose(), LinMap::identity(c)))));
}

TEST_CASE("solve_columns and same_span") {
  std::mt19937_64 rng(29);
  Field q = rationals();
  VecSpace four = make_space(q, 4), two = make_space(q, 2);
  LinMap a = oracles::random_map_of_rank(two, four, 2, rng);
  LinMap x = oracles::random_map(two, two, rng);
  LinMap b = compose(a, x);
  CHECK(solve_columns(a, b) == x);
  CHECK(same_span(a, b) == (oracles::rank_oracle(x) == 2));

  // inconsistent system
  LinMap outside(two, four);
  outside.at(0, 0) = Scalar::one(q);
  bool consistent = true;
  try {
    (void)solve_columns(a, outside);
  } catch (const Singular&) {
    consistent = false;
  }
  // generic a has (1,0,0,0) outside its span almost surely; accept either but
  // demand solve/same_span agree
  CHECK(consistent == same_span(a, [&] {
          LinMap joined(make_space(q, 3), four);
          for (int r = 0; r < 4; ++r) {
            joined.at(r, 0) = a.at(r, 0);
            joined.at(r, 1) = a.at(r, 1);
            joined.at(r, 2) = outside.at(r, 0);
          }
          return joined;
        }()));
}
