#pragma once

// Test-side oracles, deliberately independent of the library's elimination
// and tensor code paths.

#include <random>
#include <vector>

#include "hopfcat/linmap.hpp"

namespace oracles {

using hopfcat::Field;
using hopfcat::LinMap;
using hopfcat::Scalar;

/// Row-reduction rank oracle: forward elimination only, no pivot
/// normalisation, counting nonzero rows.
inline int rank_oracle(const LinMap& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Scalar>> a(rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r].push_back(m.at(r, c));
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      Scalar factor = a[r][col] * a[rank][col].inverse();
      for (int c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Brute-force double-loop Kronecker product oracle.
inline LinMap kron_oracle(const LinMap& f, const LinMap& g) {
  LinMap r(hopfcat::tensor_space(f.dom(), g.dom()), hopfcat::tensor_space(f.cod(), g.cod()));
  for (int fr = 0; fr < f.rows(); ++fr)
    for (int fc = 0; fc < f.cols(); ++fc)
      for (int gr = 0; gr < g.rows(); ++gr)
        for (int gc = 0; gc < g.cols(); ++gc)
          r.at(fr * g.rows() + gr, fc * g.cols() + gc) = f.at(fr, fc) * g.at(gr, gc);
  return r;
}

/// Applies a map to a plain coefficient vector.
inline std::vector<Scalar> apply(const LinMap& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.rows(), Scalar::zero(m.dom().field));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
  return out;
}

inline Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    return Scalar::of_mpq(mpq_class(num(rng), den(rng)));
  }
  std::uniform_int_distribution<long> d(0, f.p - 1);
  return Scalar::of_int(f, d(rng));
}

inline LinMap random_map(const hopfcat::VecSpace& dom, const hopfcat::VecSpace& cod,
                         std::mt19937_64& rng) {
  LinMap m(dom, cod);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = random_scalar(dom.field, rng);
  return m;
}

/// Random matrix of a prescribed rank, built as a product of full-rank slabs.
inline LinMap random_map_of_rank(const hopfcat::VecSpace& dom, const hopfcat::VecSpace& cod,
                                 int target_rank, std::mt19937_64& rng) {
  const hopfcat::VecSpace mid = hopfcat::make_space(dom.field, target_rank, "m");
  for (;;) {
    LinMap a = random_map(mid, cod, rng);
    LinMap b = random_map(dom, mid, rng);
    LinMap prod = hopfcat::compose(a, b);
    if (rank_oracle(prod) == target_rank) return prod;
  }
}

}  // namespace oracles
