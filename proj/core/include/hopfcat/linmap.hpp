#pragma once

#include <functional>
#include <vector>

#include "hopfcat/space.hpp"

namespace hopfcat {

/// An exact linear map.  The matrix is cod.dim x dom.dim; column j holds the
/// image of the j-th domain basis vector under the row-major tensor
/// convention shared by the whole library.
class LinMap {
 public:
  LinMap() = default;
  LinMap(VecSpace dom, VecSpace cod);

  static LinMap identity(const VecSpace& v);
  static LinMap zero(const VecSpace& dom, const VecSpace& cod);
  /// Column vector k -> v picking out a single ambient vector.
  static LinMap column(const VecSpace& cod, const std::vector<Scalar>& v);

  const VecSpace& dom() const { return dom_; }
  const VecSpace& cod() const { return cod_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;

  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  LinMap operator-() const;
  LinMap scaled(const Scalar& c) const;

  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

  /// Matrix of the transposed map between the dual spaces.
  LinMap transpose() const;

  std::string str() const;

 private:
  VecSpace dom_, cod_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// g after f; nnz-aware.
LinMap compose(const LinMap& g, const LinMap& f);

template <typename... More>
LinMap compose(const LinMap& a, const LinMap& b, const LinMap& c, const More&... more) {
  return compose(a, compose(b, c, more...));
}

/// Kronecker product under the row-major convention.
LinMap tensor_map(const LinMap& f, const LinMap& g);

/// Transpose, presented as a map between the dual spaces.
LinMap dual_map(const LinMap& f);

/// A⊗B -> B⊗A.
LinMap swap_map(const VecSpace& a, const VecSpace& b);

/// Permutation of tensor factors: new factor j is old factor perm[j].
/// Returned as an explicit map from ⊗spaces to ⊗spaces[perm].
LinMap permute_factors(const std::vector<VecSpace>& spaces, const std::vector<int>& perm);

/// Reindex the codomain of f (whose codomain is ⊗spaces) by the factor
/// permutation; equivalent to compose(permute_factors(spaces, perm), f)
/// without materialising the permutation matrix.
LinMap permute_cod(const LinMap& f, const std::vector<VecSpace>& spaces,
                   const std::vector<int>& perm);

/// Apply g to the factor block [pos, pos+count) of f's codomain
/// (id ⊗ g ⊗ id) ∘ f, keeping everything else fixed.
LinMap apply_cod(const LinMap& f, const std::vector<VecSpace>& cod_factors, int pos, int count,
                 const LinMap& g);

/// Precompose: f ∘ (id ⊗ g ⊗ id) on the factor block of f's domain.
LinMap apply_dom(const LinMap& f, const std::vector<VecSpace>& dom_factors, int pos, int count,
                 const LinMap& g);

/// Build a map column-by-column.
LinMap from_columns(const VecSpace& dom, const VecSpace& cod,
                    const std::function<std::vector<Scalar>(int)>& col);

}  // namespace hopfcat
