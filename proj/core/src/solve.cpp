#include "hopfcat/solve.hpp"

#include "hopfcat/error.hpp"

namespace hopfcat {

namespace {

// Dense working copy with row operations that skip zeros.
struct Sheet {
  int rows, cols;
  std::vector<Scalar> a;

  Sheet(const LinMap& m) : rows(m.rows()), cols(m.cols()) {
    a.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) a.push_back(m.at(r, c));
  }
  Scalar& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  void scale_row(int r, const Scalar s) {
    for (int c = 0; c < cols; ++c)
      if (!at(r, c).is_zero()) at(r, c) *= s;
  }
  // row r2 -= s * row r1
  void eliminate(int r2, int r1, const Scalar s) {
    if (s.is_zero()) return;
    for (int c = 0; c < cols; ++c) {
      const Scalar& v = at(r1, c);
      if (!v.is_zero()) at(r2, c) -= s * v;
    }
  }
};

// Reduced row echelon form in place over the first `lead_cols` columns
// (trailing columns are carried along).  Returns pivot columns.
std::vector<int> rref(Sheet& s, int lead_cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < lead_cols && row < s.rows; ++col) {
    int p = -1;
    for (int r = row; r < s.rows; ++r)
      if (!s.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < s.cols; ++c) std::swap(s.at(p, c), s.at(row, c));
    s.scale_row(row, s.at(row, col).inverse());
    for (int r = 0; r < s.rows; ++r) {
      if (r == row) continue;
      s.eliminate(r, row, s.at(r, col));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Scalar> SubspaceWitness::basis_vector(int j) const {
  std::vector<Scalar> v;
  v.reserve(ambient.dim());
  for (int i = 0; i < ambient.dim(); ++i) v.push_back(inclusion.at(i, j));
  return v;
}

int rank(const LinMap& f) {
  Sheet s(f);
  return static_cast<int>(rref(s, s.cols).size());
}

SubspaceWitness kernel(const LinMap& f) {
  Sheet s(f);
  const auto pivots = rref(s, s.cols);
  const Field fld = f.dom().field;
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(f.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    for (int c = 0; c < f.cols(); ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  VecSpace ker = make_space(fld, static_cast<int>(free_cols.size()), "k");
  LinMap incl(ker, f.dom());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const int fc = free_cols[j];
    incl.at(fc, static_cast<int>(j)) = Scalar::one(fld);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      incl.at(pivots[i], static_cast<int>(j)) = -s.at(static_cast<int>(i), fc);
  }
  return SubspaceWitness{f.dom(), std::move(incl)};
}

QuotientWitness cokernel(const LinMap& f) {
  const int n = f.rows();
  const Field fld = f.cod().field;
  // Row-reduce [ f | I ]: rows whose f-part vanishes give the projection.
  LinMap aug(make_space(fld, f.cols() + n), f.cod());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < f.cols(); ++c) aug.at(r, c) = f.at(r, c);
    aug.at(r, f.cols() + r) = Scalar::one(fld);
  }
  Sheet s(aug);
  const auto pivots = rref(s, f.cols());
  const int rk = static_cast<int>(pivots.size());
  const int q = n - rk;
  VecSpace quot = make_space(fld, q, "q");
  LinMap proj(f.cod(), quot);
  for (int i = 0; i < q; ++i)
    for (int c = 0; c < n; ++c) proj.at(i, c) = s.at(rk + i, f.cols() + c);
  // A section: solve proj * sec = id, possible since proj has full row rank.
  LinMap sec = [&] {
    Sheet t(proj);
    // Augment with identity on the right and reduce; read the solution off
    // the pivot columns.
    LinMap aug2(make_space(fld, n + q), quot);
    for (int r = 0; r < q; ++r) {
      for (int c = 0; c < n; ++c) aug2.at(r, c) = proj.at(r, c);
      aug2.at(r, n + r) = Scalar::one(fld);
    }
    Sheet u(aug2);
    const auto piv = rref(u, n);
    if (static_cast<int>(piv.size()) != q) throw Singular("cokernel: projection rank");
    LinMap sol(quot, f.cod());
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) sol.at(piv[i], j) = u.at(i, n + j);
    return sol;
  }();
  return QuotientWitness{f.cod(), std::move(proj), std::move(sec)};
}

LinMap invert(const LinMap& f) {
  if (f.rows() != f.cols())
    throw NotSquare(std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
  const int n = f.rows();
  const Field fld = f.dom().field;
  LinMap aug(make_space(fld, 2 * n), f.cod());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = f.at(r, c);
    aug.at(r, n + r) = Scalar::one(fld);
  }
  Sheet s(aug);
  const auto pivots = rref(s, n);
  if (static_cast<int>(pivots.size()) != n) throw Singular("invert: rank deficient");
  LinMap inv(f.cod(), f.dom());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = s.at(r, n + c);
  return inv;
}

LinMap solve_columns(const LinMap& a, const LinMap& b) {
  if (a.cod() != b.cod()) throw DimMismatch("solve_columns: codomains");
  const int m = a.cols(), k = b.cols();
  const Field fld = a.dom().field;
  LinMap aug(make_space(fld, m + k), a.cod());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < m; ++c) aug.at(r, c) = a.at(r, c);
    for (int c = 0; c < k; ++c) aug.at(r, m + c) = b.at(r, c);
  }
  Sheet s(aug);
  const auto pivots = rref(s, m);
  const int rk = static_cast<int>(pivots.size());
  // Consistency: below the pivot rows the rhs must vanish.
  for (int r = rk; r < s.rows; ++r)
    for (int c = 0; c < k; ++c)
      if (!s.at(r, m + c).is_zero()) throw Singular("solve_columns: inconsistent system");
  LinMap x(b.dom(), a.dom());
  for (int i = 0; i < rk; ++i)
    for (int c = 0; c < k; ++c) x.at(pivots[i], c) = s.at(i, m + c);
  return x;
}

bool same_span(const LinMap& a, const LinMap& b) {
  if (a.cod() != b.cod()) return false;
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  LinMap joined(make_space(a.dom().field, a.cols() + b.cols()), a.cod());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) joined.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols(); ++c) joined.at(r, a.cols() + c) = b.at(r, c);
  }
  return rank(joined) == ra;
}

}  // namespace hopfcat
