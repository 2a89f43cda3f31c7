#include "hopfcat/linmap.hpp"

#include <numeric>
#include <sstream>

#include "hopfcat/error.hpp"

namespace hopfcat {

namespace {

std::vector<int> factor_dims(const std::vector<VecSpace>& spaces) {
  std::vector<int> d;
  d.reserve(spaces.size());
  for (const auto& s : spaces) d.push_back(s.dim());
  return d;
}

long long total_dim(const std::vector<int>& dims) {
  long long t = 1;
  for (int d : dims) t *= d;
  return t;
}

void decompose(long long idx, const std::vector<int>& dims, std::vector<int>& out) {
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % dims[i]);
    idx /= dims[i];
  }
}

VecSpace tensor_all(const std::vector<VecSpace>& spaces) {
  if (spaces.empty()) throw DimMismatch("empty factor list");
  VecSpace t = spaces[0];
  for (std::size_t i = 1; i < spaces.size(); ++i) t = tensor_space(t, spaces[i]);
  return t;
}

}  // namespace

LinMap::LinMap(VecSpace dom, VecSpace cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), rows_(cod_.dim()), cols_(dom_.dim()) {
  if (dom_.field != cod_.field)
    throw FieldMismatch("LinMap: " + dom_.field.str() + " vs " + cod_.field.str());
  a_.assign(static_cast<std::size_t>(rows_) * cols_, Scalar::zero(dom_.field));
}

LinMap LinMap::identity(const VecSpace& v) {
  LinMap m(v, v);
  for (int i = 0; i < v.dim(); ++i) m.at(i, i) = Scalar::one(v.field);
  return m;
}

LinMap LinMap::zero(const VecSpace& dom, const VecSpace& cod) { return LinMap(dom, cod); }

LinMap LinMap::column(const VecSpace& cod, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != cod.dim()) throw DimMismatch("column length");
  LinMap m(unit_space(cod.field), cod);
  for (int i = 0; i < cod.dim(); ++i) m.at(i, 0) = v[i];
  return m;
}

bool LinMap::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool LinMap::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

LinMap LinMap::operator+(const LinMap& o) const {
  if (dom_ != o.dom_ || cod_ != o.cod_) throw DimMismatch("LinMap +");
  LinMap r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

LinMap LinMap::operator-(const LinMap& o) const {
  if (dom_ != o.dom_ || cod_ != o.cod_) throw DimMismatch("LinMap -");
  LinMap r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

LinMap LinMap::operator-() const {
  LinMap r = *this;
  for (auto& s : r.a_) s = -s;
  return r;
}

LinMap LinMap::scaled(const Scalar& c) const {
  LinMap r = *this;
  for (auto& s : r.a_) s *= c;
  return r;
}

bool LinMap::operator==(const LinMap& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && a_ == o.a_;
}

LinMap LinMap::transpose() const {
  LinMap t(dual_space(cod_), dual_space(dom_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::string LinMap::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "[") << at(r, c).str();
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (g.dom() != f.cod())
    throw DimMismatch("compose: inner dims " + std::to_string(g.dom().dim()) + " vs " +
                      std::to_string(f.cod().dim()));
  LinMap r(f.dom(), g.cod());
  for (int c = 0; c < f.cols(); ++c)
    for (int k = 0; k < f.rows(); ++k) {
      const Scalar& fkc = f.at(k, c);
      if (fkc.is_zero()) continue;
      for (int row = 0; row < g.rows(); ++row) {
        const Scalar& grk = g.at(row, k);
        if (grk.is_zero()) continue;
        r.at(row, c) += grk * fkc;
      }
    }
  return r;
}


LinMap tensor_map(const LinMap& f, const LinMap& g) {
  if (f.dom().field != g.dom().field) throw FieldMismatch("tensor_map");
  LinMap r(tensor_space(f.dom(), g.dom()), tensor_space(f.cod(), g.cod()));
  const int gr = g.rows(), gc = g.cols();
  for (int fr = 0; fr < f.rows(); ++fr)
    for (int fc = 0; fc < f.cols(); ++fc) {
      const Scalar& a = f.at(fr, fc);
      if (a.is_zero()) continue;
      for (int r2 = 0; r2 < gr; ++r2)
        for (int c2 = 0; c2 < gc; ++c2) {
          const Scalar& b = g.at(r2, c2);
          if (b.is_zero()) continue;
          r.at(fr * gr + r2, fc * gc + c2) = a * b;
        }
    }
  return r;
}

LinMap dual_map(const LinMap& f) { return f.transpose(); }

LinMap swap_map(const VecSpace& a, const VecSpace& b) {
  LinMap m(tensor_space(a, b), tensor_space(b, a));
  const Scalar one = Scalar::one(a.field);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) m.at(j * a.dim() + i, i * b.dim() + j) = one;
  return m;
}

LinMap permute_factors(const std::vector<VecSpace>& spaces, const std::vector<int>& perm) {
  return permute_cod(LinMap::identity(tensor_all(spaces)), spaces, perm);
}

LinMap permute_cod(const LinMap& f, const std::vector<VecSpace>& spaces,
                   const std::vector<int>& perm) {
  const auto dims = factor_dims(spaces);
  if (total_dim(dims) != f.rows()) throw DimMismatch("permute_cod: factors vs rows");
  if (perm.size() != spaces.size()) throw DimMismatch("permute_cod: perm size");
  std::vector<VecSpace> new_spaces;
  new_spaces.reserve(perm.size());
  for (int p : perm) new_spaces.push_back(spaces[p]);
  LinMap r(f.dom(), tensor_all(new_spaces));

  const int n = static_cast<int>(dims.size());
  std::vector<int> multi(n);
  for (int row = 0; row < f.rows(); ++row) {
    decompose(row, dims, multi);
    long long nr = 0;
    for (int j = 0; j < n; ++j) nr = nr * dims[perm[j]] + multi[perm[j]];
    for (int c = 0; c < f.cols(); ++c) {
      const Scalar& v = f.at(row, c);
      if (!v.is_zero()) r.at(static_cast<int>(nr), c) = v;
    }
  }
  return r;
}

LinMap apply_cod(const LinMap& f, const std::vector<VecSpace>& cod_factors, int pos, int count,
                 const LinMap& g) {
  const auto dims = factor_dims(cod_factors);
  if (total_dim(dims) != f.rows()) throw DimMismatch("apply_cod: factors vs rows");
  long long pre = 1, mid = 1, post = 1;
  for (int i = 0; i < pos; ++i) pre *= dims[i];
  for (int i = pos; i < pos + count; ++i) mid *= dims[i];
  for (int i = pos + count; i < static_cast<int>(dims.size()); ++i) post *= dims[i];
  if (mid != g.cols()) throw DimMismatch("apply_cod: block vs g.dom");

  std::vector<VecSpace> out_factors;
  for (int i = 0; i < pos; ++i) out_factors.push_back(cod_factors[i]);
  out_factors.push_back(g.cod());
  for (std::size_t i = pos + count; i < cod_factors.size(); ++i)
    out_factors.push_back(cod_factors[i]);
  LinMap r(f.dom(), tensor_all(out_factors));

  const long long gr = g.rows();
  for (int c = 0; c < f.cols(); ++c)
    for (long long a = 0; a < pre; ++a)
      for (long long k = 0; k < mid; ++k)
        for (long long b = 0; b < post; ++b) {
          const Scalar& v = f.at(static_cast<int>((a * mid + k) * post + b), c);
          if (v.is_zero()) continue;
          for (long long row = 0; row < gr; ++row) {
            const Scalar& w = g.at(static_cast<int>(row), static_cast<int>(k));
            if (w.is_zero()) continue;
            r.at(static_cast<int>((a * gr + row) * post + b), c) += w * v;
          }
        }
  return r;
}

LinMap apply_dom(const LinMap& f, const std::vector<VecSpace>& dom_factors, int pos, int count,
                 const LinMap& g) {
  const auto dims = factor_dims(dom_factors);
  if (total_dim(dims) != f.cols()) throw DimMismatch("apply_dom: factors vs cols");
  long long pre = 1, mid = 1, post = 1;
  for (int i = 0; i < pos; ++i) pre *= dims[i];
  for (int i = pos; i < pos + count; ++i) mid *= dims[i];
  for (int i = pos + count; i < static_cast<int>(dims.size()); ++i) post *= dims[i];
  if (mid != g.rows()) throw DimMismatch("apply_dom: block vs g.cod");

  std::vector<VecSpace> in_factors;
  for (int i = 0; i < pos; ++i) in_factors.push_back(dom_factors[i]);
  in_factors.push_back(g.dom());
  for (std::size_t i = pos + count; i < dom_factors.size(); ++i)
    in_factors.push_back(dom_factors[i]);
  LinMap r(tensor_all(in_factors), f.cod());

  const long long gc = g.cols();
  for (long long a = 0; a < pre; ++a)
    for (long long j = 0; j < gc; ++j)
      for (long long k = 0; k < mid; ++k) {
        const Scalar& w = g.at(static_cast<int>(k), static_cast<int>(j));
        if (w.is_zero()) continue;
        for (long long b = 0; b < post; ++b) {
          const int src = static_cast<int>((a * mid + k) * post + b);
          const int dst = static_cast<int>((a * gc + j) * post + b);
          for (int row = 0; row < f.rows(); ++row) {
            const Scalar& v = f.at(row, src);
            if (v.is_zero()) continue;
            r.at(row, dst) += v * w;
          }
        }
      }
  return r;
}

LinMap from_columns(const VecSpace& dom, const VecSpace& cod,
                    const std::function<std::vector<Scalar>(int)>& col) {
  LinMap r(dom, cod);
  for (int c = 0; c < dom.dim(); ++c) {
    auto v = col(c);
    if (static_cast<int>(v.size()) != cod.dim()) throw DimMismatch("from_columns");
    for (int i = 0; i < cod.dim(); ++i) r.at(i, c) = std::move(v[i]);
  }
  return r;
}

}  // namespace hopfcat
