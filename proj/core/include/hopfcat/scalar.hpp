#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "hopfcat/error.hpp"

namespace hopfcat {

/// Coefficient field descriptor: p == 0 means Q, otherwise the prime field F_p.
struct Field {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const { return p == 0 ? "Q" : "Fp " + std::to_string(p); }
};

inline Field rationals() { return Field{0}; }
Field prime_field(std::uint32_t p);

/// An exact field element: a rational in lowest terms, or a residue in [0, p).
/// Mixed-field arithmetic is rejected.
class Scalar {
 public:
  Scalar() : p_(0) {}  // rational zero

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return of_int(f, 1); }
  static Scalar of_int(Field f, long v);
  static Scalar of_mpq(mpq_class q);
  /// Accepts "a", "-a", "a/b".
  static Scalar of_string(Field f, std::string_view s);

  Field field() const { return Field{p_}; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;  // throws Singular on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  const mpq_class& rational() const { return q_; }
  std::int64_t residue() const { return v_; }

 private:
  explicit Scalar(Field f) : p_(f.p) {}
  void check_same(const Scalar& o) const {
    if (p_ != o.p_) throw FieldMismatch(field().str() + " vs " + o.field().str());
  }

  std::uint32_t p_;       // 0 = Q
  std::int64_t v_ = 0;    // residue when p_ > 0
  mpq_class q_;           // value when p_ == 0
};

}  // namespace hopfcat
