#include "hopfcat/scalar.hpp"

#include <charconv>

namespace hopfcat {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b = mod_reduce(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw Error("not a prime: " + std::to_string(p));
  return Field{p};
}

Scalar Scalar::of_int(Field f, long v) {
  Scalar s(f);
  if (f.p == 0)
    s.q_ = v;
  else
    s.v_ = mod_reduce(v, f.p);
  return s;
}

Scalar Scalar::of_mpq(mpq_class q) {
  Scalar s{rationals()};
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::of_string(Field f, std::string_view sv) {
  std::string text(sv);
  if (text.empty()) throw ParseError("empty scalar");
  if (f.p == 0) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    return of_mpq(q);
  }
  // F_p accepts integers and a/b with b invertible.
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& t) -> std::int64_t {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw ParseError("bad integer '" + t + "'");
    return v;
  };
  if (slash == std::string::npos) return of_int(f, parse_int(text));
  Scalar num = of_int(f, parse_int(text.substr(0, slash)));
  Scalar den = of_int(f, parse_int(text.substr(slash + 1)));
  return num * den.inverse();
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : v_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : v_ == 1 % static_cast<std::int64_t>(p_); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = -q_;
  else
    r.v_ = v_ == 0 ? 0 : static_cast<std::int64_t>(p_) - v_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ += o.q_;
  else
    v_ = (v_ + o.v_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ -= o.q_;
  else
    v_ = mod_reduce(v_ - o.v_, p_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    v_ = v_ * o.v_ % p_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Singular("inverse of zero");
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = 1 / q_;
  else
    r.v_ = mod_pow(v_, static_cast<std::int64_t>(p_) - 2, p_);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : v_ == o.v_;
}

std::string Scalar::str() const {
  return p_ == 0 ? q_.get_str() : std::to_string(v_);
}

}  // namespace hopfcat
