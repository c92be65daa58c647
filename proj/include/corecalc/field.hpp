#ifndef CORECALC_FIELD_HPP
#define CORECALC_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "corecalc/errors.hpp"

namespace corecalc {

using BigInt = boost::multiprecision::cpp_int;

constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Coefficient field descriptor: the rationals or a prime field F_p with
// p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }

  static Field prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      throw PreconditionError("field characteristic must be a prime < 2^31");
    return Field(p);
  }

  static Field prime_default() { return Field(kDefaultPrime); }

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field&) const = default;

  std::string description() const {
    return is_rationals() ? "QQ" : "F" + std::to_string(p_);
  }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;  // 0 encodes the rationals
};

namespace detail {

// Arbitrary-precision rational in lowest terms with positive denominator.
struct Rational {
  BigInt num;
  BigInt den;

  void normalize() {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    BigInt g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
};

// Residue in [0, p).
struct Residue {
  std::uint32_t value;
  std::uint32_t p;
};

inline std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp,
                             std::uint32_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw Error("division by zero in F_p");
  return mod_pow(a, p - 2, p);  // Fermat; p is prime
}

}  // namespace detail

// Exact scalar in one of the supported fields. Arithmetic between scalars
// of different fields is a caller error.
class FieldScalar {
 public:
  FieldScalar() : rep_(detail::Rational{0, 1}) {}

  static FieldScalar from_int(const Field& f, const BigInt& n) {
    if (f.is_rationals()) return FieldScalar(detail::Rational{n, 1});
    std::uint32_t p = f.characteristic();
    BigInt r = n % p;
    if (r < 0) r += p;
    return FieldScalar(detail::Residue{static_cast<std::uint32_t>(r), p});
  }

  static FieldScalar from_int(const Field& f, long long n) {
    return from_int(f, BigInt(n));
  }

  static FieldScalar zero(const Field& f) { return from_int(f, 0); }
  static FieldScalar one(const Field& f) { return from_int(f, 1); }

  static FieldScalar rational(const BigInt& num, const BigInt& den) {
    detail::Rational r{num, den};
    r.normalize();
    return FieldScalar(r);
  }

  Field field() const {
    if (auto* r = std::get_if<detail::Residue>(&rep_))
      return Field::prime(r->p);
    return Field::rationals();
  }

  bool is_zero() const {
    if (auto* r = std::get_if<detail::Residue>(&rep_)) return r->value == 0;
    return std::get<detail::Rational>(rep_).num == 0;
  }

  bool is_one() const {
    if (auto* r = std::get_if<detail::Residue>(&rep_)) return r->value == 1 % r->p;
    const auto& q = std::get<detail::Rational>(rep_);
    return q.num == 1 && q.den == 1;
  }

  FieldScalar operator-() const {
    if (auto* r = std::get_if<detail::Residue>(&rep_)) {
      return FieldScalar(detail::Residue{
          r->value == 0 ? 0 : r->p - r->value, r->p});
    }
    const auto& q = std::get<detail::Rational>(rep_);
    return FieldScalar(detail::Rational{-q.num, q.den});
  }

  FieldScalar operator+(const FieldScalar& o) const {
    if (auto* r = std::get_if<detail::Residue>(&rep_)) {
      const auto& s = residue_of(o);
      std::uint64_t v = std::uint64_t(r->value) + s.value;
      if (v >= r->p) v -= r->p;
      return FieldScalar(detail::Residue{static_cast<std::uint32_t>(v), r->p});
    }
    const auto& q = std::get<detail::Rational>(rep_);
    const auto& u = rational_of(o);
    detail::Rational out{q.num * u.den + u.num * q.den, q.den * u.den};
    out.normalize();
    return FieldScalar(out);
  }

  FieldScalar operator-(const FieldScalar& o) const { return *this + (-o); }

  FieldScalar operator*(const FieldScalar& o) const {
    if (auto* r = std::get_if<detail::Residue>(&rep_)) {
      const auto& s = residue_of(o);
      std::uint64_t v = std::uint64_t(r->value) * s.value % r->p;
      return FieldScalar(detail::Residue{static_cast<std::uint32_t>(v), r->p});
    }
    const auto& q = std::get<detail::Rational>(rep_);
    const auto& u = rational_of(o);
    detail::Rational out{q.num * u.num, q.den * u.den};
    out.normalize();
    return FieldScalar(out);
  }

  FieldScalar inverse() const {
    if (auto* r = std::get_if<detail::Residue>(&rep_))
      return FieldScalar(detail::Residue{detail::mod_inverse(r->value, r->p), r->p});
    const auto& q = std::get<detail::Rational>(rep_);
    if (q.num == 0) throw Error("division by zero");
    detail::Rational out{q.den, q.num};
    out.normalize();
    return FieldScalar(out);
  }

  FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }

  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  bool operator==(const FieldScalar& o) const {
    if (auto* r = std::get_if<detail::Residue>(&rep_)) {
      auto* s = std::get_if<detail::Residue>(&o.rep_);
      return s && r->p == s->p && r->value == s->value;
    }
    auto* u = std::get_if<detail::Rational>(&o.rep_);
    const auto& q = std::get<detail::Rational>(rep_);
    return u && q.num == u->num && q.den == u->den;
  }
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  std::string str() const {
    if (auto* r = std::get_if<detail::Residue>(&rep_))
      return std::to_string(r->value);
    const auto& q = std::get<detail::Rational>(rep_);
    if (q.den == 1) return q.num.str();
    return q.num.str() + "/" + q.den.str();
  }

 private:
  explicit FieldScalar(detail::Rational r) : rep_(std::move(r)) {}
  explicit FieldScalar(detail::Residue r) : rep_(r) {}

  const detail::Residue& residue_of(const FieldScalar& o) const {
    auto* s = std::get_if<detail::Residue>(&o.rep_);
    const auto& r = std::get<detail::Residue>(rep_);
    if (!s || s->p != r.p) throw PreconditionError("mixed coefficient fields");
    return *s;
  }

  const detail::Rational& rational_of(const FieldScalar& o) const {
    auto* u = std::get_if<detail::Rational>(&o.rep_);
    if (!u) throw PreconditionError("mixed coefficient fields");
    return *u;
  }

  std::variant<detail::Rational, detail::Residue> rep_;
};

// Parses an integer or a/b literal into the given field; used by the
// points file reader.
inline FieldScalar parse_field_literal(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return FieldScalar::from_int(f, BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (f.is_rationals()) return FieldScalar::rational(num, den);
    return FieldScalar::from_int(f, num) / FieldScalar::from_int(f, den);
  } catch (const std::exception& e) {
    throw ParseError("bad field literal '" + text + "'");
  }
}

}  // namespace corecalc

#endif  // CORECALC_FIELD_HPP
