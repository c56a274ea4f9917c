#pragma once

// Coefficient fields: exact rationals (GMP) and prime fields Z/pZ.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace detachgb {

/// Exact rational coefficient. mpq_class keeps values canonical after
/// every arithmetic operation (lowest terms, positive denominator).
using Rational = mpq_class;

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_one(const Rational& c) { return c == 1; }
inline std::string to_string(const Rational& c) { return c.get_str(); }

/// Residue modulo a prime. The modulus travels with the value so that
/// binary operations need no external context.
class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    value_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  friend Zp operator+(Zp a, Zp b) {
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return from_raw(static_cast<std::uint32_t>(s), a.modulus_);
  }
  friend Zp operator-(Zp a, Zp b) {
    return from_raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.modulus_ - (b.value_ - a.value_),
                    a.modulus_);
  }
  friend Zp operator*(Zp a, Zp b) {
    return from_raw(static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_),
                    a.modulus_);
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return from_raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }
  friend bool operator==(Zp a, Zp b) { return a.value_ == b.value_; }

  Zp inverse() const {
    if (value_ == 0) throw std::domain_error("division by zero in Z/pZ");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = modulus_, new_r = value_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    return Zp(t, modulus_);
  }

 private:
  static Zp from_raw(std::uint32_t v, std::uint32_t p) {
    Zp z;
    z.value_ = v;
    z.modulus_ = p;
    return z;
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline bool is_zero(const Zp& c) { return c.value() == 0; }
inline bool is_one(const Zp& c) { return c.value() == 1; }
inline std::string to_string(const Zp& c) { return std::to_string(c.value()); }
inline std::ostream& operator<<(std::ostream& os, const Zp& c) { return os << c.value(); }

template <class C>
concept FieldElement = std::copyable<C> && requires(const C& a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a / b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Description of the coefficient field of a ring: modulus 0 means Q.
struct FieldSpec {
  std::uint32_t modulus = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) {
    if (p <= 2 || !is_prime(p))
      throw std::invalid_argument("field modulus must be a prime > 2, got " + std::to_string(p));
    return {p};
  }
  bool is_rational() const { return modulus == 0; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Builds constants of C from integers and integer fractions.
template <FieldElement C>
struct CoefficientFactory;

template <>
struct CoefficientFactory<Rational> {
  static Rational make(const FieldSpec&, const mpz_class& num, const mpz_class& den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  static Rational make(const FieldSpec& f, long n) { return make(f, mpz_class(n)); }
};

template <>
struct CoefficientFactory<Zp> {
  static Zp make(const FieldSpec& f, const mpz_class& num, const mpz_class& den = 1) {
    if (f.modulus == 0) throw std::logic_error("prime field coefficient without modulus");
    mpz_class p = f.modulus;
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(f.modulus));
    return Zp(static_cast<std::int64_t>(n.get_si()), f.modulus) /
           Zp(static_cast<std::int64_t>(d.get_si()), f.modulus);
  }
  static Zp make(const FieldSpec& f, long n) { return make(f, mpz_class(n)); }
};

}  // namespace detachgb
