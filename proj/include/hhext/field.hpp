#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hhext::exactla {

/// The ground field: Q (characteristic 0) or F_p for a prime p.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws DomainError unless p is prime.
  static Field prime(std::uint32_t p);
  /// 0 selects Q, anything else must be prime.
  static Field of_characteristic(std::uint32_t c);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t p);

/// An element of a Field. Rationals are kept canonical (reduced, positive
/// denominator); residues live in [0, p).
class Scalar {
 public:
  /// The zero of Q.
  Scalar() : field_(), value_(mpq_class(0)) {}
  explicit Scalar(Field f);

  static Scalar from_int(Field f, long v);
  static Scalar from_mpz(Field f, const mpz_class& v);
  static Scalar from_rational(const mpq_class& q);
  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return from_int(f, 1); }

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid for rational scalars.
  const mpq_class& rational() const;
  /// Only valid for prime-field scalars.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace hhext::exactla
