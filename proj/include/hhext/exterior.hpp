#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhext/field.hpp"

namespace hhext::exterior {

using exactla::Field;
using exactla::Scalar;

/// Largest supported generator count; monomials are stored as bit masks.
inline constexpr unsigned kMaxGenerators = 30;

/// Throws DomainError unless 2 <= n <= kMaxGenerators.
void check_generator_count(unsigned n);

/// Basis element x_{t1}...x_{ti} (t1 < ... < ti) of the exterior algebra on
/// x_1..x_n. Index h is stored at bit h-1.
///
/// Ordered by length, then lexicographically on the index sequence, with
/// x_1 < x_2 < ... < x_n.
class Monomial {
 public:
  Monomial() = default;

  static Monomial identity(unsigned n);
  static Monomial generator(unsigned n, unsigned h);
  /// Indices must be strictly increasing and within [1, n].
  static Monomial from_indices(unsigned n, const std::vector<unsigned>& indices);
  static Monomial from_mask(unsigned n, std::uint32_t mask);
  /// x_1 x_2 ... x_n
  static Monomial top(unsigned n);

  unsigned n() const noexcept { return n_; }
  std::uint32_t mask() const noexcept { return mask_; }
  unsigned degree() const noexcept;
  bool is_identity() const noexcept { return mask_ == 0; }
  bool contains(unsigned h) const noexcept { return h >= 1 && h <= 32 && (mask_ >> (h - 1)) & 1U; }
  std::vector<unsigned> indices() const;

  /// "1", "x1", "x1x3", ...
  std::string to_string() const;

  friend bool operator==(Monomial a, Monomial b) = default;
  friend std::strong_ordering operator<=>(Monomial a, Monomial b);

 private:
  Monomial(unsigned n, std::uint32_t mask) : mask_(mask), n_(static_cast<std::uint8_t>(n)) {}

  std::uint32_t mask_ = 0;
  std::uint8_t n_ = 0;
};

/// All 2^n monomials in increasing order.
std::vector<Monomial> monomial_basis(unsigned n);

/// Position of each mask inside monomial_basis(n).
std::vector<std::uint32_t> monomial_positions(unsigned n);

struct SignedMonomial {
  int sign;
  Monomial monomial;
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// |{t in lambda : t < h}|; throws DomainError for h outside [1, n].
unsigned mu_count(Monomial lambda, unsigned h);

/// (-1)^{mu_count(lambda, h)} together with the sorted monomial lambda ∪ {h};
/// empty when h already divides lambda. The sign is the one picked up by
/// moving x_h into place from the left, i.e. x_h * lambda.
std::optional<SignedMonomial> signed_append(Monomial lambda, unsigned h);

/// a * b in the exterior algebra; empty when a and b share an index.
std::optional<SignedMonomial> multiply(Monomial a, Monomial b);

/// Finite linear combination of monomials with coefficients in one field.
class Element {
 public:
  Element(unsigned n, Field field);

  static Element monomial(Monomial m, Field field, long coefficient = 1);
  static Element monomial(Monomial m, const Scalar& coefficient);
  static Element one(unsigned n, Field field) { return monomial(Monomial::identity(n), field); }
  static Element generator(unsigned n, unsigned h, Field field) {
    return monomial(Monomial::generator(n, h), field);
  }

  unsigned n() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(Monomial m) const;

  void add_term(Monomial m, const Scalar& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }

  friend bool operator==(const Element& a, const Element& b);

  std::string to_string() const;

 private:
  void check_compatible(const Element& o) const;

  unsigned n_;
  Field field_;
  std::map<Monomial, Scalar> terms_;
};

/// Bilinear product; throws DomainError when n or the field differ.
Element mult(const Element& a, const Element& b);

bool commutes(const Element& a, const Element& b);

/// Monomial basis of the center for char != 2: even-degree monomials, plus
/// x_1...x_n when n is odd. Each candidate is tested against every x_h.
std::vector<Monomial> center_basis(unsigned n, Field field);

/// dim Λ/[Λ,Λ], from the rank of the span of all commutators of basis pairs.
std::size_t commutator_quotient_dim(unsigned n, Field field);

}  // namespace hhext::exterior
