#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hhext/exterior.hpp"

namespace hhext::resolution {

using exactla::Field;
using exterior::Monomial;

/// (i_1, ..., i_n) in N^n. Indexes resolution generators and commutative
/// monomials x_1^{i_1}...x_n^{i_n}. Compared lexicographically.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> exps);

  static ExponentVector zero(unsigned n) { return ExponentVector(std::vector<std::uint32_t>(n, 0)); }
  /// Unit vector at generator h (1-based).
  static ExponentVector unit(unsigned n, unsigned h);
  /// e^2_{st}: +1 at s and at t, so 2 at s when s == t.
  static ExponentVector pair(unsigned n, unsigned s, unsigned t);

  unsigned n() const noexcept { return static_cast<unsigned>(exps_.size()); }
  unsigned degree() const noexcept { return degree_; }
  /// 1-based exponent of x_h.
  std::uint32_t operator()(unsigned h) const { return exps_.at(h - 1); }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  ExponentVector plus_unit(unsigned h) const;
  /// Empty when the exponent of x_h is already 0.
  std::optional<ExponentVector> minus_unit(unsigned h) const;
  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

  /// Indices h with a nonzero exponent.
  std::uint32_t support_mask() const noexcept;

  std::string to_string() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
  unsigned degree_ = 0;
};

/// All exponent vectors of degree m in increasing lexicographic order.
std::vector<ExponentVector> exponent_vectors(unsigned n, unsigned m);

/// A word x_{w_1}...x_{w_m} in the free algebra, letters 1-based.
using Word = std::vector<std::uint8_t>;

/// Homogeneous element of the free algebra k<x_1..x_n>_m with integer
/// coefficients.
class FreeElement {
 public:
  FreeElement(unsigned n, unsigned degree);

  static FreeElement one(unsigned n);
  static FreeElement generator(unsigned n, unsigned h);

  unsigned n() const noexcept { return n_; }
  unsigned degree() const noexcept { return degree_; }
  const std::map<Word, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Word& w, const mpz_class& c);
  FreeElement& operator+=(const FreeElement& o);

  /// this * x_h
  FreeElement times_generator(unsigned h) const;
  /// x_h * this
  FreeElement generator_times(unsigned h) const;

  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  unsigned n_;
  unsigned degree_;
  std::map<Word, mpz_class> terms_;
};

/// Memo table of f^m elements for one n. Safe for concurrent readers and
/// writers; each key is computed by a single writer.
class FElementCache {
 public:
  explicit FElementCache(unsigned n);
  ~FElementCache();

  unsigned n() const noexcept { return n_; }
  std::shared_ptr<const FreeElement> get(const ExponentVector& e);

 private:
  struct State;
  unsigned n_;
  std::unique_ptr<State> state_;
};

/// f^m_e, built by f^m = sum_h f^{m-1}_{e - δ_h} x_h from f^0 = 1. Uses a
/// process-wide cache per n.
FreeElement build_f(unsigned n, const ExponentVector& e);

/// Every word of f uses x_h exactly e(h) times.
bool has_multidegree(const FreeElement& f, const ExponentVector& e);

/// Distinct coefficients occurring in the f^m family, ascending.
std::vector<mpz_class> observed_coefficients(unsigned n, unsigned m);

/// One summand sign * left ⊗ f̃^{m-1}_target ⊗ right of δ_m(f̃^m_source).
struct Summand {
  int sign;
  Monomial left;
  ExponentVector target;
  Monomial right;
};

/// δ_m(f̃^m_e) = sum_h (x_h f̃^{m-1}_{e-δ_h} + (-1)^m f̃^{m-1}_{e-δ_h} x_h),
/// skipping h with e(h) = 0.
struct ResolutionGeneratorMap {
  unsigned n;
  unsigned degree;  // source degree m
  std::map<ExponentVector, std::vector<Summand>> entries;
};

/// Requires m >= 1.
ResolutionGeneratorMap resolution_map(unsigned n, unsigned m);

/// sum_h f^{m-1} x_h == sum_h x_h f^{m-1} for every exponent vector of degree m.
bool verify_left_right(unsigned n, unsigned m);

/// f^m lies in X^p R X^q for every split p + q = m - 2 (m >= 2).
bool verify_Km_membership(unsigned n, unsigned m);

/// The f^m family is linearly independent and has C(n+m-1, n-1) members.
bool verify_dim_Km(unsigned n, unsigned m);

/// δ_m ∘ δ_{m+1} = 0, composed as bimodule maps with products taken in Λ
/// (m >= 1).
bool verify_delta_squared_zero(unsigned n, unsigned m, Field field);

}  // namespace hhext::resolution
