#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hhext/exterior.hpp"
#include "hhext/resolution.hpp"
#include "hhext/sparse_matrix.hpp"

namespace hhext::complexes {

using exactla::Field;
using exactla::SparseMatrix;
using exterior::Monomial;
using resolution::ExponentVector;

/// λ ⊗ x^e, a basis element of Λ ⊗ k[x_1..x_n]_m.
struct ChainBasisElement {
  Monomial lambda;
  ExponentVector e;

  unsigned degree() const { return lambda.degree(); }
  unsigned total_degree() const { return lambda.degree() + e.degree(); }
  /// Indices of λ together with the indices where e is nonzero.
  std::uint32_t support() const { return lambda.mask() | e.support_mask(); }
  unsigned grade() const;
  /// Sum of the positive exponents of λ·x^{-e} (viewed as a Laurent monomial).
  unsigned positive_degree() const;
  /// Minus the sum of the negative exponents of λ·x^{-e}.
  unsigned negative_degree() const;
};

/// Canonical ordering of the basis of Λ ⊗ k[x]_m: monomial order on λ, then
/// lexicographic on e.
class ChainBasis {
 public:
  ChainBasis(unsigned n, unsigned m);

  unsigned n() const noexcept { return n_; }
  unsigned m() const noexcept { return m_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const ChainBasisElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<ChainBasisElement>& elements() const noexcept { return elements_; }

  /// Position of λ ⊗ x^e; throws DomainError if e has the wrong degree.
  std::size_t index_of(Monomial lambda, const ExponentVector& e) const;

 private:
  unsigned n_, m_;
  std::vector<ChainBasisElement> elements_;
  std::vector<std::uint32_t> monomial_pos_;
  std::map<ExponentVector, std::uint32_t> exponent_pos_;
  std::size_t exponent_count_;
};

enum class SliceKind { chain, cochain };

/// One differential of the small complexes, with its source and target bases.
/// Chain slice at m: N_m -> N_{m-1}. Cochain slice at m: N^m -> N^{m+1}.
struct ComplexSlice {
  unsigned n;
  unsigned m;
  Field field;
  SliceKind kind;
  ChainBasis source;
  ChainBasis target;
  SparseMatrix matrix;
};

/// σ_m: λ ⊗ x^e ↦ ((-1)^j + (-1)^m) Σ_{h: e_h ≥ 1} (-1)^{μ_λ(h)} N(λx_h) ⊗ x^{e-δ_h}, m >= 1.
ComplexSlice chain_matrix(unsigned n, unsigned m, Field field);

/// σ^{m+1}: λ ⊗ x^e ↦ (1 + (-1)^{m+j+1}) Σ_h (-1)^{μ_λ(h)} N(x_hλ) ⊗ x^{e+δ_h}, m >= 0.
ComplexSlice cochain_matrix(unsigned n, unsigned m, Field field);

/// dim N_m = 2^n C(n+m-1, n-1)
std::size_t chain_space_dim(unsigned n, unsigned m);

std::size_t chain_rank(unsigned n, unsigned m, Field field);
/// rank of the cochain differential leaving degree m
std::size_t cochain_rank(unsigned n, unsigned m, Field field);

/// dim HH_m from ranks of the chain differentials.
std::size_t hh_dim_computed(unsigned n, unsigned m, Field field);
/// dim HH^m from ranks of the cochain differentials.
std::size_t hhc_dim_computed(unsigned n, unsigned m, Field field);

/// Every nonzero entry joins basis elements of equal grade.
bool preserves_grade(const ComplexSlice& slice);
/// Every nonzero entry joins basis elements with equal positive and negative degree.
bool preserves_signed_degrees(const ComplexSlice& slice);

/// σ_m σ_{m+1} = 0 for 1 <= m <= m_max and σ^{m+1} σ^m = 0 for 1 <= m <= m_max.
bool verify_sigma_squared_zero(unsigned n, unsigned m_max, Field field);

/// Default cap on the largest bar-complex dimension the oracle will build.
inline constexpr std::size_t kDefaultOracleCap = 20000;

/// The normalized (reduced) Hochschild complexes of Λ, built from the bar
/// resolution without any use of f^m. Chains Λ ⊗ Λ̄^{⊗m}, cochains
/// Hom(Λ̄^{⊗m}, Λ); both have dimension 2^n (2^n - 1)^m.
class BarComplex {
 public:
  BarComplex(unsigned n, Field field);

  unsigned n() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  std::size_t dim(unsigned m) const;

  /// b_m: C_m -> C_{m-1}, m >= 1.
  SparseMatrix chain_differential(unsigned m) const;
  /// d^m: C^m -> C^{m+1}, m >= 0.
  SparseMatrix cochain_differential(unsigned m) const;

 private:
  unsigned n_;
  Field field_;
};

struct OracleDims {
  unsigned m;
  std::size_t homology;
  std::size_t cohomology;
};

/// Hochschild (co)homology dimensions for m = 0..m_max via the bar oracle.
/// Throws InfeasibleError when 2^n (2^n - 1)^{m_max+1} exceeds `cap`.
std::vector<OracleDims> bar_oracle_dims(unsigned n, unsigned m_max, Field field,
                                        std::size_t cap = kDefaultOracleCap);

/// b_m b_{m+1} = 0 and d^{m+1} d^m = 0 on the bar complexes for m <= m_max.
bool verify_bar_squared_zero(unsigned n, unsigned m_max, Field field,
                             std::size_t cap = kDefaultOracleCap);

}  // namespace hhext::complexes
