#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hhext::formulas {

/// Parity of an integer; two integers agree iff they are congruent mod 2.
enum class Parity { even, odd };

inline Parity parity(long v) { return (v % 2 == 0) ? Parity::even : Parity::odd; }

/// Values of a closed form indexed by degree m.
struct DimTable {
  unsigned n = 0;
  std::uint32_t characteristic = 0;
  std::vector<std::pair<unsigned, mpz_class>> rows;
};

/// Binomial coefficient with C(0,0) = 1 and C(i,j) = 0 whenever i < j or j < 0.
mpz_class binom(long i, long j);

/// 2^k
mpz_class pow2(unsigned k);

/// Number of degree-m monomials in n commuting variables, C(n+m-1, n-1).
mpz_class monomial_count(unsigned n, unsigned m);

/// rank of the degree-m chain differential (m >= 1) as the double sum
///   sum_{i=1}^{n} C(n,i) sum_{0<=j<=i-1, j≡m} C(j+m-1, i-1) C(i-1, j)
/// for char != 2, and 0 in characteristic 2.
mpz_class chain_rank_double_sum(unsigned n, unsigned m, std::uint32_t characteristic);

/// Simplified chain rank for char != 2, m >= 1:
///   sum_{i=1}^{n-1} 2^{i-1} C(m+i-1, i) + [m even].
mpz_class chain_rank_closed_form(unsigned n, unsigned m);

/// Both sides of
///   sum_{i=j+1}^{n} C(n,i) C(j+m-1,i-1) C(i-1,j) = sum_{i=1}^{n-j} C(n-i,j) C(m+n-i-1,n-i)
/// for 0 <= j <= n-1 and m >= 1-j.
std::pair<mpz_class, mpz_class> binomial_identity_sides(unsigned n, long m, unsigned j);
bool binomial_identity_holds(unsigned n, long m, unsigned j);

/// rank of the cochain differential leaving degree m (m >= 0), double sum
///   sum_{i=1}^{n} C(n,i) sum_{0<=j<=i-1, j≡n+m} C(j+m, i-1) C(i-1, j)
/// for char != 2, 0 in characteristic 2.
mpz_class cochain_rank_double_sum(unsigned n, unsigned m, std::uint32_t characteristic);

/// Simplified cochain rank for char != 2:
///   sum_{i=1}^{n-1} 2^{i-1} C(m+i, i) + [n+m even].
mpz_class cochain_rank_closed_form(unsigned n, unsigned m);

/// rank_m + rank_{m+1} = 2^{n-1} C(m+n-1, n-1) on the closed chain form (m >= 1).
bool chain_rank_pair_sum_holds(unsigned n, unsigned m);
/// Cochain analogue: rank of the differentials entering and leaving degree m
/// sum to 2^{n-1} C(n+m-1, n-1) (m >= 1).
bool cochain_rank_pair_sum_holds(unsigned n, unsigned m);

/// dim HH_m: 2^n C(n+m-1,n-1) in char 2; otherwise 2^{n-1}+1 at m = 0 and
/// 2^{n-1} C(n+m-1,n-1) for m >= 1.
mpz_class hh_dim_formula(unsigned n, unsigned m, std::uint32_t characteristic);

/// dim HH^m: 2^n C(n+m-1,n-1) in char 2; otherwise 2^{n-1}+1 at m = 0 with n
/// odd, and 2^{n-1} C(n+m-1,n-1) in every other case.
mpz_class hhc_dim_formula(unsigned n, unsigned m, std::uint32_t characteristic);

/// dim HC_m in characteristic 0:
///   sum_{i=0}^{m} (-1)^{m-i} 2^{n-1} C(n+i-1,n-1) + [m even].
/// Throws DomainError for any other characteristic.
mpz_class hc_dim_formula(unsigned n, unsigned m, std::uint32_t characteristic = 0);

/// Checks, for every m <= hh.size()-1, the Connes-type recurrence
///   hc_m - hc_m(k) = -(hc_{m-1} - hc_{m-1}(k)) + hh_m - hh_m(k)
/// using hc from hc_dim_formula and the supplied Hochschild homology dims,
/// with hh_i(k) = [i = 0] and hc_m(k) = [m even].
bool cyclic_recurrence_holds(unsigned n, const std::vector<mpz_class>& hh);

/// First N+1 coefficients of the Hilbert series of HH^*: the expansion of
/// 2^{n-1}/(1-t)^n (+1 when n is odd) for char != 2, 2^n/(1-t)^n in char 2.
std::vector<mpz_class> hilbert_coeffs(unsigned n, std::uint32_t characteristic, unsigned N);

DimTable hh_table(unsigned n, std::uint32_t characteristic, unsigned m_max);
DimTable hhc_table(unsigned n, std::uint32_t characteristic, unsigned m_max);

}  // namespace hhext::formulas
