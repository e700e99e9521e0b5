#include "hhext/formulas.hpp"

#include <string>

#include "hhext/error.hpp"

namespace hhext::formulas {

namespace {

void check_n(unsigned n) {
  if (n < 2) throw DomainError("generator count n = " + std::to_string(n) + " must be at least 2");
}

bool same_parity(long a, long b) { return parity(a) == parity(b); }

}  // namespace

mpz_class binom(long i, long j) {
  if (j < 0 || i < j) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
  return r;
}

mpz_class pow2(unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

mpz_class monomial_count(unsigned n, unsigned m) {
  return binom(static_cast<long>(n) + m - 1, static_cast<long>(n) - 1);
}

mpz_class chain_rank_double_sum(unsigned n, unsigned m, std::uint32_t characteristic) {
  check_n(n);
  if (m < 1) throw DomainError("chain rank needs m >= 1");
  if (characteristic == 2) return 0;
  mpz_class total = 0;
  for (long i = 1; i <= static_cast<long>(n); ++i) {
    mpz_class inner = 0;
    for (long j = 0; j <= i - 1; ++j)
      if (same_parity(j, m)) inner += binom(j + m - 1, i - 1) * binom(i - 1, j);
    total += binom(n, i) * inner;
  }
  return total;
}

mpz_class chain_rank_closed_form(unsigned n, unsigned m) {
  check_n(n);
  if (m < 1) throw DomainError("chain rank needs m >= 1");
  mpz_class total = 0;
  for (long i = 1; i <= static_cast<long>(n) - 1; ++i)
    total += pow2(static_cast<unsigned>(i - 1)) * binom(static_cast<long>(m) + i - 1, i);
  if (m % 2 == 0) total += 1;
  return total;
}

std::pair<mpz_class, mpz_class> binomial_identity_sides(unsigned n, long m, unsigned j) {
  check_n(n);
  if (j > n - 1) throw DomainError("identity needs 0 <= j <= n-1");
  if (m < 1 - static_cast<long>(j)) throw DomainError("identity needs m >= 1-j");
  const long jl = j, nl = n;
  mpz_class lhs = 0, rhs = 0;
  for (long i = jl + 1; i <= nl; ++i) lhs += binom(nl, i) * binom(jl + m - 1, i - 1) * binom(i - 1, jl);
  for (long i = 1; i <= nl - jl; ++i) rhs += binom(nl - i, jl) * binom(m + nl - i - 1, nl - i);
  return {lhs, rhs};
}

bool binomial_identity_holds(unsigned n, long m, unsigned j) {
  auto [lhs, rhs] = binomial_identity_sides(n, m, j);
  return lhs == rhs;
}

mpz_class cochain_rank_double_sum(unsigned n, unsigned m, std::uint32_t characteristic) {
  check_n(n);
  if (characteristic == 2) return 0;
  mpz_class total = 0;
  for (long i = 1; i <= static_cast<long>(n); ++i) {
    mpz_class inner = 0;
    for (long j = 0; j <= i - 1; ++j)
      if (same_parity(j, static_cast<long>(n) + m)) inner += binom(j + m, i - 1) * binom(i - 1, j);
    total += binom(n, i) * inner;
  }
  return total;
}

mpz_class cochain_rank_closed_form(unsigned n, unsigned m) {
  check_n(n);
  mpz_class total = 0;
  for (long i = 1; i <= static_cast<long>(n) - 1; ++i)
    total += pow2(static_cast<unsigned>(i - 1)) * binom(static_cast<long>(m) + i, i);
  if ((n + m) % 2 == 0) total += 1;
  return total;
}

bool chain_rank_pair_sum_holds(unsigned n, unsigned m) {
  return chain_rank_closed_form(n, m) + chain_rank_closed_form(n, m + 1) ==
         pow2(n - 1) * monomial_count(n, m);
}

bool cochain_rank_pair_sum_holds(unsigned n, unsigned m) {
  if (m < 1) throw DomainError("cochain pair sum needs m >= 1");
  return cochain_rank_closed_form(n, m - 1) + cochain_rank_closed_form(n, m) ==
         pow2(n - 1) * monomial_count(n, m);
}

mpz_class hh_dim_formula(unsigned n, unsigned m, std::uint32_t characteristic) {
  check_n(n);
  if (characteristic == 2) return pow2(n) * monomial_count(n, m);
  if (m == 0) return pow2(n - 1) + 1;
  return pow2(n - 1) * monomial_count(n, m);
}

mpz_class hhc_dim_formula(unsigned n, unsigned m, std::uint32_t characteristic) {
  check_n(n);
  if (characteristic == 2) return pow2(n) * monomial_count(n, m);
  if (m == 0 && n % 2 == 1) return pow2(n - 1) + 1;
  return pow2(n - 1) * monomial_count(n, m);
}

mpz_class hc_dim_formula(unsigned n, unsigned m, std::uint32_t characteristic) {
  check_n(n);
  if (characteristic != 0)
    throw DomainError("cyclic homology formula only holds in characteristic 0");
  mpz_class total = 0;
  for (unsigned i = 0; i <= m; ++i) {
    mpz_class term = pow2(n - 1) * monomial_count(n, i);
    if ((m - i) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  if (m % 2 == 0) total += 1;
  return total;
}

bool cyclic_recurrence_holds(unsigned n, const std::vector<mpz_class>& hh) {
  mpz_class previous = 0;  // hc_{m-1}(Λ) - hc_{m-1}(k), zero before m = 0
  for (unsigned m = 0; m < hh.size(); ++m) {
    const mpz_class hc_k = (m % 2 == 0) ? 1 : 0;
    const mpz_class hh_k = (m == 0) ? 1 : 0;
    const mpz_class current = hc_dim_formula(n, m, 0) - hc_k;
    if (current != -previous + (hh[m] - hh_k)) return false;
    previous = current;
  }
  return true;
}

std::vector<mpz_class> hilbert_coeffs(unsigned n, std::uint32_t characteristic, unsigned N) {
  check_n(n);
  const mpz_class numerator = characteristic == 2 ? pow2(n) : pow2(n - 1);
  std::vector<mpz_class> out;
  out.reserve(N + 1);
  for (unsigned m = 0; m <= N; ++m) out.push_back(numerator * monomial_count(n, m));
  if (characteristic != 2 && n % 2 == 1) out[0] += 1;
  return out;
}

DimTable hh_table(unsigned n, std::uint32_t characteristic, unsigned m_max) {
  DimTable t{n, characteristic, {}};
  for (unsigned m = 0; m <= m_max; ++m) t.rows.emplace_back(m, hh_dim_formula(n, m, characteristic));
  return t;
}

DimTable hhc_table(unsigned n, std::uint32_t characteristic, unsigned m_max) {
  DimTable t{n, characteristic, {}};
  for (unsigned m = 0; m <= m_max; ++m)
    t.rows.emplace_back(m, hhc_dim_formula(n, m, characteristic));
  return t;
}

}  // namespace hhext::formulas
