#include "hhext/complexes.hpp"

#include <bit>
#include <limits>
#include <string>

#include "hhext/error.hpp"
#include "hhext/formulas.hpp"
#include "hhext/linalg.hpp"

namespace hhext::complexes {

unsigned ChainBasisElement::grade() const { return static_cast<unsigned>(std::popcount(support())); }

unsigned ChainBasisElement::positive_degree() const {
  return static_cast<unsigned>(std::popcount(lambda.mask() & ~e.support_mask()));
}

unsigned ChainBasisElement::negative_degree() const {
  unsigned total = 0;
  for (unsigned h = 1; h <= e.n(); ++h) {
    const unsigned in_lambda = lambda.contains(h) ? 1 : 0;
    if (e(h) > in_lambda) total += e(h) - in_lambda;
  }
  return total;
}

ChainBasis::ChainBasis(unsigned n, unsigned m)
    : n_(n), m_(m), monomial_pos_(exterior::monomial_positions(n)) {
  const auto monomials = exterior::monomial_basis(n);
  const auto exps = resolution::exponent_vectors(n, m);
  exponent_count_ = exps.size();
  for (std::size_t i = 0; i < exps.size(); ++i)
    exponent_pos_.emplace(exps[i], static_cast<std::uint32_t>(i));
  elements_.reserve(monomials.size() * exps.size());
  for (Monomial lambda : monomials)
    for (const auto& e : exps) elements_.push_back({lambda, e});
}

std::size_t ChainBasis::index_of(Monomial lambda, const ExponentVector& e) const {
  auto it = exponent_pos_.find(e);
  if (it == exponent_pos_.end() || lambda.n() != n_)
    throw DomainError("basis element " + lambda.to_string() + " ⊗ " + e.to_string() +
                      " is not in N_" + std::to_string(m_));
  return monomial_pos_[lambda.mask()] * exponent_count_ + it->second;
}

namespace {

int sign_of(unsigned k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

ComplexSlice chain_matrix(unsigned n, unsigned m, Field field) {
  exterior::check_generator_count(n);
  if (m < 1) throw DomainError("chain differential needs m >= 1");
  ChainBasis source(n, m), target(n, m - 1);
  SparseMatrix::Builder b(target.size(), source.size(), field);
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& [lambda, e] = source[col];
    const int factor = sign_of(lambda.degree()) + sign_of(m);
    if (factor == 0) continue;
    for (unsigned h = 1; h <= n; ++h) {
      auto lowered = e.minus_unit(h);
      if (!lowered) continue;
      auto normal = exterior::signed_append(lambda, h);
      if (!normal) continue;
      b.add(target.index_of(normal->monomial, *lowered), col, static_cast<long>(factor * normal->sign));
    }
  }
  auto matrix = std::move(b).build();
  return {n, m, field, SliceKind::chain, std::move(source), std::move(target), std::move(matrix)};
}

ComplexSlice cochain_matrix(unsigned n, unsigned m, Field field) {
  exterior::check_generator_count(n);
  ChainBasis source(n, m), target(n, m + 1);
  SparseMatrix::Builder b(target.size(), source.size(), field);
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& [lambda, e] = source[col];
    const int factor = 1 + sign_of(m + lambda.degree() + 1);
    if (factor == 0) continue;
    for (unsigned h = 1; h <= n; ++h) {
      auto normal = exterior::signed_append(lambda, h);
      if (!normal) continue;
      b.add(target.index_of(normal->monomial, e.plus_unit(h)), col,
            static_cast<long>(factor * normal->sign));
    }
  }
  auto matrix = std::move(b).build();
  return {n, m, field, SliceKind::cochain, std::move(source), std::move(target), std::move(matrix)};
}

std::size_t chain_space_dim(unsigned n, unsigned m) {
  exterior::check_generator_count(n);
  const mpz_class d = formulas::pow2(n) * formulas::monomial_count(n, m);
  return d.get_ui();
}

std::size_t chain_rank(unsigned n, unsigned m, Field field) {
  return exactla::rank(chain_matrix(n, m, field).matrix);
}

std::size_t cochain_rank(unsigned n, unsigned m, Field field) {
  return exactla::rank(cochain_matrix(n, m, field).matrix);
}

std::size_t hh_dim_computed(unsigned n, unsigned m, Field field) {
  const std::size_t dim = chain_space_dim(n, m);
  const std::size_t incoming = chain_rank(n, m + 1, field);
  const std::size_t outgoing = m == 0 ? 0 : chain_rank(n, m, field);
  return dim - outgoing - incoming;
}

std::size_t hhc_dim_computed(unsigned n, unsigned m, Field field) {
  const std::size_t dim = chain_space_dim(n, m);
  const std::size_t outgoing = cochain_rank(n, m, field);
  const std::size_t incoming = m == 0 ? 0 : cochain_rank(n, m - 1, field);
  return dim - outgoing - incoming;
}

bool preserves_grade(const ComplexSlice& slice) {
  for (std::size_t c = 0; c < slice.matrix.cols(); ++c)
    for (const auto& [r, v] : slice.matrix.column(c))
      if (slice.source[c].grade() != slice.target[r].grade()) return false;
  return true;
}

bool preserves_signed_degrees(const ComplexSlice& slice) {
  for (std::size_t c = 0; c < slice.matrix.cols(); ++c)
    for (const auto& [r, v] : slice.matrix.column(c)) {
      const auto& s = slice.source[c];
      const auto& t = slice.target[r];
      if (s.positive_degree() != t.positive_degree() || s.negative_degree() != t.negative_degree())
        return false;
    }
  return true;
}

bool verify_sigma_squared_zero(unsigned n, unsigned m_max, Field field) {
  for (unsigned m = 1; m <= m_max; ++m) {
    const auto lower = chain_matrix(n, m, field);
    const auto upper = chain_matrix(n, m + 1, field);
    if (!lower.matrix.multiply(upper.matrix).is_zero()) return false;
    const auto first = cochain_matrix(n, m - 1, field);
    const auto second = cochain_matrix(n, m, field);
    if (!second.matrix.multiply(first.matrix).is_zero()) return false;
  }
  return true;
}

BarComplex::BarComplex(unsigned n, Field field) : n_(n), field_(field) {
  exterior::check_generator_count(n);
  if (n > 8) throw DomainError("bar complex oracle is limited to n <= 8");
}

std::size_t BarComplex::dim(unsigned m) const {
  const std::size_t a = std::size_t{1} << n_;
  std::size_t d = a;
  for (unsigned i = 0; i < m; ++i) {
    if (d > std::numeric_limits<std::size_t>::max() / (a - 1))
      return std::numeric_limits<std::size_t>::max();
    d *= a - 1;
  }
  return d;
}

namespace {

// Tuples of non-identity monomial masks (values 1..A-1), encoded little-endian
// in base A-1.
struct TupleCodec {
  std::uint32_t base;  // A - 1

  std::size_t encode(const std::vector<std::uint32_t>& t) const {
    std::size_t idx = 0;
    for (std::size_t i = t.size(); i-- > 0;) idx = idx * base + (t[i] - 1);
    return idx;
  }
  std::vector<std::uint32_t> decode(std::size_t idx, unsigned len) const {
    std::vector<std::uint32_t> t(len);
    for (unsigned i = 0; i < len; ++i) {
      t[i] = static_cast<std::uint32_t>(idx % base) + 1;
      idx /= base;
    }
    return t;
  }
};

}  // namespace

SparseMatrix BarComplex::chain_differential(unsigned m) const {
  if (m < 1) throw DomainError("bar chain differential needs m >= 1");
  const std::uint32_t A = 1U << n_;
  const TupleCodec codec{A - 1};
  const std::size_t src_dim = dim(m), dst_dim = dim(m - 1);
  SparseMatrix::Builder b(dst_dim, src_dim, field_);
  auto mono = [&](std::uint32_t mask) { return Monomial::from_mask(n_, mask); };
  auto row_of = [&](std::uint32_t a0, const std::vector<std::uint32_t>& t) {
    return a0 + static_cast<std::size_t>(A) * codec.encode(t);
  };
  for (std::size_t col = 0; col < src_dim; ++col) {
    const std::uint32_t a0 = static_cast<std::uint32_t>(col % A);
    const std::vector<std::uint32_t> t = codec.decode(col / A, m);
    // a0 a1 ⊗ a2 ... am
    if (auto p = exterior::multiply(mono(a0), mono(t[0]))) {
      std::vector<std::uint32_t> rest(t.begin() + 1, t.end());
      b.add(row_of(p->monomial.mask(), rest), col, static_cast<long>(p->sign));
    }
    // (-1)^i a0 ⊗ ... ⊗ a_i a_{i+1} ⊗ ...
    for (unsigned i = 1; i < m; ++i) {
      auto p = exterior::multiply(mono(t[i - 1]), mono(t[i]));
      if (!p) continue;
      std::vector<std::uint32_t> merged(t.begin(), t.begin() + (i - 1));
      merged.push_back(p->monomial.mask());
      merged.insert(merged.end(), t.begin() + (i + 1), t.end());
      b.add(row_of(a0, merged), col, static_cast<long>(sign_of(i) * p->sign));
    }
    // (-1)^m am a0 ⊗ a1 ... a_{m-1}
    if (auto p = exterior::multiply(mono(t[m - 1]), mono(a0))) {
      std::vector<std::uint32_t> rest(t.begin(), t.end() - 1);
      b.add(row_of(p->monomial.mask(), rest), col, static_cast<long>(sign_of(m) * p->sign));
    }
  }
  return std::move(b).build();
}

SparseMatrix BarComplex::cochain_differential(unsigned m) const {
  const std::uint32_t A = 1U << n_;
  const TupleCodec codec{A - 1};
  const std::size_t src_dim = dim(m), dst_dim = dim(m + 1);
  SparseMatrix::Builder b(dst_dim, src_dim, field_);
  auto mono = [&](std::uint32_t mask) { return Monomial::from_mask(n_, mask); };
  // basis function (t, ν): t ↦ ν, other tuples ↦ 0
  auto index = [&](const std::vector<std::uint32_t>& t, std::uint32_t value) {
    return value + static_cast<std::size_t>(A) * codec.encode(t);
  };
  const std::size_t tuples = dst_dim / A;
  for (std::size_t code = 0; code < tuples; ++code) {
    const std::vector<std::uint32_t> s = codec.decode(code, m + 1);
    const std::vector<std::uint32_t> tail(s.begin() + 1, s.end());
    const std::vector<std::uint32_t> head(s.begin(), s.end() - 1);
    std::vector<std::pair<std::vector<std::uint32_t>, int>> merged;
    for (unsigned i = 1; i <= m; ++i) {
      auto p = exterior::multiply(mono(s[i - 1]), mono(s[i]));
      if (!p) continue;
      std::vector<std::uint32_t> t(s.begin(), s.begin() + (i - 1));
      t.push_back(p->monomial.mask());
      t.insert(t.end(), s.begin() + (i + 1), s.end());
      merged.emplace_back(std::move(t), sign_of(i) * p->sign);
    }
    for (std::uint32_t nu = 0; nu < A; ++nu) {
      // s1 · f(s2 ... s_{m+1})
      if (auto p = exterior::multiply(mono(s[0]), mono(nu)))
        b.add(index(s, p->monomial.mask()), index(tail, nu), static_cast<long>(p->sign));
      for (const auto& [t, sign] : merged) b.add(index(s, nu), index(t, nu), static_cast<long>(sign));
      // (-1)^{m+1} f(s1 ... s_m) · s_{m+1}
      if (auto p = exterior::multiply(mono(nu), mono(s[m])))
        b.add(index(s, p->monomial.mask()), index(head, nu),
              static_cast<long>(sign_of(m + 1) * p->sign));
    }
  }
  return std::move(b).build();
}

std::vector<OracleDims> bar_oracle_dims(unsigned n, unsigned m_max, Field field, std::size_t cap) {
  BarComplex bar(n, field);
  const std::size_t largest = bar.dim(m_max + 1);
  if (largest > cap)
    throw InfeasibleError("bar oracle at n = " + std::to_string(n) + ", m_max = " +
                              std::to_string(m_max) + " needs dimension " +
                              (largest == std::numeric_limits<std::size_t>::max()
                                   ? std::string("overflow")
                                   : std::to_string(largest)) +
                              " > cap " + std::to_string(cap),
                          largest);
  std::vector<std::size_t> chain_ranks(m_max + 2, 0);    // rank b_m, index m
  std::vector<std::size_t> cochain_ranks(m_max + 1, 0);  // rank d^m, index m
  for (unsigned m = 1; m <= m_max + 1; ++m) chain_ranks[m] = exactla::rank(bar.chain_differential(m));
  for (unsigned m = 0; m <= m_max; ++m) cochain_ranks[m] = exactla::rank(bar.cochain_differential(m));
  std::vector<OracleDims> out;
  for (unsigned m = 0; m <= m_max; ++m) {
    const std::size_t d = bar.dim(m);
    const std::size_t hh = d - chain_ranks[m + 1] - (m == 0 ? 0 : chain_ranks[m]);
    const std::size_t hhc = d - cochain_ranks[m] - (m == 0 ? 0 : cochain_ranks[m - 1]);
    out.push_back({m, hh, hhc});
  }
  return out;
}

bool verify_bar_squared_zero(unsigned n, unsigned m_max, Field field, std::size_t cap) {
  BarComplex bar(n, field);
  if (bar.dim(m_max + 1) > cap)
    throw InfeasibleError("bar complex too large for the squared-zero check", bar.dim(m_max + 1));
  for (unsigned m = 1; m <= m_max; ++m)
    if (!bar.chain_differential(m).multiply(bar.chain_differential(m + 1)).is_zero()) return false;
  for (unsigned m = 0; m < m_max; ++m)
    if (!bar.cochain_differential(m + 1).multiply(bar.cochain_differential(m)).is_zero()) return false;
  return true;
}

}  // namespace hhext::complexes
