#include "hhext/exterior.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hhext/error.hpp"
#include "hhext/linalg.hpp"

namespace hhext::exterior {

void check_generator_count(unsigned n) {
  if (n < 2 || n > kMaxGenerators)
    throw DomainError("generator count n = " + std::to_string(n) + " outside [2, " +
                      std::to_string(kMaxGenerators) + "]");
}

namespace {

void check_index(unsigned n, unsigned h) {
  if (h < 1 || h > n)
    throw DomainError("generator index " + std::to_string(h) + " outside [1, " +
                      std::to_string(n) + "]");
}

std::uint32_t full_mask(unsigned n) { return n >= 32 ? ~0U : ((1U << n) - 1U); }

}  // namespace

Monomial Monomial::identity(unsigned n) {
  check_generator_count(n);
  return Monomial(n, 0);
}

Monomial Monomial::generator(unsigned n, unsigned h) {
  check_generator_count(n);
  check_index(n, h);
  return Monomial(n, 1U << (h - 1));
}

Monomial Monomial::from_indices(unsigned n, const std::vector<unsigned>& indices) {
  check_generator_count(n);
  std::uint32_t mask = 0;
  unsigned prev = 0;
  for (unsigned h : indices) {
    check_index(n, h);
    if (h <= prev) throw DomainError("monomial indices must be strictly increasing");
    mask |= 1U << (h - 1);
    prev = h;
  }
  return Monomial(n, mask);
}

Monomial Monomial::from_mask(unsigned n, std::uint32_t mask) {
  check_generator_count(n);
  if (mask & ~full_mask(n)) throw DomainError("monomial mask uses indices above n");
  return Monomial(n, mask);
}

Monomial Monomial::top(unsigned n) {
  check_generator_count(n);
  return Monomial(n, full_mask(n));
}

unsigned Monomial::degree() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

std::vector<unsigned> Monomial::indices() const {
  std::vector<unsigned> out;
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1U);
  return out;
}

std::string Monomial::to_string() const {
  if (mask_ == 0) return "1";
  std::string s;
  for (unsigned h : indices()) s += "x" + std::to_string(h);
  return s;
}

std::strong_ordering operator<=>(Monomial a, Monomial b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  std::uint32_t x = a.mask_, y = b.mask_;
  while (x != y) {
    const int lx = std::countr_zero(x), ly = std::countr_zero(y);
    if (lx != ly) return lx <=> ly;
    x &= x - 1;
    y &= y - 1;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomial_basis(unsigned n) {
  check_generator_count(n);
  std::vector<Monomial> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask <= full_mask(n); ++mask) {
    out.push_back(Monomial::from_mask(n, mask));
    if (mask == full_mask(n)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> monomial_positions(unsigned n) {
  const auto basis = monomial_basis(n);
  std::vector<std::uint32_t> pos(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i].mask()] = static_cast<std::uint32_t>(i);
  return pos;
}

unsigned mu_count(Monomial lambda, unsigned h) {
  check_index(lambda.n(), h);
  return static_cast<unsigned>(std::popcount(lambda.mask() & ((1U << (h - 1)) - 1U)));
}

std::optional<SignedMonomial> signed_append(Monomial lambda, unsigned h) {
  check_index(lambda.n(), h);
  if (lambda.contains(h)) return std::nullopt;
  const int sign = (mu_count(lambda, h) % 2 == 0) ? 1 : -1;
  return SignedMonomial{sign, Monomial::from_mask(lambda.n(), lambda.mask() | (1U << (h - 1)))};
}

std::optional<SignedMonomial> multiply(Monomial a, Monomial b) {
  if (a.n() != b.n()) throw DomainError("multiplying monomials with different n");
  if (a.mask() & b.mask()) return std::nullopt;
  // Each index j of b moves left past the indices of a greater than j.
  unsigned swaps = 0;
  for (std::uint32_t m = b.mask(); m; m &= m - 1) {
    const int bit = std::countr_zero(m);
    swaps += static_cast<unsigned>(std::popcount(a.mask() >> (bit + 1)));
  }
  return SignedMonomial{swaps % 2 == 0 ? 1 : -1, Monomial::from_mask(a.n(), a.mask() | b.mask())};
}

Element::Element(unsigned n, Field field) : n_(n), field_(field) { check_generator_count(n); }

Element Element::monomial(Monomial m, Field field, long coefficient) {
  return monomial(m, Scalar::from_int(field, coefficient));
}

Element Element::monomial(Monomial m, const Scalar& coefficient) {
  Element e(m.n(), coefficient.field());
  e.add_term(m, coefficient);
  return e;
}

Scalar Element::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(Monomial m, const Scalar& c) {
  if (m.n() != n_) throw DomainError("monomial has a different generator count");
  if (!(c.field() == field_)) throw DomainError("coefficient over a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_compatible(const Element& o) const {
  if (n_ != o.n_) throw DomainError("exterior elements with different n");
  if (!(field_ == o.field_)) throw DomainError("exterior elements over different fields");
}

Element Element::operator-() const {
  Element out(n_, field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Element& Element::operator+=(const Element& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element& Element::operator*=(const Scalar& c) {
  if (!(c.field() == field_)) throw DomainError("scaling by a scalar over a different field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (m.is_identity())
      s += coeff;
    else
      s += (coeff == "1" ? "" : coeff + "*") + m.to_string();
  }
  return s;
}

Element mult(const Element& a, const Element& b) {
  if (a.n() != b.n()) throw DomainError("exterior elements with different n");
  if (!(a.field() == b.field())) throw DomainError("exterior elements over different fields");
  Element out(a.n(), a.field());
  const Scalar minus_one = Scalar::from_int(a.field(), -1);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto p = multiply(ma, mb);
      if (!p) continue;
      Scalar c = ca * cb;
      if (p->sign < 0) c *= minus_one;
      out.add_term(p->monomial, c);
    }
  return out;
}

bool commutes(const Element& a, const Element& b) { return mult(a, b) == mult(b, a); }

std::vector<Monomial> center_basis(unsigned n, Field field) {
  check_generator_count(n);
  if (field.characteristic() == 2)
    throw DomainError("center_basis requires characteristic != 2 (the algebra is commutative)");
  std::vector<Monomial> out;
  for (Monomial m : monomial_basis(n)) {
    const Element e = Element::monomial(m, field);
    bool central = true;
    for (unsigned h = 1; h <= n && central; ++h)
      central = commutes(e, Element::generator(n, h, field));
    if (central) out.push_back(m);
  }
  return out;
}

std::size_t commutator_quotient_dim(unsigned n, Field field) {
  check_generator_count(n);
  const auto basis = monomial_basis(n);
  const auto pos = monomial_positions(n);
  const std::size_t dim = basis.size();
  exactla::SparseMatrix::Builder b(dim, dim * (dim - 1) / 2, field);
  std::size_t col = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j, ++col) {
      if (auto p = multiply(basis[i], basis[j])) b.add(pos[p->monomial.mask()], col, p->sign);
      if (auto q = multiply(basis[j], basis[i])) b.add(pos[q->monomial.mask()], col, -q->sign);
    }
  return dim - exactla::rank(std::move(b).build());
}

}  // namespace hhext::exterior
