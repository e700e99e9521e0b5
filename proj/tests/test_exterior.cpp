#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhext/error.hpp"
#include "hhext/exterior.hpp"
#include "oracles.hpp"

using namespace hhext;
using namespace hhext::exterior;
using exactla::Field;
using exactla::Scalar;

namespace {

Element random_element(oracle::Rng& rng, unsigned n, Field f) {
  Element e(n, f);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask)
    if (rng.uniform(0, 2) == 0) e.add_term(Monomial::from_mask(n, mask), Scalar::from_int(f, rng.uniform(-4, 4)));
  return e;
}

}  // namespace

TEST_CASE("generator count guard") {
  CHECK_THROWS_AS(check_generator_count(1), DomainError);
  CHECK_THROWS_AS(check_generator_count(0), DomainError);
  CHECK_NOTHROW(check_generator_count(2));
  CHECK_THROWS_AS(monomial_basis(1), DomainError);
}

TEST_CASE("monomial basis order for n = 3") {
  std::vector<std::string> names;
  for (auto m : monomial_basis(3)) names.push_back(m.to_string());
  CHECK(names == std::vector<std::string>{"1", "x1", "x2", "x3", "x1x2", "x1x3", "x2x3", "x1x2x3"});
}

TEST_CASE("monomial basis is sorted, complete and indexed") {
  for (unsigned n = 2; n <= 6; ++n) {
    const auto basis = monomial_basis(n);
    REQUIRE(basis.size() == (1U << n));
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    const auto pos = monomial_positions(n);
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(pos[basis[i].mask()] == i);
  }
}

TEST_CASE("monomial constructors") {
  CHECK(Monomial::from_indices(4, {1, 3}).mask() == 0b101);
  CHECK(Monomial::top(3).degree() == 3);
  CHECK(Monomial::identity(3).is_identity());
  CHECK(Monomial::generator(3, 2).indices() == std::vector<unsigned>{2});
  CHECK_THROWS_AS(Monomial::from_indices(3, {2, 1}), DomainError);
  CHECK_THROWS_AS(Monomial::from_indices(3, {4}), DomainError);
  CHECK_THROWS_AS(Monomial::generator(3, 0), DomainError);
}

TEST_CASE("mu_count counts smaller indices") {
  const Monomial l = Monomial::from_indices(5, {1, 3, 5});
  CHECK(mu_count(l, 1) == 0);
  CHECK(mu_count(l, 2) == 1);
  CHECK(mu_count(l, 4) == 2);
  CHECK(mu_count(l, 5) == 2);
  CHECK_THROWS_AS(mu_count(l, 6), DomainError);
}

TEST_CASE("signed_append is left multiplication by x_h") {
  for (unsigned n = 2; n <= 5; ++n)
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask)
      for (unsigned h = 1; h <= n; ++h) {
        const auto got = signed_append(Monomial::from_mask(n, mask), h);
        const auto want = oracle::ext_product({h}, oracle::mask_indices(mask));
        REQUIRE(got.has_value() == want.has_value());
        if (!got) continue;
        CHECK(got->sign == want->first);
        CHECK(got->monomial.mask() == oracle::indices_mask(want->second));
      }
}

TEST_CASE("multiply agrees with bubble-sort rewriting") {
  for (unsigned n = 2; n <= 5; ++n)
    for (std::uint32_t a = 0; a < (1U << n); ++a)
      for (std::uint32_t b = 0; b < (1U << n); ++b) {
        const auto got = multiply(Monomial::from_mask(n, a), Monomial::from_mask(n, b));
        const auto want = oracle::ext_product(oracle::mask_indices(a), oracle::mask_indices(b));
        REQUIRE(got.has_value() == want.has_value());
        if (!got) continue;
        CHECK(got->sign == want->first);
        CHECK(got->monomial.mask() == oracle::indices_mask(want->second));
      }
}

TEST_CASE("generators anticommute and square to zero") {
  const Field q = Field::rationals();
  for (unsigned i = 1; i <= 4; ++i) {
    const Element xi = Element::generator(4, i, q);
    CHECK(mult(xi, xi).is_zero());
    for (unsigned j = 1; j <= 4; ++j) {
      const Element xj = Element::generator(4, j, q);
      CHECK((mult(xi, xj) + mult(xj, xi)).is_zero());
    }
  }
}

TEST_CASE("product is associative and unital on random elements") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = static_cast<unsigned>(rng.uniform(2, 5));
    const Field f = trial % 2 ? Field::rationals() : Field::prime(3);
    const Element a = random_element(rng, n, f), b = random_element(rng, n, f), c = random_element(rng, n, f);
    CHECK(mult(mult(a, b), c) == mult(a, mult(b, c)));
    CHECK(mult(Element::one(n, f), a) == a);
    CHECK(mult(a, Element::one(n, f)) == a);
    CHECK(mult(a, b + c) == mult(a, b) + mult(a, c));
  }
}

TEST_CASE("element arithmetic and errors") {
  const Field q = Field::rationals();
  const Element x1 = Element::generator(3, 1, q);
  CHECK((x1 - x1).is_zero());
  CHECK((x1 * Scalar::from_int(q, 3)).coefficient(Monomial::generator(3, 1)).rational() == 3);
  CHECK_THROWS_AS(mult(x1, Element::generator(4, 1, q)), DomainError);
  CHECK_THROWS_AS(x1 + Element::generator(3, 1, Field::prime(3)), DomainError);
  CHECK(mult(Element::generator(3, 2, q), x1).to_string() == "-x1x2");
}

TEST_CASE("even monomials are central, odd ones are not unless top with n odd") {
  const Field q = Field::rationals();
  CHECK(commutes(Element::monomial(Monomial::from_indices(4, {1, 2}), q), Element::generator(4, 3, q)));
  CHECK_FALSE(commutes(Element::generator(4, 1, q), Element::generator(4, 2, q)));
  CHECK(commutes(Element::monomial(Monomial::top(3), q), Element::generator(3, 2, q)));
}

TEST_CASE("center basis sizes") {
  const Field q = Field::rationals();
  CHECK(center_basis(2, q).size() == 2);
  CHECK(center_basis(3, q).size() == 5);
  CHECK(center_basis(4, q).size() == 8);
  CHECK(center_basis(5, Field::prime(3)).size() == 17);
  const auto c3 = center_basis(3, q);
  CHECK(std::find(c3.begin(), c3.end(), Monomial::top(3)) != c3.end());
  CHECK_THROWS_AS(center_basis(3, Field::prime(2)), DomainError);
}

TEST_CASE("commutator quotient dimension") {
  for (unsigned n = 2; n <= 5; ++n) {
    CHECK(commutator_quotient_dim(n, Field::rationals()) == (1U << (n - 1)) + 1);
    CHECK(commutator_quotient_dim(n, Field::prime(3)) == (1U << (n - 1)) + 1);
    CHECK(commutator_quotient_dim(n, Field::prime(2)) == (1U << n));
  }
}
