#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhext/error.hpp"
#include "hhext/ring.hpp"
#include "oracles.hpp"

using namespace hhext;
using namespace hhext::ring;
using exactla::Field;
using exactla::Scalar;

namespace {

const Field Q = Field::rationals();

ExponentVector ev(std::vector<std::uint32_t> e) { return ExponentVector(std::move(e)); }

/// Random coboundary of degree m: the cochain differential applied to a random
/// degree m-1 cochain, assembled term by term from Λ products.
CochainVector random_coboundary(oracle::Rng& rng, unsigned n, unsigned m) {
  CochainVector out(n, m, Q);
  for (const auto& e : resolution::exponent_vectors(n, m - 1))
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (!rng.coin()) continue;
      const long c = rng.uniform(-3, 3);
      const auto lambda = oracle::mask_indices(mask);
      for (unsigned h = 1; h <= n; ++h) {
        auto raised = e.exponents();
        ++raised[h - 1];
        if (auto p = oracle::ext_product({h}, lambda))
          out.add_term(Monomial::from_indices(n, p->second), ev(raised), Scalar::from_int(Q, c * p->first));
        if (auto p = oracle::ext_product(lambda, {h})) {
          const long s = (m % 2 == 0) ? 1 : -1;  // (-1)^{(m-1)+1}
          out.add_term(Monomial::from_indices(n, p->second), ev(raised), Scalar::from_int(Q, s * c * p->first));
        }
      }
    }
  return out;
}

}  // namespace

TEST_CASE("cochain vectors print and compare") {
  const auto a = CochainVector::term(Monomial::from_indices(2, {1, 2}), ev({1, 1}), Q, -1);
  CHECK(a.to_string() == "-x1x2 e(1,1)");
  CHECK(CochainVector::term(Monomial::identity(2), ev({0, 0}), Q).to_string() == "e(0,0)");
  CHECK(CochainVector(2, 1, Q).to_string() == "0");
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a + CochainVector(2, 1, Q), DomainError);
}

TEST_CASE("cup product examples") {
  const auto x1e2 = gen_v(2, 1, 2, Q);
  const auto x2e1 = gen_v(2, 2, 1, Q);
  const auto prod = cup(x1e2, x2e1);
  CHECK(prod == CochainVector::term(Monomial::from_indices(2, {1, 2}), ev({1, 1}), Q));
  CHECK(cup(gen_v(2, 1, 1, Q), gen_v(2, 1, 1, Q)).is_zero());
  const auto one = CochainVector::term(Monomial::identity(3), ev({0, 0, 0}), Q);
  const auto w = gen_w(3, 1, 3, Q);
  CHECK(cup(one, w) == w);
  CHECK(cup(w, one) == w);
  CHECK(gen_u(3, 2, 1, Q) == -gen_u(3, 1, 2, Q));
  CHECK(gen_w(2, 1, 1, Q) == CochainVector::term(Monomial::identity(2), ev({2, 0}), Q));
}

TEST_CASE("cup product is bilinear and associative on cochains") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 3;
    auto rand_vec = [&](unsigned m) {
      CochainVector v(n, m, Q);
      for (const auto& e : resolution::exponent_vectors(n, m))
        for (std::uint32_t mask = 0; mask < 8; ++mask)
          if (rng.uniform(0, 3) == 0) v.add_term(Monomial::from_mask(n, mask), e, Scalar::from_int(Q, rng.uniform(-2, 2)));
      return v;
    };
    const auto a = rand_vec(1), b = rand_vec(1), c = rand_vec(2);
    CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
    CHECK(cup(a + b, c) == cup(a, c) + cup(b, c));
  }
}

TEST_CASE("cohomology basis sizes") {
  CHECK(hh_basis(2, 1, Q).size() == 4);
  CHECK(hh_basis(2, 2, Q).size() == 6);
  CHECK(hh_basis(3, 0, Q).size() == 5);
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      CHECK(mpz_class(static_cast<unsigned long>(hh_basis(n, m, Field::prime(3)).size())) ==
            oracle::pow2(n - 1) * oracle::binom(n + m - 1, n - 1));
  CHECK_THROWS_AS(hh_basis(2, 1, Field::prime(2)), DomainError);
  CHECK_THROWS_AS(CohomologyRing(3, Field::prime(2)), DomainError);
}

TEST_CASE("basis elements are cocycles and not coboundaries") {
  for (unsigned n = 2; n <= 3; ++n) {
    CohomologyRing ring(n, Q);
    for (unsigned m = 0; m <= 3; ++m)
      for (const auto& b : ring.hh_basis(m)) {
        CHECK(ring.is_cocycle(b));
        CHECK_FALSE(ring.is_coboundary(b));
      }
  }
}

TEST_CASE("class representative strips random coboundaries") {
  oracle::Rng rng(3);
  for (unsigned n = 2; n <= 3; ++n) {
    CohomologyRing ring(n, Q);
    for (unsigned m = 1; m <= 3; ++m) {
      const auto basis = ring.hh_basis(m);
      for (int trial = 0; trial < 6; ++trial) {
        const auto& b = basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))];
        const auto d = random_coboundary(rng, n, m);
        REQUIRE(ring.is_coboundary(d));
        CHECK(ring.class_representative(b + d) == b);
        CHECK(ring.class_representative(d).is_zero());
      }
    }
  }
}

TEST_CASE("class representative rejects non-cocycles") {
  CohomologyRing ring(2, Q);
  const auto x1e1 = CochainVector::term(Monomial::generator(2, 1), ev({1, 0}), Q);
  CHECK(ring.is_cocycle(x1e1));
  const auto bad = CochainVector::term(Monomial::identity(2), ev({1, 0}), Q);
  CHECK_FALSE(ring.is_cocycle(bad));
  CHECK_THROWS_AS(ring.class_representative(bad), DomainError);
  const auto center = CochainVector::from_element(exterior::Element::generator(2, 1, Q));
  CHECK_FALSE(ring.is_cocycle(center));
}

TEST_CASE("relation families") {
  const auto& fams = relation_families();
  CHECK(fams.size() == 24);
  std::set<std::string> ids;
  for (const auto& f : fams) ids.insert(f.id);
  CHECK(ids.size() == 24);
  CHECK(ids.count("uu.1") == 1);
  CHECK(ids.count("ww.5") == 1);
}

TEST_CASE("every relation instance holds") {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto report = verify_table_h(n, Q);
    CHECK(report.all_pass());
    std::size_t total = 0;
    for (const auto& f : report.families) {
      CHECK(f.failures == 0);
      total += f.instances;
    }
    CHECK(total == report.instances.size());
    CHECK(std::is_sorted(report.instances.begin(), report.instances.end(), [](const auto& a, const auto& b) {
      return std::tie(a.family, a.i, a.j, a.s, a.t) < std::tie(b.family, b.i, b.j, b.s, b.t);
    }));
  }
  CHECK(verify_table_h(3, Field::prime(3)).all_pass());
}

TEST_CASE("u squared vanishes when indices overlap") {
  CohomologyRing ring(4, Q);
  const auto u12 = gen_u(4, 1, 2, Q), u13 = gen_u(4, 1, 3, Q), u34 = gen_u(4, 3, 4, Q);
  CHECK(ring.cup_class(u12, u13).is_zero());
  CHECK(ring.cup_class(u12, u34) == CochainVector::term(Monomial::top(4), ev({0, 0, 0, 0}), Q));
  CHECK(ring.cup_class(u12, u34) == ring.cup_class(u34, u12));
}

TEST_CASE("normal forms") {
  PresentationMonomial a{{{1, 2}}, std::pair<unsigned, unsigned>{3, 1}, {{1, 2}}};
  CHECK(a.degree() == 3);
  CHECK(is_normal(a, 3, LowerBound::inclusive));
  CHECK_FALSE(is_normal(a, 3, LowerBound::strict));
  PresentationMonomial b{{{2, 1}}, std::nullopt, {}};
  CHECK_FALSE(is_normal(b, 3, LowerBound::inclusive));
  PresentationMonomial c{{}, std::pair<unsigned, unsigned>{1, 2}, {{1, 3}}};
  CHECK_FALSE(is_normal(c, 3, LowerBound::inclusive));  // columns 2, 1, 3 decrease
  PresentationMonomial d{{}, std::nullopt, {{1, 1}, {1, 2}}};
  CHECK(is_normal(d, 2, LowerBound::strict));
  CHECK(presentation_image(a, 3, Q) == CochainVector::term(Monomial::top(3), ev({2, 1, 0}), Q));
}

TEST_CASE("normal form counts") {
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned d = 0; d <= 5; ++d) {
      const auto incl = normal_monomials(n, d, LowerBound::inclusive);
      const auto strict = normal_monomials(n, d, LowerBound::strict);
      // row subsets of matching parity times weakly increasing column sequences
      const mpz_class cols = oracle::binom(n + d - 1, d);
      CHECK(mpz_class(static_cast<unsigned long>(incl.size())) == oracle::pow2(n - 1) * cols);
      CHECK(mpz_class(static_cast<unsigned long>(strict.size())) == oracle::pow2(n - 2) * cols);
      for (const auto& w : incl) {
        CHECK(w.degree() == d);
        CHECK(is_normal(w, n, LowerBound::inclusive));
      }
      for (const auto& w : strict) CHECK(is_normal(w, n, LowerBound::strict));
    }
}

TEST_CASE("presentation dimensions") {
  for (unsigned n = 2; n <= 4; ++n)
    for (const auto& row : presentation_graded_dims(n, 4)) {
      CHECK(row.image_rank == row.count_inclusive);
      if (row.degree >= 1 || n % 2 == 0) CHECK(row.matches());
    }
  const auto n3 = presentation_graded_dims(3, 0);
  REQUIRE(n3.size() == 1);
  CHECK(n3[0].count_inclusive == 4);
  CHECK(n3[0].hh_dim == 5);
  CHECK_FALSE(n3[0].matches());
}

TEST_CASE("characteristic 2 ring") {
  for (unsigned n = 2; n <= 3; ++n) {
    const auto r = char2_ring_check(n, 4);
    CHECK(r.all_pass());
    CHECK(r.pairs_checked > 0);
  }
}

TEST_CASE("ring axioms on small bases") {
  for (unsigned n = 2; n <= 3; ++n) {
    const auto r = check_ring_axioms(n, Q, 4);
    CHECK(r.all_pass());
    CHECK(r.triples > 0);
    CHECK(r.pairs > 0);
  }
  CHECK(check_ring_axioms(3, Field::prime(5), 3).all_pass());
}
