#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhext/error.hpp"
#include "hhext/field.hpp"
#include "hhext/linalg.hpp"
#include "hhext/sparse_matrix.hpp"
#include "oracles.hpp"

using namespace hhext;
using namespace hhext::exactla;

namespace {

SparseMatrix random_matrix(oracle::Rng& rng, std::size_t rows, std::size_t cols, Field f, int density_pct,
                           long lo = -3, long hi = 3) {
  SparseMatrix::Builder b(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.uniform(0, 99) < density_pct) b.add(r, c, rng.uniform(lo, hi));
  return std::move(b).build();
}

/// Rank-deficient by construction: product of rows x k and k x cols.
SparseMatrix low_rank_matrix(oracle::Rng& rng, std::size_t rows, std::size_t cols, std::size_t k, Field f) {
  return random_matrix(rng, rows, k, f, 60).multiply(random_matrix(rng, k, cols, f, 60));
}

}  // namespace

TEST_CASE("field construction and names") {
  CHECK(Field::rationals().characteristic() == 0);
  CHECK(Field::rationals().name() == "Q");
  CHECK(Field::prime(7).name() == "F_7");
  CHECK(Field::of_characteristic(0) == Field::rationals());
  CHECK_THROWS_AS(Field::prime(4), DomainError);
  CHECK_THROWS_AS(Field::prime(1), DomainError);
  CHECK(is_prime(2));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("scalar arithmetic over Q") {
  const Field q = Field::rationals();
  Scalar a = Scalar::from_rational(mpq_class(1, 3));
  Scalar b = Scalar::from_int(q, 2);
  CHECK((a + b).rational() == mpq_class(7, 3));
  CHECK((a * b).rational() == mpq_class(2, 3));
  CHECK((a / b).rational() == mpq_class(1, 6));
  CHECK((a - a).is_zero());
  CHECK(b.inverse().rational() == mpq_class(1, 2));
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), DomainError);
}

TEST_CASE("scalar arithmetic over F_p") {
  const Field f = Field::prime(5);
  Scalar a = Scalar::from_int(f, 3);
  CHECK((a + a).residue() == 1);
  CHECK(Scalar::from_int(f, -1).residue() == 4);
  CHECK((a * a.inverse()).is_one());
  CHECK(Scalar::from_int(f, 10).is_zero());
  CHECK_THROWS_AS(a + Scalar::from_int(Field::prime(7), 1), DomainError);
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), DomainError);
}

TEST_CASE("inverse is exact for every residue") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    const Field f = Field::prime(p);
    for (long v = 1; v < static_cast<long>(p); ++v) CHECK((Scalar::from_int(f, v) * Scalar::from_int(f, v).inverse()).is_one());
  }
}

TEST_CASE("builder sums repeated entries and drops zeros") {
  SparseMatrix::Builder b(2, 2, Field::rationals());
  b.add(0, 0, 1);
  b.add(0, 0, -1);
  b.add(1, 1, 2);
  b.add(1, 1, 3);
  const SparseMatrix m = std::move(b).build();
  CHECK(m.nonzeros() == 1);
  CHECK(m.at(1, 1).rational() == 5);
  CHECK(m.at(0, 0).is_zero());
}

TEST_CASE("identity, transpose and multiply") {
  const Field q = Field::rationals();
  oracle::Rng rng(11);
  const SparseMatrix a = random_matrix(rng, 4, 6, q, 50);
  CHECK(SparseMatrix::identity(4, q).multiply(a) == a);
  CHECK(a.transpose().transpose() == a);
  const SparseMatrix b = random_matrix(rng, 6, 3, q, 50);
  CHECK(a.multiply(b).transpose() == b.transpose().multiply(a.transpose()));
}

TEST_CASE("rank of small known matrices") {
  const Field q = Field::rationals();
  CHECK(rank(SparseMatrix::zero(3, 4, q)) == 0);
  CHECK(rank(SparseMatrix::identity(5, q)) == 5);
  SparseMatrix::Builder b(2, 2, q);
  b.add(0, 0, 1);
  b.add(0, 1, 2);
  b.add(1, 0, 2);
  b.add(1, 1, 4);
  const SparseMatrix m = std::move(b).build();
  CHECK(rank(m) == 1);
  SparseMatrix::Builder b2(2, 2, Field::prime(2));
  b2.add(0, 0, 1);
  b2.add(0, 1, 1);
  b2.add(1, 0, 1);
  b2.add(1, 1, 3);
  CHECK(rank(std::move(b2).build()) == 1);
}

TEST_CASE("rank agrees with dense elimination on random matrices") {
  oracle::Rng rng(20240917);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint32_t p = trial % 3 == 0 ? 0 : (trial % 3 == 1 ? 2 : 3);
    const Field f = Field::of_characteristic(p);
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 14));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 14));
    const SparseMatrix m = trial % 2 ? random_matrix(rng, rows, cols, f, static_cast<int>(rng.uniform(5, 80)))
                                     : low_rank_matrix(rng, rows, cols, static_cast<std::size_t>(rng.uniform(1, 4)), f);
    CHECK(rank(m) == oracle::dense_rank(oracle::to_dense(m), p));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank of a matrix with large rational entries") {
  const Field q = Field::rationals();
  SparseMatrix::Builder b(3, 3, q);
  const mpz_class big("123456789012345678901234567890");
  b.add(0, 0, Scalar::from_mpz(q, big));
  b.add(0, 1, Scalar::from_mpz(q, big + 1));
  b.add(1, 0, Scalar::from_mpz(q, big * 2));
  b.add(1, 1, Scalar::from_mpz(q, big * 2 + 2));
  b.add(2, 2, Scalar::from_rational(mpq_class(1, 7)));
  CHECK(rank(std::move(b).build()) == 2);
}

TEST_CASE("kernel basis has the right size and is annihilated") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Field f = trial % 2 ? Field::rationals() : Field::prime(3);
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 9));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 9));
    const SparseMatrix m = low_rank_matrix(rng, rows, cols, static_cast<std::size_t>(rng.uniform(1, 3)), f);
    const auto kernel = kernel_basis(m);
    CHECK(kernel.size() == cols - rank(m));
    for (const auto& v : kernel) {
      const Vector image = m.apply(v);
      CHECK(std::all_of(image.begin(), image.end(), [](const Scalar& s) { return s.is_zero(); }));
    }
    if (!kernel.empty()) CHECK(rank(SparseMatrix::from_columns(cols, kernel, f)) == kernel.size());
  }
}

TEST_CASE("in_span and SpanTester") {
  const Field q = Field::rationals();
  const auto s = [&](long v) { return Scalar::from_int(q, v); };
  const std::vector<Vector> basis{{s(1), s(0), s(1)}, {s(0), s(1), s(1)}};
  CHECK(in_span({s(2), s(3), s(5)}, basis));
  CHECK_FALSE(in_span({s(0), s(0), s(1)}, basis));
  CHECK(in_span({s(0), s(0), s(0)}, {}));
  CHECK_THROWS_AS(in_span({s(1), s(0)}, basis), DomainError);

  SpanTester t(3, q);
  CHECK(t.insert(to_sparse(basis[0])));
  CHECK(t.insert(to_sparse(basis[1])));
  CHECK_FALSE(t.insert(to_sparse({s(1), s(1), s(2)})));
  CHECK(t.rank() == 2);
  CHECK(t.contains(Vector{s(2), s(3), s(5)}));
  CHECK_FALSE(t.contains(Vector{s(1), s(0), s(0)}));
}

TEST_CASE("SpanTester agrees with dense rank of the augmented matrix") {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Field f = trial % 2 ? Field::rationals() : Field::prime(5);
    const SparseMatrix cols = low_rank_matrix(rng, 8, 6, 3, f);
    SpanTester t(cols);
    const SparseMatrix probe = random_matrix(rng, 8, 1, f, static_cast<int>(rng.uniform(10, 60)));
    std::vector<Vector> all;
    for (std::size_t c = 0; c < cols.cols(); ++c) all.push_back(to_dense(cols.column(c), 8, f));
    const std::size_t before = oracle::dense_rank(oracle::to_dense(cols), f.characteristic());
    all.push_back(to_dense(probe.column(0), 8, f));
    const std::size_t after =
        oracle::dense_rank(oracle::to_dense(SparseMatrix::from_columns(8, all, f)), f.characteristic());
    CHECK(t.rank() == before);
    CHECK(t.contains(probe.column(0)) == (before == after));
  }
}
