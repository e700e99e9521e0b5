#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hhext/sparse_matrix.hpp"

namespace hhext::exactla {

/// Sorted (index, nonzero value) pairs.
using SparseVector = SparseMatrix::Column;

/// Rank over the matrix's field. Deterministic; the input is not touched.
std::size_t rank(const SparseMatrix& m);

/// A basis of {v : M v = 0}; exactly cols(M) - rank(M) vectors, each of
/// length cols(M). Vectors are indexed by free columns in increasing order
/// and carry a 1 in their own free column.
std::vector<Vector> kernel_basis(const SparseMatrix& m);

/// True iff v lies in the span of basis. Throws DomainError when a basis
/// vector's length or field differs from v's.
bool in_span(const Vector& v, const std::vector<Vector>& basis);

/// Incrementally maintained echelon form of a set of vectors of a fixed
/// length; answers span-membership queries after a single elimination.
class SpanTester {
 public:
  SpanTester(std::size_t dimension, Field field);
  SpanTester(const SparseMatrix& columns);  // spans the columns
  ~SpanTester();
  SpanTester(SpanTester&&) noexcept;
  SpanTester& operator=(SpanTester&&) noexcept;

  std::size_t dimension() const noexcept { return dimension_; }
  Field field() const noexcept { return field_; }
  std::size_t rank() const;

  /// Returns true if v was independent of the vectors already inserted.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  bool contains(const Vector& v) const;

 private:
  struct Impl;
  std::size_t dimension_;
  Field field_;
  std::unique_ptr<Impl> impl_;
};

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dimension, Field field);

}  // namespace hhext::exactla
