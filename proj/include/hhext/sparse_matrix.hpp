#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hhext/field.hpp"

namespace hhext::exactla {

/// Dense column vector of scalars sharing one field.
using Vector = std::vector<Scalar>;

/// Exact sparse matrix. Immutable once built; stored column-major with each
/// column sorted by row index and no explicit zeros.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Scalar>;
  using Column = std::vector<Entry>;

  /// Accumulates entries (repeated positions are summed) and produces a
  /// well-formed matrix.
  class Builder {
   public:
    Builder(std::size_t rows, std::size_t cols, Field field);

    void add(std::size_t row, std::size_t col, const Scalar& value);
    void add(std::size_t row, std::size_t col, long value);

    SparseMatrix build() &&;

   private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<std::map<std::uint32_t, Scalar>> columns_;
  };

  SparseMatrix(std::size_t rows, std::size_t cols, Field field);

  static SparseMatrix zero(std::size_t rows, std::size_t cols, Field field) {
    return SparseMatrix(rows, cols, field);
  }
  static SparseMatrix identity(std::size_t n, Field field);
  /// Columns given as dense vectors; all must have length `rows`.
  static SparseMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns,
                                   Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  const Column& column(std::size_t c) const { return columns_.at(c); }
  /// Zero when absent.
  Scalar at(std::size_t row, std::size_t col) const;

  SparseMatrix transpose() const;
  /// this * rhs; throws DomainError on shape or field mismatch.
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  Vector apply(const Vector& v) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&);

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Column> columns_;
};

}  // namespace hhext::exactla
