#include "hhext/sparse_matrix.hpp"

#include <string>

#include "hhext/error.hpp"

namespace hhext::exactla {

SparseMatrix::Builder::Builder(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), columns_(cols) {}

void SparseMatrix::Builder::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_ || col >= cols_)
    throw DomainError("matrix entry (" + std::to_string(row) + ", " + std::to_string(col) +
                      ") out of bounds");
  if (!(value.field() == field_)) throw DomainError("matrix entry over the wrong field");
  if (value.is_zero()) return;
  auto& column = columns_[col];
  auto [it, inserted] = column.try_emplace(static_cast<std::uint32_t>(row), value);
  if (!inserted) it->second += value;
}

void SparseMatrix::Builder::add(std::size_t row, std::size_t col, long value) {
  add(row, col, Scalar::from_int(field_, value));
}

SparseMatrix SparseMatrix::Builder::build() && {
  SparseMatrix m(rows_, cols_, field_);
  for (std::size_t c = 0; c < cols_; ++c) {
    auto& dst = m.columns_[c];
    for (auto& [r, v] : columns_[c])
      if (!v.is_zero()) dst.emplace_back(r, std::move(v));
  }
  columns_.clear();
  return m;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n, Field field) {
  SparseMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i)
    m.columns_[i].emplace_back(static_cast<std::uint32_t>(i), Scalar::one(field));
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns,
                                        Field field) {
  Builder b(rows, columns.size(), field);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DomainError("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) b.add(r, c, columns[c][r]);
  }
  return std::move(b).build();
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

Scalar SparseMatrix::at(std::size_t row, std::size_t col) const {
  for (const auto& [r, v] : columns_.at(col))
    if (r == row) return v;
  return Scalar::zero(field_);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_, field_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c])
      t.columns_[r].emplace_back(static_cast<std::uint32_t>(c), v);
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw DomainError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                      " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  if (!(field_ == rhs.field_)) throw DomainError("cannot multiply matrices over different fields");
  Builder b(rows_, rhs.cols_, field_);
  for (std::size_t c = 0; c < rhs.cols_; ++c)
    for (const auto& [k, w] : rhs.columns_[c])
      for (const auto& [r, v] : columns_[k]) b.add(r, c, v * w);
  return std::move(b).build();
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match column count");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, x] : columns_[c]) out[r] += x * v[c];
  }
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.columns_ == b.columns_;
}

}  // namespace hhext::exactla
