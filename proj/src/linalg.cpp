#include "hhext/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "hhext/error.hpp"

namespace hhext::exactla {

namespace {

struct RationalOps {
  using value_type = mpq_class;

  static bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
  mpq_class lift(const Scalar& s) const { return s.rational(); }
  Scalar lower(const mpq_class& a) const { return Scalar::from_rational(a); }
  mpq_class inverse(const mpq_class& a) const { return 1 / a; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  // a - c * b
  mpq_class axpy(const mpq_class& a, const mpq_class& c, const mpq_class& b) const {
    return a - c * b;
  }
  mpq_class neg(const mpq_class& a) const { return -a; }
  mpq_class neg_mul(const mpq_class& c, const mpq_class& b) const { return -(c * b); }
};

struct ModOps {
  using value_type = std::uint64_t;
  Field field;
  std::uint64_t p;

  static bool is_zero(std::uint64_t a) { return a == 0; }
  std::uint64_t lift(const Scalar& s) const { return s.residue(); }
  Scalar lower(std::uint64_t a) const { return Scalar::from_int(field, static_cast<long>(a)); }
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t axpy(std::uint64_t a, std::uint64_t c, std::uint64_t b) const {
    return (a + p - c * b % p) % p;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t neg_mul(std::uint64_t c, std::uint64_t b) const { return neg(c * b % p); }
};

// Row echelon form built one vector at a time. Each stored row is normalized
// so that its leading (smallest-index) entry is 1; leads are distinct.
template <class Ops>
class Echelon {
 public:
  using T = typename Ops::value_type;
  using Vec = std::vector<std::pair<std::uint32_t, T>>;

  Echelon(std::size_t dimension, Ops ops) : ops_(std::move(ops)), pivot_of_(dimension, -1) {}

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  std::int64_t pivot_row(std::uint32_t column) const { return pivot_of_[column]; }

  // Eliminates leading entries of v against stored rows. Afterwards v is
  // either empty or leads at a column without a pivot.
  void reduce(Vec& v) const {
    Vec scratch;
    while (!v.empty()) {
      const std::int64_t r = pivot_of_[v.front().first];
      if (r < 0) return;
      subtract_multiple(v, v.front().second, rows_[static_cast<std::size_t>(r)], scratch);
    }
  }

  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    const T inv = ops_.inverse(v.front().second);
    for (auto& [c, x] : v) x = ops_.mul(x, inv);
    pivot_of_[v.front().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  // Clears every pivot column except the row's own lead.
  void make_reduced() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rows_[a].front().first > rows_[b].front().first;
    });
    Vec scratch;
    for (std::size_t idx : order) {
      Vec& row = rows_[idx];
      std::size_t pos = 1;
      while (pos < row.size()) {
        const std::int64_t r = pivot_of_[row[pos].first];
        if (r < 0) {
          ++pos;
          continue;
        }
        const T c = row[pos].second;
        const std::uint32_t col = row[pos].first;
        subtract_multiple(row, c, rows_[static_cast<std::size_t>(r)], scratch);
        pos = static_cast<std::size_t>(
            std::upper_bound(row.begin(), row.end(), col,
                             [](std::uint32_t k, const auto& e) { return k < e.first; }) -
            row.begin());
      }
    }
  }

  const Ops& ops() const { return ops_; }

 private:
  // v <- v - c * row
  void subtract_multiple(Vec& v, const T& c, const Vec& row, Vec& out) const {
    out.clear();
    out.reserve(v.size() + row.size());
    auto a = v.begin();
    auto b = row.begin();
    while (a != v.end() || b != row.end()) {
      if (b == row.end() || (a != v.end() && a->first < b->first)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == v.end() || b->first < a->first) {
        out.emplace_back(b->first, ops_.neg_mul(c, b->second));
        ++b;
      } else {
        T x = ops_.axpy(a->second, c, b->second);
        if (!Ops::is_zero(x)) out.emplace_back(a->first, std::move(x));
        ++a;
        ++b;
      }
    }
    v.swap(out);
  }

  Ops ops_;
  std::vector<Vec> rows_;
  std::vector<std::int64_t> pivot_of_;
};

template <class Ops>
typename Echelon<Ops>::Vec lift(const Ops& ops, const SparseVector& v) {
  typename Echelon<Ops>::Vec out;
  out.reserve(v.size());
  for (const auto& [i, s] : v) out.emplace_back(i, ops.lift(s));
  return out;
}

template <class Fn>
decltype(auto) with_ops(Field f, Fn&& fn) {
  if (f.is_rational()) return fn(RationalOps{});
  return fn(ModOps{f, f.characteristic()});
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  const std::size_t bound = std::min(m.rows(), m.cols());
  if (bound == 0) return 0;
  // Eliminate the vectors living in the smaller ambient space.
  const bool use_columns = m.rows() <= m.cols();
  const SparseMatrix t = use_columns ? SparseMatrix(0, 0, m.field()) : m.transpose();
  const SparseMatrix& src = use_columns ? m : t;
  return with_ops(m.field(), [&](auto ops) {
    Echelon<decltype(ops)> ech(src.rows(), ops);
    for (std::size_t c = 0; c < src.cols() && ech.rank() < bound; ++c)
      ech.insert(lift(ops, src.column(c)));
    return ech.rank();
  });
}

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  const SparseMatrix rows = m.transpose();  // column c of `rows` is row c of m
  return with_ops(m.field(), [&](auto ops) {
    using E = Echelon<decltype(ops)>;
    E ech(m.cols(), ops);
    for (std::size_t r = 0; r < rows.cols(); ++r) ech.insert(lift(ops, rows.column(r)));
    ech.make_reduced();

    std::vector<std::int64_t> slot(m.cols(), -1);
    std::vector<Vector> basis;
    for (std::uint32_t c = 0; c < m.cols(); ++c) {
      if (ech.pivot_row(c) >= 0) continue;
      slot[c] = static_cast<std::int64_t>(basis.size());
      Vector v(m.cols(), Scalar::zero(m.field()));
      v[c] = Scalar::one(m.field());
      basis.push_back(std::move(v));
    }
    for (const auto& row : ech.rows()) {
      const std::uint32_t lead = row.front().first;
      for (std::size_t k = 1; k < row.size(); ++k) {
        const auto& [c, x] = row[k];
        basis[static_cast<std::size_t>(slot[c])][lead] = ops.lower(ops.neg(x));
      }
    }
    return basis;
  });
}

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dimension, Field field) {
  Vector out(dimension, Scalar::zero(field));
  for (const auto& [i, s] : v) out.at(i) = s;
  return out;
}

bool in_span(const Vector& v, const std::vector<Vector>& basis) {
  const Field field = v.empty() ? (basis.empty() || basis[0].empty() ? Field{} : basis[0][0].field())
                                : v[0].field();
  SpanTester span(v.size(), field);
  for (const auto& b : basis) {
    if (b.size() != v.size())
      throw DomainError("span membership: vector of length " + std::to_string(v.size()) +
                        " against basis vector of length " + std::to_string(b.size()));
    for (const auto& x : b)
      if (!(x.field() == field)) throw DomainError("span membership: field mismatch");
    span.insert(to_sparse(b));
  }
  for (const auto& x : v)
    if (!(x.field() == field)) throw DomainError("span membership: field mismatch");
  return span.contains(v);
}

struct SpanTester::Impl {
  std::variant<Echelon<RationalOps>, Echelon<ModOps>> ech;
};

SpanTester::SpanTester(std::size_t dimension, Field field)
    : dimension_(dimension), field_(field) {
  if (field.is_rational())
    impl_.reset(new Impl{Echelon<RationalOps>(dimension, RationalOps{})});
  else
    impl_.reset(new Impl{Echelon<ModOps>(dimension, ModOps{field, field.characteristic()})});
}

SpanTester::SpanTester(const SparseMatrix& columns) : SpanTester(columns.rows(), columns.field()) {
  for (std::size_t c = 0; c < columns.cols(); ++c) insert(columns.column(c));
}

SpanTester::~SpanTester() = default;
SpanTester::SpanTester(SpanTester&&) noexcept = default;
SpanTester& SpanTester::operator=(SpanTester&&) noexcept = default;

std::size_t SpanTester::rank() const {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->ech);
}

bool SpanTester::insert(const SparseVector& v) {
  for (const auto& [i, s] : v) {
    if (i >= dimension_) throw DomainError("span vector index out of range");
    if (!(s.field() == field_)) throw DomainError("span vector over the wrong field");
  }
  return std::visit([&](auto& e) { return e.insert(lift(e.ops(), v)); }, impl_->ech);
}

bool SpanTester::contains(const SparseVector& v) const {
  for (const auto& [i, s] : v) {
    if (i >= dimension_) throw DomainError("span vector index out of range");
    if (!(s.field() == field_)) throw DomainError("span vector over the wrong field");
  }
  return std::visit(
      [&](const auto& e) {
        auto w = lift(e.ops(), v);
        e.reduce(w);
        return w.empty();
      },
      impl_->ech);
}

bool SpanTester::contains(const Vector& v) const {
  if (v.size() != dimension_)
    throw DomainError("span membership: vector of length " + std::to_string(v.size()) +
                      " in a space of dimension " + std::to_string(dimension_));
  return contains(to_sparse(v));
}

}  // namespace hhext::exactla
