#include "hhext/ring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hhext/error.hpp"
#include "hhext/formulas.hpp"

namespace hhext::ring {

namespace {

ExponentVector zero_exponent(unsigned n) { return ExponentVector::zero(n); }

bool right_parity(Monomial lambda, unsigned m) { return lambda.degree() % 2 == m % 2; }

}  // namespace

// ---------------------------------------------------------------------------
// CochainVector

CochainVector::CochainVector(unsigned n, unsigned m, Field field) : n_(n), m_(m), field_(field) {
  exterior::check_generator_count(n);
}

CochainVector CochainVector::term(Monomial lambda, const ExponentVector& e, const Scalar& c) {
  CochainVector v(lambda.n(), e.degree(), c.field());
  v.add_term(lambda, e, c);
  return v;
}

CochainVector CochainVector::term(Monomial lambda, const ExponentVector& e, Field field, long c) {
  return term(lambda, e, Scalar::from_int(field, c));
}

CochainVector CochainVector::from_element(const exterior::Element& a) {
  CochainVector v(a.n(), 0, a.field());
  for (const auto& [mono, c] : a.terms()) v.add_term(mono, zero_exponent(a.n()), c);
  return v;
}

Scalar CochainVector::coefficient(Monomial lambda, const ExponentVector& e) const {
  auto it = terms_.find({lambda, e});
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void CochainVector::add_term(Monomial lambda, const ExponentVector& e, const Scalar& c) {
  if (lambda.n() != n_ || e.n() != n_ || e.degree() != m_)
    throw DomainError("term " + lambda.to_string() + " e" + e.to_string() + " does not belong to degree " +
                      std::to_string(m_) + " cochains on n = " + std::to_string(n_));
  if (c.field() != field_) throw DomainError("coefficient field differs from cochain field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(CochainKey{lambda, e}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CochainVector::check_compatible(const CochainVector& o) const {
  if (n_ != o.n_ || m_ != o.m_ || field_ != o.field_)
    throw DomainError("cochains differ in n, degree or field");
}

CochainVector CochainVector::operator-() const {
  CochainVector r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

CochainVector& CochainVector::operator+=(const CochainVector& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k.lambda, k.e, c);
  return *this;
}

CochainVector& CochainVector::operator-=(const CochainVector& o) { return *this += -o; }

CochainVector& CochainVector::operator*=(const Scalar& c) {
  if (c.field() != field_) throw DomainError("scalar field differs from cochain field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool operator==(const CochainVector& a, const CochainVector& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

exactla::SparseVector CochainVector::to_sparse(const complexes::ChainBasis& basis) const {
  if (basis.n() != n_ || basis.m() != m_) throw DomainError("basis does not match cochain degree");
  exactla::SparseVector out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_)
    out.emplace_back(static_cast<std::uint32_t>(basis.index_of(k.lambda, k.e)), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

CochainVector CochainVector::from_sparse(const complexes::ChainBasis& basis,
                                         const exactla::SparseVector& v, Field field) {
  CochainVector out(basis.n(), basis.m(), field);
  for (const auto& [i, c] : v) out.add_term(basis[i].lambda, basis[i].e, c);
  return out;
}

std::string CochainVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (coeff != "1") os << coeff << "*";
    if (!k.lambda.is_identity()) os << k.lambda.to_string() << " ";
    os << "e" << k.e.to_string();
  }
  return os.str();
}

CochainVector cup(const CochainVector& a, const CochainVector& b) {
  if (a.n() != b.n() || a.field() != b.field())
    throw DomainError("cup product of cochains with different n or field");
  CochainVector out(a.n(), a.m() + b.m(), a.field());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      auto p = exterior::multiply(ka.lambda, kb.lambda);
      if (!p) continue;
      Scalar c = ca * cb;
      if (p->sign < 0) c = -c;
      out.add_term(p->monomial, ka.e + kb.e, c);
    }
  return out;
}

CochainVector gen_u(unsigned n, unsigned i, unsigned j, Field field) {
  auto p = exterior::multiply(Monomial::generator(n, i), Monomial::generator(n, j));
  CochainVector out(n, 0, field);
  if (p) out.add_term(p->monomial, zero_exponent(n), Scalar::from_int(field, p->sign));
  return out;
}

CochainVector gen_v(unsigned n, unsigned p, unsigned q, Field field) {
  return CochainVector::term(Monomial::generator(n, p), ExponentVector::unit(n, q), field);
}

CochainVector gen_w(unsigned n, unsigned s, unsigned t, Field field) {
  return CochainVector::term(Monomial::identity(n), ExponentVector::pair(n, s, t), field);
}

// ---------------------------------------------------------------------------
// CohomologyRing

struct CohomologyRing::Degree {
  complexes::ComplexSlice outgoing;            // N^m -> N^{m+1}
  std::optional<exactla::SpanTester> image;  // image of N^{m-1} -> N^m
};

CohomologyRing::CohomologyRing(unsigned n, Field field) : n_(n), field_(field) {
  exterior::check_generator_count(n);
  if (field.characteristic() == 2)
    throw DomainError("cohomology classes by parity projection need characteristic != 2");
}

CohomologyRing::~CohomologyRing() = default;
CohomologyRing::CohomologyRing(CohomologyRing&&) noexcept = default;
CohomologyRing& CohomologyRing::operator=(CohomologyRing&&) noexcept = default;

CohomologyRing::Degree& CohomologyRing::degree(unsigned m) {
  auto it = degrees_.find(m);
  if (it != degrees_.end()) return *it->second;
  auto d = std::make_unique<Degree>(Degree{complexes::cochain_matrix(n_, m, field_), std::nullopt});
  if (m > 0) d->image.emplace(complexes::cochain_matrix(n_, m - 1, field_).matrix);
  return *degrees_.emplace(m, std::move(d)).first->second;
}

void CohomologyRing::check(const CochainVector& v) const {
  if (v.n() != n_ || v.field() != field_) throw DomainError("cochain does not belong to this ring");
}

bool CohomologyRing::is_cocycle(const CochainVector& v) {
  check(v);
  const auto& slice = degree(v.m()).outgoing;
  std::map<std::uint32_t, Scalar> acc;
  for (const auto& [i, c] : v.to_sparse(slice.source))
    for (const auto& [r, x] : slice.matrix.column(i)) {
      auto [it, inserted] = acc.try_emplace(r, x * c);
      if (!inserted) it->second += x * c;
    }
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool CohomologyRing::is_coboundary(const CochainVector& v) {
  check(v);
  if (v.is_zero()) return true;
  if (v.m() == 0) return false;
  auto& d = degree(v.m());
  return d.image->contains(v.to_sparse(d.outgoing.source));
}

std::vector<CochainVector> CohomologyRing::hh_basis(unsigned m) {
  std::vector<CochainVector> out;
  if (m == 0) {
    for (Monomial c : exterior::center_basis(n_, field_))
      out.push_back(CochainVector::term(c, zero_exponent(n_), field_));
    return out;
  }
  const auto exps = resolution::exponent_vectors(n_, m);
  for (Monomial lambda : exterior::monomial_basis(n_)) {
    if (!right_parity(lambda, m)) continue;
    for (const auto& e : exps) out.push_back(CochainVector::term(lambda, e, field_));
  }
  return out;
}

CochainVector CohomologyRing::class_representative(const CochainVector& v) {
  check(v);
  if (!is_cocycle(v)) throw DomainError("class_representative needs a cocycle, got " + v.to_string());
  if (v.m() == 0) return v;
  CochainVector kept(n_, v.m(), field_), dropped(n_, v.m(), field_);
  for (const auto& [k, c] : v.terms())
    (right_parity(k.lambda, v.m()) ? kept : dropped).add_term(k.lambda, k.e, c);
  if (!dropped.is_zero() && !is_coboundary(dropped))
    throw ConsistencyError("wrong-parity part of a cocycle is not a coboundary: " + dropped.to_string());
  return kept;
}

CochainVector CohomologyRing::cup_class(const CochainVector& a, const CochainVector& b) {
  return class_representative(cup(a, b));
}

std::vector<CochainVector> hh_basis(unsigned n, unsigned m, Field field) {
  return CohomologyRing(n, field).hh_basis(m);
}

CochainVector class_representative(const CochainVector& v) {
  return CohomologyRing(v.n(), v.field()).class_representative(v);
}

// ---------------------------------------------------------------------------
// Relation families

std::string GenRef::to_string() const {
  const char* name = kind == GenKind::u ? "u" : kind == GenKind::v ? "v" : "w";
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

namespace {

using Rhs = RelationFamily::Rhs;
constexpr GenKind U = GenKind::u, V = GenKind::v, W = GenKind::w;

std::optional<Rhs> make(int sign, GenKind k1, unsigned a1, unsigned b1, GenKind k2, unsigned a2, unsigned b2) {
  return Rhs{sign, {k1, a1, b1}, {k2, a2, b2}};
}

std::vector<RelationFamily> build_families() {
  using u32 = unsigned;
  std::vector<RelationFamily> f;
  // u u
  f.push_back({"uu.1", "u_ij u_st = u_st u_ij if i<j and s<t", U, U,
               [](u32 i, u32 j, u32 s, u32 t) { return i < j && s < t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, U, s, t, U, i, j); }});
  f.push_back({"uu.2", "u_ij u_st = 0 if {i,j} meets {s,t}", U, U,
               [](u32 i, u32 j, u32 s, u32 t) { return i == s || i == t || j == s || j == t; },
               [](u32, u32, u32, u32) { return std::optional<Rhs>{}; }});
  f.push_back({"uu.3", "u_ij u_st = -u_is u_jt if i<s<j<t", U, U,
               [](u32 i, u32 j, u32 s, u32 t) { return i < s && s < j && j < t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(-1, U, i, s, U, j, t); }});
  f.push_back({"uu.4", "u_ij u_st = u_is u_tj if i<s<t<j", U, U,
               [](u32 i, u32 j, u32 s, u32 t) { return i < s && s < t && t < j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, U, i, s, U, t, j); }});
  f.push_back({"uu.5", "u_ij u_st = -u_si u_tj if s<i<t<j", U, U,
               [](u32 i, u32 j, u32 s, u32 t) { return s < i && i < t && t < j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(-1, U, s, i, U, t, j); }});
  f.push_back({"uu.6", "u_ij u_st = u_si u_jt if s<i<j<t", U, U,
               [](u32 i, u32 j, u32 s, u32 t) { return s < i && i < j && j < t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, U, s, i, U, j, t); }});
  // u v
  f.push_back({"uv.1", "u_ij v_st = v_st u_ij if i<j", U, V,
               [](u32 i, u32 j, u32, u32) { return i < j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, V, s, t, U, i, j); }});
  f.push_back({"uv.2", "u_ij v_st = 0 if s in {i,j}", U, V,
               [](u32 i, u32 j, u32 s, u32) { return s == i || s == j; },
               [](u32, u32, u32, u32) { return std::optional<Rhs>{}; }});
  f.push_back({"uv.3", "u_ij v_st = u_si v_jt if s<i<j", U, V,
               [](u32 i, u32 j, u32 s, u32) { return s < i && i < j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, U, s, i, V, j, t); }});
  f.push_back({"uv.4", "u_ij v_st = -u_is v_jt if i<s<j", U, V,
               [](u32 i, u32 j, u32 s, u32) { return i < s && s < j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(-1, U, i, s, V, j, t); }});
  // u w
  f.push_back({"uw.1", "u_ij w_st = w_st u_ij if i<j and s<=t", U, W,
               [](u32 i, u32 j, u32 s, u32 t) { return i < j && s <= t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, W, s, t, U, i, j); }});
  // v v
  f.push_back({"vv.1", "v_ij v_st = 0 if i=s", V, V,
               [](u32 i, u32, u32 s, u32) { return i == s; },
               [](u32, u32, u32, u32) { return std::optional<Rhs>{}; }});
  f.push_back({"vv.2", "v_ij v_st = u_is w_jt if i<s and j<=t", V, V,
               [](u32 i, u32 j, u32 s, u32 t) { return i < s && j <= t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, U, i, s, W, j, t); }});
  f.push_back({"vv.3", "v_ij v_st = u_is w_tj if i<s and t<=j", V, V,
               [](u32 i, u32 j, u32 s, u32 t) { return i < s && t <= j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, U, i, s, W, t, j); }});
  f.push_back({"vv.4", "v_ij v_st = -u_si w_jt if s<i and j<=t", V, V,
               [](u32 i, u32 j, u32 s, u32 t) { return s < i && j <= t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(-1, U, s, i, W, j, t); }});
  f.push_back({"vv.5", "v_ij v_st = -u_si w_tj if s<i and t<=j", V, V,
               [](u32 i, u32 j, u32 s, u32 t) { return s < i && t <= j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(-1, U, s, i, W, t, j); }});
  // v w
  f.push_back({"vw.1", "v_ij w_st = w_st v_ij if s<=t", V, W,
               [](u32, u32, u32 s, u32 t) { return s <= t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, W, s, t, V, i, j); }});
  f.push_back({"vw.2", "v_ij w_st = v_is w_jt if s<j<=t", V, W,
               [](u32, u32 j, u32 s, u32 t) { return s < j && j <= t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, V, i, s, W, j, t); }});
  f.push_back({"vw.3", "v_ij w_st = v_is w_tj if s<t<=j", V, W,
               [](u32, u32 j, u32 s, u32 t) { return s < t && t <= j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, V, i, s, W, t, j); }});
  // w w
  f.push_back({"ww.1", "w_ij w_st = w_st w_ij if i<=j and s<=t", W, W,
               [](u32 i, u32 j, u32 s, u32 t) { return i <= j && s <= t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, W, s, t, W, i, j); }});
  f.push_back({"ww.2", "w_ij w_st = w_is w_jt if i<=s<=j<=t", W, W,
               [](u32 i, u32 j, u32 s, u32 t) { return i <= s && s <= j && j <= t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, W, i, s, W, j, t); }});
  f.push_back({"ww.3", "w_ij w_st = w_is w_tj if i<=s<=t<=j", W, W,
               [](u32 i, u32 j, u32 s, u32 t) { return i <= s && s <= t && t <= j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, W, i, s, W, t, j); }});
  f.push_back({"ww.4", "w_ij w_st = w_si w_tj if s<=i<=t<=j", W, W,
               [](u32 i, u32 j, u32 s, u32 t) { return s <= i && i <= t && t <= j; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, W, s, i, W, t, j); }});
  f.push_back({"ww.5", "w_ij w_st = w_si w_jt if s<=i<=j<=t", W, W,
               [](u32 i, u32 j, u32 s, u32 t) { return s <= i && i <= j && j <= t; },
               [](u32 i, u32 j, u32 s, u32 t) { return make(1, W, s, i, W, j, t); }});
  return f;
}

CochainVector evaluate(const GenRef& g, unsigned n, Field field) {
  switch (g.kind) {
    case GenKind::u: return gen_u(n, g.a, g.b, field);
    case GenKind::v: return gen_v(n, g.a, g.b, field);
    case GenKind::w: return gen_w(n, g.a, g.b, field);
  }
  throw ConsistencyError("unknown generator kind");
}

bool generator_exists(GenKind k, unsigned a, unsigned b) {
  switch (k) {
    case GenKind::u: return a < b;
    case GenKind::v: return true;
    case GenKind::w: return a <= b;
  }
  return false;
}

unsigned gen_degree(GenKind k) { return k == GenKind::u ? 0 : k == GenKind::v ? 1 : 2; }

}  // namespace

const std::vector<RelationFamily>& relation_families() {
  static const std::vector<RelationFamily> families = build_families();
  return families;
}

bool RelationReport::all_pass() const {
  return std::all_of(families.begin(), families.end(), [](const auto& f) { return f.failures == 0; });
}

RelationReport verify_table_h(unsigned n, Field field) {
  CohomologyRing ring(n, field);
  RelationReport report{n, field, {}, {}};
  for (const auto& fam : relation_families()) {
    FamilyResult result{fam.id, fam.statement};
    const unsigned degree = gen_degree(fam.left_first) + gen_degree(fam.left_second);
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j)
        for (unsigned s = 1; s <= n; ++s)
          for (unsigned t = 1; t <= n; ++t) {
            if (!generator_exists(fam.left_first, i, j) || !generator_exists(fam.left_second, s, t)) continue;
            if (!fam.condition(i, j, s, t)) continue;
            const CochainVector lhs = ring.cup_class(evaluate({fam.left_first, i, j}, n, field),
                                                     evaluate({fam.left_second, s, t}, n, field));
            CochainVector rhs(n, degree, field);
            if (auto r = fam.rhs(i, j, s, t)) {
              rhs = ring.cup_class(evaluate(r->first, n, field), evaluate(r->second, n, field));
              if (r->sign < 0) rhs = -rhs;
            }
            const bool pass = lhs == rhs;
            ++result.instances;
            if (!pass) ++result.failures;
            report.instances.push_back({fam.id, i, j, s, t, lhs.to_string(), rhs.to_string(), pass});
          }
    report.families.push_back(std::move(result));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Presentation

std::string PresentationMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char name, std::pair<unsigned, unsigned> ij) {
    if (!first) os << " ";
    first = false;
    os << name << "(" << ij.first << "," << ij.second << ")";
  };
  for (auto p : u) emit('u', p);
  if (v) emit('v', *v);
  for (auto p : w) emit('w', p);
  return first ? "1" : os.str();
}

bool is_normal(const PresentationMonomial& mono, unsigned n, LowerBound bound) {
  std::vector<unsigned> rows;
  for (auto [i, j] : mono.u) {
    rows.push_back(i);
    rows.push_back(j);
  }
  if (mono.v) rows.push_back(mono.v->first);
  std::vector<unsigned> cols;
  if (mono.v) cols.push_back(mono.v->second);
  for (auto [s, t] : mono.w) {
    cols.push_back(s);
    cols.push_back(t);
  }
  const unsigned low = bound == LowerBound::inclusive ? 1 : 2;
  if (!rows.empty() && rows.front() < low) return false;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] > n) return false;
    if (k > 0 && rows[k] <= rows[k - 1]) return false;
  }
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] < 1 || cols[k] > n) return false;
    if (k > 0 && cols[k] < cols[k - 1]) return false;
  }
  return true;
}

namespace {

void weak_sequences(unsigned n, unsigned len, unsigned start, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (unsigned x = start; x <= n; ++x) {
    cur.push_back(x);
    weak_sequences(n, len, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PresentationMonomial> normal_monomials(unsigned n, unsigned degree, LowerBound bound) {
  exterior::check_generator_count(n);
  const bool odd = degree % 2 == 1;
  const unsigned low = bound == LowerBound::inclusive ? 1 : 2;
  std::vector<std::vector<unsigned>> columns;
  std::vector<unsigned> cur;
  weak_sequences(n, degree, 1, cur, columns);
  std::vector<PresentationMonomial> out;
  // row index sets drawn from [low, n], increasing bit order
  const unsigned width = n + 1 - low;
  for (std::uint32_t subset = 0; subset < (1U << width); ++subset) {
    const unsigned size = static_cast<unsigned>(std::popcount(subset));
    if (size % 2 != (odd ? 1U : 0U)) continue;
    std::vector<unsigned> rows;
    for (unsigned b = 0; b < width; ++b)
      if (subset >> b & 1U) rows.push_back(low + b);
    for (const auto& cols : columns) {
      PresentationMonomial mono;
      const std::size_t paired = odd ? rows.size() - 1 : rows.size();
      std::size_t r = 0;
      for (; r < paired; r += 2) mono.u.emplace_back(rows[r], rows[r + 1]);
      std::size_t c = 0;
      if (odd) {
        mono.v = std::make_pair(rows[r], cols[0]);
        c = 1;
      }
      for (; c < cols.size(); c += 2) mono.w.emplace_back(cols[c], cols[c + 1]);
      out.push_back(std::move(mono));
    }
  }
  return out;
}

CochainVector presentation_image(const PresentationMonomial& mono, unsigned n, Field field) {
  std::uint32_t mask = 0;
  for (auto [i, j] : mono.u) mask |= (1U << (i - 1)) | (1U << (j - 1));
  std::vector<std::uint32_t> exps(n, 0);
  if (mono.v) {
    mask |= 1U << (mono.v->first - 1);
    ++exps[mono.v->second - 1];
  }
  for (auto [s, t] : mono.w) {
    ++exps[s - 1];
    ++exps[t - 1];
  }
  return CochainVector::term(Monomial::from_mask(n, mask), ExponentVector(std::move(exps)), field);
}

std::vector<PresentationDegree> presentation_graded_dims(unsigned n, unsigned deg_max, Field field) {
  CohomologyRing ring(n, field);
  std::vector<PresentationDegree> out;
  for (unsigned d = 0; d <= deg_max; ++d) {
    const auto inclusive = normal_monomials(n, d, LowerBound::inclusive);
    const auto strict = normal_monomials(n, d, LowerBound::strict);
    const complexes::ChainBasis basis(n, d);
    exactla::SpanTester span(basis.size(), field);
    for (const auto& mono : inclusive) span.insert(ring.class_representative(presentation_image(mono, n, field)).to_sparse(basis));
    out.push_back({d, inclusive.size(), strict.size(), formulas::hhc_dim_formula(n, d, field.characteristic()),
                   span.rank()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic 2

Char2Report char2_ring_check(unsigned n, unsigned deg_max) {
  exterior::check_generator_count(n);
  const Field f2 = Field::prime(2);
  Char2Report report{n, deg_max};
  for (unsigned m = 0; m <= deg_max; ++m) {
    if (!complexes::cochain_matrix(n, m, f2).matrix.is_zero()) report.differentials_zero = false;
    const std::size_t dim = complexes::hhc_dim_computed(n, m, f2);
    if (formulas::pow2(n) * formulas::monomial_count(n, m) != static_cast<unsigned long>(dim))
      report.dims_match = false;
  }
  const auto monomials = exterior::monomial_basis(n);
  std::vector<std::vector<ExponentVector>> exps;
  for (unsigned m = 0; m <= deg_max; ++m) exps.push_back(resolution::exponent_vectors(n, m));
  for (unsigned s = 0; s <= deg_max; ++s)
    for (unsigned t = 0; s + t <= deg_max; ++t)
      for (Monomial a : monomials)
        for (const auto& e : exps[s])
          for (Monomial b : monomials)
            for (const auto& e2 : exps[t]) {
              const auto x = CochainVector::term(a, e, f2);
              const auto y = CochainVector::term(b, e2, f2);
              const auto xy = cup(x, y);
              CochainVector expected(n, s + t, f2);
              if ((a.mask() & b.mask()) == 0)
                expected.add_term(Monomial::from_mask(n, a.mask() | b.mask()), e + e2, Scalar::one(f2));
              if (xy != expected) report.products_match = false;
              if (xy != cup(y, x)) report.commutative = false;
              ++report.pairs_checked;
            }
  if (deg_max >= 2) {
    const auto z1 = CochainVector::term(Monomial::identity(n), ExponentVector::unit(n, 1), f2);
    report.z_square_nonzero = !cup(z1, z1).is_zero();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Ring axioms

RingAxiomReport check_ring_axioms(unsigned n, Field field, unsigned total_degree_max) {
  CohomologyRing ring(n, field);
  RingAxiomReport report{n, total_degree_max};
  std::vector<std::vector<CochainVector>> basis;
  for (unsigned m = 0; m <= total_degree_max; ++m) basis.push_back(ring.hh_basis(m));
  const auto unit = CochainVector::term(Monomial::identity(n), zero_exponent(n), field);
  for (unsigned m = 0; m <= total_degree_max; ++m)
    for (const auto& a : basis[m])
      if (cup(unit, a) != a || cup(a, unit) != a) ++report.unit_failures;

  // pairwise products, reused for the triples
  const unsigned D = total_degree_max;
  std::map<std::pair<unsigned, unsigned>, std::vector<CochainVector>> raw, cls;
  for (unsigned s = 0; s <= D; ++s)
    for (unsigned t = 0; s + t <= D; ++t) {
      auto& r = raw[{s, t}];
      auto& c = cls[{s, t}];
      r.reserve(basis[s].size() * basis[t].size());
      for (const auto& a : basis[s])
        for (const auto& b : basis[t]) {
          r.push_back(cup(a, b));
          c.push_back(ring.class_representative(r.back()));
        }
    }
  const Scalar minus_one = Scalar::from_int(field, -1);
  for (unsigned s = 0; s <= D; ++s)
    for (unsigned t = 0; s + t <= D; ++t) {
      const auto& st = cls[{s, t}];
      const auto& ts = cls[{t, s}];
      const std::size_t ns = basis[s].size(), nt = basis[t].size();
      for (std::size_t x = 0; x < ns; ++x)
        for (std::size_t y = 0; y < nt; ++y) {
          const CochainVector& lhs = st[x * nt + y];
          CochainVector rhs = ts[y * ns + x];
          if ((s * t) % 2 == 1) rhs *= minus_one;
          if (lhs != rhs) ++report.commutativity_failures;
          ++report.pairs;
        }
    }
  for (unsigned s = 0; s <= D; ++s)
    for (unsigned t = 0; s + t <= D; ++t)
      for (unsigned u = 0; s + t + u <= D; ++u) {
        const auto& ab_raw = raw[{s, t}];
        const auto& bc_raw = raw[{t, u}];
        const auto& ab_cls = cls[{s, t}];
        const auto& bc_cls = cls[{t, u}];
        const std::size_t ns = basis[s].size(), nt = basis[t].size(), nu = basis[u].size();
        for (std::size_t x = 0; x < ns; ++x)
          for (std::size_t y = 0; y < nt; ++y)
            for (std::size_t z = 0; z < nu; ++z) {
              const auto& a = basis[s][x];
              const auto& c = basis[u][z];
              bool ok = cup(ab_raw[x * nt + y], c) == cup(a, bc_raw[y * nu + z]);
              if (ok)
                ok = ring.cup_class(ab_cls[x * nt + y], c) == ring.cup_class(a, bc_cls[y * nu + z]);
              if (!ok) ++report.associativity_failures;
              ++report.triples;
            }
      }
  return report;
}

}  // namespace hhext::ring
