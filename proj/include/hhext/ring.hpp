#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hhext/complexes.hpp"
#include "hhext/exterior.hpp"
#include "hhext/linalg.hpp"
#include "hhext/resolution.hpp"

namespace hhext::ring {

using exactla::Field;
using exactla::Scalar;
using exterior::Monomial;
using resolution::ExponentVector;

/// λ e^m_e, a basis element of the degree-m cochains.
struct CochainKey {
  Monomial lambda;
  ExponentVector e;

  friend bool operator==(const CochainKey&, const CochainKey&) = default;
  friend std::strong_ordering operator<=>(const CochainKey& a, const CochainKey& b) {
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    return a.e <=> b.e;
  }
};

/// Element of Λ^{C(n+m-1,n-1)}, written in the basis λ e^m_e.
class CochainVector {
 public:
  CochainVector(unsigned n, unsigned m, Field field);

  /// c · λ e^m_e with m = |e|.
  static CochainVector term(Monomial lambda, const ExponentVector& e, const Scalar& c);
  static CochainVector term(Monomial lambda, const ExponentVector& e, Field field, long c = 1);
  /// Degree-0 cochain given by an element of Λ.
  static CochainVector from_element(const exterior::Element& a);

  unsigned n() const noexcept { return n_; }
  unsigned m() const noexcept { return m_; }
  Field field() const noexcept { return field_; }
  const std::map<CochainKey, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(Monomial lambda, const ExponentVector& e) const;

  void add_term(Monomial lambda, const ExponentVector& e, const Scalar& c);

  CochainVector operator-() const;
  CochainVector& operator+=(const CochainVector& o);
  CochainVector& operator-=(const CochainVector& o);
  CochainVector& operator*=(const Scalar& c);
  friend CochainVector operator+(CochainVector a, const CochainVector& b) { return a += b; }
  friend CochainVector operator-(CochainVector a, const CochainVector& b) { return a -= b; }
  friend CochainVector operator*(CochainVector a, const Scalar& c) { return a *= c; }
  friend bool operator==(const CochainVector& a, const CochainVector& b);

  /// Coordinates in the canonical chain basis of degree m.
  exactla::SparseVector to_sparse(const complexes::ChainBasis& basis) const;
  static CochainVector from_sparse(const complexes::ChainBasis& basis, const exactla::SparseVector& v,
                                   Field field);

  /// "-x1x2 e(1,1) + e(2,0)"; "0" when empty.
  std::string to_string() const;

 private:
  void check_compatible(const CochainVector& o) const;

  unsigned n_, m_;
  Field field_;
  std::map<CochainKey, Scalar> terms_;
};

/// Σ λλ' e^{s+t}_{e+e'} over all pairs of terms; bilinear, no reduction.
/// Throws DomainError when n or the field differ.
CochainVector cup(const CochainVector& a, const CochainVector& b);

/// Generators of HH*: x_i x_j, x_p e^1_q and e^2_{st} (the last has +1 at s and
/// at t). Indices are not required to be sorted; the Λ-product supplies the sign.
CochainVector gen_u(unsigned n, unsigned i, unsigned j, Field field);
CochainVector gen_v(unsigned n, unsigned p, unsigned q, Field field);
CochainVector gen_w(unsigned n, unsigned s, unsigned t, Field field);

/// Cohomology classes of Λ over a field of characteristic != 2. Caches the
/// cochain differentials and their images per degree. Not thread safe.
class CohomologyRing {
 public:
  CohomologyRing(unsigned n, Field field);
  ~CohomologyRing();
  CohomologyRing(CohomologyRing&&) noexcept;
  CohomologyRing& operator=(CohomologyRing&&) noexcept;

  unsigned n() const noexcept { return n_; }
  Field field() const noexcept { return field_; }

  /// Killed by the cochain differential leaving its degree.
  bool is_cocycle(const CochainVector& v);
  /// Lies in the image of the cochain differential entering its degree.
  bool is_coboundary(const CochainVector& v);

  /// {λ e^m : |λ| ≡ m mod 2}, 0 <= |λ| <= n, for m >= 1; center monomials at m = 0.
  std::vector<CochainVector> hh_basis(unsigned m);

  /// Keeps the components with |λ| ≡ m mod 2. The dropped part must be a
  /// coboundary, otherwise ConsistencyError. Degree 0 is returned unchanged.
  /// Throws DomainError when v is not a cocycle.
  CochainVector class_representative(const CochainVector& v);

  /// class_representative(cup(a, b)) for cocycles a, b.
  CochainVector cup_class(const CochainVector& a, const CochainVector& b);

 private:
  struct Degree;
  Degree& degree(unsigned m);
  void check(const CochainVector& v) const;

  unsigned n_;
  Field field_;
  std::map<unsigned, std::unique_ptr<Degree>> degrees_;
};

std::vector<CochainVector> hh_basis(unsigned n, unsigned m, Field field);
CochainVector class_representative(const CochainVector& v);

// ---------------------------------------------------------------------------
// Relations among the generators

enum class GenKind { u, v, w };

struct GenRef {
  GenKind kind;
  unsigned a, b;
  std::string to_string() const;
};

/// One relation family: for indices (i, j, s, t) the left side g1 g2, the right
/// side sign · h1 h2 (or 0).
struct RelationFamily {
  std::string id;
  std::string statement;
  GenKind left_first, left_second;
  bool (*condition)(unsigned i, unsigned j, unsigned s, unsigned t);
  /// Empty right side means the product vanishes.
  struct Rhs {
    int sign;
    GenRef first, second;
  };
  std::optional<Rhs> (*rhs)(unsigned i, unsigned j, unsigned s, unsigned t);
};

/// All 24 families relating the generators x_i x_j, x_p e^1_q and e^2_{st}, in
/// table order. Ids: uu.*, uv.*, uw.*, vv.*, vw.*, ww.*.
const std::vector<RelationFamily>& relation_families();

struct RelationInstance {
  std::string family;
  unsigned i, j, s, t;
  std::string lhs, rhs;  // canonical class representatives of both sides
  bool pass;
};

struct FamilyResult {
  std::string id;
  std::string statement;
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct RelationReport {
  unsigned n;
  Field field;
  std::vector<FamilyResult> families;
  std::vector<RelationInstance> instances;  // sorted by (family, i, j, s, t)
  bool all_pass() const;
};

/// Enumerates every (i, j, s, t) in [1, n]^4 whose left-side generators exist
/// (x_i x_j needs i < j, e^2_{st} needs s <= t) and which meets the family's side
/// condition, then compares both sides as classes. Requires char != 2.
RelationReport verify_table_h(unsigned n, Field field);

// ---------------------------------------------------------------------------
// Presentation by generators u_{ij}, v_{pq}, w_{st}

/// How the lower bound on the first u-index is read: 1 <= i_1 or 1 < i_1.
enum class LowerBound { inclusive, strict };

/// u_{i1 i2} ... u_{i_{2l-1} i_{2l}} [v_{i_{2l+1} j_1}] w_{..} ...
struct PresentationMonomial {
  std::vector<std::pair<unsigned, unsigned>> u;
  std::optional<std::pair<unsigned, unsigned>> v;
  std::vector<std::pair<unsigned, unsigned>> w;

  unsigned degree() const { return (v ? 1U : 0U) + 2U * static_cast<unsigned>(w.size()); }
  std::string to_string() const;
  friend bool operator==(const PresentationMonomial&, const PresentationMonomial&) = default;
};

/// Normal-form predicate: u-indices (then the v row index) strictly increasing
/// from the lower bound, column indices (v column then w pairs) weakly increasing.
bool is_normal(const PresentationMonomial& w, unsigned n, LowerBound bound);

/// Normal-form monomials of the given cohomological degree, in generation order.
std::vector<PresentationMonomial> normal_monomials(unsigned n, unsigned degree, LowerBound bound);

/// Image in HH*: x_{i1}...x_{ik} e_{Σ columns}, sign +1.
CochainVector presentation_image(const PresentationMonomial& w, unsigned n, Field field);

struct PresentationDegree {
  unsigned degree;
  std::size_t count_inclusive;
  std::size_t count_strict;
  mpz_class hh_dim;
  /// Rank of the images of the inclusive normal forms, as classes.
  std::size_t image_rank;
  bool matches() const { return hh_dim == static_cast<unsigned long>(count_inclusive); }
};

/// Requires char != 2 for the image ranks.
std::vector<PresentationDegree> presentation_graded_dims(unsigned n, unsigned deg_max,
                                                         Field field = Field::rationals());

// ---------------------------------------------------------------------------
// Characteristic 2 and ring axioms

struct Char2Report {
  unsigned n;
  unsigned deg_max;
  bool differentials_zero = true;
  bool products_match = true;
  bool commutative = true;
  bool dims_match = true;
  bool z_square_nonzero = true;
  std::size_t pairs_checked = 0;
  bool all_pass() const {
    return differentials_zero && products_match && commutative && dims_match && z_square_nonzero;
  }
};

/// Over F_2: every cochain differential up to deg_max vanishes, cup on basis
/// pairs is the product in Λ[z_1..z_n], dims are 2^n C(n+m-1, n-1), z_1^2 != 0.
Char2Report char2_ring_check(unsigned n, unsigned deg_max);

struct RingAxiomReport {
  unsigned n;
  unsigned total_degree_max;
  std::size_t triples = 0;
  std::size_t pairs = 0;
  std::size_t associativity_failures = 0;
  std::size_t commutativity_failures = 0;
  std::size_t unit_failures = 0;
  bool all_pass() const {
    return associativity_failures == 0 && commutativity_failures == 0 && unit_failures == 0;
  }
};

/// Associativity on basis triples (raw and as classes), graded commutativity on
/// basis pairs as classes, and the unit 1·e^0, for total degree <= the bound.
RingAxiomReport check_ring_axioms(unsigned n, Field field, unsigned total_degree_max);

}  // namespace hhext::ring
