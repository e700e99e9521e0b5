#include "hhext/resolution.hpp"

#include <mutex>
#include <shared_mutex>
#include <set>
#include <string>
#include <utility>

#include "hhext/error.hpp"
#include "hhext/formulas.hpp"
#include "hhext/linalg.hpp"

namespace hhext::resolution {

using exactla::Scalar;

ExponentVector::ExponentVector(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

ExponentVector ExponentVector::unit(unsigned n, unsigned h) {
  if (h < 1 || h > n) throw DomainError("unit exponent index out of range");
  std::vector<std::uint32_t> v(n, 0);
  v[h - 1] = 1;
  return ExponentVector(std::move(v));
}

ExponentVector ExponentVector::pair(unsigned n, unsigned s, unsigned t) {
  return unit(n, s) + unit(n, t);
}

ExponentVector ExponentVector::plus_unit(unsigned h) const {
  ExponentVector out(*this);
  out.exps_.at(h - 1) += 1;
  out.degree_ += 1;
  return out;
}

std::optional<ExponentVector> ExponentVector::minus_unit(unsigned h) const {
  if (exps_.at(h - 1) == 0) return std::nullopt;
  ExponentVector out(*this);
  out.exps_[h - 1] -= 1;
  out.degree_ -= 1;
  return out;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.n() != b.n()) throw DomainError("adding exponent vectors of different length");
  std::vector<std::uint32_t> v(a.exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.exps_[i];
  return ExponentVector(std::move(v));
}

std::uint32_t ExponentVector::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) mask |= 1U << i;
  return mask;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

namespace {

void enumerate(unsigned n, unsigned remaining, std::vector<std::uint32_t>& prefix,
               std::vector<ExponentVector>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    prefix.push_back(e);
    enumerate(n, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> exponent_vectors(unsigned n, unsigned m) {
  if (n == 0) throw DomainError("exponent vectors need n >= 1");
  std::vector<ExponentVector> out;
  std::vector<std::uint32_t> prefix;
  enumerate(n, m, prefix, out);
  return out;
}

FreeElement::FreeElement(unsigned n, unsigned degree) : n_(n), degree_(degree) {}

FreeElement FreeElement::one(unsigned n) {
  FreeElement f(n, 0);
  f.terms_.emplace(Word{}, 1);
  return f;
}

FreeElement FreeElement::generator(unsigned n, unsigned h) {
  FreeElement f(n, 1);
  f.terms_.emplace(Word{static_cast<std::uint8_t>(h)}, 1);
  return f;
}

void FreeElement::add_term(const Word& w, const mpz_class& c) {
  if (w.size() != degree_) throw DomainError("word length differs from element degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  if (o.n_ != n_ || o.degree_ != degree_) throw DomainError("adding incompatible free elements");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement FreeElement::times_generator(unsigned h) const {
  FreeElement out(n_, degree_ + 1);
  for (const auto& [w, c] : terms_) {
    Word v(w);
    v.push_back(static_cast<std::uint8_t>(h));
    out.terms_.emplace(std::move(v), c);
  }
  return out;
}

FreeElement FreeElement::generator_times(unsigned h) const {
  FreeElement out(n_, degree_ + 1);
  for (const auto& [w, c] : terms_) {
    Word v;
    v.reserve(w.size() + 1);
    v.push_back(static_cast<std::uint8_t>(h));
    v.insert(v.end(), w.begin(), w.end());
    out.terms_.emplace(std::move(v), c);
  }
  return out;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += c.get_str() + "*";
    if (w.empty()) s += "1";
    for (auto h : w) s += "x" + std::to_string(h);
  }
  return s;
}

struct FElementCache::State {
  std::shared_mutex mutex;
  std::map<ExponentVector, std::shared_ptr<const FreeElement>> table;
};

FElementCache::FElementCache(unsigned n) : n_(n), state_(std::make_unique<State>()) {
  exterior::check_generator_count(n);
}

FElementCache::~FElementCache() = default;

std::shared_ptr<const FreeElement> FElementCache::get(const ExponentVector& e) {
  if (e.n() != n_) throw DomainError("exponent vector length differs from n");
  {
    std::shared_lock lock(state_->mutex);
    if (auto it = state_->table.find(e); it != state_->table.end()) return it->second;
  }
  FreeElement f(n_, e.degree());
  if (e.degree() == 0) {
    f = FreeElement::one(n_);
  } else {
    for (unsigned h = 1; h <= n_; ++h)
      if (auto prev = e.minus_unit(h)) f += get(*prev)->times_generator(h);
  }
  auto value = std::make_shared<const FreeElement>(std::move(f));
  std::unique_lock lock(state_->mutex);
  auto [it, inserted] = state_->table.try_emplace(e, std::move(value));
  return it->second;
}

namespace {

FElementCache& cache_for(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<FElementCache>> caches;
  std::lock_guard lock(mutex);
  auto& slot = caches[n];
  if (!slot) slot = std::make_unique<FElementCache>(n);
  return *slot;
}

}  // namespace

FreeElement build_f(unsigned n, const ExponentVector& e) {
  exterior::check_generator_count(n);
  return *cache_for(n).get(e);
}

bool has_multidegree(const FreeElement& f, const ExponentVector& e) {
  for (const auto& [w, c] : f.terms()) {
    std::vector<std::uint32_t> counts(f.n(), 0);
    for (auto h : w) counts.at(h - 1) += 1;
    if (counts != e.exponents()) return false;
  }
  return true;
}

std::vector<mpz_class> observed_coefficients(unsigned n, unsigned m) {
  std::set<mpz_class> seen;
  for (const auto& e : exponent_vectors(n, m)) {
    const FreeElement f = build_f(n, e);
    for (const auto& [w, c] : f.terms()) seen.insert(c);
  }
  return {seen.begin(), seen.end()};
}

ResolutionGeneratorMap resolution_map(unsigned n, unsigned m) {
  exterior::check_generator_count(n);
  if (m < 1) throw DomainError("resolution differential needs m >= 1");
  ResolutionGeneratorMap map{n, m, {}};
  const Monomial one = Monomial::identity(n);
  const int right_sign = (m % 2 == 0) ? 1 : -1;
  for (const auto& e : exponent_vectors(n, m)) {
    auto& summands = map.entries[e];
    for (unsigned h = 1; h <= n; ++h) {
      auto target = e.minus_unit(h);
      if (!target) continue;
      const Monomial xh = Monomial::generator(n, h);
      summands.push_back(Summand{1, xh, *target, one});
      summands.push_back(Summand{right_sign, one, *target, xh});
    }
  }
  return map;
}

bool verify_left_right(unsigned n, unsigned m) {
  exterior::check_generator_count(n);
  if (m < 1) throw DomainError("left/right recursion check needs m >= 1");
  for (const auto& e : exponent_vectors(n, m)) {
    FreeElement left(n, m);
    for (unsigned h = 1; h <= n; ++h)
      if (auto prev = e.minus_unit(h)) left += build_f(n, *prev).generator_times(h);
    if (!(left == build_f(n, e))) return false;
  }
  return true;
}

namespace {

// Coefficient vectors of R = {x_i^2} ∪ {x_i x_j + x_j x_i : i < j} inside the
// n^2-dimensional space of degree-2 words.
exactla::SpanTester relation_span(unsigned n, Field field) {
  exactla::SpanTester span(static_cast<std::size_t>(n) * n, field);
  auto index = [n](unsigned a, unsigned b) { return static_cast<std::uint32_t>((a - 1) * n + (b - 1)); };
  const Scalar one = Scalar::one(field);
  for (unsigned i = 1; i <= n; ++i) {
    span.insert({{index(i, i), one}});
    for (unsigned j = i + 1; j <= n; ++j) span.insert({{index(i, j), one}, {index(j, i), one}});
  }
  return span;
}

}  // namespace

bool verify_Km_membership(unsigned n, unsigned m) {
  exterior::check_generator_count(n);
  if (m < 2) throw DomainError("K_m membership needs m >= 2");
  const Field field = Field::rationals();
  const exactla::SpanTester r_span = relation_span(n, field);
  for (const auto& e : exponent_vectors(n, m)) {
    const FreeElement f = build_f(n, e);
    for (unsigned p = 0; p + 2 <= m; ++p) {
      const unsigned q = m - 2 - p;
      // (prefix, suffix) -> middle degree-2 element
      std::map<std::pair<Word, Word>, std::map<std::uint32_t, mpz_class>> groups;
      for (const auto& [w, c] : f.terms()) {
        Word prefix(w.begin(), w.begin() + p);
        Word suffix(w.end() - q, w.end());
        const std::uint32_t mid = (w[p] - 1U) * n + (w[p + 1] - 1U);
        groups[{std::move(prefix), std::move(suffix)}][mid] += c;
      }
      for (const auto& [key, middle] : groups) {
        exactla::SparseVector v;
        for (const auto& [idx, c] : middle)
          if (c != 0) v.emplace_back(idx, Scalar::from_mpz(field, c));
        if (!r_span.contains(v)) return false;
      }
    }
  }
  return true;
}

bool verify_dim_Km(unsigned n, unsigned m) {
  exterior::check_generator_count(n);
  const Field field = Field::rationals();
  const auto vectors = exponent_vectors(n, m);
  if (formulas::monomial_count(n, m) != static_cast<unsigned long>(vectors.size())) return false;
  std::map<Word, std::uint32_t> word_index;
  std::vector<FreeElement> family;
  for (const auto& e : vectors) {
    family.push_back(build_f(n, e));
    for (const auto& [w, c] : family.back().terms()) word_index.try_emplace(w, 0);
  }
  std::uint32_t next = 0;
  for (auto& [w, idx] : word_index) idx = next++;
  exactla::SparseMatrix::Builder b(word_index.size(), family.size(), field);
  for (std::size_t col = 0; col < family.size(); ++col)
    for (const auto& [w, c] : family[col].terms())
      b.add(word_index.at(w), col, Scalar::from_mpz(field, c));
  return exactla::rank(std::move(b).build()) == family.size();
}

bool verify_delta_squared_zero(unsigned n, unsigned m, Field field) {
  exterior::check_generator_count(n);
  if (m < 1) throw DomainError("δ∘δ check needs m >= 1");
  const ResolutionGeneratorMap outer = resolution_map(n, m + 1);
  const ResolutionGeneratorMap inner = resolution_map(n, m);
  for (const auto& [source, summands] : outer.entries) {
    // target generator -> element of Λ ⊗ Λ^op, keyed by (left, right)
    std::map<ExponentVector, std::map<std::pair<Monomial, Monomial>, Scalar>> image;
    for (const Summand& s1 : summands) {
      for (const Summand& s2 : inner.entries.at(s1.target)) {
        auto left = exterior::multiply(s1.left, s2.left);
        auto right = exterior::multiply(s2.right, s1.right);
        if (!left || !right) continue;
        const long sign = s1.sign * s2.sign * left->sign * right->sign;
        auto& slot = image[s2.target];
        auto [it, inserted] =
            slot.try_emplace({left->monomial, right->monomial}, Scalar::from_int(field, sign));
        if (!inserted) it->second += Scalar::from_int(field, sign);
      }
    }
    for (const auto& [target, element] : image)
      for (const auto& [key, c] : element)
        if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace hhext::resolution
