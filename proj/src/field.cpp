#include "hhext/field.hpp"

#include "hhext/error.hpp"

namespace hhext::exactla {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

std::uint64_t reduce_long(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::of_characteristic(std::uint32_t c) {
  return c == 0 ? rationals() : prime(c);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(Field f) : field_(f) {
  if (f.is_rational())
    value_ = mpq_class(0);
  else
    value_ = std::uint64_t{0};
}

Scalar Scalar::from_int(Field f, long v) {
  Scalar s(f);
  if (f.is_rational())
    s.value_ = mpq_class(v);
  else
    s.value_ = reduce_long(v, f.characteristic());
  return s;
}

Scalar Scalar::from_mpz(Field f, const mpz_class& v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.value_ = mpq_class(v);
  } else {
    mpz_class r = v % f.characteristic();
    if (r < 0) r += f.characteristic();
    s.value_ = static_cast<std::uint64_t>(r.get_ui());
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s(Field::rationals());
  mpq_class c = q;
  c.canonicalize();
  s.value_ = std::move(c);
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw DomainError("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw DomainError("scalar is not a residue");
  return std::get<std::uint64_t>(value_);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw DomainError("mixing scalars over " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(s.value_);
    q = -q;
  } else {
    auto& r = std::get<std::uint64_t>(s.value_);
    r = r == 0 ? 0 : field_.characteristic() - r;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  else
    std::get<std::uint64_t>(value_) =
        (std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(o.value_)) %
        field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  else
    std::get<std::uint64_t>(value_) =
        (std::get<std::uint64_t>(value_) * std::get<std::uint64_t>(o.value_)) %
        field_.characteristic();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar s(*this);
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(s.value_);
    q = 1 / q;
  } else {
    const std::uint64_t p = field_.characteristic();
    s.value_ = mod_pow(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace hhext::exactla
