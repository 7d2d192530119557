#include "linklab/scalar.hpp"

namespace linklab {

std::string FieldSpec::str() const {
  return rational() ? "QQ" : "FF(" + std::to_string(p) + ")";
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
  if (a == 0) throw DomainError("division by zero in FF(" + std::to_string(p) + ")");
  // extended Euclid; p < 2^31 keeps everything in int64 range
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::zero(FieldSpec f) {
  Scalar s;
  s.p_ = f.p;
  return s;
}

Scalar Scalar::one(FieldSpec f) { return integer(1, f); }

Scalar Scalar::integer(long v, FieldSpec f) {
  Scalar s;
  s.p_ = f.p;
  if (f.rational()) {
    s.q_ = v;
  } else {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += f.p;
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_mpz(const mpz_class& v, FieldSpec f) {
  Scalar s;
  s.p_ = f.p;
  if (f.rational()) {
    s.q_ = v;
  } else {
    mpz_class m = v % mpz_class(f.p);
    if (m < 0) m += f.p;
    s.r_ = m.get_ui();
  }
  return s;
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint32_t p) {
  if (!is_prime_u32(p)) throw DomainError("field characteristic must be prime: " + std::to_string(p));
  Scalar s;
  s.p_ = p;
  s.r_ = v % p;
  return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

int Scalar::sign() const {
  if (p_ != 0) return r_ == 0 ? 0 : 1;
  return sgn(q_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -s.q_;
  else if (s.r_ != 0)
    s.r_ = p_ - s.r_;
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s = *this;
  if (p_ == 0) {
    if (q_ == 0) throw DomainError("division by zero in QQ");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, p_);
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw StructuralError("mixed coefficient fields: " + field().str() + " vs " + o.field().str());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ -= o.q_;
  else
    r_ = (r_ + p_ - o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = (r_ * o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& o) const {
  check_same(o);
  if (p_ != 0) return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
  return ::cmp(q_, o.q_);
}

const mpq_class& Scalar::rat() const {
  if (p_ != 0) throw StructuralError("residue scalar has no rational view");
  return q_;
}

Scalar Scalar::abs() const {
  if (p_ != 0) return *this;
  Scalar s = *this;
  s.q_ = ::abs(s.q_);
  return s;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace linklab
