#include "linklab/polynomial.hpp"

#include <algorithm>

#include "linklab/io.hpp"

namespace linklab {

PolyRing::PolyRing(std::vector<std::string> vars, FieldSpec field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(std::move(order)) {
  if (!field_.rational() && !is_prime_u32(field_.p))
    throw DomainError("field characteristic must be prime: " + std::to_string(field_.p));
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw StructuralError("empty variable name");
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw StructuralError("duplicate variable name: " + vars_[i]);
  }
}

RingPtr PolyRing::make(std::vector<std::string> vars, FieldSpec field, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(vars), field, std::move(order));
}

int PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
  if (this == &o) return true;
  return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring() || !b.ring()) throw StructuralError("detached polynomial in ring operation");
  if (a.ring() == b.ring()) return;
  if (!a.ring()->same_as(*b.ring())) throw StructuralError("polynomials from different rings");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> raw) : ring_(std::move(ring)) {
  normalize(std::move(raw));
}

void Polynomial::normalize(std::vector<Term> raw) {
  const auto& ord = ring_->order();
  for (const Term& t : raw) {
    if (t.mono.nvars() != ring_->nvars())
      throw StructuralError("term exponent length does not match ring");
    if (!(t.coef.field() == ring_->field()))
      throw StructuralError("term coefficient field does not match ring");
  }
  std::stable_sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) == Cmp::Greater;
  });
  terms_.clear();
  for (Term& t : raw) {
    if (t.coef.is_zero()) continue;
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef += t.coef;
      if (terms_.back().coef.is_zero()) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back({std::move(c), Monomial::unit(ring->nvars())});
  Polynomial p(ring);
  p.terms_ = std::move(t);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Scalar s = Scalar::integer(c, ring->field());
  return constant(std::move(ring), std::move(s));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t idx) {
  Polynomial p(ring);
  p.terms_.push_back({Scalar::one(ring->field()), Monomial::var(ring->nvars(), idx)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
  if (m.nvars() != ring->nvars()) throw StructuralError("monomial length does not match ring");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.total_degree() != terms_[0].mono.total_degree()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({-t.coef, t.mono});
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  const auto& ord = a.ring()->order();
  Polynomial out(a.ring());
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    Cmp c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c == Cmp::Greater) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c == Cmp::Less) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar s = a.terms_[i].coef + b.terms_[j].coef;
      if (!s.is_zero()) out.terms_.push_back({std::move(s), a.terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  // accumulate against the shorter factor
  const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Polynomial& big = a.terms_.size() <= b.terms_.size() ? b : a;
  Polynomial acc(a.ring());
  for (const Term& t : small.terms_) acc = acc + big.mul_term(t.coef, t.mono);
  return acc;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.coef * c, t.mono});
  return p;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.coef * c, t.mono * m});
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return scaled(lc().inverse());
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  if (!ring_->field().rational()) return monic();
  mpz_class den = 1;
  for (const Term& t : terms_) den = lcm(den, t.coef.rat().get_den());
  mpz_class num = 0;
  for (const Term& t : terms_) {
    mpz_class z = t.coef.rat().get_num() * (den / t.coef.rat().get_den());
    num = gcd(num, z);
  }
  mpq_class factor(den, num);  // canonicalized by Scalar::rational
  Scalar c = Scalar::rational(factor);
  if (lc().sign() < 0) c = -c;
  return scaled(c);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty() && ring_ == o.ring_;
  check_same_ring(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].coef == o.terms_[i].coef) || terms_[i].mono != o.terms_[i].mono) return false;
  return true;
}

int Polynomial::cmp(const Polynomial& o) const {
  check_same_ring(*this, o);
  const auto& ord = ring_->order();
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = ord.compare(terms_[i].mono, o.terms_[i].mono);
    if (c == Cmp::Greater) return 1;
    if (c == Cmp::Less) return -1;
    if (int s = terms_[i].coef.cmp(o.terms_[i].coef); s != 0) return s;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() > o.terms_.size() ? 1 : -1;
  return 0;
}

std::string Polynomial::str() const { return to_string(*this); }

Polynomial derivative(const Polynomial& f, std::size_t var) {
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    std::vector<std::uint32_t> v(t.mono.exps().begin(), t.mono.exps().end());
    v[var] -= 1;
    out.push_back({t.coef * Scalar::integer(e, t.coef.field()), Monomial(std::move(v))});
  }
  return Polynomial(f.ring(), std::move(out));
}

Polynomial map_vars(const Polynomial& f, const RingPtr& target, const std::vector<int>& index_map) {
  if (index_map.size() != f.ring()->nvars())
    throw StructuralError("variable map length does not match source ring");
  if (!(f.ring()->field() == target->field()))
    throw StructuralError("variable map across different fields");
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> v(target->nvars(), 0);
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      std::uint32_t e = t.mono[i];
      if (e == 0) continue;
      if (index_map[i] < 0)
        throw StructuralError("dropped variable " + f.ring()->var_name(i) + " has nonzero exponent");
      v.at(static_cast<std::size_t>(index_map[i])) += e;
    }
    out.push_back({t.coef, Monomial(std::move(v))});
  }
  return Polynomial(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, const std::vector<Polynomial>& images) {
  if (images.size() != f.ring()->nvars())
    throw StructuralError("substitution image count does not match source ring");
  Polynomial acc(target);
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) prod = prod * images[i];
    acc = acc + prod;
  }
  return acc;
}

std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& d) {
  check_same_ring(f, d);
  if (d.is_zero()) throw DomainError("exact division by zero polynomial");
  Polynomial rem = f;
  Polynomial quo(f.ring());
  while (!rem.is_zero()) {
    if (!d.lm().divides(rem.lm())) return std::nullopt;
    Scalar c = rem.lc() / d.lc();
    Monomial m = rem.lm().divide_by(d.lm());
    Polynomial piece = Polynomial::monomial(f.ring(), m, c);
    quo = quo + piece;
    rem = rem - d.mul_term(c, m);
  }
  return quo;
}

}  // namespace linklab
