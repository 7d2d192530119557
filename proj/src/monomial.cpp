#include "linklab/monomial.hpp"

#include <numeric>

namespace linklab {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  total_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::unit(std::size_t nvars) {
  return Monomial(std::vector<std::uint32_t>(nvars, 0));
}

Monomial Monomial::var(std::size_t nvars, std::size_t idx, std::uint32_t e) {
  std::vector<std::uint32_t> v(nvars, 0);
  v.at(idx) = e;
  return Monomial(std::move(v));
}

static void check_len(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw StructuralError("monomials over different variable counts: " +
                          std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_len(a, b);
  std::vector<std::uint32_t> v(a.nvars());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& m) const {
  check_len(*this, m);
  if (total_ > m.total_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& d) const {
  check_len(*this, d);
  std::vector<std::uint32_t> v(exps_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (d.exps_[i] > exps_[i]) throw StructuralError("inexact monomial division");
    v[i] = exps_[i] - d.exps_[i];
  }
  return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  check_len(a, b);
  std::vector<std::uint32_t> v(a.nvars());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a[i], b[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  check_len(a, b);
  std::vector<std::uint32_t> v(a.nvars());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a[i], b[i]);
  return Monomial(std::move(v));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  check_len(a, b);
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex); }
MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(Kind::Grevlex); }

MonomialOrder MonomialOrder::block(std::size_t split, MonomialOrder outer, MonomialOrder inner) {
  MonomialOrder o(Kind::Block);
  o.split_ = split;
  o.outer_ = std::make_shared<const MonomialOrder>(std::move(outer));
  o.inner_ = std::make_shared<const MonomialOrder>(std::move(inner));
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<std::uint64_t> weights, MonomialOrder tie_break) {
  MonomialOrder o(Kind::Weighted);
  o.weights_ = std::move(weights);
  o.inner_ = std::make_shared<const MonomialOrder>(std::move(tie_break));
  return o;
}

Cmp MonomialOrder::cmp_span(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const {
  switch (kind_) {
    case Kind::Lex: {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
      return Cmp::Equal;
    }
    case Kind::Grevlex: {
      std::uint64_t da = 0, db = 0;
      for (auto e : a) da += e;
      for (auto e : b) db += e;
      if (da != db) return da > db ? Cmp::Greater : Cmp::Less;
      // equal degree: the rightmost difference decides, smaller exponent wins
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
      return Cmp::Equal;
    }
    case Kind::Block: {
      std::size_t k = std::min(split_, a.size());
      if (Cmp c = outer_->cmp_span(a.first(k), b.first(k)); c != Cmp::Equal) return c;
      return inner_->cmp_span(a.subspan(k), b.subspan(k));
    }
    case Kind::Weighted: {
      std::uint64_t wa = 0, wb = 0;
      std::size_t k = std::min(a.size(), weights_.size());
      for (std::size_t i = 0; i < k; ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wa > wb ? Cmp::Greater : Cmp::Less;
      return inner_->cmp_span(a, b);
    }
  }
  return Cmp::Equal;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars())
    throw StructuralError("order applied to monomials of different variable counts");
  if (kind_ == Kind::Grevlex && a.total_degree() != b.total_degree())
    return a.total_degree() > b.total_degree() ? Cmp::Greater : Cmp::Less;
  return cmp_span(a.exps(), b.exps());
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Lex:
    case Kind::Grevlex:
      return true;
    case Kind::Block:
      return split_ == o.split_ && *outer_ == *o.outer_ && *inner_ == *o.inner_;
    case Kind::Weighted:
      return weights_ == o.weights_ && *inner_ == *o.inner_;
  }
  return false;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block(" + std::to_string(split_) + "; " + outer_->str() + "; " + inner_->str() + ")";
    case Kind::Weighted: {
      std::string s = "weighted([";
      for (std::size_t i = 0; i < weights_.size(); ++i)
        s += (i ? "," : "") + std::to_string(weights_[i]);
      return s + "]; " + inner_->str() + ")";
    }
  }
  return "?";
}

}  // namespace linklab
