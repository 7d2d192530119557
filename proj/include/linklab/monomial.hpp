#pragma once
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "linklab/errors.hpp"

namespace linklab {

// Dense exponent vector over a fixed variable list; total degree cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial unit(std::size_t nvars);
  static Monomial var(std::size_t nvars, std::size_t idx, std::uint32_t e = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exps() const { return exps_; }
  std::uint32_t total_degree() const { return total_; }
  bool is_unit() const { return total_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& m) const;       // this | m
  Monomial divide_by(const Monomial& d) const;  // exact quotient
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t total_ = 0;
};

enum class Cmp { Less, Equal, Greater };

// Total multiplicative order on monomials of one ring. Block orders compare an
// outer segment first, so any block(k, *, *) eliminates the first k variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block, Weighted };

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  static MonomialOrder block(std::size_t split, MonomialOrder outer, MonomialOrder inner);
  static MonomialOrder weighted(std::vector<std::uint64_t> weights, MonomialOrder tie_break);

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Less; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Greater; }
  bool operator==(const MonomialOrder& o) const;
  std::string str() const;

  Cmp cmp_span(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Grevlex;
  std::size_t split_ = 0;
  std::vector<std::uint64_t> weights_;
  std::shared_ptr<const MonomialOrder> outer_;
  std::shared_ptr<const MonomialOrder> inner_;  // tie break for weighted
};

}  // namespace linklab
