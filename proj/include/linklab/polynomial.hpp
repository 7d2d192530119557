#pragma once
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linklab/monomial.hpp"
#include "linklab/scalar.hpp"

namespace linklab {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Ambient polynomial ring: variable names, coefficient field, monomial order.
// Immutable and shared; identity is structural (pointer equality short-cut).
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, FieldSpec field, MonomialOrder order);
  static RingPtr make(std::vector<std::string> vars, FieldSpec field = {},
                      MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  int var_index(std::string_view name) const;  // -1 when absent
  FieldSpec field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  bool same_as(const PolyRing& o) const;

 private:
  std::vector<std::string> vars_;
  FieldSpec field_;
  MonomialOrder order_;
};

struct Term {
  Scalar coef;
  Monomial mono;
};

// Sparse polynomial: terms strictly descending in the ring order, none zero.
class Polynomial {
 public:
  Polynomial() = default;  // detached; only valid as a container placeholder
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  // Normalizes arbitrary raw terms: sorts, merges, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> raw);

  static Polynomial constant(RingPtr ring, Scalar c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t idx);
  static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  const Term& leading() const;
  const Monomial& lm() const { return leading().mono; }
  const Scalar& lc() const { return leading().coef; }
  std::uint32_t total_degree() const;  // max over terms; zero polynomial -> 0
  bool is_homogeneous() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial mul_term(const Scalar& c, const Monomial& m) const;

  // Leading coefficient \to 1.
  Polynomial monic() const;
  // Over QQ: clear denominators, divide by integer content, positive lead.
  // Over FF(p) this is monic().
  Polynomial primitive() const;

  bool operator==(const Polynomial& o) const;
  // Total order for canonical generator sorting (same ring assumed).
  int cmp(const Polynomial& o) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void normalize(std::vector<Term> raw);
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

// Derivative with respect to one variable.
Polynomial derivative(const Polynomial& f, std::size_t var);

// Image of f under variable index remapping into another ring over the same
// field. index_map[i] is the target slot for source variable i, or -1 when the
// variable is dropped (its exponent must then be zero in every term).
Polynomial map_vars(const Polynomial& f, const RingPtr& target, const std::vector<int>& index_map);

// Substitute images[i] for variable i; images live in the target ring.
Polynomial substitute(const Polynomial& f, const RingPtr& target, const std::vector<Polynomial>& images);

// Exact polynomial division over a domain; nullopt when the remainder is not
// forced to zero along leading-term elimination.
std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& d);

}  // namespace linklab
