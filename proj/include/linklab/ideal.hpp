#pragma once
#include <span>

#include "linklab/groebner.hpp"

namespace linklab {

// Ideal of a presented ring, held as preimage generators in the ambient
// polynomial ring. The reduced Groebner basis (ring relations adjoined) is
// computed once on demand and shared across copies of the ideal.
class Ideal {
 public:
  Ideal() = default;
  Ideal(PresPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(PresPtr ring);
  static Ideal unit(PresPtr ring);
  static Ideal of_variables(PresPtr ring);  // the ideal m of all variables
  static Ideal principal(PresPtr ring, Polynomial f);

  const PresPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const GroebnerBasis& groebner() const;
  bool is_unit() const { return groebner().is_unit_ideal(); }
  bool is_zero() const;
  std::vector<std::string> gb_strings() const;

 private:
  PresPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<OnceCell<GroebnerBasis>> cache_;
};

Ideal ideal_sum(const Ideal& A, const Ideal& B);
// Pairwise generator products, deduplicated and canonically sorted.
Ideal ideal_product(const Ideal& A, const Ideal& B);
// A^0 is the unit ideal; any power of the zero ideal with n >= 1 is zero.
Ideal ideal_power(const Ideal& A, unsigned n);

bool ideal_member(const Polynomial& f, const Ideal& A);
bool contains(const Ideal& A, const Ideal& B);  // B subset of A
bool equals(const Ideal& A, const Ideal& B);

// Tag-variable intersection: eliminate u from u*A + (1-u)*B upstairs.
Ideal intersect(const Ideal& A, const Ideal& B);
// Quotient A : b via exact division of generators of A meet (b) upstairs.
Ideal colon(const Ideal& A, const Polynomial& b);
// A : B as the intersection over generators of B; generators of B that vanish
// in the ring impose nothing and are skipped.
Ideal colon(const Ideal& A, const Ideal& B);
// Iterated colon until the chain stabilizes.
Ideal saturate(const Ideal& A, const Polynomial& f);
// Inverted-element route: eliminate w from A + (1 - w*f).
Ideal saturate_rabinowitsch(const Ideal& A, const Polynomial& f);

// Contraction to the subring spanned by all but the first drop_count
// variables. Ring relations are adjoined first; the result lives in a fresh
// relation-free ring under the default order.
Ideal eliminate(const Ideal& I, std::size_t drop_count);

// -1 when z is a regular sequence on R; the first failing index otherwise;
// z.size() when (z) is the unit ideal.
int regular_sequence_failure(std::span<const Polynomial> z, const PresPtr& R);
bool is_regular_sequence(std::span<const Polynomial> z, const PresPtr& R);

// Membership of z in the symbolic square of p: true iff (p^2 : z) is not
// inside p. Zero z is a member; unit p is rejected.
bool symbolic_square_member(const Polynomial& z, const Ideal& p);

enum class Regularity { Regular, NotRegular, Inconclusive };

// Jacobian test of the localization at p: NotRegular iff the ideal of
// height-sized minors of the relation Jacobian sits inside p. Positive
// characteristic is reported Inconclusive.
Regularity jacobian_regular_at(const Ideal& p);

// Fresh-variable extension used by elimination-based routines. The new
// variables sit in front under a block order, so their elimination is the
// contraction of a Groebner basis.
struct Extension {
  RingPtr ring;
  std::vector<int> lift_map;         // base variable -> extension slot
  std::vector<std::string> names;    // the fresh front variables
};
Extension extend_front(const RingPtr& base, const std::vector<std::string>& stems);
Polynomial lift(const Polynomial& f, const Extension& e);
// Elements free of the first k variables, pushed down into target.
std::vector<Polynomial> contract_front(const GroebnerBasis& gb, std::size_t k, const RingPtr& target);

}  // namespace linklab
