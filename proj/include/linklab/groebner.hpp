#pragma once
#include <span>
#include <vector>

#include "linklab/ring.hpp"

namespace linklab {

// Reduced Groebner basis of (generators + ring relations) in the ambient
// order: monic elements, pairwise irreducible, sorted by descending leading
// monomial. This form is canonical, so basis equality decides ideal equality.
struct GroebnerBasis {
  PresPtr pres;
  std::vector<Polynomial> polys;
  std::vector<Monomial> leads;

  bool is_zero_ideal() const { return polys.empty(); }
  bool is_unit_ideal() const;
  // -1 when no lead divides m, else the first matching index.
  int dividing_lead(const Monomial& m) const;
  // Normal form against this basis; zero iff membership.
  Polynomial reduce(const Polynomial& f) const;
};

// Deterministic remainder: always cancel the highest reducible term using the
// first dividing element in basis order. The ring relations are not adjoined;
// callers wanting ideal membership go through a Groebner basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

// Buchberger with the Gebauer-Moller pair update and normal selection
// (smallest lcm first). Empty input yields the empty basis (zero ideal).
GroebnerBasis buchberger(std::vector<Polynomial> gens, PresPtr pres);

// Reduced basis of (gens + ring relations + every monomial of total degree s).
// The degree-s layer is kept implicit: terms at or above degree s vanish under
// a floor rule and pair streams against the layer are enumerated lazily, so
// the pair queue never materializes the layer. Output equals what buchberger
// would return on the explicit generator list.
GroebnerBasis buchberger_mod_power(std::vector<Polynomial> gens, PresPtr pres, std::uint32_t s);

}  // namespace linklab
