#pragma once
#include <optional>

#include "linklab/invariants.hpp"
#include "linklab/report.hpp"

namespace linklab {

struct LinkData {
  Ideal target;               // the ideal being linked against (p or m)
  std::vector<Polynomial> z;  // the regular sequence
  Ideal J;                    // (z)
  Ideal I;                    // J : target
};

// Direct link I = (z) : p. Every z_i must lie in p and z must be a regular
// sequence; a failing element is named in the error.
LinkData link(const Ideal& p, std::vector<Polynomial> z);

// Least r <= n_max with I^{r+1} = J*I^r, or nullopt when no r in range
// works ("not a reduction within budget" is distinct from any number).
// Only the containment I^{r+1} in J*I^r is tested; the reverse is automatic
// from J inside I.
std::optional<unsigned> reduction_number(const Ideal& I, const Ideal& J, unsigned n_max = 5);

// Blowup algebra of I presented as k[x-vars, T1..Tn]/P, obtained by
// eliminating an auxiliary degree variable from (T_i - f_i*t) plus the base
// relations. The f_i are a minimal generating set so the presentation is
// canonical for the ideal.
struct ReesPresentation {
  PresPtr ring;                     // relation-free k[x, T]; P carries everything
  Ideal presentation;               // P; base relations are recovered as P meet k[x]
  std::vector<Polynomial> gens;     // minimal generators f_i of I, in the base ring
  std::vector<std::string> tnames;  // names of the T-variables, parallel to gens
  std::size_t base_vars = 0;        // leading x-variable count in `ring`
};

ReesPresentation rees_presentation(const Ideal& I);

// Presentation of the associated graded ring: P plus the lift of the f_i.
Ideal assoc_graded_presentation(const Ideal& I);

// Dimension of the special fiber k[T]/(P + (x)) meet k[T].
unsigned analytic_spread(const Ideal& I);

// Multiplicity of the blowup algebra at its full variable ideal.
std::uint64_t rees_multiplicity(const Ideal& I, unsigned budget = 40);

// Graded components of the canonical module of the blowup algebra of I,
// computed as the stabilized intersections
//   w_k = meet over j of (wA_{k+j} : I^j),
// where wA_m = R for m < g and wA_m = J^{m-g+1} for m >= g (the known
// canonical module of the subalgebra generated by J), g = height(I).
struct CanonicalComponents {
  unsigned g = 0;
  Ideal L;                        // J : I
  std::vector<Ideal> components;  // w_1 .. w_kmax
  unsigned jdepth = 0;            // truncation certified against jdepth + 1
};

// Truncated intersection disagreed with the next deeper one; both candidate
// component lists are attached for inspection.
struct StabilizationError : Error {
  StabilizationError(const std::string& msg, std::vector<std::vector<std::string>> shallow_gbs,
                     std::vector<std::vector<std::string>> deep_gbs)
      : Error(msg), shallow(std::move(shallow_gbs)), deep(std::move(deep_gbs)) {}
  std::vector<std::vector<std::string>> shallow, deep;
};

// k_max / j_depth of 0 pick the default g + 2. Requires height(I) >= 2 and
// I^2 = JI (the stabilization argument needs the reduction identity).
CanonicalComponents canonical_components(const Ideal& I, const Ideal& J, unsigned k_max = 0,
                                         unsigned j_depth = 0);

// The closed form the components are asserted to match: R in degrees
// 1..g-2, then L*I^(k-g+1) from degree g-1 on (interpreted componentwise,
// which stays well-defined at g = 2).
std::vector<Ideal> expected_canonical_components(unsigned g, const Ideal& L, const Ideal& I,
                                                 unsigned k_max);

// Whether (J : I) = I for the given regular-sequence ideal J inside I.
bool is_self_linked(const Ideal& I, const Ideal& J);

struct VerifyOptions {
  unsigned n_max = 5;      // reduction-number search cap
  unsigned s_budget = 40;  // multiplicity sample-row budget
  unsigned k_max = 0;      // canonical components to compare; 0 = g + 2
  unsigned j_depth = 0;    // canonical truncation depth; 0 = g + 2
  bool target_prime_asserted = false;
  bool ideal_cm_asserted = false;
  bool licci_asserted = false;
  bool generically_gorenstein_asserted = false;
};

// Link-of-a-prime theorem: with z regular in p and the localization at p
// either singular or regular with two z's in the symbolic square, the link
// I = (z):p satisfies I^2 = JI, is equimultiple, and (for p = m) picks up
// exactly `type` extra minimal generators over J.
VerificationReport verify_link_theorem(const PresPtr& R, const Ideal& p,
                                       std::vector<Polynomial> z, const VerifyOptions& opt = {});

// Length of the degree-2 symmetric-power kernel delta(I) for I = (z):m,
// via lambda(I^2/JI) + lambda(delta) = C(s+1, 2) with s = lambda(I/J).
VerificationReport delta_length(const PresPtr& R, std::vector<Polynomial> z,
                                const VerifyOptions& opt = {});

// Componentwise comparison of computed vs expected canonical module of the
// blowup algebra; with a linked prime p supplied, also certifies J:I = p.
VerificationReport verify_canonical_form(const Ideal& I, const Ideal& J,
                                         const std::optional<Ideal>& p = std::nullopt,
                                         const VerifyOptions& opt = {});

// The associated graded ring is Gorenstein exactly when I is self-linked
// over J; conclusion is that equality, with L = J:I recorded either way.
VerificationReport gorenstein_gr_check(const Ideal& I, const Ideal& J,
                                       const VerifyOptions& opt = {});

// For links of the maximal ideal: the blowup algebras of I and J have equal
// multiplicity at their variable ideals; cross-checked against the closed
// form (1 + a1 + a1*a2)*e(R) when J is homogeneous in a 3-variable
// polynomial ring.
VerificationReport verify_multiplicity_theorem(const PresPtr& R, const Ideal& p,
                                               std::vector<Polynomial> z,
                                               const VerifyOptions& opt = {});

// Self-linked lower bound e(R/I) >= C(beta1 - g + 1, 2); "licci" and
// "generically Gorenstein" enter as user assertions.
VerificationReport multiplicity_bound_check(const PresPtr& R, const Ideal& I, const Ideal& J,
                                            const VerifyOptions& opt = {});

}  // namespace linklab
