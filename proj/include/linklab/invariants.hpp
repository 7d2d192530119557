#pragma once
#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "linklab/ideal.hpp"

namespace linklab {

struct LengthValue {
  bool finite = false;
  std::uint64_t value = 0;

  static LengthValue infinite() { return {false, 0}; }
  static LengthValue of(std::uint64_t v) { return {true, v}; }
  bool operator==(const LengthValue&) const = default;
};

// Vector-space dimension of R/A over the field, by staircase counting on the
// reduced basis leads. Infinite unless every variable carries a pure power.
LengthValue length_of_quotient(const Ideal& A);

// Standard-monomial counters on an explicit lead set (shared with the kernels
// and exercised directly by brute-force comparison tests).
LengthValue count_standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars);
// Monomials of total degree below s avoiding poly_leads; this is the length
// of R/(A + m^s) when poly_leads are the sub-degree-s leads of its basis.
std::uint64_t count_standard_below_degree(const std::vector<Monomial>& poly_leads,
                                          std::uint32_t s, std::size_t nvars);

// Largest variable subset touching no lead support entirely; rejects the
// unit ideal (dimension of the empty ring).
unsigned krull_dim(const Ideal& A);
// dim R - dim R/A, the convention valid for the equidimensional catenary
// rings this workbench targets.
unsigned height(const Ideal& A);

struct HilbertSamuelTable {
  unsigned dimension = 0;
  std::vector<std::uint64_t> values;                   // s = 1..n
  std::vector<std::vector<std::int64_t>> differences;  // iterated rows 1..dimension
  std::optional<std::uint64_t> multiplicity;
  nlohmann::ordered_json to_json() const;
};

// Multiplicity samples ran past the row budget without the top difference
// row stabilizing; partial carries everything computed so far.
struct BudgetError : Error {
  BudgetError(const std::string& msg, HilbertSamuelTable partial_table)
      : Error(msg), partial(std::move(partial_table)) {}
  HilbertSamuelTable partial;
};

HilbertSamuelTable hilbert_samuel(const Ideal& A, const Ideal& q, unsigned s_max);

// Stabilized top finite difference of s -> length(R/(A + q^s)). Sampling
// starts at dim + 4 rows and grows by two until the last three samples of the
// dimension-th difference agree, throwing BudgetError past `budget` rows.
std::uint64_t multiplicity(const Ideal& A, const Ideal& q, unsigned budget = 40);
std::pair<std::uint64_t, HilbertSamuelTable> multiplicity_with_table(const Ideal& A, const Ideal& q,
                                                                     unsigned budget = 40);

// Greedy minimal generating set: ascending total degree (input order ties),
// discarding g exactly when g lies in (the others) + m*A.
std::vector<Polynomial> min_gens(const Ideal& A);

struct SocleData {
  Ideal socle;          // J : m
  std::uint64_t type;   // length(socle/J)
};
SocleData socle_type(const Ideal& J);

// length(R/m^2) - 1.
unsigned embedding_dim(const PresPtr& R);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace linklab
