#pragma once
// Deterministic input generators for the property tests. Everything is seeded
// explicitly so failures replay exactly.
#include <cstdint>
#include <random>
#include <vector>

#include "linklab/ideal.hpp"
#include "linklab/io.hpp"

namespace testgen {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng() % n; }
  bool coin() { return eng() & 1; }
};

inline linklab::Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint32_t max_exp,
                                         bool allow_unit = true) {
  while (true) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(max_exp + 1));
    linklab::Monomial m(std::move(e));
    if (allow_unit || !m.is_unit()) return m;
  }
}

inline linklab::Polynomial random_poly(Rng& rng, const linklab::RingPtr& ring,
                                       std::size_t max_terms, std::uint32_t max_exp) {
  std::vector<linklab::Term> raw;
  std::size_t nterms = rng.below(max_terms + 1);
  for (std::size_t i = 0; i < nterms; ++i) {
    long c = static_cast<long>(rng.below(9)) - 4;  // -4..4, zeros dropped by normalize
    raw.push_back({linklab::Scalar::integer(c, ring->field()),
                   random_monomial(rng, ring->nvars(), max_exp)});
  }
  return linklab::Polynomial(ring, std::move(raw));
}

inline std::vector<linklab::Monomial> random_monomial_gens(Rng& rng, std::size_t nvars,
                                                           std::size_t count,
                                                           std::uint32_t max_exp) {
  std::vector<linklab::Monomial> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_monomial(rng, nvars, max_exp, /*allow_unit=*/false));
  return out;
}

inline std::vector<linklab::Polynomial> to_polys(const linklab::RingPtr& ring,
                                                 const std::vector<linklab::Monomial>& monos) {
  std::vector<linklab::Polynomial> out;
  for (const auto& m : monos)
    out.push_back(linklab::Polynomial::monomial(ring, m, linklab::Scalar::one(ring->field())));
  return out;
}

// Monomial-ideal membership is plain divisibility by some generator.
inline bool divisible_by_some(const linklab::Monomial& f,
                              const std::vector<linklab::Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(f)) return true;
  return false;
}

// All monomials of total degree < bound, by odometer walk.
inline std::vector<linklab::Monomial> monomials_below(std::size_t nvars, std::uint32_t bound) {
  std::vector<linklab::Monomial> out;
  std::vector<std::uint32_t> e(nvars, 0);
  while (true) {
    std::uint32_t total = 0;
    for (auto x : e) total += x;
    if (total < bound) out.emplace_back(e);
    std::size_t i = 0;
    for (; i < nvars; ++i) {
      if (e[i] + 1 < bound) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == nvars) break;
  }
  return out;
}

}  // namespace testgen
