#include "linklab/invariants.hpp"

#include <algorithm>
#include <bit>

#include "linklab/kernels.hpp"

namespace linklab {

namespace {

using Exps = std::vector<std::uint32_t>;

std::uint32_t total_of(const Exps& e) {
  std::uint32_t t = 0;
  for (std::uint32_t v : e) t += v;
  return t;
}

// Drop entries dominated coordinatewise by another (duplicates collapse).
void minimalize(std::vector<Exps>& gens) {
  std::vector<Exps> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j) {
      if (i == j) continue;
      bool le = true;
      for (std::size_t v = 0; v < gens[i].size() && le; ++v) le = gens[j][v] <= gens[i][v];
      if (le && (j < i || gens[j] != gens[i])) dominated = true;
    }
    if (!dominated) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

// Standard monomials of a finite staircase; gens minimal, none the unit.
std::uint64_t count_rec(std::vector<Exps> gens) {
  for (const Exps& g : gens)
    if (total_of(g) == 0) return 0;
  if (gens.empty() || gens[0].empty()) return gens.empty() ? 1 : 0;
  std::size_t k = gens[0].size();
  if (k == 1) {
    std::uint32_t bound = gens[0][0];
    for (const Exps& g : gens) bound = std::min(bound, g[0]);
    return bound;
  }
  std::uint32_t bound = 0;
  bool have_bound = false;
  for (const Exps& g : gens) {
    if (total_of(g) != g[k - 1]) continue;  // not a pure power of the split variable
    if (!have_bound || g[k - 1] < bound) bound = g[k - 1], have_bound = true;
  }
  if (!have_bound) throw StructuralError("missing pure power during staircase count");
  // slice by the exponent of the split variable; the active generator set
  // only changes at exponents occurring among the generators
  std::vector<std::uint32_t> cuts{0};
  for (const Exps& g : gens)
    if (g[k - 1] > 0 && g[k - 1] < bound) cuts.push_back(g[k - 1]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(bound);
  std::uint64_t total = 0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    std::uint32_t j = cuts[c];
    std::vector<Exps> slice;
    for (const Exps& g : gens)
      if (g[k - 1] <= j) slice.emplace_back(g.begin(), g.end() - 1);
    minimalize(slice);
    total += static_cast<std::uint64_t>(cuts[c + 1] - j) * count_rec(std::move(slice));
  }
  return total;
}

std::vector<Exps> lead_exps(const std::vector<Monomial>& leads) {
  std::vector<Exps> out;
  out.reserve(leads.size());
  for (const Monomial& m : leads) out.emplace_back(m.exps().begin(), m.exps().end());
  return out;
}

}  // namespace

LengthValue count_standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (const Monomial& m : leads)
    if (m.is_unit()) return LengthValue::of(0);
  // finite iff every variable carries a pure power
  for (std::size_t v = 0; v < nvars; ++v) {
    bool pure = false;
    for (const Monomial& m : leads) {
      if (m[v] == 0 || m[v] != m.total_degree()) continue;
      pure = true;
      break;
    }
    if (!pure) return LengthValue::infinite();
  }
  std::vector<Exps> gens = lead_exps(leads);
  minimalize(gens);
  return LengthValue::of(count_rec(std::move(gens)));
}

std::uint64_t count_standard_below_degree(const std::vector<Monomial>& poly_leads,
                                          std::uint32_t s, std::size_t nvars) {
  for (const Monomial& m : poly_leads)
    if (m.is_unit()) return 0;
  std::vector<Exps> gens = lead_exps(poly_leads);
  std::uint64_t count = 0;
  Exps cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == nvars) {
      for (const Exps& g : gens) {
        bool div = true;
        for (std::size_t v = 0; v < nvars && div; ++v) div = g[v] <= cur[v];
        if (div) return;
      }
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  if (nvars == 0) return poly_leads.empty() ? 1 : 0;
  if (s == 0) return 0;
  rec(rec, 0, s - 1);
  return count;
}

LengthValue length_of_quotient(const Ideal& A) {
  return count_standard_monomials(A.groebner().leads, A.ring()->nvars());
}

unsigned krull_dim(const Ideal& A) {
  const GroebnerBasis& gb = A.groebner();
  if (gb.is_unit_ideal()) throw DomainError("dimension of the empty ring");
  std::size_t n = A.ring()->nvars();
  if (n > 24) throw DomainError("dimension search over too many variables");
  std::vector<std::uint32_t> supports;
  supports.reserve(gb.leads.size());
  for (const Monomial& m : gb.leads) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] != 0) s |= 1u << v;
    supports.push_back(s);
  }
  unsigned best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    unsigned size = static_cast<unsigned>(std::popcount(mask));
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

unsigned height(const Ideal& A) {
  unsigned ambient = krull_dim(Ideal::zero(A.ring()));
  unsigned quotient = krull_dim(A);
  return ambient - quotient;
}

nlohmann::ordered_json HilbertSamuelTable::to_json() const {
  nlohmann::ordered_json j;
  std::vector<unsigned> s(values.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<unsigned>(i + 1);
  j["s"] = s;
  j["lambda"] = values;
  j["differences"] = differences;
  if (multiplicity)
    j["multiplicity"] = *multiplicity;
  else
    j["multiplicity"] = nullptr;
  j["dimension"] = dimension;
  return j;
}

namespace {

std::vector<std::vector<std::int64_t>> difference_rows(const std::vector<std::uint64_t>& values,
                                                       unsigned depth) {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> cur(values.begin(), values.end());
  for (unsigned r = 0; r < depth; ++r) {
    if (cur.size() < 2) break;
    std::vector<std::int64_t> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) next[i] = cur[i + 1] - cur[i];
    rows.push_back(next);
    cur = std::move(next);
  }
  return rows;
}

std::optional<std::uint64_t> stabilized_top(const std::vector<std::vector<std::int64_t>>& rows,
                                            unsigned dimension, std::size_t nvalues) {
  const std::vector<std::int64_t>* top = nullptr;
  std::vector<std::int64_t> zeroth;
  if (dimension == 0) {
    // the values row itself must flatten out
    return std::nullopt;  // handled by caller with direct values
  }
  if (rows.size() < dimension) return std::nullopt;
  top = &rows[dimension - 1];
  (void)nvalues;
  if (top->size() < 3) return std::nullopt;
  std::int64_t a = (*top)[top->size() - 3];
  std::int64_t b = (*top)[top->size() - 2];
  std::int64_t c = (*top)[top->size() - 1];
  if (a == b && b == c && c >= 0) return static_cast<std::uint64_t>(c);
  return std::nullopt;
}

std::optional<std::uint64_t> stabilized_values(const std::vector<std::uint64_t>& values) {
  if (values.size() < 3) return std::nullopt;
  std::uint64_t a = values[values.size() - 3];
  std::uint64_t b = values[values.size() - 2];
  std::uint64_t c = values[values.size() - 1];
  if (a == b && b == c) return c;
  return std::nullopt;
}

bool cuts_to_dimension_zero(const Ideal& A, const Ideal& q) {
  Ideal cut = ideal_sum(A, q);
  if (cut.is_unit()) return true;  // zero ring, every row vanishes
  return krull_dim(cut) == 0;
}

}  // namespace

HilbertSamuelTable hilbert_samuel(const Ideal& A, const Ideal& q, unsigned s_max) {
  if (s_max == 0) throw DomainError("empty sample range");
  HilbertSamuelTable t;
  t.dimension = krull_dim(A);
  if (!cuts_to_dimension_zero(A, q))
    throw DomainError("filter ideal does not cut R/A to dimension zero");
  t.values = power_quotient_lengths(A, q, 1, s_max);
  t.differences = difference_rows(t.values, t.dimension);
  if (t.dimension == 0)
    t.multiplicity = stabilized_values(t.values);
  else
    t.multiplicity = stabilized_top(t.differences, t.dimension, t.values.size());
  return t;
}

std::pair<std::uint64_t, HilbertSamuelTable> multiplicity_with_table(const Ideal& A, const Ideal& q,
                                                                     unsigned budget) {
  unsigned d = krull_dim(A);
  if (!cuts_to_dimension_zero(A, q))
    throw DomainError("filter ideal does not cut R/A to dimension zero");
  HilbertSamuelTable t;
  t.dimension = d;
  unsigned target = std::max(d + 4, 4u);
  while (true) {
    if (target > budget) {
      t.differences = difference_rows(t.values, d);
      throw BudgetError("multiplicity did not stabilize within the row budget", t);
    }
    unsigned lo = static_cast<unsigned>(t.values.size()) + 1;
    std::vector<std::uint64_t> more = power_quotient_lengths(A, q, lo, target);
    for (std::uint64_t v : more) t.values.push_back(v);
    t.differences = difference_rows(t.values, d);
    std::optional<std::uint64_t> e =
        d == 0 ? stabilized_values(t.values) : stabilized_top(t.differences, d, t.values.size());
    if (e) {
      t.multiplicity = e;
      return {*e, std::move(t)};
    }
    target += 2;
  }
}

std::uint64_t multiplicity(const Ideal& A, const Ideal& q, unsigned budget) {
  return multiplicity_with_table(A, q, budget).first;
}

std::vector<Polynomial> min_gens(const Ideal& A) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : A.gens())
    if (!g.is_zero()) gens.push_back(g);
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.total_degree() < b.total_degree();
  });
  Ideal mA = ideal_product(Ideal::of_variables(A.ring()), A);
  std::vector<char> discarded(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Polynomial> test = mA.gens();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i && !discarded[j]) test.push_back(gens[j]);
    if (ideal_member(gens[i], Ideal(A.ring(), std::move(test)))) discarded[i] = 1;
  }
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!discarded[i]) kept.push_back(gens[i]);
  return kept;
}

SocleData socle_type(const Ideal& J) {
  LengthValue lj = length_of_quotient(J);
  if (!lj.finite) throw DomainError("socle of a quotient of infinite length");
  Ideal soc = colon(J, Ideal::of_variables(J.ring()));
  LengthValue ls = length_of_quotient(soc);
  return {soc, lj.value - ls.value};
}

unsigned embedding_dim(const PresPtr& R) {
  Ideal m2 = ideal_power(Ideal::of_variables(R), 2);
  LengthValue l = length_of_quotient(m2);
  if (!l.finite) throw StructuralError("square of the variable ideal has infinite colength");
  return static_cast<unsigned>(l.value) - 1;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace linklab
