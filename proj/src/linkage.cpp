#include "linklab/linkage.hpp"

#include <algorithm>
#include <numeric>

namespace linklab {

namespace {

std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
  return base;
}

// Sufficient Gorenstein certificate for the base ring: a quotient by a
// regular sequence (in particular a polynomial ring) is Gorenstein.
bool complete_intersection_base(const PresPtr& R) {
  if (!R->has_quotient()) return true;
  PresPtr ambient = RingPresentation::make(R->ambient());
  return is_regular_sequence(R->quotient(), ambient);
}

struct LConditions {
  Regularity reg = Regularity::Inconclusive;
  bool l1 = false;         // localization at the target is singular
  bool l2 = false;         // regular of dimension >= 2, two z's in the symbolic square
  unsigned in_square = 0;  // how many z's sit in the symbolic square
};

LConditions l_conditions(const Ideal& p, std::span<const Polynomial> z) {
  LConditions c;
  c.reg = jacobian_regular_at(p);
  c.l1 = c.reg == Regularity::NotRegular;
  for (const Polynomial& zi : z)
    if (symbolic_square_member(zi, p)) ++c.in_square;
  c.l2 = c.reg == Regularity::Regular && height(p) >= 2 && c.in_square >= 2;
  return c;
}

const char* regularity_name(Regularity r) {
  switch (r) {
    case Regularity::Regular: return "regular";
    case Regularity::NotRegular: return "not_regular";
    case Regularity::Inconclusive: return "inconclusive";
  }
  return "?";
}

void record_l_conditions(VerificationReport& r, const LConditions& c) {
  r.values["localization_at_target"] = regularity_name(c.reg);
  r.values["sequence_members_in_symbolic_square"] = c.in_square;
  r.values["l1_singular_localization"] = c.l1;
  r.values["l2_two_in_symbolic_square"] = c.l2;
  r.hypothesis("singular_locally_or_two_in_symbolic_square", c.l1 || c.l2);
}

void check_sequence_ring(const PresPtr& R, std::span<const Polynomial> z) {
  for (const Polynomial& zi : z)
    if (!zi.is_zero() && !zi.ring()->same_as(*R->ambient()))
      throw StructuralError("sequence element from a different ring");
}

}  // namespace

LinkData link(const Ideal& p, std::vector<Polynomial> z) {
  const PresPtr& R = p.ring();
  check_sequence_ring(R, z);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!ideal_member(z[i], p))
      throw DomainError("sequence element " + std::to_string(i + 1) +
                        " is not in the target ideal");
  int rc = regular_sequence_failure(z, R);
  if (rc == static_cast<int>(z.size()))
    throw DomainError("the sequence generates the unit ideal");
  if (rc >= 0)
    throw DomainError("sequence element " + std::to_string(rc + 1) +
                      " fails the regular-sequence check");
  Ideal J(R, z);
  Ideal I = colon(J, p);
  return {p, std::move(z), std::move(J), std::move(I)};
}

std::optional<unsigned> reduction_number(const Ideal& I, const Ideal& J, unsigned n_max) {
  if (!contains(I, J)) throw DomainError("the candidate reduction is not inside the ideal");
  Ideal ipow = Ideal::unit(I.ring());
  for (unsigned n = 0; n <= n_max; ++n) {
    Ideal next = ideal_product(ipow, I);  // I^(n+1)
    if (contains(ideal_product(J, ipow), next)) return n;
    ipow = std::move(next);
  }
  return std::nullopt;
}

ReesPresentation rees_presentation(const Ideal& I) {
  const PresPtr& R = I.ring();
  const RingPtr& S = R->ambient();
  std::vector<Polynomial> f = min_gens(I);
  std::size_t m = S->nvars(), n = f.size();

  std::vector<std::string> taken = S->vars();
  std::string tname = fresh_name("t", taken);
  taken.push_back(tname);
  std::vector<std::string> tnames;
  for (std::size_t i = 0; i < n; ++i) {
    tnames.push_back(fresh_name("T" + std::to_string(i + 1), taken));
    taken.push_back(tnames.back());
  }

  // work ring k[t, x, T]; the inner grevlex block matches the target order,
  // so dropping t from the basis contracts the ideal
  std::vector<std::string> wnames{tname};
  wnames.insert(wnames.end(), S->vars().begin(), S->vars().end());
  wnames.insert(wnames.end(), tnames.begin(), tnames.end());
  RingPtr W = PolyRing::make(wnames, S->field(),
                             MonomialOrder::block(1, MonomialOrder::grevlex(),
                                                  MonomialOrder::grevlex()));
  std::vector<std::string> xt(wnames.begin() + 1, wnames.end());
  RingPtr X = PolyRing::make(xt, S->field(), MonomialOrder::grevlex());

  std::vector<int> up(m);
  std::iota(up.begin(), up.end(), 1);
  std::vector<Polynomial> gens;
  for (const Polynomial& q : R->quotient()) gens.push_back(map_vars(q, W, up));
  Polynomial t = Polynomial::variable(W, 0);
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(W, 1 + m + i) - map_vars(f[i], W, up) * t);

  GroebnerBasis gb = buchberger(std::move(gens), RingPresentation::make(W));
  PresPtr target = RingPresentation::make(X);
  std::vector<Polynomial> P = contract_front(gb, 1, X);
  return {target, Ideal(target, std::move(P)), std::move(f), std::move(tnames), m};
}

Ideal assoc_graded_presentation(const Ideal& I) {
  ReesPresentation rp = rees_presentation(I);
  std::vector<int> up(rp.base_vars);
  std::iota(up.begin(), up.end(), 0);
  std::vector<Polynomial> gens = rp.presentation.gens();
  for (const Polynomial& fi : rp.gens) gens.push_back(map_vars(fi, rp.ring->ambient(), up));
  return Ideal(rp.ring, std::move(gens));
}

unsigned analytic_spread(const Ideal& I) {
  ReesPresentation rp = rees_presentation(I);
  if (rp.gens.empty()) return 0;
  std::vector<Polynomial> gens = rp.presentation.gens();
  for (std::size_t i = 0; i < rp.base_vars; ++i)
    gens.push_back(Polynomial::variable(rp.ring->ambient(), i));
  Ideal fiber = eliminate(Ideal(rp.ring, std::move(gens)), rp.base_vars);
  return krull_dim(fiber);
}

std::uint64_t rees_multiplicity(const Ideal& I, unsigned budget) {
  ReesPresentation rp = rees_presentation(I);
  return multiplicity(rp.presentation, Ideal::of_variables(rp.ring), budget);
}

namespace {

// wA_m components: the ring itself below degree g, then powers of J.
Ideal known_component(const PresPtr& R, const std::vector<Ideal>& jpow, unsigned g,
                      unsigned mdeg) {
  if (mdeg + 1 <= g) return Ideal::unit(R);
  return jpow.at(mdeg - g + 1);
}

std::vector<std::vector<std::string>> gb_lists(const std::vector<Ideal>& v) {
  std::vector<std::vector<std::string>> out;
  for (const Ideal& a : v) out.push_back(a.gb_strings());
  return out;
}

}  // namespace

CanonicalComponents canonical_components(const Ideal& I, const Ideal& J, unsigned k_max,
                                         unsigned j_depth) {
  const PresPtr& R = I.ring();
  check_same_presentation(*R, *J.ring());
  if (I.is_unit()) throw DomainError("the link is the unit ideal");
  if (!contains(I, J)) throw DomainError("the sequence ideal is not inside the link");
  unsigned g = height(I);
  if (g < 2) throw DomainError("height below 2");
  if (!equals(ideal_power(I, 2), ideal_product(J, I)))
    throw DomainError("the reduction identity I^2 = JI fails");
  if (k_max == 0) k_max = g + 2;
  if (j_depth == 0) j_depth = g + 2;

  std::vector<Ideal> ipow{Ideal::unit(R)}, jpow{Ideal::unit(R)};
  for (unsigned j = 1; j <= j_depth + 1; ++j) ipow.push_back(ideal_product(ipow.back(), I));
  unsigned jmax = k_max + j_depth + 1;
  for (unsigned j = 1; j + g - 1 <= jmax; ++j) jpow.push_back(ideal_product(jpow.back(), J));

  auto column = [&](unsigned k, unsigned depth, Ideal w) {
    for (unsigned j = 1; j <= depth; ++j) {
      Ideal target = known_component(R, jpow, g, k + j);
      if (target.is_unit()) continue;  // colon against the whole ring is no constraint
      w = intersect(w, colon(target, ipow[j]));
    }
    return w;
  };

  std::vector<Ideal> shallow, deep;
  for (unsigned k = 1; k <= k_max; ++k) {
    Ideal w = column(k, j_depth, known_component(R, jpow, g, k));
    Ideal target = known_component(R, jpow, g, k + j_depth + 1);
    Ideal wd = target.is_unit() ? w : intersect(w, colon(target, ipow[j_depth + 1]));
    shallow.push_back(std::move(w));
    deep.push_back(std::move(wd));
  }
  for (unsigned k = 0; k < k_max; ++k)
    if (!equals(shallow[k], deep[k]))
      throw StabilizationError("canonical component " + std::to_string(k + 1) +
                                   " did not stabilize at the truncation depth",
                               gb_lists(shallow), gb_lists(deep));
  return {g, colon(J, I), std::move(shallow), j_depth};
}

std::vector<Ideal> expected_canonical_components(unsigned g, const Ideal& L, const Ideal& I,
                                                 unsigned k_max) {
  if (g < 2) throw DomainError("height below 2");
  if (!contains(L, I))
    throw DomainError("hypotheses violated: the link is not inside its colon ideal");
  std::vector<Ideal> out;
  Ideal li = L;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (k + 2 <= g) {
      out.push_back(Ideal::unit(I.ring()));
    } else {
      out.push_back(li);  // L * I^(k-g+1)
      if (k < k_max) li = ideal_product(li, I);
    }
  }
  return out;
}

bool is_self_linked(const Ideal& I, const Ideal& J) {
  if (!contains(I, J)) throw DomainError("the sequence ideal is not inside the link");
  int rc = regular_sequence_failure(J.gens(), I.ring());
  if (rc != -1) throw DomainError("the given generators of J are not a regular sequence");
  return equals(colon(J, I), I);
}

VerificationReport verify_link_theorem(const PresPtr& R, const Ideal& p,
                                       std::vector<Polynomial> z, const VerifyOptions& opt) {
  check_same_presentation(*R, *p.ring());
  check_sequence_ring(R, z);
  VerificationReport r;
  r.check = "link-theorem";

  r.hypothesis("target_proper", !p.is_unit() && !p.is_zero());
  if (!r.hypotheses_ok()) {
    r.conclude();
    return r;
  }
  Ideal m = Ideal::of_variables(R);
  bool p_max = equals(p, m);
  r.values["target_is_maximal"] = p_max;
  // the full variable ideal is maximal, hence prime, with no assertion needed
  r.hypothesis("target_prime", p_max || opt.target_prime_asserted, !p_max);

  bool z_in = true;
  for (const Polynomial& zi : z) z_in = z_in && ideal_member(zi, p);
  r.hypothesis("sequence_in_target", z_in);
  int rc = regular_sequence_failure(z, R);
  r.hypothesis("regular_sequence", rc == -1);
  if (rc >= 0 && rc < static_cast<int>(z.size()))
    r.values["regular_sequence_failure_index"] = rc + 1;
  unsigned g = static_cast<unsigned>(z.size());
  r.values["sequence_length"] = g;
  r.hypothesis("sequence_length_is_height_of_target", g == height(p));

  LConditions lc = l_conditions(p, z);
  record_l_conditions(r, lc);

  // the computations run regardless, so failed hypotheses still produce an
  // informative record (the negative example depends on this)
  Ideal J(R, z);
  Ideal I = colon(J, p);
  r.values["J_basis"] = J.gb_strings();
  r.values["I_basis"] = I.gb_strings();
  if (I.is_unit()) {
    r.claim("link_proper", false);
    r.conclude();
    return r;
  }

  bool i2 = r.certify_equals("I2_equals_JI", ideal_power(I, 2), ideal_product(J, I));
  r.values["I2_equals_JI"] = i2;
  std::optional<unsigned> rn = reduction_number(I, J, opt.n_max);
  if (rn)
    r.values["reduction_number"] = *rn;
  else
    r.values["reduction_number"] = nullptr;
  bool self_trivial = equals(I, J);
  r.claim("reduction_number_at_most_one", rn && *rn == (self_trivial ? 0u : 1u));
  unsigned ht = height(I);
  unsigned ell = analytic_spread(I);
  r.values["height"] = ht;
  r.values["analytic_spread"] = ell;
  r.claim("equimultiple", ell == ht);

  if (p_max) {
    bool mi = r.certify_equals("mI_equals_mJ", ideal_product(m, I), ideal_product(m, J));
    r.values["mI_equals_mJ"] = mi;
    LengthValue lj = length_of_quotient(J);
    r.hypothesis("system_of_parameters", lj.finite && g == krull_dim(Ideal::zero(R)));
    if (lj.finite) {
      std::uint64_t s = socle_type(J).type;
      std::uint64_t lij = lj.value - length_of_quotient(I).value;
      std::uint64_t mu = min_gens(I).size();
      r.values["socle_type"] = s;
      r.values["lambda_I_mod_J"] = lij;
      r.values["minimal_generators"] = mu;
      r.claim("lambda_I_mod_J_equals_type", lij == s);
      r.claim("minimal_generators_are_length_plus_type", mu == g + s);
    }
  }
  r.conclude();
  return r;
}

VerificationReport delta_length(const PresPtr& R, std::vector<Polynomial> z,
                                const VerifyOptions& opt) {
  check_sequence_ring(R, z);
  VerificationReport r;
  r.check = "delta-length";
  Ideal m = Ideal::of_variables(R);
  Ideal J(R, z);
  LengthValue lj = length_of_quotient(J);
  r.hypothesis("artinian_quotient", lj.finite);
  int rc = regular_sequence_failure(z, R);
  r.hypothesis("regular_sequence", rc == -1);
  unsigned d = krull_dim(Ideal::zero(R));
  r.values["dimension"] = d;
  r.hypothesis("system_of_parameters", lj.finite && z.size() == d);
  if (!lj.finite || rc != -1) {
    r.conclude();
    return r;
  }
  bool cm = d == 0 || multiplicity(Ideal::zero(R), J, opt.s_budget) == lj.value;
  r.hypothesis("cohen_macaulay_base", cm);

  Ideal I = colon(J, m);
  r.values["I_basis"] = I.gb_strings();
  r.values["J_basis"] = J.gb_strings();
  r.hypothesis("socle_times_m_in_J", contains(J, ideal_product(m, I)));
  std::uint64_t s = lj.value - length_of_quotient(I).value;
  r.values["type"] = s;
  r.hypothesis("type_at_least_2", s >= 2);
  std::uint64_t l_ji = length_of_quotient(ideal_product(J, I)).value;
  std::uint64_t l_i2 = length_of_quotient(ideal_power(I, 2)).value;
  std::uint64_t drop = l_ji - l_i2;  // lambda(I^2/JI)
  std::uint64_t sym = binomial(s + 1, 2);
  r.values["lambda_I2_mod_JI"] = drop;
  r.values["symmetric_square_length"] = sym;
  r.values["lambda_delta"] = sym - drop;
  r.claim("delta_length_is_binomial", drop == 0);
  r.conclude();
  return r;
}

namespace {

// Shared hypothesis block of the canonical-module statements. Returns the
// height, or nullopt when the gate already failed structurally.
std::optional<unsigned> canonical_gate(VerificationReport& r, const Ideal& I, const Ideal& J,
                                       const VerifyOptions& opt) {
  r.hypothesis("link_proper_ideal", !I.is_unit());
  if (I.is_unit()) return std::nullopt;
  r.hypothesis("sequence_ideal_inside_link", contains(I, J));
  r.hypothesis("regular_sequence", regular_sequence_failure(J.gens(), I.ring()) == -1);
  unsigned g = height(I);
  r.values["height"] = g;
  r.hypothesis("height_at_least_2", g >= 2);
  bool red = equals(ideal_power(I, 2), ideal_product(J, I));
  r.values["I2_equals_JI"] = red;
  r.hypothesis("reduction_identity", red);
  r.hypothesis("link_cohen_macaulay", opt.ideal_cm_asserted, true);
  r.hypothesis("base_ring_complete_intersection", complete_intersection_base(I.ring()));
  return g;
}

}  // namespace

VerificationReport verify_canonical_form(const Ideal& I, const Ideal& J,
                                         const std::optional<Ideal>& p,
                                         const VerifyOptions& opt) {
  VerificationReport r;
  r.check = "canonical-form";
  std::optional<unsigned> g = canonical_gate(r, I, J, opt);
  if (g) r.hypothesis("link_strictly_larger", !equals(I, J));
  if (!r.hypotheses_ok()) {
    r.conclude();
    return r;
  }
  CanonicalComponents cc = canonical_components(I, J, opt.k_max, opt.j_depth);
  r.values["L_basis"] = cc.L.gb_strings();
  r.values["truncation_depth"] = cc.jdepth;
  r.values["stabilized"] = true;
  auto comps = nlohmann::ordered_json::array();
  for (const Ideal& w : cc.components) comps.push_back(w.gb_strings());
  r.values["components"] = std::move(comps);
  std::vector<Ideal> expect = expected_canonical_components(
      cc.g, cc.L, I, static_cast<unsigned>(cc.components.size()));
  for (std::size_t k = 0; k < cc.components.size(); ++k)
    r.certify_equals("component_" + std::to_string(k + 1), cc.components[k], expect[k]);
  if (p) r.certify_equals("colon_equals_linked_target", cc.L, *p);
  r.conclude();
  return r;
}

VerificationReport gorenstein_gr_check(const Ideal& I, const Ideal& J,
                                       const VerifyOptions& opt) {
  VerificationReport r;
  r.check = "gorenstein-graded";
  std::optional<unsigned> g = canonical_gate(r, I, J, opt);
  if (g && contains(I, J)) {
    // self-linkage is reported even when the gate failed on the height
    Ideal L = colon(J, I);
    bool self = equals(L, I);
    r.values["L_basis"] = L.gb_strings();
    r.values["self_linked"] = self;
    r.certificates.push_back({"colon_equals_link", L.gb_strings(), I.gb_strings(), self});
    r.claim("graded_ring_gorenstein", self);
  }
  r.conclude();
  return r;
}

VerificationReport verify_multiplicity_theorem(const PresPtr& R, const Ideal& p,
                                               std::vector<Polynomial> z,
                                               const VerifyOptions& opt) {
  check_same_presentation(*R, *p.ring());
  check_sequence_ring(R, z);
  VerificationReport r;
  r.check = "rees-multiplicity";
  Ideal m = Ideal::of_variables(R);
  r.hypothesis("target_is_maximal", equals(p, m));
  bool z_in = true;
  for (const Polynomial& zi : z) z_in = z_in && ideal_member(zi, m);
  r.hypothesis("sequence_in_target", z_in);
  int rc = regular_sequence_failure(z, R);
  r.hypothesis("regular_sequence", rc == -1);
  unsigned d = krull_dim(Ideal::zero(R));
  Ideal J(R, z);
  LengthValue lj = length_of_quotient(J);
  r.hypothesis("system_of_parameters", lj.finite && z.size() == d);
  if (!r.hypotheses_ok()) {
    r.conclude();
    return r;
  }
  bool cm = d == 0 || multiplicity(Ideal::zero(R), J, opt.s_budget) == lj.value;
  r.hypothesis("cohen_macaulay_base", cm);
  r.hypothesis("gorenstein_base", cm && socle_type(J).type == 1);
  LConditions lc = l_conditions(m, z);
  record_l_conditions(r, lc);
  if (!r.hypotheses_ok()) {
    r.conclude();
    return r;
  }

  Ideal I = colon(J, m);
  r.values["I_basis"] = I.gb_strings();
  r.values["J_basis"] = J.gb_strings();
  std::uint64_t ei = rees_multiplicity(I, opt.s_budget);
  std::uint64_t ej = rees_multiplicity(J, opt.s_budget);
  r.values["rees_multiplicity_I"] = ei;
  r.values["rees_multiplicity_J"] = ej;
  r.claim("equal_rees_multiplicities", ei == ej);

  bool homog = !R->has_quotient() && z.size() == 3;
  for (const Polynomial& zi : z) homog = homog && !zi.is_zero() && zi.is_homogeneous();
  if (homog) {
    std::vector<std::uint64_t> degs;
    for (const Polynomial& zi : z) degs.push_back(zi.total_degree());
    std::sort(degs.begin(), degs.end());
    std::uint64_t er = multiplicity(Ideal::zero(R), m, opt.s_budget);
    std::uint64_t predicted = (1 + degs[0] + degs[0] * degs[1]) * er;
    r.values["generator_degrees"] = degs;
    r.values["base_multiplicity"] = er;
    r.values["closed_form_prediction"] = predicted;
    r.claim("matches_closed_form", predicted == ei);
  }
  r.conclude();
  return r;
}

VerificationReport multiplicity_bound_check(const PresPtr& R, const Ideal& I, const Ideal& J,
                                            const VerifyOptions& opt) {
  check_same_presentation(*R, *I.ring());
  check_same_presentation(*R, *J.ring());
  VerificationReport r;
  r.check = "multiplicity-bound";
  r.hypothesis("link_proper_ideal", !I.is_unit());
  if (I.is_unit()) {
    r.conclude();
    return r;
  }
  r.hypothesis("sequence_ideal_inside_link", contains(I, J));
  int rc = regular_sequence_failure(J.gens(), R);
  r.hypothesis("regular_sequence", rc == -1);
  bool self = contains(I, J) && rc == -1 && equals(colon(J, I), I);
  r.hypothesis("self_linked", self);
  r.hypothesis("licci", opt.licci_asserted, true);
  r.hypothesis("generically_gorenstein", opt.generically_gorenstein_asserted, true);
  r.hypothesis("base_ring_complete_intersection", complete_intersection_base(R));

  std::uint64_t beta1 = min_gens(I).size();
  unsigned g = height(I);
  std::uint64_t bound = beta1 + 1 >= g ? binomial(beta1 - g + 1, 2) : 0;
  std::uint64_t e = multiplicity(I, Ideal::of_variables(R), opt.s_budget);
  r.values["multiplicity"] = e;
  r.values["minimal_generators"] = beta1;
  r.values["height"] = g;
  r.values["bound"] = bound;
  r.claim("multiplicity_at_least_bound", e >= bound);
  r.conclude();
  return r;
}

}  // namespace linklab
