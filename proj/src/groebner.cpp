#include "linklab/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace linklab {

bool GroebnerBasis::is_unit_ideal() const {
  return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
}

int GroebnerBasis::dividing_lead(const Monomial& m) const {
  for (std::size_t i = 0; i < leads.size(); ++i)
    if (leads[i].divides(m)) return static_cast<int>(i);
  return -1;
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const { return normal_form(f, polys); }

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  Polynomial work = f;
  std::vector<Term> out;
  while (!work.is_zero()) {
    const Term& top = work.leading();
    const Polynomial* div = nullptr;
    for (const Polynomial& g : basis) {
      if (!g.is_zero() && g.lm().divides(top.mono)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      out.push_back(top);
      Polynomial rest(work.ring());
      rest = work - Polynomial::monomial(work.ring(), top.mono, top.coef);
      work = std::move(rest);
      continue;
    }
    Scalar c = top.coef / div->lc();
    work = work - div->mul_term(c, top.mono.divide_by(div->lm()));
  }
  return Polynomial(f.ring(), std::move(out));
}

namespace {

std::uint32_t min_term_degree(const Polynomial& f) {
  std::uint32_t d = 0;
  bool first = true;
  for (const Term& t : f.terms()) {
    if (first || t.mono.total_degree() < d) d = t.mono.total_degree();
    first = false;
  }
  return d;
}

// All monomials u >= alpha with total degree exactly s, ascending in ord.
std::vector<Monomial> layer_multiples(const Monomial& alpha, std::uint32_t s, const MonomialOrder& ord) {
  std::vector<Monomial> out;
  std::uint32_t rest = s - alpha.total_degree();
  std::vector<std::uint32_t> delta(alpha.nvars(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == delta.size()) {
      delta[i] = left;
      std::vector<std::uint32_t> v(alpha.exps().begin(), alpha.exps().end());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += delta[k];
      out.emplace_back(std::move(v));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      delta[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (delta.empty()) return out;
  rec(rec, 0, rest);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return out;
}

struct Engine {
  PresPtr pres;
  const MonomialOrder& ord;
  std::optional<std::uint32_t> floor;
  bool unit = false;

  std::vector<Polynomial> basis;  // monic, insertion order
  std::vector<std::uint32_t> lowdeg;

  struct RealPair {
    std::uint32_t i, j;
    Monomial l;
  };
  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const RealPair& a, const RealPair& b) const {
      Cmp c = ord->compare(a.l, b.l);
      if (c != Cmp::Equal) return c == Cmp::Less;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<RealPair, PairLess> pairs;

  // Lazy S-pair stream of one basis element against the degree-s layer.
  struct Cursor {
    std::uint32_t g;
    std::vector<Monomial> lcms;
    std::size_t at = 0;
  };
  std::vector<Cursor> cursors;

  Engine(PresPtr p, std::optional<std::uint32_t> fl)
      : pres(std::move(p)), ord(pres->ambient()->order()), floor(fl), pairs(PairLess{&ord}) {}

  // Full deterministic normal form against the live basis: the floor rule
  // first (any term at or above the floor lies in the layer), then the first
  // dividing basis element in insertion order.
  Polynomial reduce(const Polynomial& f) const {
    Polynomial work = f;
    std::vector<Term> out;
    while (!work.is_zero()) {
      const Term& top = work.leading();
      if (floor && top.mono.total_degree() >= *floor) {
        work = work - Polynomial::monomial(work.ring(), top.mono, top.coef);
        continue;
      }
      int which = -1;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].lm().divides(top.mono)) {
          which = static_cast<int>(i);
          break;
        }
      }
      if (which < 0) {
        out.push_back(top);
        work = work - Polynomial::monomial(work.ring(), top.mono, top.coef);
        continue;
      }
      const Polynomial& g = basis[which];
      work = work - g.mul_term(top.coef, top.mono.divide_by(g.lm()));
    }
    return Polynomial(f.ring(), std::move(out));
  }

  // Gebauer-Moller update: prune candidate pairs of the new element, drop
  // stale old pairs, then install the element and its layer cursor.
  void add(Polynomial g) {
    if (g.is_constant()) {
      unit = true;
      pairs.clear();
      cursors.clear();
      basis.clear();
      lowdeg.clear();
      basis.push_back(Polynomial::constant(g.ring(), 1));
      lowdeg.push_back(0);
      return;
    }
    const std::uint32_t t = static_cast<std::uint32_t>(basis.size());
    const Monomial& gl = g.lm();
    const bool g_mono = g.is_monomial();

    struct Cand {
      std::uint32_t i;
      Monomial l;
      bool coprime;
      bool enqueue;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (std::uint32_t i = 0; i < t; ++i) {
      const Monomial& il = basis[i].lm();
      cand.push_back({i, Monomial::lcm(il, gl), Monomial::coprime(il, gl),
                      !(g_mono && basis[i].is_monomial())});
    }
    std::vector<char> kept(cand.size(), 0);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (cand[a].coprime) {
        kept[a] = 1;
        continue;
      }
      bool shielded = false;
      for (std::size_t b = a + 1; b < cand.size() && !shielded; ++b)
        if (cand[b].l.divides(cand[a].l)) shielded = true;
      for (std::size_t b = 0; b < a && !shielded; ++b)
        if (kept[b] && cand[b].l.divides(cand[a].l)) shielded = true;
      kept[a] = !shielded;
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (kept[a] && !cand[a].coprime && cand[a].enqueue)
        pairs.insert({cand[a].i, t, cand[a].l});

    for (auto it = pairs.begin(); it != pairs.end();) {
      if (it->j != t && gl.divides(it->l) &&
          !(Monomial::lcm(basis[it->i].lm(), gl) == it->l) &&
          !(Monomial::lcm(basis[it->j].lm(), gl) == it->l)) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }

    basis.push_back(std::move(g));
    lowdeg.push_back(min_term_degree(basis.back()));
    // Homogeneous elements multiply into the layer entirely, so only elements
    // with terms below their lead degree feed it.
    if (floor && !g_mono && lowdeg.back() < gl.total_degree())
      cursors.push_back({t, layer_multiples(gl, *floor, ord), 0});
  }

  bool step() {
    const RealPair* real = pairs.empty() ? nullptr : &*pairs.begin();
    Cursor* lay = nullptr;
    for (Cursor& c : cursors) {
      if (c.at >= c.lcms.size()) continue;
      if (!lay || ord.less(c.lcms[c.at], lay->lcms[lay->at])) lay = &c;
    }
    if (!real && !lay) return false;

    Polynomial sp;
    if (real && (!lay || !ord.less(lay->lcms[lay->at], real->l))) {
      RealPair p = *real;
      pairs.erase(pairs.begin());
      const Polynomial& a = basis[p.i];
      const Polynomial& b = basis[p.j];
      Scalar one = Scalar::one(pres->field());
      sp = a.mul_term(one, p.l.divide_by(a.lm())) - b.mul_term(one, p.l.divide_by(b.lm()));
    } else {
      Monomial u = lay->lcms[lay->at++];
      const Polynomial& g = basis[lay->g];
      // S-polynomial with the layer: the lead lands exactly on u, which the
      // floor rule removes during reduction.
      sp = g.mul_term(Scalar::one(pres->field()), u.divide_by(g.lm()));
    }
    Polynomial nf = reduce(sp);
    if (!nf.is_zero()) add(nf.monic());
    return !unit;
  }

  std::vector<Polynomial> finish() {
    if (unit) return {Polynomial::constant(pres->ambient(), 1)};
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      Cmp c = ord.compare(basis[a].lm(), basis[b].lm());
      if (c != Cmp::Equal) return c == Cmp::Less;
      return a < b;
    });
    std::vector<Polynomial> kept;
    for (std::size_t i : idx) {
      bool redundant = false;
      for (const Polynomial& k : kept)
        if (k.lm().divides(basis[i].lm())) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(basis[i]);
    }
    // Tail reduction to the unique reduced form. Tail terms sit strictly below
    // the element's own lead in the order, so no tail term is divisible by it
    // and reducing against the full kept set is safe.
    basis = kept;
    pairs.clear();
    cursors.clear();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Polynomial lead = Polynomial::monomial(pres->ambient(), basis[i].lm(), basis[i].lc());
      Polynomial red = lead + reduce(basis[i] - lead);
      basis[i] = red.monic();
    }
    std::vector<Polynomial> out = basis;
    if (floor) {
      // surviving layer monomials become explicit basis elements
      Monomial origin = Monomial::unit(pres->nvars());
      for (Monomial& u : layer_multiples(origin, *floor, ord)) {
        bool covered = false;
        for (const Polynomial& g : out)
          if (!g.is_zero() && g.lm().divides(u)) {
            covered = true;
            break;
          }
        if (!covered)
          out.push_back(Polynomial::monomial(pres->ambient(), std::move(u), Scalar::one(pres->field())));
      }
    }
    std::sort(out.begin(), out.end(),
              [&](const Polynomial& a, const Polynomial& b) { return ord.greater(a.lm(), b.lm()); });
    return out;
  }
};

GroebnerBasis run_buchberger(std::vector<Polynomial> gens, PresPtr pres,
                             std::optional<std::uint32_t> floor) {
  Engine eng(pres, floor);
  std::vector<Polynomial> inputs = pres->quotient();
  for (Polynomial& g : gens) inputs.push_back(std::move(g));
  for (const Polynomial& f : inputs) {
    if (!f.ring() || !f.ring()->same_as(*pres->ambient()))
      throw StructuralError("generator from a different ring");
    if (f.is_zero()) continue;
    Polynomial nf = eng.reduce(f);
    if (!nf.is_zero()) eng.add(nf.monic());
    if (eng.unit) break;
  }
  while (!eng.unit && eng.step()) {
  }
  GroebnerBasis gb;
  gb.pres = std::move(pres);
  gb.polys = eng.finish();
  gb.leads.reserve(gb.polys.size());
  for (const Polynomial& g : gb.polys) gb.leads.push_back(g.lm());
  return gb;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, PresPtr pres) {
  return run_buchberger(std::move(gens), std::move(pres), std::nullopt);
}

GroebnerBasis buchberger_mod_power(std::vector<Polynomial> gens, PresPtr pres, std::uint32_t s) {
  if (s == 0) {
    // the degree-0 layer is the unit ideal
    GroebnerBasis gb;
    gb.polys.push_back(Polynomial::constant(pres->ambient(), 1));
    gb.leads.push_back(gb.polys[0].lm());
    gb.pres = std::move(pres);
    return gb;
  }
  return run_buchberger(std::move(gens), std::move(pres), s);
}

}  // namespace linklab
