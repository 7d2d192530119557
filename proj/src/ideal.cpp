#include "linklab/ideal.hpp"

#include <algorithm>
#include <functional>

#include "linklab/invariants.hpp"
#include "linklab/io.hpp"
#include "linklab/kernels.hpp"

namespace linklab {

Ideal::Ideal(PresPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<OnceCell<GroebnerBasis>>()) {
  for (const Polynomial& g : gens_) {
    if (!g.ring() || !g.ring()->same_as(*ring_->ambient()))
      throw StructuralError("ideal generator from a different ring");
  }
}

Ideal Ideal::zero(PresPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(PresPtr ring) {
  Polynomial one = Polynomial::constant(ring->ambient(), 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::of_variables(PresPtr ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    gens.push_back(Polynomial::variable(ring->ambient(), i));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::principal(PresPtr ring, Polynomial f) {
  return Ideal(std::move(ring), {std::move(f)});
}

const GroebnerBasis& Ideal::groebner() const {
  if (!ring_) throw StructuralError("detached ideal");
  return cache_->get([&] { return buchberger(gens_, ring_); });
}

bool Ideal::is_zero() const {
  const GroebnerBasis& mine = groebner();
  if (!ring_->has_quotient()) return mine.is_zero_ideal();
  Ideal zero_ideal = Ideal::zero(ring_);
  const GroebnerBasis& rel = zero_ideal.groebner();
  if (mine.polys.size() != rel.polys.size()) return false;
  for (std::size_t i = 0; i < mine.polys.size(); ++i)
    if (!(mine.polys[i] == rel.polys[i])) return false;
  return true;
}

std::vector<std::string> Ideal::gb_strings() const {
  std::vector<std::string> out;
  for (const Polynomial& g : groebner().polys) out.push_back(to_string(g));
  return out;
}

namespace {

void check_same(const Ideal& A, const Ideal& B) {
  if (!A.ring() || !B.ring()) throw StructuralError("detached ideal");
  check_same_presentation(*A.ring(), *B.ring());
}

// Relation-free view of the ambient ring; ideal work happens upstairs here.
PresPtr plain(const PresPtr& pres) {
  if (!pres->has_quotient()) return pres;
  return RingPresentation::make(pres->ambient());
}

// Generators plus ring relations, as an ideal of the plain ambient ring.
std::vector<Polynomial> upstairs_gens(const Ideal& A) {
  std::vector<Polynomial> gens = A.gens();
  for (const Polynomial& q : A.ring()->quotient()) gens.push_back(q);
  return gens;
}

std::vector<Polynomial> dedup_sorted(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (Polynomial& g : gens)
    if (!g.is_zero()) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.cmp(b) > 0;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Polynomial& a, const Polynomial& b) { return a == b; }),
            out.end());
  return out;
}

std::string fresh_name(const RingPtr& base, const std::vector<std::string>& taken, std::string stem) {
  while (base->var_index(stem) >= 0 ||
         std::find(taken.begin(), taken.end(), stem) != taken.end())
    stem += "_";
  return stem;
}

}  // namespace

Extension extend_front(const RingPtr& base, const std::vector<std::string>& stems) {
  Extension e;
  for (const std::string& s : stems) e.names.push_back(fresh_name(base, e.names, s));
  std::vector<std::string> vars = e.names;
  for (const std::string& v : base->vars()) vars.push_back(v);
  MonomialOrder order = MonomialOrder::block(e.names.size(), MonomialOrder::grevlex(), base->order());
  e.ring = PolyRing::make(std::move(vars), base->field(), std::move(order));
  e.lift_map.resize(base->nvars());
  for (std::size_t i = 0; i < base->nvars(); ++i)
    e.lift_map[i] = static_cast<int>(i + e.names.size());
  return e;
}

Polynomial lift(const Polynomial& f, const Extension& e) { return map_vars(f, e.ring, e.lift_map); }

std::vector<Polynomial> contract_front(const GroebnerBasis& gb, std::size_t k, const RingPtr& target) {
  std::vector<int> down(gb.pres->nvars(), -1);
  for (std::size_t i = k; i < gb.pres->nvars(); ++i) down[i] = static_cast<int>(i - k);
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.polys) {
    bool free = true;
    for (const Term& t : g.terms())
      for (std::size_t i = 0; i < k && free; ++i)
        if (t.mono[i] != 0) free = false;
    if (free) out.push_back(map_vars(g, target, down));
  }
  return out;
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  check_same(A, B);
  std::vector<Polynomial> gens = A.gens();
  for (const Polynomial& g : B.gens()) gens.push_back(g);
  return Ideal(A.ring(), dedup_sorted(std::move(gens)));
}

Ideal ideal_product(const Ideal& A, const Ideal& B) {
  check_same(A, B);
  return Ideal(A.ring(), dedup_sorted(pairwise_products(A.gens(), B.gens())));
}

Ideal ideal_power(const Ideal& A, unsigned n) {
  if (n == 0) return Ideal::unit(A.ring());
  Ideal acc = A;
  for (unsigned i = 1; i < n; ++i) acc = ideal_product(acc, A);
  return acc;
}

bool ideal_member(const Polynomial& f, const Ideal& A) {
  if (!f.ring() || !f.ring()->same_as(*A.ring()->ambient()))
    throw StructuralError("membership test across rings");
  return A.groebner().reduce(f).is_zero();
}

bool contains(const Ideal& A, const Ideal& B) {
  check_same(A, B);
  for (const Polynomial& g : B.gens())
    if (!ideal_member(g, A)) return false;
  return true;
}

bool equals(const Ideal& A, const Ideal& B) {
  check_same(A, B);
  const GroebnerBasis& ga = A.groebner();
  const GroebnerBasis& gb = B.groebner();
  if (ga.polys.size() != gb.polys.size()) return false;
  for (std::size_t i = 0; i < ga.polys.size(); ++i)
    if (!(ga.polys[i] == gb.polys[i])) return false;
  return true;
}

Ideal intersect(const Ideal& A, const Ideal& B) {
  check_same(A, B);
  const RingPtr& S = A.ring()->ambient();
  Extension e = extend_front(S, {"u"});
  Polynomial u = Polynomial::variable(e.ring, 0);
  Polynomial one_minus_u = Polynomial::constant(e.ring, 1) - u;
  std::vector<Polynomial> gens;
  for (const Polynomial& a : upstairs_gens(A)) gens.push_back(u * lift(a, e));
  for (const Polynomial& b : upstairs_gens(B)) gens.push_back(one_minus_u * lift(b, e));
  GroebnerBasis gb = buchberger(std::move(gens), RingPresentation::make(e.ring));
  return Ideal(A.ring(), contract_front(gb, 1, S));
}

Ideal colon(const Ideal& A, const Polynomial& b) {
  if (!A.ring()) throw StructuralError("detached ideal");
  if (!b.ring() || !b.ring()->same_as(*A.ring()->ambient()))
    throw StructuralError("colon element from a different ring");
  if (b.is_zero() || ideal_member(b, Ideal::zero(A.ring())))
    throw DomainError("colon by an element that vanishes in the ring");
  PresPtr up = plain(A.ring());
  Ideal upA(up, upstairs_gens(A));
  Ideal meet = intersect(upA, Ideal::principal(up, b));
  std::vector<Polynomial> out;
  for (const Polynomial& g : meet.gens()) {
    auto q = try_divide_exact(g, b);
    if (!q) throw StructuralError("inexact division inside colon");
    out.push_back(std::move(*q));
  }
  return Ideal(A.ring(), dedup_sorted(std::move(out)));
}

Ideal colon(const Ideal& A, const Ideal& B) {
  check_same(A, B);
  Ideal zero_ideal = Ideal::zero(A.ring());
  std::vector<const Polynomial*> active;
  for (const Polynomial& b : B.gens())
    if (!b.is_zero() && !ideal_member(b, zero_ideal)) active.push_back(&b);
  if (active.empty()) throw DomainError("colon by the zero ideal");
  Ideal acc = colon(A, *active[0]);
  for (std::size_t i = 1; i < active.size(); ++i) acc = intersect(acc, colon(A, *active[i]));
  return acc;
}

Ideal saturate(const Ideal& A, const Polynomial& f) {
  Ideal w = A;
  while (true) {
    Ideal next = colon(w, f);
    if (equals(next, w)) return w;
    w = std::move(next);
  }
}

Ideal saturate_rabinowitsch(const Ideal& A, const Polynomial& f) {
  if (!A.ring()) throw StructuralError("detached ideal");
  if (f.is_zero() || ideal_member(f, Ideal::zero(A.ring())))
    throw DomainError("saturation by an element that vanishes in the ring");
  const RingPtr& S = A.ring()->ambient();
  Extension e = extend_front(S, {"w"});
  Polynomial w = Polynomial::variable(e.ring, 0);
  std::vector<Polynomial> gens;
  for (const Polynomial& a : upstairs_gens(A)) gens.push_back(lift(a, e));
  gens.push_back(Polynomial::constant(e.ring, 1) - w * lift(f, e));
  GroebnerBasis gb = buchberger(std::move(gens), RingPresentation::make(e.ring));
  return Ideal(A.ring(), contract_front(gb, 1, S));
}

Ideal eliminate(const Ideal& I, std::size_t drop_count) {
  if (!I.ring()) throw StructuralError("detached ideal");
  const RingPtr& S = I.ring()->ambient();
  if (drop_count > S->nvars()) throw DomainError("cannot drop more variables than the ring has");
  std::vector<std::string> front(S->vars().begin(), S->vars().begin() + drop_count);
  std::vector<std::string> rest(S->vars().begin() + drop_count, S->vars().end());
  RingPtr target = PolyRing::make(rest, S->field(), MonomialOrder::grevlex());
  // rebuild under an order that actually eliminates the front block
  RingPtr work = PolyRing::make(S->vars(), S->field(),
                                MonomialOrder::block(drop_count, MonomialOrder::grevlex(),
                                                     MonomialOrder::grevlex()));
  std::vector<int> ident(S->nvars());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : upstairs_gens(I)) gens.push_back(map_vars(g, work, ident));
  GroebnerBasis gb = buchberger(std::move(gens), RingPresentation::make(work));
  return Ideal(RingPresentation::make(target), contract_front(gb, drop_count, target));
}

int regular_sequence_failure(std::span<const Polynomial> z, const PresPtr& R) {
  Ideal full(R, std::vector<Polynomial>(z.begin(), z.end()));
  if (full.is_unit()) return static_cast<int>(z.size());
  std::vector<Polynomial> prefix;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Ideal before(R, prefix);
    if (ideal_member(z[i], before)) return static_cast<int>(i);
    if (!equals(colon(before, z[i]), before)) return static_cast<int>(i);
    prefix.push_back(z[i]);
  }
  return -1;
}

bool is_regular_sequence(std::span<const Polynomial> z, const PresPtr& R) {
  return regular_sequence_failure(z, R) < 0;
}

bool symbolic_square_member(const Polynomial& z, const Ideal& p) {
  if (!p.ring()) throw StructuralError("detached ideal");
  if (p.is_unit()) throw DomainError("symbolic square of the unit ideal");
  if (z.is_zero() || ideal_member(z, Ideal::zero(p.ring()))) return true;
  Ideal c = colon(ideal_power(p, 2), z);
  return !contains(p, c);
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t> rows,
                    std::vector<std::size_t> cols, const RingPtr& ring) {
  if (rows.empty()) return Polynomial::constant(ring, 1);
  Polynomial acc(ring);
  std::size_t r = rows[0];
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m[r][cols[k]].is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    Polynomial minor = poly_det(m, sub_rows, sub_cols, ring);
    Polynomial contrib = m[r][cols[k]] * minor;
    acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

void subsets_of_size(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == k) {
      fn(pick);
      return;
    }
    if (from >= n || n - from < k - pick.size()) return;
    pick.push_back(from);
    self(self, from + 1);
    pick.pop_back();
    self(self, from + 1);
  };
  rec(rec, 0);
}

}  // namespace

Regularity jacobian_regular_at(const Ideal& p) {
  if (!p.ring()) throw StructuralError("detached ideal");
  const PresPtr& R = p.ring();
  const std::vector<Polynomial>& rels = R->quotient();
  if (rels.empty()) return Regularity::Regular;  // polynomial ring, any field
  if (!R->field().rational()) return Regularity::Inconclusive;
  const RingPtr& S = R->ambient();
  PresPtr up = plain(R);
  Ideal relation_ideal(up, rels);
  unsigned h = static_cast<unsigned>(S->nvars()) - krull_dim(relation_ideal);
  if (h == 0) return Regularity::Regular;
  std::vector<std::vector<Polynomial>> jac(rels.size());
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < S->nvars(); ++j) jac[i].push_back(derivative(rels[i], j));
  std::vector<Polynomial> minors;
  subsets_of_size(rels.size(), h, [&](const std::vector<std::size_t>& rows) {
    subsets_of_size(S->nvars(), h, [&](const std::vector<std::size_t>& cols) {
      Polynomial d = poly_det(jac, rows, cols, S);
      if (!d.is_zero()) minors.push_back(std::move(d));
    });
  });
  Ideal minor_ideal(R, dedup_sorted(std::move(minors)));
  return contains(p, minor_ideal) ? Regularity::NotRegular : Regularity::Regular;
}

}  // namespace linklab
