#include "linklab/kernels.hpp"

#include <atomic>
#include <exception>

#include "linklab/invariants.hpp"

namespace linklab {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel.store(on); }

bool parallel_enabled() {
#ifdef LINKLAB_HAVE_OPENMP
  return g_parallel.load();
#else
  return false;
#endif
}

std::vector<Polynomial> pairwise_products_serial(std::span<const Polynomial> a,
                                                 std::span<const Polynomial> b) {
  std::vector<Polynomial> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

std::vector<Polynomial> pairwise_products(std::span<const Polynomial> a,
                                          std::span<const Polynomial> b) {
  if (!parallel_enabled() || a.size() * b.size() < 64) return pairwise_products_serial(a, b);
  std::vector<Polynomial> out(a.size() * b.size());
  std::exception_ptr err;
#ifdef LINKLAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < static_cast<long>(out.size()); ++k) {
    try {
      std::size_t i = static_cast<std::size_t>(k) / b.size();
      std::size_t j = static_cast<std::size_t>(k) % b.size();
      out[k] = a[i] * b[j];
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
#endif
  if (err) std::rethrow_exception(err);
  return out;
}

namespace {

std::uint64_t one_row(const Ideal& A, const Ideal& q, unsigned s, bool q_is_vars) {
  if (q_is_vars) {
    GroebnerBasis gb = buchberger_mod_power(A.gens(), A.ring(), s);
    std::vector<Monomial> poly_leads;
    for (const Monomial& l : gb.leads)
      if (l.total_degree() < s) poly_leads.push_back(l);
    return count_standard_below_degree(poly_leads, s, A.ring()->nvars());
  }
  Ideal cut = ideal_sum(A, ideal_power(q, s));
  LengthValue lv = length_of_quotient(cut);
  if (!lv.finite) throw DomainError("power quotient has infinite length");
  return lv.value;
}

}  // namespace

std::vector<std::uint64_t> power_quotient_lengths_serial(const Ideal& A, const Ideal& q,
                                                         unsigned lo, unsigned hi) {
  if (lo == 0 || hi < lo) throw DomainError("bad power range");
  bool q_is_vars = equals(q, Ideal::of_variables(q.ring()));
  std::vector<std::uint64_t> out(hi - lo + 1);
  for (unsigned s = lo; s <= hi; ++s) out[s - lo] = one_row(A, q, s, q_is_vars);
  return out;
}

std::vector<std::uint64_t> power_quotient_lengths(const Ideal& A, const Ideal& q,
                                                  unsigned lo, unsigned hi) {
  if (!parallel_enabled()) return power_quotient_lengths_serial(A, q, lo, hi);
  if (lo == 0 || hi < lo) throw DomainError("bad power range");
  bool q_is_vars = equals(q, Ideal::of_variables(q.ring()));
  std::vector<std::uint64_t> out(hi - lo + 1);
  std::exception_ptr err;
#ifdef LINKLAB_HAVE_OPENMP
  // large s dominates, so hand rows out dynamically from the top
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = static_cast<long>(out.size()) - 1; k >= 0; --k) {
    try {
      out[k] = one_row(A, q, lo + static_cast<unsigned>(k), q_is_vars);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
#else
  for (unsigned s = lo; s <= hi; ++s) out[s - lo] = one_row(A, q, s, q_is_vars);
#endif
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace linklab
