#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "linklab/ideal.hpp"

namespace linklab {

// Toggle for the parallel kernel variants; on by default when the build has
// OpenMP. The serial reference implementations stay available either way and
// the parallel paths write results by index, so output is identical.
void set_parallel(bool on);
bool parallel_enabled();

// All pairwise generator products a_i * b_j, row-major in (i, j).
std::vector<Polynomial> pairwise_products_serial(std::span<const Polynomial> a,
                                                 std::span<const Polynomial> b);
std::vector<Polynomial> pairwise_products(std::span<const Polynomial> a,
                                          std::span<const Polynomial> b);

// Lengths of R/(A + q^s) for s = lo..hi. Each row is an independent basis
// computation, which is where the wall-clock time of multiplicity work goes;
// the parallel variant distributes rows across threads.
std::vector<std::uint64_t> power_quotient_lengths_serial(const Ideal& A, const Ideal& q,
                                                         unsigned lo, unsigned hi);
std::vector<std::uint64_t> power_quotient_lengths(const Ideal& A, const Ideal& q,
                                                  unsigned lo, unsigned hi);

}  // namespace linklab
