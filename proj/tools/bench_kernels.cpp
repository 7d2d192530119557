// Serial vs parallel kernel comparison; not part of the test suite.
#include <benchmark/benchmark.h>

#include <vector>

#include "linklab/io.hpp"
#include "linklab/kernels.hpp"

using namespace linklab;

namespace {

RingPtr ambient() {
  static RingPtr r = PolyRing::make({"x", "y", "z"});
  return r;
}

// Dense-ish generator sets so the product work dominates dispatch overhead.
std::vector<Polynomial> product_block() {
  std::vector<Polynomial> out;
  const char* seeds[] = {"x^2 + y*z - 3*z",     "y^3 - x*z + 7",      "x*y*z - y^2 + z^2",
                         "x^3 + y^3 + z^3 - 1", "x^2*y - 4*z^2 + y",  "z^4 - x*y + 2*y^2",
                         "x + y + z",           "x^2*z^2 - y^4 + x",  "y^2*z - x^2 + 5*z",
                         "x^4 - y*z^3 + y^2",   "z^3 + x*y^2 - 2",    "x^3*y - z + y^2*z^2"};
  for (const char* s : seeds) out.push_back(parse_polynomial(ambient(), s));
  return out;
}

const Ideal& artinian_cut() {
  static Ideal q(RingPresentation::make(ambient()),
                 {parse_polynomial(ambient(), "x"), parse_polynomial(ambient(), "y^2"),
                  parse_polynomial(ambient(), "z^2")});
  return q;
}

const Ideal& zero_ideal() {
  static Ideal a = Ideal::zero(RingPresentation::make(ambient()));
  return a;
}

void BM_pairwise_serial(benchmark::State& state) {
  auto block = product_block();
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_products_serial(block, block));
}

void BM_pairwise_parallel(benchmark::State& state) {
  set_parallel(true);
  auto block = product_block();
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_products(block, block));
}

void BM_power_rows_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        power_quotient_lengths_serial(zero_ideal(), artinian_cut(), 1, 12));
}

void BM_power_rows_parallel(benchmark::State& state) {
  set_parallel(true);
  for (auto _ : state)
    benchmark::DoNotOptimize(power_quotient_lengths(zero_ideal(), artinian_cut(), 1, 12));
}

}  // namespace

BENCHMARK(BM_pairwise_serial);
BENCHMARK(BM_pairwise_parallel);
BENCHMARK(BM_power_rows_serial);
BENCHMARK(BM_power_rows_parallel);
BENCHMARK_MAIN();
