#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "dfinv/fox.hpp"
#include "dfinv/laurent.hpp"
#include "dfinv/qlinalg.hpp"
#include "dfinv/tcone.hpp"

namespace {

using namespace dfinv;

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(DFINV_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// (1 - t1)(1 - t2)...(1 - tk): support 2^k, every partition worth checking.
LaurentPoly product_of_lines(std::size_t k) {
  LaurentPoly f = parse_laurent("1", k);
  for (std::size_t i = 1; i <= k; ++i)
    f = f * parse_laurent("1-t" + std::to_string(i), k);
  return f;
}

void BM_TangentCone(benchmark::State& state) {
  const LaurentPoly f = product_of_lines(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tangent_cone_polys({f}));
  state.counters["support"] = static_cast<double>(f.terms().size());
}
BENCHMARK(BM_TangentCone)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_LatticeMembership(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RationalMatrix rows(n / 2, n);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = Rational(static_cast<long>((i + 2) * (j + 1) % 7), 1);
  const RationalSubspace l = RationalSubspace::span(rows);
  RationalVector lambda(n);
  for (std::size_t j = 0; j < n; ++j) lambda[j] = Rational(static_cast<long>(j + 1), static_cast<long>(n + 3));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_coset_membership(lambda, l));
}
BENCHMARK(BM_LatticeMembership)->RangeMultiplier(2)->Range(2, 16);

void BM_GenericRank(benchmark::State& state) {
  const AlexanderMatrix a = alexander_matrix(parse_presentation(read_data("ccm.pres")));
  Matrix<CycloLaurentPoly> m(a.entries.rows(), a.entries.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = to_cyclo(a.entries(i, j));
  for (auto _ : state) benchmark::DoNotOptimize(generic_rank(m));
}
BENCHMARK(BM_GenericRank)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
