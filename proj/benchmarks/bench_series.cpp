#include <benchmark/benchmark.h>

#include "qpentagon/identities.hpp"
#include "qpentagon/ncseries.hpp"
#include "qpentagon/qrat.hpp"

namespace {

using namespace qpentagon;

template <class C>
C q_value();
template <>
QRat q_value<QRat>() { return QRat::q(); }
template <>
BigRational q_value<BigRational>() { return BigRational(2, 5); }

template <class C>
void BM_NcMul(benchmark::State& state) {
  const SeriesRing<C> r(static_cast<int>(state.range(0)), q_value<C>());
  const auto a = nc_inv(r.one() - r.x() - r.y());
  const auto b = qexp(r.x() + r.y());
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NcMul<QRat>)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NcMul<BigRational>)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

template <class C>
void BM_Qexp(benchmark::State& state) {
  const SeriesRing<C> r(static_cast<int>(state.range(0)), q_value<C>());
  const auto z = -(r.x() * nc_inv(r.one() - r.x() - r.y()) * r.y());
  for (auto _ : state) benchmark::DoNotOptimize(qexp(z));
}
BENCHMARK(BM_Qexp<QRat>)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Qexp<BigRational>)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_QRatAdd(benchmark::State& state) {
  const QRat a = QRat(1L) / QRat(qpochhammer(static_cast<int>(state.range(0))));
  const QRat b = QRat::q() / QRat(qpochhammer(static_cast<int>(state.range(0)) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_QRatAdd)->DenseRange(2, 12, 2);

void BM_RunAll(benchmark::State& state, QMode mode) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_all(degree, mode));
}
BENCHMARK_CAPTURE(BM_RunAll, symbolic, QMode::symbolic())->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunAll, q_2_5, QMode::specialized(BigRational(2, 5)))
    ->DenseRange(4, 16, 4)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
