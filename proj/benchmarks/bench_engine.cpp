#include <benchmark/benchmark.h>

#include "carleman/conjugation.hpp"
#include "carleman/engine.hpp"
#include "carleman/oracle.hpp"

using namespace carleman;

namespace {

TermList preset_product(Schema schema) {
    const auto& model = WeightModel::for_schema(schema);
    auto conj = conjugate({OperatorOrder::Fourth, true}, model);
    auto split = split_multiplier(conj, model);
    UnaryList i23 = split.i2;
    i23.insert(i23.end(), split.i3.begin(), split.i3.end());
    return multiply(substitute_gamma_one(split.i1), merge_unary(std::move(i23)));
}

void BM_ReducePoly(benchmark::State& state) {
    auto product = preset_product(Schema::Poly);
    const auto& model = WeightModel::poly_psi();
    for (auto _ : state) benchmark::DoNotOptimize(reduce(product, model));
}

void BM_ReduceExp(benchmark::State& state) {
    auto product = preset_product(Schema::Exp);
    const auto& model = WeightModel::exp_rho();
    for (auto _ : state) benchmark::DoNotOptimize(reduce(product, model));
}

void BM_VerifyPoly(benchmark::State& state) {
    const auto& model = WeightModel::poly_psi();
    auto product = preset_product(Schema::Poly);
    auto reduced = reduce(product, model);
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity(product, reduced, model));
}

void BM_VerifyExp(benchmark::State& state) {
    const auto& model = WeightModel::exp_rho();
    auto product = preset_product(Schema::Exp);
    auto reduced = reduce(product, model);
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity(product, reduced, model));
}

void BM_MergeExp(benchmark::State& state) {
    auto reduced = reduce(preset_product(Schema::Exp), WeightModel::exp_rho());
    for (auto _ : state) {
        TermList copy = reduced;
        benchmark::DoNotOptimize(merge(std::move(copy)));
    }
}

}  // namespace

BENCHMARK(BM_ReducePoly);
BENCHMARK(BM_ReduceExp);
BENCHMARK(BM_VerifyPoly);
BENCHMARK(BM_VerifyExp);
BENCHMARK(BM_MergeExp);

BENCHMARK_MAIN();
