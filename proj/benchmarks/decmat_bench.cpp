#include <benchmark/benchmark.h>

#include "decmat/decsolve.hpp"

namespace {

using namespace decmat;

void BM_dl_characters_all_classes(benchmark::State& state) {
    const LusztigContext& ctx = LusztigContext::get(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (size_t c = 0; c < ctx.weyl().classes().size(); ++c) {
            auto v = ctx.dl_character_of_class(static_cast<int>(c));
            benchmark::DoNotOptimize(v);
        }
    }
}
BENCHMARK(BM_dl_characters_all_classes)->Arg(2)->Arg(3);

void BM_relation_vectors(benchmark::State& state) {
    const LusztigContext& ctx = LusztigContext::get(3);
    for (auto _ : state) {
        auto rels = ctx.relation_vectors(EllCase::Large);
        benchmark::DoNotOptimize(rels);
    }
}
BENCHMARK(BM_relation_vectors);

void BM_psi_columns(benchmark::State& state) {
    const SolveResult so5 = solve(2, EllCase::Large);
    const LeviPims pims = levi_pims_from(so5);
    for (auto _ : state) {
        auto cols = psi_columns(3, EllCase::Large, &pims);
        benchmark::DoNotOptimize(cols);
    }
}
BENCHMARK(BM_psi_columns);

void BM_solve(benchmark::State& state) {
    const EllCase cs = state.range(0) == 3   ? EllCase::Case3
                       : state.range(0) == 5 ? EllCase::Case5
                                             : EllCase::Large;
    for (auto _ : state) {
        auto res = solve(3, cs);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_solve)->Arg(3)->Arg(5)->Arg(7);

void BM_char_poly(benchmark::State& state) {
    const WeylGroup& w = WeylGroup::get(3);
    for (auto _ : state) {
        for (const auto& cls : w.classes()) {
            auto p = w.char_poly(cls.min_rep);
            benchmark::DoNotOptimize(p);
        }
    }
}
BENCHMARK(BM_char_poly);

}  // namespace

BENCHMARK_MAIN();
