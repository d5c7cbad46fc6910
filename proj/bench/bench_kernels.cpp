// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <string>

#include "ontosim/dataset.hpp"
#include "ontosim/ontology.hpp"
#include "ontosim/parallel.hpp"

using namespace ontosim;

namespace {

const OntologyStore& store() {
    static const auto s = load_ontology_file(std::string(ONTOSIM_DATA_DIR) + "/ontology_cs_teaching.json");
    return s;
}

const PreparedDataset& prepared() {
    static const auto ds = read_judgments_file(std::string(ONTOSIM_DATA_DIR) + "/judgments_synthetic.csv");
    static const PreparedDataset p(ds, store());
    return p;
}

std::vector<ConceptIndex> first_concepts(std::size_t n) {
    std::vector<ConceptIndex> out;
    for (ConceptIndex i = 0; i < store().size() && out.size() < n; ++i) out.push_back(i);
    return out;
}

template <auto Kernel>
void BM_repetitions(benchmark::State& state) {
    TrainingConfig config;
    config.repetitions = static_cast<int>(state.range(0));
    const auto strategy = static_cast<Strategy>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(prepared(), strategy, config, nullptr));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_similarity_matrix(benchmark::State& state) {
    const auto concepts = first_concepts(static_cast<std::size_t>(state.range(0)));
    const auto w = WeightVector::ones();
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(store(), concepts, w));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void repetition_args(benchmark::internal::Benchmark* b) {
    for (int s : {0, 1, 2, 3}) b->Args({300, s});
    b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_repetitions<run_repetitions_serial>)->Apply(repetition_args);
BENCHMARK(BM_repetitions<run_repetitions_parallel>)->Apply(repetition_args)->UseRealTime();
BENCHMARK(BM_similarity_matrix<similarity_matrix_serial>)->Arg(64)->Arg(256)->Arg(520)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_similarity_matrix<similarity_matrix_parallel>)
    ->Arg(64)
    ->Arg(256)
    ->Arg(520)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
