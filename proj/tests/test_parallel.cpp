#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>

#include "fixtures.hpp"
#include "ontosim/evaluation.hpp"
#include "ontosim/parallel.hpp"

using namespace ontosim;

namespace {

const JudgmentDataset& fixture_judgments() {
    static const auto ds = read_judgments_file(fixtures::data_path("judgments_synthetic.csv"));
    return ds;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool same_outcome(const RepetitionOutcome& a, const RepetitionOutcome& b) {
    return same_bits(a.per_pair, b.per_pair) && same_bits(a.per_user, b.per_user) &&
           same_bits(a.iteration_error, b.iteration_error) &&
           same_bits(a.untrained_iteration_error, b.untrained_iteration_error);
}

}  // namespace

TEST_CASE("parallel repetitions equal the serial reference") {
    const auto& store = fixtures::teaching_ontology();
    PreparedDataset data(fixture_judgments(), store);
    TrainingConfig config;
    config.repetitions = 24;
    config.seed = 3;
    for (auto s : {Strategy::pair, Strategy::user, Strategy::feature, Strategy::hybrid}) {
        CAPTURE(to_string(s));
        auto serial = run_repetitions_serial(data, s, config, nullptr);
        auto parallel = run_repetitions_parallel(data, s, config, nullptr);
        REQUIRE(serial.size() == 24);
        REQUIRE(parallel.size() == 24);
        for (std::size_t i = 0; i < serial.size(); ++i) CHECK(same_outcome(serial[i], parallel[i]));
    }
}

TEST_CASE("experiment reports do not depend on the execution mode") {
    const auto& store = fixtures::teaching_ontology();
    TrainingConfig config;
    config.repetitions = 16;
    auto a = run_experiment(ExperimentMethod::trained(Strategy::feature), fixture_judgments(), store, config, nullptr,
                            Execution::serial);
    auto b = run_experiment(ExperimentMethod::trained(Strategy::feature), fixture_judgments(), store, config, nullptr,
                            Execution::parallel);
    CHECK(same_bits(a.per_pair_error, b.per_pair_error));
    CHECK(same_bits(a.per_user_error, b.per_user_error));
    CHECK(same_bits(a.iteration_error, b.iteration_error));
    CHECK(a.avg_error == b.avg_error);
}

TEST_CASE("reducing repetitions is permutation-invariant") {
    const auto& store = fixtures::teaching_ontology();
    PreparedDataset data(fixture_judgments(), store);
    TrainingConfig config;
    config.repetitions = 12;
    auto outcomes = run_repetitions_serial(data, Strategy::user, config, nullptr);
    ExperimentReport base;
    reduce_repetitions(outcomes, base);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(outcomes.begin(), outcomes.end(), rng);
        ExperimentReport r;
        reduce_repetitions(outcomes, r);
        CHECK(same_bits(r.per_pair_error, base.per_pair_error));
        CHECK(same_bits(r.per_user_error, base.per_user_error));
        CHECK(same_bits(r.iteration_error, base.iteration_error));
        CHECK(same_bits(r.accumulated_trace, base.accumulated_trace));
    }
}

TEST_CASE("parallel pair partials and similarity matrix equal the serial reference") {
    const auto& store = fixtures::teaching_ontology();
    auto a = pair_partials_serial(store, fixture_judgments().pairs());
    auto b = pair_partials_parallel(store, fixture_judgments().pairs());
    CHECK(a == b);

    std::vector<ConceptIndex> concepts;
    for (ConceptIndex i = 0; i < store.size(); i += 7) concepts.push_back(i);
    WeightVector w;
    w.w = {0.5, 1.0, 0.2, 2.0, 1.0};
    auto ms = similarity_matrix_serial(store, concepts, w);
    auto mp = similarity_matrix_parallel(store, concepts, w);
    REQUIRE(ms.size() == concepts.size() * concepts.size());
    CHECK(same_bits(ms, mp));
    for (std::size_t i = 0; i < concepts.size(); ++i)
        for (std::size_t j = 0; j < concepts.size(); ++j) {
            double x = ms[i * concepts.size() + j], y = ms[j * concepts.size() + i];
            CHECK(((std::isnan(x) && std::isnan(y)) || std::abs(x - y) < 1e-12));
        }
}
