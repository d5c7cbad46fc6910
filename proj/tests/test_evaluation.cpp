#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "ontosim/errors.hpp"
#include "ontosim/evaluation.hpp"
#include "ontosim/experiment_suite.hpp"

using namespace ontosim;
using doctest::Approx;

namespace {

const JudgmentDataset& fixture_judgments() {
    static const auto ds = read_judgments_file(fixtures::data_path("judgments_synthetic.csv"));
    return ds;
}

const std::vector<PairTarget>& table_targets() {
    static const auto t = read_pair_targets_file(fixtures::data_path("pair_targets.csv"));
    return t;
}

TrainingConfig quick_config(int reps = 20) {
    TrainingConfig c;
    c.repetitions = reps;
    return c;
}

}  // namespace

TEST_CASE("absolute error is measured on the normalised scale") {
    CHECK(absolute_error(8.47, 0.66) == Approx(18.7));
    CHECK(absolute_error(0.0, 0.0) == 0.0);
    CHECK(absolute_error(10.0, 0.0) == Approx(100.0));
    CHECK_THROWS_AS(absolute_error(10.5, 0.5), RangeError);
    CHECK_THROWS_AS(absolute_error(5.0, -0.1), RangeError);
    CHECK_THROWS_AS(absolute_error(5.0, 1.2), RangeError);
}

TEST_CASE("mean errors") {
    std::vector<double> e{10.0, 20.0, 30.0};
    CHECK(mean_error_per_pair(e) == Approx(20.0));
    CHECK(mean_error_per_user(e) == Approx(20.0));
    CHECK_THROWS_AS(mean_error_per_pair(std::vector<double>{}), EmptyInput);
    CHECK_THROWS_AS(mean_error_per_user(std::vector<double>{}), EmptyInput);
}

TEST_CASE("significance test") {
    CHECK(normal_critical_value(0.05) == Approx(1.6448536).epsilon(1e-6));
    CHECK(normal_critical_value(0.01) == Approx(2.3263479).epsilon(1e-6));

    std::vector<double> a{1, 2, 3, 4}, b{1, 2, 3, 4};
    auto same = significance_test(a, b);
    CHECK(same.statistic == 0.0);
    CHECK_FALSE(same.reject);

    // d = {-1,-2,-3,-2}: mean -2, sd sqrt(2/3), statistic -2/(sqrt(2/3)/2).
    std::vector<double> lo{0, 0, 0, 2}, hi{1, 2, 3, 4};
    auto r = significance_test(lo, hi);
    CHECK(r.statistic == Approx(-4.0 / std::sqrt(2.0 / 3.0)));
    CHECK(r.reject);
    CHECK_FALSE(significance_test(hi, lo).reject);

    CHECK_THROWS_AS(significance_test(std::vector<double>{1, 2}, std::vector<double>{1}), LengthMismatch);
    CHECK_THROWS_AS(significance_test(std::vector<double>{1}, std::vector<double>{1}), LengthMismatch);
}

TEST_CASE("the synthesizer reproduces a published row") {
    std::vector<PairTarget> one{{17, "hard_disk_drive", "pendrive", 3.0, 0.94, 8.47}};
    auto ds = synthesize_judgments(one, 17, 0);
    auto s = ds.pair_stats(17);
    CHECK(ds.judgments().size() == 17);
    CHECK(s.range == 3.0);
    CHECK(std::abs(s.mean - 8.47) <= 0.15);
    CHECK(std::abs(s.sd - 0.94) <= 0.15);
    for (const auto& j : ds.judgments()) CHECK(j.score == std::round(j.score));
}

TEST_CASE("every published row is reproduced within tolerance") {
    const auto& targets = table_targets();
    REQUIRE(targets.size() == 20);
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        auto ds = synthesize_judgments(targets, 17, seed);
        for (const auto& t : targets) {
            auto s = ds.pair_stats(t.pair_id);
            INFO("pair " << t.pair_id << " seed " << seed);
            CHECK(s.range == t.range);
            CHECK(std::abs(s.mean - t.mean) <= 0.15);
            CHECK(std::abs(s.sd - t.sd) <= 0.15);
        }
    }
}

TEST_CASE("infeasible targets are reported") {
    std::vector<PairTarget> bad{{0, "a", "b", 10.0, 0.1, 5.0}};
    CHECK_THROWS_AS(synthesize_judgments(bad, 17, 0), InfeasibleStats);
    std::vector<PairTarget> off{{0, "a", "b", 0.0, 0.0, 11.0}};
    CHECK_THROWS_AS(synthesize_judgments(off, 17, 0), InfeasibleStats);
}

TEST_CASE("the bundled synthetic dataset matches the published rows") {
    for (const auto& t : table_targets()) {
        auto s = fixture_judgments().pair_stats(t.pair_id);
        CHECK(s.range == t.range);
        CHECK(std::abs(s.mean - t.mean) <= 0.15);
    }
}

TEST_CASE("judgment CSV round-trips") {
    std::stringstream buf;
    write_judgments_csv(buf, fixture_judgments());
    auto back = read_judgments_csv(buf);
    REQUIRE(back.judgments().size() == fixture_judgments().judgments().size());
    for (std::size_t i = 0; i < back.judgments().size(); ++i) {
        CHECK(back.judgments()[i].pair_id == fixture_judgments().judgments()[i].pair_id);
        CHECK(back.judgments()[i].score == fixture_judgments().judgments()[i].score);
    }

    std::istringstream wrong("pair,a,b\n1,x,y\n");
    CHECK_THROWS_AS(read_judgments_csv(wrong), ParseError);
    std::istringstream range("pair_id,concept1,concept2,user_id,score\n1,x,y,0,11\n");
    CHECK_THROWS_AS(read_judgments_csv(range), RangeError);
}

TEST_CASE("hidden-weight data is a noisy aggregate") {
    const auto& store = fixtures::teaching_ontology();
    auto noiseless = synthesize_from_weights(store, fixture_judgments().pairs(), WeightVector::ones(), 3, 0.0, 1);
    PreparedDataset prepared(noiseless, store);
    for (const auto& j : noiseless.judgments())
        CHECK(j.score == Approx(10.0 * prepared.untrained_score(noiseless.pair_position(j.pair_id))));
}

TEST_CASE("pair-oriented error tables on the fixture") {
    const auto& store = fixtures::teaching_ontology();
    auto report = run_experiment(ExperimentMethod::trained(Strategy::pair), fixture_judgments(), store, quick_config());
    REQUIRE(report.per_pair_error.size() == 20);
    CHECK(report.per_user_error.size() == 17);
    CHECK(report.iteration_error.size() == 17);
    CHECK(report.avg_error == Approx(std::accumulate(report.per_pair_error.begin(), report.per_pair_error.end(), 0.0) /
                                     20.0));
    // The teacher/tutorial pair carries the largest error.
    auto worst = std::max_element(report.per_pair_error.begin(), report.per_pair_error.end());
    CHECK(report.pair_ids[static_cast<std::size_t>(worst - report.per_pair_error.begin())] == 2);
    // Running mean of the trace ends at its overall mean.
    double total = std::accumulate(report.iteration_error.begin(), report.iteration_error.end(), 0.0);
    CHECK(report.accumulated_trace.back() == Approx(total / 17.0));
}

TEST_CASE("single-dimension reports rank every applicable dimension") {
    const auto& store = fixtures::teaching_ontology();
    std::array<ExperimentReport, kDimensions> reports;
    for (std::size_t d = 0; d < kDimensions; ++d)
        reports[d] = single_dimension_report(fixture_judgments(), store, kAllDimensions[d]);
    const PreparedDataset prepared(fixture_judgments(), store);
    for (std::size_t p = 0; p < reports[0].pair_ids.size(); ++p) {
        auto first = reports[0].first_ranked[p];
        for (std::size_t d = 1; d < kDimensions; ++d) CHECK(reports[d].first_ranked[p] == first);
        if (!first) continue;
        // The first-ranked dimension has the lowest error among applicable ones.
        const auto& partials = prepared.partials(static_cast<int>(p));
        double best = reports[static_cast<std::size_t>(*first)].per_pair_error[p];
        for (std::size_t d = 0; d < kDimensions; ++d)
            if (partials[d]) CHECK(best <= reports[d].per_pair_error[p] + 1e-12);
    }
}

TEST_CASE("repeated-concept pairs on the fixture") {
    auto ids = pairs_with_repeated_concepts(fixture_judgments());
    CHECK(std::find(ids.begin(), ids.end(), 5) != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), 9) != ids.end());
    ExperimentReport r;
    r.pair_ids = {1, 2, 3};
    r.per_pair_error = {10, 20, 60};
    CHECK(restricted_average(r, {1, 3}) == Approx(35.0));
}

TEST_CASE("the hard disk and pen drive pair ranks near the top under trained weights") {
    const auto& store = fixtures::teaching_ontology();
    auto feature = train_feature_oriented(fixture_judgments(), store, {});
    const PreparedDataset prepared(fixture_judgments(), store);
    std::vector<std::pair<double, int>> ranked;
    for (const auto& p : fixture_judgments().pairs()) {
        const auto& a = feature.state.weights.at(p.c1.value);
        const auto& b = feature.state.weights.at(p.c2.value);
        WeightVector mean;
        for (std::size_t d = 0; d < kDimensions; ++d) mean.w[d] = (a.w[d] + b.w[d]) / 2.0;
        const auto& partials = prepared.partials(fixture_judgments().pair_position(p.pair_id));
        ranked.emplace_back(predict(partials, mean), p.pair_id);
    }
    std::sort(ranked.rbegin(), ranked.rend());
    auto it = std::find_if(ranked.begin(), ranked.end(), [](const auto& x) { return x.second == 17; });
    // Upper third of the ranking; the judges put this pair first.
    CHECK(it - ranked.begin() < static_cast<long>((ranked.size() + 2) / 3));
}

TEST_CASE("error tables are written as CSV") {
    ExperimentReport r;
    r.pair_ids = {0, 2};
    r.per_pair_error = {12.5, 20.0};
    r.avg_error = 16.25;
    std::ostringstream out;
    write_error_table_csv(out, r);
    CHECK(out.str() == "0,2,AVG\n12.500000,20.000000,16.250000\n");
}

TEST_CASE("the suite reports the significance of feature against sort-only") {
    const auto& store = fixtures::teaching_ontology();
    auto suite = run_experiment_suite(fixture_judgments(), store, quick_config());
    auto rows = suite.summary();
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].method == "pair");
    CHECK(suite.significance.critical == Approx(1.6448536).epsilon(1e-6));
    auto recomputed = significance_test(suite.feature.per_pair_error, suite.sort_only.per_pair_error);
    CHECK(recomputed.statistic == suite.significance.statistic);
}
