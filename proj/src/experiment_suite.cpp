#include "ontosim/experiment_suite.hpp"

#include <fstream>

#include "ontosim/errors.hpp"

namespace ontosim {

namespace {

// Averages of the original study, error in percent.
constexpr double kReferencePair = 18.5;
constexpr double kReferenceFeature = 20.2;
constexpr double kReferenceUser = 23.9;
constexpr double kReferenceHybrid = 21.2;
constexpr double kReferenceSortOnly = 24.1;
constexpr double kReferenceFeatureRepeated = 22.8;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

std::vector<SummaryRow> ExperimentSuite::summary() const {
    return {
        {"pair", pair.avg_error, kReferencePair},
        {"feature", feature.avg_error, kReferenceFeature},
        {"user", user.avg_error, kReferenceUser},
        {"hybrid", hybrid.avg_error, kReferenceHybrid},
        {"sort_only", sort_only.avg_error, kReferenceSortOnly},
        {"untrained", untrained.avg_error, std::nullopt},
        {"feature_repeated_pairs", feature_repeated_avg, kReferenceFeatureRepeated},
    };
}

ExperimentSuite run_experiment_suite(const JudgmentDataset& dataset, const OntologyStore& store,
                                     const TrainingConfig& config, Execution execution) {
    ExperimentSuite s;
    auto run = [&](ExperimentMethod m) { return run_experiment(m, dataset, store, config, nullptr, execution); };
    s.pair = run(ExperimentMethod::trained(Strategy::pair));
    s.feature = run(ExperimentMethod::trained(Strategy::feature));
    s.user = run(ExperimentMethod::trained(Strategy::user));
    s.hybrid = run(ExperimentMethod::trained(Strategy::hybrid));
    s.sort_only = run({MethodKind::sort_only});
    s.untrained = run({MethodKind::untrained});
    for (std::size_t d = 0; d < kDimensions; ++d) s.single[d] = single_dimension_report(dataset, store, kAllDimensions[d]);
    s.repeated_pairs = pairs_with_repeated_concepts(dataset);
    s.feature_repeated_avg = s.repeated_pairs.empty() ? 0.0 : restricted_average(s.feature, s.repeated_pairs);
    s.significance = significance_test(s.feature.per_pair_error, s.sort_only.per_pair_error, 0.05);
    return s;
}

std::vector<std::string> write_experiment_suite(const ExperimentSuite& suite, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    auto emit = [&](const std::string& name, auto&& body) {
        auto out = open_out(dir / name);
        body(out);
        written.push_back(name);
    };

    const std::pair<const char*, const ExperimentReport*> tables[] = {
        {"pair", &suite.pair},          {"feature", &suite.feature},     {"user", &suite.user},
        {"hybrid", &suite.hybrid},      {"sort_only", &suite.sort_only}, {"untrained", &suite.untrained},
    };
    for (const auto& [name, report] : tables)
        emit(std::string("errors_") + name + ".csv", [&](std::ostream& o) { write_error_table_csv(o, *report); });
    for (const auto& [name, report] : tables) {
        if (report->iteration_error.empty()) continue;
        emit(std::string("trace_") + name + ".csv", [&](std::ostream& o) { write_trace_csv(o, *report); });
        emit(std::string("users_") + name + ".csv", [&](std::ostream& o) { write_user_table_csv(o, *report); });
    }

    emit("single_dimension.csv", [&](std::ostream& o) {
        o << "pair_id";
        for (auto d : kAllDimensions) o << ',' << to_string(d);
        o << ",first\n";
        const auto& first = suite.single[0].first_ranked;
        for (std::size_t p = 0; p < suite.single[0].pair_ids.size(); ++p) {
            o << suite.single[0].pair_ids[p];
            for (const auto& r : suite.single) o << ',' << format_number(r.per_pair_error[p]);
            o << ',' << (first[p] ? std::string(to_string(*first[p])) : std::string("none")) << '\n';
        }
        o << "AVG";
        for (const auto& r : suite.single) o << ',' << format_number(r.avg_error);
        o << ",\n";
    });

    emit("summary.csv", [&](std::ostream& o) {
        o << "method,avg_error,reference_avg,divergence\n";
        for (const auto& row : suite.summary()) {
            o << row.method << ',' << format_number(row.avg_error) << ',';
            if (row.reference) {
                o << format_number(*row.reference) << ',' << format_number(row.avg_error - *row.reference);
            } else {
                o << ',';
            }
            o << '\n';
        }
    });

    emit("significance.csv", [&](std::ostream& o) {
        o << "comparison,statistic,critical,reject\n";
        o << "feature_vs_sort_only," << format_number(suite.significance.statistic) << ','
          << format_number(-suite.significance.critical) << ',' << (suite.significance.reject ? "true" : "false")
          << '\n';
    });
    return written;
}

}  // namespace ontosim
