#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ontosim/evaluation.hpp"

namespace ontosim {

struct SummaryRow {
    std::string method;
    double avg_error = 0.0;
    /// Average reported for the original 17-judge study, when one exists.
    std::optional<double> reference;
};

/// Every method of the benchmark protocol run under one seed.
struct ExperimentSuite {
    ExperimentReport pair;
    ExperimentReport feature;
    ExperimentReport user;
    ExperimentReport hybrid;
    ExperimentReport sort_only;
    ExperimentReport untrained;
    std::array<ExperimentReport, kDimensions> single;
    std::vector<int> repeated_pairs;
    double feature_repeated_avg = 0.0;
    /// Feature-oriented errors against sort-only errors, per pair.
    SignificanceResult significance;

    /// Seven rows: pair, feature, user, hybrid, sort_only, untrained,
    /// feature_repeated_pairs.
    std::vector<SummaryRow> summary() const;
};

ExperimentSuite run_experiment_suite(const JudgmentDataset& dataset, const OntologyStore& store,
                                     const TrainingConfig& config, Execution execution = Execution::parallel);

/// Writes the CSV set described in the README into `dir` (created if
/// missing) and returns the file names written.
std::vector<std::string> write_experiment_suite(const ExperimentSuite& suite, const std::filesystem::path& dir);

}  // namespace ontosim
