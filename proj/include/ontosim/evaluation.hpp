#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontosim/dataset.hpp"
#include "ontosim/training.hpp"

namespace ontosim {

enum class MethodKind { pair, user, feature, hybrid, sort_only, untrained, single_dimension };

struct ExperimentMethod {
    MethodKind kind = MethodKind::pair;
    Dimension dimension = Dimension::sort;  // only for single_dimension

    static ExperimentMethod trained(Strategy s);
    static ExperimentMethod single(Dimension d) { return {MethodKind::single_dimension, d}; }

    bool operator==(const ExperimentMethod&) const = default;
};

std::string to_string(const ExperimentMethod& m);

/// Error tables for one method, averaged over repetitions. Errors are
/// percentages of the normalised [0,1] similarity scale.
struct ExperimentReport {
    ExperimentMethod method;
    std::vector<int> pair_ids;
    std::vector<double> per_pair_error;
    std::vector<int> user_ids;          // empty for untrained baselines
    std::vector<double> per_user_error;
    double avg_error = 0.0;
    /// Mean error at each training iteration and its running mean.
    std::vector<double> iteration_error;
    std::vector<double> accumulated_trace;
    /// Same sequences scored with all-ones weights and no updates.
    std::vector<double> untrained_iteration_error;
    std::vector<double> untrained_accumulated_trace;
    /// Per pair, all-ones weights, computed in dataset order.
    std::vector<double> untrained_per_pair_error;
    int repetitions = 0;
    std::uint64_t seed = 0;
    /// single_dimension only: per pair, the dimension with the lowest error.
    std::vector<std::optional<Dimension>> first_ranked;
};

/// |Y/10 - S| * 100. Throws RangeError outside Y in [0,10], S in [0,1].
double absolute_error(double score, double similarity);
/// Arithmetic mean of a pair's errors over its judges. Throws EmptyInput.
double mean_error_per_pair(std::span<const double> errors);
/// Arithmetic mean of a user's errors over their pairs. Throws EmptyInput.
double mean_error_per_user(std::span<const double> errors);

/// What one repetition contributes to a report.
struct RepetitionOutcome {
    std::vector<double> per_pair;   // indexed by pair position
    std::vector<double> per_user;   // indexed by position in dataset.users()
    std::vector<double> iteration_error;
    std::vector<double> untrained_iteration_error;
};

/// Runs repetition `rep` of a trained method (pair/user/feature/hybrid).
/// Hybrid without `feature_state` first trains feature weights on the same
/// repetition's generator.
RepetitionOutcome run_repetition(const PreparedDataset& data, Strategy strategy, const TrainingConfig& config,
                                 const TrainingState* feature_state, std::uint64_t rep);

/// Averages outcomes column by column. Each column is summed in sorted
/// order, so any permutation of `outcomes` yields a bit-identical report.
void reduce_repetitions(std::span<const RepetitionOutcome> outcomes, ExperimentReport& report);

enum class Execution { serial, parallel };

/// Executes `config.repetitions` shuffled runs of `method` and averages
/// them. Untrained and single-dimension methods involve no training and
/// ignore the seed.
ExperimentReport run_experiment(const ExperimentMethod& method, const JudgmentDataset& dataset,
                                const OntologyStore& store, const TrainingConfig& config,
                                const TrainingState* feature_state = nullptr,
                                Execution execution = Execution::parallel);

/// Error table using one dimension's partial as the global score (0 when
/// the dimension is not applicable to a pair), plus per-pair first-ranked
/// dimension among the applicable ones.
ExperimentReport single_dimension_report(const JudgmentDataset& dataset, const OntologyStore& store,
                                         Dimension dimension);

struct SignificanceResult {
    double statistic = 0.0;
    double critical = 0.0;  // positive; rejection when statistic < -critical
    bool reject = false;
};

/// One-sided paired test of H1: mean(a) < mean(b), normal approximation.
/// Throws LengthMismatch for unequal lengths or fewer than two samples.
SignificanceResult significance_test(std::span<const double> errors_a, std::span<const double> errors_b,
                                     double level = 0.05);
/// Upper `level` quantile of the standard normal distribution.
double normal_critical_value(double level);

/// Published summary row of one human-judgment pair.
struct PairTarget {
    int pair_id = 0;
    ConceptId c1;
    ConceptId c2;
    double range = 0.0;
    double sd = 0.0;
    double mean = 0.0;
};

/// CSV header `pair_id,concept1,concept2,range,sd,mean`.
std::vector<PairTarget> read_pair_targets_csv(std::istream& in);
std::vector<PairTarget> read_pair_targets_file(const std::string& path);

/// Integer scores on [0,10] per pair whose sample mean and sd fall within
/// 0.15 of the target and whose range matches exactly. Throws
/// InfeasibleStats when no such sample exists for `n_users`.
JudgmentDataset synthesize_judgments(const std::vector<PairTarget>& targets, int n_users, std::uint64_t seed);

/// Scores generated from a hidden weight vector: aggregate of each pair's
/// partials under `hidden`, scaled to 0-10, plus Gaussian noise of
/// `noise_sd`, clamped to [0,10].
JudgmentDataset synthesize_from_weights(const OntologyStore& store, const std::vector<ConceptPair>& pairs,
                                        const WeightVector& hidden, int n_users, double noise_sd,
                                        std::uint64_t seed);

/// Pairs containing a concept that also occurs in another pair.
std::vector<int> pairs_with_repeated_concepts(const JudgmentDataset& dataset);
/// Mean of `report.per_pair_error` restricted to `pair_ids`.
double restricted_average(const ExperimentReport& report, const std::vector<int>& pair_ids);

// Report files.
void write_error_table_csv(std::ostream& out, const ExperimentReport& report);
void write_user_table_csv(std::ostream& out, const ExperimentReport& report);
void write_trace_csv(std::ostream& out, const ExperimentReport& report);
std::string format_number(double x);

}  // namespace ontosim
