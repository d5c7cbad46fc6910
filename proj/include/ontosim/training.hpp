#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ontosim/dataset.hpp"
#include "ontosim/similarity.hpp"

namespace ontosim {

/// Training hyper-parameters.
///
/// `alpha` scales the proportional (third-case) update; 0.1 keeps those
/// steps well below the unit steps of the other two cases.
/// `bootstrap_delta` is the previous-increment value every dimension starts
/// with: the proportional rule multiplies by it, so zero would never learn.
struct TrainingConfig {
    double alpha = 0.1;
    int repetitions = 300;
    std::uint64_t seed = 0;
    double bootstrap_delta = 1.0;
};

enum class Strategy { pair, user, feature, hybrid };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view text);

/// Which of the three update cases fired.
enum class UpdateCase {
    none,          // no applicable dimension
    raise_max,     // every partial below the target: +1 on the argmax
    lower_min,     // every partial above the target: -1 on the argmin
    proportional,  // alpha (Y - Sim_i) prev_i Sim_i on every applicable i
};

struct UpdateStep {
    UpdateCase which = UpdateCase::none;
    std::array<double, kDimensions> delta{};
};

/// Computes the increments for one observation. `target` is the human score
/// normalised to [0,1]. Not-applicable partials are ignored by both
/// quantifiers and receive a zero increment. `rate_scale`, when given,
/// multiplies alpha per dimension (hybrid training). Ties in argmax/argmin
/// resolve to the lowest dimension index.
UpdateStep compute_update(const WeightVector& w, const Partials& sims, double target, double alpha,
                          const std::array<double, kDimensions>* rate_scale = nullptr);

/// Adds `delta` to the weights, clamps them at zero and records `delta` as
/// the new previous increment.
WeightVector apply_update(const WeightVector& w, const std::array<double, kDimensions>& delta);

WeightVector update_weights(const WeightVector& w, const Partials& sims, double target, double alpha);

/// Global score used during training. Falls back to the plain mean of the
/// applicable partials if clamping has zeroed every applicable weight.
double predict(const Partials& partials, const WeightVector& w);

/// Weight vectors keyed by pair id, user id or concept id (as text).
struct TrainingState {
    Strategy strategy = Strategy::pair;
    std::map<std::string, WeightVector> weights;

    bool operator==(const TrainingState&) const = default;
};

void write_state_json(std::ostream& out, const TrainingState& state);
TrainingState read_state_json(std::istream& in);

/// One predict-then-train observation.
struct StepRecord {
    int pair_id = 0;
    int user_id = 0;
    int iteration = 0;        // 1-based position within the training sequence
    double error = 0.0;       // percent, prediction before the update
    double untrained = 0.0;   // percent, all-ones weights, never updated
};

struct TrainingResult {
    TrainingState state;
    std::vector<StepRecord> steps;
    /// Mean error per iteration index (entry k is iteration k+1).
    std::vector<double> error_trace;
};

/// Dataset with the partial similarities of every pair computed once.
class PreparedDataset {
public:
    PreparedDataset(const JudgmentDataset& dataset, const OntologyStore& store);

    const JudgmentDataset& dataset() const noexcept { return *dataset_; }
    const Partials& partials(int pair_position) const { return partials_[static_cast<std::size_t>(pair_position)]; }
    const Partials& partials_for(const Judgment& j) const;
    double untrained_score(int pair_position) const { return untrained_[static_cast<std::size_t>(pair_position)]; }

private:
    const JudgmentDataset* dataset_;
    std::vector<Partials> partials_;
    std::vector<double> untrained_;
};

// Single shuffled training runs driven by an explicit generator; the
// experiment harness calls these once per repetition.
TrainingResult run_pair_training(const PreparedDataset& data, const TrainingConfig& config, std::mt19937_64& rng);
TrainingResult run_user_training(const PreparedDataset& data, const TrainingConfig& config, std::mt19937_64& rng);
TrainingResult run_feature_training(const PreparedDataset& data, const TrainingConfig& config,
                                    std::mt19937_64& rng);
TrainingResult run_hybrid_training(const PreparedDataset& data, const TrainingConfig& config,
                                   const TrainingState& feature_state, std::mt19937_64& rng);

// One run each, seeded from config.seed.
TrainingResult train_pair_oriented(const JudgmentDataset& dataset, const OntologyStore& store,
                                   const TrainingConfig& config);
TrainingResult train_user_oriented(const JudgmentDataset& dataset, const OntologyStore& store,
                                   const TrainingConfig& config);
TrainingResult train_feature_oriented(const JudgmentDataset& dataset, const OntologyStore& store,
                                      const TrainingConfig& config);
/// Throws MissingFeatureState unless `feature_state` came from feature training.
TrainingResult train_hybrid(const JudgmentDataset& dataset, const OntologyStore& store, const TrainingConfig& config,
                            const TrainingState& feature_state);

/// Per-dimension alpha multipliers for hybrid training: the mean of the two
/// concepts' feature weights, rescaled to sum to 5.
std::array<double, kDimensions> feature_rate_scale(const TrainingState& feature_state, const ConceptId& c1,
                                                   const ConceptId& c2);

/// Generator for repetition `rep` of a run seeded with `seed`.
std::mt19937_64 repetition_rng(std::uint64_t seed, std::uint64_t rep);

}  // namespace ontosim
