#include "ontosim/training.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "ontosim/errors.hpp"

namespace ontosim {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::pair: return "pair";
        case Strategy::user: return "user";
        case Strategy::feature: return "feature";
        case Strategy::hybrid: return "hybrid";
    }
    return "pair";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
    for (auto s : {Strategy::pair, Strategy::user, Strategy::feature, Strategy::hybrid})
        if (to_string(s) == text) return s;
    return std::nullopt;
}

UpdateStep compute_update(const WeightVector& w, const Partials& sims, double target, double alpha,
                          const std::array<double, kDimensions>* rate_scale) {
    UpdateStep step;
    bool any = false;
    bool all_below = true;
    bool all_above = true;
    std::size_t argmax = 0, argmin = 0;
    for (std::size_t d = 0; d < kDimensions; ++d) {
        if (!sims[d]) continue;
        const double s = *sims[d];
        if (!any || s > *sims[argmax]) argmax = d;
        if (!any || s < *sims[argmin]) argmin = d;
        any = true;
        all_below = all_below && s < target;
        all_above = all_above && s > target;
    }
    if (!any) return step;

    if (all_below) {
        step.which = UpdateCase::raise_max;
        step.delta[argmax] = 1.0;
    } else if (all_above) {
        step.which = UpdateCase::lower_min;
        step.delta[argmin] = -1.0;
    } else {
        step.which = UpdateCase::proportional;
        for (std::size_t d = 0; d < kDimensions; ++d) {
            if (!sims[d]) continue;
            const double s = *sims[d];
            const double rate = rate_scale ? alpha * (*rate_scale)[d] : alpha;
            step.delta[d] = rate * (target - s) * w.prev_delta[d] * s;
        }
    }
    return step;
}

WeightVector apply_update(const WeightVector& w, const std::array<double, kDimensions>& delta) {
    WeightVector out = w;
    for (std::size_t d = 0; d < kDimensions; ++d) out.w[d] = std::max(0.0, w.w[d] + delta[d]);
    out.prev_delta = delta;
    return out;
}

WeightVector update_weights(const WeightVector& w, const Partials& sims, double target, double alpha) {
    return apply_update(w, compute_update(w, sims, target, alpha).delta);
}

double predict(const Partials& partials, const WeightVector& w) {
    double den = 0.0;
    for (std::size_t d = 0; d < kDimensions; ++d)
        if (partials[d]) den += w.w[d];
    if (den > 0.0) return aggregate(partials, w);
    WeightVector flat;
    flat.w.fill(1.0);
    return aggregate(partials, flat);
}

void write_state_json(std::ostream& out, const TrainingState& state) {
    nlohmann::ordered_json doc;
    doc["strategy"] = std::string(to_string(state.strategy));
    auto& weights = doc["weights"] = nlohmann::ordered_json::object();
    for (const auto& [key, v] : state.weights) {
        auto row = nlohmann::ordered_json::array();
        for (double x : v.w) row.push_back(x);
        for (double x : v.prev_delta) row.push_back(x);
        weights[key] = std::move(row);
    }
    out << doc.dump(2) << '\n';
}

TrainingState read_state_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed training state: ") + e.what());
    }
    TrainingState state;
    if (!doc.contains("strategy") || !doc["strategy"].is_string())
        throw ParseError("training state needs a 'strategy' string");
    auto strategy = parse_strategy(doc["strategy"].get<std::string>());
    if (!strategy) throw ParseError("unknown training strategy in state file");
    state.strategy = *strategy;
    if (!doc.contains("weights") || !doc["weights"].is_object())
        throw ParseError("training state needs a 'weights' object");
    for (auto it = doc["weights"].begin(); it != doc["weights"].end(); ++it) {
        const auto& row = it.value();
        if (!row.is_array() || row.size() != 2 * kDimensions)
            throw ParseError("weight row '" + it.key() + "' must hold 10 numbers");
        WeightVector v;
        for (std::size_t d = 0; d < kDimensions; ++d) {
            if (!row[d].is_number() || !row[d + kDimensions].is_number())
                throw ParseError("weight row '" + it.key() + "' must hold 10 numbers");
            v.w[d] = row[d].get<double>();
            v.prev_delta[d] = row[d + kDimensions].get<double>();
        }
        state.weights.emplace(it.key(), v);
    }
    return state;
}

PreparedDataset::PreparedDataset(const JudgmentDataset& dataset, const OntologyStore& store)
    : dataset_(&dataset) {
    const auto ones = WeightVector::ones();
    for (const auto& p : dataset.pairs()) {
        partials_.push_back(compute_partials(store, store.index_of(p.c1), store.index_of(p.c2)));
        untrained_.push_back(predict(partials_.back(), ones));
    }
}

const Partials& PreparedDataset::partials_for(const Judgment& j) const {
    return partials(dataset_->pair_position(j.pair_id));
}

namespace {

double percent_error(double score, double prediction) {
    return std::abs(score / 10.0 - prediction) * 100.0;
}

std::vector<double> trace_of(const std::vector<StepRecord>& steps) {
    std::vector<double> sum;
    std::vector<int> count;
    for (const auto& s : steps) {
        const auto k = static_cast<std::size_t>(s.iteration - 1);
        if (k >= sum.size()) {
            sum.resize(k + 1, 0.0);
            count.resize(k + 1, 0);
        }
        sum[k] += s.error;
        ++count[k];
    }
    for (std::size_t k = 0; k < sum.size(); ++k)
        if (count[k] > 0) sum[k] /= count[k];
    return sum;
}

void require_nonempty(const PreparedDataset& data) {
    if (data.dataset().empty()) throw EmptyDataset();
}

// Trains one weight vector over `order`, appending a StepRecord per judgment.
WeightVector train_sequence(const PreparedDataset& data, const std::vector<std::size_t>& order,
                            const TrainingConfig& config, WeightVector w, std::vector<StepRecord>& steps,
                            const TrainingState* feature_state = nullptr) {
    const auto& judgments = data.dataset().judgments();
    int iteration = 0;
    for (auto idx : order) {
        const auto& j = judgments[idx];
        const int pos = data.dataset().pair_position(j.pair_id);
        const auto& sims = data.partials(pos);
        const double prediction = predict(sims, w);
        steps.push_back({j.pair_id, j.user_id, ++iteration, percent_error(j.score, prediction),
                         percent_error(j.score, data.untrained_score(pos))});
        if (feature_state != nullptr) {
            const auto scale = feature_rate_scale(*feature_state, j.c1, j.c2);
            w = apply_update(w, compute_update(w, sims, j.score / 10.0, config.alpha, &scale).delta);
        } else {
            w = update_weights(w, sims, j.score / 10.0, config.alpha);
        }
    }
    return w;
}

template <typename KeyFn>
std::map<int, std::vector<std::size_t>> group_by(const JudgmentDataset& ds, KeyFn key) {
    std::map<int, std::vector<std::size_t>> groups;
    const auto& js = ds.judgments();
    for (std::size_t i = 0; i < js.size(); ++i) groups[key(js[i])].push_back(i);
    return groups;
}

TrainingResult per_user_run(const PreparedDataset& data, const TrainingConfig& config, std::mt19937_64& rng,
                            Strategy strategy, const TrainingState* feature_state) {
    require_nonempty(data);
    TrainingResult result;
    result.state.strategy = strategy;
    for (auto& [user, order] : group_by(data.dataset(), [](const Judgment& j) { return j.user_id; })) {
        std::shuffle(order.begin(), order.end(), rng);
        result.state.weights[std::to_string(user)] =
            train_sequence(data, order, config, WeightVector::ones(config.bootstrap_delta), result.steps,
                           feature_state);
    }
    result.error_trace = trace_of(result.steps);
    return result;
}

}  // namespace

TrainingResult run_pair_training(const PreparedDataset& data, const TrainingConfig& config, std::mt19937_64& rng) {
    require_nonempty(data);
    TrainingResult result;
    result.state.strategy = Strategy::pair;
    for (auto& [pair, order] : group_by(data.dataset(), [](const Judgment& j) { return j.pair_id; })) {
        std::shuffle(order.begin(), order.end(), rng);
        result.state.weights[std::to_string(pair)] =
            train_sequence(data, order, config, WeightVector::ones(config.bootstrap_delta), result.steps);
    }
    result.error_trace = trace_of(result.steps);
    return result;
}

TrainingResult run_user_training(const PreparedDataset& data, const TrainingConfig& config, std::mt19937_64& rng) {
    return per_user_run(data, config, rng, Strategy::user, nullptr);
}

TrainingResult run_feature_training(const PreparedDataset& data, const TrainingConfig& config,
                                    std::mt19937_64& rng) {
    require_nonempty(data);
    const auto& judgments = data.dataset().judgments();
    std::vector<std::size_t> order(judgments.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    TrainingResult result;
    result.state.strategy = Strategy::feature;
    auto& store = result.state.weights;
    const auto ones = WeightVector::ones(config.bootstrap_delta);
    int iteration = 0;
    for (auto idx : order) {
        const auto& j = judgments[idx];
        auto& v1 = store.try_emplace(j.c1.value, ones).first->second;
        auto& v2 = store.try_emplace(j.c2.value, ones).first->second;
        WeightVector merged;
        for (std::size_t d = 0; d < kDimensions; ++d) {
            merged.w[d] = 0.5 * (v1.w[d] + v2.w[d]);
            merged.prev_delta[d] = 0.5 * (v1.prev_delta[d] + v2.prev_delta[d]);
        }
        const int pos = data.dataset().pair_position(j.pair_id);
        const auto& sims = data.partials(pos);
        result.steps.push_back({j.pair_id, j.user_id, ++iteration, percent_error(j.score, predict(sims, merged)),
                                percent_error(j.score, data.untrained_score(pos))});
        const auto delta = compute_update(merged, sims, j.score / 10.0, config.alpha).delta;
        v1 = apply_update(v1, delta);
        if (j.c1 != j.c2) v2 = apply_update(v2, delta);
    }
    result.error_trace = trace_of(result.steps);
    return result;
}

TrainingResult run_hybrid_training(const PreparedDataset& data, const TrainingConfig& config,
                                   const TrainingState& feature_state, std::mt19937_64& rng) {
    if (feature_state.strategy != Strategy::feature) throw MissingFeatureState();
    return per_user_run(data, config, rng, Strategy::hybrid, &feature_state);
}

std::array<double, kDimensions> feature_rate_scale(const TrainingState& feature_state, const ConceptId& c1,
                                                   const ConceptId& c2) {
    std::array<double, kDimensions> scale{1.0, 1.0, 1.0, 1.0, 1.0};
    auto lookup = [&](const ConceptId& c) {
        auto it = feature_state.weights.find(c.value);
        return it == feature_state.weights.end() ? WeightVector::ones().w : it->second.w;
    };
    const auto a = lookup(c1);
    const auto b = lookup(c2);
    double sum = 0.0;
    std::array<double, kDimensions> mean{};
    for (std::size_t d = 0; d < kDimensions; ++d) {
        mean[d] = 0.5 * (a[d] + b[d]);
        sum += mean[d];
    }
    if (!(sum > 0.0)) return scale;
    for (std::size_t d = 0; d < kDimensions; ++d) scale[d] = mean[d] * static_cast<double>(kDimensions) / sum;
    return scale;
}

TrainingResult train_pair_oriented(const JudgmentDataset& dataset, const OntologyStore& store,
                                   const TrainingConfig& config) {
    if (dataset.empty()) throw EmptyDataset();
    PreparedDataset data(dataset, store);
    auto rng = repetition_rng(config.seed, 0);
    return run_pair_training(data, config, rng);
}

TrainingResult train_user_oriented(const JudgmentDataset& dataset, const OntologyStore& store,
                                   const TrainingConfig& config) {
    if (dataset.empty()) throw EmptyDataset();
    PreparedDataset data(dataset, store);
    auto rng = repetition_rng(config.seed, 0);
    return run_user_training(data, config, rng);
}

TrainingResult train_feature_oriented(const JudgmentDataset& dataset, const OntologyStore& store,
                                      const TrainingConfig& config) {
    if (dataset.empty()) throw EmptyDataset();
    PreparedDataset data(dataset, store);
    auto rng = repetition_rng(config.seed, 0);
    return run_feature_training(data, config, rng);
}

TrainingResult train_hybrid(const JudgmentDataset& dataset, const OntologyStore& store, const TrainingConfig& config,
                            const TrainingState& feature_state) {
    if (dataset.empty()) throw EmptyDataset();
    PreparedDataset data(dataset, store);
    auto rng = repetition_rng(config.seed, 0);
    return run_hybrid_training(data, config, feature_state, rng);
}

std::mt19937_64 repetition_rng(std::uint64_t seed, std::uint64_t rep) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(rep), static_cast<std::uint32_t>(rep >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace ontosim
