#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ontosim/errors.hpp"
#include "ontosim/evaluation.hpp"

namespace ontosim {

namespace {

constexpr double kTolerance = 0.15;

struct Fit {
    std::vector<int> scores;
    double loss = std::numeric_limits<double>::infinity();
    double mean_error = 0.0;
    double sd_error = 0.0;
};

Fit evaluate(std::vector<int> scores, const PairTarget& t) {
    std::vector<double> xs(scores.begin(), scores.end());
    const auto s = describe(xs);
    Fit f;
    f.scores = std::move(scores);
    f.mean_error = s.mean - t.mean;
    f.sd_error = s.sd - t.sd;
    f.loss = f.mean_error * f.mean_error + f.sd_error * f.sd_error;
    return f;
}

// Greedy repair over the free scores (positions 2..n-1; positions 0 and 1
// pin the minimum and maximum). Moves are single +-1 steps and paired
// transfers, accepted only on strict loss decrease, so the loop ends.
Fit repair(Fit fit, const PairTarget& t, int lo, int hi) {
    const std::size_t n = fit.scores.size();
    for (;;) {
        Fit best = fit;
        for (std::size_t i = 2; i < n; ++i) {
            for (int step : {-1, 1}) {
                const int v = fit.scores[i] + step;
                if (v < lo || v > hi) continue;
                auto cand = fit.scores;
                cand[i] = v;
                auto f = evaluate(std::move(cand), t);
                if (f.loss < best.loss) best = std::move(f);
            }
            for (std::size_t j = 2; j < n; ++j) {
                if (i == j) continue;
                const int vi = fit.scores[i] + 1;
                const int vj = fit.scores[j] - 1;
                if (vi > hi || vj < lo) continue;
                auto cand = fit.scores;
                cand[i] = vi;
                cand[j] = vj;
                auto f = evaluate(std::move(cand), t);
                if (f.loss < best.loss) best = std::move(f);
            }
        }
        if (!(best.loss < fit.loss)) return fit;
        fit = std::move(best);
    }
}

std::vector<int> synthesize_pair(const PairTarget& t, int n, std::mt19937_64& rng) {
    const std::string label = "pair " + std::to_string(t.pair_id);
    const double rounded_range = std::round(t.range);
    if (std::abs(rounded_range - t.range) > 1e-9 || t.range < 0.0 || t.range > 10.0)
        throw InfeasibleStats(label + ": range must be an integer in [0,10]");
    if (t.mean < 0.0 || t.mean > 10.0 || t.sd < 0.0) throw InfeasibleStats(label + ": mean/sd out of bounds");
    const int range = static_cast<int>(rounded_range);

    if (range == 0) {
        if (t.sd != 0.0) throw InfeasibleStats(label + ": nonzero sd with zero range");
        const int v = static_cast<int>(std::lround(t.mean));
        if (std::abs(v - t.mean) > kTolerance) throw InfeasibleStats(label + ": mean not reachable with equal scores");
        return std::vector<int>(static_cast<std::size_t>(n), v);
    }
    if (t.sd == 0.0) throw InfeasibleStats(label + ": zero sd requires zero range");

    std::normal_distribution<double> noise(t.mean, t.sd);
    Fit best;
    const int first_lo = std::max(0, static_cast<int>(std::ceil(t.mean - range)));
    const int last_lo = std::min(10 - range, static_cast<int>(std::floor(t.mean)));
    for (int lo = first_lo; lo <= last_lo; ++lo) {
        const int hi = lo + range;
        std::vector<int> scores{lo, hi};
        for (int k = 2; k < n; ++k) {
            const double x = std::round(noise(rng));
            scores.push_back(static_cast<int>(std::clamp(x, static_cast<double>(lo), static_cast<double>(hi))));
        }
        auto fit = repair(evaluate(std::move(scores), t), t, lo, hi);
        if (fit.loss < best.loss) best = std::move(fit);
    }
    if (best.scores.empty() || std::abs(best.mean_error) > kTolerance || std::abs(best.sd_error) > kTolerance)
        throw InfeasibleStats(label + ": no integer sample of size " + std::to_string(n) +
                              " matches mean, sd and range");
    std::shuffle(best.scores.begin(), best.scores.end(), rng);
    return best.scores;
}

}  // namespace

JudgmentDataset synthesize_judgments(const std::vector<PairTarget>& targets, int n_users, std::uint64_t seed) {
    if (n_users < 2) throw InfeasibleStats("at least two users are needed");
    std::mt19937_64 rng = repetition_rng(seed, 0);
    std::vector<Judgment> judgments;
    for (const auto& t : targets) {
        const auto scores = synthesize_pair(t, n_users, rng);
        for (int u = 0; u < n_users; ++u)
            judgments.push_back({t.pair_id, t.c1, t.c2, u, static_cast<double>(scores[static_cast<std::size_t>(u)])});
    }
    // User-major order, the way a questionnaire is collected.
    std::stable_sort(judgments.begin(), judgments.end(),
                     [](const Judgment& a, const Judgment& b) { return a.user_id < b.user_id; });
    return JudgmentDataset::from_judgments(std::move(judgments));
}

JudgmentDataset synthesize_from_weights(const OntologyStore& store, const std::vector<ConceptPair>& pairs,
                                        const WeightVector& hidden, int n_users, double noise_sd,
                                        std::uint64_t seed) {
    std::mt19937_64 rng = repetition_rng(seed, 0);
    std::normal_distribution<double> noise(0.0, noise_sd);
    std::vector<Judgment> judgments;
    for (int u = 0; u < n_users; ++u) {
        for (const auto& p : pairs) {
            const double s = aggregate(compute_partials(store, store.index_of(p.c1), store.index_of(p.c2)), hidden);
            const double y = std::clamp(10.0 * s + (noise_sd > 0.0 ? noise(rng) : 0.0), 0.0, 10.0);
            judgments.push_back({p.pair_id, p.c1, p.c2, u, y});
        }
    }
    return JudgmentDataset::from_judgments(std::move(judgments));
}

}  // namespace ontosim
