#include "ontosim/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/math/distributions/normal.hpp>

#include "ontosim/errors.hpp"
#include "ontosim/parallel.hpp"

namespace ontosim {

ExperimentMethod ExperimentMethod::trained(Strategy s) {
    switch (s) {
        case Strategy::pair: return {MethodKind::pair};
        case Strategy::user: return {MethodKind::user};
        case Strategy::feature: return {MethodKind::feature};
        case Strategy::hybrid: return {MethodKind::hybrid};
    }
    return {MethodKind::pair};
}

std::string to_string(const ExperimentMethod& m) {
    switch (m.kind) {
        case MethodKind::pair: return "pair";
        case MethodKind::user: return "user";
        case MethodKind::feature: return "feature";
        case MethodKind::hybrid: return "hybrid";
        case MethodKind::sort_only: return "sort_only";
        case MethodKind::untrained: return "untrained";
        case MethodKind::single_dimension: return "single_dimension(" + std::string(to_string(m.dimension)) + ")";
    }
    return "pair";
}

double absolute_error(double score, double similarity) {
    if (!(score >= 0.0 && score <= 10.0)) throw RangeError("human score must lie in [0,10]");
    if (!(similarity >= 0.0 && similarity <= 1.0)) throw RangeError("similarity must lie in [0,1]");
    return std::abs(score / 10.0 - similarity) * 100.0;
}

namespace {

double mean_of(std::span<const double> xs, const char* what) {
    if (xs.empty()) throw EmptyInput(std::string("no errors to average for ") + what);
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

std::vector<double> running_mean(const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sum += xs[k];
        out[k] = sum / static_cast<double>(k + 1);
    }
    return out;
}

// Sum of a column taken in ascending order: independent of row order.
double sorted_mean(std::vector<double> column) {
    std::sort(column.begin(), column.end());
    double sum = 0.0;
    for (double x : column) sum += x;
    return column.empty() ? 0.0 : sum / static_cast<double>(column.size());
}

template <typename Select>
std::vector<double> reduce_column(std::span<const RepetitionOutcome> outcomes, Select select) {
    std::size_t width = 0;
    for (const auto& o : outcomes) width = std::max(width, select(o).size());
    std::vector<double> out(width);
    for (std::size_t k = 0; k < width; ++k) {
        std::vector<double> column;
        column.reserve(outcomes.size());
        for (const auto& o : outcomes) {
            const auto& v = select(o);
            if (k < v.size()) column.push_back(v[k]);
        }
        out[k] = sorted_mean(std::move(column));
    }
    return out;
}

std::vector<double> untrained_pair_errors(const PreparedDataset& data) {
    const auto& ds = data.dataset();
    std::vector<std::vector<double>> errors(ds.pairs().size());
    for (const auto& j : ds.judgments()) {
        const int pos = ds.pair_position(j.pair_id);
        errors[static_cast<std::size_t>(pos)].push_back(absolute_error(j.score, data.untrained_score(pos)));
    }
    std::vector<double> out;
    for (const auto& e : errors) out.push_back(mean_error_per_pair(e));
    return out;
}

}  // namespace

double mean_error_per_pair(std::span<const double> errors) { return mean_of(errors, "pair"); }
double mean_error_per_user(std::span<const double> errors) { return mean_of(errors, "user"); }

RepetitionOutcome run_repetition(const PreparedDataset& data, Strategy strategy, const TrainingConfig& config,
                                 const TrainingState* feature_state, std::uint64_t rep) {
    auto rng = repetition_rng(config.seed, rep);
    TrainingResult run;
    switch (strategy) {
        case Strategy::pair: run = run_pair_training(data, config, rng); break;
        case Strategy::user: run = run_user_training(data, config, rng); break;
        case Strategy::feature: run = run_feature_training(data, config, rng); break;
        case Strategy::hybrid:
            if (feature_state != nullptr) {
                run = run_hybrid_training(data, config, *feature_state, rng);
            } else {
                const auto features = run_feature_training(data, config, rng);
                run = run_hybrid_training(data, config, features.state, rng);
            }
            break;
    }

    const auto& ds = data.dataset();
    const auto users = ds.users();
    std::vector<std::vector<double>> by_pair(ds.pairs().size());
    std::vector<std::vector<double>> by_user(users.size());
    std::vector<std::vector<double>> untrained_by_iteration;
    for (const auto& s : run.steps) {
        by_pair[static_cast<std::size_t>(ds.pair_position(s.pair_id))].push_back(s.error);
        const auto u = std::lower_bound(users.begin(), users.end(), s.user_id) - users.begin();
        by_user[static_cast<std::size_t>(u)].push_back(s.error);
        const auto k = static_cast<std::size_t>(s.iteration - 1);
        if (k >= untrained_by_iteration.size()) untrained_by_iteration.resize(k + 1);
        untrained_by_iteration[k].push_back(s.untrained);
    }
    RepetitionOutcome out;
    for (const auto& e : by_pair) out.per_pair.push_back(e.empty() ? 0.0 : mean_error_per_pair(e));
    for (const auto& e : by_user) out.per_user.push_back(e.empty() ? 0.0 : mean_error_per_user(e));
    out.iteration_error = std::move(run.error_trace);
    for (const auto& e : untrained_by_iteration) out.untrained_iteration_error.push_back(mean_of(e, "iteration"));
    return out;
}

void reduce_repetitions(std::span<const RepetitionOutcome> outcomes, ExperimentReport& report) {
    report.per_pair_error = reduce_column(outcomes, [](const RepetitionOutcome& o) -> const auto& { return o.per_pair; });
    report.per_user_error = reduce_column(outcomes, [](const RepetitionOutcome& o) -> const auto& { return o.per_user; });
    report.iteration_error =
        reduce_column(outcomes, [](const RepetitionOutcome& o) -> const auto& { return o.iteration_error; });
    report.untrained_iteration_error =
        reduce_column(outcomes, [](const RepetitionOutcome& o) -> const auto& { return o.untrained_iteration_error; });
    report.accumulated_trace = running_mean(report.iteration_error);
    report.untrained_accumulated_trace = running_mean(report.untrained_iteration_error);
    report.avg_error = report.per_pair_error.empty() ? 0.0 : mean_of(report.per_pair_error, "report");
}

namespace {

ExperimentReport static_report(const ExperimentMethod& method, const PreparedDataset& data,
                               const std::vector<double>& predictions) {
    const auto& ds = data.dataset();
    ExperimentReport report;
    report.method = method;
    std::vector<std::vector<double>> errors(ds.pairs().size());
    for (const auto& j : ds.judgments()) {
        const auto pos = static_cast<std::size_t>(ds.pair_position(j.pair_id));
        errors[pos].push_back(absolute_error(j.score, predictions[pos]));
    }
    for (const auto& p : ds.pairs()) report.pair_ids.push_back(p.pair_id);
    for (const auto& e : errors) report.per_pair_error.push_back(mean_error_per_pair(e));
    report.avg_error = mean_of(report.per_pair_error, "report");
    report.untrained_per_pair_error = untrained_pair_errors(data);
    return report;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentMethod& method, const JudgmentDataset& dataset,
                                const OntologyStore& store, const TrainingConfig& config,
                                const TrainingState* feature_state, Execution execution) {
    if (dataset.empty()) throw EmptyDataset();
    if (method.kind == MethodKind::single_dimension) return single_dimension_report(dataset, store, method.dimension);

    PreparedDataset data(dataset, store);
    if (method.kind == MethodKind::untrained || method.kind == MethodKind::sort_only) {
        std::vector<double> predictions;
        for (std::size_t p = 0; p < dataset.pairs().size(); ++p) {
            const auto pos = static_cast<int>(p);
            predictions.push_back(method.kind == MethodKind::untrained ? data.untrained_score(pos)
                                                                      : *data.partials(pos)[0]);
        }
        auto report = static_report(method, data, predictions);
        report.seed = config.seed;
        return report;
    }

    Strategy strategy = Strategy::pair;
    switch (method.kind) {
        case MethodKind::user: strategy = Strategy::user; break;
        case MethodKind::feature: strategy = Strategy::feature; break;
        case MethodKind::hybrid: strategy = Strategy::hybrid; break;
        default: break;
    }
    const auto outcomes = execution == Execution::parallel
                              ? run_repetitions_parallel(data, strategy, config, feature_state)
                              : run_repetitions_serial(data, strategy, config, feature_state);
    ExperimentReport report;
    report.method = method;
    for (const auto& p : dataset.pairs()) report.pair_ids.push_back(p.pair_id);
    report.user_ids = dataset.users();
    reduce_repetitions(outcomes, report);
    report.untrained_per_pair_error = untrained_pair_errors(data);
    report.repetitions = config.repetitions;
    report.seed = config.seed;
    return report;
}

ExperimentReport single_dimension_report(const JudgmentDataset& dataset, const OntologyStore& store,
                                         Dimension dimension) {
    if (dataset.empty()) throw EmptyDataset();
    PreparedDataset data(dataset, store);
    const auto npairs = dataset.pairs().size();

    std::array<std::vector<double>, kDimensions> per_dim;
    for (std::size_t d = 0; d < kDimensions; ++d) {
        std::vector<double> predictions;
        for (std::size_t p = 0; p < npairs; ++p) predictions.push_back(data.partials(static_cast<int>(p))[d].value_or(0.0));
        per_dim[d] = static_report(ExperimentMethod::single(kAllDimensions[d]), data, predictions).per_pair_error;
    }
    std::vector<double> predictions;
    const auto di = static_cast<std::size_t>(dimension);
    for (std::size_t p = 0; p < npairs; ++p) predictions.push_back(data.partials(static_cast<int>(p))[di].value_or(0.0));
    auto report = static_report(ExperimentMethod::single(dimension), data, predictions);

    for (std::size_t p = 0; p < npairs; ++p) {
        std::optional<Dimension> best;
        double best_error = 0.0;
        for (std::size_t d = 0; d < kDimensions; ++d) {
            if (!data.partials(static_cast<int>(p))[d]) continue;
            if (!best || per_dim[d][p] < best_error) {
                best = kAllDimensions[d];
                best_error = per_dim[d][p];
            }
        }
        report.first_ranked.push_back(best);
    }
    return report;
}

double normal_critical_value(double level) {
    if (!(level > 0.0 && level < 1.0)) throw RangeError("significance level must lie in (0,1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - level);
}

SignificanceResult significance_test(std::span<const double> errors_a, std::span<const double> errors_b,
                                     double level) {
    if (errors_a.size() != errors_b.size())
        throw LengthMismatch("significance test needs equal-length samples");
    if (errors_a.size() < 2) throw LengthMismatch("significance test needs at least two paired samples");
    const auto n = static_cast<double>(errors_a.size());
    double mean = 0.0;
    for (std::size_t i = 0; i < errors_a.size(); ++i) mean += errors_a[i] - errors_b[i];
    mean /= n;
    double ss = 0.0;
    for (std::size_t i = 0; i < errors_a.size(); ++i) {
        const double d = errors_a[i] - errors_b[i] - mean;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / (n - 1.0));

    SignificanceResult r;
    r.critical = normal_critical_value(level);
    if (sd > 0.0) {
        r.statistic = mean / (sd / std::sqrt(n));
    } else if (mean != 0.0) {
        r.statistic = mean < 0.0 ? -HUGE_VAL : HUGE_VAL;
    }
    r.reject = r.statistic < -r.critical;
    return r;
}

std::vector<int> pairs_with_repeated_concepts(const JudgmentDataset& dataset) {
    std::map<ConceptId, int> occurrences;
    for (const auto& p : dataset.pairs()) {
        ++occurrences[p.c1];
        if (p.c2 != p.c1) ++occurrences[p.c2];
    }
    std::vector<int> out;
    for (const auto& p : dataset.pairs())
        if (occurrences[p.c1] > 1 || occurrences[p.c2] > 1) out.push_back(p.pair_id);
    return out;
}

double restricted_average(const ExperimentReport& report, const std::vector<int>& pair_ids) {
    std::vector<double> selected;
    for (std::size_t i = 0; i < report.pair_ids.size(); ++i)
        if (std::find(pair_ids.begin(), pair_ids.end(), report.pair_ids[i]) != pair_ids.end())
            selected.push_back(report.per_pair_error[i]);
    return mean_of(selected, "restricted pairs");
}

std::vector<PairTarget> read_pair_targets_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("pair target CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "pair_id,concept1,concept2,range,sd,mean")
        throw ParseError("pair target CSV header must be 'pair_id,concept1,concept2,range,sd,mean'");
    std::vector<PairTarget> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 6) throw ParseError("line " + std::to_string(line_no) + ": expected 6 columns");
        try {
            out.push_back({std::stoi(cells[0]), ConceptId(cells[1]), ConceptId(cells[2]), std::stod(cells[3]),
                           std::stod(cells[4]), std::stod(cells[5])});
        } catch (const std::logic_error&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad number");
        }
    }
    return out;
}

std::vector<PairTarget> read_pair_targets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open pair target file '" + path + "'");
    return read_pair_targets_csv(in);
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

void write_error_table_csv(std::ostream& out, const ExperimentReport& report) {
    for (int id : report.pair_ids) out << id << ',';
    out << "AVG\n";
    for (double e : report.per_pair_error) out << format_number(e) << ',';
    out << format_number(report.avg_error) << '\n';
}

void write_user_table_csv(std::ostream& out, const ExperimentReport& report) {
    out << "user_id,error\n";
    for (std::size_t i = 0; i < report.user_ids.size() && i < report.per_user_error.size(); ++i)
        out << report.user_ids[i] << ',' << format_number(report.per_user_error[i]) << '\n';
}

void write_trace_csv(std::ostream& out, const ExperimentReport& report) {
    out << "iteration,error,accumulated,untrained_error,untrained_accumulated\n";
    for (std::size_t k = 0; k < report.iteration_error.size(); ++k) {
        out << k + 1 << ',' << format_number(report.iteration_error[k]) << ','
            << format_number(report.accumulated_trace[k]) << ',';
        if (k < report.untrained_iteration_error.size()) {
            out << format_number(report.untrained_iteration_error[k]) << ','
                << format_number(report.untrained_accumulated_trace[k]);
        } else {
            out << ',';
        }
        out << '\n';
    }
}

}  // namespace ontosim
