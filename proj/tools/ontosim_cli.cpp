// ontosim: validate ontologies, score concept pairs, train aggregation
// weights and run the human-judgment benchmark.
//
// Exit codes: 0 success, 1 invalid input (arguments, files, ontology or
// dataset validation), 2 computation error. Diagnostics go to stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>
#include <json.hpp>

#include "ontosim/errors.hpp"
#include "ontosim/evaluation.hpp"
#include "ontosim/experiment_suite.hpp"
#include "ontosim/ontology.hpp"
#include "ontosim/similarity.hpp"
#include "ontosim/training.hpp"

namespace fs = std::filesystem;
using namespace ontosim;
using ordered_json = nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string ontology_path;
    std::string dataset_path;
    std::string targets_path;
    std::string method = "pair";
    std::string dimension;
    std::string weights_path;
    std::string key;
    std::string output_dir = "out";
    std::string output_file;
    std::string concept1;
    std::string concept2;
    double alpha = 0.1;
    int repetitions = 300;
    int users = 17;
    std::uint64_t seed = 0;
    bool json = false;
};

void require_file(const std::string& path, const char* what) {
    if (path.empty()) throw InputError(std::string("missing --") + what);
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) throw InputError(std::string(what) + " file '" + path + "' not found");
}

TrainingConfig training_config(const CliConfig& c) {
    if (!(c.alpha > 0.0)) throw InputError("--alpha must be positive");
    if (c.repetitions < 1) throw InputError("--repetitions must be at least 1");
    TrainingConfig t;
    t.alpha = c.alpha;
    t.repetitions = c.repetitions;
    t.seed = c.seed;
    return t;
}

std::string fixed(double x) { return format_number(x); }

int cmd_validate(const CliConfig& c) {
    require_file(c.ontology_path, "ontology");
    const auto store = load_ontology_file(c.ontology_path);
    const auto k = store.counts();
    if (c.json) {
        ordered_json j;
        j["concepts"] = k.concepts;
        j["essential"] = k.essential;
        j["sort_edges"] = k.sort_edges;
        j["compositions"] = k.compositions;
        j["restrictive"] = k.restrictive;
        j["descriptive"] = k.descriptive;
        j["domains"] = k.domains;
        j["correspondences"] = k.correspondences;
        j["terms"] = k.terms;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "ontology OK: " << c.ontology_path << '\n'
                  << "  concepts         " << k.concepts << '\n'
                  << "  sort edges       " << k.sort_edges << '\n'
                  << "  essential        " << k.essential << '\n'
                  << "  compositions     " << k.compositions << '\n'
                  << "  restrictive      " << k.restrictive << '\n'
                  << "  descriptive      " << k.descriptive << '\n'
                  << "  domains          " << k.domains << '\n'
                  << "  correspondences  " << k.correspondences << '\n'
                  << "  terms (semiotic) " << k.terms << '\n';
    }
    return 0;
}

// Weights for `sim`: a feature state contributes the mean of the two
// concepts' vectors, `--key` selects one stored vector, and any other state
// is averaged over all of its vectors.
std::pair<WeightVector, std::string> sim_weights(const CliConfig& c) {
    if (c.weights_path.empty()) return {WeightVector::ones(), "all-ones (no --weights given)"};
    std::ifstream in(c.weights_path);
    const auto state = read_state_json(in);
    if (!c.key.empty()) {
        auto it = state.weights.find(c.key);
        if (it == state.weights.end()) throw InputError("key '" + c.key + "' not present in weights file");
        return {it->second, "key " + c.key + " of " + c.weights_path};
    }
    if (state.weights.empty()) throw InputError("weights file holds no vectors");
    WeightVector v;
    v.w.fill(0.0);
    if (state.strategy == Strategy::feature) {
        for (const auto& id : {c.concept1, c.concept2}) {
            auto it = state.weights.find(id);
            const auto w = it == state.weights.end() ? WeightVector::ones().w : it->second.w;
            for (std::size_t d = 0; d < kDimensions; ++d) v.w[d] += 0.5 * w[d];
        }
        return {v, "feature weights of both concepts from " + c.weights_path};
    }
    for (const auto& [key, wv] : state.weights)
        for (std::size_t d = 0; d < kDimensions; ++d) v.w[d] += wv.w[d] / static_cast<double>(state.weights.size());
    return {v, "mean of " + std::to_string(state.weights.size()) + " vectors from " + c.weights_path};
}

int cmd_sim(const CliConfig& c) {
    require_file(c.ontology_path, "ontology");
    if (!c.weights_path.empty()) require_file(c.weights_path, "weights");
    const auto store = load_ontology_file(c.ontology_path);
    const auto [weights, source] = sim_weights(c);
    const auto r = similarity(store, ConceptId(c.concept1), ConceptId(c.concept2), weights);
    if (c.json) {
        ordered_json j;
        j["concept1"] = c.concept1;
        j["concept2"] = c.concept2;
        j["global"] = r.global;
        j["weights_source"] = source;
        j["weights"] = weights.w;
        auto partials = ordered_json::array();
        for (const auto& p : r.partials) {
            ordered_json e;
            e["dimension"] = std::string(to_string(p.dimension));
            e["applicable"] = p.applicable();
            e["value"] = p.value ? ordered_json(*p.value) : ordered_json(nullptr);
            partials.push_back(std::move(e));
        }
        j["partials"] = std::move(partials);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << c.concept1 << " ~ " << c.concept2 << '\n'
                  << "  global       " << fixed(r.global) << '\n'
                  << "  weights      " << source << '\n';
        for (std::size_t d = 0; d < kDimensions; ++d) {
            const auto& p = r.partials[d];
            std::cout << "  " << to_string(p.dimension) << std::string(13 - to_string(p.dimension).size(), ' ')
                      << (p.value ? fixed(*p.value) : std::string("n/a")) << "   (w=" << fixed(weights.w[d]) << ")\n";
        }
    }
    return 0;
}

double mean_step_error(const TrainingResult& r) {
    double sum = 0.0;
    for (const auto& s : r.steps) sum += s.error;
    return r.steps.empty() ? 0.0 : sum / static_cast<double>(r.steps.size());
}

int cmd_train(const CliConfig& c) {
    require_file(c.ontology_path, "ontology");
    require_file(c.dataset_path, "dataset");
    if (!c.weights_path.empty()) require_file(c.weights_path, "weights");
    const auto strategy = parse_strategy(c.method);
    if (!strategy) throw InputError("--method must be pair, user, feature or hybrid");
    const auto config = training_config(c);
    const auto store = load_ontology_file(c.ontology_path);
    const auto dataset = read_judgments_file(c.dataset_path);

    TrainingResult result;
    std::string note;
    switch (*strategy) {
        case Strategy::pair: result = train_pair_oriented(dataset, store, config); break;
        case Strategy::user: result = train_user_oriented(dataset, store, config); break;
        case Strategy::feature: result = train_feature_oriented(dataset, store, config); break;
        case Strategy::hybrid: {
            TrainingState features;
            if (!c.weights_path.empty()) {
                std::ifstream in(c.weights_path);
                features = read_state_json(in);
                if (features.strategy != Strategy::feature) throw MissingFeatureState();
            } else {
                features = train_feature_oriented(dataset, store, config).state;
                note = "no feature state given: ran feature-oriented training first";
            }
            result = train_hybrid(dataset, store, config, features);
            break;
        }
    }

    fs::create_directories(c.output_dir);
    const auto state_path = fs::path(c.output_dir) / ("state_" + c.method + ".json");
    const auto trace_path = fs::path(c.output_dir) / ("train_trace_" + c.method + ".csv");
    {
        std::ofstream out(state_path, std::ios::binary);
        write_state_json(out, result.state);
    }
    {
        std::ofstream out(trace_path, std::ios::binary);
        out << "iteration,error\n";
        for (std::size_t k = 0; k < result.error_trace.size(); ++k)
            out << k + 1 << ',' << fixed(result.error_trace[k]) << '\n';
    }
    const double avg = mean_step_error(result);
    if (c.json) {
        ordered_json j;
        j["method"] = c.method;
        j["seed"] = c.seed;
        j["vectors"] = result.state.weights.size();
        j["average_error"] = avg;
        j["state"] = state_path.string();
        j["trace"] = trace_path.string();
        j["note"] = note;
        std::cout << j.dump(2) << '\n';
    } else {
        if (!note.empty()) std::cout << "note: " << note << '\n';
        std::cout << c.method << "-oriented training: " << result.state.weights.size() << " weight vectors\n"
                  << "  average error  " << fixed(avg) << " %\n"
                  << "  state          " << state_path.string() << '\n'
                  << "  trace          " << trace_path.string() << '\n';
    }
    return 0;
}

int cmd_experiment(const CliConfig& c) {
    require_file(c.ontology_path, "ontology");
    require_file(c.dataset_path, "dataset");
    const auto config = training_config(c);
    const auto store = load_ontology_file(c.ontology_path);
    const auto dataset = read_judgments_file(c.dataset_path);
    fs::create_directories(c.output_dir);

    if (!c.dimension.empty()) {
        const auto d = parse_dimension(c.dimension);
        if (!d) throw InputError("--dimension must be sort, comp, essential, restrictive or descriptive");
        const auto report = single_dimension_report(dataset, store, *d);
        const auto path = fs::path(c.output_dir) / ("errors_single_" + std::string(to_string(*d)) + ".csv");
        std::ofstream out(path, std::ios::binary);
        write_error_table_csv(out, report);
        std::size_t first = 0;
        for (const auto& f : report.first_ranked) first += (f && *f == *d) ? 1 : 0;
        if (c.json) {
            ordered_json j;
            j["dimension"] = std::string(to_string(*d));
            j["average_error"] = report.avg_error;
            j["ranked_first"] = first;
            j["table"] = path.string();
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "single dimension " << to_string(*d) << ": average error " << fixed(report.avg_error)
                      << " %, ranked first on " << first << " pair(s)\n  table  " << path.string() << '\n';
        }
        return 0;
    }

    const auto suite = run_experiment_suite(dataset, store, config);
    const auto files = write_experiment_suite(suite, c.output_dir);
    const auto rows = suite.summary();
    if (c.json) {
        ordered_json j;
        j["seed"] = c.seed;
        j["repetitions"] = c.repetitions;
        auto summary = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json e;
            e["method"] = r.method;
            e["avg_error"] = r.avg_error;
            e["reference_avg"] = r.reference ? ordered_json(*r.reference) : ordered_json(nullptr);
            summary.push_back(std::move(e));
        }
        j["summary"] = std::move(summary);
        j["significance"] = {{"statistic", suite.significance.statistic},
                             {"critical", -suite.significance.critical},
                             {"reject", suite.significance.reject}};
        j["files"] = files;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "method                   avg error   reference   divergence\n";
        for (const auto& r : rows) {
            std::string name = r.method;
            name.resize(24, ' ');
            std::cout << name << ' ' << fixed(r.avg_error);
            if (r.reference) std::cout << "   " << fixed(*r.reference) << "   " << fixed(r.avg_error - *r.reference);
            std::cout << '\n';
        }
        std::cout << "feature vs sort_only: statistic " << fixed(suite.significance.statistic) << ", critical "
                  << fixed(-suite.significance.critical) << ", "
                  << (suite.significance.reject ? "null hypothesis rejected" : "null hypothesis kept") << '\n'
                  << "wrote " << files.size() << " files to " << c.output_dir << '\n';
    }
    return 0;
}

int cmd_synthesize(const CliConfig& c) {
    require_file(c.targets_path, "targets");
    if (c.output_file.empty()) throw InputError("missing --out");
    const auto targets = read_pair_targets_file(c.targets_path);
    const auto dataset = synthesize_judgments(targets, c.users, c.seed);
    std::ofstream out(c.output_file, std::ios::binary);
    if (!out) throw InputError("cannot write '" + c.output_file + "'");
    write_judgments_csv(out, dataset);
    std::cout << "wrote " << dataset.judgments().size() << " synthetic judgments to " << c.output_file << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-dimensional ontology similarity with trainable dimension weights"};
    app.require_subcommand(1);
    CliConfig c;

    auto* validate = app.add_subcommand("validate", "Load an ontology and print per-dimension counts");
    validate->add_option("--ontology", c.ontology_path, "Ontology JSON file")->required();
    validate->add_flag("--json", c.json, "Machine-readable output");

    auto* sim = app.add_subcommand("sim", "Similarity of two concepts with its five partials");
    sim->add_option("--ontology", c.ontology_path, "Ontology JSON file")->required();
    sim->add_option("concept1", c.concept1, "First concept id")->required();
    sim->add_option("concept2", c.concept2, "Second concept id")->required();
    sim->add_option("--weights", c.weights_path, "Training state JSON (default: all-ones weights)");
    sim->add_option("--key", c.key, "Use one stored vector of the weights file");
    sim->add_flag("--json", c.json, "Machine-readable output");

    auto* train = app.add_subcommand("train", "Train weight vectors on a judgment dataset");
    train->add_option("--ontology", c.ontology_path, "Ontology JSON file")->required();
    train->add_option("--dataset", c.dataset_path, "Judgment CSV")->required();
    train->add_option("--method", c.method, "pair|user|feature|hybrid")->capture_default_str();
    train->add_option("--alpha", c.alpha, "Learning rate")->capture_default_str();
    train->add_option("--seed", c.seed, "Shuffle seed")->capture_default_str();
    train->add_option("--out", c.output_dir, "Output directory")->capture_default_str();
    train->add_option("--weights", c.weights_path, "Feature state for hybrid training");
    train->add_flag("--json", c.json, "Machine-readable output");

    auto* experiment = app.add_subcommand("experiment", "Run every method and write the report tables");
    experiment->add_option("--ontology", c.ontology_path, "Ontology JSON file")->required();
    experiment->add_option("--dataset", c.dataset_path, "Judgment CSV")->required();
    experiment->add_option("--alpha", c.alpha, "Learning rate")->capture_default_str();
    experiment->add_option("--repetitions", c.repetitions, "Shuffled repetitions per method")->capture_default_str();
    experiment->add_option("--seed", c.seed, "Shuffle seed")->capture_default_str();
    experiment->add_option("--out", c.output_dir, "Output directory")->capture_default_str();
    experiment->add_option("--dimension", c.dimension, "Single-dimension mode: sort|comp|essential|restrictive|descriptive");
    experiment->add_flag("--json", c.json, "Machine-readable output");

    auto* synth = app.add_subcommand("synthesize", "Generate per-user judgments matching per-pair statistics");
    synth->add_option("--targets", c.targets_path, "CSV pair_id,concept1,concept2,range,sd,mean")->required();
    synth->add_option("--users", c.users, "Judges per pair")->capture_default_str();
    synth->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
    synth->add_option("--out", c.output_file, "Output judgment CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*validate) return cmd_validate(c);
        if (*sim) return cmd_sim(c);
        if (*train) return cmd_train(c);
        if (*experiment) return cmd_experiment(c);
        if (*synth) return cmd_synthesize(c);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const UnknownConcept& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
