#include "ontosim/parallel.hpp"

#include <cmath>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ontosim/errors.hpp"

namespace ontosim {

namespace {

// Exceptions must not escape an OpenMP region; the first one is rethrown
// after the loop.
class FirstError {
public:
    template <typename F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(ontosim_first_error)
#endif
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
};

double matrix_entry(const OntologyStore& store, ConceptIndex a, ConceptIndex b, const WeightVector& weights) {
    try {
        return aggregate(compute_partials(store, a, b), weights);
    } catch (const NothingApplicable&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<RepetitionOutcome> run_repetitions_serial(const PreparedDataset& data, Strategy strategy,
                                                      const TrainingConfig& config,
                                                      const TrainingState* feature_state) {
    std::vector<RepetitionOutcome> out(static_cast<std::size_t>(std::max(config.repetitions, 0)));
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = run_repetition(data, strategy, config, feature_state, r);
    return out;
}

std::vector<RepetitionOutcome> run_repetitions_parallel(const PreparedDataset& data, Strategy strategy,
                                                        const TrainingConfig& config,
                                                        const TrainingState* feature_state) {
    const long n = std::max(config.repetitions, 0);
    std::vector<RepetitionOutcome> out(static_cast<std::size_t>(n));
    FirstError guard;
#pragma omp parallel for schedule(dynamic)
    for (long r = 0; r < n; ++r) {
        guard.run([&] {
            out[static_cast<std::size_t>(r)] =
                run_repetition(data, strategy, config, feature_state, static_cast<std::uint64_t>(r));
        });
    }
    guard.rethrow();
    return out;
}

std::vector<Partials> pair_partials_serial(const OntologyStore& store, const std::vector<ConceptPair>& pairs) {
    std::vector<Partials> out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out[i] = compute_partials(store, store.index_of(pairs[i].c1), store.index_of(pairs[i].c2));
    return out;
}

std::vector<Partials> pair_partials_parallel(const OntologyStore& store, const std::vector<ConceptPair>& pairs) {
    std::vector<Partials> out(pairs.size());
    const long n = static_cast<long>(pairs.size());
    FirstError guard;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        guard.run([&] {
            const auto& p = pairs[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = compute_partials(store, store.index_of(p.c1), store.index_of(p.c2));
        });
    }
    guard.rethrow();
    return out;
}

std::vector<double> similarity_matrix_serial(const OntologyStore& store, const std::vector<ConceptIndex>& concepts,
                                             const WeightVector& weights) {
    const std::size_t n = concepts.size();
    std::vector<double> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = matrix_entry(store, concepts[i], concepts[j], weights);
    return out;
}

std::vector<double> similarity_matrix_parallel(const OntologyStore& store,
                                               const std::vector<ConceptIndex>& concepts,
                                               const WeightVector& weights) {
    const long n = static_cast<long>(concepts.size());
    std::vector<double> out(static_cast<std::size_t>(n * n));
    FirstError guard;
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
        guard.run([&] {
            for (long j = 0; j < n; ++j)
                out[static_cast<std::size_t>(i * n + j)] =
                    matrix_entry(store, concepts[static_cast<std::size_t>(i)], concepts[static_cast<std::size_t>(j)],
                                 weights);
        });
    }
    guard.rethrow();
    return out;
}

}  // namespace ontosim
