#pragma once

#include <vector>

#include "ontosim/evaluation.hpp"

namespace ontosim {

// Data-parallel kernels. Each OpenMP version has a serial twin that is the
// reference in tests; both fill result slots by index so their outputs are
// bit-identical for any thread count.

std::vector<RepetitionOutcome> run_repetitions_serial(const PreparedDataset& data, Strategy strategy,
                                                      const TrainingConfig& config,
                                                      const TrainingState* feature_state);
std::vector<RepetitionOutcome> run_repetitions_parallel(const PreparedDataset& data, Strategy strategy,
                                                        const TrainingConfig& config,
                                                        const TrainingState* feature_state);

/// Partials of every pair in `pairs`.
std::vector<Partials> pair_partials_serial(const OntologyStore& store, const std::vector<ConceptPair>& pairs);
std::vector<Partials> pair_partials_parallel(const OntologyStore& store, const std::vector<ConceptPair>& pairs);

/// Row-major n x n matrix of global scores for `concepts` under `weights`;
/// entries where nothing is applicable are NaN.
std::vector<double> similarity_matrix_serial(const OntologyStore& store, const std::vector<ConceptIndex>& concepts,
                                             const WeightVector& weights);
std::vector<double> similarity_matrix_parallel(const OntologyStore& store,
                                               const std::vector<ConceptIndex>& concepts,
                                               const WeightVector& weights);

/// Threads OpenMP will use (1 when built without OpenMP).
int parallel_threads();

}  // namespace ontosim
