#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "ontosim/ontology.hpp"

namespace ontosim {

enum class Dimension { sort, compositional, essential, restrictive, descriptive };

inline constexpr std::size_t kDimensions = 5;
inline constexpr std::array<Dimension, kDimensions> kAllDimensions = {
    Dimension::sort, Dimension::compositional, Dimension::essential, Dimension::restrictive,
    Dimension::descriptive};

std::string_view to_string(Dimension d);
/// Accepts the CLI spellings: sort, comp, essential, restrictive, descriptive.
std::optional<Dimension> parse_dimension(std::string_view text);

/// Score of one dimension; an empty value means the dimension holds no
/// knowledge about the pair (not applicable).
struct PartialSimilarity {
    Dimension dimension = Dimension::sort;
    std::optional<double> value;

    bool applicable() const noexcept { return value.has_value(); }
};

/// The five partial scores in dimension order.
using Partials = std::array<std::optional<double>, kDimensions>;

/// Aggregation weights plus the increments applied at the previous update.
struct WeightVector {
    std::array<double, kDimensions> w{1.0, 1.0, 1.0, 1.0, 1.0};
    std::array<double, kDimensions> prev_delta{1.0, 1.0, 1.0, 1.0, 1.0};

    static WeightVector ones(double bootstrap_delta = 1.0) {
        WeightVector v;
        v.prev_delta.fill(bootstrap_delta);
        return v;
    }

    bool operator==(const WeightVector&) const = default;
};

// Index-level kernels. Each returns nullopt when not applicable and throws
// KindMismatch / RoleMismatch / NoCorrespondence when the pair is outside the
// formula's domain.
std::optional<double> sim_sort(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2);
std::optional<double> sim_comp(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2);
std::optional<double> sim_essential(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2);
std::optional<double> sim_restrictive(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2);
std::optional<double> sim_descriptive(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2);

PartialSimilarity sim_sort(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2);
PartialSimilarity sim_comp(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2);
PartialSimilarity sim_essential(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2);
PartialSimilarity sim_restrictive(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2);
PartialSimilarity sim_descriptive(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2);

/// All five partials for a pair. A dimension whose formula does not cover
/// the pair (cross-kind restrictive, mixed descriptive roles, values with no
/// correspondence) is reported as not applicable instead of failing.
Partials compute_partials(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2);

/// Weighted mean over applicable dimensions. Throws NothingApplicable when
/// no applicable dimension carries a positive weight.
double aggregate(const Partials& partials, const WeightVector& weights);

struct SimilarityResult {
    double global = 0.0;
    std::array<PartialSimilarity, kDimensions> partials;
};

SimilarityResult similarity(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2,
                            const WeightVector& weights = WeightVector::ones());

}  // namespace ontosim
