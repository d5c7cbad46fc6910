#include "ontosim/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "ontosim/errors.hpp"

namespace ontosim {

namespace {

std::size_t common(std::span<const ConceptIndex> a, std::span<const ConceptIndex> b) {
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

// 2|A∩B| / (|A|+|B|), nullopt when both sets are empty.
std::optional<double> dice(std::span<const ConceptIndex> a, std::span<const ConceptIndex> b) {
    const auto denom = a.size() + b.size();
    if (denom == 0) return std::nullopt;
    return 2.0 * static_cast<double>(common(a, b)) / static_cast<double>(denom);
}

// Mean of the terms whose denominator was nonzero.
struct TermMean {
    double sum = 0.0;
    int count = 0;

    void add(double numerator, std::size_t denominator) {
        if (denominator == 0) return;
        sum += numerator / static_cast<double>(denominator);
        ++count;
    }
    void add(std::optional<double> term) {
        if (!term) return;
        sum += *term;
        ++count;
    }
    std::optional<double> mean() const {
        if (count == 0) return std::nullopt;
        return sum / count;
    }
};

enum class DescriptiveRole { generic, attribute, domain, value };

DescriptiveRole role_of(ConceptKind k) {
    switch (k) {
        case ConceptKind::attribute: return DescriptiveRole::attribute;
        case ConceptKind::domain: return DescriptiveRole::domain;
        case ConceptKind::value: return DescriptiveRole::value;
        default: return DescriptiveRole::generic;
    }
}

bool same_value(const AttributeSlot& a, const AttributeSlot& b) {
    if (const auto* x = std::get_if<ConceptIndex>(&a.value)) {
        const auto* y = std::get_if<ConceptIndex>(&b.value);
        return y != nullptr && *x == *y;
    }
    if (const auto* x = std::get_if<double>(&a.value)) {
        const auto* y = std::get_if<double>(&b.value);
        return y != nullptr && a.domain == b.domain && *x == *y;
    }
    return false;
}

std::optional<double> descriptive_generic(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2) {
    auto s1 = store.attributes_of(c1);
    auto s2 = store.attributes_of(c2);
    const auto total = s1.size() + s2.size();
    if (total == 0) return std::nullopt;

    std::size_t no_value = 0, equal = 0, equal_one_default = 0;
    auto i = s1.begin();
    auto j = s2.begin();
    while (i != s1.end() && j != s2.end()) {
        if (i->attribute < j->attribute) {
            ++i;
            continue;
        }
        if (j->attribute < i->attribute) {
            ++j;
            continue;
        }
        const bool empty1 = std::holds_alternative<std::monostate>(i->value);
        const bool empty2 = std::holds_alternative<std::monostate>(j->value);
        if (empty1 && empty2) {
            ++no_value;
        } else if (same_value(*i, *j)) {
            // Equal values count fully when neither or both sides were
            // defaulted, half when exactly one was. Unequal values add 0.
            if (i->by_default == j->by_default) {
                ++equal;
            } else {
                ++equal_one_default;
            }
        }
        ++i;
        ++j;
    }
    const double numerator = 2.0 * static_cast<double>(no_value) + 2.0 * static_cast<double>(equal) +
                             static_cast<double>(equal_one_default);
    return numerator / static_cast<double>(total);
}

std::optional<double> descriptive_values(const OntologyStore& store, ConceptIndex v1, ConceptIndex v2) {
    if (v1 == v2) return 1.0;
    for (auto target : store.numeric_domains()) {
        for (auto d1 : store.domains_containing(v1)) {
            double x1;
            try {
                x1 = store.to_numeric(d1, v1, target);
            } catch (const NoCorrespondence&) {
                continue;
            }
            for (auto d2 : store.domains_containing(v2)) {
                double x2;
                try {
                    x2 = store.to_numeric(d2, v2, target);
                } catch (const NoCorrespondence&) {
                    continue;
                }
                const auto* bounds = store.numeric_domain(target);
                const double s = 1.0 - std::abs(x1 - x2) / std::abs(bounds->lower - bounds->upper);
                return std::clamp(s, 0.0, 1.0);
            }
        }
    }
    throw NoCorrespondence("values '" + store.concept_at(v1).id.value + "' and '" +
                           store.concept_at(v2).id.value + "' share no numeric domain");
}

}  // namespace

std::string_view to_string(Dimension d) {
    switch (d) {
        case Dimension::sort: return "sort";
        case Dimension::compositional: return "comp";
        case Dimension::essential: return "essential";
        case Dimension::restrictive: return "restrictive";
        case Dimension::descriptive: return "descriptive";
    }
    return "sort";
}

std::optional<Dimension> parse_dimension(std::string_view text) {
    for (auto d : kAllDimensions)
        if (to_string(d) == text) return d;
    if (text == "compositional") return Dimension::compositional;
    return std::nullopt;
}

std::optional<double> sim_sort(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2) {
    // Reflexive closures: both sets are nonempty, so always applicable.
    return dice(store.ancestors(c1), store.ancestors(c2));
}

std::optional<double> sim_comp(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2) {
    auto all1 = store.parts(c1, PartFilter::all);
    auto all2 = store.parts(c2, PartFilter::all);
    auto req1 = store.parts(c1, PartFilter::required);
    auto req2 = store.parts(c2, PartFilter::required);
    const std::size_t m1 = req1.size(), m2 = req2.size(), m3 = all1.size(), m4 = all2.size();
    if (m3 + m4 == 0) return std::nullopt;

    TermMean terms;
    terms.add(static_cast<double>(common(all1, req2)), m2);
    terms.add(static_cast<double>(common(all2, req1)), m1);
    terms.add(2.0 * static_cast<double>(common(req1, req2)), m1 + m2);
    terms.add(2.0 * static_cast<double>(common(all1, all2)), m3 + m4);
    return terms.mean();
}

std::optional<double> sim_essential(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2) {
    return dice(store.essential_ancestors(c1), store.essential_ancestors(c2));
}

std::optional<double> sim_restrictive(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2) {
    const auto k1 = store.concept_at(c1).kind;
    const auto k2 = store.concept_at(c2).kind;
    if (k1 == ConceptKind::entity && k2 == ConceptKind::entity) {
        auto pos1 = store.actions_of(c1, Sign::positive);
        auto neg1 = store.actions_of(c1, Sign::negative);
        auto pos2 = store.actions_of(c2, Sign::positive);
        auto neg2 = store.actions_of(c2, Sign::negative);
        TermMean terms;
        terms.add(static_cast<double>(common(pos1, pos2)), pos1.size() + pos2.size());
        terms.add(static_cast<double>(common(neg1, neg2)), neg1.size() + neg2.size());
        return terms.mean();
    }
    if (k1 == ConceptKind::action && k2 == ConceptKind::action) {
        TermMean terms;
        for (auto sign : {Sign::positive, Sign::negative})
            terms.add(dice(store.entities_of(c1, sign), store.entities_of(c2, sign)));
        return terms.mean();
    }
    throw KindMismatch("restrictive similarity compares two entities or two actions, got '" +
                       std::string(to_string(k1)) + "' and '" + std::string(to_string(k2)) + "'");
}

std::optional<double> sim_descriptive(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2) {
    const auto r1 = role_of(store.concept_at(c1).kind);
    const auto r2 = role_of(store.concept_at(c2).kind);
    if (r1 != r2) {
        throw RoleMismatch("descriptive similarity needs concepts of the same role, got '" +
                           std::string(to_string(store.concept_at(c1).kind)) + "' and '" +
                           std::string(to_string(store.concept_at(c2).kind)) + "'");
    }
    switch (r1) {
        case DescriptiveRole::generic: return descriptive_generic(store, c1, c2);
        case DescriptiveRole::attribute: return dice(store.attribute_values(c1), store.attribute_values(c2));
        case DescriptiveRole::domain: {
            TermMean halves;
            halves.add(dice(store.attributes_using(c1), store.attributes_using(c2)));
            halves.add(dice(store.domain_members(c1), store.domain_members(c2)));
            return halves.mean();
        }
        case DescriptiveRole::value: return descriptive_values(store, c1, c2);
    }
    return std::nullopt;
}

namespace {

using IndexKernel = std::optional<double> (*)(const OntologyStore&, ConceptIndex, ConceptIndex);

PartialSimilarity by_id(IndexKernel kernel, Dimension d, const OntologyStore& store, const ConceptId& c1,
                        const ConceptId& c2) {
    return {d, kernel(store, store.index_of(c1), store.index_of(c2))};
}

constexpr std::array<IndexKernel, kDimensions> kKernels = {
    static_cast<IndexKernel>(&sim_sort), static_cast<IndexKernel>(&sim_comp),
    static_cast<IndexKernel>(&sim_essential), static_cast<IndexKernel>(&sim_restrictive),
    static_cast<IndexKernel>(&sim_descriptive)};

}  // namespace

PartialSimilarity sim_sort(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2) {
    return by_id(&sim_sort, Dimension::sort, store, c1, c2);
}
PartialSimilarity sim_comp(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2) {
    return by_id(&sim_comp, Dimension::compositional, store, c1, c2);
}
PartialSimilarity sim_essential(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2) {
    return by_id(&sim_essential, Dimension::essential, store, c1, c2);
}
PartialSimilarity sim_restrictive(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2) {
    return by_id(&sim_restrictive, Dimension::restrictive, store, c1, c2);
}
PartialSimilarity sim_descriptive(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2) {
    return by_id(&sim_descriptive, Dimension::descriptive, store, c1, c2);
}

Partials compute_partials(const OntologyStore& store, ConceptIndex c1, ConceptIndex c2) {
    Partials out;
    for (std::size_t d = 0; d < kDimensions; ++d) {
        try {
            out[d] = kKernels[d](store, c1, c2);
        } catch (const KindMismatch&) {
            out[d] = std::nullopt;
        } catch (const RoleMismatch&) {
            out[d] = std::nullopt;
        } catch (const NoCorrespondence&) {
            out[d] = std::nullopt;
        }
    }
    return out;
}

double aggregate(const Partials& partials, const WeightVector& weights) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t d = 0; d < kDimensions; ++d) {
        if (!partials[d]) continue;
        num += *partials[d] * weights.w[d];
        den += weights.w[d];
    }
    if (!(den > 0.0)) throw NothingApplicable();
    return std::clamp(num / den, 0.0, 1.0);
}

SimilarityResult similarity(const OntologyStore& store, const ConceptId& c1, const ConceptId& c2,
                            const WeightVector& weights) {
    const auto partials = compute_partials(store, store.index_of(c1), store.index_of(c2));
    SimilarityResult r;
    for (std::size_t d = 0; d < kDimensions; ++d) r.partials[d] = {kAllDimensions[d], partials[d]};
    r.global = aggregate(partials, weights);
    return r;
}

}  // namespace ontosim
