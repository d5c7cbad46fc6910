#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace ontosim {

/// Opaque concept identifier, unique within one store.
struct ConceptId {
    std::string value;

    ConceptId() = default;
    explicit ConceptId(std::string v) : value(std::move(v)) {}
    ConceptId(const char* v) : value(v) {}  // NOLINT: literals in tests and fixtures

    auto operator<=>(const ConceptId&) const = default;
};

/// Dense position of a concept inside an OntologyStore.
using ConceptIndex = std::uint32_t;

enum class ConceptKind { entity, action, attribute, domain, value, abstract };
enum class Sign { positive, negative };
enum class SignFilter { positive, negative, any };
enum class PartFilter { all, required, optional };

std::string_view to_string(ConceptKind kind);
std::optional<ConceptKind> parse_kind(std::string_view text);

struct Term {
    std::string text;
    std::string language;
};

struct Concept {
    ConceptId id;
    ConceptKind kind = ConceptKind::entity;
    std::vector<Term> terms;
    bool is_essential = false;
};

struct SortEdge {
    ConceptId child;
    ConceptId parent;
};

struct Composition {
    ConceptId whole;
    ConceptId part;
    bool required = false;
};

struct RestrictiveRelation {
    ConceptId action;
    ConceptId entity;
    Sign sign = Sign::positive;
};

/// Either no value, a member of an enumerated domain, or a magnitude.
using TripleValue = std::variant<std::monostate, ConceptId, double>;

struct DescriptiveTriple {
    ConceptId subject;
    ConceptId attribute;
    ConceptId domain;
    TripleValue value;
    bool assigned_by_default = false;
};

struct NumericDomain {
    double lower = 0.0;
    double upper = 1.0;
    std::string unit;
};

struct EnumeratedDomain {
    std::vector<ConceptId> members;
};

struct Domain {
    ConceptId id;
    std::variant<NumericDomain, EnumeratedDomain> variant;
};

struct LinearMap {
    double scale = 1.0;
    double offset = 0.0;
};

/// Each enumerated member collapsed to one representative magnitude.
struct FuzzyLabels {
    std::vector<std::pair<ConceptId, double>> representatives;
};

struct DomainCorrespondence {
    ConceptId from_domain;
    ConceptId to_domain;
    std::variant<LinearMap, FuzzyLabels> mapping;
};

/// Raw, unvalidated ontology content as read from a file.
struct OntologyDocument {
    std::vector<Concept> concepts;
    std::vector<SortEdge> sort_edges;
    std::vector<Composition> compositions;
    std::vector<RestrictiveRelation> restrictive;
    std::vector<DescriptiveTriple> descriptive;
    std::vector<Domain> domains;
    std::vector<DomainCorrespondence> correspondences;
};

/// A value located in a domain, the input of to_numeric.
struct ValueRef {
    ConceptId domain;
    std::variant<ConceptId, double> value;
};

/// One descriptive fact about a subject, resolved to indices.
struct AttributeSlot {
    ConceptIndex attribute = 0;
    ConceptIndex domain = 0;
    std::variant<std::monostate, ConceptIndex, double> value;
    bool by_default = false;
};

struct DimensionCounts {
    std::size_t concepts = 0;
    std::size_t essential = 0;
    std::size_t sort_edges = 0;
    std::size_t compositions = 0;
    std::size_t restrictive = 0;
    std::size_t descriptive = 0;
    std::size_t domains = 0;
    std::size_t correspondences = 0;
    std::size_t terms = 0;
};

/// Immutable multi-dimensional concept graph.
///
/// Built once from an OntologyDocument; every invariant is checked during
/// construction and all closures (sort ancestors, essential ancestors,
/// per-attribute value sets) are computed eagerly, so a store can be shared
/// between threads without synchronization. Index-level accessors return
/// sorted spans which the similarity kernels intersect directly.
class OntologyStore {
public:
    /// Validates and indexes `doc`. Throws ValidationError naming the
    /// offending entity on the first violated invariant.
    static OntologyStore build(OntologyDocument doc);

    std::size_t size() const noexcept { return concepts_.size(); }
    DimensionCounts counts() const noexcept { return counts_; }

    std::optional<ConceptIndex> find(const ConceptId& id) const;
    /// Throws UnknownConcept.
    ConceptIndex index_of(const ConceptId& id) const;
    const Concept& concept_at(ConceptIndex i) const { return concepts_[i]; }
    const Concept& concept_of(const ConceptId& id) const { return concepts_[index_of(id)]; }

    std::span<const ConceptIndex> ancestors(ConceptIndex c) const { return ancestors_[c]; }
    std::span<const ConceptIndex> essential_ancestors(ConceptIndex c) const {
        return essential_ancestors_[c];
    }
    std::span<const ConceptIndex> parts(ConceptIndex c, PartFilter which) const;
    /// Actions restricting entity `e` with the given sign (kind not checked).
    std::span<const ConceptIndex> actions_of(ConceptIndex e, Sign sign) const;
    /// Entities restricted by action `a` with the given sign (kind not checked).
    std::span<const ConceptIndex> entities_of(ConceptIndex a, Sign sign) const;

    std::span<const AttributeSlot> attributes_of(ConceptIndex subject) const {
        return attributes_[subject];
    }
    // Union of the enumerated members of every domain the attribute is used with.
    std::span<const ConceptIndex> attribute_values(ConceptIndex attribute) const {
        return attribute_values_[attribute];
    }
    std::span<const ConceptIndex> attributes_using(ConceptIndex domain) const {
        return domain_attributes_[domain];
    }
    std::span<const ConceptIndex> domain_members(ConceptIndex domain) const {
        return domain_members_[domain];
    }
    std::span<const ConceptIndex> domains_containing(ConceptIndex value) const {
        return value_domains_[value];
    }
    std::span<const ConceptIndex> numeric_domains() const { return numeric_domains_; }

    /// Null when `c` has no domain definition.
    const Domain* domain_definition(ConceptIndex c) const;
    const NumericDomain* numeric_domain(ConceptIndex c) const;

    /// Maps a value of its domain into the numeric domain `target` through
    /// at most two correspondences. Throws NoCorrespondence or OutOfRange.
    double to_numeric(ConceptIndex domain, const std::variant<ConceptIndex, double>& value,
                      ConceptIndex target) const;

private:
    OntologyStore() = default;

    struct IndexedCorrespondence {
        ConceptIndex from = 0;
        ConceptIndex to = 0;
        std::variant<LinearMap, std::unordered_map<ConceptIndex, double>> mapping;
    };

    std::optional<double> apply(const IndexedCorrespondence& c,
                                const std::variant<ConceptIndex, double>& value) const;
    bool in_bounds(ConceptIndex numeric, double x) const;

    std::vector<Concept> concepts_;
    std::unordered_map<std::string, ConceptIndex> by_id_;
    std::vector<std::vector<ConceptIndex>> ancestors_;
    std::vector<std::vector<ConceptIndex>> essential_ancestors_;
    std::vector<std::vector<ConceptIndex>> parts_all_;
    std::vector<std::vector<ConceptIndex>> parts_required_;
    std::vector<std::vector<ConceptIndex>> parts_optional_;
    std::vector<std::vector<ConceptIndex>> actions_pos_;
    std::vector<std::vector<ConceptIndex>> actions_neg_;
    std::vector<std::vector<ConceptIndex>> entities_pos_;
    std::vector<std::vector<ConceptIndex>> entities_neg_;
    std::vector<std::vector<AttributeSlot>> attributes_;
    std::vector<std::vector<ConceptIndex>> attribute_values_;
    std::vector<std::vector<ConceptIndex>> domain_attributes_;
    std::vector<std::vector<ConceptIndex>> domain_members_;
    std::vector<std::vector<ConceptIndex>> value_domains_;
    std::vector<ConceptIndex> numeric_domains_;
    std::vector<std::optional<std::size_t>> domain_slot_;
    std::vector<Domain> domains_;
    std::vector<IndexedCorrespondence> correspondences_;
    DimensionCounts counts_;
};

// Identifier-level queries. Results are ordered sets so callers can compare
// them directly; the similarity kernels use the index spans above instead.

std::set<ConceptId> ancestors(const OntologyStore& store, const ConceptId& c);
std::set<ConceptId> essential_ancestors(const OntologyStore& store, const ConceptId& c);
std::set<ConceptId> parts(const OntologyStore& store, const ConceptId& c, PartFilter which);
/// Throws KindMismatch unless `e` is an entity.
std::set<ConceptId> related_actions(const OntologyStore& store, const ConceptId& e, SignFilter sign);
/// Throws KindMismatch unless `a` is an action.
std::set<ConceptId> related_entities(const OntologyStore& store, const ConceptId& a,
                                     SignFilter sign);
double to_numeric(const OntologyStore& store, const ValueRef& v, const ConceptId& target);

// JSON ontology format (format: 1).
OntologyDocument parse_ontology_document(std::istream& in);
OntologyStore load_ontology(std::istream& in);
OntologyStore load_ontology_file(const std::string& path);

}  // namespace ontosim

template <>
struct std::hash<ontosim::ConceptId> {
    std::size_t operator()(const ontosim::ConceptId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};
