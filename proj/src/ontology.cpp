#include "ontosim/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "ontosim/errors.hpp"

namespace ontosim {

namespace {

void sort_unique(std::vector<ConceptIndex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<ConceptIndex> merged(std::span<const ConceptIndex> a, std::span<const ConceptIndex> b) {
    std::vector<ConceptIndex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_generic(ConceptKind k) {
    return k == ConceptKind::entity || k == ConceptKind::action || k == ConceptKind::abstract;
}

}  // namespace

std::string_view to_string(ConceptKind kind) {
    switch (kind) {
        case ConceptKind::entity: return "entity";
        case ConceptKind::action: return "action";
        case ConceptKind::attribute: return "attribute";
        case ConceptKind::domain: return "domain";
        case ConceptKind::value: return "value";
        case ConceptKind::abstract: return "abstract";
    }
    return "entity";
}

std::optional<ConceptKind> parse_kind(std::string_view text) {
    for (auto k : {ConceptKind::entity, ConceptKind::action, ConceptKind::attribute,
                   ConceptKind::domain, ConceptKind::value, ConceptKind::abstract}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

OntologyStore OntologyStore::build(OntologyDocument doc) {
    OntologyStore s;
    const auto n = doc.concepts.size();
    s.concepts_ = std::move(doc.concepts);
    s.by_id_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = s.concepts_[i];
        if (c.id.value.empty()) throw ValidationError("#" + std::to_string(i), "concept with empty id");
        if (!s.by_id_.emplace(c.id.value, static_cast<ConceptIndex>(i)).second)
            throw ValidationError(c.id.value, "duplicate concept id '" + c.id.value + "'");
        s.counts_.terms += c.terms.size();
        if (c.is_essential) ++s.counts_.essential;
    }
    s.counts_.concepts = n;

    auto resolve = [&](const ConceptId& id, const std::string& where) -> ConceptIndex {
        auto it = s.by_id_.find(id.value);
        if (it == s.by_id_.end())
            throw ValidationError(where, where + ": dangling concept id '" + id.value + "'");
        return it->second;
    };
    auto kind_of = [&](ConceptIndex i) { return s.concepts_[i].kind; };

    // Sort dimension: Kahn's algorithm over child->parent edges, parents first.
    std::vector<std::vector<ConceptIndex>> parents(n), children(n);
    for (const auto& e : doc.sort_edges) {
        const std::string where = "sort_edge " + e.child.value + "->" + e.parent.value;
        auto c = resolve(e.child, where);
        auto p = resolve(e.parent, where);
        if (c == p) throw ValidationError(e.child.value, "cycle in sort edges: " + e.child.value + " -> " + e.child.value);
        parents[c].push_back(p);
        children[p].push_back(c);
    }
    for (auto& v : parents) sort_unique(v);
    for (auto& v : children) sort_unique(v);
    s.counts_.sort_edges = doc.sort_edges.size();

    std::vector<std::size_t> pending(n);
    std::deque<ConceptIndex> ready;
    for (std::size_t i = 0; i < n; ++i) {
        pending[i] = parents[i].size();
        if (pending[i] == 0) ready.push_back(static_cast<ConceptIndex>(i));
    }
    s.ancestors_.assign(n, {});
    std::size_t visited = 0;
    while (!ready.empty()) {
        auto c = ready.front();
        ready.pop_front();
        ++visited;
        auto& anc = s.ancestors_[c];
        anc.push_back(c);
        for (auto p : parents[c]) anc.insert(anc.end(), s.ancestors_[p].begin(), s.ancestors_[p].end());
        sort_unique(anc);
        for (auto ch : children[c])
            if (--pending[ch] == 0) ready.push_back(ch);
    }
    if (visited != n) {
        // Every unvisited node lies on or below a cycle; walk parents among
        // the unvisited until a node repeats to name the cycle itself.
        ConceptIndex start = 0;
        while (pending[start] == 0) ++start;
        std::vector<ConceptIndex> path;
        std::vector<int> seen_at(n, -1);
        ConceptIndex cur = start;
        while (seen_at[cur] < 0) {
            seen_at[cur] = static_cast<int>(path.size());
            path.push_back(cur);
            for (auto p : parents[cur]) {
                if (pending[p] != 0) {
                    cur = p;
                    break;
                }
            }
        }
        std::string msg = "cycle in sort edges: ";
        for (std::size_t k = static_cast<std::size_t>(seen_at[cur]); k < path.size(); ++k)
            msg += s.concepts_[path[k]].id.value + " -> ";
        msg += s.concepts_[cur].id.value;
        throw ValidationError(s.concepts_[cur].id.value, msg);
    }
    s.essential_ancestors_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (auto a : s.ancestors_[i])
            if (s.concepts_[a].is_essential) s.essential_ancestors_[i].push_back(a);

    // Compositional dimension.
    s.parts_all_.assign(n, {});
    s.parts_required_.assign(n, {});
    s.parts_optional_.assign(n, {});
    {
        std::set<std::pair<ConceptIndex, ConceptIndex>> seen;
        for (const auto& c : doc.compositions) {
            const std::string where = "composition " + c.whole.value + "/" + c.part.value;
            auto w = resolve(c.whole, where);
            auto p = resolve(c.part, where);
            if (w == p) throw ValidationError(where, where + ": a concept cannot be its own part");
            if (!seen.emplace(w, p).second) throw ValidationError(where, where + ": duplicate composition");
            s.parts_all_[w].push_back(p);
            (c.required ? s.parts_required_ : s.parts_optional_)[w].push_back(p);
        }
        s.counts_.compositions = doc.compositions.size();
    }
    for (auto* table : {&s.parts_all_, &s.parts_required_, &s.parts_optional_})
        for (auto& v : *table) std::sort(v.begin(), v.end());

    // Restrictive dimension.
    s.actions_pos_.assign(n, {});
    s.actions_neg_.assign(n, {});
    s.entities_pos_.assign(n, {});
    s.entities_neg_.assign(n, {});
    {
        std::map<std::pair<ConceptIndex, ConceptIndex>, Sign> seen;
        for (const auto& r : doc.restrictive) {
            const std::string where = "restrictive " + r.action.value + "/" + r.entity.value;
            auto a = resolve(r.action, where);
            auto e = resolve(r.entity, where);
            if (kind_of(a) != ConceptKind::action)
                throw ValidationError(where, where + ": '" + r.action.value + "' is not an action");
            if (kind_of(e) != ConceptKind::entity)
                throw ValidationError(where, where + ": '" + r.entity.value + "' is not an entity");
            auto [it, fresh] = seen.emplace(std::make_pair(a, e), r.sign);
            if (!fresh) {
                throw ValidationError(where, where + (it->second == r.sign ? ": duplicate relation"
                                                                           : ": sign conflict"));
            }
            if (r.sign == Sign::positive) {
                s.actions_pos_[e].push_back(a);
                s.entities_pos_[a].push_back(e);
            } else {
                s.actions_neg_[e].push_back(a);
                s.entities_neg_[a].push_back(e);
            }
        }
        s.counts_.restrictive = doc.restrictive.size();
    }
    for (auto* table : {&s.actions_pos_, &s.actions_neg_, &s.entities_pos_, &s.entities_neg_})
        for (auto& v : *table) std::sort(v.begin(), v.end());

    // Domains.
    s.domain_slot_.assign(n, std::nullopt);
    s.domain_members_.assign(n, {});
    s.value_domains_.assign(n, {});
    for (auto& d : doc.domains) {
        const std::string where = "domain " + d.id.value;
        auto di = resolve(d.id, where);
        if (kind_of(di) != ConceptKind::domain)
            throw ValidationError(d.id.value, where + ": concept is not of kind domain");
        if (s.domain_slot_[di]) throw ValidationError(d.id.value, where + ": defined twice");
        if (const auto* num = std::get_if<NumericDomain>(&d.variant)) {
            if (!std::isfinite(num->lower) || !std::isfinite(num->upper) || !(num->lower < num->upper))
                throw ValidationError(d.id.value, where + ": numeric domain requires lower < upper");
            s.numeric_domains_.push_back(di);
        } else {
            const auto& en = std::get<EnumeratedDomain>(d.variant);
            if (en.members.empty()) throw ValidationError(d.id.value, where + ": enumerated domain has no members");
            auto& members = s.domain_members_[di];
            for (const auto& m : en.members) {
                auto mi = resolve(m, where);
                if (kind_of(mi) != ConceptKind::value)
                    throw ValidationError(d.id.value, where + ": member '" + m.value + "' is not a value concept");
                members.push_back(mi);
                s.value_domains_[mi].push_back(di);
            }
            auto sorted = members;
            sort_unique(sorted);
            if (sorted.size() != members.size())
                throw ValidationError(d.id.value, where + ": duplicate enumerated member");
            members = std::move(sorted);
        }
        s.domain_slot_[di] = s.domains_.size();
        s.domains_.push_back(std::move(d));
    }
    std::sort(s.numeric_domains_.begin(), s.numeric_domains_.end());
    for (auto& v : s.value_domains_) std::sort(v.begin(), v.end());
    s.counts_.domains = s.domains_.size();

    // Descriptive dimension.
    s.attributes_.assign(n, {});
    s.domain_attributes_.assign(n, {});
    std::vector<std::vector<ConceptIndex>> attribute_domains(n);
    for (const auto& t : doc.descriptive) {
        const std::string where = "descriptive " + t.subject.value + "/" + t.attribute.value + "/" + t.domain.value;
        AttributeSlot slot;
        auto subj = resolve(t.subject, where);
        slot.attribute = resolve(t.attribute, where);
        slot.domain = resolve(t.domain, where);
        slot.by_default = t.assigned_by_default;
        if (!is_generic(kind_of(subj)))
            throw ValidationError(where, where + ": subject must be an entity, action or abstract concept");
        if (kind_of(slot.attribute) != ConceptKind::attribute)
            throw ValidationError(where, where + ": '" + t.attribute.value + "' is not an attribute");
        const Domain* dom = s.domain_definition(slot.domain);
        if (dom == nullptr) throw ValidationError(where, where + ": domain '" + t.domain.value + "' is not defined");
        if (std::holds_alternative<std::monostate>(t.value)) {
            if (t.assigned_by_default)
                throw ValidationError(where, where + ": assigned_by_default requires a value");
        } else if (const auto* x = std::get_if<double>(&t.value)) {
            const auto* num = std::get_if<NumericDomain>(&dom->variant);
            if (num == nullptr) throw ValidationError(where, where + ": numeric value in an enumerated domain");
            if (!(*x >= num->lower && *x <= num->upper))
                throw ValidationError(where, where + ": value outside the domain bounds");
            slot.value = *x;
        } else {
            auto v = resolve(std::get<ConceptId>(t.value), where);
            const auto& members = s.domain_members_[slot.domain];
            if (!std::binary_search(members.begin(), members.end(), v))
                throw ValidationError(where, where + ": value is not a member of the domain");
            slot.value = v;
        }
        auto& slots = s.attributes_[subj];
        if (std::any_of(slots.begin(), slots.end(), [&](const AttributeSlot& o) { return o.attribute == slot.attribute; }))
            throw ValidationError(where, where + ": attribute described twice for the subject");
        slots.push_back(slot);
        attribute_domains[slot.attribute].push_back(slot.domain);
        s.domain_attributes_[slot.domain].push_back(slot.attribute);
    }
    for (auto& slots : s.attributes_)
        std::sort(slots.begin(), slots.end(),
                  [](const AttributeSlot& a, const AttributeSlot& b) { return a.attribute < b.attribute; });
    for (auto& v : s.domain_attributes_) sort_unique(v);
    s.attribute_values_.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
        sort_unique(attribute_domains[a]);
        auto& values = s.attribute_values_[a];
        for (auto d : attribute_domains[a]) values.insert(values.end(), s.domain_members_[d].begin(), s.domain_members_[d].end());
        sort_unique(values);
    }
    s.counts_.descriptive = doc.descriptive.size();

    // Correspondences.
    for (const auto& c : doc.correspondences) {
        const std::string where = "correspondence " + c.from_domain.value + "->" + c.to_domain.value;
        IndexedCorrespondence ic;
        ic.from = resolve(c.from_domain, where);
        ic.to = resolve(c.to_domain, where);
        const Domain* from = s.domain_definition(ic.from);
        const auto* to = s.numeric_domain(ic.to);
        if (from == nullptr) throw ValidationError(where, where + ": source domain is not defined");
        if (to == nullptr) throw ValidationError(where, where + ": target must be a defined numeric domain");
        if (const auto* lin = std::get_if<LinearMap>(&c.mapping)) {
            if (!std::holds_alternative<NumericDomain>(from->variant))
                throw ValidationError(where, where + ": linear mapping requires a numeric source domain");
            if (!std::isfinite(lin->scale) || !std::isfinite(lin->offset) || lin->scale == 0.0)
                throw ValidationError(where, where + ": linear mapping needs a finite nonzero scale");
            ic.mapping = *lin;
        } else {
            if (!std::holds_alternative<EnumeratedDomain>(from->variant))
                throw ValidationError(where, where + ": fuzzy labels require an enumerated source domain");
            std::unordered_map<ConceptIndex, double> table;
            for (const auto& [member, rep] : std::get<FuzzyLabels>(c.mapping).representatives) {
                auto mi = resolve(member, where);
                const auto& members = s.domain_members_[ic.from];
                if (!std::binary_search(members.begin(), members.end(), mi))
                    throw ValidationError(where, where + ": label for non-member '" + member.value + "'");
                if (!(rep >= to->lower && rep <= to->upper))
                    throw ValidationError(where, where + ": representative of '" + member.value + "' outside target bounds");
                if (!table.emplace(mi, rep).second)
                    throw ValidationError(where, where + ": member '" + member.value + "' labelled twice");
            }
            if (table.size() != s.domain_members_[ic.from].size())
                throw ValidationError(where, where + ": every enumerated member needs a representative");
            ic.mapping = std::move(table);
        }
        s.correspondences_.push_back(std::move(ic));
    }
    s.counts_.correspondences = s.correspondences_.size();
    return s;
}

std::optional<ConceptIndex> OntologyStore::find(const ConceptId& id) const {
    auto it = by_id_.find(id.value);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

ConceptIndex OntologyStore::index_of(const ConceptId& id) const {
    if (auto i = find(id)) return *i;
    throw UnknownConcept(id.value);
}

std::span<const ConceptIndex> OntologyStore::parts(ConceptIndex c, PartFilter which) const {
    switch (which) {
        case PartFilter::required: return parts_required_[c];
        case PartFilter::optional: return parts_optional_[c];
        case PartFilter::all: break;
    }
    return parts_all_[c];
}

std::span<const ConceptIndex> OntologyStore::actions_of(ConceptIndex e, Sign sign) const {
    return sign == Sign::positive ? actions_pos_[e] : actions_neg_[e];
}

std::span<const ConceptIndex> OntologyStore::entities_of(ConceptIndex a, Sign sign) const {
    return sign == Sign::positive ? entities_pos_[a] : entities_neg_[a];
}

const Domain* OntologyStore::domain_definition(ConceptIndex c) const {
    if (c >= domain_slot_.size() || !domain_slot_[c]) return nullptr;
    return &domains_[*domain_slot_[c]];
}

const NumericDomain* OntologyStore::numeric_domain(ConceptIndex c) const {
    const Domain* d = domain_definition(c);
    return d ? std::get_if<NumericDomain>(&d->variant) : nullptr;
}

bool OntologyStore::in_bounds(ConceptIndex numeric, double x) const {
    const auto* d = numeric_domain(numeric);
    constexpr double slack = 1e-9;
    return d != nullptr && x >= d->lower - slack && x <= d->upper + slack;
}

std::optional<double> OntologyStore::apply(const IndexedCorrespondence& c,
                                           const std::variant<ConceptIndex, double>& value) const {
    if (const auto* lin = std::get_if<LinearMap>(&c.mapping)) {
        if (const auto* x = std::get_if<double>(&value)) return lin->scale * *x + lin->offset;
        return std::nullopt;
    }
    const auto& table = std::get<std::unordered_map<ConceptIndex, double>>(c.mapping);
    if (const auto* v = std::get_if<ConceptIndex>(&value)) {
        auto it = table.find(*v);
        if (it != table.end()) return it->second;
    }
    return std::nullopt;
}

double OntologyStore::to_numeric(ConceptIndex domain, const std::variant<ConceptIndex, double>& value,
                                 ConceptIndex target) const {
    auto name = [&](ConceptIndex i) { return concepts_[i].id.value; };
    if (numeric_domain(target) == nullptr)
        throw NoCorrespondence("target '" + name(target) + "' is not a numeric domain");

    auto checked = [&](double x) {
        if (!in_bounds(target, x))
            throw OutOfRange("mapped value " + std::to_string(x) + " lies outside '" + name(target) + "'");
        return x;
    };
    if (domain == target && std::holds_alternative<double>(value)) return checked(std::get<double>(value));

    for (const auto& first : correspondences_) {
        if (first.from != domain) continue;
        auto x = apply(first, value);
        if (!x) continue;
        if (first.to == target) return checked(*x);
        for (const auto& second : correspondences_) {
            if (second.from != first.to || second.to != target) continue;
            if (auto y = apply(second, *x)) return checked(*y);
        }
    }
    throw NoCorrespondence("no correspondence from '" + name(domain) + "' to '" + name(target) + "'");
}

namespace {

std::set<ConceptId> to_ids(const OntologyStore& store, std::span<const ConceptIndex> v) {
    std::set<ConceptId> out;
    for (auto i : v) out.insert(store.concept_at(i).id);
    return out;
}

}  // namespace

std::set<ConceptId> ancestors(const OntologyStore& store, const ConceptId& c) {
    return to_ids(store, store.ancestors(store.index_of(c)));
}

std::set<ConceptId> essential_ancestors(const OntologyStore& store, const ConceptId& c) {
    return to_ids(store, store.essential_ancestors(store.index_of(c)));
}

std::set<ConceptId> parts(const OntologyStore& store, const ConceptId& c, PartFilter which) {
    return to_ids(store, store.parts(store.index_of(c), which));
}

std::set<ConceptId> related_actions(const OntologyStore& store, const ConceptId& e, SignFilter sign) {
    auto i = store.index_of(e);
    if (store.concept_at(i).kind != ConceptKind::entity)
        throw KindMismatch("'" + e.value + "' is not an entity");
    switch (sign) {
        case SignFilter::positive: return to_ids(store, store.actions_of(i, Sign::positive));
        case SignFilter::negative: return to_ids(store, store.actions_of(i, Sign::negative));
        case SignFilter::any: break;
    }
    return to_ids(store, merged(store.actions_of(i, Sign::positive), store.actions_of(i, Sign::negative)));
}

std::set<ConceptId> related_entities(const OntologyStore& store, const ConceptId& a, SignFilter sign) {
    auto i = store.index_of(a);
    if (store.concept_at(i).kind != ConceptKind::action)
        throw KindMismatch("'" + a.value + "' is not an action");
    switch (sign) {
        case SignFilter::positive: return to_ids(store, store.entities_of(i, Sign::positive));
        case SignFilter::negative: return to_ids(store, store.entities_of(i, Sign::negative));
        case SignFilter::any: break;
    }
    return to_ids(store, merged(store.entities_of(i, Sign::positive), store.entities_of(i, Sign::negative)));
}

double to_numeric(const OntologyStore& store, const ValueRef& v, const ConceptId& target) {
    auto domain = store.index_of(v.domain);
    auto tgt = store.index_of(target);
    if (const auto* x = std::get_if<double>(&v.value)) return store.to_numeric(domain, *x, tgt);
    return store.to_numeric(domain, store.index_of(std::get<ConceptId>(v.value)), tgt);
}

}  // namespace ontosim
