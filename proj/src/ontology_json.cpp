#include <fstream>
#include <istream>

#include <json.hpp>

#include "ontosim/errors.hpp"
#include "ontosim/ontology.hpp"

namespace ontosim {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

double number_field(const json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_number()) throw ParseError(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

bool bool_field(const json& obj, const char* key, const std::string& where, std::optional<bool> fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        if (fallback) return *fallback;
        throw ParseError(where + ": missing field '" + key + "'");
    }
    if (!it->is_boolean()) throw ParseError(where + ": field '" + key + "' must be a boolean");
    return it->get<bool>();
}

// Missing arrays are read as empty.
const json& array_of(const json& doc, const char* key) {
    static const json empty = json::array();
    auto it = doc.find(key);
    if (it == doc.end()) return empty;
    if (!it->is_array()) throw ParseError(std::string("top-level '") + key + "' must be an array");
    return *it;
}

std::string at(const char* section, std::size_t i) {
    return std::string(section) + "[" + std::to_string(i) + "]";
}

Sign parse_sign(const std::string& s, const std::string& where) {
    if (s == "positive") return Sign::positive;
    if (s == "negative") return Sign::negative;
    throw ParseError(where + ": sign must be 'positive' or 'negative'");
}

}  // namespace

OntologyDocument parse_ontology_document(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed ontology JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("ontology document must be a JSON object");
    const auto& format = field(doc, "format", "document");
    if (!format.is_number_integer() || format.get<int>() != 1)
        throw ParseError("unsupported ontology format (expected \"format\": 1)");

    OntologyDocument out;
    const auto& concepts = array_of(doc, "concepts");
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        const auto& c = concepts[i];
        const auto where = at("concepts", i);
        Concept item;
        item.id = ConceptId(string_field(c, "id", where));
        auto kind = parse_kind(string_field(c, "kind", where));
        if (!kind) throw ParseError(where + ": unknown kind '" + c["kind"].get<std::string>() + "'");
        item.kind = *kind;
        item.is_essential = bool_field(c, "is_essential", where, false);
        if (auto it = c.find("terms"); it != c.end()) {
            if (!it->is_array()) throw ParseError(where + ": 'terms' must be an array");
            for (const auto& t : *it) {
                item.terms.push_back({string_field(t, "term", where), string_field(t, "language", where)});
            }
        }
        out.concepts.push_back(std::move(item));
    }

    const auto& edges = array_of(doc, "sort_edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto where = at("sort_edges", i);
        out.sort_edges.push_back({ConceptId(string_field(edges[i], "child", where)),
                                  ConceptId(string_field(edges[i], "parent", where))});
    }

    const auto& comps = array_of(doc, "compositions");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto where = at("compositions", i);
        out.compositions.push_back({ConceptId(string_field(comps[i], "whole", where)),
                                    ConceptId(string_field(comps[i], "part", where)),
                                    bool_field(comps[i], "required", where, std::nullopt)});
    }

    const auto& restr = array_of(doc, "restrictive");
    for (std::size_t i = 0; i < restr.size(); ++i) {
        const auto where = at("restrictive", i);
        out.restrictive.push_back({ConceptId(string_field(restr[i], "action", where)),
                                   ConceptId(string_field(restr[i], "entity", where)),
                                   parse_sign(string_field(restr[i], "sign", where), where)});
    }

    const auto& desc = array_of(doc, "descriptive");
    for (std::size_t i = 0; i < desc.size(); ++i) {
        const auto& t = desc[i];
        const auto where = at("descriptive", i);
        DescriptiveTriple triple;
        triple.subject = ConceptId(string_field(t, "subject", where));
        triple.attribute = ConceptId(string_field(t, "attribute", where));
        triple.domain = ConceptId(string_field(t, "domain", where));
        if (auto it = t.find("value"); it != t.end() && !it->is_null()) {
            if (it->is_number()) {
                triple.value = it->get<double>();
            } else if (it->is_string()) {
                triple.value = ConceptId(it->get<std::string>());
            } else {
                throw ParseError(where + ": 'value' must be null, a concept id or a number");
            }
        }
        triple.assigned_by_default = bool_field(t, "assigned_by_default", where, false);
        out.descriptive.push_back(std::move(triple));
    }

    const auto& domains = array_of(doc, "domains");
    for (std::size_t i = 0; i < domains.size(); ++i) {
        const auto& d = domains[i];
        const auto where = at("domains", i);
        Domain domain;
        domain.id = ConceptId(string_field(d, "id", where));
        const auto variant = string_field(d, "variant", where);
        if (variant == "numeric") {
            NumericDomain num;
            num.lower = number_field(d, "lower", where);
            num.upper = number_field(d, "upper", where);
            num.unit = d.contains("unit") ? string_field(d, "unit", where) : std::string{};
            domain.variant = num;
        } else if (variant == "enumerated") {
            EnumeratedDomain en;
            const auto& members = field(d, "members", where);
            if (!members.is_array()) throw ParseError(where + ": 'members' must be an array");
            for (const auto& m : members) {
                if (!m.is_string()) throw ParseError(where + ": members must be concept ids");
                en.members.emplace_back(m.get<std::string>());
            }
            domain.variant = std::move(en);
        } else {
            throw ParseError(where + ": variant must be 'numeric' or 'enumerated'");
        }
        out.domains.push_back(std::move(domain));
    }

    const auto& corr = array_of(doc, "correspondences");
    for (std::size_t i = 0; i < corr.size(); ++i) {
        const auto& c = corr[i];
        const auto where = at("correspondences", i);
        DomainCorrespondence dc;
        dc.from_domain = ConceptId(string_field(c, "from_domain", where));
        dc.to_domain = ConceptId(string_field(c, "to_domain", where));
        const auto mapping = string_field(c, "mapping", where);
        if (mapping == "linear") {
            dc.mapping = LinearMap{number_field(c, "scale", where), number_field(c, "offset", where)};
        } else if (mapping == "fuzzy-labels") {
            const auto& labels = field(c, "labels", where);
            if (!labels.is_object()) throw ParseError(where + ": 'labels' must be an object");
            FuzzyLabels fl;
            for (auto it = labels.begin(); it != labels.end(); ++it) {
                if (!it.value().is_number()) throw ParseError(where + ": label values must be numbers");
                fl.representatives.emplace_back(ConceptId(it.key()), it.value().get<double>());
            }
            dc.mapping = std::move(fl);
        } else {
            throw ParseError(where + ": mapping must be 'linear' or 'fuzzy-labels'");
        }
        out.correspondences.push_back(std::move(dc));
    }
    return out;
}

OntologyStore load_ontology(std::istream& in) {
    return OntologyStore::build(parse_ontology_document(in));
}

OntologyStore load_ontology_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ontology file '" + path + "'");
    return load_ontology(in);
}

}  // namespace ontosim
