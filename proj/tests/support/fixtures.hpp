#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ontosim/ontology.hpp"

namespace fixtures {

inline ontosim::OntologyStore from_json(const std::string& text) {
    std::istringstream in(text);
    return ontosim::load_ontology(in);
}

inline std::string data_path(const std::string& name) { return std::string(ONTOSIM_DATA_DIR) + "/" + name; }

inline const ontosim::OntologyStore& teaching_ontology() {
    static const auto store = ontosim::load_ontology_file(data_path("ontology_cs_teaching.json"));
    return store;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Small hand-written ontology used across tests:
//
//   root ── device ── computer ── laptop
//        │        └── lamp
//        └── person (essential)
//
// laptop parts: cpu (req), screen (req), webcam (opt)
// computer parts: cpu (req), disk (opt)
inline const char* kSmall = R"({
  "format": 1,
  "concepts": [
    {"id": "root", "kind": "entity", "is_essential": true,
     "terms": [{"term": "thing", "language": "en"}, {"term": "cosa", "language": "es"}]},
    {"id": "device", "kind": "entity", "is_essential": true},
    {"id": "computer", "kind": "entity"},
    {"id": "laptop", "kind": "entity"},
    {"id": "lamp", "kind": "entity"},
    {"id": "person", "kind": "entity", "is_essential": true},
    {"id": "cpu", "kind": "entity"},
    {"id": "screen", "kind": "entity"},
    {"id": "webcam", "kind": "entity"},
    {"id": "disk", "kind": "entity"},
    {"id": "compute", "kind": "action"},
    {"id": "illuminate", "kind": "action"},
    {"id": "carry", "kind": "action"},
    {"id": "size", "kind": "attribute"},
    {"id": "colour", "kind": "attribute"},
    {"id": "weight", "kind": "attribute"},
    {"id": "sizes", "kind": "domain"},
    {"id": "colours", "kind": "domain"},
    {"id": "cm", "kind": "domain"},
    {"id": "kg", "kind": "domain"},
    {"id": "grams", "kind": "domain"},
    {"id": "small", "kind": "value"},
    {"id": "large", "kind": "value"},
    {"id": "black", "kind": "value"},
    {"id": "white", "kind": "value"}
  ],
  "sort_edges": [
    {"child": "device", "parent": "root"},
    {"child": "person", "parent": "root"},
    {"child": "computer", "parent": "device"},
    {"child": "lamp", "parent": "device"},
    {"child": "laptop", "parent": "computer"}
  ],
  "compositions": [
    {"whole": "laptop", "part": "cpu", "required": true},
    {"whole": "laptop", "part": "screen", "required": true},
    {"whole": "laptop", "part": "webcam", "required": false},
    {"whole": "computer", "part": "cpu", "required": true},
    {"whole": "computer", "part": "disk", "required": false}
  ],
  "restrictive": [
    {"action": "compute", "entity": "computer", "sign": "positive"},
    {"action": "compute", "entity": "laptop", "sign": "positive"},
    {"action": "compute", "entity": "lamp", "sign": "negative"},
    {"action": "illuminate", "entity": "lamp", "sign": "positive"},
    {"action": "carry", "entity": "laptop", "sign": "positive"},
    {"action": "carry", "entity": "computer", "sign": "negative"}
  ],
  "descriptive": [
    {"subject": "laptop", "attribute": "size", "domain": "sizes", "value": "small"},
    {"subject": "laptop", "attribute": "colour", "domain": "colours", "value": "black", "assigned_by_default": true},
    {"subject": "laptop", "attribute": "weight", "domain": "kg", "value": 2},
    {"subject": "computer", "attribute": "size", "domain": "sizes", "value": "large"},
    {"subject": "computer", "attribute": "colour", "domain": "colours", "value": "black"},
    {"subject": "lamp", "attribute": "colour", "domain": "colours"},
    {"subject": "lamp", "attribute": "weight", "domain": "kg", "value": 2}
  ],
  "domains": [
    {"id": "sizes", "variant": "enumerated", "members": ["small", "large"]},
    {"id": "colours", "variant": "enumerated", "members": ["black", "white"]},
    {"id": "cm", "variant": "numeric", "lower": 0, "upper": 1000, "unit": "cm"},
    {"id": "kg", "variant": "numeric", "lower": 0, "upper": 100, "unit": "kg"},
    {"id": "grams", "variant": "numeric", "lower": 0, "upper": 100000, "unit": "g"}
  ],
  "correspondences": [
    {"from_domain": "sizes", "to_domain": "cm", "mapping": "fuzzy-labels", "labels": {"small": 100, "large": 900}},
    {"from_domain": "kg", "to_domain": "grams", "mapping": "linear", "scale": 1000, "offset": 0},
    {"from_domain": "grams", "to_domain": "kg", "mapping": "linear", "scale": 0.001, "offset": 0}
  ]
})";

}  // namespace fixtures
