#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "ontosim/errors.hpp"
#include "ontosim/similarity.hpp"

using namespace ontosim;
using doctest::Approx;
using fixtures::from_json;

namespace {

double value(const PartialSimilarity& p) {
    REQUIRE(p.applicable());
    return *p.value;
}

Partials partials_of(std::initializer_list<std::optional<double>> xs) {
    Partials p;
    std::size_t i = 0;
    for (auto x : xs) p[i++] = x;
    return p;
}

}  // namespace

TEST_CASE("sort similarity") {
    auto store = from_json(fixtures::kSmall);
    CHECK(value(sim_sort(store, "laptop", "laptop")) == 1.0);
    CHECK(value(sim_sort(store, "device", "person")) == Approx(0.5));
    CHECK(value(sim_sort(store, "computer", "lamp")) == Approx(2.0 * 2 / 6));
    CHECK(value(sim_sort(store, "laptop", "lamp")) == Approx(2.0 * 2 / 7));
    CHECK(value(sim_sort(store, "cpu", "screen")) == 0.0);
    CHECK_THROWS_AS(sim_sort(store, "laptop", "ghost"), UnknownConcept);
}

TEST_CASE("compositional similarity") {
    auto store = from_json(fixtures::kSmall);
    CHECK_FALSE(sim_comp(store, "lamp", "cpu").applicable());
    CHECK(value(sim_comp(store, "laptop", "laptop")) == Approx((1.0 + 1.0 + 1.0 + 1.0) / 4));
    // N1 = 1/M2 = 1, N2 = 1/M1 = 2, N3 = 1 of 3 required, N4 = 1 of 5 total.
    CHECK(value(sim_comp(store, "laptop", "computer")) == Approx((1.0 + 0.5 + 2.0 / 3 + 0.4) / 4));
    // Only one side has parts: the terms with M2 = 0 are dropped.
    CHECK(value(sim_comp(store, "laptop", "lamp")) == Approx(0.0));

    auto custom = from_json(R"({"format": 1,
      "concepts": [{"id": "c1", "kind": "entity"}, {"id": "c2", "kind": "entity"}, {"id": "a", "kind": "entity"},
                   {"id": "b", "kind": "entity"}, {"id": "c", "kind": "entity"}, {"id": "k1", "kind": "entity"},
                   {"id": "k2", "kind": "entity"}],
      "compositions": [
        {"whole": "c1", "part": "a", "required": true}, {"whole": "c1", "part": "b", "required": false},
        {"whole": "c2", "part": "a", "required": true}, {"whole": "c2", "part": "c", "required": false},
        {"whole": "k1", "part": "a", "required": true}, {"whole": "k1", "part": "b", "required": true},
        {"whole": "k2", "part": "a", "required": true}, {"whole": "k2", "part": "b", "required": true}]})");
    CHECK(value(sim_comp(custom, "c1", "c2")) == Approx(0.875));
    CHECK(value(sim_comp(custom, "k1", "k2")) == 1.0);
}

TEST_CASE("essential similarity") {
    auto store = from_json(fixtures::kSmall);
    CHECK(value(sim_essential(store, "laptop", "laptop")) == 1.0);
    CHECK(value(sim_essential(store, "laptop", "person")) == Approx(0.5));
    CHECK_FALSE(sim_essential(store, "cpu", "screen").applicable());

    auto custom = from_json(R"({"format": 1,
      "concepts": [{"id": "entity", "kind": "entity", "is_essential": true},
                   {"id": "physical", "kind": "entity", "is_essential": true},
                   {"id": "abstract", "kind": "abstract", "is_essential": true},
                   {"id": "rock", "kind": "entity"}, {"id": "idea", "kind": "abstract"}],
      "sort_edges": [{"child": "physical", "parent": "entity"}, {"child": "abstract", "parent": "entity"},
                     {"child": "rock", "parent": "physical"}, {"child": "idea", "parent": "abstract"}]})");
    CHECK(value(sim_essential(custom, "rock", "idea")) == Approx(0.5));
}

TEST_CASE("restrictive similarity, entity form") {
    auto store = from_json(fixtures::kSmall);
    // Positive term 1/(2+1); negative term 0/(0+1).
    CHECK(value(sim_restrictive(store, "laptop", "computer")) == Approx((1.0 / 3 + 0.0) / 2));
    CHECK_FALSE(sim_restrictive(store, "cpu", "screen").applicable());
    CHECK_THROWS_AS(sim_restrictive(store, "laptop", "compute"), KindMismatch);

    // The entity form caps at one half for identical relation sets, with or
    // without relations of both signs.
    CHECK(value(sim_restrictive(store, "laptop", "laptop")) == Approx(0.5));
    CHECK(value(sim_restrictive(store, "computer", "computer")) == Approx(0.5));

    auto custom = from_json(R"({"format": 1,
      "concepts": [{"id": "x", "kind": "entity"}, {"id": "y", "kind": "entity"},
                   {"id": "p", "kind": "action"}, {"id": "q", "kind": "action"}],
      "restrictive": [{"action": "p", "entity": "x", "sign": "positive"}, {"action": "q", "entity": "x", "sign": "positive"},
                      {"action": "p", "entity": "y", "sign": "positive"}, {"action": "q", "entity": "y", "sign": "positive"}]})");
    CHECK(value(sim_restrictive(custom, "x", "y")) == Approx(0.5));
    CHECK(value(sim_restrictive(custom, "p", "q")) == 1.0);
}

TEST_CASE("restrictive similarity, action form") {
    auto store = from_json(fixtures::kSmall);
    // compute: +{computer, laptop} -{lamp}; carry: +{laptop} -{computer}.
    CHECK(value(sim_restrictive(store, "compute", "carry")) == Approx((2.0 / 3 + 0.0) / 2));
    // illuminate has no negative relations, compute has one: both signs count.
    CHECK(value(sim_restrictive(store, "compute", "illuminate")) == Approx(0.0));
    CHECK(value(sim_restrictive(store, "compute", "compute")) == 1.0);
}

TEST_CASE("descriptive similarity, entity form") {
    auto store = from_json(fixtures::kSmall);
    // colour equal with one default side (N3 = 1); size differs.
    CHECK(value(sim_descriptive(store, "laptop", "computer")) == Approx(1.0 / 5));
    // weight equal, non-default (N2 = 1); lamp's colour has no value.
    CHECK(value(sim_descriptive(store, "laptop", "lamp")) == Approx(2.0 / 5));
    CHECK(value(sim_descriptive(store, "laptop", "laptop")) == 1.0);
    CHECK(value(sim_descriptive(store, "lamp", "lamp")) == 1.0);
    CHECK_FALSE(sim_descriptive(store, "cpu", "screen").applicable());
    CHECK(value(sim_descriptive(store, "laptop", "cpu")) == 0.0);

    auto custom = from_json(R"({"format": 1,
      "concepts": [{"id": "e1", "kind": "entity"}, {"id": "e2", "kind": "entity"},
                   {"id": "a1", "kind": "attribute"}, {"id": "a2", "kind": "attribute"},
                   {"id": "d", "kind": "domain"}, {"id": "v", "kind": "value"}],
      "domains": [{"id": "d", "variant": "enumerated", "members": ["v"]}],
      "descriptive": [
        {"subject": "e1", "attribute": "a1", "domain": "d", "value": "v"},
        {"subject": "e1", "attribute": "a2", "domain": "d", "value": "v"},
        {"subject": "e2", "attribute": "a1", "domain": "d", "value": "v"},
        {"subject": "e2", "attribute": "a2", "domain": "d", "value": "v"}]})");
    CHECK(value(sim_descriptive(custom, "e1", "e2")) == Approx(1.0));
}

TEST_CASE("descriptive similarity, attribute, domain and value forms") {
    auto store = from_json(fixtures::kSmall);
    CHECK(value(sim_descriptive(store, "size", "size")) == 1.0);
    CHECK(value(sim_descriptive(store, "size", "colour")) == 0.0);
    CHECK_FALSE(sim_descriptive(store, "weight", "weight").applicable());

    CHECK(value(sim_descriptive(store, "sizes", "colours")) == 0.0);
    CHECK(value(sim_descriptive(store, "kg", "kg")) == 1.0);
    CHECK(value(sim_descriptive(store, "kg", "grams")) == 0.0);
    CHECK_FALSE(sim_descriptive(store, "grams", "cm").applicable());

    CHECK(value(sim_descriptive(store, "small", "large")) == Approx(1.0 - 800.0 / 1000.0));
    CHECK(value(sim_descriptive(store, "small", "small")) == 1.0);
    CHECK_THROWS_AS(sim_descriptive(store, "black", "white"), NoCorrespondence);
    CHECK_THROWS_AS(sim_descriptive(store, "size", "small"), RoleMismatch);

    auto bounds = from_json(R"({"format": 1,
      "concepts": [{"id": "d", "kind": "domain"}, {"id": "n", "kind": "domain"},
                   {"id": "lo", "kind": "value"}, {"id": "hi", "kind": "value"}],
      "domains": [{"id": "d", "variant": "enumerated", "members": ["lo", "hi"]},
                  {"id": "n", "variant": "numeric", "lower": 10, "upper": 20}],
      "correspondences": [{"from_domain": "d", "to_domain": "n", "mapping": "fuzzy-labels",
                           "labels": {"lo": 10, "hi": 20}}]})");
    CHECK(value(sim_descriptive(bounds, "lo", "hi")) == 0.0);
}

TEST_CASE("compute_partials marks out-of-domain pairs as not applicable") {
    auto store = from_json(fixtures::kSmall);
    auto p = compute_partials(store, store.index_of("laptop"), store.index_of("compute"));
    CHECK(p[static_cast<std::size_t>(Dimension::sort)].has_value());
    CHECK_FALSE(p[static_cast<std::size_t>(Dimension::restrictive)].has_value());
    auto q = compute_partials(store, store.index_of("black"), store.index_of("white"));
    CHECK_FALSE(q[static_cast<std::size_t>(Dimension::descriptive)].has_value());
    auto r = compute_partials(store, store.index_of("size"), store.index_of("small"));
    CHECK_FALSE(r[static_cast<std::size_t>(Dimension::descriptive)].has_value());
}

TEST_CASE("aggregate") {
    WeightVector ones;
    CHECK(aggregate(partials_of({1.0, 0.0, 1.0, 0.0, 1.0}), ones) == Approx(0.6));
    WeightVector w;
    w.w = {1, 1, 3, 1, 1};
    CHECK(aggregate(partials_of({0.8, std::nullopt, 0.4, std::nullopt, std::nullopt}), w) == Approx(0.5));
    w.w = {0.3, 2.0, 0.1, 5.0, 1.0};
    CHECK(aggregate(partials_of({0.7, 0.7, 0.7, 0.7, 0.7}), w) == Approx(0.7));
    CHECK_THROWS_AS(aggregate(partials_of({std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt}), ones),
                    NothingApplicable);
    w.w = {0, 1, 1, 1, 1};
    CHECK_THROWS_AS(aggregate(partials_of({0.5, std::nullopt, std::nullopt, std::nullopt, std::nullopt}), w),
                    NothingApplicable);
}

TEST_CASE("similarity of a concept with sort knowledge only equals its sort partial") {
    auto store = from_json(fixtures::kSmall);
    auto r = similarity(store, "device", "person");
    CHECK(r.global == Approx(value(r.partials[0]) * 0.5 + value(r.partials[2]) * 0.5));
    auto s = similarity(store, "cpu", "screen");
    CHECK(s.global == value(s.partials[0]));
}

TEST_CASE("self-similarity is 1 except for the restrictive entity form") {
    auto store = from_json(fixtures::kSmall);
    for (ConceptIndex i = 0; i < store.size(); ++i) {
        const auto& id = store.concept_at(i).id;
        auto r = similarity(store, id, id);
        double num = 0.0, den = 0.0;
        for (const auto& p : r.partials) {
            if (!p.applicable()) continue;
            const bool entity_restrictive =
                p.dimension == Dimension::restrictive && store.concept_at(i).kind == ConceptKind::entity;
            CHECK(*p.value == (entity_restrictive ? 0.5 : 1.0));
            num += *p.value;
            den += 1.0;
        }
        CHECK(r.global == Approx(num / den));
    }
}

TEST_CASE("partials match the naive oracle on random ontologies") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 40; ++round) {
        auto doc = oracle::random_ontology(rng);
        oracle::Naive naive(doc);
        auto store = OntologyStore::build(doc);
        for (ConceptIndex i = 0; i < store.size(); ++i) {
            for (ConceptIndex j = 0; j < store.size(); ++j) {
                auto p = compute_partials(store, i, j);
                for (auto d : kAllDimensions) {
                    auto expected = oracle::partial(naive, d, store.concept_at(i).id.value, store.concept_at(j).id.value);
                    auto got = p[static_cast<std::size_t>(d)];
                    REQUIRE(got.has_value() == expected.has_value());
                    if (got) REQUIRE(std::abs(*got - *expected) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("partials are symmetric and bounded") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 20; ++round) {
        auto store = OntologyStore::build(oracle::random_ontology(rng));
        for (ConceptIndex i = 0; i < store.size(); ++i) {
            for (ConceptIndex j = i; j < store.size(); ++j) {
                auto a = compute_partials(store, i, j);
                auto b = compute_partials(store, j, i);
                for (std::size_t d = 0; d < kDimensions; ++d) {
                    REQUIRE(a[d].has_value() == b[d].has_value());
                    if (!a[d]) continue;
                    REQUIRE(*a[d] == Approx(*b[d]).epsilon(1e-12));
                    REQUIRE(*a[d] >= 0.0);
                    REQUIRE(*a[d] <= 1.0);
                }
            }
        }
    }
}

TEST_CASE("fixture: scanner and printer share taxonomy more than actions") {
    const auto& store = fixtures::teaching_ontology();
    CHECK(value(sim_sort(store, "scanner", "printer")) > value(sim_restrictive(store, "scanner", "printer")));
}

TEST_CASE("fixture: teacher and tutorial share little beyond teaching") {
    const auto& store = fixtures::teaching_ontology();
    auto r = similarity(store, "teacher", "tutorial");
    CHECK(value(r.partials[static_cast<std::size_t>(Dimension::restrictive)]) > 0.0);
    CHECK(r.global < 0.3);
}
