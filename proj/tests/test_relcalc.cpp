#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fincat/catalog.hpp"
#include "fincat/hom.hpp"
#include "fincat/relation.hpp"

using namespace fincat;

namespace {

Morphism mod2(CategoryId cat) {
  return make_morphism(cyclic_group(cat, 4), cyclic_group(cat, 2), {{0, 1, 0, 1}});
}

}  // namespace

TEST_CASE("graph examples") {
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  CHECK(graph(identity_morphism(z2)).pairs[0] == PairSet{{0, 0}, {1, 1}});
  Morphism z = zero_morphism(cyclic_group(CategoryId::FinAb, 4), z2);
  CHECK(graph(z).pairs[0] == PairSet{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(graph(mod2(CategoryId::FinAb)).pairs[0] == PairSet{{0, 0}, {1, 1}, {2, 0}, {3, 1}});
}

TEST_CASE("opposite examples and involution") {
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  Relation d = diagonal(z2);
  CHECK(opposite(d) == d);
  Relation g = graph(mod2(CategoryId::FinAb));
  CHECK_FALSE(is_map(opposite(g)).has_value());
  for (const Relation& r : relation_enumerate(pointed_set(3), RelFilter::Any).items)
    CHECK(opposite(opposite(r)) == r);
}

TEST_CASE("composition examples") {
  ObjPtr x = pointed_set(3);
  for (const Relation& r : relation_enumerate(x, RelFilter::Any).items) {
    CHECK(compose_rel(diagonal(x), r) == r);
    CHECK(compose_rel(r, diagonal(x)) == r);
  }
  // graph is functorial.
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  for (const Morphism& f : hom_enumerate(z4, z4).items)
    for (const Morphism& g : hom_enumerate(z4, z2).items)
      CHECK(compose_rel(graph(g), graph(f)) == graph(compose(g, f)));
  // pp° = 1 for the regular epi p.
  Morphism p = mod2(CategoryId::FinAb);
  CHECK(compose_rel(graph(p), opposite(graph(p))) == diagonal(p.cod));
  CHECK_THROWS_AS(compose_rel(graph(p), graph(p)), DomainMismatch);
}

TEST_CASE("order and meet") {
  ObjPtr x = pointed_set(3);
  Relation r = make_relation(x, x, {{{0, 0}, {1, 1}, {1, 2}}});
  CHECK(leq(diagonal(x), total_relation(x)) == RelOrder::LE);
  CHECK(meet(r, opposite(r)).pairs[0] == PairSet{{0, 0}, {1, 1}});
  CHECK(meet(r, r) == r);
  CHECK(leq(r, opposite(r)) == RelOrder::INCOMPARABLE);
  Relation refl = make_relation(x, x, {{{0, 0}, {1, 1}, {2, 2}, {1, 2}}});
  CHECK(leq(diagonal(x), refl) == RelOrder::LE);
  CHECK(leq(refl, diagonal(x)) == RelOrder::GE);
}

TEST_CASE("is_map recognizes graphs and only graphs") {
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  auto m = is_map(diagonal(z2));
  REQUIRE(m.has_value());
  CHECK(m->is_identity());
  CHECK_FALSE(is_map(make_relation(z2, z2, {{{0, 0}}})).has_value());
  Morphism p = mod2(CategoryId::FinAb);
  CHECK_FALSE(is_map(kernel_pair_relation(p)).has_value());
  for (const Morphism& f : hom_enumerate(p.dom, z2).items) {
    auto back = is_map(graph(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
}

TEST_CASE("relation lemma on identity, surjection, inclusion") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  RelationLemmaReport ri = check_relation_lemma(identity_morphism(z4));
  CHECK(ri.kernel_pair_ok);
  CHECK(ri.regular_epi_iff);

  Morphism p = mod2(CategoryId::FinAb);
  RelationLemmaReport rp = check_relation_lemma(p);
  CHECK(rp.kernel_pair_ok);
  CHECK(rp.regular_epi_iff);
  Relation pop = compose_rel(opposite(graph(p)), graph(p));
  PairSet expect;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (((a - b) % 2 + 2) % 2 == 0) expect.push_back({a, b});
  CHECK(pop.pairs[0] == expect);

  Morphism incl = make_morphism(cyclic_group(CategoryId::FinAb, 2), z4, {{0, 2}});
  RelationLemmaReport rm = check_relation_lemma(incl);
  CHECK(rm.kernel_pair_ok);
  CHECK(rm.regular_epi_iff);
  CHECK(compose_rel(graph(incl), opposite(graph(incl))).pairs[0] ==
        PairSet{{0, 0}, {2, 2}});
}

TEST_CASE("relation lemma across every hom between small abelian groups") {
  Catalog cat = generate_all(CategoryId::FinAb, 6);
  for (const ObjPtr& a : cat.items)
    for (const ObjPtr& b : cat.items)
      for (const Morphism& f : hom_enumerate(a, b).items) {
        RelationLemmaReport r = check_relation_lemma(f);
        CHECK(r.kernel_pair_ok);
        CHECK(r.regular_epi_iff);
      }
}

TEST_CASE("relation enumeration counts") {
  CHECK(relation_enumerate(cyclic_group(CategoryId::FinAb, 4), RelFilter::Equivalence)
            .items.size() == 3);
  CHECK(relation_enumerate(discrete_set(2), RelFilter::Reflexive).items.size() == 4);
  CHECK(relation_enumerate(zero_object(CategoryId::FinGrp), RelFilter::Equivalence)
            .items.size() == 1);
  // All 16 relations on a 2-element set; cap truncation flagged.
  RelationList all = relation_enumerate(discrete_set(2), RelFilter::Any);
  CHECK(all.items.size() == 16);
  RelationList capped = relation_enumerate(discrete_set(2), RelFilter::Any, 5);
  CHECK(capped.items.size() == 5);
  CHECK(capped.truncated);
}

TEST_CASE("relation algebra laws on a 2-element set") {
  RelationList all = relation_enumerate(discrete_set(2), RelFilter::Any);
  for (const Relation& r : all.items)
    for (const Relation& s : all.items) {
      CHECK(opposite(compose_rel(s, r)) == compose_rel(opposite(r), opposite(s)));
      for (const Relation& t : all.items) {
        CHECK(compose_rel(t, compose_rel(s, r)) == compose_rel(compose_rel(t, s), r));
        // Monotonicity.
        if (rel_le(r, s))
          CHECK(rel_le(compose_rel(t, r), compose_rel(t, s)));
      }
    }
}

TEST_CASE("relation algebra laws on group relations") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  RelationList all = relation_enumerate(z4, RelFilter::Any);
  for (const Relation& r : all.items)
    for (const Relation& s : all.items) {
      CHECK(opposite(compose_rel(s, r)) == compose_rel(opposite(r), opposite(s)));
      if (rel_le(r, s))
        for (const Relation& t : all.items)
          CHECK(rel_le(compose_rel(t, r), compose_rel(t, s)));
    }
}

TEST_CASE("relation json serialization") {
  ObjPtr x = pointed_set(3);
  Relation r = make_relation(x, x, {{{0, 0}, {1, 2}}});
  nlohmann::json j = r.to_json();
  CHECK(j["dom"] == x->key());
  CHECK(j["cod"] == x->key());
  CHECK(j["pairs"] == nlohmann::json::parse("[[0,0],[1,2]]"));
}

TEST_CASE("invalid relations are rejected") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  // {(1,1)} is not a subgroup of Z/4 x Z/4 (misses (0,0)).
  CHECK_THROWS_AS(make_relation(z4, z4, {{{1, 1}}}), AxiomViolation);
}
