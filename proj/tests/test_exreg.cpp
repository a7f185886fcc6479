#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fincat/catalog.hpp"
#include "fincat/exreg.hpp"
#include "fincat/hom.hpp"
#include "fincat/propcheck.hpp"

using namespace fincat;

namespace {

Relation rel(const ObjPtr& x, PairSet ps) { return make_relation(x, x, {std::move(ps)}); }

// x ~ y iff x = y (mod 2) on Z/4.
Relation mod2_congruence(const ObjPtr& z4) {
  ObjPtr z2 = cyclic_group(z4->category(), 2);
  return kernel_pair_relation(make_morphism(z4, z2, {{0, 1, 0, 1}}));
}

// The ({0,2} <| Z/4) object with the diagonal on N and the mod-2 congruence
// on G: the standard witness whose comparison image has zero boundary.
ExObject norm_witness() {
  ObjPtr base = norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2});
  PairSet eg = {{0, 0}, {0, 2}, {1, 1}, {1, 3}, {2, 0}, {2, 2}, {3, 1}, {3, 3}};
  return make_ex_object(base, make_relation(base, base, {{{0, 0}, {1, 1}}, eg}));
}

}  // namespace

TEST_CASE("embedding is fully faithful on small objects") {
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  ExObject e = embed(z2);
  CHECK(e.eq == diagonal(z2));

  ExMorphism id = embed_mor(identity_morphism(z2));
  CHECK(id.rel == diagonal(z2));
  CHECK(ex_morphism_laws_hold(e, e, id.rel));

  ExHomList el = ex_hom_enumerate(e, e);
  HomList hl = hom_enumerate(z2, z2);
  REQUIRE(hl.items.size() == 2);
  REQUIRE(el.items.size() == 2);
  for (const Morphism& f : hl.items) {
    bool found = false;
    for (const ExMorphism& m : el.items)
      if (m.rel == graph(f)) found = true;
    CHECK(found);
  }
}

TEST_CASE("identity, composition and isomorphisms") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  ExObject a{z4, mod2_congruence(z4)};
  ExMorphism id = ex_identity(a);
  CHECK(id.rel == a.eq);
  for (const ExMorphism& f : ex_hom_enumerate(a, a).items) {
    CHECK(ex_compose(id, f) == f);
    CHECK(ex_compose(f, id) == f);
  }

  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  ExObject collapsed{z2, total_relation(z2)};
  CHECK(ex_identity(collapsed).rel == total_relation(z2));
  ExHomList to_zero = ex_hom_enumerate(collapsed, embed(zero_object(CategoryId::FinAb)));
  REQUIRE(to_zero.items.size() == 1);
  CHECK(ex_is_iso(to_zero.items[0]));

  ExMorphism m = embed_mor(make_morphism(z2, z4, {{0, 2}}));
  CHECK(ex_is_mono(m));
  CHECK_FALSE(ex_is_iso(m));
  CHECK_FALSE(ex_is_regular_epi(m));

  CHECK_THROWS_AS(make_ex_morphism(embed(z4), embed(z4), rel(z4, {{0, 0}})),
                  LawViolation);
}

TEST_CASE("category laws over bases of order <= 4") {
  std::vector<ExObject> objs;
  for (int n : {2, 4})
    for (ExObject& a : ex_object_enumerate(cyclic_group(CategoryId::FinAb, n)))
      objs.push_back(std::move(a));
  REQUIRE(objs.size() == 5);  // 2 congruences on Z/2, 3 on Z/4

  size_t triples = 0;
  for (const ExObject& a : objs)
    for (const ExObject& b : objs) {
      ExHomList ab = ex_hom_enumerate(a, b);
      for (const ExMorphism& f : ab.items) {
        CHECK(ex_compose(ex_identity(b), f) == f);
        CHECK(ex_compose(f, ex_identity(a)) == f);
      }
      for (const ExObject& c : objs)
        for (const ExMorphism& f : ab.items)
          for (const ExMorphism& g : ex_hom_enumerate(b, c).items) {
            ExMorphism gf = ex_compose(g, f);
            for (const ExMorphism& h : ex_hom_enumerate(c, c).items) {
              CHECK(ex_compose(h, gf) == ex_compose(ex_compose(h, g), f));
              ++triples;
            }
          }
    }
  CHECK(triples > 100);
}

TEST_CASE("reflection onto the base instance") {
  ObjPtr z3 = cyclic_group(CategoryId::FinAb, 3);
  ExReflection r0 = ex_reflect(embed(z3));
  CHECK(r0.obj->key() == z3->key());
  CHECK(r0.unit.rel == graph(identity_morphism(z3)));

  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  ExReflection r1 = ex_reflect(make_ex_object(z4, mod2_congruence(z4)));
  CHECK(r1.obj->key() == cyclic_group(CategoryId::FinAb, 2)->key());
  CHECK(ex_is_regular_epi(r1.unit));

  // N-component quotient is all of N, but the reflected boundary image is 0.
  ExReflection rn = ex_reflect(norm_witness());
  CHECK(rn.obj->key() == norm_object(cyclic_group(CategoryId::FinGrp, 2), {0})->key());
  CHECK(ex_is_regular_epi(rn.unit));
}

TEST_CASE("comparison into crossed modules") {
  ObjPtr n = norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2});
  CHECK(norm_to_xmod(embed(n))->key() == norm_as_xmod(n)->key());

  ObjPtr w = norm_to_xmod(norm_witness());
  ObjPtr z2ab = cyclic_group(CategoryId::FinAb, 2);
  ObjPtr z2 = cyclic_group(CategoryId::FinGrp, 2);
  CHECK(w->key() == xmod_trivial(z2ab, z2)->key());
  for (int t = 0; t < 2; ++t) CHECK(w->bnd(t) == 0);
  CHECK_THROWS(xmod_as_norm(w));  // not the image of any Norm object

  ObjPtr full = norm_object(cyclic_group(CategoryId::FinGrp, 2), {0, 1});
  ExObject collapsed{full, total_relation(full)};
  CHECK(norm_to_xmod(collapsed)->key() == zero_object(CategoryId::XMod)->key());

  CHECK_THROWS_AS(norm_to_xmod(embed(cyclic_group(CategoryId::FinAb, 2))),
                  CategoryMismatch);
}

TEST_CASE("characterization audit") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  ExObject a = make_ex_object(z4, mod2_congruence(z4));

  ExRegReport rep = verify_exreg_characterization({a}, {z2, z4});
  CHECK(rep.ok());
  CHECK(rep.ex_objects == 1);
  CHECK(rep.comparisons > 2);

  ExRegReport trivial = verify_exreg_characterization({embed(z2)}, {z2});
  CHECK(trivial.ok());

  ObjPtr nbase = norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2});
  ExRegReport norm_rep = verify_exreg_characterization({norm_witness()}, {nbase});
  CHECK(norm_rep.covered);
  CHECK(norm_rep.ok());
}

TEST_CASE("Mal'tsev property lifts to the completion") {
  for (CategoryId cat : {CategoryId::FinAb, CategoryId::FinGrp}) {
    size_t swept = 0;
    for (const ObjPtr& base : generate_all(cat, 4).items)
      for (const ExObject& a : ex_object_enumerate(base))
        for (const Relation& r : ex_relation_enumerate(a, RelFilter::Reflexive).items) {
          CHECK(ex_rel_symmetric(r));
          CHECK(rel_le(compose_rel(r, r), r));
          ++swept;
        }
    CHECK(swept > 10);
  }

  // Over sets the lift fails: a reflexive order relation survives as-is.
  ObjPtr s2 = discrete_set(2);
  ExObject a = embed(s2);
  bool refuted = false;
  for (const Relation& r : ex_relation_enumerate(a, RelFilter::Reflexive).items)
    if (!ex_rel_symmetric(r)) refuted = true;
  CHECK(refuted);
}

TEST_CASE("protomodularity lifts to the completion") {
  size_t swept = 0, pseudo = 0;
  for (const ObjPtr& base : generate_all(CategoryId::FinGrp, 4).items)
    for (const ExObject& a : ex_object_enumerate(base)) {
      Relation cover{a.base, a.base, a.eq.pairs};
      for (const Relation& r : ex_relation_enumerate(a, RelFilter::Any).items) {
        ++swept;
        if (ex_rel_left_pseudoreflexive(r) && ex_rel_left_zero_symmetric(r)) {
          ++pseudo;
          CHECK(ex_rel_symmetric(r));
          CHECK(ex_rel_pseudoreflexive(r));
        }
        // The pullback relation along the covering epi coincides with r's
        // saturated pair-set and inherits left pseudoreflexivity.
        Relation s = compose_rel(opposite(cover), compose_rel(r, cover));
        CHECK(s == r);
        if (ex_rel_left_pseudoreflexive(r))
          CHECK(ex_rel_left_pseudoreflexive(s));
      }
    }
  CHECK(swept > 20);
  CHECK(pseudo > 5);
}

TEST_CASE("comparison is bijective on a bounded sample") {
  std::vector<ObjPtr> xmods;
  for (const ObjPtr& x : generate_all(CategoryId::XMod, 4).items)
    if (x->order(0) <= 2) xmods.push_back(x);
  REQUIRE(xmods.size() >= 10);

  std::set<std::string> image;
  for (const ObjPtr& x : xmods) {
    ObjPtr back = norm_to_xmod(xmod_to_norm_witness(x));
    CHECK(back->key() == x->key());
    image.insert(back->key());
  }
  CHECK(image.size() == xmods.size());  // injective on the witness sample
  for (const ObjPtr& x : xmods) CHECK(image.count(x->key()) == 1);  // surjective
}
