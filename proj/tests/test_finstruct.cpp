#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "fincat/catalog.hpp"
#include "fincat/factorize.hpp"
#include "fincat/hom.hpp"
#include "fincat/limits.hpp"
#include "fincat/relation.hpp"

using namespace fincat;

namespace {

// The mod-2 surjection Z/4 -> Z/2.
Morphism mod2_surjection(CategoryId cat) {
  return make_morphism(cyclic_group(cat, 4), cyclic_group(cat, 2), {{0, 1, 0, 1}});
}

ObjPtr relabel(const ObjPtr& x, const std::vector<std::vector<int>>& perm) {
  std::map<std::string, Table> tables;
  std::vector<std::vector<int>> inv(perm.size());
  for (size_t s = 0; s < perm.size(); ++s) {
    inv[s].resize(perm[s].size());
    for (size_t i = 0; i < perm[s].size(); ++i) inv[s][perm[s][i]] = static_cast<int>(i);
  }
  for (const auto& [name, tab] : x->tables()) {
    int s0 = (name == "op1" || name == "inv1") ? 1 : 0;
    int s1 = s0;
    int srow = s0, scol = s0, sval = s0;
    if (name == "incl" || name == "bnd") sval = 1;
    if (name == "act") {
      srow = 1;
      scol = 0;
      sval = 0;
    }
    (void)s1;
    Table t(tab.size(), std::vector<int>(tab[0].size()));
    if (tab.size() == 1) {  // unary
      for (size_t a = 0; a < tab[0].size(); ++a)
        t[0][perm[srow][a]] = perm[sval][tab[0][a]];
    } else {
      for (size_t a = 0; a < tab.size(); ++a)
        for (size_t b = 0; b < tab[0].size(); ++b)
          t[perm[srow][a]][perm[scol][b]] = perm[sval][tab[a][b]];
    }
    tables[name] = std::move(t);
  }
  return make_object(x->category(), x->sorts(), std::move(tables));
}

}  // namespace

TEST_CASE("make_object validates cyclic tables") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  CHECK(z4->order(0) == 4);
  CHECK(z4->op(0, 3, 2) == 1);
  CHECK(z4->inv(0, 1) == 3);
}

TEST_CASE("make_object rejects a non-associative table") {
  // op(a,b) = b except op(1,2) = 0: (1*2)*2 = 0*2 = 2 but 1*(2*2) = 2... pick
  // a table that genuinely breaks associativity while keeping 0 an identity.
  Table op = {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}};  // op(2,2)=2 breaks the cyclic law
  Table inv = {{0, 2, 1}};
  CHECK_THROWS_AS(make_object(CategoryId::FinGrp, {3},
                              {{"op", op}, {"inv", inv}}),
                  AxiomViolation);
}

TEST_CASE("Norm object {0,2} inside Z/4") {
  ObjPtr n = norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2});
  CHECK(n->sorts() == std::vector<int>{2, 4});
  CHECK(n->incl(1) == 2);
  CHECK(n->op(0, 1, 1) == 0);
}

TEST_CASE("invalid Norm data is rejected") {
  // {0,1} is not a subgroup of Z/4; the inclusion is not a homomorphism.
  ObjPtr z4 = cyclic_group(CategoryId::FinGrp, 4);
  ObjPtr z2 = cyclic_group(CategoryId::FinGrp, 2);
  CHECK_THROWS_AS(make_object(CategoryId::Norm, {2, 4},
                              {{"op0", z2->tables().at("op")},
                               {"inv0", z2->tables().at("inv")},
                               {"op1", z4->tables().at("op")},
                               {"inv1", z4->tables().at("inv")},
                               {"incl", Table{{0, 1}}}}),
                  AxiomViolation);
}

TEST_CASE("hom counts on small cyclic groups") {
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  ObjPtr z3 = cyclic_group(CategoryId::FinAb, 3);
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  CHECK(hom_enumerate(z2, z2).items.size() == 2);
  CHECK(hom_enumerate(z4, z2).items.size() == 2);
  HomList h34 = hom_enumerate(z3, z4);
  REQUIRE(h34.items.size() == 1);
  CHECK(h34.items[0].is_identity() == false);
  CHECK(h34.items[0].maps[0] == std::vector<int>{0, 0, 0});
  CHECK_FALSE(h34.truncated);
  // Lexicographic order: zero map first.
  CHECK(hom_enumerate(z2, z2).items[0].maps[0] == std::vector<int>{0, 0});
}

TEST_CASE("hom enumeration respects the cap") {
  ObjPtr s = discrete_set(3);
  HomList h = hom_enumerate(s, s, 5);
  CHECK(h.items.size() == 5);
  CHECK(h.truncated);
  CHECK(hom_enumerate(s, s).items.size() == 27);
}

TEST_CASE("product of Z/2 with itself") {
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  SpanResult p = product(z2, z2);
  CHECK(p.obj->order(0) == 4);
  // Componentwise addition: (1,0)+(0,1) = (1,1).
  CHECK(p.obj->op(0, pair_code(2, 1, 0), pair_code(2, 0, 1)) == pair_code(2, 1, 1));
  CHECK(p.proj1.maps[0] == std::vector<int>{0, 0, 1, 1});
  CHECK(p.proj2.maps[0] == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("pullback of the mod-2 surjection against itself has order 8") {
  Morphism p = mod2_surjection(CategoryId::FinAb);
  SpanResult pb = pullback(p, p);
  CHECK(pb.obj->order(0) == 8);
  for (int i = 0; i < 8; ++i)
    CHECK(p.maps[0][pb.proj1.maps[0][i]] == p.maps[0][pb.proj2.maps[0][i]]);
}

TEST_CASE("kernel of the mod-2 surjection is {0,2}") {
  SubobjectHandle k = kernel(mod2_surjection(CategoryId::FinAb));
  CHECK(k.subsets[0] == std::vector<int>{0, 2});
  CHECK(k.sub->order(0) == 2);
}

TEST_CASE("universal property audit for products on probe objects") {
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  SpanResult p = product(z2, z4);
  for (const ObjPtr& probe : {z2, z4}) {
    for (const Morphism& f : hom_enumerate(probe, z2).items)
      for (const Morphism& g : hom_enumerate(probe, z4).items) {
        int found = 0;
        for (const Morphism& m : hom_enumerate(probe, p.obj).items)
          if (compose(p.proj1, m) == f && compose(p.proj2, m) == g) ++found;
        CHECK(found == 1);
      }
  }
}

TEST_CASE("image factorization of the identity and of the zero map") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  Factorization fi = image_factorize(identity_morphism(z4));
  CHECK(fi.epi.is_identity());
  CHECK(fi.mono.is_identity());
  Factorization fz = image_factorize(zero_morphism(z4, z4));
  CHECK(fz.epi.cod->order(0) == 1);
  CHECK(fz.mono.dom->order(0) == 1);
}

TEST_CASE("Norm image factorization is componentwise") {
  ObjPtr a = norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2});
  ObjPtr b = norm_object(cyclic_group(CategoryId::FinGrp, 2), {0, 1});
  // Compatibility with the inclusions forces the N-component over the mod-2
  // surjection to be zero (2 maps to 0 in Z/2), so the image is ({0} <| Z/2).
  Morphism f = make_morphism(a, b, {{0, 0}, {0, 1, 0, 1}});
  Factorization fac = image_factorize(f);
  CHECK(fac.epi.surjective());
  CHECK(fac.mono.injective());
  CHECK(fac.mono.dom->sorts() == std::vector<int>{1, 2});
  CHECK(compose(fac.mono, fac.epi) == f);

  // Componentwise surjection (Z/4 <| Z/4) -> (Z/2 <| Z/2) has identity mono.
  ObjPtr a2 = norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 1, 2, 3});
  Morphism g = make_morphism(a2, b, {{0, 1, 0, 1}, {0, 1, 0, 1}});
  Factorization fg = image_factorize(g);
  CHECK(fg.epi.surjective());
  CHECK(fg.mono.is_identity());
}

TEST_CASE("image factorization is idempotent") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);
  for (const Morphism& f : hom_enumerate(z4, z2).items) {
    Factorization fac = image_factorize(f);
    Factorization again = image_factorize(compose(fac.mono, fac.epi));
    CHECK(again.epi == fac.epi);
    CHECK(again.mono == fac.mono);
  }
}

TEST_CASE("cokernel examples") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  ObjPtr z2 = cyclic_group(CategoryId::FinAb, 2);

  QuotientResult triv = cokernel(zero_morphism(zero_object(CategoryId::FinAb), z4));
  CHECK(triv.obj->key() == z4->key());
  CHECK(triv.q.is_identity());

  Morphism incl = make_morphism(z2, z4, {{0, 2}});
  QuotientResult q = cokernel(incl);
  CHECK(q.obj->key() == z2->key());
  CHECK(q.q.maps[0] == std::vector<int>{0, 1, 0, 1});

  // S3: the order-3 subgroup is normal; the quotient is Z/2.
  ObjPtr s3 = symmetric3();
  ObjPtr z3 = cyclic_group(CategoryId::FinGrp, 3);
  HomList hl = hom_enumerate(z3, s3);
  Morphism em = hl.items.back();  // an injective hom onto the 3-cycles
  REQUIRE(em.injective());
  QuotientResult qs = cokernel(em);
  CHECK(qs.obj->key() == cyclic_group(CategoryId::FinGrp, 2)->key());
}

TEST_CASE("kernel of a cokernel is the normal closure of the image") {
  ObjPtr s3 = symmetric3();
  ObjPtr z2 = cyclic_group(CategoryId::FinGrp, 2);
  for (const Morphism& f : hom_enumerate(z2, s3).items) {
    QuotientResult q = cokernel(f);
    SubobjectHandle k = kernel(q.q);
    // The normal closure of a transposition in S3 is all of A3's complement's
    // closure, i.e. S3 itself; of the identity it is trivial.
    std::vector<char> in(6, 0);
    for (int x : k.subsets[0]) in[x] = 1;
    for (int a = 0; a < 6; ++a) CHECK(in[a] == (q.q.maps[0][a] == 0));
  }
}

TEST_CASE("quotient by congruence round-trips with kernel pairs") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);

  QuotientResult qd = quotient_by_congruence(z4, diagonal(z4));
  CHECK(qd.q.is_identity());

  PairSet mod2;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if ((a - b) % 2 == 0) mod2.push_back({a, b});
  Relation e = make_relation(z4, z4, {mod2});
  QuotientResult q = quotient_by_congruence(z4, e);
  CHECK(q.obj->key() == cyclic_group(CategoryId::FinAb, 2)->key());
  CHECK(kernel_pair_relation(q.q) == e);

  QuotientResult qt = quotient_by_congruence(z4, total_relation(z4));
  CHECK(qt.obj->order(0) == 1);
}

TEST_CASE("quotient by congruence refuses Norm") {
  ObjPtr n = norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2});
  CHECK_THROWS_AS(quotient_by_congruence(n, diagonal(n)), NotExactInstance);
}

TEST_CASE("subobject enumeration") {
  ObjPtr z4 = cyclic_group(CategoryId::FinAb, 4);
  SubobjectList s = subobject_enumerate(z4);
  REQUIRE(s.items.size() == 3);
  CHECK(s.items[0].subsets[0] == std::vector<int>{0});
  CHECK(s.items[1].subsets[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(s.items[2].subsets[0] == std::vector<int>{0, 2});

  CHECK(subobject_enumerate(pointed_set(2)).items.size() == 2);

  ObjPtr n = norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2});
  for (const SubobjectHandle& h : subobject_enumerate(n).items) {
    // N' sits inside {0,2} and is normal in G'.
    for (int i : h.subsets[0]) CHECK((n->incl(i) == 0 || n->incl(i) == 2));
    CHECK(subobject_valid(n, h.subsets));
  }
}

TEST_CASE("canonical key is invariant under relabeling") {
  std::mt19937 rng(7);
  std::vector<ObjPtr> objs = {
      cyclic_group(CategoryId::FinAb, 6), symmetric3(), dihedral4(), quaternion8(),
      cyclic_ring(4), norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2}),
      xmod_trivial(cyclic_group(CategoryId::FinGrp, 2), cyclic_group(CategoryId::FinGrp, 3))};
  for (const ObjPtr& x : objs) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::vector<int>> perm(x->sorts().size());
      for (size_t s = 0; s < perm.size(); ++s) {
        perm[s].resize(x->order(static_cast<int>(s)));
        for (size_t i = 0; i < perm[s].size(); ++i) perm[s][i] = static_cast<int>(i);
        // 0 must stay the point in pointed instances.
        std::shuffle(perm[s].begin() + (is_pointed(x->category()) ? 1 : 0),
                     perm[s].end(), rng);
      }
      CHECK(relabel(x, perm)->key() == x->key());
    }
  }
  // Distinct iso classes get distinct keys.
  CHECK(dihedral4()->key() != quaternion8()->key());
  CHECK(cyclic_group(CategoryId::FinAb, 4)->key() !=
        product(cyclic_group(CategoryId::FinAb, 2), cyclic_group(CategoryId::FinAb, 2))
            .obj->key());
}

TEST_CASE("structure json round-trips bit-exactly") {
  std::vector<ObjPtr> objs = {cyclic_group(CategoryId::FinAb, 4), symmetric3(),
                              cyclic_ring(3), pointed_set(3),
                              norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2})};
  for (const ObjPtr& x : objs) {
    nlohmann::json j = x->to_json();
    ObjPtr y = object_from_json(j);
    CHECK(y->to_json().dump() == j.dump());
    CHECK(y->key() == x->key());
  }
  CHECK_THROWS_AS(object_from_json(nlohmann::json{{"category", "NoSuch"}}), ParseError);
}

TEST_CASE("catalog counts match the classification of small groups") {
  // Abelian group counts for orders 1..16.
  const std::vector<size_t> ab = {1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5};
  Catalog a16 = generate_all(CategoryId::FinAb, 16);
  for (int n = 1; n <= 16; ++n) {
    size_t c = 0;
    for (const ObjPtr& o : a16.items)
      if (o->order(0) == n) ++c;
    CHECK(c == ab[n - 1]);
  }
  // All groups of orders 1..8: 1,1,1,2,1,2,1,5.
  const std::vector<size_t> grp = {1, 1, 1, 2, 1, 2, 1, 5};
  Catalog g8 = generate_all(CategoryId::FinGrp, 8);
  for (int n = 1; n <= 8; ++n) {
    size_t c = 0;
    for (const ObjPtr& o : g8.items)
      if (o->order(0) == n) ++c;
    CHECK(c == grp[n - 1]);
  }
}

TEST_CASE("catalog corpus files verify their content hash") {
  Catalog c = generate_all(CategoryId::FinAb, 6);
  nlohmann::json j = catalog_to_json(c);
  Catalog back = catalog_from_json(j);
  REQUIRE(back.items.size() == c.items.size());
  for (size_t i = 0; i < c.items.size(); ++i)
    CHECK(back.items[i]->key() == c.items[i]->key());
  j["items"].push_back(c.items[0]->to_json());
  CHECK_THROWS_AS(catalog_from_json(j), ParseError);
}

TEST_CASE("builtin names resolve to the documented objects") {
  CHECK(builtin(CategoryId::FinSet, "5")->order(0) == 5);
  CHECK(builtin(CategoryId::FinPtSet, "3")->order(0) == 3);
  CHECK(builtin(CategoryId::FinAb, "Z/12")->key() ==
        cyclic_group(CategoryId::FinAb, 12)->key());
  CHECK(builtin(CategoryId::FinGrp, "S3")->key() == symmetric3()->key());
  CHECK(builtin(CategoryId::FinCRng, "Z/4")->key() == cyclic_ring(4)->key());
  ObjPtr nrm = builtin(CategoryId::Norm, "A3 <| S3");
  CHECK(nrm->order(0) == 3);
  CHECK(nrm->order(1) == 6);
  CHECK(builtin(CategoryId::XMod, "{0,2} <| Z/4")->sorts() ==
        std::vector<int>{2, 4});
  CHECK_THROWS_AS(builtin(CategoryId::FinAb, "Z/"), UnknownName);
  CHECK_THROWS_AS(builtin(CategoryId::FinGrp, "M11"), UnknownName);
}
