#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fincat/catalog.hpp"
#include "fincat/hom.hpp"
#include "fincat/torsion.hpp"

using namespace fincat;

namespace {

ObjPtr zmod(int n) { return cyclic_group(CategoryId::FinAb, n); }

// x mod m as a morphism Z/n -> Z/m (m | n).
Morphism mod_map(const ObjPtr& zn, const ObjPtr& zm) {
  std::vector<int> m(zn->order(0));
  for (int x = 0; x < zn->order(0); ++x) m[x] = x % zm->order(0);
  return make_morphism(zn, zm, {std::move(m)});
}

std::vector<ObjPtr> torsion_free_of(const TorsionInstance& inst,
                                    const std::vector<ObjPtr>& items) {
  std::vector<ObjPtr> out;
  for (const ObjPtr& c : items)
    if (is_torsion_free(inst, c)) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("torsion parts of the three instances") {
  CHECK_THROWS_AS(p_primary(4), PreconditionFailed);
  CHECK_THROWS_AS(torsion_part(nil_red(), zmod(4)), CategoryMismatch);

  CHECK(torsion_part(p_primary(2), zmod(12)).subsets ==
        std::vector<std::vector<int>>{{0, 3, 6, 9}});
  CHECK(torsion_part(nil_red(), cyclic_ring(4)).subsets ==
        std::vector<std::vector<int>>{{0, 2}});

  ObjPtr xm = xmod_trivial(zmod(2), cyclic_group(CategoryId::FinGrp, 2));
  SubobjectHandle t = torsion_part(ab_norm(), xm);
  CHECK(t.subsets == std::vector<std::vector<int>>{{0, 1}, {0}});
  CHECK(is_torsion(ab_norm(), t.sub));
}

TEST_CASE("reflections and short exact sequences") {
  Reflection r = reflect(p_primary(2), zmod(12));
  CHECK(r.obj->key() == zmod(3)->key());
  CHECK(verify_ses(p_primary(2), zmod(12)));

  Reflection rr = reflect(nil_red(), cyclic_ring(4));
  CHECK(rr.obj->key() == cyclic_ring(2)->key());
  for (int a = 0; a < rr.obj->order(0); ++a)  // reduced: no nonzero nilpotents
    if (a != 0) CHECK_FALSE(rr.obj->mul(a, a) == 0);

  Reflection rf = reflect(p_primary(2), zmod(3));
  CHECK(rf.obj->key() == zmod(3)->key());
  CHECK(rf.unit.is_identity());

  // The XMod reflection is the image factorization of the boundary.
  ObjPtr xm = xmod_trivial(zmod(2), cyclic_group(CategoryId::FinGrp, 2));
  Reflection rx = reflect(ab_norm(), xm);
  CHECK(rx.obj->order(0) == 1);
  CHECK(rx.obj->order(1) == 2);
  CHECK(verify_ses(ab_norm(), xm));
}

TEST_CASE("idempotence, exactness and naturality on the catalogs") {
  auto sweep = [](const TorsionInstance& inst, const std::vector<ObjPtr>& items) {
    for (const ObjPtr& c : items) {
      CHECK(is_torsion(inst, torsion_part(inst, c).sub));
      Reflection r = reflect(inst, c);
      CHECK(reflect(inst, r.obj).unit.is_identity());
      CHECK(verify_ses(inst, c));
    }
  };
  std::vector<ObjPtr> ab = generate_all(CategoryId::FinAb, 12).items;
  sweep(p_primary(2), ab);
  sweep(p_primary(3), ab);
  sweep(nil_red(), generate_all(CategoryId::FinCRng, 8).items);
  sweep(ab_norm(), generate_all(CategoryId::XMod, 4).items);

  // L is a functor commuting with the units.
  std::vector<ObjPtr> small = generate_all(CategoryId::FinAb, 8).items;
  TorsionInstance inst = p_primary(2);
  for (const ObjPtr& a : small)
    for (const ObjPtr& b : small)
      for (const Morphism& h : hom_enumerate(a, b).items) {
        Morphism lh = reflect_mor(inst, h);
        CHECK(compose(lh, reflect(inst, a).unit) ==
              compose(reflect(inst, b).unit, h));
      }
}

TEST_CASE("hom-orthogonality of torsion against torsion-free") {
  TorsionInstance inst = p_primary(2);
  std::vector<ObjPtr> items = generate_all(CategoryId::FinAb, 12).items;
  size_t pairs = 0;
  for (const ObjPtr& t : items) {
    if (!is_torsion(inst, t)) continue;
    for (const ObjPtr& x : torsion_free_of(inst, items)) {
      ++pairs;
      for (const Morphism& f : hom_enumerate(t, x).items)
        CHECK(f == zero_morphism(t, x));
    }
  }
  CHECK(pairs > 20);
}

TEST_CASE("semi-left-exactness") {
  TorsionInstance p2 = p_primary(2);
  ObjPtr z12 = zmod(12);
  Reflection r = reflect(p2, z12);
  CHECK(check_semi_left_exact(p2, z12, identity_morphism(r.obj)));
  CHECK(check_semi_left_exact(p2, z12, make_morphism(zmod(3), r.obj,
                                                     {{0, 1, 2}})));
  CHECK_THROWS_AS(check_semi_left_exact(p2, z12, zero_morphism(zmod(4), r.obj)),
                  PreconditionFailed);

  ObjPtr z4r = cyclic_ring(4);
  Reflection rr = reflect(nil_red(), z4r);
  CHECK(check_semi_left_exact(nil_red(), z4r,
                              zero_morphism(zero_object(CategoryId::FinCRng), rr.obj)));

  auto sweep = [](const TorsionInstance& inst, const std::vector<ObjPtr>& items) {
    size_t configs = 0;
    for (const ObjPtr& q : items) {
      Reflection r = reflect(inst, q);
      for (const ObjPtr& d : torsion_free_of(inst, items))
        for (const Morphism& f : hom_enumerate(d, r.obj).items) {
          CHECK(check_semi_left_exact(inst, q, f));
          ++configs;
        }
    }
    CHECK(configs > 10);
  };
  sweep(p_primary(2), generate_all(CategoryId::FinAb, 12).items);
  sweep(nil_red(), generate_all(CategoryId::FinCRng, 8).items);
  sweep(ab_norm(), generate_all(CategoryId::XMod, 4).items);
}

TEST_CASE("heredity") {
  PropertyVerdict ab16 = is_hereditary(p_primary(2),
                                       generate_all(CategoryId::FinAb, 16).items);
  CHECK(ab16.holds == Verdict::ConfirmedOnSample);
  CHECK(ab16.relations_swept > 50);

  PropertyVerdict rng8 = is_hereditary(nil_red(),
                                       generate_all(CategoryId::FinCRng, 8).items);
  CHECK(rng8.holds == Verdict::ConfirmedOnSample);

  std::vector<ObjPtr> xms = {xmod_trivial(zmod(2), cyclic_group(CategoryId::FinGrp, 1)),
                             zero_object(CategoryId::XMod)};
  CHECK(is_hereditary(ab_norm(), xms).holds == Verdict::ConfirmedOnSample);
}

TEST_CASE("stable coequalizers in the torsion-free subcategory") {
  TorsionInstance p2 = p_primary(2);
  ObjPtr z9 = zmod(9);

  Relation d = diagonal(z9);
  QuotientResult amb0 = quotient_by_congruence(z9, d);
  CHECK(check_stable_coequalizer(p2, z9, d,
                                 identity_morphism(reflect(p2, amb0.obj).obj)));

  Relation e = kernel_pair_relation(mod_map(z9, zmod(3)));
  ObjPtr lq = reflect(p2, quotient_by_congruence(z9, e).obj).obj;
  CHECK(lq->key() == zmod(3)->key());
  CHECK(check_stable_coequalizer(p2, z9, e, identity_morphism(lq)));
  CHECK(check_stable_coequalizer(p2, z9, e, zero_morphism(zmod(3), lq)));

  CHECK_THROWS_AS(check_stable_coequalizer(p2, zmod(4), diagonal(zmod(4)),
                                           identity_morphism(zmod(4))),
                  PreconditionFailed);
}

TEST_CASE("stable cokernels of Bourn-normal monomorphisms") {
  Morphism m = make_morphism(zmod(2), zmod(4), {{0, 2}});
  QuotientResult ck = cokernel(m);
  CHECK(check_stable_cokernel(m, identity_morphism(ck.obj)));

  ObjPtr s3 = symmetric3();
  Morphism a3 = make_morphism(cyclic_group(CategoryId::FinGrp, 3), s3, {{0, 3, 4}});
  CHECK(check_stable_cokernel(a3, identity_morphism(cokernel(a3).obj)));

  ObjPtr z2g = cyclic_group(CategoryId::FinGrp, 2);
  Morphism sub2 = make_morphism(z2g, s3, {{0, 1}});  // not Bourn-normal
  CHECK_THROWS_AS(check_stable_cokernel(sub2, identity_morphism(cokernel(sub2).obj)),
                  NotBournNormal);
}

TEST_CASE("trivial-cokernel/normal factorization") {
  Morphism m = make_morphism(zmod(2), zmod(4), {{0, 2}});
  NormalFactorization nf = factor_trivial_cokernel_normal(m);
  CHECK(compose(nf.k, nf.n) == m);
  CHECK(nf.n.is_identity());  // m already normal: first factor is an iso
  CHECK(nf.k.maps == m.maps);

  ObjPtr b = zmod(6);
  Morphism z = zero_morphism(zero_object(CategoryId::FinAb), b);
  NormalFactorization zf = factor_trivial_cokernel_normal(z);
  CHECK(zf.k.dom->order(0) == 1);
  CHECK(compose(zf.k, zf.n) == z);
}

TEST_CASE("effective descent along torsion-free covers") {
  TorsionInstance p2 = p_primary(2);
  Morphism p = mod_map(zmod(9), zmod(3));
  CHECK(check_effective_descent(p2, p, identity_morphism(zmod(3))));

  // Z/6 has 2-torsion, but so does the pullback: the implication holds.
  Morphism f = mod_map(zmod(6), zmod(3));
  SpanResult pb = pullback(p, f);
  CHECK_FALSE(is_torsion_free(p2, pb.obj));
  CHECK(check_effective_descent(p2, p, f));

  size_t configs = 0;
  std::vector<ObjPtr> items = generate_all(CategoryId::FinAb, 12).items;
  for (const ObjPtr& e : torsion_free_of(p2, items))
    for (const ObjPtr& bb : torsion_free_of(p2, items))
      for (const Morphism& cover : hom_enumerate(e, bb).items) {
        if (!cover.surjective()) continue;
        for (const ObjPtr& a : items)
          for (const Morphism& g : hom_enumerate(a, bb).items) {
            CHECK(check_effective_descent(p2, cover, g));
            ++configs;
          }
      }
  CHECK(configs > 100);
}

TEST_CASE("regular-epi / iso / regular-mono factorization") {
  Morphism id = identity_morphism(zmod(4));
  RqkFactorization rf = factor_rqk(id);
  CHECK(compose(rf.k, compose(rf.g, rf.q)) == id);
  CHECK(rf.q.is_identity());

  Morphism f = mod_map(zmod(4), zmod(2));
  RqkFactorization rs = factor_rqk(f);
  CHECK(compose(rs.k, compose(rs.g, rs.q)) == f);
  CHECK(rs.q.maps == f.maps);
  CHECK(rs.k.dom->order(0) == 2);

  Morphism z = zero_morphism(zmod(4), zmod(6));
  RqkFactorization rz = factor_rqk(z);
  CHECK(compose(rz.k, compose(rz.g, rz.q)) == z);
  CHECK(rz.g.dom->order(0) == 1);
  CHECK(rz.k.dom->order(0) == 1);

  CHECK_THROWS_AS(factor_rqk(identity_morphism(symmetric3())), CategoryMismatch);
}
