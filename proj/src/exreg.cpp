#include "fincat/exreg.hpp"

#include <algorithm>

#include "fincat/hom.hpp"
#include "fincat/propcheck.hpp"
#include "fincat/subobject.hpp"

namespace fincat {

namespace {

int index_in(const std::vector<int>& sorted, int x) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                          sorted.begin());
}

// Dense class ids ordered by minimal representative.
std::vector<std::vector<int>> eq_classes(const ExObject& a) {
  std::vector<std::vector<int>> class_of(a.eq.pairs.size());
  for (size_t s = 0; s < class_of.size(); ++s) {
    int n = a.base->order(static_cast<int>(s));
    std::vector<int> cmin(n);
    for (int x = 0; x < n; ++x) {
      int mn = x;
      for (int y = 0; y < x; ++y)
        if (a.eq.contains(static_cast<int>(s), x, y)) mn = std::min(mn, y);
      cmin[x] = mn;
    }
    std::vector<int> mins = cmin;
    std::sort(mins.begin(), mins.end());
    mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
    class_of[s].resize(n);
    for (int x = 0; x < n; ++x) class_of[s][x] = index_in(mins, cmin[x]);
  }
  return class_of;
}

}  // namespace

nlohmann::json ExObject::to_json() const {
  return {{"base", base->key()}, {"eq", eq.to_json()["pairs"]}};
}

bool operator==(const ExObject& a, const ExObject& b) {
  return same_object(a.base, b.base) && a.eq.pairs == b.eq.pairs;
}

ExObject make_ex_object(ObjPtr base, Relation eq) {
  if (!same_object(eq.dom, base) || !eq.is_endorelation())
    throw NotEndorelation("eq must be an endorelation on the base");
  ExObject a{std::move(base), std::move(eq)};
  if (!is_equivalence(a.eq)) throw NotEquivalence("eq must be an equivalence relation");
  return a;
}

bool operator==(const ExMorphism& a, const ExMorphism& b) {
  return a.dom == b.dom && a.cod == b.cod && a.rel.pairs == b.rel.pairs;
}

bool ex_morphism_laws_hold(const ExObject& dom, const ExObject& cod, const Relation& rel) {
  if (!same_object(rel.dom, dom.base) || !same_object(rel.cod, cod.base)) return false;
  Relation saturated = compose_rel(cod.eq, compose_rel(rel, dom.eq));
  if (!(saturated == rel)) return false;                                // bimodule
  if (!rel_le(dom.eq, compose_rel(opposite(rel), rel))) return false;  // entire
  return rel_le(compose_rel(rel, opposite(rel)), cod.eq);              // deterministic
}

ExMorphism make_ex_morphism(ExObject dom, ExObject cod, Relation rel) {
  if (!ex_morphism_laws_hold(dom, cod, rel))
    throw LawViolation("relation does not define a completion morphism");
  return {std::move(dom), std::move(cod), std::move(rel)};
}

ExObject embed(const ObjPtr& x) { return {x, diagonal(x)}; }

ExMorphism embed_mor(const Morphism& f) {
  return make_ex_morphism(embed(f.dom), embed(f.cod), graph(f));
}

ExMorphism ex_identity(const ExObject& a) { return {a, a, a.eq}; }

ExMorphism ex_compose(const ExMorphism& g, const ExMorphism& f) {
  if (!(f.cod == g.dom)) throw DomainMismatch("completion morphisms not composable");
  return make_ex_morphism(f.dom, g.cod, compose_rel(g.rel, f.rel));
}

bool ex_is_iso(const ExMorphism& f) {
  return ex_morphism_laws_hold(f.cod, f.dom, opposite(f.rel));
}

bool ex_is_mono(const ExMorphism& f) {
  return compose_rel(opposite(f.rel), f.rel) == f.dom.eq;
}

bool ex_is_regular_epi(const ExMorphism& f) {
  return compose_rel(f.rel, opposite(f.rel)) == f.cod.eq;
}

ExHomList ex_hom_enumerate(const ExObject& a, const ExObject& b, size_t cap) {
  ExHomList out;
  RelationList rl = relation_enumerate_between(a.base, b.base, cap);
  out.truncated = rl.truncated;
  for (Relation& r : rl.items)
    if (ex_morphism_laws_hold(a, b, r))
      out.items.push_back({a, b, std::move(r)});
  return out;
}

std::vector<ExObject> ex_object_enumerate(const ObjPtr& base, size_t cap) {
  std::vector<ExObject> out;
  for (Relation& e : relation_enumerate(base, RelFilter::Equivalence, cap).items)
    out.push_back({base, std::move(e)});
  return out;
}

RelationList ex_relation_enumerate(const ExObject& a, RelFilter filter, size_t cap) {
  RelationList out;
  RelationList rl = relation_enumerate(a.base, RelFilter::Any, cap);
  out.truncated = rl.truncated;
  for (Relation& r : rl.items) {
    if (!(compose_rel(a.eq, compose_rel(r, a.eq)) == r)) continue;  // not a bimodule
    if (filter != RelFilter::Any && !ex_rel_reflexive(a, r)) continue;
    if (filter == RelFilter::Equivalence &&
        !(ex_rel_symmetric(r) && rel_le(compose_rel(r, r), r)))
      continue;
    out.items.push_back(std::move(r));
  }
  return out;
}

bool ex_rel_reflexive(const ExObject& a, const Relation& r) { return rel_le(a.eq, r); }

bool ex_rel_symmetric(const Relation& r) { return r == opposite(r); }

bool ex_rel_left_pseudoreflexive(const Relation& r) {
  for (size_t s = 0; s < r.pairs.size(); ++s)
    for (auto [x, y] : r.pairs[s])
      if (!r.contains(static_cast<int>(s), x, x)) return false;
  return true;
}

bool ex_rel_pseudoreflexive(const Relation& r) {
  return ex_rel_left_pseudoreflexive(r) &&
         ex_rel_left_pseudoreflexive(opposite(r));
}

bool ex_rel_left_zero_symmetric(const Relation& r) {
  for (size_t s = 0; s < r.pairs.size(); ++s)
    for (auto [x, y] : r.pairs[s])
      if (x == 0 && !r.contains(static_cast<int>(s), y, 0)) return false;
  return true;
}

ExReflection ex_reflect(const ExObject& a) {
  QuotientResult q;
  if (is_exact(a.base->category())) {
    q = quotient_by_congruence(a.base, a.eq);
  } else {
    // Norm: quotient the underlying crossed module, then reflect back by
    // image-factorizing the boundary.
    ObjPtr xm = norm_as_xmod(a.base);
    QuotientResult xq = quotient_by_classes(xm, eq_classes(a));
    QuotientResult refl = xmod_norm_reflection(xq.obj);
    ObjPtr nq = xmod_as_norm(refl.obj);
    std::vector<std::vector<int>> maps(2);
    for (int s = 0; s < 2; ++s) {
      maps[s].resize(a.base->order(s));
      for (int x = 0; x < a.base->order(s); ++x)
        maps[s][x] = refl.q.maps[s][xq.q.maps[s][x]];
    }
    q = {nq, make_morphism(a.base, nq, std::move(maps))};
  }
  ExMorphism unit = make_ex_morphism(a, embed(q.obj), graph(q.q));
  if (!ex_is_regular_epi(unit))
    throw LawViolation("reflection unit is not a regular epimorphism");
  return {q.obj, std::move(unit)};
}

ObjPtr norm_to_xmod(const ExObject& a) {
  if (a.base->category() != CategoryId::Norm)
    throw CategoryMismatch("comparison starts from a Norm object");
  return quotient_by_classes(norm_as_xmod(a.base), eq_classes(a)).obj;
}

ExObject xmod_to_norm_witness(const ObjPtr& xm) {
  if (xm->category() != CategoryId::XMod)
    throw CategoryMismatch("witness construction starts from a crossed module");
  int nt = xm->order(0), ng = xm->order(1), n = nt * ng;
  auto code = [&](int t, int g) { return t * ng + g; };
  Table op(n, std::vector<int>(n)), inv(1, std::vector<int>(n));
  for (int t1 = 0; t1 < nt; ++t1)
    for (int g1 = 0; g1 < ng; ++g1) {
      for (int t2 = 0; t2 < nt; ++t2)
        for (int g2 = 0; g2 < ng; ++g2)
          op[code(t1, g1)][code(t2, g2)] =
              code(xm->op(0, t1, xm->act(g1, t2)), xm->op(1, g1, g2));
      int gi = xm->inv(1, g1);
      inv[0][code(t1, g1)] = code(xm->act(gi, xm->inv(0, t1)), gi);
    }
  ObjPtr p = make_object(CategoryId::FinGrp, {n}, {{"op", op}, {"inv", inv}});
  std::vector<int> nsub(nt);
  for (int t = 0; t < nt; ++t) nsub[t] = code(t, 0);
  ObjPtr base = make_subobject(p, {nsub}).sub;
  {
    // Re-wrap as the Norm object T <| P.
    std::map<std::string, Table> tables = base->tables();
    Table incl(1, std::vector<int>(nt));
    for (int t = 0; t < nt; ++t) incl[0][t] = nsub[t];
    base = make_object(CategoryId::Norm, {nt, n},
                       {{"op0", tables.at("op")},
                        {"inv0", tables.at("inv")},
                        {"op1", p->tables().at("op")},
                        {"inv1", p->tables().at("inv")},
                        {"incl", std::move(incl)}});
  }
  PairSet en, eg;
  for (int t = 0; t < nt; ++t) en.emplace_back(t, t);
  std::vector<bool> in_k(n, false);
  for (int u = 0; u < nt; ++u) in_k[code(u, xm->inv(1, xm->bnd(u)))] = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (in_k[p->op(0, a, p->inv(0, b))]) eg.emplace_back(a, b);
  return make_ex_object(base, make_relation(base, base, {std::move(en), std::move(eg)}));
}

nlohmann::json ExRegReport::to_json() const {
  return {{"fully_faithful", fully_faithful},
          {"subobjects_embedded", subobjects_embedded},
          {"covered", covered},
          {"ex_objects", ex_objects},
          {"comparisons", comparisons}};
}

ExRegReport verify_exreg_characterization(const std::vector<ExObject>& sample,
                                          const std::vector<ObjPtr>& bases,
                                          size_t cap) {
  ExRegReport rep;
  // (i) Full faithfulness of embed.
  for (const ObjPtr& x : bases)
    for (const ObjPtr& y : bases) {
      HomList hl = hom_enumerate(x, y, cap);
      ExHomList el = ex_hom_enumerate(embed(x), embed(y), cap);
      ++rep.comparisons;
      if (hl.truncated || el.truncated) continue;
      if (hl.items.size() != el.items.size()) {
        rep.fully_faithful = false;
        continue;
      }
      for (const Morphism& f : hl.items) {
        const Relation g = graph(f);
        bool found = false;
        for (const ExMorphism& m : el.items)
          if (m.rel == g) found = true;
        if (!found) rep.fully_faithful = false;
      }
    }
  // (ii) Sub-ExObjects of embedded objects are embedded: every mono into
  // embed(x) is an iso onto the embedding of its image subobject.
  for (const ObjPtr& x : bases) {
    for (const SubobjectHandle& h : subobject_enumerate(x, cap).items) {
      for (const ExObject& s : ex_object_enumerate(h.sub, cap)) {
        for (const ExMorphism& m : ex_hom_enumerate(s, embed(x), cap).items) {
          if (!ex_is_mono(m)) continue;
          ++rep.comparisons;
          std::vector<std::vector<int>> image(m.rel.pairs.size());
          for (size_t so = 0; so < m.rel.pairs.size(); ++so) {
            for (auto [p, q] : m.rel.pairs[so]) {
              (void)p;
              image[so].push_back(q);
            }
            std::sort(image[so].begin(), image[so].end());
            image[so].erase(std::unique(image[so].begin(), image[so].end()),
                            image[so].end());
          }
          SubobjectHandle ih = make_subobject(x, image);
          std::vector<PairSet> reindexed(m.rel.pairs.size());
          for (size_t so = 0; so < m.rel.pairs.size(); ++so)
            for (auto [p, q] : m.rel.pairs[so])
              reindexed[so].emplace_back(p, index_in(ih.subsets[so], q));
          Relation onto = make_relation(s.base, ih.sub, reindexed);
          if (!ex_morphism_laws_hold(s, embed(ih.sub), onto) ||
              !ex_is_iso(ExMorphism{s, embed(ih.sub), onto}))
            rep.subobjects_embedded = false;
        }
      }
    }
  }
  // (iii) Covering: eq itself is a regular epi from the embedded base.
  for (const ExObject& a : sample) {
    ++rep.ex_objects;
    Relation cover{a.base, a.base, a.eq.pairs};
    if (!ex_morphism_laws_hold(embed(a.base), a, cover) ||
        !ex_is_regular_epi(ExMorphism{embed(a.base), a, cover}))
      rep.covered = false;
  }
  return rep;
}

}  // namespace fincat
