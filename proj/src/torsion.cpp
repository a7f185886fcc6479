#include "fincat/torsion.hpp"

#include <algorithm>
#include <optional>

#include "fincat/hom.hpp"

namespace fincat {

namespace {

int index_in(const std::vector<int>& sorted, int x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x)
    throw PreconditionFailed("element missing from subobject carrier");
  return static_cast<int>(it - sorted.begin());
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int additive_order(const ObjPtr& c, int x) {
  int acc = x, k = 1;
  while (acc != 0) {
    acc = c->op(0, acc, x);
    ++k;
  }
  return k;
}

bool is_p_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_nilpotent(const ObjPtr& c, int x) {
  // x^n = 0 for some n iff iterated squaring reaches 0.
  int acc = x;
  for (int i = 0; i <= c->order(0); ++i) {
    if (acc == 0) return true;
    acc = c->mul(acc, acc);
  }
  return acc == 0;
}

// The unique h with h . q = g for a carrier-surjective q, when g is constant
// on the fibers of q; absent otherwise.
std::optional<Morphism> induced_through(const Morphism& q, const Morphism& g) {
  size_t ns = q.cod->sorts().size();
  std::vector<std::vector<int>> maps(ns);
  for (size_t s = 0; s < ns; ++s) {
    maps[s].assign(q.cod->order(static_cast<int>(s)), -1);
    for (int x = 0; x < q.dom->order(static_cast<int>(s)); ++x) {
      int c = q.maps[s][x], v = g.maps[s][x];
      if (maps[s][c] == -1)
        maps[s][c] = v;
      else if (maps[s][c] != v)
        return std::nullopt;
    }
    for (int v : maps[s])
      if (v == -1) return std::nullopt;
  }
  try {
    return make_morphism(q.cod, g.cod, std::move(maps));
  } catch (const NotHomomorphism&) {
    return std::nullopt;
  }
}

bool is_bijective(const Morphism& h) {
  for (size_t s = 0; s < h.maps.size(); ++s) {
    if (h.dom->order(static_cast<int>(s)) != h.cod->order(static_cast<int>(s)))
      return false;
    std::vector<bool> hit(h.maps[s].size(), false);
    for (int v : h.maps[s]) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

bool is_surjective(const Morphism& h) {
  for (size_t s = 0; s < h.maps.size(); ++s) {
    std::vector<bool> hit(h.cod->order(static_cast<int>(s)), false);
    for (int v : h.maps[s]) hit[v] = true;
    for (bool b : hit)
      if (!b) return false;
  }
  return true;
}

bool is_injective(const Morphism& h) {
  for (const auto& m : h.maps) {
    std::vector<int> v = m;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
  }
  return true;
}

}  // namespace

CategoryId TorsionInstance::ambient() const {
  switch (id) {
    case TorsionId::PPrimaryAb: return CategoryId::FinAb;
    case TorsionId::NilRedCRng: return CategoryId::FinCRng;
    case TorsionId::AbNormXMod: return CategoryId::XMod;
  }
  throw PreconditionFailed("unreachable");
}

std::string TorsionInstance::name() const {
  switch (id) {
    case TorsionId::PPrimaryAb: return "p-primary(" + std::to_string(p) + ")";
    case TorsionId::NilRedCRng: return "nil-red";
    case TorsionId::AbNormXMod: return "ab-norm";
  }
  throw PreconditionFailed("unreachable");
}

TorsionInstance p_primary(int p) {
  if (!is_prime(p)) throw PreconditionFailed("p must be prime");
  return {TorsionId::PPrimaryAb, p};
}

TorsionInstance nil_red() { return {TorsionId::NilRedCRng, 0}; }

TorsionInstance ab_norm() { return {TorsionId::AbNormXMod, 0}; }

SubobjectHandle torsion_part(const TorsionInstance& inst, const ObjPtr& c) {
  if (c->category() != inst.ambient())
    throw CategoryMismatch("object not in the ambient instance");
  std::vector<std::vector<int>> subsets;
  switch (inst.id) {
    case TorsionId::PPrimaryAb: {
      subsets.emplace_back();
      for (int x = 0; x < c->order(0); ++x)
        if (is_p_power(additive_order(c, x), inst.p)) subsets[0].push_back(x);
      break;
    }
    case TorsionId::NilRedCRng: {
      subsets.emplace_back();
      for (int x = 0; x < c->order(0); ++x)
        if (is_nilpotent(c, x)) subsets[0].push_back(x);
      break;
    }
    case TorsionId::AbNormXMod: {
      subsets.assign(2, {});
      for (int t = 0; t < c->order(0); ++t)
        if (c->bnd(t) == 0) subsets[0].push_back(t);
      subsets[1] = {0};
      break;
    }
  }
  return make_subobject(c, std::move(subsets));
}

bool is_torsion(const TorsionInstance& inst, const ObjPtr& c) {
  SubobjectHandle h = torsion_part(inst, c);
  for (size_t s = 0; s < h.subsets.size(); ++s)
    if (static_cast<int>(h.subsets[s].size()) != c->order(static_cast<int>(s)))
      return false;
  return true;
}

bool is_torsion_free(const TorsionInstance& inst, const ObjPtr& c) {
  for (const auto& sub : torsion_part(inst, c).subsets)
    if (sub.size() != 1) return false;
  return true;
}

Reflection reflect(const TorsionInstance& inst, const ObjPtr& c) {
  QuotientResult qr = cokernel(torsion_part(inst, c).inclusion);
  return {qr.obj, qr.q};
}

Morphism reflect_mor(const TorsionInstance& inst, const Morphism& h) {
  Reflection rd = reflect(inst, h.dom);
  Reflection rc = reflect(inst, h.cod);
  auto lh = induced_through(rd.unit, compose(rc.unit, h));
  if (!lh) throw LawViolation("reflection is not functorial on this morphism");
  return *lh;
}

bool verify_ses(const TorsionInstance& inst, const ObjPtr& c) {
  SubobjectHandle t = torsion_part(inst, c);
  Reflection r = reflect(inst, c);
  if (kernel(r.unit).subsets != t.subsets) return false;
  if (!is_surjective(r.unit)) return false;
  if (!is_torsion_free(inst, r.obj)) return false;
  for (const Morphism& f : hom_enumerate(t.sub, r.obj).items)
    if (!(f == zero_morphism(t.sub, r.obj))) return false;
  return true;
}

bool check_semi_left_exact(const TorsionInstance& inst, const ObjPtr& q,
                           const Morphism& f) {
  Reflection r = reflect(inst, q);
  if (!same_object(f.cod, r.obj))
    throw PreconditionFailed("f must land in the reflection of q");
  if (!is_torsion_free(inst, f.dom))
    throw PreconditionFailed("dom(f) has torsion");
  SpanResult pb = pullback(r.unit, f);
  Reflection rp = reflect(inst, pb.obj);
  auto h = induced_through(rp.unit, pb.proj2);
  if (!h || !is_bijective(*h)) return false;
  return compose(f, *h) == reflect_mor(inst, pb.proj1);
}

PropertyVerdict is_hereditary(const TorsionInstance& inst,
                              const std::vector<ObjPtr>& sample, size_t cap) {
  PropertyVerdict pv;
  pv.cap = cap;
  bool sub_ok = true, mono_ok = true;
  for (const ObjPtr& c : sample) {
    ++pv.objects_swept;
    if (is_torsion(inst, c)) {
      SubobjectList subs = subobject_enumerate(c, cap);
      pv.truncated = pv.truncated || subs.truncated;
      for (const SubobjectHandle& h : subs.items)
        if (!is_torsion(inst, h.sub)) {
          sub_ok = false;
          if (!pv.witness_morphism) pv.witness_morphism = h.inclusion;
        }
    }
  }
  for (const ObjPtr& a : sample)
    for (const ObjPtr& b : sample) {
      HomList hl = hom_enumerate(a, b, cap);
      pv.truncated = pv.truncated || hl.truncated;
      for (const Morphism& m : hl.items) {
        if (!is_injective(m)) continue;
        ++pv.relations_swept;
        if (!is_injective(reflect_mor(inst, m))) {
          mono_ok = false;
          if (!pv.witness_morphism) pv.witness_morphism = m;
        }
      }
    }
  if (sub_ok != mono_ok)
    throw LawViolation("heredity sweeps disagree");
  pv.holds = sub_ok ? Verdict::ConfirmedOnSample : Verdict::RefutedWithWitness;
  return pv;
}

bool check_stable_coequalizer(const TorsionInstance& inst, const ObjPtr& x,
                              const Relation& e, const Morphism& f) {
  if (!is_torsion_free(inst, x)) throw PreconditionFailed("base has torsion");
  if (!same_object(e.dom, x) || !e.is_endorelation() || !is_equivalence(e))
    throw NotEquivalence("e must be an equivalence relation on x");
  {
    SpanResult prod = product(x, x);
    std::vector<std::vector<int>> subsets(e.pairs.size());
    for (size_t s = 0; s < e.pairs.size(); ++s)
      for (auto [a, b] : e.pairs[s])
        subsets[s].push_back(pair_code(x->order(static_cast<int>(s)), a, b));
    ObjPtr robj = make_subobject(prod.obj, std::move(subsets)).sub;
    if (!is_torsion_free(inst, robj))
      throw PreconditionFailed("relation object has torsion");
  }
  QuotientResult amb = quotient_by_congruence(x, e);
  Reflection r = reflect(inst, amb.obj);
  if (!same_object(f.cod, r.obj))
    throw PreconditionFailed("f must land in the subcategory coequalizer");
  Morphism lq = compose(r.unit, amb.q);

  SpanResult pb = pullback(lq, f);
  std::vector<PairSet> pulled(pb.obj->sorts().size());
  for (size_t s = 0; s < pulled.size(); ++s) {
    int si = static_cast<int>(s);
    for (int a = 0; a < pb.obj->order(si); ++a)
      for (int b = 0; b < pb.obj->order(si); ++b)
        if (pb.proj2.maps[s][a] == pb.proj2.maps[s][b] &&
            e.contains(si, pb.proj1.maps[s][a], pb.proj1.maps[s][b]))
          pulled[s].emplace_back(a, b);
  }
  Relation ep = make_relation(pb.obj, pb.obj, std::move(pulled));
  QuotientResult ambp = quotient_by_congruence(pb.obj, ep);
  Reflection rp = reflect(inst, ambp.obj);
  auto h = induced_through(compose(rp.unit, ambp.q), pb.proj2);
  return h && is_bijective(*h);
}

bool check_stable_cokernel(const Morphism& m, const Morphism& f) {
  if (!is_bourn_normal(m)) throw NotBournNormal("m is not Bourn-normal");
  QuotientResult ck = cokernel(m);
  if (!same_object(f.cod, ck.obj))
    throw PreconditionFailed("f must land in the cokernel of m");
  SpanResult pb = pullback(ck.q, f);
  // x' : dom(m) -> P picks the pair (m(t), 0).
  std::vector<std::vector<int>> maps(m.maps.size());
  for (size_t s = 0; s < maps.size(); ++s) {
    int si = static_cast<int>(s);
    maps[s].resize(m.dom->order(si));
    for (int t = 0; t < m.dom->order(si); ++t) {
      int found = -1;
      for (int pidx = 0; pidx < pb.obj->order(si); ++pidx)
        if (pb.proj1.maps[s][pidx] == m.maps[s][t] && pb.proj2.maps[s][pidx] == 0)
          found = pidx;
      if (found < 0) return false;
      maps[s][t] = found;
    }
  }
  Morphism xp = make_morphism(m.dom, pb.obj, std::move(maps));
  QuotientResult ckx = cokernel(xp);
  auto h = induced_through(ckx.q, pb.proj2);
  return h && is_bijective(*h);
}

NormalFactorization factor_trivial_cokernel_normal(const Morphism& m) {
  if (!is_bourn_normal(m)) throw NotBournNormal("m is not Bourn-normal");
  QuotientResult ck = cokernel(m);
  SubobjectHandle kh = kernel(ck.q);
  std::vector<std::vector<int>> maps(m.maps.size());
  for (size_t s = 0; s < maps.size(); ++s) {
    maps[s].resize(m.maps[s].size());
    for (size_t t = 0; t < m.maps[s].size(); ++t)
      maps[s][t] = index_in(kh.subsets[s], m.maps[s][t]);
  }
  NormalFactorization out{make_morphism(m.dom, kh.sub, std::move(maps)),
                          kh.inclusion};
  if (!(compose(out.k, out.n) == m))
    throw LawViolation("factorization does not recompose");
  QuotientResult ckn = cokernel(out.n);
  for (int n : ckn.obj->sorts())
    if (n != 1) throw LawViolation("first factor has a nontrivial cokernel");
  if (kernel(cokernel(out.k).q).subsets != kh.subsets)
    throw LawViolation("second factor is not normal");
  return out;
}

bool check_effective_descent(const TorsionInstance& inst, const Morphism& p,
                             const Morphism& f) {
  SpanResult pb = pullback(p, f);
  bool antecedent = is_torsion_free(inst, pb.obj) &&
                    is_torsion_free(inst, p.dom) && is_torsion_free(inst, p.cod);
  return !antecedent || is_torsion_free(inst, f.dom);
}

RqkFactorization factor_rqk(const Morphism& f) {
  if (f.dom->category() != CategoryId::FinAb)
    throw CategoryMismatch("rqk factorization is stated for FinAb");
  Factorization im = image_factorize(f);
  SubobjectHandle kh = kernel(cokernel(f).q);
  std::vector<std::vector<int>> maps(1);
  maps[0].resize(im.mono.maps[0].size());
  for (size_t i = 0; i < maps[0].size(); ++i)
    maps[0][i] = index_in(kh.subsets[0], im.mono.maps[0][i]);
  RqkFactorization out{im.epi, make_morphism(im.mono.dom, kh.sub, std::move(maps)),
                       kh.inclusion};
  if (!is_bijective(out.g)) throw LawViolation("middle comparison is not an iso");
  return out;
}

}  // namespace fincat
