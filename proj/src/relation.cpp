#include "fincat/relation.hpp"

#include <algorithm>
#include <set>

namespace fincat {

namespace {

struct PairMask {
  const FinObject* dom;
  const FinObject* cod;
  std::vector<std::vector<bool>> m;  // [s][x * cod_n + y]

  int nc(int s) const { return cod->sorts()[s]; }
  bool get(int s, int x, int y) const { return m[s][x * nc(s) + y]; }
  void set(int s, int x, int y) { m[s][x * nc(s) + y] = true; }
};

PairMask to_mask(const ObjPtr& dom, const ObjPtr& cod,
                 const std::vector<PairSet>& pairs) {
  PairMask pm{dom.get(), cod.get(), {}};
  int ns = sort_count(dom->category());
  pm.m.resize(ns);
  for (int s = 0; s < ns; ++s) {
    pm.m[s].assign(static_cast<size_t>(dom->order(s)) * cod->order(s), false);
    for (auto [x, y] : pairs[s]) pm.set(s, x, y);
  }
  return pm;
}

std::vector<PairSet> from_mask(const PairMask& pm) {
  std::vector<PairSet> out(pm.m.size());
  for (size_t s = 0; s < pm.m.size(); ++s) {
    int nd = pm.dom->sorts()[s], ncod = pm.cod->sorts()[s];
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < ncod; ++y)
        if (pm.m[s][x * ncod + y]) out[s].emplace_back(x, y);
  }
  return out;
}

// Closure of the pair-sets under the componentwise operations of the product.
void close_mask(PairMask& pm) {
  const FinObject& d = *pm.dom;
  const FinObject& c = *pm.cod;
  CategoryId cat = d.category();
  int ns = sort_count(cat);
  if (is_pointed(cat))
    for (int s = 0; s < ns; ++s)
      if (!pm.m[s].empty()) pm.set(s, 0, 0);
  if (!is_group_like(cat)) return;
  bool changed = true;
  auto add = [&](int s, int x, int y) {
    if (!pm.get(s, x, y)) {
      pm.set(s, x, y);
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (int s = 0; s < ns; ++s) {
      int nd = d.order(s), ncod = c.order(s);
      for (int x = 0; x < nd; ++x)
        for (int y = 0; y < ncod; ++y) {
          if (!pm.get(s, x, y)) continue;
          add(s, d.inv(s, x), c.inv(s, y));
          for (int x2 = 0; x2 < nd; ++x2)
            for (int y2 = 0; y2 < ncod; ++y2)
              if (pm.get(s, x2, y2)) add(s, d.op(s, x, x2), c.op(s, y, y2));
        }
    }
    if (cat == CategoryId::FinCRng) {
      int nd = d.order(0), ncod = c.order(0);
      for (int x = 0; x < nd; ++x)
        for (int y = 0; y < ncod; ++y) {
          if (!pm.get(0, x, y)) continue;
          for (int x2 = 0; x2 < nd; ++x2)
            for (int y2 = 0; y2 < ncod; ++y2)
              if (pm.get(0, x2, y2)) add(0, d.mul(x, x2), c.mul(y, y2));
        }
    }
    if (cat == CategoryId::Norm) {
      for (int x = 0; x < d.order(0); ++x)
        for (int y = 0; y < c.order(0); ++y)
          if (pm.get(0, x, y)) add(1, d.incl(x), c.incl(y));
    }
    if (cat == CategoryId::XMod) {
      for (int x = 0; x < d.order(0); ++x)
        for (int y = 0; y < c.order(0); ++y)
          if (pm.get(0, x, y)) add(1, d.bnd(x), c.bnd(y));
      for (int g = 0; g < d.order(1); ++g)
        for (int g2 = 0; g2 < c.order(1); ++g2) {
          if (!pm.get(1, g, g2)) continue;
          for (int t = 0; t < d.order(0); ++t)
            for (int t2 = 0; t2 < c.order(0); ++t2)
              if (pm.get(0, t, t2)) add(0, d.act(g, t), c.act(g2, t2));
        }
    }
  }
}

}  // namespace

bool Relation::contains(int s, int x, int y) const {
  return std::binary_search(pairs[s].begin(), pairs[s].end(), std::make_pair(x, y));
}

nlohmann::json Relation::to_json() const {
  nlohmann::json pj = nlohmann::json::array();
  for (const auto& ps : pairs) {
    nlohmann::json sj = nlohmann::json::array();
    for (auto [x, y] : ps) sj.push_back({x, y});
    pj.push_back(sj);
  }
  // Single-sort relations serialize their pair list flat.
  if (pj.size() == 1) pj = pj[0];
  return {{"dom", dom->key()}, {"cod", cod->key()}, {"pairs", pj}};
}

bool relation_subobject_valid(const ObjPtr& dom, const ObjPtr& cod,
                              const std::vector<PairSet>& pairs) {
  PairMask pm = to_mask(dom, cod, pairs);
  PairMask closed = pm;
  close_mask(closed);
  if (closed.m != pm.m) return false;
  if (dom->category() == CategoryId::Norm) {
    // normality of the sort-0 part inside the sort-1 part of the product
    std::vector<bool> img(static_cast<size_t>(dom->order(1)) * cod->order(1), false);
    for (auto [n, n2] : pairs[0])
      img[dom->incl(n) * cod->order(1) + cod->incl(n2)] = true;
    for (auto [g, g2] : pairs[1])
      for (auto [n, n2] : pairs[0]) {
        int c1 = dom->op(1, dom->op(1, g, dom->incl(n)), dom->inv(1, g));
        int c2 = cod->op(1, cod->op(1, g2, cod->incl(n2)), cod->inv(1, g2));
        if (!img[c1 * cod->order(1) + c2]) return false;
      }
  }
  return true;
}

Relation make_relation(ObjPtr dom, ObjPtr cod, std::vector<PairSet> pairs) {
  if (dom->category() != cod->category())
    throw CategoryMismatch("relation endpoints in different categories");
  for (auto& ps : pairs) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  }
  if (!relation_subobject_valid(dom, cod, pairs))
    throw AxiomViolation("pair-set is not a subobject of the product");
  return Relation{std::move(dom), std::move(cod), std::move(pairs)};
}

Relation graph(const Morphism& f) {
  std::vector<PairSet> pairs(f.maps.size());
  for (size_t s = 0; s < f.maps.size(); ++s)
    for (size_t x = 0; x < f.maps[s].size(); ++x)
      pairs[s].emplace_back(static_cast<int>(x), f.maps[s][x]);
  return Relation{f.dom, f.cod, std::move(pairs)};
}

Relation diagonal(const ObjPtr& x) { return graph(identity_morphism(x)); }

Relation total_relation(const ObjPtr& x) {
  int ns = sort_count(x->category());
  std::vector<PairSet> pairs(ns);
  for (int s = 0; s < ns; ++s)
    for (int a = 0; a < x->order(s); ++a)
      for (int b = 0; b < x->order(s); ++b) pairs[s].emplace_back(a, b);
  return Relation{x, x, std::move(pairs)};
}

Relation opposite(const Relation& r) {
  std::vector<PairSet> pairs(r.pairs.size());
  for (size_t s = 0; s < r.pairs.size(); ++s) {
    for (auto [x, y] : r.pairs[s]) pairs[s].emplace_back(y, x);
    std::sort(pairs[s].begin(), pairs[s].end());
  }
  return Relation{r.cod, r.dom, std::move(pairs)};
}

Relation compose_rel(const Relation& s, const Relation& r) {
  if (!same_object(r.cod, s.dom)) throw DomainMismatch("compose: cod(R) != dom(S)");
  int ns = static_cast<int>(r.pairs.size());
  std::vector<PairSet> out(ns);
  for (int so = 0; so < ns; ++so) {
    int mid = r.cod->order(so);
    std::vector<std::vector<int>> succ(mid);  // y -> zs with (y,z) in S
    for (auto [y, z] : s.pairs[so]) succ[y].push_back(z);
    std::set<std::pair<int, int>> acc;
    for (auto [x, y] : r.pairs[so])
      for (int z : succ[y]) acc.emplace(x, z);
    out[so].assign(acc.begin(), acc.end());
  }
  if (!relation_subobject_valid(r.dom, s.cod, out))
    throw LawViolation("composite relation failed the closure assertion");
  return Relation{r.dom, s.cod, std::move(out)};
}

bool rel_le(const Relation& r, const Relation& s) {
  for (size_t so = 0; so < r.pairs.size(); ++so)
    if (!std::includes(s.pairs[so].begin(), s.pairs[so].end(), r.pairs[so].begin(),
                       r.pairs[so].end()))
      return false;
  return true;
}

RelOrder leq(const Relation& r, const Relation& s) {
  if (!same_object(r.dom, s.dom) || !same_object(r.cod, s.cod))
    throw DomainMismatch("leq: relations not parallel");
  bool le = rel_le(r, s), ge = rel_le(s, r);
  if (le && ge) return RelOrder::EQ;
  if (le) return RelOrder::LE;
  if (ge) return RelOrder::GE;
  return RelOrder::INCOMPARABLE;
}

Relation meet(const Relation& r, const Relation& s) {
  if (!same_object(r.dom, s.dom) || !same_object(r.cod, s.cod))
    throw DomainMismatch("meet: relations not parallel");
  std::vector<PairSet> out(r.pairs.size());
  for (size_t so = 0; so < r.pairs.size(); ++so)
    std::set_intersection(r.pairs[so].begin(), r.pairs[so].end(), s.pairs[so].begin(),
                          s.pairs[so].end(), std::back_inserter(out[so]));
  return Relation{r.dom, r.cod, std::move(out)};
}

bool operator==(const Relation& a, const Relation& b) {
  return same_object(a.dom, b.dom) && same_object(a.cod, b.cod) && a.pairs == b.pairs;
}

std::optional<Morphism> is_map(const Relation& r) {
  std::vector<std::vector<int>> maps(r.pairs.size());
  for (size_t s = 0; s < r.pairs.size(); ++s) {
    maps[s].assign(r.dom->order(static_cast<int>(s)), -1);
    for (auto [x, y] : r.pairs[s]) {
      if (maps[s][x] != -1) return std::nullopt;  // not single-valued
      maps[s][x] = y;
    }
    for (int v : maps[s])
      if (v == -1) return std::nullopt;  // not total
  }
  if (!is_homomorphism(r.dom, r.cod, maps)) return std::nullopt;
  return Morphism{r.dom, r.cod, std::move(maps)};
}

Relation kernel_pair_relation(const Morphism& p) {
  std::vector<PairSet> pairs(p.maps.size());
  for (size_t s = 0; s < p.maps.size(); ++s)
    for (size_t a = 0; a < p.maps[s].size(); ++a)
      for (size_t b = 0; b < p.maps[s].size(); ++b)
        if (p.maps[s][a] == p.maps[s][b])
          pairs[s].emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Relation{p.dom, p.dom, std::move(pairs)};
}

RelationLemmaReport check_relation_lemma(const Morphism& p) {
  Relation gp = graph(p);
  Relation kp = compose_rel(opposite(gp), gp);
  bool kernel_pair_ok = kp == kernel_pair_relation(p);
  Relation pp = compose_rel(gp, opposite(gp));
  bool is_diag = pp == diagonal(p.cod);
  bool regular_epi_iff = is_diag == p.surjective();
  return RelationLemmaReport{kernel_pair_ok, regular_epi_iff};
}

RelationList relation_enumerate_between(const ObjPtr& x, const ObjPtr& y, size_t cap) {
  CategoryId cat = x->category();
  if (cat != y->category()) throw CategoryMismatch("relations live inside one instance");
  RelationList out;
  if (!is_group_like(cat)) {
    int n = x->order(0), m = y->order(0);
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < m; ++b) {
        if (cat == CategoryId::FinPtSet && a == 0 && b == 0) continue;
        all.emplace_back(a, b);
      }
    size_t k = all.size();
    if (k > 24) {
      out.truncated = true;
      return out;
    }
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      PairSet ps;
      if (cat == CategoryId::FinPtSet) ps.emplace_back(0, 0);
      for (size_t i = 0; i < k; ++i)
        if (mask & (size_t{1} << i)) ps.push_back(all[i]);
      std::sort(ps.begin(), ps.end());
      out.items.push_back(Relation{x, y, {ps}});
      if (out.items.size() >= cap) {
        out.truncated = true;
        break;
      }
    }
  } else {
    std::set<std::vector<PairSet>> seen;
    std::vector<std::vector<PairSet>> work;
    int ns = sort_count(cat);
    PairMask pm = to_mask(x, y, std::vector<PairSet>(ns));
    close_mask(pm);
    auto base = from_mask(pm);
    seen.insert(base);
    work.push_back(base);
    for (size_t i = 0; i < work.size() && !out.truncated; ++i) {
      for (int s = 0; s < ns && !out.truncated; ++s) {
        for (int a = 0; a < x->order(s); ++a)
          for (int b = 0; b < y->order(s); ++b) {
            if (std::binary_search(work[i][s].begin(), work[i][s].end(),
                                   std::make_pair(a, b)))
              continue;
            auto ext = work[i];
            ext[s].emplace_back(a, b);
            PairMask em = to_mask(x, y, ext);
            close_mask(em);
            auto closed = from_mask(em);
            if (seen.insert(closed).second) {
              if (seen.size() > cap) {
                out.truncated = true;
                break;
              }
              work.push_back(std::move(closed));
            }
          }
      }
    }
    for (const auto& ps : seen)
      if (relation_subobject_valid(x, y, ps)) out.items.push_back(Relation{x, y, ps});
  }
  std::sort(out.items.begin(), out.items.end(),
            [](const Relation& a, const Relation& b) { return a.pairs < b.pairs; });
  return out;
}

RelationList relation_enumerate(const ObjPtr& x, RelFilter filter, size_t cap) {
  CategoryId cat = x->category();
  RelationList out;
  auto passes = [&](const Relation& r) {
    if (filter == RelFilter::Any) return true;
    Relation d = diagonal(x);
    if (!rel_le(d, r)) return false;
    if (filter == RelFilter::Reflexive) return true;
    return r == opposite(r) && rel_le(compose_rel(r, r), r);
  };
  if (!is_group_like(cat)) {
    // brute force over pair subsets; (0,0) is forced in FinPtSet
    int n = x->order(0);
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (cat == CategoryId::FinPtSet && a == 0 && b == 0) continue;
        if (filter != RelFilter::Any && a == b) continue;  // diagonal forced
        all.emplace_back(a, b);
      }
    size_t k = all.size();
    if (k > 24) {
      out.truncated = true;
      return out;
    }
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      PairSet ps;
      if (cat == CategoryId::FinPtSet) ps.emplace_back(0, 0);
      if (filter != RelFilter::Any)
        for (int a = 0; a < n; ++a) ps.emplace_back(a, a);
      for (size_t i = 0; i < k; ++i)
        if (mask & (size_t{1} << i)) ps.push_back(all[i]);
      std::sort(ps.begin(), ps.end());
      Relation r{x, x, {ps}};
      if (passes(r)) {
        out.items.push_back(std::move(r));
        if (out.items.size() >= cap) {
          out.truncated = true;
          break;
        }
      }
    }
  } else {
    // closure-extension search over subalgebras of X x X
    std::set<std::vector<PairSet>> seen;
    std::vector<std::vector<PairSet>> work;
    int ns = sort_count(cat);
    std::vector<PairSet> seed(ns);
    if (filter != RelFilter::Any) seed = diagonal(x).pairs;
    PairMask pm = to_mask(x, x, seed);
    close_mask(pm);
    auto base = from_mask(pm);
    seen.insert(base);
    work.push_back(base);
    for (size_t i = 0; i < work.size() && !out.truncated; ++i) {
      for (int s = 0; s < ns && !out.truncated; ++s) {
        for (int a = 0; a < x->order(s); ++a)
          for (int b = 0; b < x->order(s); ++b) {
            if (std::binary_search(work[i][s].begin(), work[i][s].end(),
                                   std::make_pair(a, b)))
              continue;
            auto ext = work[i];
            ext[s].emplace_back(a, b);
            PairMask em = to_mask(x, x, ext);
            close_mask(em);
            auto closed = from_mask(em);
            if (seen.insert(closed).second) {
              if (seen.size() > cap) {
                out.truncated = true;
                break;
              }
              work.push_back(std::move(closed));
            }
          }
      }
    }
    for (const auto& ps : seen) {
      if (!relation_subobject_valid(x, x, ps)) continue;
      Relation r{x, x, ps};
      if (passes(r)) out.items.push_back(std::move(r));
    }
  }
  std::sort(out.items.begin(), out.items.end(),
            [](const Relation& a, const Relation& b) { return a.pairs < b.pairs; });
  return out;
}

}  // namespace fincat
