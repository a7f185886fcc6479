#include "fincat/morphism.hpp"

#include <algorithm>

namespace fincat {

bool same_object(const ObjPtr& a, const ObjPtr& b) {
  if (a == b) return true;
  return a->category() == b->category() && a->sorts() == b->sorts() &&
         a->tables() == b->tables();
}

bool Morphism::surjective() const {
  for (size_t s = 0; s < maps.size(); ++s) {
    std::vector<bool> hit(cod->order(static_cast<int>(s)), false);
    for (int v : maps[s]) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  }
  return true;
}

bool Morphism::injective() const {
  for (size_t s = 0; s < maps.size(); ++s) {
    std::vector<bool> hit(cod->order(static_cast<int>(s)), false);
    for (int v : maps[s]) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

bool Morphism::is_identity() const {
  if (!same_object(dom, cod)) return false;
  for (const auto& m : maps)
    for (size_t x = 0; x < m.size(); ++x)
      if (m[x] != static_cast<int>(x)) return false;
  return true;
}

nlohmann::json Morphism::to_json() const {
  return {{"dom", dom->key()}, {"cod", cod->key()}, {"maps", maps}};
}

bool is_homomorphism(const ObjPtr& dom, const ObjPtr& cod,
                     const std::vector<std::vector<int>>& maps) {
  CategoryId cat = dom->category();
  int ns = sort_count(cat);
  if (static_cast<int>(maps.size()) != ns) return false;
  for (int s = 0; s < ns; ++s) {
    if (static_cast<int>(maps[s].size()) != dom->order(s)) return false;
    for (int v : maps[s])
      if (v < 0 || v >= cod->order(s)) return false;
  }
  if (is_pointed(cat))
    for (int s = 0; s < ns; ++s)
      if (dom->order(s) > 0 && maps[s][0] != 0) return false;
  if (is_group_like(cat)) {
    for (int s = 0; s < ns; ++s)
      for (int a = 0; a < dom->order(s); ++a)
        for (int b = 0; b < dom->order(s); ++b)
          if (maps[s][dom->op(s, a, b)] != cod->op(s, maps[s][a], maps[s][b]))
            return false;
  }
  switch (cat) {
    case CategoryId::FinCRng:
      for (int a = 0; a < dom->order(0); ++a)
        for (int b = 0; b < dom->order(0); ++b)
          if (maps[0][dom->mul(a, b)] != cod->mul(maps[0][a], maps[0][b])) return false;
      break;
    case CategoryId::Norm:
      for (int n = 0; n < dom->order(0); ++n)
        if (maps[1][dom->incl(n)] != cod->incl(maps[0][n])) return false;
      break;
    case CategoryId::XMod:
      for (int t = 0; t < dom->order(0); ++t)
        if (maps[1][dom->bnd(t)] != cod->bnd(maps[0][t])) return false;
      for (int g = 0; g < dom->order(1); ++g)
        for (int t = 0; t < dom->order(0); ++t)
          if (maps[0][dom->act(g, t)] != cod->act(maps[1][g], maps[0][t])) return false;
      break;
    default:
      break;
  }
  return true;
}

Morphism make_morphism(ObjPtr dom, ObjPtr cod, std::vector<std::vector<int>> maps) {
  if (dom->category() != cod->category())
    throw CategoryMismatch("morphism endpoints in different categories");
  if (!is_homomorphism(dom, cod, maps))
    throw NotHomomorphism("map fails the homomorphism condition");
  return Morphism{std::move(dom), std::move(cod), std::move(maps)};
}

Morphism identity_morphism(ObjPtr a) {
  std::vector<std::vector<int>> maps(a->sorts().size());
  for (size_t s = 0; s < maps.size(); ++s) {
    maps[s].resize(a->order(static_cast<int>(s)));
    for (size_t x = 0; x < maps[s].size(); ++x) maps[s][x] = static_cast<int>(x);
  }
  return Morphism{a, std::move(a), std::move(maps)};
}

Morphism zero_morphism(ObjPtr a, ObjPtr b) {
  if (!is_pointed(a->category()))
    throw CategoryMismatch("zero morphism needs a pointed instance");
  if (a->category() != b->category())
    throw CategoryMismatch("morphism endpoints in different categories");
  std::vector<std::vector<int>> maps(a->sorts().size());
  for (size_t s = 0; s < maps.size(); ++s)
    maps[s].assign(a->order(static_cast<int>(s)), 0);
  return Morphism{std::move(a), std::move(b), std::move(maps)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!same_object(f.cod, g.dom)) throw DomainMismatch("compose: cod(f) != dom(g)");
  std::vector<std::vector<int>> maps(f.maps.size());
  for (size_t s = 0; s < maps.size(); ++s) {
    maps[s].resize(f.maps[s].size());
    for (size_t x = 0; x < maps[s].size(); ++x) maps[s][x] = g.maps[s][f.maps[s][x]];
  }
  return Morphism{f.dom, g.cod, std::move(maps)};
}

bool operator==(const Morphism& a, const Morphism& b) {
  return same_object(a.dom, b.dom) && same_object(a.cod, b.cod) && a.maps == b.maps;
}

bool operator<(const Morphism& a, const Morphism& b) { return a.maps < b.maps; }

}  // namespace fincat
