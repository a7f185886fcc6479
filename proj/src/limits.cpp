#include "fincat/limits.hpp"

namespace fincat {

SpanResult product(const ObjPtr& a, const ObjPtr& b) {
  if (a->category() != b->category())
    throw CategoryMismatch("product of objects in different categories");
  CategoryId cat = a->category();
  int ns = sort_count(cat);
  std::vector<int> sizes(ns);
  for (int s = 0; s < ns; ++s) sizes[s] = a->order(s) * b->order(s);

  std::map<std::string, Table> tables;
  for (const auto& [name, table] : a->tables()) {
    const Table& tb = b->tables().at(name);
    int arg0 = 0, arg1 = -1, val = 0;
    if (name == "op" || name == "mul") { arg1 = 0; }
    else if (name == "inv") {}
    else if (name == "op0") { arg1 = 0; }
    else if (name == "inv0") {}
    else if (name == "op1") { arg0 = 1; arg1 = 1; val = 1; }
    else if (name == "inv1") { arg0 = 1; val = 1; }
    else if (name == "incl" || name == "bnd") { val = 1; }
    else if (name == "act") { arg0 = 1; arg1 = 0; val = 0; }
    int na0 = a->order(arg0), nb0 = b->order(arg0);
    int nbv = b->order(val);
    Table prod;
    if (arg1 == -1) {
      prod.emplace_back();
      for (int xa = 0; xa < na0; ++xa)
        for (int xb = 0; xb < nb0; ++xb)
          prod[0].push_back(pair_code(nbv, table[0][xa], tb[0][xb]));
    } else {
      int na1 = a->order(arg1), nb1 = b->order(arg1);
      prod.assign(na0 * nb0, std::vector<int>(na1 * nb1));
      for (int xa = 0; xa < na0; ++xa)
        for (int xb = 0; xb < nb0; ++xb)
          for (int ya = 0; ya < na1; ++ya)
            for (int yb = 0; yb < nb1; ++yb)
              prod[pair_code(nb0, xa, xb)][pair_code(nb1, ya, yb)] =
                  pair_code(nbv, table[xa][ya], tb[xb][yb]);
    }
    tables[name] = std::move(prod);
  }
  ObjPtr p = make_object(cat, sizes, std::move(tables));
  std::vector<std::vector<int>> m1(ns), m2(ns);
  for (int s = 0; s < ns; ++s) {
    int nb = b->order(s);
    for (int c = 0; c < sizes[s]; ++c) {
      m1[s].push_back(pair_left(nb, c));
      m2[s].push_back(pair_right(nb, c));
    }
  }
  return SpanResult{p, Morphism{p, a, std::move(m1)}, Morphism{p, b, std::move(m2)}};
}

SpanResult pullback(const Morphism& f, const Morphism& g) {
  if (!same_object(f.cod, g.cod)) throw CategoryMismatch("pullback: codomains differ");
  SpanResult prod = product(f.dom, g.dom);
  int ns = sort_count(f.dom->category());
  std::vector<std::vector<int>> subsets(ns);
  for (int s = 0; s < ns; ++s) {
    int nb = g.dom->order(s);
    for (int c = 0; c < prod.obj->order(s); ++c)
      if (f.maps[s][pair_left(nb, c)] == g.maps[s][pair_right(nb, c)])
        subsets[s].push_back(c);
  }
  SubobjectHandle h = make_subobject(prod.obj, std::move(subsets));
  Morphism p1 = compose(prod.proj1, h.inclusion);
  Morphism p2 = compose(prod.proj2, h.inclusion);
  return SpanResult{h.sub, std::move(p1), std::move(p2)};
}

SubobjectHandle equalizer(const Morphism& f, const Morphism& g) {
  if (!same_object(f.dom, g.dom) || !same_object(f.cod, g.cod))
    throw CategoryMismatch("equalizer: parallel pair required");
  int ns = sort_count(f.dom->category());
  std::vector<std::vector<int>> subsets(ns);
  for (int s = 0; s < ns; ++s)
    for (int x = 0; x < f.dom->order(s); ++x)
      if (f.maps[s][x] == g.maps[s][x]) subsets[s].push_back(x);
  return make_subobject(f.dom, std::move(subsets));
}

SubobjectHandle kernel(const Morphism& f) {
  if (!is_pointed(f.dom->category()))
    throw CategoryMismatch("kernel needs a pointed instance");
  int ns = sort_count(f.dom->category());
  std::vector<std::vector<int>> subsets(ns);
  for (int s = 0; s < ns; ++s)
    for (int x = 0; x < f.dom->order(s); ++x)
      if (f.maps[s][x] == 0) subsets[s].push_back(x);
  return make_subobject(f.dom, std::move(subsets));
}

ObjPtr terminal_object(CategoryId cat) {
  if (is_pointed(cat)) return zero_object(cat);
  return make_object(CategoryId::FinSet, {1}, {});
}

}  // namespace fincat
