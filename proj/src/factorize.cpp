#include "fincat/factorize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fincat/limits.hpp"

namespace fincat {

namespace {

int index_in(const std::vector<int>& sorted, int x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return static_cast<int>(it - sorted.begin());
}

// Left-coset partition of a group sort by a (normal) subgroup, classes
// numbered by ascending minimal representative so 0 lands in class 0.
std::vector<int> coset_classes(const ObjPtr& x, int s, const std::vector<int>& sub) {
  int n = x->order(s);
  std::vector<int> coset_min(n, -1);
  for (int a = 0; a < n; ++a) {
    int m = n;
    for (int k : sub) m = std::min(m, x->op(s, a, k));
    coset_min[a] = m;
  }
  std::vector<int> mins = coset_min;
  std::sort(mins.begin(), mins.end());
  mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
  std::vector<int> cls(n);
  for (int a = 0; a < n; ++a) cls[a] = index_in(mins, coset_min[a]);
  return cls;
}

}  // namespace

Factorization image_factorize(const Morphism& f) {
  SubobjectHandle img = make_subobject(f.cod, image_subsets(f));
  std::vector<std::vector<int>> emaps(f.dom->sorts().size());
  for (size_t s = 0; s < emaps.size(); ++s) {
    emaps[s].resize(f.dom->order(static_cast<int>(s)));
    for (int a = 0; a < f.dom->order(static_cast<int>(s)); ++a)
      emaps[s][a] = index_in(img.subsets[s], f.maps[s][a]);
  }
  return {make_morphism(f.dom, img.sub, std::move(emaps)), img.inclusion};
}

QuotientResult quotient_by_classes(const ObjPtr& x,
                                   const std::vector<std::vector<int>>& class_of) {
  size_t ns = x->sorts().size();
  if (class_of.size() != ns) throw PreconditionFailed("class partition sort count mismatch");
  std::vector<int> qsorts(ns);
  std::vector<std::vector<int>> reps(ns);
  for (size_t s = 0; s < ns; ++s) {
    int nc = *std::max_element(class_of[s].begin(), class_of[s].end()) + 1;
    qsorts[s] = nc;
    reps[s].assign(nc, -1);
    for (int a = 0; a < x->order(static_cast<int>(s)); ++a)
      if (reps[s][class_of[s][a]] < 0) reps[s][class_of[s][a]] = a;
  }

  std::map<std::string, Table> tables;
  for (const auto& [name, tab] : x->tables()) {
    if (name == "op" || name == "mul" || name == "op0" || name == "op1") {
      int s = (name == "op1") ? 1 : 0;
      Table t(qsorts[s], std::vector<int>(qsorts[s]));
      for (int i = 0; i < qsorts[s]; ++i)
        for (int j = 0; j < qsorts[s]; ++j)
          t[i][j] = class_of[s][tab[reps[s][i]][reps[s][j]]];
      // Congruence check: every pair of representatives must agree.
      for (int a = 0; a < x->order(s); ++a)
        for (int b = 0; b < x->order(s); ++b)
          if (class_of[s][tab[a][b]] != t[class_of[s][a]][class_of[s][b]])
            throw NotExactInstance("partition is not a congruence for table " + name);
      tables[name] = std::move(t);
    } else if (name == "inv" || name == "inv0" || name == "inv1") {
      int s = (name == "inv1") ? 1 : 0;
      Table t(1, std::vector<int>(qsorts[s]));
      for (int i = 0; i < qsorts[s]; ++i) t[0][i] = class_of[s][tab[0][reps[s][i]]];
      for (int a = 0; a < x->order(s); ++a)
        if (class_of[s][tab[0][a]] != t[0][class_of[s][a]])
          throw NotExactInstance("partition is not a congruence for table " + name);
      tables[name] = std::move(t);
    } else if (name == "incl" || name == "bnd") {
      Table t(1, std::vector<int>(qsorts[0]));
      for (int i = 0; i < qsorts[0]; ++i) t[0][i] = class_of[1][tab[0][reps[0][i]]];
      for (int a = 0; a < x->order(0); ++a)
        if (class_of[1][tab[0][a]] != t[0][class_of[0][a]])
          throw NotExactInstance("partition is not a congruence for table " + name);
      tables[name] = std::move(t);
    } else if (name == "act") {
      Table t(qsorts[1], std::vector<int>(qsorts[0]));
      for (int g = 0; g < qsorts[1]; ++g)
        for (int i = 0; i < qsorts[0]; ++i)
          t[g][i] = class_of[0][tab[reps[1][g]][reps[0][i]]];
      for (int g = 0; g < x->order(1); ++g)
        for (int a = 0; a < x->order(0); ++a)
          if (class_of[0][tab[g][a]] != t[class_of[1][g]][class_of[0][a]])
            throw NotExactInstance("partition is not a congruence for table act");
      tables[name] = std::move(t);
    }
  }

  ObjPtr q = make_object(x->category(), qsorts, std::move(tables));
  return {q, make_morphism(x, q, class_of)};
}

QuotientResult quotient_by_congruence(const ObjPtr& x, const Relation& e) {
  if (!same_object(e.dom, x) || !e.is_endorelation())
    throw NotEndorelation("congruence must be an endorelation on the quotiented object");
  if (!is_exact(x->category()))
    throw NotExactInstance(std::string("coequalizers of equivalence relations are not available in ") +
                           category_name(x->category()));
  size_t ns = x->sorts().size();
  std::vector<std::vector<int>> class_of(ns);
  for (size_t s = 0; s < ns; ++s) {
    int n = x->order(static_cast<int>(s));
    // Reflexive + symmetric + transitive, checked directly on the pair-set.
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (auto [a, b] : e.pairs[s]) m[a][b] = 1;
    for (int a = 0; a < n; ++a)
      if (!m[a][a]) throw NotEquivalence("relation is not reflexive");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (m[a][b] && !m[b][a]) throw NotEquivalence("relation is not symmetric");
        if (m[a][b])
          for (int c = 0; c < n; ++c)
            if (m[b][c] && !m[a][c]) throw NotEquivalence("relation is not transitive");
      }
    std::vector<int> cmin(n);
    for (int a = 0; a < n; ++a) {
      int mn = a;
      for (int b = 0; b < a; ++b)
        if (m[a][b]) mn = std::min(mn, b);
      cmin[a] = mn;
    }
    std::vector<int> mins = cmin;
    std::sort(mins.begin(), mins.end());
    mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
    class_of[s].resize(n);
    for (int a = 0; a < n; ++a) class_of[s][a] = index_in(mins, cmin[a]);
  }
  return quotient_by_classes(x, class_of);
}

namespace {

std::vector<int> set_to_sorted(const std::set<int>& s) {
  return std::vector<int>(s.begin(), s.end());
}

// Normal closure of a subset of a group sort.
std::vector<int> normal_closure(const ObjPtr& x, int s, std::vector<int> seed) {
  int n = x->order(s);
  std::set<int> cur(seed.begin(), seed.end());
  cur.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> snap(cur.begin(), cur.end());
    for (int a : snap) {
      for (int b : snap)
        if (cur.insert(x->op(s, a, b)).second) grew = true;
      if (cur.insert(x->inv(s, a)).second) grew = true;
      for (int g = 0; g < n; ++g) {
        int c = x->op(s, x->op(s, g, a), x->inv(s, g));
        if (cur.insert(c).second) grew = true;
      }
    }
  }
  return set_to_sorted(cur);
}

// Ideal closure of a subset of a ring: additive subgroup absorbing products.
std::vector<int> ideal_closure(const ObjPtr& x, std::vector<int> seed) {
  int n = x->order(0);
  std::set<int> cur(seed.begin(), seed.end());
  cur.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> snap(cur.begin(), cur.end());
    for (int a : snap) {
      for (int b : snap)
        if (cur.insert(x->op(0, a, b)).second) grew = true;
      if (cur.insert(x->inv(0, a)).second) grew = true;
      for (int r = 0; r < n; ++r)
        if (cur.insert(x->mul(r, a)).second) grew = true;
    }
  }
  return set_to_sorted(cur);
}

// The smallest pair (S <= T, H <= G) that contains the given seeds and
// supports the quotient crossed module: H normal and containing bnd(S),
// S stable under the whole G-action and under the Peiffer commutators
// (h.t)t^-1 with h in H.
std::pair<std::vector<int>, std::vector<int>> xmod_normal_closure(
    const ObjPtr& x, std::vector<int> seed_t, std::vector<int> seed_g) {
  int nt = x->order(0), ng = x->order(1);
  std::set<int> st(seed_t.begin(), seed_t.end());
  std::set<int> sg(seed_g.begin(), seed_g.end());
  st.insert(0);
  sg.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> ts(st.begin(), st.end());
    std::vector<int> gs(sg.begin(), sg.end());
    std::vector<int> hc = normal_closure(x, 1, gs);
    if (hc.size() != gs.size()) grew = true;
    sg.insert(hc.begin(), hc.end());
    for (int t : ts) {
      if (sg.insert(x->bnd(t)).second) grew = true;
      for (int u : ts)
        if (st.insert(x->op(0, t, u)).second) grew = true;
      if (st.insert(x->inv(0, t)).second) grew = true;
      for (int g = 0; g < ng; ++g)
        if (st.insert(x->act(g, t)).second) grew = true;
    }
    for (int h : std::vector<int>(sg.begin(), sg.end()))
      for (int t = 0; t < nt; ++t) {
        int c = x->op(0, x->act(h, t), x->inv(0, t));
        if (st.insert(c).second) grew = true;
      }
  }
  return {set_to_sorted(st), set_to_sorted(sg)};
}

}  // namespace

ObjPtr norm_as_xmod(const ObjPtr& nrm) {
  if (nrm->category() != CategoryId::Norm)
    throw CategoryMismatch("expected a Norm object");
  int nn = nrm->order(0), ng = nrm->order(1);
  std::vector<int> back(ng, -1);
  for (int a = 0; a < nn; ++a) back[nrm->incl(a)] = a;
  std::map<std::string, Table> tables = nrm->tables();
  tables["bnd"] = tables.at("incl");
  tables.erase("incl");
  Table act(ng, std::vector<int>(nn));
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < nn; ++a)
      act[g][a] = back[nrm->op(1, nrm->op(1, g, nrm->incl(a)), nrm->inv(1, g))];
  tables["act"] = std::move(act);
  return make_object(CategoryId::XMod, nrm->sorts(), std::move(tables));
}

ObjPtr xmod_as_norm(const ObjPtr& xm) {
  if (xm->category() != CategoryId::XMod)
    throw CategoryMismatch("expected an XMod object");
  int nt = xm->order(0);
  std::vector<char> seen(xm->order(1), 0);
  for (int t = 0; t < nt; ++t) {
    if (seen[xm->bnd(t)])
      throw PreconditionFailed("boundary is not injective");
    seen[xm->bnd(t)] = 1;
  }
  std::map<std::string, Table> tables = xm->tables();
  tables["incl"] = tables.at("bnd");
  tables.erase("bnd");
  tables.erase("act");
  return make_object(CategoryId::Norm, xm->sorts(), std::move(tables));
}

QuotientResult xmod_norm_reflection(const ObjPtr& xm) {
  if (xm->category() != CategoryId::XMod)
    throw CategoryMismatch("expected an XMod object");
  int nt = xm->order(0), ng = xm->order(1);
  std::set<int> img;
  for (int t = 0; t < nt; ++t) img.insert(xm->bnd(t));
  std::vector<int> im(img.begin(), img.end());
  int ni = static_cast<int>(im.size());

  std::map<std::string, Table> tables;
  tables["op1"] = xm->tables().at("op1");
  tables["inv1"] = xm->tables().at("inv1");
  Table op0(ni, std::vector<int>(ni)), inv0(1, std::vector<int>(ni));
  Table bnd(1, std::vector<int>(ni)), act(ng, std::vector<int>(ni));
  for (int i = 0; i < ni; ++i) {
    bnd[0][i] = im[i];
    inv0[0][i] = index_in(im, xm->inv(1, im[i]));
    for (int j = 0; j < ni; ++j) op0[i][j] = index_in(im, xm->op(1, im[i], im[j]));
    for (int g = 0; g < ng; ++g)
      act[g][i] = index_in(im, xm->op(1, xm->op(1, g, im[i]), xm->inv(1, g)));
  }
  tables["op0"] = std::move(op0);
  tables["inv0"] = std::move(inv0);
  tables["bnd"] = std::move(bnd);
  tables["act"] = std::move(act);
  ObjPtr obj = make_object(CategoryId::XMod, {ni, ng}, std::move(tables));

  std::vector<std::vector<int>> maps(2);
  maps[0].resize(nt);
  for (int t = 0; t < nt; ++t) maps[0][t] = index_in(im, xm->bnd(t));
  maps[1].resize(ng);
  std::iota(maps[1].begin(), maps[1].end(), 0);
  return {obj, make_morphism(xm, obj, std::move(maps))};
}

QuotientResult cokernel(const Morphism& f) {
  CategoryId cat = f.cod->category();
  switch (cat) {
    case CategoryId::FinAb: {
      std::vector<int> img = image_subsets(f)[0];
      return quotient_by_classes(f.cod, {coset_classes(f.cod, 0, img)});
    }
    case CategoryId::FinGrp: {
      std::vector<int> k = normal_closure(f.cod, 0, image_subsets(f)[0]);
      return quotient_by_classes(f.cod, {coset_classes(f.cod, 0, k)});
    }
    case CategoryId::FinCRng: {
      std::vector<int> k = ideal_closure(f.cod, image_subsets(f)[0]);
      return quotient_by_classes(f.cod, {coset_classes(f.cod, 0, k)});
    }
    case CategoryId::XMod: {
      auto img = image_subsets(f);
      auto [st, sg] = xmod_normal_closure(f.cod, img[0], img[1]);
      return quotient_by_classes(
          f.cod, {coset_classes(f.cod, 0, st), coset_classes(f.cod, 1, sg)});
    }
    case CategoryId::Norm: {
      ObjPtr xa = norm_as_xmod(f.dom);
      ObjPtr xb = norm_as_xmod(f.cod);
      QuotientResult xq = cokernel(make_morphism(xa, xb, f.maps));
      QuotientResult refl = xmod_norm_reflection(xq.obj);
      ObjPtr nq = xmod_as_norm(refl.obj);
      std::vector<std::vector<int>> maps(2);
      for (int s = 0; s < 2; ++s) {
        maps[s].resize(f.cod->order(s));
        for (int a = 0; a < f.cod->order(s); ++a)
          maps[s][a] = refl.q.maps[s][xq.q.maps[s][a]];
      }
      return {nq, make_morphism(f.cod, nq, std::move(maps))};
    }
    default:
      throw CategoryMismatch("cokernel requires an algebraic pointed instance");
  }
}

}  // namespace fincat
