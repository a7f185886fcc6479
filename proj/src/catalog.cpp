#include "fincat/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fincat/factorize.hpp"
#include "fincat/hom.hpp"
#include "fincat/subobject.hpp"

namespace fincat {

namespace {

int index_in(const std::vector<int>& sorted, int x) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                          sorted.begin());
}

}  // namespace

ObjPtr discrete_set(int n) { return make_object(CategoryId::FinSet, {n}, {}); }

ObjPtr pointed_set(int n) { return make_object(CategoryId::FinPtSet, {n}, {}); }

ObjPtr cyclic_group(CategoryId cat, int n) {
  Table op(n, std::vector<int>(n)), inv(1, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    inv[0][a] = (n - a) % n;
    for (int b = 0; b < n; ++b) op[a][b] = (a + b) % n;
  }
  return make_object(cat, {n}, {{"op", std::move(op)}, {"inv", std::move(inv)}});
}

ObjPtr symmetric3() {
  // Permutations of {0,1,2} in lexicographic order; index 0 is the identity.
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  Table op(6, std::vector<int>(6)), inv(1, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    int ip[3];
    for (int x = 0; x < 3; ++x) ip[perms[a][x]] = x;
    inv[0][a] = find(ip);
    for (int b = 0; b < 6; ++b) {
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      op[a][b] = find(c);
    }
  }
  return make_object(CategoryId::FinGrp, {6},
                     {{"op", std::move(op)}, {"inv", std::move(inv)}});
}

ObjPtr dihedral4() {
  // r^i s^j with index i + 4j; s r s = r^-1.
  auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j & 1); };
  Table op(8, std::vector<int>(8)), inv(1, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) {
      int a = idx(i, j);
      inv[0][a] = j ? a : idx(-i, 0);
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l)
          op[a][idx(k, l)] = idx(i + (j ? -k : k), j + l);
    }
  return make_object(CategoryId::FinGrp, {8},
                     {{"op", std::move(op)}, {"inv", std::move(inv)}});
}

ObjPtr quaternion8() {
  // Index u*2 + s for unit u in {1,i,j,k} and sign s; 0 is +1.
  static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // Standard relations i*j=k, j*k=i, k*i=j with signs below.
  static const int sgn[4][4] = {{0, 0, 0, 0},   // 1*x
                                {0, 1, 0, 1},   // i*1=i, i*i=-1, i*j=k, i*k=-j
                                {0, 1, 1, 0},   // j*i=-k, j*j=-1, j*k=i
                                {0, 0, 1, 1}};  // k*i=j, k*j=-i, k*k=-1
  Table op(8, std::vector<int>(8)), inv(1, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    int ua = a / 2, sa = a % 2;
    inv[0][a] = ua == 0 ? a : ua * 2 + (1 - sa);
    for (int b = 0; b < 8; ++b) {
      int ub = b / 2, sb = b % 2;
      op[a][b] = umul[ua][ub] * 2 + ((sa + sb + sgn[ua][ub]) % 2);
    }
  }
  return make_object(CategoryId::FinGrp, {8},
                     {{"op", std::move(op)}, {"inv", std::move(inv)}});
}

ObjPtr cyclic_ring(int n) {
  Table op(n, std::vector<int>(n)), inv(1, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    inv[0][a] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      op[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  }
  return make_object(CategoryId::FinCRng, {n},
                     {{"op", std::move(op)}, {"inv", std::move(inv)}, {"mul", std::move(mul)}});
}

ObjPtr zero_mul_ring(int n) {
  Table op(n, std::vector<int>(n)), inv(1, std::vector<int>(n));
  Table mul(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    inv[0][a] = (n - a) % n;
    for (int b = 0; b < n; ++b) op[a][b] = (a + b) % n;
  }
  return make_object(CategoryId::FinCRng, {n},
                     {{"op", std::move(op)}, {"inv", std::move(inv)}, {"mul", std::move(mul)}});
}

ObjPtr norm_object(const ObjPtr& g, const std::vector<int>& nsub) {
  std::vector<int> sub = nsub;
  std::sort(sub.begin(), sub.end());
  int nn = static_cast<int>(sub.size()), ng = g->order(0);
  Table op0(nn, std::vector<int>(nn)), inv0(1, std::vector<int>(nn));
  Table incl(1, std::vector<int>(nn));
  for (int i = 0; i < nn; ++i) {
    incl[0][i] = sub[i];
    inv0[0][i] = index_in(sub, g->inv(0, sub[i]));
    for (int j = 0; j < nn; ++j) op0[i][j] = index_in(sub, g->op(0, sub[i], sub[j]));
  }
  return make_object(CategoryId::Norm, {nn, ng},
                     {{"op0", std::move(op0)},
                      {"inv0", std::move(inv0)},
                      {"op1", g->tables().at("op")},
                      {"inv1", g->tables().at("inv")},
                      {"incl", std::move(incl)}});
}

ObjPtr xmod_trivial(const ObjPtr& t_abelian, const ObjPtr& g) {
  int nt = t_abelian->order(0), ng = g->order(0);
  Table bnd(1, std::vector<int>(nt, 0));
  Table act(ng, std::vector<int>(nt));
  for (int a = 0; a < ng; ++a)
    for (int t = 0; t < nt; ++t) act[a][t] = t;
  return make_object(CategoryId::XMod, {nt, ng},
                     {{"op0", t_abelian->tables().at("op")},
                      {"inv0", t_abelian->tables().at("inv")},
                      {"op1", g->tables().at("op")},
                      {"inv1", g->tables().at("inv")},
                      {"bnd", std::move(bnd)},
                      {"act", std::move(act)}});
}

ObjPtr builtin(CategoryId category, const std::string& name) {
  auto num = [&](size_t from) {
    try {
      size_t used = 0;
      int n = std::stoi(name.substr(from), &used);
      if (from + used != name.size() || n < 0) throw std::invalid_argument(name);
      return n;
    } catch (const std::exception&) {
      throw UnknownName("no builtin named '" + name + "'");
    }
  };
  switch (category) {
    case CategoryId::FinSet:
      return discrete_set(num(0));
    case CategoryId::FinPtSet:
      return pointed_set(num(0));
    case CategoryId::FinGrp:
      if (name == "S3") return symmetric3();
      if (name == "D4") return dihedral4();
      if (name == "Q8") return quaternion8();
      [[fallthrough]];
    case CategoryId::FinAb:
      if (name.rfind("Z/", 0) == 0) return cyclic_group(category, num(2));
      break;
    case CategoryId::FinCRng:
      if (name.rfind("Z/", 0) == 0) return cyclic_ring(num(2));
      if (name.rfind("zero-mul Z/", 0) == 0) return zero_mul_ring(num(11));
      break;
    case CategoryId::Norm:
      if (name == "{0,2} <| Z/4")
        return norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2});
      if (name == "A3 <| S3") return norm_object(symmetric3(), {0, 3, 4});
      if (name == "0 <| Z/2")
        return norm_object(cyclic_group(CategoryId::FinGrp, 2), {0});
      if (name == "Z/2 <| Z/2")
        return norm_object(cyclic_group(CategoryId::FinGrp, 2), {0, 1});
      break;
    case CategoryId::XMod:
      if (name == "zero-boundary Z/2 over Z/2")
        return xmod_trivial(cyclic_group(CategoryId::FinAb, 2),
                            cyclic_group(CategoryId::FinGrp, 2));
      if (name == "{0,2} <| Z/4")
        return norm_as_xmod(
            norm_object(cyclic_group(CategoryId::FinGrp, 4), {0, 2}));
      break;
  }
  throw UnknownName("no builtin named '" + name + "'");
}

// ---------------------------------------------------------------------------

namespace {

// Prime powers usable as cyclic factors, largest first.
std::vector<int> prime_powers(int max) {
  std::vector<int> out;
  for (int n = max; n >= 2; --n) {
    int m = n, p = 0;
    for (int d = 2; d <= m; ++d)
      if (m % d == 0) {
        p = d;
        while (m % d == 0) m /= d;
        break;
      }
    if (m == 1 && p != 0) {
      int q = n;
      bool pp = true;
      while (q > 1) {
        if (q % p) pp = false;
        q /= p;
      }
      if (pp) out.push_back(n);
    }
  }
  return out;
}

// Non-increasing sequences of prime powers with the given product.
void dims_rec(int n, size_t start, const std::vector<int>& pps,
              std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < pps.size(); ++i)
    if (n % pps[i] == 0) {
      cur.push_back(pps[i]);
      dims_rec(n / pps[i], i, pps, cur, out);
      cur.pop_back();
    }
}

std::vector<std::vector<int>> group_dims(int n, int max) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  dims_rec(n, 0, prime_powers(max), cur, out);
  return out;
}

struct MixedRadix {
  std::vector<int> dims;
  int total = 1;
  explicit MixedRadix(std::vector<int> d) : dims(std::move(d)) {
    for (int x : dims) total *= x;
  }
  std::vector<int> decode(int x) const {
    std::vector<int> a(dims.size());
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
      a[i] = x % dims[i];
      x /= dims[i];
    }
    return a;
  }
  int encode(const std::vector<int>& a) const {
    int x = 0;
    for (size_t i = 0; i < dims.size(); ++i) x = x * dims[i] + a[i];
    return x;
  }
  int add(int x, int y) const {
    auto a = decode(x), b = decode(y);
    for (size_t i = 0; i < dims.size(); ++i) a[i] = (a[i] + b[i]) % dims[i];
    return encode(a);
  }
  int neg(int x) const {
    auto a = decode(x);
    for (size_t i = 0; i < dims.size(); ++i) a[i] = (dims[i] - a[i]) % dims[i];
    return encode(a);
  }
  int scale(int k, int x) const {
    int r = 0;
    for (int i = 0; i < k; ++i) r = add(r, x);
    return r;
  }
};

ObjPtr abelian_from_dims(CategoryId cat, const std::vector<int>& dims) {
  MixedRadix mr(dims);
  int n = mr.total;
  Table op(n, std::vector<int>(n)), inv(1, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    inv[0][a] = mr.neg(a);
    for (int b = 0; b < n; ++b) op[a][b] = mr.add(a, b);
  }
  return make_object(cat, {n}, {{"op", std::move(op)}, {"inv", std::move(inv)}});
}

void dedup_push(std::vector<ObjPtr>& items, std::set<std::string>& seen, const ObjPtr& o) {
  if (seen.insert(o->key()).second) items.push_back(o);
}

std::vector<ObjPtr> all_groups(CategoryId cat, int max) {
  std::vector<ObjPtr> out;
  std::set<std::string> seen;
  for (int n = 1; n <= max; ++n)
    for (const auto& d : group_dims(n, max))
      dedup_push(out, seen, abelian_from_dims(cat, d));
  if (cat == CategoryId::FinGrp) {
    if (max >= 6) dedup_push(out, seen, symmetric3());
    if (max >= 8) {
      dedup_push(out, seen, dihedral4());
      dedup_push(out, seen, quaternion8());
    }
  }
  return out;
}

// Commutative non-unital multiplications on the group with the given cyclic
// decomposition: symmetric generator products extended bilinearly, kept when
// well-defined and associative.
void rng_structures(const std::vector<int>& dims, std::vector<ObjPtr>& items,
                    std::set<std::string>& seen) {
  MixedRadix mr(dims);
  int n = mr.total;
  int k = static_cast<int>(dims.size());
  std::vector<int> gens(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> a(k, 0);
    a[i] = 1;
    gens[i] = mr.encode(a);
  }
  int npairs = k * (k + 1) / 2;
  std::vector<int> m(npairs, 0);
  auto mij = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return m[i * k - i * (i - 1) / 2 + (j - i)];
  };
  auto mul_elem = [&](int x, int y) {
    auto a = mr.decode(x), b = mr.decode(y);
    int r = 0;
    for (int i = 0; i < k; ++i)
      if (a[i])
        for (int j = 0; j < k; ++j)
          if (b[j]) r = mr.add(r, mr.scale(a[i] * b[j] % 64, mij(i, j)));
    return r;
  };
  std::vector<int> counter(npairs, 0);
  for (;;) {
    m = counter;
    bool ok = true;
    // Well-definedness: each generator's order kills its products.
    for (int i = 0; i < k && ok; ++i)
      for (int j = i; j < k && ok; ++j)
        if (mr.scale(std::gcd(dims[i], dims[j]), mij(i, j)) != 0) ok = false;
    // Associativity on generators extends bilinearly to the whole algebra.
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j)
        for (int l = 0; l < k && ok; ++l)
          if (mul_elem(mij(i, j), gens[l]) != mul_elem(gens[i], mij(j, l))) ok = false;
    if (ok) {
      Table op(n, std::vector<int>(n)), inv(1, std::vector<int>(n)), mul(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a) {
        inv[0][a] = mr.neg(a);
        for (int b = 0; b < n; ++b) {
          op[a][b] = mr.add(a, b);
          mul[a][b] = mul_elem(a, b);
        }
      }
      dedup_push(items, seen,
                 make_object(CategoryId::FinCRng, {n},
                             {{"op", std::move(op)}, {"inv", std::move(inv)},
                              {"mul", std::move(mul)}}));
    }
    int pos = npairs - 1;
    while (pos >= 0 && counter[pos] == n - 1) counter[pos--] = 0;
    if (pos < 0) break;
    ++counter[pos];
  }
}

bool subset_normal(const ObjPtr& g, const std::vector<int>& sub) {
  std::vector<char> in(g->order(0), 0);
  for (int x : sub) in[x] = 1;
  for (int x : sub)
    for (int a = 0; a < g->order(0); ++a)
      if (!in[g->op(0, g->op(0, a, x), g->inv(0, a))]) return false;
  return true;
}

// The automorphism group of a group object, as a FinGrp object plus the
// permutation realizing each element (identity at index 0).
std::pair<ObjPtr, std::vector<std::vector<int>>> automorphism_group(const ObjPtr& t) {
  HomList hl = hom_enumerate(t, t, 1u << 20);
  std::vector<std::vector<int>> perms;
  for (const Morphism& f : hl.items)
    if (f.injective()) perms.push_back(f.maps[0]);
  std::vector<int> id(t->order(0));
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::stable_sort(perms.begin(), perms.end(),
                   [&](const std::vector<int>& a, const std::vector<int>& b) {
                     return (a == id) != (b == id) ? a == id : a < b;
                   });
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  int na = static_cast<int>(perms.size());
  Table op(na, std::vector<int>(na)), inv(1, std::vector<int>(na));
  for (int a = 0; a < na; ++a) {
    std::vector<int> ip(id.size());
    for (size_t x = 0; x < id.size(); ++x) ip[perms[a][x]] = static_cast<int>(x);
    inv[0][a] = idx.at(ip);
    for (int b = 0; b < na; ++b) {
      std::vector<int> c(id.size());
      for (size_t x = 0; x < id.size(); ++x) c[x] = perms[a][perms[b][x]];
      op[a][b] = idx.at(c);
    }
  }
  ObjPtr obj = make_object(CategoryId::FinGrp, {na},
                           {{"op", std::move(op)}, {"inv", std::move(inv)}});
  return {obj, perms};
}

}  // namespace

Catalog generate_all(CategoryId category, int max_order) {
  Catalog c{category, max_order, {}};
  std::set<std::string> seen;
  switch (category) {
    case CategoryId::FinSet:
    case CategoryId::FinPtSet:
      for (int n = 1; n <= max_order; ++n)
        dedup_push(c.items, seen, make_object(category, {n}, {}));
      break;
    case CategoryId::FinAb:
      if (max_order > 16) throw PreconditionFailed("abelian catalog supports order <= 16");
      c.items = all_groups(CategoryId::FinAb, max_order);
      break;
    case CategoryId::FinGrp:
      if (max_order > 8) throw PreconditionFailed("group catalog supports order <= 8");
      c.items = all_groups(CategoryId::FinGrp, max_order);
      break;
    case CategoryId::FinCRng: {
      if (max_order > 8) throw PreconditionFailed("ring catalog supports order <= 8");
      for (int n = 1; n <= max_order; ++n)
        for (const auto& d : group_dims(n, max_order)) rng_structures(d, c.items, seen);
      break;
    }
    case CategoryId::Norm: {
      if (max_order > 8) throw PreconditionFailed("group catalog supports order <= 8");
      for (const ObjPtr& g : all_groups(CategoryId::FinGrp, max_order)) {
        SubobjectList subs = subobject_enumerate(g);
        for (const SubobjectHandle& h : subs.items)
          if (subset_normal(g, h.subsets[0]))
            dedup_push(c.items, seen, norm_object(g, h.subsets[0]));
      }
      break;
    }
    case CategoryId::XMod: {
      if (max_order > 8) throw PreconditionFailed("group catalog supports order <= 8");
      std::vector<ObjPtr> groups = all_groups(CategoryId::FinGrp, max_order);
      for (const ObjPtr& t : groups) {
        auto [aut, perms] = automorphism_group(t);
        for (const ObjPtr& g : groups) {
          HomList bnds = hom_enumerate(t, g, 1u << 20);
          HomList acts = hom_enumerate(g, aut, 1u << 20);
          for (const Morphism& phi : acts.items) {
            Table act(g->order(0), std::vector<int>(t->order(0)));
            for (int a = 0; a < g->order(0); ++a) act[a] = perms[phi.maps[0][a]];
            for (const Morphism& b : bnds.items) {
              Table bnd(1, b.maps[0]);
              try {
                dedup_push(c.items, seen,
                           make_object(CategoryId::XMod, {t->order(0), g->order(0)},
                                       {{"op0", t->tables().at("op")},
                                        {"inv0", t->tables().at("inv")},
                                        {"op1", g->tables().at("op")},
                                        {"inv1", g->tables().at("inv")},
                                        {"bnd", std::move(bnd)},
                                        {"act", act}}));
              } catch (const AxiomViolation&) {
              }
            }
          }
        }
      }
      break;
    }
  }
  std::sort(c.items.begin(), c.items.end(), [](const ObjPtr& a, const ObjPtr& b) {
    if (a->sorts() != b->sorts()) return a->sorts() < b->sorts();
    return a->key() < b->key();
  });
  return c;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

nlohmann::json catalog_to_json(const Catalog& c) {
  nlohmann::json items = nlohmann::json::array();
  for (const ObjPtr& o : c.items) items.push_back(o->to_json());
  nlohmann::json j;
  j["schema"] = 1;
  j["category"] = category_name(c.category);
  j["max_order"] = c.max_order;
  j["count"] = c.items.size();
  j["content_hash"] = fnv1a(items.dump());
  j["items"] = items;
  return j;
}

Catalog catalog_from_json(const nlohmann::json& j) {
  try {
    Catalog c{category_from_name(j.at("category").get<std::string>()),
              j.at("max_order").get<int>(), {}};
    const nlohmann::json& items = j.at("items");
    if (j.at("content_hash").get<std::uint64_t>() != fnv1a(items.dump()))
      throw ParseError("corpus content hash mismatch");
    if (j.at("count").get<size_t>() != items.size())
      throw ParseError("corpus count mismatch");
    for (const auto& it : items) c.items.push_back(object_from_json(it));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad corpus file: ") + e.what());
  }
}

}  // namespace fincat
