#include "fincat/subobject.hpp"

#include <algorithm>
#include <set>

namespace fincat {

namespace {

std::vector<std::vector<bool>> to_mask(const ObjPtr& a,
                                       const std::vector<std::vector<int>>& subsets) {
  std::vector<std::vector<bool>> m(subsets.size());
  for (size_t s = 0; s < subsets.size(); ++s) {
    m[s].assign(a->order(static_cast<int>(s)), false);
    for (int x : subsets[s]) m[s][x] = true;
  }
  return m;
}

std::vector<std::vector<int>> from_mask(const std::vector<std::vector<bool>>& m) {
  std::vector<std::vector<int>> out(m.size());
  for (size_t s = 0; s < m.size(); ++s)
    for (size_t x = 0; x < m[s].size(); ++x)
      if (m[s][x]) out[s].push_back(static_cast<int>(x));
  return out;
}

}  // namespace

bool SubobjectHandle::contains(int s, int x) const {
  return std::binary_search(subsets[s].begin(), subsets[s].end(), x);
}

std::vector<std::vector<int>> close_subsets(const ObjPtr& a,
                                            std::vector<std::vector<int>> seed) {
  CategoryId cat = a->category();
  auto m = to_mask(a, seed);
  if (is_pointed(cat))
    for (auto& ms : m)
      if (!ms.empty()) ms[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](int s, int x) {
      if (!m[s][x]) {
        m[s][x] = true;
        changed = true;
      }
    };
    if (is_group_like(cat)) {
      int ns = sort_count(cat);
      for (int s = 0; s < ns; ++s) {
        int n = a->order(s);
        for (int x = 0; x < n; ++x) {
          if (!m[s][x]) continue;
          add(s, a->inv(s, x));
          for (int y = 0; y < n; ++y)
            if (m[s][y]) add(s, a->op(s, x, y));
        }
      }
    }
    if (cat == CategoryId::FinCRng) {
      int n = a->order(0);
      for (int x = 0; x < n; ++x)
        if (m[0][x])
          for (int y = 0; y < n; ++y)
            if (m[0][y]) add(0, a->mul(x, y));
    }
    if (cat == CategoryId::Norm) {
      for (int x = 0; x < a->order(0); ++x)
        if (m[0][x]) add(1, a->incl(x));
    }
    if (cat == CategoryId::XMod) {
      for (int x = 0; x < a->order(0); ++x)
        if (m[0][x]) add(1, a->bnd(x));
      for (int g = 0; g < a->order(1); ++g)
        if (m[1][g])
          for (int t = 0; t < a->order(0); ++t)
            if (m[0][t]) add(0, a->act(g, t));
    }
  }
  return from_mask(m);
}

bool subsets_closed(const ObjPtr& a, const std::vector<std::vector<int>>& subsets) {
  return close_subsets(a, subsets) == subsets;
}

bool subobject_valid(const ObjPtr& a, const std::vector<std::vector<int>>& subsets) {
  if (!subsets_closed(a, subsets)) return false;
  if (a->category() == CategoryId::Norm) {
    // the included image of the sort-0 subgroup must be normal in the
    // chosen sort-1 subgroup
    std::vector<bool> img(a->order(1), false);
    for (int x : subsets[0]) img[a->incl(x)] = true;
    for (int g : subsets[1])
      for (int x : subsets[0]) {
        int c = a->op(1, a->op(1, g, a->incl(x)), a->inv(1, g));
        if (!img[c]) return false;
      }
  }
  return true;
}

SubobjectHandle make_subobject(ObjPtr ambient, std::vector<std::vector<int>> subsets) {
  for (auto& ss : subsets) std::sort(ss.begin(), ss.end());
  if (!subobject_valid(ambient, subsets))
    throw AxiomViolation("subsets do not form a subobject");
  CategoryId cat = ambient->category();
  int ns = sort_count(cat);
  // dense renumbering; 0 stays at 0 in pointed instances
  std::vector<std::vector<int>> back(ns);
  for (int s = 0; s < ns; ++s) {
    back[s].assign(ambient->order(s), -1);
    for (size_t i = 0; i < subsets[s].size(); ++i)
      back[s][subsets[s][i]] = static_cast<int>(i);
  }
  std::map<std::string, Table> tables;
  for (const auto& [name, table] : ambient->tables()) {
    // table shapes follow the naming scheme of FinObject
    int arg0 = 0, arg1 = -1, val = 0;
    if (name == "op" || name == "mul") { arg0 = 0; arg1 = 0; val = 0; }
    else if (name == "inv") { arg0 = 0; val = 0; }
    else if (name == "op0") { arg0 = 0; arg1 = 0; val = 0; }
    else if (name == "inv0") { arg0 = 0; val = 0; }
    else if (name == "op1") { arg0 = 1; arg1 = 1; val = 1; }
    else if (name == "inv1") { arg0 = 1; val = 1; }
    else if (name == "incl" || name == "bnd") { arg0 = 0; val = 1; }
    else if (name == "act") { arg0 = 1; arg1 = 0; val = 0; }
    Table sub;
    if (arg1 == -1) {
      sub.emplace_back();
      for (int x : subsets[arg0]) sub[0].push_back(back[val][table[0][x]]);
    } else {
      for (int x : subsets[arg0]) {
        std::vector<int> row;
        for (int y : subsets[arg1]) row.push_back(back[val][table[x][y]]);
        sub.push_back(std::move(row));
      }
    }
    tables[name] = std::move(sub);
  }
  std::vector<int> sizes;
  for (auto& ss : subsets) sizes.push_back(static_cast<int>(ss.size()));
  ObjPtr sub = make_object(cat, sizes, std::move(tables));
  std::vector<std::vector<int>> incl_maps(ns);
  for (int s = 0; s < ns; ++s) incl_maps[s] = subsets[s];
  Morphism incl{sub, ambient, std::move(incl_maps)};
  return SubobjectHandle{std::move(ambient), std::move(subsets), std::move(sub),
                         std::move(incl)};
}

SubobjectList subobject_enumerate(const ObjPtr& a, size_t cap) {
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<std::vector<std::vector<int>>> work;
  int ns = sort_count(a->category());
  std::vector<std::vector<int>> seed(ns);
  auto base = close_subsets(a, seed);
  seen.insert(base);
  work.push_back(base);
  bool truncated = false;
  for (size_t i = 0; i < work.size(); ++i) {
    auto cur = work[i];
    for (int s = 0; s < ns && !truncated; ++s) {
      for (int x = 0; x < a->order(s); ++x) {
        if (std::binary_search(cur[s].begin(), cur[s].end(), x)) continue;
        auto ext = cur;
        ext[s].push_back(x);
        auto closed = close_subsets(a, ext);
        if (seen.insert(closed).second) {
          if (seen.size() > cap) {
            truncated = true;
            break;
          }
          work.push_back(std::move(closed));
        }
      }
    }
    if (truncated) break;
  }
  SubobjectList out;
  out.truncated = truncated;
  for (const auto& subs : seen)
    if (subobject_valid(a, subs)) out.items.push_back(make_subobject(a, subs));
  std::sort(out.items.begin(), out.items.end(),
            [](const SubobjectHandle& l, const SubobjectHandle& r) {
              return l.subsets < r.subsets;
            });
  return out;
}

std::vector<std::vector<int>> image_subsets(const Morphism& f) {
  int ns = static_cast<int>(f.maps.size());
  std::vector<std::vector<int>> out(ns);
  for (int s = 0; s < ns; ++s) {
    std::vector<bool> hit(f.cod->order(s), false);
    for (int v : f.maps[s]) hit[v] = true;
    for (size_t x = 0; x < hit.size(); ++x)
      if (hit[x]) out[s].push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace fincat
