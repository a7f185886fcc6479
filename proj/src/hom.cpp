#include "fincat/hom.hpp"

#include <algorithm>

namespace fincat {

namespace {

// Lexicographic backtracking over maps on one sort.  check(partial, k) is
// called after position k is assigned and prunes inconsistent prefixes.
template <typename Check, typename Emit>
void backtrack(int n, int m, const Check& check, const Emit& emit,
               std::vector<int>& f, int k, bool* stop) {
  if (*stop) return;
  if (k == n) {
    emit(f);
    return;
  }
  int first = 0, last = m;
  if (k == 0 && n > 0) { /* pointed handled by check */ }
  for (int v = first; v < last && !*stop; ++v) {
    f[k] = v;
    if (check(f, k)) backtrack(n, m, check, emit, f, k + 1, stop);
  }
  f[k] = -1;
}

// Single-sort homomorphism enumeration (FinSet/FinPtSet/FinGrp/FinAb/FinCRng)
// and the per-sort group enumeration shared by Norm/XMod.
std::vector<std::vector<int>> enumerate_sorted_maps(
    const FinObject& a, const FinObject& b, int s, bool pointed, bool group,
    bool ring, size_t cap, bool* truncated) {
  int n = a.order(s), m = b.order(s);
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  if (m == 0) return out;  // no map into the empty carrier
  std::vector<int> f(n, -1);
  bool stop = false;
  auto check = [&](const std::vector<int>& g, int k) {
    if (pointed && k == 0 && g[0] != 0) return false;
    if (group) {
      for (int x = 0; x <= k; ++x)
        for (int y = 0; y <= k; ++y) {
          int z = a.op(s, x, y);
          if (z <= k && g[z] != b.op(s, g[x], g[y])) return false;
        }
      if (ring)
        for (int x = 0; x <= k; ++x)
          for (int y = 0; y <= k; ++y) {
            int w = a.mul(x, y);
            if (w <= k && g[w] != b.mul(g[x], g[y])) return false;
          }
    }
    return true;
  };
  auto emit = [&](const std::vector<int>& g) {
    out.push_back(g);
    if (out.size() >= cap) {
      stop = true;
      *truncated = true;
    }
  };
  backtrack(n, m, check, emit, f, 0, &stop);
  return out;
}

}  // namespace

HomList hom_enumerate(const ObjPtr& a, const ObjPtr& b, size_t cap) {
  if (a->category() != b->category())
    throw CategoryMismatch("hom_enumerate: objects in different categories");
  CategoryId cat = a->category();
  HomList out;
  bool pointed = is_pointed(cat);
  switch (cat) {
    case CategoryId::FinSet:
    case CategoryId::FinPtSet:
    case CategoryId::FinGrp:
    case CategoryId::FinAb:
    case CategoryId::FinCRng: {
      bool group = is_group_like(cat);
      bool ring = cat == CategoryId::FinCRng;
      auto maps = enumerate_sorted_maps(*a, *b, 0, pointed, group, ring, cap,
                                        &out.truncated);
      for (auto& m : maps) {
        // inverse preservation follows from the operation for groups, but
        // the full check is cheap and guards the backtracking logic
        if (group && !is_homomorphism(a, b, {m})) continue;
        out.items.push_back(Morphism{a, b, {std::move(m)}});
      }
      break;
    }
    case CategoryId::Norm: {
      // the sort-0 component is forced by the sort-1 component
      bool trunc = false;
      auto gmaps = enumerate_sorted_maps(*a, *b, 1, true, true, false,
                                         size_t(1) << 30, &trunc);
      std::vector<int> img_to_n(b->order(1), -1);
      for (int x = 0; x < b->order(0); ++x) img_to_n[b->incl(x)] = x;
      for (auto& fg : gmaps) {
        std::vector<int> fn(a->order(0));
        bool ok = true;
        for (int x = 0; x < a->order(0) && ok; ++x) {
          int v = img_to_n[fg[a->incl(x)]];
          if (v < 0) ok = false;
          else fn[x] = v;
        }
        if (!ok || !is_homomorphism(a, b, {fn, fg})) continue;
        out.items.push_back(Morphism{a, b, {std::move(fn), std::move(fg)}});
      }
      break;
    }
    case CategoryId::XMod: {
      bool trunc = false;
      auto tmaps = enumerate_sorted_maps(*a, *b, 0, true, true, false,
                                         size_t(1) << 30, &trunc);
      auto gmaps = enumerate_sorted_maps(*a, *b, 1, true, true, false,
                                         size_t(1) << 30, &trunc);
      for (auto& ft : tmaps)
        for (auto& fg : gmaps)
          if (is_homomorphism(a, b, {ft, fg}))
            out.items.push_back(Morphism{a, b, {ft, fg}});
      break;
    }
  }
  std::sort(out.items.begin(), out.items.end());
  if (out.items.size() > cap) {
    out.items.resize(cap);
    out.truncated = true;
  }
  return out;
}

}  // namespace fincat
