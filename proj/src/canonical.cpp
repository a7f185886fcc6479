#include "fincat/canonical.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace fincat {
namespace {

// Shape of one table: which sorts index the rows/columns and where the
// values live.  arg1 == -1 marks a unary table.
struct TableDesc {
  const Table* table;
  int arg0;  // sort indexing rows (unary: the argument sort)
  int arg1;  // sort indexing columns, or -1
  int val;   // sort of the values
};

std::vector<TableDesc> table_layout(CategoryId cat,
                                    const std::map<std::string, Table>& tables) {
  auto get = [&](const char* n) { return &tables.at(n); };
  std::vector<TableDesc> out;
  switch (cat) {
    case CategoryId::FinSet:
    case CategoryId::FinPtSet:
      break;
    case CategoryId::FinGrp:
    case CategoryId::FinAb:
      out = {{get("op"), 0, 0, 0}, {get("inv"), 0, -1, 0}};
      break;
    case CategoryId::FinCRng:
      out = {{get("op"), 0, 0, 0}, {get("inv"), 0, -1, 0}, {get("mul"), 0, 0, 0}};
      break;
    case CategoryId::Norm:
      out = {{get("op0"), 0, 0, 0}, {get("inv0"), 0, -1, 0},
             {get("op1"), 1, 1, 1}, {get("inv1"), 1, -1, 1},
             {get("incl"), 0, -1, 1}};
      break;
    case CategoryId::XMod:
      out = {{get("op0"), 0, 0, 0}, {get("inv0"), 0, -1, 0},
             {get("op1"), 1, 1, 1}, {get("inv1"), 1, -1, 1},
             {get("bnd"), 0, -1, 1}, {get("act"), 1, 0, 0}};
      break;
  }
  return out;
}

// Canonical form by minimizing, over all generator sequences, the stream of
// table values read off while numbering elements on demand.
//
// Elements are assigned positions in discovery order: the distinguished
// points first, then whatever the emission stream touches, with explicit
// generator choices whenever the closure stalls.  For each newly processed
// element we emit its unary values and its products with all previously
// processed elements; an emitted value that has no position yet receives the
// next free position of its sort.  The whole evolution (which table cell is
// read next, when a fresh position is handed out, when a generator is
// needed and of which sort) is a function of the emitted prefix, so two
// branches can be compared lexicographically emission by emission.
//
// Branching happens only at generator events, so the search tree has size
// about n^(number of generators), with best-prefix pruning on top.
struct Canonicalizer {
  const std::vector<int>& sorts;
  const std::vector<TableDesc>& descs;

  std::vector<std::vector<int>> pos;   // old element -> position, -1 unassigned
  std::vector<int> cnt;                // assigned count per sort
  std::vector<std::pair<int, int>> order;  // (sort, old element) in discovery order
  size_t processed = 0;                // prefix of `order` fully emitted

  std::vector<int> cur, best;
  size_t elen = 0;
  bool have_best = false;

  Canonicalizer(const std::vector<int>& s, const std::vector<TableDesc>& d)
      : sorts(s), descs(d) {
    pos.resize(sorts.size());
    cnt.assign(sorts.size(), 0);
    for (size_t i = 0; i < sorts.size(); ++i) pos[i].assign(sorts[i], -1);
  }

  void assign(int s, int e) {
    pos[s][e] = cnt[s]++;
    order.emplace_back(s, e);
  }
  void unassign() {
    auto [s, e] = order.back();
    order.pop_back();
    pos[s][e] = -1;
    --cnt[s];
  }

  // Emits one value; returns false when the branch is proven non-minimal.
  bool emit(int sv, int v) {
    if (pos[sv][v] < 0) assign(sv, v);
    int code = pos[sv][v];
    if (have_best) {
      if (code > best[elen]) return false;
      if (code < best[elen]) {
        best[elen] = code;
        std::fill(best.begin() + elen + 1, best.end(), INT_MAX);
      }
    }
    if (cur.size() <= elen) cur.resize(elen + 1);
    cur[elen++] = code;
    return true;
  }

  // Emits everything for order[processed..] until the queue drains.
  bool run_emissions() {
    while (processed < order.size()) {
      auto [s, e] = order[processed];
      for (const TableDesc& td : descs) {
        if (td.arg1 == -1) {
          if (td.arg0 == s && !emit(td.val, (*td.table)[0][e])) return false;
          continue;
        }
        for (size_t j = 0; j <= processed; ++j) {
          auto [s2, e2] = order[j];
          if (td.arg0 == s && td.arg1 == s2 &&
              !emit(td.val, (*td.table)[e][e2]))
            return false;
          if (td.arg1 == s && td.arg0 == s2 &&
              !(j == processed && td.arg0 == td.arg1) &&
              !emit(td.val, (*td.table)[e2][e]))
            return false;
        }
      }
      ++processed;
    }
    return true;
  }

  void dfs() {
    size_t order0 = order.size(), processed0 = processed, elen0 = elen;
    if (run_emissions()) {
      int gsort = -1;
      for (size_t s = 0; s < sorts.size(); ++s)
        if (cnt[s] < sorts[s]) {
          gsort = static_cast<int>(s);
          break;
        }
      if (gsort < 0) {
        best.assign(cur.begin(), cur.begin() + elen);
        have_best = true;
      } else {
        for (int e = 0; e < sorts[gsort]; ++e) {
          if (pos[gsort][e] >= 0) continue;
          assign(gsort, e);
          dfs();
          unassign();
        }
      }
    }
    while (order.size() > order0) unassign();
    processed = processed0;
    elen = elen0;
  }
};

}  // namespace

std::string canonical_key(CategoryId cat, const std::vector<int>& sorts,
                          const std::map<std::string, Table>& tables) {
  std::ostringstream key;
  key << category_name(cat);
  for (int n : sorts) key << "|" << n;
  auto descs = table_layout(cat, tables);
  if (descs.empty()) return key.str();  // (pointed) sets: size determines iso class

  Canonicalizer cz(sorts, descs);
  // The distinguished point of each sort is part of the structure and must
  // stay at position 0.
  for (size_t s = 0; s < sorts.size(); ++s)
    if (sorts[s] > 0) cz.assign(static_cast<int>(s), 0);
  cz.dfs();

  key << "|";
  for (size_t i = 0; i < cz.best.size(); ++i)
    key << cz.best[i] << (i + 1 < cz.best.size() ? "," : "");
  return key.str();
}

}  // namespace fincat
