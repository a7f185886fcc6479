#ifndef FINCAT_SUBOBJECT_HPP
#define FINCAT_SUBOBJECT_HPP

#include <optional>
#include <vector>

#include "fincat/morphism.hpp"

namespace fincat {

// Per-sort carrier subsets closed under all operations, reified as an object
// of the instance together with its inclusion.
struct SubobjectHandle {
  ObjPtr ambient;
  std::vector<std::vector<int>> subsets;  // sorted ascending per sort
  ObjPtr sub;
  Morphism inclusion;

  int order(int s = 0) const { return static_cast<int>(subsets[s].size()); }
  bool contains(int s, int x) const;
};

// Operation closure of per-sort subsets (constants, group ops, ring
// multiplication is not closure-relevant beyond the subsets themselves being
// multiplied together, inclusion/boundary images, action of the chosen
// sort-1 subset on sort 0).
std::vector<std::vector<int>> close_subsets(const ObjPtr& a,
                                            std::vector<std::vector<int>> seed);

bool subsets_closed(const ObjPtr& a, const std::vector<std::vector<int>>& subsets);

// Closure plus the instance constraint that the pair of subsets is itself an
// object (for Norm: the sort-0 image must be normal in the sort-1 subgroup).
bool subobject_valid(const ObjPtr& a, const std::vector<std::vector<int>>& subsets);

SubobjectHandle make_subobject(ObjPtr ambient, std::vector<std::vector<int>> subsets);

struct SubobjectList {
  std::vector<SubobjectHandle> items;
  bool truncated = false;  // CapExceeded: partial results
};

// All subobjects in canonical (lexicographic on subset vectors) order.
SubobjectList subobject_enumerate(const ObjPtr& a, size_t cap = 100000);

// Restriction of a morphism to a subobject of its domain (image handle).
std::vector<std::vector<int>> image_subsets(const Morphism& f);

}  // namespace fincat

#endif
