#ifndef FINCAT_HOM_HPP
#define FINCAT_HOM_HPP

#include "fincat/morphism.hpp"

namespace fincat {

struct HomList {
  std::vector<Morphism> items;
  bool truncated = false;
};

// All homomorphisms A -> B in lexicographic-on-maps order, truncated at cap.
HomList hom_enumerate(const ObjPtr& a, const ObjPtr& b, size_t cap = 2000);

}  // namespace fincat

#endif
