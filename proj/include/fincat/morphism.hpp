#ifndef FINCAT_MORPHISM_HPP
#define FINCAT_MORPHISM_HPP

#include <vector>

#include "fincat/finobject.hpp"

namespace fincat {

// A verified homomorphism: per-sort total functions on carriers.
struct Morphism {
  ObjPtr dom;
  ObjPtr cod;
  std::vector<std::vector<int>> maps;

  int apply(int s, int x) const { return maps[s][x]; }
  int operator()(int x) const { return maps[0][x]; }

  bool surjective() const;
  bool injective() const;
  bool is_identity() const;

  nlohmann::json to_json() const;
};

bool same_object(const ObjPtr& a, const ObjPtr& b);

// Checks the homomorphism condition against every table; no throw.
bool is_homomorphism(const ObjPtr& dom, const ObjPtr& cod,
                     const std::vector<std::vector<int>>& maps);

// Throws NotHomomorphism / CategoryMismatch on invalid data.
Morphism make_morphism(ObjPtr dom, ObjPtr cod, std::vector<std::vector<int>> maps);

Morphism identity_morphism(ObjPtr a);
Morphism zero_morphism(ObjPtr a, ObjPtr b);  // pointed instances
Morphism compose(const Morphism& g, const Morphism& f);

bool operator==(const Morphism& a, const Morphism& b);
bool operator<(const Morphism& a, const Morphism& b);  // lexicographic on maps

}  // namespace fincat

#endif
