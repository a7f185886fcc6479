#ifndef FINCAT_CATALOG_HPP
#define FINCAT_CATALOG_HPP

#include <string>
#include <vector>

#include "fincat/finobject.hpp"

namespace fincat {

// ---- named builders -------------------------------------------------------

ObjPtr discrete_set(int n);                     // FinSet
ObjPtr pointed_set(int n);                      // FinPtSet
ObjPtr cyclic_group(CategoryId cat, int n);     // FinGrp or FinAb
ObjPtr symmetric3();                            // S3 in FinGrp
ObjPtr dihedral4();                             // D4 (order 8) in FinGrp
ObjPtr quaternion8();                           // Q8 in FinGrp
ObjPtr cyclic_ring(int n);                      // Z/n with mod-n multiplication
ObjPtr zero_mul_ring(int n);                    // Z/n additively, xy = 0
// A Norm object from a group and a normal-subgroup carrier subset.
ObjPtr norm_object(const ObjPtr& g, const std::vector<int>& nsub);
// T abelian, zero boundary, trivial action.
ObjPtr xmod_trivial(const ObjPtr& t_abelian, const ObjPtr& g);

// Name-based lookup: "N" (sets), "Z/N", "S3", "D4", "Q8", "zero-mul Z/N",
// "{0,2} <| Z/4", "A3 <| S3", "zero-boundary Z/2 over Z/2", ...
// Throws UnknownName.
ObjPtr builtin(CategoryId category, const std::string& name);

// ---- exhaustive catalogs --------------------------------------------------

struct Catalog {
  CategoryId category;
  int max_order;  // per sort
  std::vector<ObjPtr> items;  // canonically ordered, one per iso class
};

// All isomorphism classes of objects with every sort of order <= max_order
// (FinSet/FinPtSet: one object per size; Norm/XMod: sort bounds applied
// per component).  Deduplicated by canonical key.
Catalog generate_all(CategoryId category, int max_order);

// Corpus file: {"schema":1,"category","max_order","count","content_hash",
// "items":[structure json...]}.  The hash is FNV-1a over the serialized
// item list; load verifies it.
nlohmann::json catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const nlohmann::json& j);

std::uint64_t fnv1a(const std::string& data);

}  // namespace fincat

#endif
