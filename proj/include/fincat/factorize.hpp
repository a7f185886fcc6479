#ifndef FINCAT_FACTORIZE_HPP
#define FINCAT_FACTORIZE_HPP

#include "fincat/relation.hpp"
#include "fincat/subobject.hpp"

namespace fincat {

struct Factorization {
  Morphism epi;   // carrier-surjective per sort (regular epi in all instances)
  Morphism mono;  // injective per sort
};

// f = mono . epi through the image subobject.
Factorization image_factorize(const Morphism& f);

struct QuotientResult {
  ObjPtr obj;
  Morphism q;
};

// Quotient of x by per-sort class partitions; verifies that every operation
// descends (throws NotExactInstance if not).  Class ids must be dense and
// ordered by minimal representative.
QuotientResult quotient_by_classes(const ObjPtr& x,
                                   const std::vector<std::vector<int>>& class_of);

// Coequalizer of the two projections of an equivalence relation; exact
// instances only (NotExactInstance on Norm).
QuotientResult quotient_by_congruence(const ObjPtr& x, const Relation& e);

// Cokernel: FinAb, FinGrp, FinCRng, XMod directly; Norm via the XMod
// cokernel followed by the Norm reflection (image of the boundary).
QuotientResult cokernel(const Morphism& f);

// A normal-subgroup inclusion viewed as a crossed module, with conjugation
// action; and back (requires injective boundary).
ObjPtr norm_as_xmod(const ObjPtr& nrm);
ObjPtr xmod_as_norm(const ObjPtr& xm);

// Reflection XMod -> Norm-inside-XMod: image factorization of the boundary.
// Returns the reflected object (still an XMod object, with injective
// boundary) and the unit, a regular epimorphism.
QuotientResult xmod_norm_reflection(const ObjPtr& xm);

}  // namespace fincat

#endif
