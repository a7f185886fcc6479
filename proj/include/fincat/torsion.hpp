#ifndef FINCAT_TORSION_HPP
#define FINCAT_TORSION_HPP

#include "fincat/factorize.hpp"
#include "fincat/limits.hpp"
#include "fincat/propcheck.hpp"
#include "fincat/relation.hpp"

namespace fincat {

// The three shipped torsion theories: p-primary part of abelian groups,
// nilradical of commutative rngs, and kernels-of-the-boundary in crossed
// modules (with torsion-free part the crossed modules with monic boundary).
enum class TorsionId { PPrimaryAb, NilRedCRng, AbNormXMod };

struct TorsionInstance {
  TorsionId id;
  int p = 0;  // the prime, PPrimaryAb only

  CategoryId ambient() const;
  std::string name() const;
};

TorsionInstance p_primary(int p);  // PreconditionFailed unless p is prime
TorsionInstance nil_red();
TorsionInstance ab_norm();

// The radical T(C) as a subobject of C.
SubobjectHandle torsion_part(const TorsionInstance& inst, const ObjPtr& c);

bool is_torsion(const TorsionInstance& inst, const ObjPtr& c);       // TC = C
bool is_torsion_free(const TorsionInstance& inst, const ObjPtr& c);  // TC = 0

struct Reflection {
  ObjPtr obj;      // LC, the torsion-free quotient
  Morphism unit;   // C -> LC, a regular epimorphism with kernel TC
};

Reflection reflect(const TorsionInstance& inst, const ObjPtr& c);

// L on morphisms: the unique map with reflect_mor(h) . unit = unit . h.
Morphism reflect_mor(const TorsionInstance& inst, const Morphism& h);

// Exactness of 0 -> TC -> C -> LC -> 0 plus hom-orthogonality of TC into LC.
bool verify_ses(const TorsionInstance& inst, const ObjPtr& c);

// The reflector preserves the pullback of the unit of q along f (f with
// torsion-free domain into LQ): the induced LP -> dom(f) is an isomorphism
// commuting with the projections.
bool check_semi_left_exact(const TorsionInstance& inst, const ObjPtr& q,
                           const Morphism& f);

// Two equivalent sweeps: subobjects of torsion sample objects are torsion,
// and L preserves monomorphisms between sample objects.
PropertyVerdict is_hereditary(const TorsionInstance& inst,
                              const std::vector<ObjPtr>& sample,
                              size_t cap = 2000);

// The subcategory coequalizer of E (ambient coequalizer followed by L)
// stays a coequalizer after pulling the fork back along f.
bool check_stable_coequalizer(const TorsionInstance& inst, const ObjPtr& x,
                              const Relation& e, const Morphism& f);

// Pulling the cokernel square of a Bourn-normal mono m back along f yields
// the cokernel of the induced comparison.
bool check_stable_cokernel(const Morphism& m, const Morphism& f);

struct NormalFactorization {
  Morphism n;  // mono with trivial cokernel
  Morphism k;  // normal mono (kernel of the cokernel of m)
};

NormalFactorization factor_trivial_cokernel_normal(const Morphism& m);

// If the pullback of a torsion-free regular epi p along f is torsion-free,
// so is dom(f).
bool check_effective_descent(const TorsionInstance& inst, const Morphism& p,
                             const Morphism& f);

struct RqkFactorization {
  Morphism q;  // regular epi onto the image
  Morphism g;  // mono + epi comparison (an iso here)
  Morphism k;  // regular mono (kernel of the cokernel)
};

RqkFactorization factor_rqk(const Morphism& f);  // FinAb only

}  // namespace fincat

#endif
