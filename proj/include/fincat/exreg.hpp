#ifndef FINCAT_EXREG_HPP
#define FINCAT_EXREG_HPP

#include "fincat/factorize.hpp"
#include "fincat/relation.hpp"

namespace fincat {

// An object of the exact completion: a base object with the equivalence
// relation (idempotent) to be split.
struct ExObject {
  ObjPtr base;
  Relation eq;

  nlohmann::json to_json() const;
};

bool operator==(const ExObject& a, const ExObject& b);

ExObject make_ex_object(ObjPtr base, Relation eq);  // validates equivalence

// A morphism of the completion: a relation between the bases satisfying the
// bimodule, entireness and determinism laws.
struct ExMorphism {
  ExObject dom;
  ExObject cod;
  Relation rel;
};

bool operator==(const ExMorphism& a, const ExMorphism& b);

bool ex_morphism_laws_hold(const ExObject& dom, const ExObject& cod, const Relation& rel);
ExMorphism make_ex_morphism(ExObject dom, ExObject cod, Relation rel);  // LawViolation

ExObject embed(const ObjPtr& x);
ExMorphism embed_mor(const Morphism& f);

ExMorphism ex_identity(const ExObject& a);
ExMorphism ex_compose(const ExMorphism& g, const ExMorphism& f);
bool ex_is_iso(const ExMorphism& f);
bool ex_is_mono(const ExMorphism& f);
bool ex_is_regular_epi(const ExMorphism& f);

struct ExHomList {
  std::vector<ExMorphism> items;
  bool truncated = false;
};

// Every completion morphism between the two objects, canonically ordered.
ExHomList ex_hom_enumerate(const ExObject& a, const ExObject& b, size_t cap = 200000);

// All ExObjects over a base: one per equivalence relation.
std::vector<ExObject> ex_object_enumerate(const ObjPtr& base, size_t cap = 200000);

// Internal relations on a in the completion, encoded as eq-bimodule
// pair-sets on the base (eq . R . eq = R).  The filter is interpreted inside
// the completion: reflexive means eq <= R.
RelationList ex_relation_enumerate(const ExObject& a, RelFilter filter,
                                   size_t cap = 200000);

// Completion-level counterparts of the propcheck predicates (membership of
// a saturated pair-set is class-well-defined, so the elementwise forms carry
// over verbatim).
bool ex_rel_reflexive(const ExObject& a, const Relation& r);
bool ex_rel_symmetric(const Relation& r);
bool ex_rel_left_pseudoreflexive(const Relation& r);
bool ex_rel_pseudoreflexive(const Relation& r);
bool ex_rel_left_zero_symmetric(const Relation& r);  // pointed bases

struct ExReflection {
  ObjPtr obj;           // the coequalizer of eq in the base instance
  ExMorphism unit;      // a regular epimorphism onto embed(obj)
};

// Coequalizer of eq: quotient in exact instances; in Norm the two-sorted
// quotient followed by the boundary-image reflection.
ExReflection ex_reflect(const ExObject& a);

// The comparison sending (N <| G, E) to the crossed module N/E_N -> G/E_G
// with boundary induced by the inclusion and action by conjugation.
ObjPtr norm_to_xmod(const ExObject& a);

// A quasi-inverse witness: a Norm ExObject whose comparison image is
// isomorphic to the given crossed module T -> G.  Base is T <| (T x| G)
// with the diagonal on T and the congruence by {(u, bnd(u)^-1)} on the
// semidirect product.
ExObject xmod_to_norm_witness(const ObjPtr& xm);

struct ExRegReport {
  bool fully_faithful = true;
  bool subobjects_embedded = true;
  bool covered = true;
  size_t ex_objects = 0;
  size_t comparisons = 0;

  bool ok() const { return fully_faithful && subobjects_embedded && covered; }
  nlohmann::json to_json() const;
};

// Audits, on the sample: embed is fully faithful; sub-ExObjects of embedded
// objects are embedded; every ExObject is covered by a regular epi from an
// embedded object.
ExRegReport verify_exreg_characterization(const std::vector<ExObject>& sample,
                                          const std::vector<ObjPtr>& bases,
                                          size_t cap = 200000);

}  // namespace fincat

#endif
