#ifndef FINCAT_RELATION_HPP
#define FINCAT_RELATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fincat/limits.hpp"

namespace fincat {

using PairSet = std::vector<std::pair<int, int>>;  // sorted ascending, unique

// A relation from dom to cod: a subalgebra of the product, stored
// extensionally as per-sort pair-sets.
struct Relation {
  ObjPtr dom;
  ObjPtr cod;
  std::vector<PairSet> pairs;

  bool contains(int s, int x, int y) const;
  bool is_endorelation() const { return same_object(dom, cod); }

  nlohmann::json to_json() const;
};

enum class RelOrder { LE, GE, EQ, INCOMPARABLE };

// Validates that the pair-sets form a subobject of product(dom, cod);
// throws AxiomViolation otherwise.
Relation make_relation(ObjPtr dom, ObjPtr cod, std::vector<PairSet> pairs);

bool relation_subobject_valid(const ObjPtr& dom, const ObjPtr& cod,
                              const std::vector<PairSet>& pairs);

Relation graph(const Morphism& f);
Relation diagonal(const ObjPtr& x);
Relation total_relation(const ObjPtr& x);  // X x X when it is a subalgebra (always)
Relation opposite(const Relation& r);

// Set-theoretic composite SR = {(x,z) : exists y, xRy and ySz}; this is the
// regular-image composition because regular epis are carrier surjections in
// every shipped instance.  Asserts closure of the result.
Relation compose_rel(const Relation& s, const Relation& r);

RelOrder leq(const Relation& r, const Relation& s);
bool rel_le(const Relation& r, const Relation& s);
Relation meet(const Relation& r, const Relation& s);
bool operator==(const Relation& a, const Relation& b);

std::optional<Morphism> is_map(const Relation& r);

struct RelationLemmaReport {
  bool kernel_pair_ok;   // p°p equals the kernel pair of p
  bool regular_epi_iff;  // pp° = 1  <=>  p carrier-surjective
};
RelationLemmaReport check_relation_lemma(const Morphism& p);

// The kernel-pair relation of p as a pair-set (pullback of p against itself).
Relation kernel_pair_relation(const Morphism& p);

enum class RelFilter { Any, Reflexive, Equivalence };

struct RelationList {
  std::vector<Relation> items;
  bool truncated = false;
};

// All binary relations on x passing the filter, canonically ordered.
RelationList relation_enumerate(const ObjPtr& x, RelFilter filter, size_t cap = 200000);

// All relations from x to y (subalgebras of the product), canonically ordered.
RelationList relation_enumerate_between(const ObjPtr& x, const ObjPtr& y,
                                        size_t cap = 200000);

}  // namespace fincat

#endif
