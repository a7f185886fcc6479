#ifndef FINCAT_PROPCHECK_HPP
#define FINCAT_PROPCHECK_HPP

#include <optional>

#include "fincat/relation.hpp"

namespace fincat {

// Universally quantified category properties can only be refuted or
// sample-confirmed at this scale; verdicts carry their search bounds.
enum class Verdict { ConfirmedOnSample, RefutedWithWitness, Unknown };

const char* verdict_name(Verdict v);

struct PropertyVerdict {
  Verdict holds = Verdict::Unknown;
  std::optional<Relation> witness_relation;
  std::optional<Morphism> witness_morphism;
  size_t objects_swept = 0;
  size_t relations_swept = 0;
  size_t cap = 0;
  bool truncated = false;

  nlohmann::json to_json() const;
};

bool is_reflexive(const Relation& r);
bool is_symmetric(const Relation& r);
bool is_transitive(const Relation& r);
bool is_equivalence(const Relation& r);

// xRy implies xRx; computed elementwise and cross-checked against the
// relational formula 1 n R°R <= R.
bool is_left_pseudoreflexive(const Relation& r);
bool is_right_pseudoreflexive(const Relation& r);
bool is_pseudoreflexive(const Relation& r);

// f exhibits R as left pseudosymmetric: (f z) R y implies y R (f z).
bool is_left_pseudosymmetric(const Relation& r, const Morphism& f);

struct PseudoSymWitness {
  std::optional<Morphism> f;
  // Absence is definitive only when the search space was complete (pointed
  // instances: f = 0 suffices); otherwise absence means Unknown.
  bool complete = false;
};

// Pointed instances check only the zero map (which is complete); FinSet
// sweeps every map out of the given probe objects.
PseudoSymWitness left_pseudosymmetric_witness(const Relation& r,
                                              const std::vector<ObjPtr>& probes,
                                              size_t cap = 2000);

// Refutes "every reflexive relation is an equivalence relation" or confirms
// it on the swept objects.
PropertyVerdict maltsev_witness(CategoryId category, const std::vector<ObjPtr>& objects,
                                size_t cap = 200000);

// Refutes or sample-confirms "every left pseudoreflexive + left
// pseudosymmetric relation is symmetric", evaluating the pseudoreflexive
// variant of the condition on the same sweep and requiring the verdicts to
// agree.
PropertyVerdict protomodularity_witness(CategoryId category,
                                        const std::vector<ObjPtr>& objects,
                                        const std::vector<ObjPtr>& probes,
                                        size_t cap = 200000);

// The equivalence relation exhibiting a mono as Bourn-normal, if any: every
// element of the domain has R-class of its image exactly equal to the image.
std::optional<Relation> is_bourn_normal(const Morphism& m);

// The mono with image the R-class of 0.
Morphism bourn_normal_from_equiv(const Relation& e);

}  // namespace fincat

#endif
