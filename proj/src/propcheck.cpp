#include "fincat/propcheck.hpp"

#include <algorithm>

#include "fincat/hom.hpp"
#include "fincat/subobject.hpp"

namespace fincat {

namespace {

void require_endo(const Relation& r) {
  if (!r.is_endorelation()) throw NotEndorelation("expected an endorelation");
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ConfirmedOnSample: return "confirmed_on_sample";
    case Verdict::RefutedWithWitness: return "refuted_with_witness";
    default: return "unknown";
  }
}

nlohmann::json PropertyVerdict::to_json() const {
  nlohmann::json j;
  j["verdict"] = verdict_name(holds);
  if (witness_relation) j["witness_relation"] = witness_relation->to_json();
  if (witness_morphism) j["witness_morphism"] = witness_morphism->to_json();
  j["objects_swept"] = objects_swept;
  j["relations_swept"] = relations_swept;
  j["cap"] = cap;
  j["truncated"] = truncated;
  return j;
}

bool is_reflexive(const Relation& r) {
  require_endo(r);
  return rel_le(diagonal(r.dom), r);
}

bool is_symmetric(const Relation& r) {
  require_endo(r);
  return r == opposite(r);
}

bool is_transitive(const Relation& r) {
  require_endo(r);
  return rel_le(compose_rel(r, r), r);
}

bool is_equivalence(const Relation& r) {
  return is_reflexive(r) && is_symmetric(r) && is_transitive(r);
}

bool is_left_pseudoreflexive(const Relation& r) {
  require_endo(r);
  bool elementwise = true;
  for (size_t s = 0; s < r.pairs.size(); ++s)
    for (auto [x, y] : r.pairs[s])
      if (!r.contains(static_cast<int>(s), x, x)) elementwise = false;
  bool relational =
      rel_le(meet(diagonal(r.dom), compose_rel(opposite(r), r)), r);
  if (elementwise != relational)
    throw LawViolation("pseudoreflexivity cross-check mismatch");
  return elementwise;
}

bool is_right_pseudoreflexive(const Relation& r) {
  return is_left_pseudoreflexive(opposite(r));
}

bool is_pseudoreflexive(const Relation& r) {
  return is_left_pseudoreflexive(r) && is_right_pseudoreflexive(r);
}

bool is_left_pseudosymmetric(const Relation& r, const Morphism& f) {
  require_endo(r);
  if (!same_object(f.cod, r.dom)) throw DomainMismatch("witness must land in dom(R)");
  for (size_t s = 0; s < r.pairs.size(); ++s) {
    int n = f.dom->order(static_cast<int>(s));
    for (int z = 0; z < n; ++z) {
      int fz = f.maps[s][z];
      for (auto [x, y] : r.pairs[s])
        if (x == fz && !r.contains(static_cast<int>(s), y, fz)) return false;
    }
  }
  return true;
}

PseudoSymWitness left_pseudosymmetric_witness(const Relation& r,
                                              const std::vector<ObjPtr>& probes,
                                              size_t cap) {
  require_endo(r);
  if (is_pointed(r.dom->category())) {
    Morphism z = zero_morphism(zero_object(r.dom->category()), r.dom);
    if (is_left_pseudosymmetric(r, z)) return {z, true};
    return {std::nullopt, true};
  }
  bool truncated = false;
  for (const ObjPtr& probe : probes) {
    HomList hl = hom_enumerate(probe, r.dom, cap);
    truncated = truncated || hl.truncated;
    for (const Morphism& f : hl.items)
      if (is_left_pseudosymmetric(r, f)) return {f, true};
  }
  (void)truncated;
  return {std::nullopt, false};
}

PropertyVerdict maltsev_witness(CategoryId category, const std::vector<ObjPtr>& objects,
                                size_t cap) {
  PropertyVerdict v;
  v.cap = cap;
  for (const ObjPtr& x : objects) {
    if (x->category() != category)
      throw CategoryMismatch("object outside the swept category");
    RelationList rl = relation_enumerate(x, RelFilter::Reflexive, cap);
    v.truncated = v.truncated || rl.truncated;
    ++v.objects_swept;
    for (const Relation& r : rl.items) {
      ++v.relations_swept;
      if (!is_equivalence(r)) {
        v.holds = Verdict::RefutedWithWitness;
        v.witness_relation = r;
        return v;
      }
    }
  }
  v.holds = Verdict::ConfirmedOnSample;
  return v;
}

PropertyVerdict protomodularity_witness(CategoryId category,
                                        const std::vector<ObjPtr>& objects,
                                        const std::vector<ObjPtr>& probes,
                                        size_t cap) {
  PropertyVerdict v;
  v.cap = cap;
  std::optional<Relation> refute_b, refute_c;
  std::optional<Morphism> refute_b_f;
  for (const ObjPtr& x : objects) {
    if (x->category() != category)
      throw CategoryMismatch("object outside the swept category");
    RelationList rl = relation_enumerate(x, RelFilter::Any, cap);
    v.truncated = v.truncated || rl.truncated;
    ++v.objects_swept;
    for (const Relation& r : rl.items) {
      ++v.relations_swept;
      if (!is_left_pseudoreflexive(r)) continue;
      PseudoSymWitness ps = left_pseudosymmetric_witness(r, probes, cap);
      if (!ps.f) continue;  // not (known to be) left pseudosymmetric
      if (!refute_b && !is_symmetric(r)) {
        refute_b = r;
        refute_b_f = ps.f;
      }
      if (!refute_c && !is_pseudoreflexive(r)) refute_c = r;
    }
  }
  if (refute_b.has_value() != refute_c.has_value())
    throw LawViolation("condition (b) and condition (c) verdicts disagree");
  if (refute_b) {
    v.holds = Verdict::RefutedWithWitness;
    v.witness_relation = refute_b;
    v.witness_morphism = refute_b_f;
  } else {
    v.holds = Verdict::ConfirmedOnSample;
  }
  return v;
}

std::optional<Relation> is_bourn_normal(const Morphism& m) {
  if (!is_pointed(m.dom->category()))
    throw CategoryMismatch("Bourn-normality lives in pointed instances");
  if (!m.injective()) throw NotMono("expected a monomorphism");
  std::vector<std::vector<char>> in_image(m.maps.size());
  for (size_t s = 0; s < m.maps.size(); ++s) {
    in_image[s].assign(m.cod->order(static_cast<int>(s)), 0);
    for (int x : m.maps[s]) in_image[s][x] = 1;
  }
  RelationList rl = relation_enumerate(m.cod, RelFilter::Equivalence);
  for (const Relation& r : rl.items) {
    bool ok = true;
    for (size_t s = 0; s < m.maps.size() && ok; ++s) {
      int nc = m.cod->order(static_cast<int>(s));
      for (int x : m.maps[s]) {
        for (int y = 0; y < nc; ++y)
          if (r.contains(static_cast<int>(s), x, y) != (in_image[s][y] != 0)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
    }
    if (ok) return r;
  }
  return std::nullopt;
}

Morphism bourn_normal_from_equiv(const Relation& e) {
  if (!is_pointed(e.dom->category()))
    throw CategoryMismatch("Bourn-normality lives in pointed instances");
  if (!is_equivalence(e)) throw NotEquivalence("expected an equivalence relation");
  std::vector<std::vector<int>> classes(e.pairs.size());
  for (size_t s = 0; s < e.pairs.size(); ++s)
    for (int y = 0; y < e.dom->order(static_cast<int>(s)); ++y)
      if (e.contains(static_cast<int>(s), 0, y)) classes[s].push_back(y);
  return make_subobject(e.dom, classes).inclusion;
}

}  // namespace fincat
