#ifndef FINCAT_LIMITS_HPP
#define FINCAT_LIMITS_HPP

#include "fincat/subobject.hpp"

namespace fincat {

struct SpanResult {
  ObjPtr obj;
  Morphism proj1;
  Morphism proj2;
};

// Binary product with pair encoding a * |B_s| + b per sort.
SpanResult product(const ObjPtr& a, const ObjPtr& b);

inline int pair_code(int nb, int x, int y) { return x * nb + y; }
inline int pair_left(int nb, int c) { return c / nb; }
inline int pair_right(int nb, int c) { return c % nb; }

// Carrier {(a,b) : f(a) = g(b)} componentwise, as an object with projections.
SpanResult pullback(const Morphism& f, const Morphism& g);

SubobjectHandle equalizer(const Morphism& f, const Morphism& g);

// Pointed instances only: preimage of 0.
SubobjectHandle kernel(const Morphism& f);

// Terminal object (one-element carrier per sort).
ObjPtr terminal_object(CategoryId cat);

}  // namespace fincat

#endif
