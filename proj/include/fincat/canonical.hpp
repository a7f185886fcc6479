#ifndef FINCAT_CANONICAL_HPP
#define FINCAT_CANONICAL_HPP

#include <map>
#include <string>
#include <vector>

#include "fincat/finobject.hpp"

namespace fincat {

// Lexicographically minimal encoding of the tables over all carrier
// relabelings (fixing 0 per sort in pointed instances).  Two objects of the
// same category get equal keys iff they are isomorphic.
std::string canonical_key(CategoryId category, const std::vector<int>& sorts,
                          const std::map<std::string, Table>& tables);

}  // namespace fincat

#endif
