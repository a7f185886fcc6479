#ifndef FINCAT_BASE_HPP
#define FINCAT_BASE_HPP

#include <stdexcept>
#include <string>

namespace fincat {

// Concrete category instances the workbench ships with.
enum class CategoryId { FinSet, FinPtSet, FinGrp, FinAb, FinCRng, Norm, XMod };

inline const char* category_name(CategoryId c) {
  switch (c) {
    case CategoryId::FinSet: return "FinSet";
    case CategoryId::FinPtSet: return "FinPtSet";
    case CategoryId::FinGrp: return "FinGrp";
    case CategoryId::FinAb: return "FinAb";
    case CategoryId::FinCRng: return "FinCRng";
    case CategoryId::Norm: return "Norm";
    case CategoryId::XMod: return "XMod";
  }
  return "?";
}

CategoryId category_from_name(const std::string& name);

// FinSet is the only non-pointed instance.
inline bool is_pointed(CategoryId c) { return c != CategoryId::FinSet; }

// Every equivalence relation is a kernel pair, except in Norm (regular but
// not exact) -- the whole point of the Norm/XMod comparison.
inline bool is_exact(CategoryId c) { return c != CategoryId::Norm; }

inline int sort_count(CategoryId c) {
  return (c == CategoryId::Norm || c == CategoryId::XMod) ? 2 : 1;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AxiomViolation : Error { using Error::Error; };
struct CategoryMismatch : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct NotHomomorphism : Error { using Error::Error; };
struct NotEndorelation : Error { using Error::Error; };
struct NotEquivalence : Error { using Error::Error; };
struct NotExactInstance : Error { using Error::Error; };
struct NotMono : Error { using Error::Error; };
struct NotBournNormal : Error { using Error::Error; };
struct LawViolation : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace fincat

#endif
