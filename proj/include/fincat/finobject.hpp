#ifndef FINCAT_FINOBJECT_HPP
#define FINCAT_FINOBJECT_HPP

#include <mutex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fincat/base.hpp"
#include "json.hpp"

namespace fincat {

// A table is a rectangular nested int array.  Unary tables (inverse,
// inclusion, boundary) have a single row; binary tables (group operation,
// ring multiplication, crossed-module action) have one row per left operand.
using Table = std::vector<std::vector<int>>;

class FinObject;
using ObjPtr = std::shared_ptr<const FinObject>;

// A finite algebra: dense carriers 0..n-1 per sort plus operation tables.
// Immutable after validation; 0 is the distinguished point in pointed
// instances.  Table names:
//   single sort: "op" (binary), "inv" (unary), "mul" (FinCRng)
//   Norm (sorts N, G):  "op0","inv0","op1","inv1","incl" (N -> G)
//   XMod (sorts T, G):  "op0","inv0","op1","inv1","bnd" (T -> G),
//                       "act" (rows indexed by G, columns by T, values in T)
class FinObject {
 public:
  CategoryId category() const { return category_; }
  const std::vector<int>& sorts() const { return sorts_; }
  int order(int s = 0) const { return sorts_.at(s); }
  const std::map<std::string, Table>& tables() const { return tables_; }

  int op(int s, int a, int b) const { return binary(op_name(s), a, b); }
  int inv(int s, int a) const { return unary(inv_name(s), a); }
  int mul(int a, int b) const { return binary("mul", a, b); }
  int incl(int n) const { return unary("incl", n); }
  int bnd(int t) const { return unary("bnd", t); }
  int act(int g, int t) const { return binary("act", g, t); }

  bool has_table(const std::string& name) const { return tables_.count(name) != 0; }

  // Permutation-minimal encoding of all tables; equal keys iff isomorphic.
  // Computed on first use: intermediate objects (pullbacks, products) are
  // often large and never compared up to isomorphism.
  const std::string& key() const;

  nlohmann::json to_json() const;

  friend ObjPtr make_object(CategoryId category, std::vector<int> sorts,
                            std::map<std::string, Table> tables);

 private:
  std::string op_name(int s) const {
    return sorts_.size() == 1 ? "op" : ("op" + std::to_string(s));
  }
  std::string inv_name(int s) const {
    return sorts_.size() == 1 ? "inv" : ("inv" + std::to_string(s));
  }
  int unary(const std::string& name, int a) const { return tables_.at(name)[0][a]; }
  int binary(const std::string& name, int a, int b) const { return tables_.at(name)[a][b]; }

  CategoryId category_;
  std::vector<int> sorts_;
  std::map<std::string, Table> tables_;
  mutable std::once_flag key_once_;
  mutable std::string canonical_key_;
};

// Validates the instance axioms and computes the canonical key.
// Throws AxiomViolation naming the failed axiom and a witness tuple.
ObjPtr make_object(CategoryId category, std::vector<int> sorts,
                   std::map<std::string, Table> tables);

ObjPtr object_from_json(const nlohmann::json& j);

// The zero object of a pointed instance (trivial carrier per sort).
ObjPtr zero_object(CategoryId category);

bool is_group_like(CategoryId c);  // has "op"/"inv" structure on every sort

}  // namespace fincat

#endif
