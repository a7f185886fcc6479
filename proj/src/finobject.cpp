#include "fincat/finobject.hpp"

#include <sstream>

#include "fincat/canonical.hpp"

namespace fincat {

CategoryId category_from_name(const std::string& name) {
  for (CategoryId c : {CategoryId::FinSet, CategoryId::FinPtSet, CategoryId::FinGrp,
                       CategoryId::FinAb, CategoryId::FinCRng, CategoryId::Norm,
                       CategoryId::XMod}) {
    if (name == category_name(c)) return c;
  }
  throw UnknownName("unknown category: " + name);
}

bool is_group_like(CategoryId c) {
  return c == CategoryId::FinGrp || c == CategoryId::FinAb || c == CategoryId::FinCRng ||
         c == CategoryId::Norm || c == CategoryId::XMod;
}

namespace {

std::string tup(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

void require_table(const std::map<std::string, Table>& t, const std::string& name,
                   int rows, int cols, int val_range) {
  auto it = t.find(name);
  if (it == t.end()) throw AxiomViolation("missing table: " + name);
  const Table& tb = it->second;
  if (static_cast<int>(tb.size()) != rows)
    throw AxiomViolation("table " + name + ": wrong row count");
  for (const auto& row : tb) {
    if (static_cast<int>(row.size()) != cols)
      throw AxiomViolation("table " + name + ": wrong column count");
    for (int v : row)
      if (v < 0 || v >= val_range)
        throw AxiomViolation("table " + name + ": entry out of carrier range");
  }
}

// Group axioms for tables named op/inv with identity 0.
void check_group(const std::map<std::string, Table>& tabs, const std::string& opn,
                 const std::string& invn, int n, bool abelian) {
  const Table& op = tabs.at(opn);
  const Table& inv = tabs.at(invn);
  for (int a = 0; a < n; ++a) {
    if (op[0][a] != a || op[a][0] != a)
      throw AxiomViolation("identity fails at " + tup({a}) + " [" + opn + "]");
    if (op[a][inv[0][a]] != 0 || op[inv[0][a]][a] != 0)
      throw AxiomViolation("inverse fails at " + tup({a}) + " [" + opn + "]");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (abelian && op[a][b] != op[b][a])
        throw AxiomViolation("commutativity fails, witness " + tup({a, b}));
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[a][op[b][c]])
          throw AxiomViolation("associativity fails, witness " + tup({a, b, c}));
    }
}

void validate(CategoryId cat, const std::vector<int>& sorts,
              const std::map<std::string, Table>& tabs) {
  int ns = sort_count(cat);
  if (static_cast<int>(sorts.size()) != ns)
    throw AxiomViolation("wrong number of sorts for " + std::string(category_name(cat)));
  for (int n : sorts) {
    if (n < 0) throw AxiomViolation("negative carrier size");
    if (n == 0 && cat != CategoryId::FinSet)
      throw AxiomViolation("empty carrier only permitted in FinSet");
  }
  int n0 = sorts[0];
  switch (cat) {
    case CategoryId::FinSet:
    case CategoryId::FinPtSet:
      if (!tabs.empty()) throw AxiomViolation("sets carry no operation tables");
      break;
    case CategoryId::FinGrp:
    case CategoryId::FinAb:
      require_table(tabs, "op", n0, n0, n0);
      require_table(tabs, "inv", 1, n0, n0);
      if (tabs.size() != 2) throw AxiomViolation("unexpected extra tables");
      check_group(tabs, "op", "inv", n0, cat == CategoryId::FinAb);
      break;
    case CategoryId::FinCRng: {
      require_table(tabs, "op", n0, n0, n0);
      require_table(tabs, "inv", 1, n0, n0);
      require_table(tabs, "mul", n0, n0, n0);
      if (tabs.size() != 3) throw AxiomViolation("unexpected extra tables");
      check_group(tabs, "op", "inv", n0, /*abelian=*/true);
      const Table& add = tabs.at("op");
      const Table& mul = tabs.at("mul");
      for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b) {
          if (mul[a][b] != mul[b][a])
            throw AxiomViolation("multiplication commutativity fails, witness " + tup({a, b}));
          for (int c = 0; c < n0; ++c) {
            if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
              throw AxiomViolation("multiplication associativity fails, witness " + tup({a, b, c}));
            if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
              throw AxiomViolation("distributivity fails, witness " + tup({a, b, c}));
          }
        }
      break;
    }
    case CategoryId::Norm: {
      int nn = sorts[0], ng = sorts[1];
      require_table(tabs, "op0", nn, nn, nn);
      require_table(tabs, "inv0", 1, nn, nn);
      require_table(tabs, "op1", ng, ng, ng);
      require_table(tabs, "inv1", 1, ng, ng);
      require_table(tabs, "incl", 1, nn, ng);
      if (tabs.size() != 5) throw AxiomViolation("unexpected extra tables");
      check_group(tabs, "op0", "inv0", nn, false);
      check_group(tabs, "op1", "inv1", ng, false);
      const Table& in = tabs.at("incl");
      const Table& opn = tabs.at("op0");
      const Table& opg = tabs.at("op1");
      const Table& invg = tabs.at("inv1");
      std::vector<bool> image(ng, false);
      for (int a = 0; a < nn; ++a) {
        if (image[in[0][a]])
          throw AxiomViolation("inclusion not injective, witness " + tup({a}));
        image[in[0][a]] = true;
        for (int b = 0; b < nn; ++b)
          if (in[0][opn[a][b]] != opg[in[0][a]][in[0][b]])
            throw AxiomViolation("inclusion not a homomorphism, witness " + tup({a, b}));
      }
      for (int g = 0; g < ng; ++g)
        for (int a = 0; a < nn; ++a) {
          int conj = opg[opg[g][in[0][a]]][invg[0][g]];
          if (!image[conj])
            throw AxiomViolation("image not normal, witness " + tup({g, a}));
        }
      break;
    }
    case CategoryId::XMod: {
      int nt = sorts[0], ng = sorts[1];
      require_table(tabs, "op0", nt, nt, nt);
      require_table(tabs, "inv0", 1, nt, nt);
      require_table(tabs, "op1", ng, ng, ng);
      require_table(tabs, "inv1", 1, ng, ng);
      require_table(tabs, "bnd", 1, nt, ng);
      require_table(tabs, "act", ng, nt, nt);
      if (tabs.size() != 6) throw AxiomViolation("unexpected extra tables");
      check_group(tabs, "op0", "inv0", nt, false);
      check_group(tabs, "op1", "inv1", ng, false);
      const Table& opt = tabs.at("op0");
      const Table& invt = tabs.at("inv0");
      const Table& opg = tabs.at("op1");
      const Table& invg = tabs.at("inv1");
      const Table& bnd = tabs.at("bnd");
      const Table& act = tabs.at("act");
      for (int t = 0; t < nt; ++t)
        for (int u = 0; u < nt; ++u)
          if (bnd[0][opt[t][u]] != opg[bnd[0][t]][bnd[0][u]])
            throw AxiomViolation("boundary not a homomorphism, witness " + tup({t, u}));
      for (int g = 0; g < ng; ++g) {
        for (int t = 0; t < nt; ++t) {
          if (act[0][t] != t)
            throw AxiomViolation("identity does not act trivially, witness " + tup({t}));
          for (int u = 0; u < nt; ++u)
            if (act[g][opt[t][u]] != opt[act[g][t]][act[g][u]])
              throw AxiomViolation("action not by automorphisms, witness " + tup({g, t, u}));
          for (int h = 0; h < ng; ++h)
            if (act[opg[g][h]][t] != act[g][act[h][t]])
              throw AxiomViolation("action not functorial, witness " + tup({g, h, t}));
          // equivariance: bnd(g.t) = g bnd(t) g^-1
          if (bnd[0][act[g][t]] != opg[opg[g][bnd[0][t]]][invg[0][g]])
            throw AxiomViolation("boundary equivariance fails, witness " + tup({g, t}));
        }
        // Peiffer identity: bnd(t).u = t u t^-1
        for (int t = 0; t < nt; ++t)
          for (int u = 0; u < nt; ++u)
            if (act[bnd[0][t]][u] != opt[opt[t][u]][invt[0][t]])
              throw AxiomViolation("Peiffer identity fails, witness " + tup({t, u}));
      }
      break;
    }
  }
}

}  // namespace

ObjPtr make_object(CategoryId category, std::vector<int> sorts,
                   std::map<std::string, Table> tables) {
  validate(category, sorts, tables);
  auto obj = std::make_shared<FinObject>();
  obj->category_ = category;
  obj->sorts_ = std::move(sorts);
  obj->tables_ = std::move(tables);
  return obj;
}

const std::string& FinObject::key() const {
  std::call_once(key_once_, [this] {
    canonical_key_ = canonical_key(category_, sorts_, tables_);
  });
  return canonical_key_;
}

nlohmann::json FinObject::to_json() const {
  nlohmann::json j;
  j["category"] = category_name(category_);
  j["sorts"] = sorts_;
  nlohmann::json tj = nlohmann::json::object();
  for (const auto& [name, table] : tables_) {
    if (table.size() == 1)
      tj[name] = table[0];  // unary tables serialize flat
    else
      tj[name] = table;
  }
  j["tables"] = tj;
  return j;
}

ObjPtr object_from_json(const nlohmann::json& j) {
  try {
    CategoryId cat = category_from_name(j.at("category").get<std::string>());
    std::vector<int> sorts = j.at("sorts").get<std::vector<int>>();
    std::map<std::string, Table> tables;
    for (const auto& [name, tj] : j.at("tables").items()) {
      Table t;
      if (!tj.empty() && tj[0].is_array())
        t = tj.get<Table>();
      else
        t = {tj.get<std::vector<int>>()};
      tables[name] = std::move(t);
    }
    return make_object(cat, std::move(sorts), std::move(tables));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad structure file: ") + e.what());
  } catch (const UnknownName& e) {
    throw ParseError(std::string("bad structure file: ") + e.what());
  }
}

ObjPtr zero_object(CategoryId category) {
  if (!is_pointed(category)) throw CategoryMismatch("FinSet has no zero object");
  std::map<std::string, Table> tabs;
  switch (category) {
    case CategoryId::FinPtSet:
      return make_object(category, {1}, {});
    case CategoryId::FinGrp:
    case CategoryId::FinAb:
      tabs = {{"op", {{0}}}, {"inv", {{0}}}};
      return make_object(category, {1}, tabs);
    case CategoryId::FinCRng:
      tabs = {{"op", {{0}}}, {"inv", {{0}}}, {"mul", {{0}}}};
      return make_object(category, {1}, tabs);
    case CategoryId::Norm:
      tabs = {{"op0", {{0}}}, {"inv0", {{0}}}, {"op1", {{0}}}, {"inv1", {{0}}},
              {"incl", {{0}}}};
      return make_object(category, {1, 1}, tabs);
    case CategoryId::XMod:
      tabs = {{"op0", {{0}}}, {"inv0", {{0}}}, {"op1", {{0}}}, {"inv1", {{0}}},
              {"bnd", {{0}}}, {"act", {{0}}}};
      return make_object(category, {1, 1}, tabs);
    default:
      throw CategoryMismatch("no zero object");
  }
}

}  // namespace fincat
