// Command-line front end for the verification sweeps: each subcommand
// prints a JSON (or text) report and exits 0 when every expectation in
// the report holds, 1 on a mismatch, 2 on a usage or input error.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fincat/cli.hpp"

namespace {

fincat::CategoryId category_from_name(const std::string& s) {
  using fincat::CategoryId;
  for (CategoryId c : {CategoryId::FinSet, CategoryId::FinPtSet,
                       CategoryId::FinGrp, CategoryId::FinAb,
                       CategoryId::FinCRng, CategoryId::Norm,
                       CategoryId::XMod})
    if (s == fincat::category_name(c)) return c;
  throw fincat::UnknownName("no instance category named '" + s + "'");
}

int emit(const nlohmann::json& report, const std::string& format) {
  if (format == "text")
    std::cout << fincat::render_text(report);
  else
    std::cout << report.dump(2) << "\n";
  return report["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite instance verification sweeps"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  fincat::RunConfig cfg;
  std::vector<std::string> category_names;
  std::string format = "json";
  app.add_option("--category", category_names,
                 "restrict to these instance categories (repeatable)");
  app.add_option("--max-order", cfg.max_order, "carrier size bound per sort");
  app.add_option("--hom-cap", cfg.hom_cap, "max homomorphisms per pair");
  app.add_option("--rel-cap", cfg.rel_cap, "max relations per object");
  app.add_option("--sub-cap", cfg.sub_cap, "max subobjects per object");
  app.add_option("--jobs", cfg.jobs, "worker threads");
  app.add_option("--seed", cfg.seed, "sampling seed (reports record it)");
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--corpus", cfg.corpus_path, "catalog JSON overriding generation");

  CLI::App* lemma2 = app.add_subcommand("lemma2", "relation-calculus lemma sweep");
  CLI::App* maltsev = app.add_subcommand("maltsev", "difunctionality dichotomy");
  CLI::App* proto =
      app.add_subcommand("protomodular", "pointed protomodularity dichotomy");

  CLI::App* exreg = app.add_subcommand("exreg", "exact-completion reflection");
  std::string ex_category, ex_object, ex_eq;
  exreg->add_option("object-category", ex_category, "instance category")->required();
  exreg->add_option("object", ex_object, "builtin object name")->required();
  exreg->add_option("eq", ex_eq, "congruence as JSON pair lists")->required();

  CLI::App* torsion = app.add_subcommand("torsion", "torsion decomposition");
  std::string t_instance, t_object;
  torsion->add_option("instance", t_instance,
                      "p-primary(P), nil-red, or ab-norm")->required();
  torsion->add_option("object", t_object, "builtin object name")->required();

  CLI::App* verify_all =
      app.add_subcommand("verify-all", "run every acceptance sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message / help text
    return code == 0 ? 0 : 2;
  }

  try {
    for (const std::string& s : category_names)
      cfg.categories.push_back(category_from_name(s));
    if (lemma2->parsed()) return emit(fincat::cmd_lemma2(cfg), format);
    if (maltsev->parsed()) return emit(fincat::cmd_maltsev(cfg), format);
    if (proto->parsed()) return emit(fincat::cmd_protomodular(cfg), format);
    if (exreg->parsed())
      return emit(fincat::cmd_exreg(cfg, category_from_name(ex_category),
                                    ex_object, ex_eq),
                  format);
    if (torsion->parsed())
      return emit(fincat::cmd_torsion(cfg, t_instance, t_object), format);
    if (verify_all->parsed()) return emit(fincat::cmd_verify_all(cfg), format);
  } catch (const fincat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fincat::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fincat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
