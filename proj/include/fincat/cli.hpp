#ifndef FINCAT_CLI_HPP
#define FINCAT_CLI_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fincat/catalog.hpp"

namespace fincat {

struct RunConfig {
  std::vector<CategoryId> categories;  // empty: per-command default
  int max_order = 8;
  size_t hom_cap = 2000;
  size_t rel_cap = 200000;
  size_t sub_cap = 100000;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string corpus_path;  // optional catalog file overriding generation

  nlohmann::json to_json() const;
};

// Runs fn(0..n-1) on `jobs` threads; callers collect results by index so
// the assembled report is byte-identical for any parallelism degree.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn);

// The corpus the sweeps consume: loaded from config.corpus_path when given
// (the category must match), otherwise generated.
std::vector<ObjPtr> corpus_for(const RunConfig& cfg, CategoryId cat,
                               int max_order);

// Subcommand drivers.  Every report carries {"schema":1,"command",...,
// "pass"}; exit status is 0 iff "pass".
nlohmann::json cmd_lemma2(const RunConfig& cfg);
nlohmann::json cmd_maltsev(const RunConfig& cfg);
nlohmann::json cmd_protomodular(const RunConfig& cfg);
nlohmann::json cmd_exreg(const RunConfig& cfg, CategoryId cat,
                         const std::string& object_name,
                         const std::string& eq_spec);
nlohmann::json cmd_torsion(const RunConfig& cfg, const std::string& instance,
                           const std::string& object_name);
nlohmann::json cmd_verify_all(const RunConfig& cfg);

// The ten acceptance checks run by verify-all, individually addressable.
nlohmann::json acceptance_criterion(int number, const RunConfig& cfg);
constexpr int kAcceptanceCriteria = 9;  // 10 is cross-run determinism

std::string render_text(const nlohmann::json& report);

}  // namespace fincat

#endif
