#pragma once

// Scenario files, the pipeline runner behind the command-line tool, and the corpus generator.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pseudomod/criterion.hpp"
#include "pseudomod/ordinary.hpp"
#include "pseudomod/serialize.hpp"

namespace pseudomod {

inline constexpr const char* kScenarioSchema = "pseudomod.scenario/1";
inline constexpr const char* kReportSchema = "pseudomod.report/1";
inline constexpr const char* kManifestSchema = "pseudomod.manifest/1";

struct NamedRep {
  std::string name;
  Pseudorep2 law;
};

struct PipelineSpec {
  std::string rep;
  std::string kappa;
  std::optional<int> e1;
  std::vector<std::string> stages;
};

struct LenstraSpec {
  std::string family;  // node, non_ci, trivial
  int r = 1;
  Int p = 5;
  int truncation = 8;
};

struct Scenario {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t budget = 200000;
  std::map<std::string, FiniteRing> rings;
  std::map<std::string, MarkedGroup> groups;
  std::map<std::string, Character> characters;
  std::vector<NamedRep> reps;
  std::vector<PipelineSpec> pipelines;
  std::vector<TowerSpec> towers;
  std::vector<LenstraSpec> lenstra;
};

/// Stage names accepted in "stages", in execution order.
const std::vector<std::string>& pipeline_stages();

/// Resolves every name and validates literals; throws InputError with the offending field.
Scenario parse_scenario(const json& j);
Scenario load_scenario(const std::string& path);

/// Builds a ring from {"kind": field | zmod | dvr | dual | fiber | table, ...}.
FiniteRing ring_from_spec(const json& j, const std::string& where);

enum class RunMode { Pipeline, Validate, Audit, Criterion };

struct RunOptions {
  RunMode mode = RunMode::Pipeline;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget;
};

struct Report {
  json doc;
  std::vector<std::string> failures;  // hard invariant failures
  int exit_code() const { return failures.empty() ? 0 : 1; }
};

/// Deterministic for fixed scenario and seed; BudgetExceeded propagates.
Report run_scenario(const Scenario& s, const RunOptions& opt = {});
/// Plain-text rendering of a report.
std::string render_text(const json& report);

/// Condition table and Fitting replay for one tower.
json tower_report(const TowerSpec& spec, std::vector<std::string>& failures);
json lenstra_report(const LenstraSpec& spec, std::vector<std::string>& failures);

struct CorpusCounts {
  int reps = 12;
  int towers = 8;
};

struct CorpusEntry {
  std::string name;
  json scenario;
};

struct Corpus {
  std::vector<CorpusEntry> entries;  // sorted by name
  json manifest;
};

Corpus generate_corpus(std::uint64_t seed, const CorpusCounts& counts);
/// FNV-1a 64-bit hash, as a 16-digit hex string.
std::string fnv1a_hex(const std::string& data);

}  // namespace pseudomod
