// pseudomod: command-line front end for scenarios, tower audits, the numerical criterion and corpora.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pseudomod/scenario.hpp"

using namespace pseudomod;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kInvariant = 1, kInput = 2, kBudget = 3 };

struct Global {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget;
  std::string format = "json";
  std::string out;
};

void write_text(const Global& g, const std::string& file, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(g.out);
  std::ofstream f(fs::path(g.out) / file, std::ios::binary);
  if (!f) throw InputError("cannot write into " + g.out);
  f << text;
}

int emit(const Global& g, const Report& r) {
  const std::string name = r.doc.value("scenario", "report");
  if (g.format == "text")
    write_text(g, name + ".report.txt", render_text(r.doc));
  else
    write_text(g, name + ".report.json", r.doc.dump(2) + "\n");
  for (const auto& f : r.failures) std::cerr << "invariant failure: " << f << "\n";
  return r.exit_code();
}

Scenario builtin_audit() {
  Scenario s;
  s.name = "tower-audit";
  s.towers = standard_tower_specs();
  return s;
}

Scenario builtin_criterion() {
  Scenario s;
  s.name = "numerical-criterion";
  for (int r = 1; r <= 3; ++r) s.lenstra.push_back({"node", r, 5, 8});
  s.lenstra.push_back({"non_ci", 1, 5, 8});
  s.lenstra.push_back({"trivial", 1, 5, 8});
  s.towers.push_back({"plane", 2, 0, 5, 1});
  return s;
}

int run_corpus(const Global& g, std::uint64_t seed, const CorpusCounts& counts) {
  Corpus c = generate_corpus(seed, counts);
  if (!g.out.empty()) {
    for (const auto& e : c.entries) write_text(g, e.name + ".json", e.scenario.dump(2) + "\n");
    write_text(g, "manifest.json", c.manifest.dump(2) + "\n");
  } else if (g.format == "text") {
    for (const auto& e : c.manifest["entries"])
      std::cout << e["checksum"].get<std::string>() << "  " << e["name"].get<std::string>() << "\n";
    std::cout << "manifest " << c.manifest["checksum"].get<std::string>() << "\n";
  } else {
    std::cout << c.manifest.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for two-dimensional pseudorepresentations, ordinary quotients and Eisenstein towers"};
  app.require_subcommand(1);
  Global g;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed overriding the scenario seed");
  auto* budget_opt = app.add_option("--budget", budget, "Enumeration budget")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "Directory for reports or corpus files");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check the axioms of every law in a scenario");
  validate->add_option("scenario", path, "Scenario file")->required();
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage of a scenario");
  pipeline->add_option("scenario", path, "Scenario file")->required();
  auto* audit = app.add_subcommand("audit", "Condition table for towers (built-in corpus without a scenario)");
  audit->add_option("scenario", path, "Scenario file");
  auto* criterion = app.add_subcommand("criterion", "Numerical criterion checks (built-in family without a scenario)");
  criterion->add_option("scenario", path, "Scenario file");
  CorpusCounts counts;
  auto* corpus = app.add_subcommand("corpus", "Generate a reproducible scenario corpus");
  corpus->add_option("--reps", counts.reps, "Number of representation scenarios")->check(CLI::NonNegativeNumber);
  corpus->add_option("--towers", counts.towers, "Number of tower scenarios")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  if (*seed_opt) g.seed = seed;
  if (*budget_opt) g.budget = budget;

  try {
    if (*corpus) return run_corpus(g, g.seed.value_or(0), counts);
    RunOptions opt;
    opt.seed = g.seed;
    opt.budget = g.budget;
    Scenario s;
    if (*validate) {
      opt.mode = RunMode::Validate;
      s = load_scenario(path);
    } else if (*pipeline) {
      s = load_scenario(path);
    } else if (*audit) {
      opt.mode = RunMode::Audit;
      s = path.empty() ? builtin_audit() : load_scenario(path);
    } else {
      opt.mode = RunMode::Criterion;
      s = path.empty() ? builtin_criterion() : load_scenario(path);
    }
    return emit(g, run_scenario(s, opt));
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kInvariant;
  }
}
