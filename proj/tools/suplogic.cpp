#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suplogic/bisim.hpp"
#include "suplogic/proofcheck.hpp"
#include "suplogic/search.hpp"
#include "suplogic/semantics.hpp"
#include "suplogic/syntax.hpp"
#include "suplogic/translate.hpp"

namespace {

using namespace suplogic;

// Exit codes: 0 affirmative verdict, 1 negative verdict, 2 error.
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct SearchFlags {
  std::string formula;
  int max_worlds = 2;
  std::string atoms = "p,q";
  std::string frame_class = "all";
  std::string relation = "ternary";
  int samples = 0;
  std::uint64_t seed = 0;
  double density = 0.3;

  SearchBounds bounds() const {
    SearchBounds b{max_worlds, split_list(atoms, ','),
                   relation_kind_from_string(relation), std::nullopt};
    if (samples > 0) b.sample = SampleMode{samples, seed, density};
    return b;
  }
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("formula", flags.formula, "formula to test")->required();
  cmd->add_option("--max-worlds", flags.max_worlds, "world count bound");
  cmd->add_option("--atoms", flags.atoms, "comma-separated atom list");
  cmd->add_option("--class", flags.frame_class, "frame class for R");
  cmd->add_option("--relation", flags.relation, "ternary, binary or both");
  cmd->add_option("--samples", flags.samples,
                  "random models to draw (0 = exhaustive)");
  cmd->add_option("--seed", flags.seed, "sampling seed");
  cmd->add_option("--density", flags.density, "relation edge probability");
}

void print_witness(const PointedModel& pm) {
  std::cout << model_to_json(pm.model) << "\n";
  std::cout << "world: " << pm.point << "\n";
}

int run_check(const std::string& model_path, const std::string& world,
              const std::string& formula) {
  GeneralizedModel m = load_model(model_path);
  bool result = eval(m, world, parse_formula(formula));
  std::cout << (result ? "true" : "false") << "\n";
  return result ? kYes : kNo;
}

int run_eval(const std::string& model_path, const std::string& formula) {
  GeneralizedModel m = load_model(model_path);
  auto worlds = mask_to_worlds(m, extension(m, parse_formula(formula)));
  std::cout << "{";
  for (std::size_t i = 0; i < worlds.size(); ++i)
    std::cout << (i ? ", " : "") << worlds[i];
  std::cout << "}\n";
  return kYes;
}

int run_bisim(const std::string& left_path, const std::string& right_path,
              const std::string& pair, const std::string& verify_path) {
  GeneralizedModel left = load_model(left_path);
  GeneralizedModel right = load_model(right_path);

  if (!verify_path.empty()) {
    nlohmann::json j = nlohmann::json::parse(read_file(verify_path));
    const nlohmann::json& arr = j.is_object() ? j.at("pairs") : j;
    BisimRelation rel{left, right, {}};
    for (const auto& p : arr)
      rel.pairs.emplace_back(p.at(0).get<std::string>(),
                             p.at(1).get<std::string>());
    auto violation = check_obisim(rel);
    if (!violation) {
      std::cout << "ok\n";
      return kYes;
    }
    std::cout << to_string(*violation) << "\n";
    return kNo;
  }

  if (!pair.empty()) {
    auto parts = split_list(pair, ':');
    if (parts.size() != 2)
      throw std::runtime_error("--pair expects w:w'");
    bool related = obisimilar(PointedModel(left, parts[0]),
                              PointedModel(right, parts[1]));
    std::cout << (related ? "bisimilar" : "not bisimilar") << "\n";
    return related ? kYes : kNo;
  }

  BisimRelation largest = largest_obisim(left, right);
  std::cout << "largest bisimulation: " << largest.pairs.size() << " pairs\n";
  for (const auto& [l, r] : largest.pairs)
    std::cout << "  " << l << " ~ " << r << "\n";
  return largest.pairs.empty() ? kNo : kYes;
}

int run_translate(const std::string& target, const std::string& formula) {
  Formula f = parse_formula(formula);
  if (target == "delta")
    std::cout << print_formula(t_d(f)) << "\n";
  else if (target == "d")
    std::cout << print_formula(t_delta(f)) << "\n";
  else
    throw std::runtime_error("--to expects delta or d");
  return kYes;
}

int run_valid(const SearchFlags& flags) {
  SearchVerdict v = check_validity(parse_formula(flags.formula), flags.bounds(),
                                   frame_class_from_string(flags.frame_class));
  switch (v.kind) {
    case SearchVerdict::Kind::Valid:
      std::cout << "VALID (exhaustive)\n";
      return kYes;
    case SearchVerdict::Kind::Countermodel:
      std::cout << "COUNTERMODEL\n";
      print_witness(*v.witness);
      return kNo;
    default:
      std::cout << "UNKNOWN (no countermodel in " << v.trials << " samples)\n";
      return kNo;
  }
}

int run_sat(const SearchFlags& flags) {
  SearchVerdict v = check_sat(parse_formula(flags.formula), flags.bounds(),
                              frame_class_from_string(flags.frame_class));
  switch (v.kind) {
    case SearchVerdict::Kind::Satisfiable:
      std::cout << "SATISFIABLE\n";
      print_witness(*v.witness);
      return kYes;
    case SearchVerdict::Kind::Unsatisfiable:
      std::cout << "UNSATISFIABLE (exhaustive)\n";
      return kNo;
    default:
      std::cout << "UNKNOWN (no model in " << v.trials << " samples)\n";
      return kNo;
  }
}

int run_proof_check(const std::string& path, const std::string& system) {
  Derivation d = load_derivation(path);
  auto failure = check_derivation(d, axiom_system(system));
  if (!failure) {
    std::cout << "ok (" << d.lines.size() << " lines)\n";
    return kYes;
  }
  std::cout << "line " << failure->line_index << ": " << failure->reason
            << "\n";
  return kNo;
}

int run_fuzz(const std::string& system, int trials, std::uint64_t seed,
             const std::string& axiom, const std::string& frame_class) {
  const AxiomSystem& sys = axiom_system(system);
  FuzzReport report;
  if (axiom.empty()) {
    report = fuzz_soundness(sys, trials, seed);
  } else {
    FrameClass cls = frame_class.empty() ? sys.intended_class
                                         : frame_class_from_string(frame_class);
    report = fuzz_axiom(sys, axiom, cls, trials, seed);
  }
  std::cout << "trials: " << report.trials_run << "\n";
  std::cout << "violations: " << report.violations.size() << "\n";
  if (!report.violations.empty()) {
    const FuzzViolation& v = report.violations.front();
    std::cout << "first violation (trial " << v.trial << ", axiom " << v.axiom
              << ")\n";
    std::cout << "instance: " << print_formula(v.instance) << "\n";
    print_witness(PointedModel(v.model, v.world));
  }
  return report.violations.empty() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model checking, bisimulation, translation, bounded search "
               "and proof checking for supervenience modal logics"};
  app.require_subcommand(1);

  std::string model_path, world, formula;
  auto* check = app.add_subcommand("check", "truth of a formula at a world");
  check->add_option("--model", model_path)->required();
  check->add_option("--world", world)->required();
  check->add_option("formula", formula)->required();

  std::string eval_model, eval_formula;
  auto* eval_cmd = app.add_subcommand("eval", "extension of a formula");
  eval_cmd->add_option("--model", eval_model)->required();
  eval_cmd->add_option("formula", eval_formula)->required();

  std::string left_path, right_path, pair, verify_path;
  auto* bisim = app.add_subcommand("bisim", "agreement-language bisimulation");
  bisim->add_option("--left", left_path)->required();
  bisim->add_option("--right", right_path)->required();
  bisim->add_option("--pair", pair, "decide bisimilarity of w:w'");
  bisim->add_option("--verify", verify_path,
                    "check a relation file instead of computing the largest");

  std::string to, translate_formula;
  auto* translate =
      app.add_subcommand("translate", "between the Delta and D fragments");
  translate->add_option("--to", to, "delta or d")->required();
  translate->add_option("formula", translate_formula)->required();

  SearchFlags valid_flags, sat_flags;
  auto* valid = app.add_subcommand("valid", "bounded validity search");
  add_search_flags(valid, valid_flags);
  auto* sat = app.add_subcommand("sat", "bounded satisfiability search");
  add_search_flags(sat, sat_flags);

  std::string proof_path, proof_system;
  auto* proof = app.add_subcommand("proof", "derivation checking");
  proof->require_subcommand(1);
  auto* proof_check = proof->add_subcommand("check", "check a derivation file");
  proof_check->add_option("file", proof_path)->required();
  proof_check->add_option("--system", proof_system)->required();

  std::string fuzz_system, fuzz_axiom_name, fuzz_class;
  int fuzz_trials = 1000;
  std::uint64_t fuzz_seed = 0;
  auto* fuzz = app.add_subcommand("fuzz", "soundness fuzzing");
  fuzz->add_option("--system", fuzz_system)->required();
  fuzz->add_option("--trials", fuzz_trials);
  fuzz->add_option("--seed", fuzz_seed);
  fuzz->add_option("--axiom", fuzz_axiom_name, "fuzz a single axiom");
  fuzz->add_option("--class", fuzz_class, "frame class override for --axiom");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(model_path, world, formula);
    if (eval_cmd->parsed()) return run_eval(eval_model, eval_formula);
    if (bisim->parsed())
      return run_bisim(left_path, right_path, pair, verify_path);
    if (translate->parsed()) return run_translate(to, translate_formula);
    if (valid->parsed()) return run_valid(valid_flags);
    if (sat->parsed()) return run_sat(sat_flags);
    if (proof->parsed()) return run_proof_check(proof_path, proof_system);
    if (fuzz->parsed())
      return run_fuzz(fuzz_system, fuzz_trials, fuzz_seed, fuzz_axiom_name,
                      fuzz_class);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
