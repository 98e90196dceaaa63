// Acceptance suite: every check this project commits to, one line each.
// Exit status is the number of failing criteria.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "suplogic/bisim.hpp"
#include "suplogic/proofcheck.hpp"
#include "suplogic/search.hpp"
#include "suplogic/semantics.hpp"
#include "suplogic/syntax.hpp"
#include "suplogic/translate.hpp"

#include "test_util.hpp"

using namespace suplogic;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL",
              what.c_str());
  if (!ok) ++failures;
}

GeneralizedModel witness() {
  return testutil::load_data_model("moreexp_m.json");
}
GeneralizedModel witness_prime() {
  return testutil::load_data_model("moreexp_mprime.json");
}

const Formula kSupPQ = parse_formula("p <| q");

void criterion_1() {
  bool ok = eval(witness(), "s", kSupPQ) &&
            !eval(witness_prime(), "sprime", kSupPQ);
  report(1, "bundled witness models separate p <| q at s and s'", ok);
}

void criterion_2() {
  BisimRelation bundled{witness(),
                      witness_prime(),
                      {{"s", "sprime"}, {"t", "vprime"}, {"v", "tprime"},
                       {"u", "uprime"}}};
  bool ok = !check_obisim(bundled).has_value();
  BisimRelation largest = largest_obisim(witness(), witness_prime());
  for (const auto& pair : bundled.pairs)
    ok = ok && std::find(largest.pairs.begin(), largest.pairs.end(), pair) !=
                   largest.pairs.end();
  ok = ok && std::find(largest.pairs.begin(), largest.pairs.end(),
                       std::make_pair(std::string("s"), std::string("sprime"))) !=
                 largest.pairs.end();
  report(2, "bundled relation verifies; largest bisimulation covers it", ok);
}

ProbeOptions probe_options() {
  ProbeOptions opts;
  opts.modal_depth = 4;
  opts.atoms = {"p", "q"};
  opts.samples = 500;
  opts.seed = 20250808;
  return opts;
}

void criterion_3() {
  auto disagreement = probe_invariance(PointedModel(witness(), "s"),
                                       PointedModel(witness_prime(), "sprime"),
                                       probe_options());
  report(3, "500 sampled agreement-language formulas agree at s / s'",
         !disagreement.has_value());
}

void criterion_4() {
  ProbeOptions opts = probe_options();
  opts.language = ProbeLanguage::AgreementSup;
  PointedModel a(witness(), "s"), b(witness_prime(), "sprime");
  auto separating = probe_invariance(a, b, opts);
  bool ok = separating.has_value();
  if (ok)
    ok = eval(a.model, a.point, *separating) !=
         eval(b.model, b.point, *separating);
  ok = ok && eval(a.model, a.point, kSupPQ) != eval(b.model, b.point, kSupPQ);
  report(4, "adding the supervenience operator separates s from s'", ok);
}

void criterion_5() {
  std::vector<std::string> suite = {
      // preorder and agreement facts
      "p <| p",
      "(p & q) <| (p & q)",
      "(p <| q) & (q <| r) -> (p <| r)",
      "(~p <| (p & q)) & ((p & q) <| q) -> (~p <| q)",
      "O q -> (p <| q)",
      "O (p & q) -> (~p <| (p & q))",
      "O p -> ((p <| q) <-> O q)",
      "O ~p -> ((~p <| (p & q)) <-> O (p & q))",
      // the axioms
      "(p <| q) -> (O p -> O q)",
      "((p & q) <| ~p) -> (O (p & q) -> O ~p)",
      "O (p <-> q) <-> (p <| q) & (q <| p)",
      "O (~p <-> (p & q)) <-> (~p <| (p & q)) & ((p & q) <| ~p)",
      "(p <| q) -> (p <| ~q)",
      "(p <| q) & (p <| (p & q)) -> (p <| q -> (p & q))",
      "(p <| q) & (p <| r) -> (p <| (q & r) | (q <-> r))",
      // provable items as validities
      "(p <| ~p) & (~p <| p)",
      "O (p <-> q) -> (O p <-> O q)",
      "(p <| q) & (p <| r) -> (p <| (q | r) -> q)",
      "O p & O q -> O (p & q)",
      "(p <| q) & (q <| p) -> ((r <| p) <-> (r <| q)) & ((p <| r) <-> (q <| r))",
      "q <| (p -> p)",
      "(p & q) <| (q & p)",
      "O (p & q) -> O (q & p)",
      // widening and dropping antecedents
      "Sup(r; q) -> Sup(r, p; q)",
      "Sup(r; p) -> (Sup(r, p; q) <-> Sup(r; q))",
      "Sup(p, q; r) -> Sup(p, q, p & q; r)",
      "Sup(p, q; p <-> q) -> (Sup(p, q, p <-> q; r) <-> Sup(p, q; r))",
      // setwise supervenience with a repeated consequent collapses
      "Sup(p; q) <-> SupSet(p; q, q)",
      // agreement as empty- and top-antecedent supervenience
      "O q <-> Sup(; q)",
      "O q <-> Sup(true; q)",
      "Sup(p; q) <-> Sup(true, p; q)",
      // relativized operators
      "(p <| q) <-> CO(p; q) & CO(~p; q)",
      "CO(p; q) <-> CSup(p; true; q)",
      "CSup(r; p; q) <-> CO(p & r; q) & CO(~p & r; q)",
  };
  std::vector<Formula> formulas;
  for (const auto& text : suite) formulas.push_back(parse_formula(text));
  // set-to-set supervenience against its expansion
  for (const Formula& ss :
       {parse_formula("SupSet(p; q, p & q)"), parse_formula("SupSet(p, q;)"),
        parse_formula("SupSet(; p, q)")})
    formulas.push_back(Formula::iff(ss, expand_supset(ss)));

  long counterexamples = 0;
  SearchBounds exhaustive{2, {"p", "q"}, RelationKind::Ternary, std::nullopt};
  for_each_model(exhaustive, FrameClass::All, [&](const GeneralizedModel& m) {
    for (const Formula& f : formulas)
      if (extension(m, f) != m.full_mask()) ++counterexamples;
    return true;
  });
  for (int trial = 0; trial < 1000; ++trial) {
    SearchBounds sb{4, {"p", "q", "r"}, RelationKind::Ternary, std::nullopt};
    Rng rng(911000 + trial);
    int k = 1 + rng.below(4);
    SearchBounds sized{k, sb.atoms, sb.relation_kind, std::nullopt};
    GeneralizedModel m = random_model(sized, FrameClass::All, rng.next());
    for (const Formula& f : formulas)
      if (extension(m, f) != m.full_mask()) ++counterexamples;
  }
  report(5, "validity suite: exhaustive (2 worlds) + 1000 random models, 0 hits",
         counterexamples == 0);
}

void criterion_6() {
  SearchBounds b{2, {"p", "q"}, RelationKind::Ternary, std::nullopt};
  SearchVerdict v = check_validity(parse_formula("(p <| q) -> (q <| p)"), b,
                                   FrameClass::All);
  bool ok = v.kind == SearchVerdict::Kind::Countermodel && v.witness &&
            !eval(v.witness->model, v.witness->point,
                  parse_formula("(p <| q) -> (q <| p)"));
  report(6, "supervenience is not symmetric: countermodel re-verifies", ok);
}

void criterion_7() {
  Formula golden = parse_formula(
      "(Delta (~p -> q) | Delta (~p -> ~q)) & "
      "(Delta (p -> q) | Delta (p -> ~q))");
  bool ok = t_d(parse_formula("D(p; q)")) == golden;

  // printed order of the source display, semantically equal to ours
  Formula printed_order = parse_formula(
      "(Delta (p -> q) | Delta (p -> ~q)) & "
      "(Delta (~p -> q) | Delta (~p -> ~q))");
  SearchBounds eq{3, {"p", "q"}, RelationKind::Binary, std::nullopt};
  ok = ok && !equivalent_on_bounds(golden, printed_order, eq, FrameClass::All);

  long failures_7 = 0;
  Rng rng(70707);
  testutil::GenOptions dopts;
  dopts.atoms = {"p", "q"};
  dopts.det = true;
  dopts.max_arity = 3;
  testutil::GenOptions copts;
  copts.atoms = {"p", "q"};
  copts.delta = true;

  std::vector<GeneralizedModel> models;
  for (int i = 0; i < 200; ++i) {
    Rng mr(808000 + i);
    int k = 1 + mr.below(4);
    SearchBounds mb{k, {"p", "q"}, RelationKind::Binary, std::nullopt};
    models.push_back(random_model(mb, FrameClass::All, mr.next()));
  }
  for (int i = 0; i < 300; ++i) {
    Formula df = testutil::random_formula(rng, dopts, 2);
    Formula cf = testutil::random_formula(rng, copts, 2);
    Formula df_t = t_d(df);
    Formula cf_t = t_delta(cf);
    for (const GeneralizedModel& m : models) {
      if (extension(m, df) != extension(m, df_t)) ++failures_7;
      if (extension(m, cf) != extension(m, cf_t)) ++failures_7;
    }
  }
  report(7, "translations: canonical shape + 300 formulas x 200 models, 0 "
            "failures",
         ok && failures_7 == 0);
}

void criterion_8() {
  std::vector<Formula> bridges = {
      parse_formula("Delta p <-> Box p | Box ~p"),
      parse_formula("Delta ~p <-> Box ~p | Box ~~p"),
      Formula::iff(parse_formula("D(p; ~p)"),
                   dn_expansion({Formula::atom("p")},
                                Formula::neg(Formula::atom("p")))),
      Formula::iff(parse_formula("D(~p; p)"),
                   dn_expansion({Formula::neg(Formula::atom("p"))},
                                Formula::atom("p"))),
  };
  long models = 0, bad = 0;
  SearchBounds b{3, {"p"}, RelationKind::Binary, std::nullopt};
  for_each_model(b, FrameClass::All, [&](const GeneralizedModel& m) {
    ++models;
    for (const Formula& f : bridges)
      if (extension(m, f) != m.full_mask()) ++bad;
    return true;
  });
  report(8, "Delta/Box and D/Delta bridges over all " + std::to_string(models) +
                " one-atom binary models (3-world slice: 4096)",
         bad == 0 && models == 4 + 64 + 4096);
}

void criterion_9() {
  bool ok = fuzz_soundness(axiom_system("LS"), 10000, 42).violations.empty();

  const std::vector<std::tuple<std::string, std::string, FrameClass>> rows = {
      {"PLKwT", "KwT", FrameClass::Reflexive},
      {"PLKw4", "Kw4", FrameClass::Transitive},
      {"PLKw5", "Kw5", FrameClass::Euclidean},
      {"PLKwB", "KwB", FrameClass::Symmetric},
      {"PLKwS4", "Tr", FrameClass::S4},
      {"PLKwS5", "Euc", FrameClass::S5},
      {"SD", "Dn", FrameClass::All},
  };
  for (const auto& [sys, axiom, cls] : rows)
    ok = ok && fuzz_axiom(axiom_system(sys), axiom, cls, 1000, 42)
                   .violations.empty();

  // negative control: the reflexive axiom must fail on arbitrary frames
  ok = ok && !fuzz_axiom(axiom_system("PLKwT"), "KwT", FrameClass::All, 1000,
                         42)
                  .violations.empty();
  report(9, "soundness fuzz: 10000 trials + per-axiom classes + control", ok);
}

void criterion_10() {
  const AxiomSystem& ls = axiom_system("LS");
  Derivation good = load_derivation(testutil::data_path("ls_sup_refl.drv"));
  bool ok = !check_derivation(good, ls).has_value();

  Derivation mutated = good;
  mutated.lines[1].formula = parse_formula("O (p <-> ~p)");
  auto failure = check_derivation(mutated, ls);
  ok = ok && failure && failure->line_index == 2;

  Derivation plkw = load_derivation(testutil::data_path("plkw_kwcon.drv"));
  ok = ok && !check_derivation(plkw, axiom_system("PLKw")).has_value();
  report(10, "proof checker: bundled derivations accepted, mutant rejected",
         ok);
}

void criterion_11() {
  const Formula p = Formula::atom("p");
  const Formula q = Formula::atom("q");
  std::vector<Formula> pool = {p, q, Formula::conj(p, q)};
  std::vector<Formula> goals = {p, q, Formula::conj(p, q),
                                Formula::disj(p, q)};
  long mismatches = 0;
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::string> worlds;
    for (int i = 0; i < k; ++i) worlds.push_back("w" + std::to_string(i));
    for (std::uint32_t vbits = 0; vbits < (1u << (2 * k)); ++vbits) {
      GeneralizedModel::ValuationByName val;
      for (int a = 0; a < 2; ++a) {
        auto& members = val[a == 0 ? "p" : "q"];
        for (int w = 0; w < k; ++w)
          if ((vbits >> (a * k + w)) & 1) members.push_back(worlds[w]);
      }
      GeneralizedModel m = universal_model(worlds, val);
      for (std::uint32_t gbits = 0; gbits < 8; ++gbits) {
        std::vector<Formula> gamma;
        for (int i = 0; i < 3; ++i)
          if ((gbits >> i) & 1) gamma.push_back(pool[i]);
        for (const Formula& a : goals) {
          bool global = sup_consequence(m, gamma, a);
          Formula local = Formula::sup(gamma, a);
          for (const auto& w : m.worlds())
            if (eval(m, w, local) != global) ++mismatches;
        }
      }
    }
  }
  report(11, "universal models: local supervenience = global consequence",
         mismatches == 0);
}

void criterion_12() {
  Rng rng(121212);
  long bad = 0;
  for (int i = 0; i < 10000; ++i) {
    Formula f = testutil::random_formula(rng, testutil::full_language(), 4);
    if (parse_formula(print_formula(f)) != f) ++bad;
  }
  report(12, "10000 random formulas: parse after print is the identity",
         bad == 0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures)
    std::cout << failures << " criterion(s) failed\n";
  else
    std::cout << "all criteria passed\n";
  return failures;
}
