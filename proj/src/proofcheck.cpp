#include "suplogic/proofcheck.hpp"

#include <algorithm>
#include <cctype>

#include "suplogic/rng.hpp"
#include "suplogic/semantics.hpp"
#include "suplogic/translate.hpp"

namespace suplogic {

namespace {

bool is_meta(const Formula& f) {
  return f.op() == Op::Atom &&
         std::isupper(static_cast<unsigned char>(f.atom_name()[0]));
}

bool boolean_connective(Op op) {
  return op == Op::Not || op == Op::And || op == Op::Or || op == Op::Imp ||
         op == Op::Iff;
}

bool unify(const Formula& schema, const Formula& target, Substitution& sub) {
  if (is_meta(schema)) {
    auto [it, inserted] = sub.try_emplace(schema.atom_name(), target);
    return inserted || it->second == target;
  }
  if (schema.op() != target.op()) return false;
  if (schema.op() == Op::Atom) return schema.atom_name() == target.atom_name();
  if (schema.ants().size() != target.ants().size()) return false;
  auto sa = schema.args();
  auto ta = target.args();
  if (sa.size() != ta.size()) return false;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (!unify(sa[i], ta[i], sub)) return false;
  return true;
}

void flatten_and(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::And) {
    flatten_and(f.left(), out);
    flatten_and(f.right(), out);
  } else {
    out.push_back(f);
  }
}

// C must decompose over ~ & | -> <-> into leaves drawn from bs, and every
// (distinct) Bi must occur as a leaf.
bool built_from_exactly(const Formula& c, const std::vector<Formula>& bs,
                        std::vector<bool>& used) {
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (bs[i] == c) {
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (bs[j] == c) used[j] = true;
      return true;
    }
  if (!boolean_connective(c.op())) return false;
  for (const Formula& a : c.args())
    if (!built_from_exactly(a, bs, used)) return false;
  return true;
}

// Building blocks for the registered schemas.
const Formula& A() { static Formula f = meta("A"); return f; }
const Formula& B() { static Formula f = meta("B"); return f; }
const Formula& C() { static Formula f = meta("C"); return f; }

std::map<std::string, AxiomSystem> build_registry() {
  using F = Formula;
  std::map<std::string, AxiomSystem> reg;

  AxiomSystem ls;
  ls.name = "LS";
  ls.schemas = {
      {"A1", F::imp(F::agree(B()), F::sup({A()}, B()))},
      {"A2", F::imp(F::sup({A()}, B()), F::imp(F::agree(A()), F::agree(B())))},
      {"A3", F::iff(F::agree(F::iff(A(), B())), F::equiv_sup(A(), B()))},
      {"A4", F::imp(F::conj(F::sup({A()}, B()), F::sup({B()}, C())),
                    F::sup({A()}, C()))},
  };
  ls.has_a5 = true;
  ls.rule_r2 = true;
  ls.intended_class = FrameClass::All;
  ls.relation_kind = RelationKind::Ternary;
  reg[ls.name] = ls;

  AxiomSystem base;
  base.name = "PLKw";
  base.schemas = {
      {"KwCon", F::imp(F::conj(F::delta(F::imp(A(), B())),
                               F::delta(F::imp(F::neg(A()), B()))),
                       F::delta(B()))},
      {"KwDis", F::imp(F::delta(A()),
                       F::disj(F::delta(F::imp(A(), B())),
                               F::delta(F::imp(F::neg(A()), C()))))},
      {"EquiKw", F::iff(F::delta(A()), F::delta(F::neg(A())))},
  };
  base.rule_gen = true;
  base.rule_rekw = true;
  base.intended_class = FrameClass::All;
  base.relation_kind = RelationKind::Binary;

  Formula kw_t = F::imp(
      F::conj(F::conj(F::delta(A()), F::delta(F::imp(A(), B()))), A()),
      F::delta(B()));
  Formula kw_4 = F::imp(F::delta(A()), F::delta(F::disj(F::delta(A()), B())));
  Formula kw_5 = F::imp(F::neg(F::delta(A())),
                        F::delta(F::disj(F::neg(F::delta(A())), B())));
  Formula kw_b = F::imp(
      A(), F::delta(F::imp(
               F::conj(F::conj(F::delta(A()), F::delta(F::imp(A(), B()))),
                       F::neg(F::delta(B()))),
               C())));
  Formula tr = F::imp(F::delta(A()), F::delta(F::delta(A())));
  Formula euc = F::imp(F::neg(F::delta(A())), F::delta(F::neg(F::delta(A()))));

  auto extend = [&](const std::string& name,
                    std::vector<std::pair<std::string, Formula>> extra,
                    FrameClass cls) {
    AxiomSystem sys = base;
    sys.name = name;
    for (auto& e : extra) sys.schemas.push_back(std::move(e));
    sys.intended_class = cls;
    reg[sys.name] = sys;
  };

  reg[base.name] = base;
  extend("PLKwT", {{"KwT", kw_t}}, FrameClass::Reflexive);
  extend("PLKw4", {{"Kw4", kw_4}}, FrameClass::Transitive);
  extend("PLKw5", {{"Kw5", kw_5}}, FrameClass::Euclidean);
  extend("PLKwB", {{"KwB", kw_b}}, FrameClass::Symmetric);
  extend("PLKwS4", {{"KwT", kw_t}, {"Tr", tr}}, FrameClass::S4);
  extend("PLKwS5", {{"KwT", kw_t}, {"Euc", euc}}, FrameClass::S5);
  extend("PLKw45", {{"Kw4", kw_4}, {"Kw5", kw_5}}, FrameClass::FourFive);

  // Each Delta system induces a D system: the same axioms plus Dn.
  for (const char* delta_name : {"PLKw", "PLKwT", "PLKw4", "PLKw5", "PLKwB",
                                 "PLKwS4", "PLKwS5", "PLKw45"}) {
    AxiomSystem sd = reg.at(delta_name);
    sd.name = std::string("SD") + (delta_name + 4);
    sd.has_dn = true;
    reg[sd.name] = sd;
  }
  return reg;
}

const std::map<std::string, AxiomSystem>& registry() {
  static const std::map<std::string, AxiomSystem> reg = build_registry();
  return reg;
}

// Letters for the tautology check: atoms and maximal modal subformulas.
void collect_letters(const Formula& f, std::vector<Formula>& letters) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bot:
      return;
    case Op::Not:
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
      for (const Formula& a : f.args()) collect_letters(a, letters);
      return;
    default:
      if (std::find(letters.begin(), letters.end(), f) == letters.end())
        letters.push_back(f);
      return;
  }
}

bool eval_boolean(const Formula& f, const std::vector<Formula>& letters,
                  std::uint32_t assignment) {
  switch (f.op()) {
    case Op::Top:
      return true;
    case Op::Bot:
      return false;
    case Op::Not:
      return !eval_boolean(f.child(), letters, assignment);
    case Op::And:
      return eval_boolean(f.left(), letters, assignment) &&
             eval_boolean(f.right(), letters, assignment);
    case Op::Or:
      return eval_boolean(f.left(), letters, assignment) ||
             eval_boolean(f.right(), letters, assignment);
    case Op::Imp:
      return !eval_boolean(f.left(), letters, assignment) ||
             eval_boolean(f.right(), letters, assignment);
    case Op::Iff:
      return eval_boolean(f.left(), letters, assignment) ==
             eval_boolean(f.right(), letters, assignment);
    default: {
      auto it = std::find(letters.begin(), letters.end(), f);
      return (assignment >> (it - letters.begin())) & 1;
    }
  }
}

// --- fuzzing -------------------------------------------------------------

// Random formula in the system's own language, of bounded depth.
Formula random_instance_formula(Rng& rng, const AxiomSystem& sys, int depth) {
  static const std::vector<std::string> atoms = {"p", "q", "r"};
  auto leaf = [&] {
    int r = rng.below(4);
    if (r == 3) return rng.coin(0.5) ? Formula::top() : Formula::bot();
    return Formula::atom(atoms[r]);
  };
  if (depth <= 0) return leaf();
  bool ternary_lang = sys.relation_kind == RelationKind::Ternary;
  int choices = ternary_lang ? 7 : (sys.has_dn ? 7 : 6);
  switch (rng.below(choices)) {
    case 0:
      return leaf();
    case 1:
      return Formula::neg(random_instance_formula(rng, sys, depth - 1));
    case 2:
      return Formula::conj(random_instance_formula(rng, sys, depth - 1),
                           random_instance_formula(rng, sys, depth - 1));
    case 3:
      return Formula::disj(random_instance_formula(rng, sys, depth - 1),
                           random_instance_formula(rng, sys, depth - 1));
    case 4:
      return Formula::imp(random_instance_formula(rng, sys, depth - 1),
                          random_instance_formula(rng, sys, depth - 1));
    case 5:
      if (ternary_lang)
        return Formula::agree(random_instance_formula(rng, sys, depth - 1));
      return Formula::delta(random_instance_formula(rng, sys, depth - 1));
    default:
      if (ternary_lang)
        return Formula::sup({random_instance_formula(rng, sys, depth - 1)},
                            random_instance_formula(rng, sys, depth - 1));
      if (sys.has_dn) {
        int n = rng.below(3);  // 0..2 antecedents
        std::vector<Formula> ants;
        for (int i = 0; i < n; ++i)
          ants.push_back(random_instance_formula(rng, sys, depth - 1));
        return Formula::det(std::move(ants),
                            random_instance_formula(rng, sys, depth - 1));
      }
      return Formula::delta(random_instance_formula(rng, sys, depth - 1));
  }
}

Formula random_a5_instance(Rng& rng, const AxiomSystem& sys) {
  int n = 1 + rng.below(3);
  Formula a = random_instance_formula(rng, sys, 2);
  std::vector<Formula> bs;
  for (int i = 0; i < n; ++i)
    bs.push_back(random_instance_formula(rng, sys, 2));
  // C: fold B1..Bn right-to-left with random connectives, negating some
  // intermediate results; every Bi occurs exactly once, in order.
  Formula c = bs.back();
  for (int i = n - 2; i >= 0; --i) {
    switch (rng.below(4)) {
      case 0: c = Formula::conj(bs[i], c); break;
      case 1: c = Formula::disj(bs[i], c); break;
      case 2: c = Formula::imp(bs[i], c); break;
      default: c = Formula::iff(bs[i], c); break;
    }
    if (rng.coin(0.3)) c = Formula::neg(c);
  }
  std::vector<Formula> premises;
  for (const Formula& b : bs) premises.push_back(Formula::sup({a}, b));
  return Formula::imp(Formula::big_and(premises), Formula::sup({a}, c));
}

Formula random_dn_instance(Rng& rng, const AxiomSystem& sys) {
  int n = 1 + rng.below(2);
  std::vector<Formula> ants;
  for (int i = 0; i < n; ++i)
    ants.push_back(random_instance_formula(rng, sys, 2));
  Formula cons = random_instance_formula(rng, sys, 2);
  return Formula::iff(Formula::det(ants, cons), dn_expansion(ants, cons));
}

Formula random_axiom_instance(Rng& rng, const AxiomSystem& sys,
                              const std::string& axiom) {
  if (axiom == "A5") return random_a5_instance(rng, sys);
  if (axiom == "Dn") return random_dn_instance(rng, sys);
  for (const auto& [name, schema] : sys.schemas) {
    if (name != axiom) continue;
    Substitution sub;
    for (const Formula& g : subformulas(schema))
      if (is_meta(g) && !sub.count(g.atom_name()))
        sub[g.atom_name()] = random_instance_formula(rng, sys, 2);
    return substitute(schema, sub);
  }
  throw std::invalid_argument("system " + sys.name + " has no axiom " + axiom);
}

FuzzReport fuzz_run(const AxiomSystem& sys,
                    const std::vector<std::string>& axioms, FrameClass cls,
                    int trials, std::uint64_t seed) {
  FuzzReport report;
  report.trials_run = trials;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(seed + static_cast<std::uint64_t>(trial));
    const std::string& axiom = axioms[rng.below(static_cast<int>(axioms.size()))];
    Formula instance = random_axiom_instance(rng, sys, axiom);
    int k = 1 + rng.below(4);
    SearchBounds mb{k, {"p", "q", "r"}, sys.relation_kind, std::nullopt};
    GeneralizedModel m = random_model(mb, cls, rng.next());
    WorldMask ext = extension(m, instance);
    WorldMask missing = m.full_mask() & ~ext;
    if (missing)
      report.violations.push_back(
          {trial, axiom, instance, m,
           mask_to_worlds(m, missing & (~missing + 1)).front()});
  }
  return report;
}

}  // namespace

std::vector<std::string> AxiomSystem::axiom_names() const {
  std::vector<std::string> names = {"TAUT"};
  for (const auto& [name, schema] : schemas) names.push_back(name);
  if (has_a5) names.push_back("A5");
  if (has_dn) names.push_back("Dn");
  return names;
}

bool AxiomSystem::has_axiom(const std::string& axiom) const {
  auto names = axiom_names();
  return std::find(names.begin(), names.end(), axiom) != names.end();
}

const AxiomSystem& axiom_system(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end())
    throw std::invalid_argument("unknown axiom system: " + name);
  return it->second;
}

std::vector<std::string> axiom_system_names() {
  std::vector<std::string> names;
  for (const auto& [name, sys] : registry()) names.push_back(name);
  return names;
}

Formula meta(std::string name) { return Formula::atom(std::move(name)); }

std::optional<Substitution> match_schema(const Formula& schema,
                                         const Formula& target) {
  Substitution sub;
  if (!unify(schema, target, sub)) return std::nullopt;
  return sub;
}

Formula substitute(const Formula& schema, const Substitution& sub) {
  if (is_meta(schema)) return sub.at(schema.atom_name());
  std::vector<Formula> args;
  args.reserve(schema.args().size());
  for (const Formula& a : schema.args()) args.push_back(substitute(a, sub));
  return with_args(schema, args);
}

std::optional<Substitution> match_a5(const Formula& target) {
  if (target.op() != Op::Imp) return std::nullopt;
  const Formula& rhs = target.right();
  if (rhs.op() != Op::Sup || rhs.ants().size() != 1) return std::nullopt;
  const Formula& a = rhs.ants()[0];

  std::vector<Formula> premises;
  flatten_and(target.left(), premises);
  std::vector<Formula> bs;
  for (const Formula& p : premises) {
    if (p.op() != Op::Sup || p.ants().size() != 1 || p.ants()[0] != a)
      return std::nullopt;
    bs.push_back(p.cons());
  }

  std::vector<bool> used(bs.size(), false);
  if (!built_from_exactly(rhs.cons(), bs, used)) return std::nullopt;
  if (std::find(used.begin(), used.end(), false) != used.end())
    return std::nullopt;

  Substitution sub{{"A", a}};
  for (std::size_t i = 0; i < bs.size(); ++i)
    sub["B" + std::to_string(i + 1)] = bs[i];
  return sub;
}

std::optional<Substitution> match_dn(const Formula& target) {
  if (target.op() != Op::Iff) return std::nullopt;
  const Formula& lhs = target.left();
  if (lhs.op() != Op::Det || lhs.ants().empty()) return std::nullopt;
  std::vector<Formula> ants(lhs.ants().begin(), lhs.ants().end());
  if (target.right() != dn_expansion(ants, lhs.cons())) return std::nullopt;
  Substitution sub{{"B", lhs.cons()}};
  for (std::size_t i = 0; i < ants.size(); ++i)
    sub["A" + std::to_string(i + 1)] = ants[i];
  return sub;
}

std::optional<Substitution> match_axiom(const AxiomSystem& sys,
                                        const std::string& axiom,
                                        const Formula& target) {
  if (axiom == "TAUT") {
    if (is_tautology_instance(target)) return Substitution{};
    return std::nullopt;
  }
  if (axiom == "A5") return sys.has_a5 ? match_a5(target) : std::nullopt;
  if (axiom == "Dn") return sys.has_dn ? match_dn(target) : std::nullopt;
  for (const auto& [name, schema] : sys.schemas)
    if (name == axiom) return match_schema(schema, target);
  return std::nullopt;
}

bool is_tautology_instance(const Formula& f) {
  std::vector<Formula> letters;
  collect_letters(f, letters);
  if (letters.size() > 20)
    throw BoundsError("tautology check capped at 20 distinct letters");
  std::uint32_t rows = std::uint32_t{1} << letters.size();
  for (std::uint32_t assignment = 0; assignment < rows; ++assignment)
    if (!eval_boolean(f, letters, assignment)) return false;
  return true;
}

std::optional<CheckFailure> check_derivation(const Derivation& d,
                                             const AxiomSystem& sys) {
  std::map<int, const DerivationLine*> by_index;
  int prev = 0;
  for (const auto& line : d.lines) {
    if (line.index <= prev)
      return CheckFailure{line.index, "line indices must strictly increase"};
    prev = line.index;
    by_index[line.index] = &line;

    auto cited = [&](int ref) -> const DerivationLine* {
      if (ref >= line.index) return nullptr;
      auto it = by_index.find(ref);
      return it == by_index.end() ? nullptr : it->second;
    };

    switch (line.just.kind) {
      case Justification::Kind::Axiom: {
        if (!sys.has_axiom(line.just.axiom))
          return CheckFailure{line.index, "axiom " + line.just.axiom +
                                              " is not part of " + sys.name};
        std::optional<Substitution> m;
        try {
          m = match_axiom(sys, line.just.axiom, line.formula);
        } catch (const BoundsError& e) {
          return CheckFailure{line.index, e.what()};
        }
        if (!m)
          return CheckFailure{line.index,
                              "not an instance of " + line.just.axiom};
        break;
      }
      case Justification::Kind::MP: {
        const DerivationLine* l1 = cited(line.just.ref1);
        const DerivationLine* l2 = cited(line.just.ref2);
        if (!l1 || !l2)
          return CheckFailure{line.index, "mp cites a missing earlier line"};
        bool ok =
            l1->formula == Formula::imp(l2->formula, line.formula) ||
            l2->formula == Formula::imp(l1->formula, line.formula);
        if (!ok)
          return CheckFailure{line.index,
                              "does not follow by mp from the cited lines"};
        break;
      }
      case Justification::Kind::Gen: {
        if (!sys.rule_gen)
          return CheckFailure{line.index, "rule gen is not part of " + sys.name};
        const DerivationLine* l1 = cited(line.just.ref1);
        if (!l1)
          return CheckFailure{line.index, "gen cites a missing earlier line"};
        if (line.formula != Formula::delta(l1->formula))
          return CheckFailure{line.index,
                              "gen must derive Delta of the cited line"};
        break;
      }
      case Justification::Kind::NecO: {
        if (!sys.rule_r2)
          return CheckFailure{line.index,
                              "rule nec-o is not part of " + sys.name};
        const DerivationLine* l1 = cited(line.just.ref1);
        if (!l1)
          return CheckFailure{line.index, "nec-o cites a missing earlier line"};
        if (line.formula != Formula::agree(l1->formula))
          return CheckFailure{line.index,
                              "nec-o must derive O of the cited line"};
        break;
      }
      case Justification::Kind::ReKw: {
        if (!sys.rule_rekw)
          return CheckFailure{line.index,
                              "rule rekw is not part of " + sys.name};
        const DerivationLine* l1 = cited(line.just.ref1);
        if (!l1)
          return CheckFailure{line.index, "rekw cites a missing earlier line"};
        const Formula& src = l1->formula;
        bool ok = src.op() == Op::Iff &&
                  line.formula == Formula::iff(Formula::delta(src.left()),
                                               Formula::delta(src.right()));
        if (!ok)
          return CheckFailure{
              line.index,
              "rekw must derive Delta A <-> Delta B from A <-> B"};
        break;
      }
    }
  }
  return std::nullopt;
}

FuzzReport fuzz_soundness(const AxiomSystem& sys, int trials,
                          std::uint64_t seed) {
  std::vector<std::string> axioms;
  for (const auto& [name, schema] : sys.schemas) axioms.push_back(name);
  if (sys.has_a5) axioms.push_back("A5");
  if (sys.has_dn) axioms.push_back("Dn");
  return fuzz_run(sys, axioms, sys.intended_class, trials, seed);
}

FuzzReport fuzz_axiom(const AxiomSystem& sys, const std::string& axiom,
                      FrameClass cls, int trials, std::uint64_t seed) {
  if (!sys.has_axiom(axiom) || axiom == "TAUT")
    throw std::invalid_argument("cannot fuzz axiom " + axiom + " of " +
                                sys.name);
  return fuzz_run(sys, {axiom}, cls, trials, seed);
}

}  // namespace suplogic
