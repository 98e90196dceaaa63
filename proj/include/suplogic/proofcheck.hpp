#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suplogic/derivation.hpp"
#include "suplogic/formula.hpp"
#include "suplogic/model.hpp"
#include "suplogic/search.hpp"

namespace suplogic {

/// Metavariable binding for an axiom schema instance.
using Substitution = std::map<std::string, Formula>;

/// Hilbert system: named axiom schemas over metavariables, two parametric
/// schema families (A5 for the supervenience system, Dn for the D systems),
/// a rule set, and the frame class the system is intended for.
struct AxiomSystem {
  std::string name;
  std::vector<std::pair<std::string, Formula>> schemas;
  bool has_a5 = false;
  bool has_dn = false;
  bool rule_mp = true;
  bool rule_gen = false;
  bool rule_r2 = false;
  bool rule_rekw = false;
  FrameClass intended_class = FrameClass::All;
  RelationKind relation_kind = RelationKind::Binary;

  /// TAUT plus every named schema plus the parametric families.
  std::vector<std::string> axiom_names() const;
  bool has_axiom(const std::string& axiom) const;
};

/// Registered systems:
///   LS                                the supervenience system (A1..A5)
///   PLKw PLKwT PLKw4 PLKw5 PLKwB      the Delta systems
///   PLKwS4 PLKwS5 PLKw45
///   SD SDT SD4 SD5 SDB SDS4 SDS5 SD45 the Delta systems plus Dn
const AxiomSystem& axiom_system(const std::string& name);
std::vector<std::string> axiom_system_names();

/// Schema metavariable (rendered uppercase, so it can never collide with a
/// parsed atom).
Formula meta(std::string name);

/// Structural match of target against a schema over metavariables.
std::optional<Substitution> match_schema(const Formula& schema,
                                         const Formula& target);

/// Applies a substitution that must bind every metavariable in the schema.
Formula substitute(const Formula& schema, const Substitution& sub);

/// (A <| B1) & .. & (A <| Bn) -> (A <| C) where C is built from exactly
/// B1..Bn with ~ & | -> <->. The premise conjunction may associate freely;
/// every Bi must occur in C.
std::optional<Substitution> match_a5(const Formula& target);

/// D(A1..An; B) <-> its dn_expansion, n >= 1; the right side must match the
/// canonical subset order exactly.
std::optional<Substitution> match_dn(const Formula& target);

/// Axiom check by name within a system; handles TAUT/A5/Dn.
/// nullopt when target is not an instance (TAUT instances bind nothing).
std::optional<Substitution> match_axiom(const AxiomSystem& sys,
                                        const std::string& axiom,
                                        const Formula& target);

/// Propositional tautology with atoms and maximal modal subformulas as
/// letters (syntactically equal ones share a letter) and true/false as
/// constants. Truth-table decision, capped at 20 letters.
bool is_tautology_instance(const Formula& f);

struct CheckFailure {
  int line_index;
  std::string reason;
};

/// nullopt when every line is an axiom instance or follows from earlier
/// cited lines by a rule of the system.
std::optional<CheckFailure> check_derivation(const Derivation& d,
                                             const AxiomSystem& sys);

struct FuzzViolation {
  int trial;
  std::string axiom;
  Formula instance;
  GeneralizedModel model;
  std::string world;
};

struct FuzzReport {
  int trials_run = 0;
  std::vector<FuzzViolation> violations;
};

/// Draws, per trial, a random model of the system's intended frame class
/// and a random instance of one of its axiom schemas, and evaluates the
/// instance at every world. Trial i uses seed + i.
FuzzReport fuzz_soundness(const AxiomSystem& sys, int trials,
                          std::uint64_t seed);

/// Same, pinned to a single axiom and an explicit frame class.
FuzzReport fuzz_axiom(const AxiomSystem& sys, const std::string& axiom,
                      FrameClass cls, int trials, std::uint64_t seed);

}  // namespace suplogic
