#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suplogic/formula.hpp"
#include "suplogic/model.hpp"

namespace suplogic {

/// Candidate bisimulation between two models, as world-name pairs.
struct BisimRelation {
  GeneralizedModel left;
  GeneralizedModel right;
  std::vector<std::pair<std::string, std::string>> pairs;
};

/// First violated condition, scanning pairs lexicographically; Atom before
/// Zig before Zag, triples in index order.
struct BisimViolation {
  enum class Condition { Nonempty, Atom, OZig, OZag };

  Condition condition;
  std::pair<std::string, std::string> pair;          // except Nonempty
  std::optional<std::array<std::string, 3>> triple;  // u, v, x for Zig/Zag
};

std::string to_string(const BisimViolation& v);

/// nullopt when r is a bisimulation for the agreement language: nonempty,
/// and every pair satisfies the atom condition plus both triple-matching
/// conditions. Throws ModelError on pairs naming unknown worlds.
std::optional<BisimViolation> check_obisim(const BisimRelation& r);

/// Greatest fixpoint: start from the atom-equivalent pairs and delete
/// violating pairs between rounds until stable. The result contains every
/// relation accepted by check_obisim; it may be empty.
BisimRelation largest_obisim(const GeneralizedModel& left,
                             const GeneralizedModel& right);

bool obisimilar(const PointedModel& a, const PointedModel& b);

enum class ProbeLanguage {
  Agreement,     // ~ & O
  AgreementSup,  // ~ & O and the dyadic supervenience operator
};

struct ProbeOptions {
  int modal_depth = 3;
  std::vector<std::string> atoms;
  int samples = 500;
  std::uint64_t seed = 0;
  ProbeLanguage language = ProbeLanguage::Agreement;
  int max_size = 25;  // node-count cap on sampled formulas
};

/// Samples random formulas and evaluates them at both points; returns the
/// first formula the points disagree on, or nullopt. Sample i is drawn from
/// seed + i, so reports do not depend on scheduling.
std::optional<Formula> probe_invariance(const PointedModel& a,
                                        const PointedModel& b,
                                        const ProbeOptions& opts);

/// The probe's formula sampler; sample index i uses seed + i.
Formula random_probe_formula(const ProbeOptions& opts, std::uint64_t sample);

}  // namespace suplogic
