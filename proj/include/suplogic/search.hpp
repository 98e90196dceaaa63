#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "suplogic/formula.hpp"
#include "suplogic/model.hpp"

namespace suplogic {

enum class RelationKind { Ternary, Binary, Both };

std::string to_string(RelationKind k);
RelationKind relation_kind_from_string(const std::string& name);

struct SampleMode {
  int count;
  std::uint64_t seed;
  double density = 0.3;
};

struct SearchBounds {
  int max_worlds;
  std::vector<std::string> atoms;
  RelationKind relation_kind;
  std::optional<SampleMode> sample;  // nullopt = exhaustive
};

/// Valid/Unsatisfiable arise only from exhaustive enumeration; sampling can
/// only produce a witness or Unknown after the trial budget.
struct SearchVerdict {
  enum class Kind { Valid, Countermodel, Satisfiable, Unsatisfiable, Unknown };

  Kind kind;
  std::optional<PointedModel> witness;  // Countermodel / Satisfiable
  int trials = 0;                       // Unknown
};

/// Exhaustive: Valid iff f holds at every world of every model within the
/// bounds whose frame lies in c, else the enumeration-first countermodel.
/// Sampling: Countermodel or Unknown. Exhaustive caps: 2 worlds when the
/// ternary relation is enumerated, 3 for binary only.
SearchVerdict check_validity(const Formula& f, const SearchBounds& b,
                             FrameClass c);

/// Satisfiable / Unsatisfiable (exhaustive) / Unknown (sampling).
SearchVerdict check_sat(const Formula& f, const SearchBounds& b, FrameClass c);

/// Seeded random model with exactly b.max_worlds worlds named w0..; atom
/// membership is a fair coin, relation entries appear with the sample
/// density (default 0.3), and the binary relation is closed into the frame
/// class. Identical for identical arguments.
GeneralizedModel random_model(const SearchBounds& b, FrameClass c,
                              std::uint64_t seed);

/// Canonical-order exhaustive enumeration behind check_validity/check_sat;
/// stops when fn returns false. Exposed for equivalence sweeps in tests.
void for_each_model(const SearchBounds& b, FrameClass c,
                    const std::function<bool(const GeneralizedModel&)>& fn);

}  // namespace suplogic
