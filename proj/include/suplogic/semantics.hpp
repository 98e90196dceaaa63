#pragma once

#include <string>
#include <vector>

#include "suplogic/formula.hpp"
#include "suplogic/model.hpp"

namespace suplogic {

/// Truth set of f as a world mask. Computed bottom-up over the subformulas
/// of f with per-call memoization, so supervenience clauses reduce to bit
/// tests against two precomputed truth sets per S_w pair.
///
/// Throws EvalError if f mentions an operator whose relation the model
/// does not carry.
WorldMask extension(const GeneralizedModel& m, const Formula& f);

/// Truth at a single world.
bool eval(const GeneralizedModel& m, const std::string& world,
          const Formula& f);
bool eval_at(const GeneralizedModel& m, int world, const Formula& f);

/// World names from a mask, in model (lexicographic) order.
std::vector<std::string> mask_to_worlds(const GeneralizedModel& m,
                                        WorldMask mask);

/// Global consequence over world pairs: any two worlds agreeing on every
/// member of gamma agree on a.
bool sup_consequence(const GeneralizedModel& m,
                     const std::vector<Formula>& gamma, const Formula& a);

/// Global consequence over single worlds: every world satisfying all of
/// gamma satisfies a.
bool inf_consequence(const GeneralizedModel& m,
                     const std::vector<Formula>& gamma, const Formula& a);

}  // namespace suplogic
