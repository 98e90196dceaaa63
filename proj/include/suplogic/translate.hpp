#pragma once

#include <optional>
#include <set>
#include <vector>

#include "suplogic/formula.hpp"
#include "suplogic/model.hpp"
#include "suplogic/search.hpp"

namespace suplogic {

/// Maximal conjunction over ants for the 1-indexed subset t: the i-th
/// conjunct is ants[i-1] when i is in t, its negation otherwise.
/// Right-folded; empty ants gives true. Indices outside 1..n are rejected.
Formula b_t(const std::vector<Formula>& ants, const std::set<int>& t);

/// The Delta-form of D(ants; cons): a right-folded conjunction, over every
/// subset T of {1..n} in binary-counter order (bit i-1 holds membership of
/// index i), of Delta(B_T -> cons) | Delta(B_T -> ~cons). This fixed order
/// is the canonical shape used by both t_d and the Dn axiom schema.
Formula dn_expansion(const std::vector<Formula>& ants, const Formula& cons);

/// Homomorphic translation of the Delta fragment (Booleans + Delta) into
/// the D fragment: Delta A becomes D(; A). Rejects other operators.
Formula t_delta(const Formula& f);

/// Translation of the D fragment (Booleans + D) into the Delta fragment via
/// dn_expansion; output is Theta(2^n) per D node. Rejects other operators.
Formula t_d(const Formula& f);

/// Countermodel to f <-> g within the bounds, or nullopt when none was
/// found (exhaustively none, or none within the sample budget).
std::optional<PointedModel> equivalent_on_bounds(const Formula& f,
                                                 const Formula& g,
                                                 const SearchBounds& b,
                                                 FrameClass c);

}  // namespace suplogic
