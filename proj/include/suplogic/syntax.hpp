#pragma once

#include <string>

#include "suplogic/derivation.hpp"
#include "suplogic/formula.hpp"
#include "suplogic/model.hpp"

namespace suplogic {

// Formula text syntax, loosest to tightest:
//   <| ~>   non-associative (parenthesize to nest)
//   <->     left associative
//   ->      right associative
//   |       left associative
//   &       left associative
//   ~ O Box Delta   prefix
// plus the call forms Sup(A,..,A; B), SupSet(A,..,A; B,..,B), D(A,..,A; B),
// CO(C; B), CSup(C; A; B) and the constants true/false. Atoms match
// [a-z][a-z0-9_]*. An empty antecedent list is written as nothing before
// the semicolon, e.g. D(; p).

/// Throws SourceError on any lexical or grammar violation.
Formula parse_formula(const std::string& text);

/// Minimal-parentheses rendering; parse_formula(print_formula(f)) == f.
/// Sup/SupSet/D/CO/CSup always render in call form.
std::string print_formula(const Formula& f);

/// Model file: a JSON object
///   { "worlds": ["s", ...],
///     "valuation": {"p": ["s", ...], ...},
///     "ternary": {"s": [["t","u"], ...], ...},   optional
///     "binary": {"s": ["t", ...], ...},          optional
///     "universal": true }                        optional, default false
/// At least one of ternary/binary/universal must be present; universal sets
/// binary to W x W and, when no explicit ternary is given, derives it.
GeneralizedModel parse_model(const std::string& text);

/// Derivation file: one step per line,
///   <index>. <formula>  ;; axiom <NAME>
///   <index>. <formula>  ;; mp <i> <j>
///   <index>. <formula>  ;; gen <i> | nec-o <i> | rekw <i>
/// Blank lines and lines starting with '#' are ignored.
Derivation parse_derivation(const std::string& text);

/// Model rendered in the model file format (2-space indent, sorted keys);
/// parse_model round-trips it.
std::string model_to_json(const GeneralizedModel& m);

/// Whole-file readers; throw std::runtime_error when the file is unreadable.
std::string read_file(const std::string& path);
GeneralizedModel load_model(const std::string& path);
Derivation load_derivation(const std::string& path);

}  // namespace suplogic
