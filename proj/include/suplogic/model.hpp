#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suplogic/errors.hpp"

namespace suplogic {

/// Set of worlds as a bitmask; models are capped at 64 worlds.
using WorldMask = std::uint64_t;

constexpr int kMaxWorlds = 64;

/// Constraints on the binary relation R.
enum class FrameClass {
  All,
  Serial,
  Reflexive,
  Transitive,
  Euclidean,
  Symmetric,
  S4,         // reflexive + transitive
  S5,         // reflexive + Euclidean
  FourFive,   // transitive + Euclidean
  KD45,       // serial + transitive + Euclidean
  Universal,
};

std::string to_string(FrameClass c);
FrameClass frame_class_from_string(const std::string& name);

/// Kripke model with a ternary relation S (read as a binary relation S_w
/// per evaluation world) and an optional independent binary relation R.
/// Either relation may be absent; operators needing a missing relation are
/// unevaluable on the model. Worlds are kept sorted lexicographically and
/// addressed by index internally; immutable after construction.
class GeneralizedModel {
public:
  using TernaryByName =
      std::map<std::string, std::vector<std::pair<std::string, std::string>>>;
  using BinaryByName = std::map<std::string, std::vector<std::string>>;
  using ValuationByName = std::map<std::string, std::vector<std::string>>;

  GeneralizedModel(std::vector<std::string> worlds,
                   std::optional<TernaryByName> ternary,
                   std::optional<BinaryByName> binary,
                   const ValuationByName& valuation);

  /// Fast path for enumerators and samplers: worlds auto-named w0..w{k-1}.
  /// ternary[w][u] is the mask of v with S_w uv; binary[w] the successor
  /// mask of w; valuation maps atom name to world mask.
  static GeneralizedModel indexed(
      int world_count, std::optional<std::vector<std::vector<WorldMask>>> ternary,
      std::optional<std::vector<WorldMask>> binary,
      std::map<std::string, WorldMask> valuation);

  int world_count() const { return static_cast<int>(worlds_.size()); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& world_name(int w) const { return worlds_[w]; }
  std::optional<int> world_index(const std::string& name) const;
  /// Index of a world that must exist; throws EvalError otherwise.
  int require_world(const std::string& name) const;

  bool has_binary() const { return binary_.has_value(); }
  bool has_ternary() const { return ternary_.has_value(); }
  WorldMask binary_successors(int w) const { return (*binary_)[w]; }
  /// Mask of v with S_w uv.
  WorldMask ternary_row(int w, int u) const { return (*ternary_)[w][u]; }

  const std::map<std::string, WorldMask>& valuation() const {
    return valuation_;
  }
  WorldMask atom_mask(const std::string& atom) const;

  WorldMask full_mask() const {
    int k = world_count();
    return k == kMaxWorlds ? ~WorldMask{0} : (WorldMask{1} << k) - 1;
  }

private:
  GeneralizedModel() = default;

  std::vector<std::string> worlds_;  // sorted, unique
  std::optional<std::vector<std::vector<WorldMask>>> ternary_;
  std::optional<std::vector<WorldMask>> binary_;
  std::map<std::string, WorldMask> valuation_;
};

struct PointedModel {
  PointedModel(GeneralizedModel m, std::string p);

  GeneralizedModel model;
  std::string point;
};

/// Overwrites the ternary relation with S_w = R(w) x R(w); R is kept.
GeneralizedModel derive_ternary(const GeneralizedModel& m);

/// Membership of the binary frame in a frame class.
bool frame_in_class(const GeneralizedModel& m, FrameClass c);

/// Model whose binary relation is W x W, with the ternary relation derived.
GeneralizedModel universal_model(
    const std::vector<std::string>& worlds,
    const GeneralizedModel::ValuationByName& valuation);

/// Restriction of m to the worlds reachable from root through the
/// reflexive-transitive closure of R; the ternary relation is restricted
/// pointwise.
GeneralizedModel generated_submodel(const GeneralizedModel& m,
                                    const std::string& root);

}  // namespace suplogic
