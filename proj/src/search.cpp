#include "suplogic/search.hpp"

#include <map>

#include "suplogic/rng.hpp"
#include "suplogic/semantics.hpp"

namespace suplogic {

namespace {

WorldMask bit(int i) { return WorldMask{1} << i; }

bool wants_binary(RelationKind k) { return k != RelationKind::Ternary; }
bool wants_ternary(RelationKind k) { return k != RelationKind::Binary; }

void validate_bounds(const SearchBounds& b, FrameClass c) {
  if (b.max_worlds < 1) throw BoundsError("max_worlds must be at least 1");
  if (b.max_worlds > kMaxWorlds)
    throw BoundsError("max_worlds exceeds the 64-world cap");
  if (c != FrameClass::All && !wants_binary(b.relation_kind))
    throw BoundsError("frame classes constrain the binary relation; "
                      "use relation kind binary or both");
  if (!b.sample) {
    int cap = wants_ternary(b.relation_kind) ? 2 : 3;
    if (b.max_worlds > cap)
      throw BoundsError("exhaustive enumeration is capped at " +
                        std::to_string(cap) + " worlds for this relation kind");
    if (b.max_worlds * static_cast<int>(b.atoms.size()) > 20)
      throw BoundsError("exhaustive valuation space too large");
  }
}

void check_formula_fits(const Formula& f, const SearchBounds& b) {
  if (mentions_binary_ops(f) && !wants_binary(b.relation_kind))
    throw BoundsError("formula needs the binary relation; "
                      "relation kind is ternary");
  if (mentions_ternary_ops(f) && !wants_ternary(b.relation_kind))
    throw BoundsError("formula needs the ternary relation; "
                      "relation kind is binary");
}

std::map<std::string, WorldMask> unpack_valuation(
    const std::vector<std::string>& atoms, int k, std::uint64_t bits) {
  std::map<std::string, WorldMask> val;
  WorldMask full = k == 64 ? ~WorldMask{0} : (WorldMask{1} << k) - 1;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    val[atoms[i]] = (bits >> (i * k)) & full;
  return val;
}

std::vector<WorldMask> unpack_binary(int k, std::uint64_t bits) {
  std::vector<WorldMask> rows(k);
  WorldMask full = (WorldMask{1} << k) - 1;
  for (int w = 0; w < k; ++w) rows[w] = (bits >> (w * k)) & full;
  return rows;
}

std::vector<std::vector<WorldMask>> unpack_ternary(int k, std::uint64_t bits) {
  std::vector<std::vector<WorldMask>> rel(k, std::vector<WorldMask>(k, 0));
  WorldMask full = (WorldMask{1} << k) - 1;
  for (int w = 0; w < k; ++w)
    for (int u = 0; u < k; ++u)
      rel[w][u] = (bits >> ((w * k + u) * k)) & full;
  return rel;
}

// Class predicate on raw successor rows, mirroring frame_in_class.
bool rows_in_class(const std::vector<WorldMask>& rows, FrameClass c) {
  GeneralizedModel m = GeneralizedModel::indexed(
      static_cast<int>(rows.size()), std::nullopt, rows, {});
  return frame_in_class(m, c);
}

// Closes binary rows into the frame class; closure rules only add edges,
// iterated to a fixpoint. Serial gaps are filled with one seeded edge each.
void close_into_class(std::vector<WorldMask>& rows, FrameClass c, Rng& rng) {
  int k = static_cast<int>(rows.size());
  WorldMask full =
      k == kMaxWorlds ? ~WorldMask{0} : (WorldMask{1} << k) - 1;
  if (c == FrameClass::Universal) {
    for (auto& r : rows) r = full;
    return;
  }
  bool refl = c == FrameClass::Reflexive || c == FrameClass::S4 ||
              c == FrameClass::S5;
  bool trans = c == FrameClass::Transitive || c == FrameClass::S4 ||
               c == FrameClass::FourFive || c == FrameClass::KD45;
  bool eucl = c == FrameClass::Euclidean || c == FrameClass::S5 ||
              c == FrameClass::FourFive || c == FrameClass::KD45;
  bool symm = c == FrameClass::Symmetric;
  bool serial = c == FrameClass::Serial || c == FrameClass::KD45;

  for (;;) {
    bool changed = false;
    auto add = [&](int w, WorldMask m) {
      WorldMask before = rows[w];
      rows[w] |= m;
      if (rows[w] != before) changed = true;
    };
    if (refl)
      for (int w = 0; w < k; ++w) add(w, bit(w));
    if (symm)
      for (int w = 0; w < k; ++w)
        for (int u = 0; u < k; ++u)
          if (rows[w] & bit(u)) add(u, bit(w));
    if (trans)
      for (int w = 0; w < k; ++w)
        for (int u = 0; u < k; ++u)
          if (rows[w] & bit(u)) add(w, rows[u]);
    if (eucl)
      for (int w = 0; w < k; ++w)
        for (int u = 0; u < k; ++u)
          if (rows[w] & bit(u)) add(u, rows[w]);
    if (serial && !changed)
      for (int w = 0; w < k; ++w)
        if (rows[w] == 0) add(w, bit(rng.below(k)));
    if (!changed) break;
  }
}

GeneralizedModel random_model_sized(int k, const std::vector<std::string>& atoms,
                                    RelationKind kind, FrameClass c,
                                    double density, Rng& rng) {
  std::map<std::string, WorldMask> val;
  for (const auto& atom : atoms) {
    WorldMask m = 0;
    for (int w = 0; w < k; ++w)
      if (rng.coin(0.5)) m |= bit(w);
    val[atom] = m;
  }
  std::optional<std::vector<WorldMask>> binary;
  if (wants_binary(kind)) {
    std::vector<WorldMask> rows(k, 0);
    for (int w = 0; w < k; ++w)
      for (int u = 0; u < k; ++u)
        if (rng.coin(density)) rows[w] |= bit(u);
    close_into_class(rows, c, rng);
    binary = std::move(rows);
  }
  std::optional<std::vector<std::vector<WorldMask>>> ternary;
  if (wants_ternary(kind)) {
    std::vector<std::vector<WorldMask>> rel(k, std::vector<WorldMask>(k, 0));
    for (int w = 0; w < k; ++w)
      for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
          if (rng.coin(density)) rel[w][u] |= bit(v);
    ternary = std::move(rel);
  }
  return GeneralizedModel::indexed(k, std::move(ternary), std::move(binary),
                                   std::move(val));
}

// Shared engine: scans worlds of every candidate model for the predicate
// "formula false here" (validity) or "formula true here" (satisfiability).
struct ScanTarget {
  const Formula& f;
  bool look_for_true;
};

std::optional<PointedModel> scan_model(const GeneralizedModel& m,
                                       const ScanTarget& t) {
  WorldMask ext = extension(m, t.f);
  WorldMask hits = t.look_for_true ? ext : (m.full_mask() & ~ext);
  if (!hits) return std::nullopt;
  for (int w = 0; w < m.world_count(); ++w)
    if (hits & bit(w)) return PointedModel(m, m.world_name(w));
  return std::nullopt;
}

std::optional<PointedModel> run_search(const Formula& f, const SearchBounds& b,
                                       FrameClass c, bool look_for_true,
                                       bool& exhausted) {
  ScanTarget target{f, look_for_true};
  std::optional<PointedModel> found;
  if (!b.sample) {
    for_each_model(b, c, [&](const GeneralizedModel& m) {
      found = scan_model(m, target);
      return !found.has_value();
    });
    exhausted = true;
    return found;
  }
  exhausted = false;
  for (int trial = 0; trial < b.sample->count; ++trial) {
    Rng rng(b.sample->seed + static_cast<std::uint64_t>(trial));
    int k = 1 + rng.below(b.max_worlds);
    GeneralizedModel m = random_model_sized(k, b.atoms, b.relation_kind, c,
                                            b.sample->density, rng);
    found = scan_model(m, target);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Ternary: return "ternary";
    case RelationKind::Binary: return "binary";
    case RelationKind::Both: return "both";
  }
  throw std::logic_error("unreachable relation kind");
}

RelationKind relation_kind_from_string(const std::string& name) {
  if (name == "ternary") return RelationKind::Ternary;
  if (name == "binary") return RelationKind::Binary;
  if (name == "both") return RelationKind::Both;
  throw BoundsError("unknown relation kind: " + name);
}

void for_each_model(const SearchBounds& b, FrameClass c,
                    const std::function<bool(const GeneralizedModel&)>& fn) {
  validate_bounds(b, c);
  if (b.sample) throw BoundsError("for_each_model enumerates exhaustively");
  int atom_count = static_cast<int>(b.atoms.size());
  for (int k = 1; k <= b.max_worlds; ++k) {
    std::uint64_t val_count = std::uint64_t{1} << (k * atom_count);

    std::vector<std::vector<WorldMask>> bin_choices;
    if (wants_binary(b.relation_kind)) {
      std::uint64_t n = std::uint64_t{1} << (k * k);
      for (std::uint64_t bits = 0; bits < n; ++bits) {
        auto rows = unpack_binary(k, bits);
        if (rows_in_class(rows, c)) bin_choices.push_back(std::move(rows));
      }
    } else {
      bin_choices.emplace_back();  // placeholder: no binary relation
    }

    std::uint64_t tern_count =
        wants_ternary(b.relation_kind) ? std::uint64_t{1} << (k * k * k) : 1;

    for (const auto& bin : bin_choices) {
      for (std::uint64_t tbits = 0; tbits < tern_count; ++tbits) {
        for (std::uint64_t vbits = 0; vbits < val_count; ++vbits) {
          std::optional<std::vector<WorldMask>> binary;
          if (wants_binary(b.relation_kind)) binary = bin;
          std::optional<std::vector<std::vector<WorldMask>>> ternary;
          if (wants_ternary(b.relation_kind)) ternary = unpack_ternary(k, tbits);
          GeneralizedModel m = GeneralizedModel::indexed(
              k, std::move(ternary), std::move(binary),
              unpack_valuation(b.atoms, k, vbits));
          if (!fn(m)) return;
        }
      }
    }
  }
}

SearchVerdict check_validity(const Formula& f, const SearchBounds& b,
                             FrameClass c) {
  validate_bounds(b, c);
  check_formula_fits(f, b);
  bool exhausted = false;
  auto witness = run_search(f, b, c, /*look_for_true=*/false, exhausted);
  if (witness)
    return {SearchVerdict::Kind::Countermodel, std::move(witness), 0};
  if (exhausted) return {SearchVerdict::Kind::Valid, std::nullopt, 0};
  return {SearchVerdict::Kind::Unknown, std::nullopt, b.sample->count};
}

SearchVerdict check_sat(const Formula& f, const SearchBounds& b, FrameClass c) {
  validate_bounds(b, c);
  check_formula_fits(f, b);
  bool exhausted = false;
  auto witness = run_search(f, b, c, /*look_for_true=*/true, exhausted);
  if (witness)
    return {SearchVerdict::Kind::Satisfiable, std::move(witness), 0};
  if (exhausted) return {SearchVerdict::Kind::Unsatisfiable, std::nullopt, 0};
  return {SearchVerdict::Kind::Unknown, std::nullopt, b.sample->count};
}

GeneralizedModel random_model(const SearchBounds& b, FrameClass c,
                              std::uint64_t seed) {
  if (b.max_worlds < 1 || b.max_worlds > kMaxWorlds)
    throw BoundsError("max_worlds out of range");
  if (c != FrameClass::All && !wants_binary(b.relation_kind))
    throw BoundsError("frame classes constrain the binary relation; "
                      "use relation kind binary or both");
  Rng rng(seed);
  double density = b.sample ? b.sample->density : 0.3;
  return random_model_sized(b.max_worlds, b.atoms, b.relation_kind, c, density,
                            rng);
}

}  // namespace suplogic
