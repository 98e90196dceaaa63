#include "suplogic/model.hpp"

#include <algorithm>

namespace suplogic {

namespace {

WorldMask bit(int i) { return WorldMask{1} << i; }

std::string indexed_world_name(int i, int k) {
  std::string n = std::to_string(i);
  // Pad so lexicographic world order matches index order.
  std::size_t width = std::to_string(k - 1).size();
  while (n.size() < width) n.insert(n.begin(), '0');
  return "w" + n;
}

}  // namespace

std::string to_string(FrameClass c) {
  switch (c) {
    case FrameClass::All: return "all";
    case FrameClass::Serial: return "serial";
    case FrameClass::Reflexive: return "reflexive";
    case FrameClass::Transitive: return "transitive";
    case FrameClass::Euclidean: return "euclidean";
    case FrameClass::Symmetric: return "symmetric";
    case FrameClass::S4: return "s4";
    case FrameClass::S5: return "s5";
    case FrameClass::FourFive: return "45";
    case FrameClass::KD45: return "kd45";
    case FrameClass::Universal: return "universal";
  }
  throw std::logic_error("unreachable frame class");
}

FrameClass frame_class_from_string(const std::string& name) {
  static const std::map<std::string, FrameClass> table = {
      {"all", FrameClass::All},
      {"serial", FrameClass::Serial},
      {"reflexive", FrameClass::Reflexive},
      {"transitive", FrameClass::Transitive},
      {"euclidean", FrameClass::Euclidean},
      {"symmetric", FrameClass::Symmetric},
      {"s4", FrameClass::S4},
      {"s5", FrameClass::S5},
      {"45", FrameClass::FourFive},
      {"kd45", FrameClass::KD45},
      {"universal", FrameClass::Universal},
  };
  auto it = table.find(name);
  if (it == table.end()) throw ModelError("unknown frame class: " + name);
  return it->second;
}

GeneralizedModel::GeneralizedModel(std::vector<std::string> worlds,
                                   std::optional<TernaryByName> ternary,
                                   std::optional<BinaryByName> binary,
                                   const ValuationByName& valuation) {
  if (worlds.empty()) throw ModelError("a model needs at least one world");
  std::sort(worlds.begin(), worlds.end());
  if (std::adjacent_find(worlds.begin(), worlds.end()) != worlds.end())
    throw ModelError("duplicate world name");
  if (worlds.size() > kMaxWorlds)
    throw ModelError("models are capped at 64 worlds");
  worlds_ = std::move(worlds);
  int k = world_count();

  auto index_of = [&](const std::string& name) {
    auto it = std::lower_bound(worlds_.begin(), worlds_.end(), name);
    if (it == worlds_.end() || *it != name)
      throw ModelError("unknown world: " + name);
    return static_cast<int>(it - worlds_.begin());
  };

  if (ternary) {
    ternary_.emplace(k, std::vector<WorldMask>(k, 0));
    for (const auto& [w, pairs] : *ternary) {
      int wi = index_of(w);
      for (const auto& [u, v] : pairs)
        (*ternary_)[wi][index_of(u)] |= bit(index_of(v));
    }
  }
  if (binary) {
    binary_.emplace(k, 0);
    for (const auto& [w, succs] : *binary) {
      int wi = index_of(w);
      for (const auto& u : succs) (*binary_)[wi] |= bit(index_of(u));
    }
  }
  for (const auto& [atom, members] : valuation) {
    WorldMask m = 0;
    for (const auto& w : members) m |= bit(index_of(w));
    valuation_[atom] = m;
  }
}

GeneralizedModel GeneralizedModel::indexed(
    int world_count, std::optional<std::vector<std::vector<WorldMask>>> ternary,
    std::optional<std::vector<WorldMask>> binary,
    std::map<std::string, WorldMask> valuation) {
  if (world_count < 1 || world_count > kMaxWorlds)
    throw ModelError("world count out of range");
  GeneralizedModel m;
  m.worlds_.reserve(world_count);
  for (int i = 0; i < world_count; ++i)
    m.worlds_.push_back(indexed_world_name(i, world_count));
  m.ternary_ = std::move(ternary);
  m.binary_ = std::move(binary);
  m.valuation_ = std::move(valuation);
  return m;
}

std::optional<int> GeneralizedModel::world_index(const std::string& name) const {
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), name);
  if (it == worlds_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - worlds_.begin());
}

int GeneralizedModel::require_world(const std::string& name) const {
  auto i = world_index(name);
  if (!i) throw EvalError("unknown world: " + name);
  return *i;
}

WorldMask GeneralizedModel::atom_mask(const std::string& atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? 0 : it->second;
}

PointedModel::PointedModel(GeneralizedModel m, std::string p)
    : model(std::move(m)), point(std::move(p)) {
  if (!model.world_index(point))
    throw ModelError("point is not a world of the model: " + point);
}

GeneralizedModel derive_ternary(const GeneralizedModel& m) {
  if (!m.has_binary())
    throw ModelError("derive_ternary needs a binary relation");
  int k = m.world_count();
  GeneralizedModel::TernaryByName tern;
  GeneralizedModel::BinaryByName bin;
  for (int w = 0; w < k; ++w) {
    WorldMask succ = m.binary_successors(w);
    auto& succs = bin[m.world_name(w)];
    auto& pairs = tern[m.world_name(w)];
    for (int u = 0; u < k; ++u) {
      if (!(succ & bit(u))) continue;
      succs.push_back(m.world_name(u));
      for (int v = 0; v < k; ++v)
        if (succ & bit(v)) pairs.emplace_back(m.world_name(u), m.world_name(v));
    }
  }
  GeneralizedModel::ValuationByName val;
  for (const auto& [atom, mask] : m.valuation()) {
    auto& members = val[atom];
    for (int w = 0; w < k; ++w)
      if (mask & bit(w)) members.push_back(m.world_name(w));
  }
  return GeneralizedModel(m.worlds(), std::move(tern), std::move(bin), val);
}

bool frame_in_class(const GeneralizedModel& m, FrameClass c) {
  if (!m.has_binary())
    throw ModelError("frame class membership needs a binary relation");
  int k = m.world_count();
  WorldMask full = m.full_mask();
  auto serial = [&] {
    for (int w = 0; w < k; ++w)
      if (m.binary_successors(w) == 0) return false;
    return true;
  };
  auto reflexive = [&] {
    for (int w = 0; w < k; ++w)
      if (!(m.binary_successors(w) & bit(w))) return false;
    return true;
  };
  auto transitive = [&] {
    for (int w = 0; w < k; ++w) {
      WorldMask succ = m.binary_successors(w);
      for (int u = 0; u < k; ++u)
        if ((succ & bit(u)) && (m.binary_successors(u) & ~succ)) return false;
    }
    return true;
  };
  auto euclidean = [&] {
    for (int w = 0; w < k; ++w) {
      WorldMask succ = m.binary_successors(w);
      for (int u = 0; u < k; ++u)
        if ((succ & bit(u)) && (succ & ~m.binary_successors(u))) return false;
    }
    return true;
  };
  auto symmetric = [&] {
    for (int w = 0; w < k; ++w) {
      WorldMask succ = m.binary_successors(w);
      for (int u = 0; u < k; ++u)
        if ((succ & bit(u)) && !(m.binary_successors(u) & bit(w)))
          return false;
    }
    return true;
  };
  switch (c) {
    case FrameClass::All: return true;
    case FrameClass::Serial: return serial();
    case FrameClass::Reflexive: return reflexive();
    case FrameClass::Transitive: return transitive();
    case FrameClass::Euclidean: return euclidean();
    case FrameClass::Symmetric: return symmetric();
    case FrameClass::S4: return reflexive() && transitive();
    case FrameClass::S5: return reflexive() && euclidean();
    case FrameClass::FourFive: return transitive() && euclidean();
    case FrameClass::KD45: return serial() && transitive() && euclidean();
    case FrameClass::Universal: {
      for (int w = 0; w < k; ++w)
        if (m.binary_successors(w) != full) return false;
      return true;
    }
  }
  throw std::logic_error("unreachable frame class");
}

GeneralizedModel universal_model(
    const std::vector<std::string>& worlds,
    const GeneralizedModel::ValuationByName& valuation) {
  if (worlds.empty()) throw ModelError("a model needs at least one world");
  GeneralizedModel::BinaryByName bin;
  GeneralizedModel::TernaryByName tern;
  for (const auto& w : worlds) {
    bin[w] = worlds;
    auto& pairs = tern[w];
    for (const auto& u : worlds)
      for (const auto& v : worlds) pairs.emplace_back(u, v);
  }
  return GeneralizedModel(worlds, std::move(tern), std::move(bin), valuation);
}

GeneralizedModel generated_submodel(const GeneralizedModel& m,
                                    const std::string& root) {
  if (!m.has_binary())
    throw ModelError("generated submodel needs a binary relation");
  int r = m.require_world(root);
  int k = m.world_count();
  WorldMask reached = bit(r);
  for (;;) {
    WorldMask next = reached;
    for (int w = 0; w < k; ++w)
      if (reached & bit(w)) next |= m.binary_successors(w);
    if (next == reached) break;
    reached = next;
  }

  std::vector<std::string> keep;
  for (int w = 0; w < k; ++w)
    if (reached & bit(w)) keep.push_back(m.world_name(w));

  auto kept = [&](int w) { return (reached & bit(w)) != 0; };
  GeneralizedModel::BinaryByName bin;
  GeneralizedModel::TernaryByName tern;
  for (int w = 0; w < k; ++w) {
    if (!kept(w)) continue;
    auto& succs = bin[m.world_name(w)];
    for (int u = 0; u < k; ++u)
      if (kept(u) && (m.binary_successors(w) & bit(u)))
        succs.push_back(m.world_name(u));
    if (m.has_ternary()) {
      auto& pairs = tern[m.world_name(w)];
      for (int u = 0; u < k; ++u) {
        if (!kept(u)) continue;
        for (int v = 0; v < k; ++v)
          if (kept(v) && (m.ternary_row(w, u) & bit(v)))
            pairs.emplace_back(m.world_name(u), m.world_name(v));
      }
    }
  }

  GeneralizedModel::ValuationByName val;
  for (const auto& [atom, mask] : m.valuation()) {
    auto& members = val[atom];
    for (int w = 0; w < k; ++w)
      if (kept(w) && (mask & bit(w))) members.push_back(m.world_name(w));
  }

  std::optional<GeneralizedModel::TernaryByName> tern_opt;
  if (m.has_ternary()) tern_opt = std::move(tern);
  return GeneralizedModel(std::move(keep), std::move(tern_opt), std::move(bin),
                          val);
}

}  // namespace suplogic
