#include "suplogic/semantics.hpp"

#include <unordered_map>

namespace suplogic {

namespace {

WorldMask bit(int i) { return WorldMask{1} << i; }

bool agree(WorldMask ext, int u, int v) {
  return ((ext >> u) & 1) == ((ext >> v) & 1);
}

class Evaluator {
public:
  explicit Evaluator(const GeneralizedModel& m) : m_(m) {}

  WorldMask ext(const Formula& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    WorldMask r = compute(f);
    memo_.emplace(f, r);
    return r;
  }

private:
  WorldMask compute(const Formula& f) {
    int k = m_.world_count();
    WorldMask full = m_.full_mask();
    switch (f.op()) {
      case Op::Atom:
        return m_.atom_mask(f.atom_name());
      case Op::Top:
        return full;
      case Op::Bot:
        return 0;
      case Op::Not:
        return full & ~ext(f.child());
      case Op::And:
        return ext(f.left()) & ext(f.right());
      case Op::Or:
        return ext(f.left()) | ext(f.right());
      case Op::Imp:
        return full & (~ext(f.left()) | ext(f.right()));
      case Op::Iff:
        return full & ~(ext(f.left()) ^ ext(f.right()));
      case Op::Box: {
        WorldMask a = ext(f.child());
        WorldMask out = 0;
        for (int w = 0; w < k; ++w)
          if (!(m_.binary_successors(w) & ~a)) out |= bit(w);
        return out;
      }
      case Op::Delta: {
        WorldMask a = ext(f.child());
        WorldMask out = 0;
        for (int w = 0; w < k; ++w) {
          WorldMask succ = m_.binary_successors(w);
          if (!(succ & ~a) || !(succ & a)) out |= bit(w);
        }
        return out;
      }
      case Op::StrictImp: {
        WorldMask a = ext(f.left());
        WorldMask b = ext(f.right());
        WorldMask out = 0;
        for (int w = 0; w < k; ++w)
          if (!(m_.binary_successors(w) & a & ~b)) out |= bit(w);
        return out;
      }
      case Op::Det: {
        std::vector<WorldMask> as;
        for (const Formula& a : f.ants()) as.push_back(ext(a));
        WorldMask b = ext(f.cons());
        WorldMask out = 0;
        for (int w = 0; w < k; ++w) {
          WorldMask succ = m_.binary_successors(w);
          bool holds = true;
          for (int u = 0; u < k && holds; ++u) {
            if (!(succ & bit(u))) continue;
            for (int v = 0; v < k && holds; ++v) {
              if (!(succ & bit(v))) continue;
              if (ants_agree(as, u, v) && !agree(b, u, v)) holds = false;
            }
          }
          if (holds) out |= bit(w);
        }
        return out;
      }
      case Op::Agree:
        return pair_scan(
            [a = ext(f.child())](int u, int v) { return agree(a, u, v); });
      case Op::Sup: {
        std::vector<WorldMask> as;
        for (const Formula& a : f.ants()) as.push_back(ext(a));
        WorldMask b = ext(f.cons());
        return pair_scan([&](int u, int v) {
          return !ants_agree(as, u, v) || agree(b, u, v);
        });
      }
      case Op::SupSet: {
        std::vector<WorldMask> as, bs;
        for (const Formula& a : f.ants()) as.push_back(ext(a));
        for (const Formula& b : f.cons_list()) bs.push_back(ext(b));
        return pair_scan([&](int u, int v) {
          if (!ants_agree(as, u, v)) return true;
          for (WorldMask b : bs)
            if (!agree(b, u, v)) return false;
          return true;
        });
      }
      case Op::CondAgree: {
        WorldMask c = ext(f.cond());
        WorldMask b = ext(f.body());
        return pair_scan([&](int u, int v) {
          return !((c >> u) & 1) || !((c >> v) & 1) || agree(b, u, v);
        });
      }
      case Op::CondSup: {
        WorldMask c = ext(f.cond());
        WorldMask a = ext(f.cond_ant());
        WorldMask b = ext(f.cond_cons());
        return pair_scan([&](int u, int v) {
          if (!((c >> u) & 1) || !((c >> v) & 1)) return true;
          return !agree(a, u, v) || agree(b, u, v);
        });
      }
    }
    throw std::logic_error("unreachable formula op");
  }

  static bool ants_agree(const std::vector<WorldMask>& as, int u, int v) {
    for (WorldMask a : as)
      if (!agree(a, u, v)) return false;
    return true;
  }

  // Worlds where the predicate holds for every S_w pair.
  template <typename Pred>
  WorldMask pair_scan(Pred&& pred) {
    int k = m_.world_count();
    WorldMask out = 0;
    for (int w = 0; w < k; ++w) {
      bool holds = true;
      for (int u = 0; u < k && holds; ++u) {
        WorldMask row = m_.ternary_row(w, u);
        for (int v = 0; v < k && holds; ++v)
          if ((row & bit(v)) && !pred(u, v)) holds = false;
      }
      out |= holds ? bit(w) : 0;
    }
    return out;
  }

  const GeneralizedModel& m_;
  std::unordered_map<Formula, WorldMask, FormulaHash> memo_;
};

void check_relations(const GeneralizedModel& m, const Formula& f) {
  if (mentions_binary_ops(f) && !m.has_binary())
    throw EvalError("formula needs the binary relation, which the model lacks");
  if (mentions_ternary_ops(f) && !m.has_ternary())
    throw EvalError(
        "formula needs the ternary relation, which the model lacks");
}

}  // namespace

WorldMask extension(const GeneralizedModel& m, const Formula& f) {
  check_relations(m, f);
  return Evaluator(m).ext(f);
}

bool eval(const GeneralizedModel& m, const std::string& world,
          const Formula& f) {
  return eval_at(m, m.require_world(world), f);
}

bool eval_at(const GeneralizedModel& m, int world, const Formula& f) {
  if (world < 0 || world >= m.world_count())
    throw EvalError("world index out of range");
  return (extension(m, f) >> world) & 1;
}

std::vector<std::string> mask_to_worlds(const GeneralizedModel& m,
                                        WorldMask mask) {
  std::vector<std::string> out;
  for (int w = 0; w < m.world_count(); ++w)
    if ((mask >> w) & 1) out.push_back(m.world_name(w));
  return out;
}

bool sup_consequence(const GeneralizedModel& m,
                     const std::vector<Formula>& gamma, const Formula& a) {
  std::vector<WorldMask> gs;
  for (const Formula& g : gamma) gs.push_back(extension(m, g));
  WorldMask am = extension(m, a);
  int k = m.world_count();
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v) {
      bool all_agree = true;
      for (WorldMask g : gs)
        if (((g >> u) & 1) != ((g >> v) & 1)) {
          all_agree = false;
          break;
        }
      if (all_agree && (((am >> u) & 1) != ((am >> v) & 1))) return false;
    }
  return true;
}

bool inf_consequence(const GeneralizedModel& m,
                     const std::vector<Formula>& gamma, const Formula& a) {
  WorldMask holds = m.full_mask();
  for (const Formula& g : gamma) holds &= extension(m, g);
  return !(holds & ~extension(m, a));
}

}  // namespace suplogic
