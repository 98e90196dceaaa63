#include "suplogic/bisim.hpp"

#include <algorithm>

#include "suplogic/rng.hpp"
#include "suplogic/semantics.hpp"

namespace suplogic {

namespace {

WorldMask bit(int i) { return WorldMask{1} << i; }

struct PairSet {
  // rel[lw] = mask of right worlds related to left world lw
  std::vector<WorldMask> rel;

  bool has(int lw, int rw) const { return (rel[lw] >> rw) & 1; }
};

// Atom condition over the union of both models' atom alphabets.
bool atoms_match(const GeneralizedModel& l, const GeneralizedModel& r, int lw,
                 int rw) {
  for (const auto& [atom, mask] : l.valuation())
    if (((mask >> lw) & 1) != ((r.atom_mask(atom) >> rw) & 1)) return false;
  for (const auto& [atom, mask] : r.valuation())
    if (((mask >> rw) & 1) != ((l.atom_mask(atom) >> lw) & 1)) return false;
  return true;
}

// One direction of the triple-matching condition: every successor triple
// (u,v,x) of w must be answered by some triple of w' whose elements cover
// u, v and x through the relation.
bool zig_holds(const GeneralizedModel& l, const GeneralizedModel& r,
               const PairSet& rel, bool left_to_right, int w, int wp,
               std::array<int, 3>* failing) {
  const GeneralizedModel& a = left_to_right ? l : r;
  const GeneralizedModel& b = left_to_right ? r : l;
  int ka = a.world_count(), kb = b.world_count();
  auto related = [&](int aw, int bw) {
    return left_to_right ? rel.has(aw, bw) : rel.has(bw, aw);
  };
  for (int u = 0; u < ka; ++u) {
    WorldMask row = a.ternary_row(w, u);
    if (!row) continue;
    for (int v = 0; v < ka; ++v) {
      if (!(row & bit(v))) continue;
      for (int x = 0; x < ka; ++x) {
        if (!(row & bit(x))) continue;
        bool answered = false;
        for (int up = 0; up < kb && !answered; ++up) {
          WorldMask rowp = b.ternary_row(wp, up);
          if (!rowp) continue;
          for (int vp = 0; vp < kb && !answered; ++vp) {
            if (!(rowp & bit(vp))) continue;
            for (int xp = 0; xp < kb && !answered; ++xp) {
              if (!(rowp & bit(xp))) continue;
              auto hits = [&](int aw) {
                return related(aw, up) || related(aw, vp) || related(aw, xp);
              };
              if (hits(u) && hits(v) && hits(x)) answered = true;
            }
          }
        }
        if (!answered) {
          if (failing) *failing = {u, v, x};
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<BisimViolation> check_pairs(const GeneralizedModel& l,
                                          const GeneralizedModel& r,
                                          const PairSet& rel) {
  int kl = l.world_count(), kr = r.world_count();
  for (int lw = 0; lw < kl; ++lw) {
    for (int rw = 0; rw < kr; ++rw) {
      if (!rel.has(lw, rw)) continue;
      std::pair<std::string, std::string> names{l.world_name(lw),
                                                r.world_name(rw)};
      if (!atoms_match(l, r, lw, rw))
        return BisimViolation{BisimViolation::Condition::Atom, names,
                              std::nullopt};
      std::array<int, 3> t{};
      if (!zig_holds(l, r, rel, true, lw, rw, &t))
        return BisimViolation{
            BisimViolation::Condition::OZig, names,
            std::array<std::string, 3>{l.world_name(t[0]), l.world_name(t[1]),
                                       l.world_name(t[2])}};
      if (!zig_holds(l, r, rel, false, rw, lw, &t))
        return BisimViolation{
            BisimViolation::Condition::OZag, names,
            std::array<std::string, 3>{r.world_name(t[0]), r.world_name(t[1]),
                                       r.world_name(t[2])}};
    }
  }
  return std::nullopt;
}

void require_ternary(const GeneralizedModel& m) {
  if (!m.has_ternary())
    throw ModelError("bisimulation checking needs ternary relations");
}

}  // namespace

std::string to_string(const BisimViolation& v) {
  switch (v.condition) {
    case BisimViolation::Condition::Nonempty:
      return "the relation is empty";
    case BisimViolation::Condition::Atom:
      return "(" + v.pair.first + ", " + v.pair.second +
             ") violates the atom condition";
    case BisimViolation::Condition::OZig:
    case BisimViolation::Condition::OZag: {
      const char* cond =
          v.condition == BisimViolation::Condition::OZig ? "zig" : "zag";
      const auto& t = *v.triple;
      return "(" + v.pair.first + ", " + v.pair.second + ") violates the " +
             cond + " condition at triple (" + t[0] + ", " + t[1] + ", " +
             t[2] + ")";
    }
  }
  throw std::logic_error("unreachable violation condition");
}

std::optional<BisimViolation> check_obisim(const BisimRelation& r) {
  require_ternary(r.left);
  require_ternary(r.right);
  if (r.pairs.empty())
    return BisimViolation{BisimViolation::Condition::Nonempty, {}, std::nullopt};
  PairSet rel{std::vector<WorldMask>(r.left.world_count(), 0)};
  for (const auto& [lname, rname] : r.pairs) {
    auto li = r.left.world_index(lname);
    auto ri = r.right.world_index(rname);
    if (!li) throw ModelError("unknown world in relation: " + lname);
    if (!ri) throw ModelError("unknown world in relation: " + rname);
    rel.rel[*li] |= bit(*ri);
  }
  return check_pairs(r.left, r.right, rel);
}

BisimRelation largest_obisim(const GeneralizedModel& left,
                             const GeneralizedModel& right) {
  require_ternary(left);
  require_ternary(right);
  int kl = left.world_count(), kr = right.world_count();
  PairSet rel{std::vector<WorldMask>(kl, 0)};
  for (int lw = 0; lw < kl; ++lw)
    for (int rw = 0; rw < kr; ++rw)
      if (atoms_match(left, right, lw, rw)) rel.rel[lw] |= bit(rw);

  for (;;) {
    std::vector<std::pair<int, int>> deleted;
    for (int lw = 0; lw < kl; ++lw)
      for (int rw = 0; rw < kr; ++rw) {
        if (!rel.has(lw, rw)) continue;
        if (!zig_holds(left, right, rel, true, lw, rw, nullptr) ||
            !zig_holds(left, right, rel, false, rw, lw, nullptr))
          deleted.emplace_back(lw, rw);
      }
    if (deleted.empty()) break;
    for (auto [lw, rw] : deleted) rel.rel[lw] &= ~bit(rw);
  }

  BisimRelation result{left, right, {}};
  for (int lw = 0; lw < kl; ++lw)
    for (int rw = 0; rw < kr; ++rw)
      if (rel.has(lw, rw))
        result.pairs.emplace_back(left.world_name(lw), right.world_name(rw));
  return result;
}

bool obisimilar(const PointedModel& a, const PointedModel& b) {
  BisimRelation largest = largest_obisim(a.model, b.model);
  return std::find(largest.pairs.begin(), largest.pairs.end(),
                   std::make_pair(a.point, b.point)) != largest.pairs.end();
}

Formula random_probe_formula(const ProbeOptions& opts, std::uint64_t sample) {
  Rng rng(opts.seed + sample);
  // gen(modal, size): modal bounds O/Sup nesting, size bounds node count.
  auto gen = [&](auto&& self, int modal, int size) -> Formula {
    auto leaf = [&] {
      return Formula::atom(opts.atoms[rng.below(
          static_cast<int>(opts.atoms.size()))]);
    };
    if (size <= 1 || opts.atoms.empty()) return leaf();
    bool modal_ok = modal > 0 && size >= 2;
    int choices = 3 + (modal_ok ? 1 : 0) +
                  (modal_ok && opts.language == ProbeLanguage::AgreementSup
                       ? 1
                       : 0);
    switch (rng.below(choices)) {
      case 0:
        return leaf();
      case 1:
        return Formula::neg(self(self, modal, size - 1));
      case 2: {
        int lsize = 1 + rng.below(std::max(1, size - 2));
        return Formula::conj(self(self, modal, lsize),
                             self(self, modal, size - 1 - lsize));
      }
      case 3:
        return Formula::agree(self(self, modal - 1, size - 1));
      default: {
        int lsize = 1 + rng.below(std::max(1, size - 2));
        return Formula::sup({self(self, modal - 1, lsize)},
                            self(self, modal - 1, size - 1 - lsize));
      }
    }
  };
  return gen(gen, opts.modal_depth, std::max(1, opts.max_size));
}

std::optional<Formula> probe_invariance(const PointedModel& a,
                                        const PointedModel& b,
                                        const ProbeOptions& opts) {
  for (int i = 0; i < opts.samples; ++i) {
    Formula f = random_probe_formula(opts, static_cast<std::uint64_t>(i));
    if (eval(a.model, a.point, f) != eval(b.model, b.point, f)) return f;
  }
  return std::nullopt;
}

}  // namespace suplogic
