#include "suplogic/formula.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace suplogic {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Op op, std::string name, std::vector<Formula> args,
                      std::size_t split) {
  auto node = std::make_shared<detail::FormulaNode>();
  node->op = op;
  node->name = std::move(name);
  node->args = std::move(args);
  node->split = split;
  std::size_t h = hash_combine(0x51a7f00dULL, static_cast<std::size_t>(op));
  h = hash_combine(h, std::hash<std::string>{}(node->name));
  h = hash_combine(h, split);
  std::size_t sz = 1;
  for (const Formula& a : node->args) {
    h = hash_combine(h, a.hash());
    sz += a.size();
  }
  node->hash = h;
  node->size = sz;
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  return make(Op::Atom, std::move(name), {}, 0);
}
Formula Formula::top() { return make(Op::Top, "", {}, 0); }
Formula Formula::bot() { return make(Op::Bot, "", {}, 0); }
Formula Formula::neg(Formula f) { return make(Op::Not, "", {std::move(f)}, 0); }
Formula Formula::conj(Formula a, Formula b) {
  return make(Op::And, "", {std::move(a), std::move(b)}, 0);
}
Formula Formula::disj(Formula a, Formula b) {
  return make(Op::Or, "", {std::move(a), std::move(b)}, 0);
}
Formula Formula::imp(Formula a, Formula b) {
  return make(Op::Imp, "", {std::move(a), std::move(b)}, 0);
}
Formula Formula::iff(Formula a, Formula b) {
  return make(Op::Iff, "", {std::move(a), std::move(b)}, 0);
}
Formula Formula::box(Formula f) { return make(Op::Box, "", {std::move(f)}, 0); }
Formula Formula::delta(Formula f) {
  return make(Op::Delta, "", {std::move(f)}, 0);
}
Formula Formula::agree(Formula f) {
  return make(Op::Agree, "", {std::move(f)}, 0);
}
Formula Formula::sup(std::vector<Formula> ants, Formula cons) {
  std::size_t n = ants.size();
  ants.push_back(std::move(cons));
  return make(Op::Sup, "", std::move(ants), n);
}
Formula Formula::supset(std::vector<Formula> ants, std::vector<Formula> cons) {
  std::size_t n = ants.size();
  for (Formula& c : cons) ants.push_back(std::move(c));
  return make(Op::SupSet, "", std::move(ants), n);
}
Formula Formula::det(std::vector<Formula> ants, Formula cons) {
  std::size_t n = ants.size();
  ants.push_back(std::move(cons));
  return make(Op::Det, "", std::move(ants), n);
}
Formula Formula::strict_imp(Formula a, Formula b) {
  return make(Op::StrictImp, "", {std::move(a), std::move(b)}, 0);
}
Formula Formula::cond_agree(Formula cond, Formula body) {
  return make(Op::CondAgree, "", {std::move(cond), std::move(body)}, 0);
}
Formula Formula::cond_sup(Formula cond, Formula ant, Formula cons) {
  return make(Op::CondSup, "", {std::move(cond), std::move(ant), std::move(cons)},
              0);
}

Formula Formula::equiv_sup(Formula a, Formula b) {
  return conj(sup({a}, b), sup({b}, a));
}

Formula Formula::big_and(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = conj(fs[i], acc);
  return acc;
}

Formula Formula::big_or(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = disj(fs[i], acc);
  return acc;
}

Op Formula::op() const { return node_->op; }

const std::string& Formula::atom_name() const { return node_->name; }

const Formula& Formula::child() const { return node_->args[0]; }
const Formula& Formula::left() const { return node_->args[0]; }
const Formula& Formula::right() const { return node_->args[1]; }

std::span<const Formula> Formula::ants() const {
  return {node_->args.data(), node_->split};
}
const Formula& Formula::cons() const { return node_->args[node_->split]; }
std::span<const Formula> Formula::cons_list() const {
  return {node_->args.data() + node_->split, node_->args.size() - node_->split};
}
const Formula& Formula::cond() const { return node_->args[0]; }
const Formula& Formula::body() const { return node_->args[1]; }
const Formula& Formula::cond_ant() const { return node_->args[1]; }
const Formula& Formula::cond_cons() const { return node_->args[2]; }

std::span<const Formula> Formula::args() const {
  return {node_->args.data(), node_->args.size()};
}

std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const auto& a = *node_;
  const auto& b = *other.node_;
  if (a.hash != b.hash || a.op != b.op || a.split != b.split ||
      a.name != b.name || a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (a.args[i] != b.args[i]) return false;
  return true;
}

namespace {

void collect_post_order(const Formula& f, std::vector<Formula>& out,
                        std::unordered_set<Formula, FormulaHash>& seen) {
  for (const Formula& a : f.args()) collect_post_order(a, out, seen);
  if (seen.insert(f).second) out.push_back(f);
}

}  // namespace

Formula with_args(const Formula& f, const std::vector<Formula>& args) {
  switch (f.op()) {
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
      return f;
    case Op::Not:
      return Formula::neg(args[0]);
    case Op::And:
      return Formula::conj(args[0], args[1]);
    case Op::Or:
      return Formula::disj(args[0], args[1]);
    case Op::Imp:
      return Formula::imp(args[0], args[1]);
    case Op::Iff:
      return Formula::iff(args[0], args[1]);
    case Op::Box:
      return Formula::box(args[0]);
    case Op::Delta:
      return Formula::delta(args[0]);
    case Op::Agree:
      return Formula::agree(args[0]);
    case Op::Sup: {
      std::vector<Formula> ants(args.begin(), args.end() - 1);
      return Formula::sup(std::move(ants), args.back());
    }
    case Op::SupSet: {
      std::size_t n = f.ants().size();
      std::vector<Formula> ants(args.begin(), args.begin() + n);
      std::vector<Formula> cons(args.begin() + n, args.end());
      return Formula::supset(std::move(ants), std::move(cons));
    }
    case Op::Det: {
      std::vector<Formula> ants(args.begin(), args.end() - 1);
      return Formula::det(std::move(ants), args.back());
    }
    case Op::StrictImp:
      return Formula::strict_imp(args[0], args[1]);
    case Op::CondAgree:
      return Formula::cond_agree(args[0], args[1]);
    case Op::CondSup:
      return Formula::cond_sup(args[0], args[1], args[2]);
  }
  throw std::logic_error("unreachable formula op");
}

namespace {

template <typename Fn>
Formula rewrite_bottom_up(const Formula& f, Fn&& step) {
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const Formula& a : f.args()) args.push_back(rewrite_bottom_up(a, step));
  return step(with_args(f, args));
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  collect_post_order(f, out, seen);
  return out;
}

Formula expand_supset(const Formula& f) {
  return rewrite_bottom_up(f, [](const Formula& g) {
    if (g.op() != Op::SupSet) return g;
    std::vector<Formula> ants(g.ants().begin(), g.ants().end());
    std::vector<Formula> conjuncts;
    for (const Formula& c : g.cons_list())
      conjuncts.push_back(Formula::sup(ants, c));
    return Formula::big_and(conjuncts);
  });
}

Formula agree_as_sup(const Formula& f) {
  return rewrite_bottom_up(f, [](const Formula& g) {
    if (g.op() != Op::Agree) return g;
    return Formula::sup({Formula::top()}, g.child());
  });
}

Formula lift_arity(const Formula& f, std::size_t k) {
  if (f.op() != Op::Sup && f.op() != Op::Det)
    throw std::invalid_argument("lift_arity expects a Sup or D node");
  std::vector<Formula> ants(k, Formula::top());
  ants.insert(ants.end(), f.ants().begin(), f.ants().end());
  return f.op() == Op::Sup ? Formula::sup(std::move(ants), f.cons())
                           : Formula::det(std::move(ants), f.cons());
}

Formula sup_as_cond_agree(const Formula& f) {
  return rewrite_bottom_up(f, [](const Formula& g) {
    if (g.op() == Op::Sup && g.ants().size() == 1) {
      const Formula& a = g.ants()[0];
      return Formula::conj(Formula::cond_agree(a, g.cons()),
                           Formula::cond_agree(Formula::neg(a), g.cons()));
    }
    if (g.op() == Op::CondSup) {
      Formula ac = Formula::conj(g.cond_ant(), g.cond());
      Formula nac = Formula::conj(Formula::neg(g.cond_ant()), g.cond());
      return Formula::conj(Formula::cond_agree(ac, g.cond_cons()),
                           Formula::cond_agree(nac, g.cond_cons()));
    }
    return g;
  });
}

bool mentions_binary_ops(const Formula& f) {
  switch (f.op()) {
    case Op::Box:
    case Op::Delta:
    case Op::Det:
    case Op::StrictImp:
      return true;
    default:
      break;
  }
  for (const Formula& a : f.args())
    if (mentions_binary_ops(a)) return true;
  return false;
}

bool mentions_ternary_ops(const Formula& f) {
  switch (f.op()) {
    case Op::Agree:
    case Op::Sup:
    case Op::SupSet:
    case Op::CondAgree:
    case Op::CondSup:
      return true;
    default:
      break;
  }
  for (const Formula& a : f.args())
    if (mentions_ternary_ops(a)) return true;
  return false;
}

}  // namespace suplogic
