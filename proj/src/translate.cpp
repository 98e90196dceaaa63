#include "suplogic/translate.hpp"

#include <stdexcept>

namespace suplogic {

namespace {

bool boolean_op(Op op) {
  switch (op) {
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
    case Op::Not:
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
      return true;
    default:
      return false;
  }
}

Formula translate_fragment(const Formula& f, Op modal, const char* fragment,
                           const std::function<Formula(const Formula&)>& hit) {
  if (boolean_op(f.op())) {
    std::vector<Formula> args;
    for (const Formula& a : f.args())
      args.push_back(translate_fragment(a, modal, fragment, hit));
    return with_args(f, args);
  }
  if (f.op() == modal) {
    std::vector<Formula> args;
    for (const Formula& a : f.args())
      args.push_back(translate_fragment(a, modal, fragment, hit));
    return hit(with_args(f, args));
  }
  throw FragmentError(std::string("formula is outside the ") + fragment +
                      " fragment");
}

}  // namespace

Formula b_t(const std::vector<Formula>& ants, const std::set<int>& t) {
  int n = static_cast<int>(ants.size());
  for (int i : t)
    if (i < 1 || i > n)
      throw std::out_of_range("subset index " + std::to_string(i) +
                              " outside 1.." + std::to_string(n));
  std::vector<Formula> conjuncts;
  conjuncts.reserve(ants.size());
  for (int i = 1; i <= n; ++i)
    conjuncts.push_back(t.count(i) ? ants[i - 1] : Formula::neg(ants[i - 1]));
  return Formula::big_and(conjuncts);
}

Formula dn_expansion(const std::vector<Formula>& ants, const Formula& cons) {
  std::size_t n = ants.size();
  std::vector<Formula> conjuncts;
  conjuncts.reserve(std::size_t{1} << n);
  for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << n); ++counter) {
    std::set<int> t;
    for (std::size_t i = 1; i <= n; ++i)
      if ((counter >> (i - 1)) & 1) t.insert(static_cast<int>(i));
    Formula bt = b_t(ants, t);
    conjuncts.push_back(
        Formula::disj(Formula::delta(Formula::imp(bt, cons)),
                      Formula::delta(Formula::imp(bt, Formula::neg(cons)))));
  }
  return Formula::big_and(conjuncts);
}

Formula t_delta(const Formula& f) {
  return translate_fragment(f, Op::Delta, "Delta", [](const Formula& g) {
    return Formula::det({}, g.child());
  });
}

Formula t_d(const Formula& f) {
  return translate_fragment(f, Op::Det, "D", [](const Formula& g) {
    std::vector<Formula> ants(g.ants().begin(), g.ants().end());
    return dn_expansion(ants, g.cons());
  });
}

std::optional<PointedModel> equivalent_on_bounds(const Formula& f,
                                                 const Formula& g,
                                                 const SearchBounds& b,
                                                 FrameClass c) {
  SearchVerdict v = check_validity(Formula::iff(f, g), b, c);
  if (v.kind == SearchVerdict::Kind::Countermodel) return v.witness;
  return std::nullopt;
}

}  // namespace suplogic
