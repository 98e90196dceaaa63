#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace suplogic {

/// Formula constructors. Sup/SupSet/Det carry a list of antecedents; the
/// empty list is legal (Sup with no antecedents is the agreement reading,
/// Det with no antecedents is the non-contingency reading).
enum class Op {
  Atom,
  Top,
  Bot,
  Not,
  And,
  Or,
  Imp,
  Iff,
  Box,        // all R-successors satisfy the body
  Delta,      // all R-successor pairs agree on the body
  Agree,      // all S_w pairs agree on the body
  Sup,        // (A1,..,An) <| B: S_w pairs agreeing on every Ai agree on B
  SupSet,     // (A1,..,An) <| (B1,..,Bm): ... agree on every Bj
  Det,        // D(A1,..,An; B): like Sup but over R-successor pairs
  StrictImp,  // A ~> B: all R-successors satisfying A satisfy B
  CondAgree,  // CO(C; B): S_w pairs inside C agree on B
  CondSup,    // CSup(C; A; B): S_w pairs inside C agreeing on A agree on B
};

class Formula;

namespace detail {
struct FormulaNode;
}

/// Immutable formula tree. Cheap to copy (shared node), structurally
/// compared, safe to share across threads after construction.
class Formula {
public:
  Formula() = default;  // empty handle; only comparisons are valid

  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula box(Formula f);
  static Formula delta(Formula f);
  static Formula agree(Formula f);
  static Formula sup(std::vector<Formula> ants, Formula cons);
  static Formula supset(std::vector<Formula> ants, std::vector<Formula> cons);
  static Formula det(std::vector<Formula> ants, Formula cons);
  static Formula strict_imp(Formula a, Formula b);
  static Formula cond_agree(Formula cond, Formula body);
  static Formula cond_sup(Formula cond, Formula ant, Formula cons);

  /// A <=> B, mutual supervenience: (A <| B) & (B <| A).
  static Formula equiv_sup(Formula a, Formula b);

  /// Right-folded conjunction X1 & (X2 & (... & Xk)); empty list is true.
  static Formula big_and(const std::vector<Formula>& fs);
  /// Right-folded disjunction; empty list is false.
  static Formula big_or(const std::vector<Formula>& fs);

  Op op() const;
  const std::string& atom_name() const;  // Atom only

  /// Sole child of Not/Box/Delta/Agree.
  const Formula& child() const;
  /// Children of And/Or/Imp/Iff/StrictImp.
  const Formula& left() const;
  const Formula& right() const;
  /// Antecedent list of Sup/SupSet/Det (possibly empty).
  std::span<const Formula> ants() const;
  /// Consequent of Sup/Det.
  const Formula& cons() const;
  /// Consequent list of SupSet (possibly empty).
  std::span<const Formula> cons_list() const;
  /// CondAgree/CondSup condition.
  const Formula& cond() const;
  /// CondAgree body.
  const Formula& body() const;
  /// CondSup antecedent / consequent.
  const Formula& cond_ant() const;
  const Formula& cond_cons() const;

  /// All children in storage order (antecedents before consequents).
  std::span<const Formula> args() const;

  /// Node count of the tree, counting repeats.
  std::size_t size() const;

  std::size_t hash() const;
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  explicit operator bool() const { return node_ != nullptr; }

private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node)
      : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, std::vector<Formula> args,
                      std::size_t split);

  std::shared_ptr<const detail::FormulaNode> node_;
};

namespace detail {
struct FormulaNode {
  Op op;
  std::string name;            // Atom only
  std::vector<Formula> args;   // layout per Op, antecedents first
  std::size_t split;           // antecedent count for Sup/SupSet/Det
  std::size_t hash;
  std::size_t size;            // tree node count
};
}  // namespace detail

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// f with its arguments replaced positionally; the shape must match.
Formula with_args(const Formula& f, const std::vector<Formula>& args);

/// All subformulas of f in post-order, duplicates removed, f itself last.
std::vector<Formula> subformulas(const Formula& f);

/// Rewrites every SupSet node into the conjunction of its per-consequent
/// Sup nodes; the empty consequent list becomes true. Idempotent.
Formula expand_supset(const Formula& f);

/// Rewrites every Agree node O B into Sup([true], B). Idempotent.
Formula agree_as_sup(const Formula& f);

/// Prepends k copies of true to the antecedent list of a Sup or Det node.
/// Rejects other node kinds.
Formula lift_arity(const Formula& f, std::size_t k);

/// Rewrites dyadic Sup([A], B) into CO(A; B) & CO(~A; B), and
/// CSup(C; A; B) into CO(A & C; B) & CO(~A & C; B). Sup nodes of any
/// other arity are kept (their subterms are still rewritten).
Formula sup_as_cond_agree(const Formula& f);

/// True if f contains an operator evaluated over the binary relation R.
bool mentions_binary_ops(const Formula& f);
/// True if f contains an operator evaluated over the ternary relation S.
bool mentions_ternary_ops(const Formula& f);

}  // namespace suplogic
