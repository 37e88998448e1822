#ifndef TARSKI_PROP_HPP
#define TARSKI_PROP_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tarski/errors.hpp"

namespace tarski {

/// Propositional formula over named atoms. Connectives are stored as
/// given; evaluation is direct truth-table semantics.
class PropFormula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Iff };

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  PropFormula child() const { return PropFormula(node_->left); }
  PropFormula left() const { return PropFormula(node_->left); }
  PropFormula right() const { return PropFormula(node_->right); }

  static PropFormula atom(std::string name) {
    if (name.empty()) throw Error("propositional atom needs a non-empty name");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->name = std::move(name);
    return PropFormula(std::move(n));
  }

  static PropFormula negation(PropFormula f) { return unary(Kind::Not, std::move(f)); }
  static PropFormula conjunction(PropFormula a, PropFormula b) {
    return binary(Kind::And, std::move(a), std::move(b));
  }
  static PropFormula disjunction(PropFormula a, PropFormula b) {
    return binary(Kind::Or, std::move(a), std::move(b));
  }
  static PropFormula implication(PropFormula a, PropFormula b) {
    return binary(Kind::Implies, std::move(a), std::move(b));
  }
  static PropFormula equivalence(PropFormula a, PropFormula b) {
    return binary(Kind::Iff, std::move(a), std::move(b));
  }

  bool evaluate(const std::map<std::string, bool>& row) const {
    switch (kind()) {
      case Kind::Atom: {
        auto it = row.find(name());
        if (it == row.end()) throw Error("atom '" + name() + "' has no value in the row");
        return it->second;
      }
      case Kind::Not: return !child().evaluate(row);
      case Kind::And: return left().evaluate(row) && right().evaluate(row);
      case Kind::Or: return left().evaluate(row) || right().evaluate(row);
      case Kind::Implies: return !left().evaluate(row) || right().evaluate(row);
      case Kind::Iff: return left().evaluate(row) == right().evaluate(row);
    }
    return false;
  }

  void collect_atoms(std::set<std::string>& out) const {
    switch (kind()) {
      case Kind::Atom: out.insert(name()); return;
      case Kind::Not: child().collect_atoms(out); return;
      default:
        left().collect_atoms(out);
        right().collect_atoms(out);
        return;
    }
  }

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    collect_atoms(out);
    return out;
  }

  std::string to_string() const {
    switch (kind()) {
      case Kind::Atom: return name();
      case Kind::Not: return "~" + child().to_string();
      case Kind::And: return "(" + left().to_string() + " & " + right().to_string() + ")";
      case Kind::Or: return "(" + left().to_string() + " | " + right().to_string() + ")";
      case Kind::Implies: return "(" + left().to_string() + " -> " + right().to_string() + ")";
      case Kind::Iff: return "(" + left().to_string() + " <-> " + right().to_string() + ")";
    }
    return "?";
  }

  bool operator==(const PropFormula& other) const { return equal(*node_, *other.node_); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };

  explicit PropFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static PropFormula unary(Kind kind, PropFormula f) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->left = std::move(f.node_);
    return PropFormula(std::move(n));
  }

  static PropFormula binary(Kind kind, PropFormula a, PropFormula b) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->left = std::move(a.node_);
    n->right = std::move(b.node_);
    return PropFormula(std::move(n));
  }

  static bool equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Atom: return a.name == b.name;
      case Kind::Not: return equal(*a.left, *b.left);
      default: return equal(*a.left, *b.left) && equal(*a.right, *b.right);
    }
  }

  std::shared_ptr<const Node> node_;
};

inline constexpr int kPropAtomBudget = 20;

struct SatResult {
  bool satisfiable = false;
  std::map<std::string, bool> witness;  // a satisfying row, when one exists
};

namespace detail {

inline std::vector<std::string> budgeted_atoms(const std::set<std::string>& atoms,
                                               int budget) {
  if (static_cast<int>(atoms.size()) > budget) {
    throw BudgetError("formula has " + std::to_string(atoms.size()) +
                      " atoms; the budget is " + std::to_string(budget));
  }
  return {atoms.begin(), atoms.end()};
}

// Rows come out in counting order: the first atom (sorted) is the most
// significant bit, false before true.
inline std::map<std::string, bool> row_for(const std::vector<std::string>& atoms,
                                           unsigned long long mask) {
  std::map<std::string, bool> row;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    row[atoms[i]] = (mask >> (atoms.size() - 1 - i)) & 1;
  }
  return row;
}

}  // namespace detail

/// Exhaustive truth-table search; at most 2^20 rows.
inline SatResult prop_satisfiable(const PropFormula& f, int atom_budget = kPropAtomBudget) {
  std::vector<std::string> atoms = detail::budgeted_atoms(f.atoms(), atom_budget);
  unsigned long long rows = 1ULL << atoms.size();
  for (unsigned long long mask = 0; mask < rows; ++mask) {
    std::map<std::string, bool> row = detail::row_for(atoms, mask);
    if (f.evaluate(row)) return {true, std::move(row)};
  }
  return {false, {}};
}

/// Classical entailment: every row satisfying all premises satisfies the
/// conclusion.
inline bool prop_entails(const std::vector<PropFormula>& premises,
                         const PropFormula& conclusion, int atom_budget = kPropAtomBudget) {
  std::set<std::string> all_atoms = conclusion.atoms();
  for (const PropFormula& p : premises) p.collect_atoms(all_atoms);
  std::vector<std::string> atoms = detail::budgeted_atoms(all_atoms, atom_budget);
  unsigned long long rows = 1ULL << atoms.size();
  for (unsigned long long mask = 0; mask < rows; ++mask) {
    std::map<std::string, bool> row = detail::row_for(atoms, mask);
    bool premises_hold = true;
    for (const PropFormula& p : premises) {
      if (!p.evaluate(row)) { premises_hold = false; break; }
    }
    if (premises_hold && !conclusion.evaluate(row)) return false;
  }
  return true;
}

}  // namespace tarski

#endif  // TARSKI_PROP_HPP
