#ifndef TARSKI_FORMULA_HPP
#define TARSKI_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tarski/errors.hpp"
#include "tarski/signature.hpp"

namespace tarski {

/// Object-language variable x_k, k >= 1. Totally ordered by index.
struct Variable {
  int index;
  auto operator<=>(const Variable&) const = default;
};

struct Constant {
  std::string name;
  auto operator<=>(const Constant&) const = default;
};

using Term = std::variant<Variable, Constant>;

/// Largest variable index the toolkit accepts (resource sanity cap).
inline constexpr int kMaxVariableIndex = 1'000'000;

/// Immutable formula of the object language. The stored tree contains only
/// the four primitive constructors (atom, negation, disjunction, universal
/// quantification); the extended connectives desugar on construction.
///
/// Formula is a cheap value type: copies share the underlying nodes.
class Formula {
 public:
  enum class Kind { Atom, Not, Or, Forall };

  Kind kind() const { return node_->kind; }

  // Atom accessors.
  const std::string& predicate() const { return node_->predicate; }
  const std::vector<Term>& args() const { return node_->args; }

  // Not accessor.
  Formula child() const { return Formula(node_->left); }

  // Or accessors.
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  // Forall accessors.
  Variable bound() const { return Variable{node_->var_index}; }
  Formula body() const { return Formula(node_->left); }

  static Formula atom(std::string predicate, std::vector<Term> args) {
    for (const Term& t : args) check_term(t);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->predicate = std::move(predicate);
    n->args = std::move(args);
    return Formula(std::move(n));
  }

  static Formula negation(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->left = std::move(f.node_);
    return Formula(std::move(n));
  }

  static Formula disjunction(Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Or;
    n->left = std::move(a.node_);
    n->right = std::move(b.node_);
    return Formula(std::move(n));
  }

  static Formula universal(Variable v, Formula body) {
    check_index(v.index);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Forall;
    n->var_index = v.index;
    n->left = std::move(body.node_);
    return Formula(std::move(n));
  }

  // Sugar. Desugared immediately; the tree never stores these.
  static Formula conjunction(Formula a, Formula b) {
    return negation(disjunction(negation(std::move(a)), negation(std::move(b))));
  }

  static Formula implication(Formula a, Formula b) {
    return disjunction(negation(std::move(a)), std::move(b));
  }

  static Formula equivalence(Formula a, Formula b) {
    return conjunction(implication(a, b), implication(std::move(b), std::move(a)));
  }

  static Formula existential(Variable v, Formula body) {
    return negation(universal(v, negation(std::move(body))));
  }

  bool operator==(const Formula& other) const { return equal(*node_, *other.node_); }

 private:
  struct Node {
    Kind kind;
    std::string predicate;             // Atom
    std::vector<Term> args;            // Atom
    int var_index = 0;                 // Forall
    std::shared_ptr<const Node> left;  // Not/Forall child, Or left
    std::shared_ptr<const Node> right; // Or right
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static void check_index(int index) {
    if (index < 1) throw Error("variable index must be >= 1, got " + std::to_string(index));
    if (index > kMaxVariableIndex) {
      throw Error("variable index " + std::to_string(index) + " exceeds the cap of " +
                  std::to_string(kMaxVariableIndex));
    }
  }

  static void check_term(const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) check_index(v->index);
  }

  static bool equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Atom:
        return a.predicate == b.predicate && a.args == b.args;
      case Kind::Not:
        return equal(*a.left, *b.left);
      case Kind::Or:
        return equal(*a.left, *b.left) && equal(*a.right, *b.right);
      case Kind::Forall:
        return a.var_index == b.var_index && equal(*a.left, *b.left);
    }
    return false;
  }

  std::shared_ptr<const Node> node_;
};

inline std::string render_term(const Term& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return "x" + std::to_string(v->index);
  return std::get<Constant>(t).name;
}

namespace detail {

// Operand position needs parentheses around a quantifier, since quantifiers
// bind weakest; disjunctions parenthesize themselves.
inline void render_into(const Formula& f, std::string& out, bool operand_position) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      out += f.predicate();
      out += '(';
      const auto& args = f.args();
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) out += ',';
        out += render_term(args[i]);
      }
      out += ')';
      return;
    }
    case Formula::Kind::Not:
      out += '~';
      render_into(f.child(), out, true);
      return;
    case Formula::Kind::Or:
      out += '(';
      render_into(f.left(), out, true);
      out += " | ";
      render_into(f.right(), out, true);
      out += ')';
      return;
    case Formula::Kind::Forall: {
      if (operand_position) out += '(';
      out += "forall x" + std::to_string(f.bound().index) + " . ";
      render_into(f.body(), out, false);
      if (operand_position) out += ')';
      return;
    }
  }
}

}  // namespace detail

/// Canonical text of a formula; parse_formula inverts it exactly.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(f, out, false);
  return out;
}

inline std::set<Variable> free_variables(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::set<Variable> vars;
      for (const Term& t : f.args()) {
        if (const auto* v = std::get_if<Variable>(&t)) vars.insert(*v);
      }
      return vars;
    }
    case Formula::Kind::Not:
      return free_variables(f.child());
    case Formula::Kind::Or: {
      std::set<Variable> vars = free_variables(f.left());
      std::set<Variable> rhs = free_variables(f.right());
      vars.insert(rhs.begin(), rhs.end());
      return vars;
    }
    case Formula::Kind::Forall: {
      std::set<Variable> vars = free_variables(f.body());
      vars.erase(f.bound());
      return vars;
    }
  }
  return {};
}

inline bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

/// AST address: child indices from the root (negation and quantification
/// have one child 0; disjunction has children 0 and 1).
using AstPath = std::vector<int>;

namespace detail {

inline void collect_subformulas(const Formula& f, AstPath& path,
                                std::vector<std::pair<AstPath, Formula>>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      break;
    case Formula::Kind::Not:
      path.push_back(0);
      collect_subformulas(f.child(), path, out);
      path.pop_back();
      break;
    case Formula::Kind::Or:
      path.push_back(0);
      collect_subformulas(f.left(), path, out);
      path.back() = 1;
      collect_subformulas(f.right(), path, out);
      path.pop_back();
      break;
    case Formula::Kind::Forall:
      path.push_back(0);
      collect_subformulas(f.body(), path, out);
      path.pop_back();
      break;
  }
  out.emplace_back(path, f);
}

}  // namespace detail

/// All subformulas of f, itself included, in post-order.
inline std::vector<std::pair<AstPath, Formula>> subformulas(const Formula& f) {
  std::vector<std::pair<AstPath, Formula>> out;
  AstPath path;
  detail::collect_subformulas(f, path, out);
  return out;
}

/// Checks every atom and constant of f against sig; throws on mismatch.
inline void check_formula(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      if (!sig.has_predicate(f.predicate())) {
        throw UnknownNameError("unknown predicate '" + f.predicate() + "'");
      }
      int arity = sig.arity_of(f.predicate());
      if (static_cast<int>(f.args().size()) != arity) {
        throw ArityError(f.predicate(), arity, static_cast<int>(f.args().size()));
      }
      for (const Term& t : f.args()) {
        if (const auto* c = std::get_if<Constant>(&t)) {
          if (!sig.has_constant(c->name)) {
            throw UnknownNameError("unknown constant '" + c->name + "'");
          }
        }
      }
      return;
    }
    case Formula::Kind::Not:
      check_formula(f.child(), sig);
      return;
    case Formula::Kind::Or:
      check_formula(f.left(), sig);
      check_formula(f.right(), sig);
      return;
    case Formula::Kind::Forall:
      check_formula(f.body(), sig);
      return;
  }
}

}  // namespace tarski

#endif  // TARSKI_FORMULA_HPP
