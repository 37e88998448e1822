#ifndef TARSKI_SIGNATURE_HPP
#define TARSKI_SIGNATURE_HPP

#include <cctype>
#include <map>
#include <set>
#include <string>

#include "tarski/errors.hpp"

namespace tarski {

namespace detail {

inline bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// "x" followed by digits is variable syntax, so it cannot name anything else.
inline bool is_variable_shaped(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return true;
}

}  // namespace detail

/// Relational signature of the object language: predicate names with their
/// arities plus individual constants.
class Signature {
 public:
  Signature() = default;

  Signature(std::map<std::string, int> predicates, std::set<std::string> constants)
      : predicates_(std::move(predicates)), constants_(std::move(constants)) {
    for (const auto& [name, arity] : predicates_) {
      check_name(name);
      if (arity < 1) {
        throw SignatureError("predicate '" + name + "' must have arity >= 1, got " +
                             std::to_string(arity));
      }
      if (constants_.count(name)) {
        throw SignatureError("name '" + name + "' declared both as predicate and constant");
      }
    }
    for (const auto& name : constants_) check_name(name);
  }

  const std::map<std::string, int>& predicates() const { return predicates_; }
  const std::set<std::string>& constants() const { return constants_; }

  bool has_predicate(const std::string& name) const { return predicates_.count(name) != 0; }
  bool has_constant(const std::string& name) const { return constants_.count(name) != 0; }

  int arity_of(const std::string& predicate) const {
    auto it = predicates_.find(predicate);
    if (it == predicates_.end()) {
      throw UnknownNameError("unknown predicate '" + predicate + "'");
    }
    return it->second;
  }

  /// The language of the calculus of classes: one binary predicate I
  /// (inclusion), no constants.
  static Signature lcc() { return Signature({{"I", 2}}, {}); }

  /// Signature of the built-in philosophers model.
  static Signature philosophers() {
    return Signature({{"Filosofo", 1}, {"Grego", 1}, {"Mestre", 2}},
                     {"socrates", "platao", "aristoteles", "kant"});
  }

  bool operator==(const Signature&) const = default;

 private:
  static void check_name(const std::string& name) {
    if (!detail::is_identifier(name)) {
      throw SignatureError("'" + name + "' is not a valid identifier");
    }
    if (detail::is_variable_shaped(name)) {
      throw SignatureError("name '" + name + "' is reserved for variables");
    }
  }

  std::map<std::string, int> predicates_;
  std::set<std::string> constants_;
};

}  // namespace tarski

#endif  // TARSKI_SIGNATURE_HPP
