#ifndef TARSKI_MODEL_HPP
#define TARSKI_MODEL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tarski/errors.hpp"
#include "tarski/formula.hpp"
#include "tarski/signature.hpp"

namespace tarski {

/// Finite surrogate for an infinite sequence of objects: a total valuation
/// of variable indices, stored as finitely many explicit bindings plus a
/// default element for every other index.
class Assignment {
 public:
  explicit Assignment(std::string default_element, std::map<int, std::string> bindings = {})
      : default_(std::move(default_element)), bindings_(std::move(bindings)) {
    for (const auto& [index, value] : bindings_) {
      if (index < 1) {
        throw ModelError("assignment binds index " + std::to_string(index) + ", must be >= 1");
      }
    }
  }

  /// Value of x_k; defined for every k >= 1.
  const std::string& lookup(int k) const {
    if (k < 1) throw ModelError("variable index must be >= 1, got " + std::to_string(k));
    auto it = bindings_.find(k);
    return it != bindings_.end() ? it->second : default_;
  }

  /// The sequence that differs from this one at most at place k.
  Assignment rebound(int k, std::string value) const {
    Assignment copy = *this;
    copy.bindings_[k] = std::move(value);
    return copy;
  }

  const std::string& default_element() const { return default_; }
  const std::map<int, std::string>& bindings() const { return bindings_; }

 private:
  std::string default_;
  std::map<int, std::string> bindings_;
};

/// Finite first-order structure: an ordered domain of distinct element
/// names plus interpretations for every predicate and constant of the
/// signature.
class Model {
 public:
  Model(Signature sig, std::vector<std::string> domain,
        std::map<std::string, std::set<std::vector<std::string>>> predicates,
        std::map<std::string, std::string> constants)
      : sig_(std::move(sig)),
        domain_(std::move(domain)),
        predicates_(std::move(predicates)),
        constants_(std::move(constants)) {
    if (domain_.empty()) throw ModelError("domain must be non-empty");
    domain_index_ = std::set<std::string>(domain_.begin(), domain_.end());
    if (domain_index_.size() != domain_.size()) {
      throw ModelError("domain elements must be distinct");
    }
    for (const auto& [name, tuples] : predicates_) {
      if (!sig_.has_predicate(name)) {
        throw ModelError("interpretation given for undeclared predicate '" + name + "'");
      }
      int arity = sig_.arity_of(name);
      for (const auto& tuple : tuples) {
        if (static_cast<int>(tuple.size()) != arity) {
          throw ModelError("tuple of length " + std::to_string(tuple.size()) +
                           " in interpretation of '" + name + "' (arity " +
                           std::to_string(arity) + ")");
        }
        for (const auto& component : tuple) {
          if (!domain_index_.count(component)) {
            throw ModelError("tuple component '" + component + "' of predicate '" + name +
                             "' is not in the domain");
          }
        }
      }
    }
    // A predicate missing from the map gets the empty extension.
    for (const auto& [name, arity] : sig_.predicates()) {
      predicates_.try_emplace(name);
    }
    for (const auto& name : sig_.constants()) {
      auto it = constants_.find(name);
      if (it == constants_.end()) {
        throw ModelError("constant '" + name + "' has no interpretation");
      }
      if (!domain_index_.count(it->second)) {
        throw ModelError("constant '" + name + "' denotes '" + it->second +
                         "', which is not in the domain");
      }
    }
    for (const auto& [name, value] : constants_) {
      if (!sig_.has_constant(name)) {
        throw ModelError("interpretation given for undeclared constant '" + name + "'");
      }
    }
  }

  const Signature& signature() const { return sig_; }
  const std::vector<std::string>& domain() const { return domain_; }

  bool in_domain(const std::string& element) const { return domain_index_.count(element) != 0; }

  bool holds(const std::string& predicate, const std::vector<std::string>& tuple) const {
    auto it = predicates_.find(predicate);
    if (it == predicates_.end()) {
      throw ModelError("unknown predicate '" + predicate + "'");
    }
    return it->second.count(tuple) != 0;
  }

  const std::string& constant_value(const std::string& name) const {
    auto it = constants_.find(name);
    if (it == constants_.end()) {
      throw ModelError("unknown constant '" + name + "'");
    }
    return it->second;
  }

  const std::set<std::vector<std::string>>& extension(const std::string& predicate) const {
    auto it = predicates_.find(predicate);
    if (it == predicates_.end()) {
      throw ModelError("unknown predicate '" + predicate + "'");
    }
    return it->second;
  }

  /// Checks an assignment's default and bound values against the domain.
  void check_assignment(const Assignment& a) const {
    if (!in_domain(a.default_element())) {
      throw ModelError("assignment default '" + a.default_element() + "' is not in the domain");
    }
    for (const auto& [index, value] : a.bindings()) {
      if (!in_domain(value)) {
        throw ModelError("assignment binds x" + std::to_string(index) + " to '" + value +
                         "', which is not in the domain");
      }
    }
  }

  /// The four-philosopher model: domain {Sócrates, Platão, Aristóteles,
  /// Kant}, Filosofo all four, Grego the three Greeks, Mestre the two
  /// teacher-pupil pairs, plus a constant for each individual.
  static Model philosophers() {
    return Model(Signature::philosophers(),
                 {"Sócrates", "Platão", "Aristóteles", "Kant"},
                 {{"Filosofo", {{"Sócrates"}, {"Platão"}, {"Aristóteles"}, {"Kant"}}},
                  {"Grego", {{"Sócrates"}, {"Platão"}, {"Aristóteles"}}},
                  {"Mestre", {{"Sócrates", "Platão"}, {"Platão", "Aristóteles"}}}},
                 {{"socrates", "Sócrates"},
                  {"platao", "Platão"},
                  {"aristoteles", "Aristóteles"},
                  {"kant", "Kant"}});
  }

 private:
  Signature sig_;
  std::vector<std::string> domain_;
  std::set<std::string> domain_index_;
  std::map<std::string, std::set<std::vector<std::string>>> predicates_;
  std::map<std::string, std::string> constants_;
};

namespace detail {

inline const std::string& term_value(const Model& m, const Assignment& a, const Term& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return a.lookup(v->index);
  return m.constant_value(std::get<Constant>(t).name);
}

inline bool satisfies_impl(const Model& m, const Assignment& a, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<std::string> tuple;
      tuple.reserve(f.args().size());
      for (const Term& t : f.args()) tuple.push_back(term_value(m, a, t));
      return m.holds(f.predicate(), tuple);
    }
    case Formula::Kind::Not:
      return !satisfies_impl(m, a, f.child());
    case Formula::Kind::Or:
      return satisfies_impl(m, a, f.left()) || satisfies_impl(m, a, f.right());
    case Formula::Kind::Forall: {
      // Every sequence differing at most at place k must satisfy the body.
      int k = f.bound().index;
      for (const std::string& element : m.domain()) {
        if (!satisfies_impl(m, a.rebound(k, element), f.body())) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// The recursive satisfaction relation between sequences and formulas.
inline bool satisfies(const Model& m, const Assignment& a, const Formula& f) {
  check_formula(f, m.signature());
  m.check_assignment(a);
  return detail::satisfies_impl(m, a, f);
}

/// Boolean verdict plus, when an outermost universal quantifier failed, the
/// element refuting it.
struct TruthVerdict {
  bool value = false;
  std::optional<std::pair<Variable, std::string>> counterexample;
};

/// Like satisfies, but when the formula is a failing universal
/// quantification reports the first refuting element.
inline TruthVerdict evaluate(const Model& m, const Assignment& a, const Formula& f) {
  check_formula(f, m.signature());
  m.check_assignment(a);
  TruthVerdict verdict;
  if (f.kind() == Formula::Kind::Forall) {
    int k = f.bound().index;
    for (const std::string& element : m.domain()) {
      if (!detail::satisfies_impl(m, a.rebound(k, element), f.body())) {
        verdict.value = false;
        verdict.counterexample = {f.bound(), element};
        return verdict;
      }
    }
    verdict.value = true;
    return verdict;
  }
  verdict.value = detail::satisfies_impl(m, a, f);
  return verdict;
}

/// Truth of a sentence: satisfaction by every sequence. Sentences are
/// satisfied by all sequences or by none, so one probe decides (the
/// dichotomy is established independently by the test suite).
inline bool is_true(const Model& m, const Formula& s) {
  if (!is_sentence(s)) {
    throw Error("is_true requires a sentence; '" + render(s) + "' has free variables");
  }
  return satisfies(m, Assignment(m.domain().front()), s);
}

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// All bindings of the free variables of f (sorted by index) whose
/// extension by any default satisfies f. Enumeration is an odometer over
/// the domain order with the last variable varying fastest.
inline std::vector<std::map<int, std::string>> satisfying_assignments(
    const Model& m, const Formula& f, std::size_t cap = kDefaultEnumerationCap) {
  check_formula(f, m.signature());
  std::set<Variable> free = free_variables(f);
  std::vector<int> indices;
  for (const Variable& v : free) indices.push_back(v.index);

  std::size_t candidates = 1;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (candidates > cap / m.domain().size()) {
      throw BudgetError("enumeration of " + std::to_string(indices.size()) +
                        " free variables over " + std::to_string(m.domain().size()) +
                        " elements exceeds the cap of " + std::to_string(cap));
    }
    candidates *= m.domain().size();
  }

  std::vector<std::map<int, std::string>> result;
  std::vector<std::size_t> odometer(indices.size(), 0);
  const std::string& default_element = m.domain().front();
  for (std::size_t count = 0; count < candidates; ++count) {
    std::map<int, std::string> bindings;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      bindings[indices[i]] = m.domain()[odometer[i]];
    }
    if (detail::satisfies_impl(m, Assignment(default_element, bindings), f)) {
      result.push_back(std::move(bindings));
    }
    for (std::size_t i = indices.size(); i-- > 0;) {
      if (++odometer[i] < m.domain().size()) break;
      odometer[i] = 0;
    }
  }
  return result;
}

namespace detail {

// Hereditarily finite sets, canonically rendered: "{}", "{{}}",
// "{{},{{}}}", elements ordered by (length, lexicographic) of their own
// canonical text.
struct HfSet {
  std::vector<std::string> elements;  // canonical texts, sorted
  std::string text;
};

inline bool hf_order(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline std::string hf_render(const std::vector<std::string>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ',';
    out += elements[i];
  }
  out += '}';
  return out;
}

}  // namespace detail

/// The intended interpretation of LCC at desk scale: domain = hereditarily
/// finite sets of rank <= rank, I = the inclusion relation.
inline Model build_class_model(int rank) {
  if (rank < 0 || rank > 3) {
    throw ModelError("class model rank must be between 0 and 3, got " + std::to_string(rank));
  }

  std::vector<detail::HfSet> universe;
  universe.push_back({{}, "{}"});
  for (int level = 1; level <= rank; ++level) {
    // Sets of rank <= level are exactly the subsets of the previous universe.
    std::vector<detail::HfSet> next;
    std::size_t subsets = std::size_t{1} << universe.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::string> elements;
      for (std::size_t bit = 0; bit < universe.size(); ++bit) {
        if (mask & (std::size_t{1} << bit)) elements.push_back(universe[bit].text);
      }
      std::sort(elements.begin(), elements.end(), detail::hf_order);
      next.push_back({elements, detail::hf_render(elements)});
    }
    universe = std::move(next);
  }
  std::sort(universe.begin(), universe.end(),
            [](const detail::HfSet& a, const detail::HfSet& b) {
              return detail::hf_order(a.text, b.text);
            });

  std::vector<std::string> domain;
  for (const auto& s : universe) domain.push_back(s.text);

  std::set<std::vector<std::string>> inclusion;
  for (const auto& s : universe) {
    for (const auto& t : universe) {
      bool subset = std::all_of(s.elements.begin(), s.elements.end(), [&](const std::string& e) {
        return std::find(t.elements.begin(), t.elements.end(), e) != t.elements.end();
      });
      if (subset) inclusion.insert({s.text, t.text});
    }
  }
  return Model(Signature::lcc(), std::move(domain), {{"I", std::move(inclusion)}}, {});
}

}  // namespace tarski

#endif  // TARSKI_MODEL_HPP
