#ifndef TARSKI_METATHEORY_HPP
#define TARSKI_METATHEORY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tarski/errors.hpp"
#include "tarski/formula.hpp"
#include "tarski/godel.hpp"
#include "tarski/model.hpp"
#include "tarski/prop.hpp"

namespace tarski {

// ---------------------------------------------------------------------------
// T-schema instances and finite disjunctive truth definitions
// ---------------------------------------------------------------------------

/// How a sentence is named on the left side of a T-biconditional.
enum class Naming { Quote, GodelNumeral };

/// One instance of the schema: True(<name>) <-> <the sentence itself>.
struct TInstance {
  std::string name;     // quotation or decimal Gödel numeral of the sentence
  Formula content;      // the named sentence
  std::string display;  // the full biconditional text
};

inline TInstance t_instance(const Formula& s, Naming naming,
                            const SymbolTable& table = default_symbol_table()) {
  if (!is_sentence(s)) {
    throw Error("t_instance requires a sentence; '" + render(s) + "' has free variables");
  }
  std::string rendered = render(s);
  std::string name = naming == Naming::Quote
                         ? "'" + rendered + "'"
                         : code_of_formula(table, s).value.str();
  return TInstance{name, s, "True(" + name + ") <-> " + rendered};
}

/// Recovers the named sentence's text from a TInstance's name side: strips
/// the quotation, or decodes the Gödel numeral.
inline std::string named_sentence_of(const TInstance& instance,
                                     const SymbolTable& table = default_symbol_table()) {
  const std::string& name = instance.name;
  if (name.size() >= 2 && name.front() == '\'' && name.back() == '\'') {
    return name.substr(1, name.size() - 2);
  }
  DecodeResult decoded = decode(table, Natural(name));
  if (decoded.status != DecodeStatus::Valid) {
    throw Error("name '" + name + "' does not decode to a string: " + decoded.detail);
  }
  return decoded.text;
}

/// Explicit truth definition for a finite language, one disjunct per
/// sentence: for every x, x is a true sentence iff (x = <name> and
/// <sentence>) or ...
struct FiniteTruthDefinition {
  std::vector<std::pair<std::string, Formula>> pairs;
  std::string display;
};

inline FiniteTruthDefinition finite_truth_definition(
    std::vector<std::pair<std::string, Formula>> pairs) {
  if (pairs.empty()) throw Error("a finite truth definition needs at least one sentence");
  std::set<std::string> names;
  for (const auto& [name, sentence] : pairs) {
    if (!names.insert(name).second) throw Error("duplicate sentence name '" + name + "'");
    if (!is_sentence(sentence)) {
      throw Error("'" + render(sentence) + "' has free variables; only sentences can be named");
    }
  }
  std::string display = "For every x, x is a true sentence if and only if ";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) display += " or ";
    display += "(x = '" + pairs[i].first + "' and " + render(pairs[i].second) + ")";
  }
  return FiniteTruthDefinition{std::move(pairs), std::move(display)};
}

struct AdequacyRow {
  std::string name;
  bool definitional = false;  // verdict the definition assigns to the name
  bool direct = false;        // is_true on the sentence itself
  bool agree = false;
};

struct AdequacyReport {
  std::vector<AdequacyRow> rows;
  bool pass = false;
};

/// Convention-T check against a model: for each named sentence, the verdict
/// the disjunctive definition assigns must equal the direct truth verdict.
/// The definitional side scans every disjunct for a name match, which is
/// the definition's own evaluation route rather than a shortcut to is_true.
inline AdequacyReport verify_material_adequacy(const FiniteTruthDefinition& definition,
                                               const Model& model) {
  AdequacyReport report;
  report.pass = true;
  for (const auto& [name, sentence] : definition.pairs) {
    bool definitional = false;
    for (const auto& [other_name, other_sentence] : definition.pairs) {
      if (name == other_name && is_true(model, other_sentence)) {
        definitional = true;
        break;
      }
    }
    bool direct = is_true(model, sentence);
    bool agree = definitional == direct;
    report.rows.push_back({name, definitional, direct, agree});
    report.pass = report.pass && agree;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hierarchy of languages: stratification of a corpus with truth predicates
// ---------------------------------------------------------------------------

/// One labeled sentence of a corpus. Ground sentences carry no semantic
/// vocabulary; semantic ones apply True(...) to labels of the corpus.
struct CorpusSentence {
  std::string label;
  bool ground = true;
  std::string body;
  std::vector<std::string> references;  // labels inside True(...), in order
};

namespace detail {

/// Labels mentioned as True(<label>) in a body, in textual order,
/// duplicates kept.
inline std::vector<std::string> truth_references(const std::string& body) {
  std::vector<std::string> refs;
  const std::string marker = "True(";
  std::size_t at = 0;
  while ((at = body.find(marker, at)) != std::string::npos) {
    std::size_t start = at + marker.size();
    std::size_t end = body.find(')', start);
    if (end == std::string::npos) {
      throw CorpusError("unclosed True( reference in body '" + body + "'");
    }
    std::string label = body.substr(start, end - start);
    if (label.empty()) throw CorpusError("empty True() reference in body '" + body + "'");
    refs.push_back(std::move(label));
    at = end + 1;
  }
  return refs;
}

}  // namespace detail

/// Corpus of labeled sentences, validated on construction: distinct labels,
/// every True(...) reference resolves, ground sentences are free of
/// semantic vocabulary, semantic ones contain at least one reference.
class LeveledCorpus {
 public:
  explicit LeveledCorpus(std::vector<CorpusSentence> sentences)
      : sentences_(std::move(sentences)) {
    std::set<std::string> labels;
    for (auto& s : sentences_) {
      if (s.label.empty()) throw CorpusError("sentence with empty label");
      if (!labels.insert(s.label).second) {
        throw CorpusError("duplicate label '" + s.label + "'");
      }
      s.references = detail::truth_references(s.body);
      if (s.ground && !s.references.empty()) {
        throw CorpusError("ground sentence '" + s.label + "' uses the truth predicate");
      }
      if (!s.ground && s.references.empty()) {
        throw CorpusError("semantic sentence '" + s.label + "' never applies True(...)");
      }
    }
    for (const auto& s : sentences_) {
      for (const auto& ref : s.references) {
        if (!labels.count(ref)) {
          throw CorpusError("sentence '" + s.label + "' references unknown label '" + ref + "'");
        }
      }
    }
  }

  const std::vector<CorpusSentence>& sentences() const { return sentences_; }

  const CorpusSentence& sentence(const std::string& label) const {
    for (const auto& s : sentences_) {
      if (s.label == label) return s;
    }
    throw CorpusError("unknown label '" + label + "'");
  }

 private:
  std::vector<CorpusSentence> sentences_;
};

struct StratifyResult {
  bool ok = false;
  std::map<std::string, int> levels;  // minimal levels, when ok
  std::vector<std::string> cycle;     // first and last entry coincide, when not ok
};

/// Assigns each sentence its minimal level: ground sentences sit at 0, and
/// a sentence applying True to a label must sit strictly above it. Levels
/// exist exactly when the truth-reference graph is acyclic; a cycle is the
/// corpus's semantic closure and is reported as the violation.
inline StratifyResult stratify(const LeveledCorpus& corpus) {
  enum class Mark { Unvisited, InProgress, Done };
  std::map<std::string, Mark> marks;
  std::map<std::string, int> levels;
  for (const auto& s : corpus.sentences()) marks[s.label] = Mark::Unvisited;

  std::vector<std::string> stack;
  StratifyResult result;

  // Depth-first over references; a back edge closes a cycle.
  auto visit = [&](auto&& self, const std::string& label) -> bool {
    marks[label] = Mark::InProgress;
    stack.push_back(label);
    const CorpusSentence& s = corpus.sentence(label);
    int level = 0;
    for (const auto& ref : s.references) {
      if (marks[ref] == Mark::InProgress) {
        auto from = std::find(stack.begin(), stack.end(), ref);
        result.cycle.assign(from, stack.end());
        result.cycle.push_back(ref);
        return false;
      }
      if (marks[ref] == Mark::Unvisited && !self(self, ref)) return false;
      level = std::max(level, levels[ref] + 1);
    }
    levels[label] = level;
    marks[label] = Mark::Done;
    stack.pop_back();
    return true;
  };

  for (const auto& s : corpus.sentences()) {
    if (marks[s.label] == Mark::Unvisited && !visit(visit, s.label)) {
      result.ok = false;
      return result;
    }
  }
  result.ok = true;
  result.levels = std::move(levels);
  return result;
}

// ---------------------------------------------------------------------------
// The liar derivation, steps (3)-(6)
// ---------------------------------------------------------------------------

struct LiarStep {
  int number = 0;           // 3..6
  std::string description;
  std::string text;         // the step in words
  PropFormula formula;      // its propositional form over the atom V
  bool certified = false;
  std::string justification;
};

struct LiarReport {
  std::vector<LiarStep> steps;
  bool all_certified = false;
};

/// Reproduces the contradiction derived from the liar sentence
/// S = "the sentence S is not true" under an unrestricted T-schema and
/// classical logic. V abbreviates "the sentence S is true". The
/// substitution of the co-referring name happens between steps 3 and 4,
/// outside the propositional core; every step from 4 on is certified by
/// truth-table entailment.
inline LiarReport liar_report() {
  PropFormula v = PropFormula::atom("V");
  PropFormula t_instance_form = PropFormula::equivalence(v, PropFormula::negation(v));
  PropFormula excluded_middle = PropFormula::disjunction(v, PropFormula::negation(v));
  PropFormula contradiction = PropFormula::conjunction(v, PropFormula::negation(v));

  LiarReport report;
  report.steps.push_back(
      {3, "T-schema instance for the liar sentence (assumption)",
       "the sentence 'the sentence S is not true' is true if and only if the sentence S "
       "is not true",
       t_instance_form, true, "assumed; instance of the schema T"});
  report.steps.push_back(
      {4, "substitution of the co-referring name S",
       "the sentence S is true if and only if the sentence S is not true",
       t_instance_form,
       prop_entails({t_instance_form}, t_instance_form),
       "follows from (3); 'the sentence S is not true' and S name the same sentence"});
  report.steps.push_back(
      {5, "law of excluded middle",
       "the sentence S is true or the sentence S is not true", excluded_middle,
       prop_entails({}, excluded_middle), "tautology"});
  report.steps.push_back(
      {6, "contradiction",
       "the sentence S is true and the sentence S is not true", contradiction,
       prop_entails({t_instance_form, excluded_middle}, contradiction),
       "follows from (4) and (5) in both cases"});

  report.all_certified = true;
  for (const LiarStep& step : report.steps) {
    report.all_certified = report.all_certified && step.certified;
  }
  return report;
}

}  // namespace tarski

#endif  // TARSKI_METATHEORY_HPP
