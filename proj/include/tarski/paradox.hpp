#ifndef TARSKI_PARADOX_HPP
#define TARSKI_PARADOX_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tarski/errors.hpp"

namespace tarski {

/// What a semantic assertion claims about some speaker's assertions on
/// some topic. "Majority" is strict: more than half.
enum class ClaimPattern { MajorityFalse, MajorityTrue, AllTrue, AllFalse };

struct SemanticClaim {
  ClaimPattern pattern;
  std::string speaker;
  std::string topic;
};

/// One assertion of a scenario: either a ground statement with a fixed
/// truth value, or a semantic claim about other assertions.
struct Assertion {
  std::string id;
  std::string speaker;
  std::string topic;
  bool semantic = false;
  bool ground_value = false;          // fixed value (ground only)
  SemanticClaim claim{};              // semantic only

  static Assertion ground(std::string id, std::string speaker, std::string topic, bool value) {
    Assertion a;
    a.id = std::move(id);
    a.speaker = std::move(speaker);
    a.topic = std::move(topic);
    a.semantic = false;
    a.ground_value = value;
    return a;
  }

  static Assertion with_claim(std::string id, std::string speaker, std::string topic,
                              SemanticClaim claim) {
    Assertion a;
    a.id = std::move(id);
    a.speaker = std::move(speaker);
    a.topic = std::move(topic);
    a.semantic = true;
    a.claim = std::move(claim);
    return a;
  }
};

/// Assertion network for a Kripke-style empirically grounded paradox.
class Scenario {
 public:
  explicit Scenario(std::vector<Assertion> assertions) : assertions_(std::move(assertions)) {
    std::set<std::string> ids;
    for (const auto& a : assertions_) {
      if (a.id.empty()) throw ScenarioError("assertion with empty id");
      if (!ids.insert(a.id).second) throw ScenarioError("duplicate assertion id '" + a.id + "'");
    }
  }

  const std::vector<Assertion>& assertions() const { return assertions_; }

  /// Ids of all assertions the claim ranges over: same speaker, same
  /// topic, semantic ones included — in particular the claiming assertion
  /// itself when it matches.
  std::vector<std::string> reference_set(const SemanticClaim& claim) const {
    std::vector<std::string> ids;
    for (const auto& a : assertions_) {
      if (a.speaker == claim.speaker && a.topic == claim.topic) ids.push_back(a.id);
    }
    return ids;
  }

 private:
  std::vector<Assertion> assertions_;
};

/// Total assignment of truth values to assertion ids; ground assertions
/// keep their declared values.
using Valuation = std::map<std::string, bool>;

/// Whether a claim comes out true under a valuation of the whole scenario.
inline bool claim_holds(const Scenario& scenario, const SemanticClaim& claim,
                        const Valuation& valuation) {
  std::vector<std::string> references = scenario.reference_set(claim);
  if (references.empty()) {
    throw ScenarioError("claim about " + claim.speaker + "/" + claim.topic +
                        " has an empty reference set");
  }
  int true_count = 0;
  for (const auto& id : references) {
    auto it = valuation.find(id);
    if (it == valuation.end()) throw ScenarioError("valuation missing id '" + id + "'");
    if (it->second) ++true_count;
  }
  int total = static_cast<int>(references.size());
  int false_count = total - true_count;
  switch (claim.pattern) {
    case ClaimPattern::MajorityFalse: return 2 * false_count > total;
    case ClaimPattern::MajorityTrue: return 2 * true_count > total;
    case ClaimPattern::AllTrue: return true_count == total;
    case ClaimPattern::AllFalse: return false_count == total;
  }
  return false;
}

inline constexpr int kSemanticAssertionBudget = 20;

/// Brute-forces the classically consistent valuations: every assignment of
/// truth values to the semantic assertions under which each semantic
/// assertion's value equals the verdict of its own claim. Returned in
/// counting order over the semantic ids sorted lexicographically (false
/// before true, first id most significant).
inline std::vector<Valuation> consistent_valuations(const Scenario& scenario,
                                                    int budget = kSemanticAssertionBudget) {
  std::vector<std::string> semantic_ids;
  Valuation base;
  for (const auto& a : scenario.assertions()) {
    if (a.semantic) {
      semantic_ids.push_back(a.id);
      if (scenario.reference_set(a.claim).empty()) {
        throw ScenarioError("assertion '" + a.id + "' claims about " + a.claim.speaker + "/" +
                            a.claim.topic + ", but nobody asserts anything there");
      }
    } else {
      base[a.id] = a.ground_value;
    }
  }
  if (static_cast<int>(semantic_ids.size()) > budget) {
    throw BudgetError("scenario has " + std::to_string(semantic_ids.size()) +
                      " semantic assertions; the budget is " + std::to_string(budget));
  }
  std::sort(semantic_ids.begin(), semantic_ids.end());

  std::vector<Valuation> consistent;
  unsigned long long combinations = 1ULL << semantic_ids.size();
  for (unsigned long long mask = 0; mask < combinations; ++mask) {
    Valuation v = base;
    for (std::size_t i = 0; i < semantic_ids.size(); ++i) {
      v[semantic_ids[i]] = (mask >> (semantic_ids.size() - 1 - i)) & 1;
    }
    bool self_consistent = true;
    for (const auto& a : scenario.assertions()) {
      if (!a.semantic) continue;
      if (v.at(a.id) != claim_holds(scenario, a.claim, v)) {
        self_consistent = false;
        break;
      }
    }
    if (self_consistent) consistent.push_back(std::move(v));
  }
  return consistent;
}

struct ExplainRow {
  std::string id;
  std::vector<std::string> reference_ids;
  int true_count = 0;
  int false_count = 0;
  bool claim_verdict = false;
  bool asserted_value = false;
  bool matches = false;
};

struct ExplainReport {
  std::vector<ExplainRow> rows;  // one per semantic assertion
  bool consistent = false;
};

/// Per-claim evaluation trace of a candidate valuation.
inline ExplainReport explain(const Scenario& scenario, const Valuation& valuation) {
  ExplainReport report;
  report.consistent = true;
  for (const auto& a : scenario.assertions()) {
    if (!a.semantic) continue;
    ExplainRow row;
    row.id = a.id;
    row.reference_ids = scenario.reference_set(a.claim);
    for (const auto& id : row.reference_ids) {
      auto it = valuation.find(id);
      if (it == valuation.end()) throw ScenarioError("valuation missing id '" + id + "'");
      if (it->second) ++row.true_count; else ++row.false_count;
    }
    row.claim_verdict = claim_holds(scenario, a.claim, valuation);
    row.asserted_value = valuation.at(a.id);
    row.matches = row.claim_verdict == row.asserted_value;
    report.consistent = report.consistent && row.matches;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace tarski

#endif  // TARSKI_PARADOX_HPP
