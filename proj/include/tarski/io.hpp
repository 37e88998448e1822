#ifndef TARSKI_IO_HPP
#define TARSKI_IO_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tarski/errors.hpp"
#include "tarski/formula.hpp"
#include "tarski/godel.hpp"
#include "tarski/metatheory.hpp"
#include "tarski/model.hpp"
#include "tarski/paradox.hpp"
#include "tarski/parse.hpp"
#include "tarski/signature.hpp"

// File formats. All inputs are UTF-8 JSON:
//
//   signature   {"predicates": {"I": 2}, "constants": ["aristoteles"]}
//   model       {"domain": [...],
//                "predicates": {"Mestre": [["Sócrates","Platão"], ...]},
//                "constants": {"aristoteles": "Aristóteles"}}
//   table       {"(": 1, ")": 3, ...}        one-character keys
//   corpus      [{"label": "S", "kind": "semantic", "body": "~True(S)"}, ...]
//   scenario    [{"id": "n1", "speaker": "Nixon", "topic": "Watergate",
//                 "kind": "ground", "value": true},
//                {"id": "15", "speaker": "Jones", "topic": "Watergate",
//                 "kind": "semantic",
//                 "claim": {"pattern": "majority-false",
//                           "speaker": "Nixon", "topic": "Watergate"}}]
//   sentences   [{"name": "(12)", "formula": "forall x1 . Filosofo(x1)"}, ...]

namespace tarski {

namespace detail {

inline nlohmann::json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

template <typename Fn>
auto with_io_context(const std::filesystem::path& path, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("'" + path.string() + "': " + e.what());
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    throw IoError("'" + path.string() + "': " + e.what());
  }
}

}  // namespace detail

inline Signature signature_from_json(const nlohmann::json& j) {
  std::map<std::string, int> predicates;
  std::set<std::string> constants;
  for (const auto& [name, arity] : j.at("predicates").items()) {
    predicates[name] = arity.get<int>();
  }
  if (j.contains("constants")) {
    for (const auto& c : j.at("constants")) constants.insert(c.get<std::string>());
  }
  return Signature(std::move(predicates), std::move(constants));
}

inline Signature load_signature(const std::filesystem::path& path) {
  return detail::with_io_context(path,
                                 [&] { return signature_from_json(detail::parse_json_file(path)); });
}

/// Builds a model from JSON. Without an explicit signature, arities are
/// inferred from the tuples; a predicate with an empty extension then has
/// no arity to infer and is rejected.
inline Model model_from_json(const nlohmann::json& j,
                             const std::optional<Signature>& sig = std::nullopt) {
  std::vector<std::string> domain = j.at("domain").get<std::vector<std::string>>();

  std::map<std::string, std::set<std::vector<std::string>>> predicates;
  if (j.contains("predicates")) {
    for (const auto& [name, tuples] : j.at("predicates").items()) {
      std::set<std::vector<std::string>> extension;
      for (const auto& tuple : tuples) {
        extension.insert(tuple.get<std::vector<std::string>>());
      }
      predicates[name] = std::move(extension);
    }
  }

  std::map<std::string, std::string> constants;
  if (j.contains("constants")) {
    for (const auto& [name, value] : j.at("constants").items()) {
      constants[name] = value.get<std::string>();
    }
  }

  if (sig) return Model(*sig, std::move(domain), std::move(predicates), std::move(constants));

  std::map<std::string, int> arities;
  for (const auto& [name, extension] : predicates) {
    if (extension.empty()) {
      throw IoError("cannot infer the arity of predicate '" + name +
                    "' from an empty extension; provide a signature file");
    }
    arities[name] = static_cast<int>(extension.begin()->size());
  }
  std::set<std::string> constant_names;
  for (const auto& [name, value] : constants) constant_names.insert(name);
  Signature inferred(std::move(arities), std::move(constant_names));
  return Model(std::move(inferred), std::move(domain), std::move(predicates),
               std::move(constants));
}

inline Model load_model(const std::filesystem::path& path,
                        const std::optional<Signature>& sig = std::nullopt) {
  return detail::with_io_context(
      path, [&] { return model_from_json(detail::parse_json_file(path), sig); });
}

inline SymbolTable symbol_table_from_json(const nlohmann::json& j) {
  std::map<char, unsigned> codes;
  for (const auto& [key, code] : j.items()) {
    if (key.size() != 1) {
      throw IoError("table key '" + key + "' is not a single character");
    }
    codes[key[0]] = code.get<unsigned>();
  }
  return SymbolTable(std::move(codes));
}

inline SymbolTable load_symbol_table(const std::filesystem::path& path) {
  return detail::with_io_context(
      path, [&] { return symbol_table_from_json(detail::parse_json_file(path)); });
}

inline LeveledCorpus corpus_from_json(const nlohmann::json& j) {
  std::vector<CorpusSentence> sentences;
  for (const auto& entry : j) {
    CorpusSentence s;
    s.label = entry.at("label").get<std::string>();
    std::string kind = entry.at("kind").get<std::string>();
    if (kind == "ground") {
      s.ground = true;
    } else if (kind == "semantic") {
      s.ground = false;
    } else {
      throw IoError("sentence '" + s.label + "' has unknown kind '" + kind + "'");
    }
    s.body = entry.at("body").get<std::string>();
    sentences.push_back(std::move(s));
  }
  return LeveledCorpus(std::move(sentences));
}

inline LeveledCorpus load_corpus(const std::filesystem::path& path) {
  return detail::with_io_context(path,
                                 [&] { return corpus_from_json(detail::parse_json_file(path)); });
}

inline ClaimPattern claim_pattern_from_string(const std::string& text) {
  if (text == "majority-false") return ClaimPattern::MajorityFalse;
  if (text == "majority-true") return ClaimPattern::MajorityTrue;
  if (text == "all-true") return ClaimPattern::AllTrue;
  if (text == "all-false") return ClaimPattern::AllFalse;
  throw IoError("unknown claim pattern '" + text + "'");
}

inline std::string to_string(ClaimPattern pattern) {
  switch (pattern) {
    case ClaimPattern::MajorityFalse: return "majority-false";
    case ClaimPattern::MajorityTrue: return "majority-true";
    case ClaimPattern::AllTrue: return "all-true";
    case ClaimPattern::AllFalse: return "all-false";
  }
  return "?";
}

inline Scenario scenario_from_json(const nlohmann::json& j) {
  std::vector<Assertion> assertions;
  for (const auto& entry : j) {
    std::string id = entry.at("id").get<std::string>();
    std::string speaker = entry.at("speaker").get<std::string>();
    std::string topic = entry.at("topic").get<std::string>();
    std::string kind = entry.at("kind").get<std::string>();
    if (kind == "ground") {
      assertions.push_back(
          Assertion::ground(id, speaker, topic, entry.at("value").get<bool>()));
    } else if (kind == "semantic") {
      const auto& claim = entry.at("claim");
      assertions.push_back(Assertion::with_claim(
          id, speaker, topic,
          SemanticClaim{claim_pattern_from_string(claim.at("pattern").get<std::string>()),
                        claim.at("speaker").get<std::string>(),
                        claim.at("topic").get<std::string>()}));
    } else {
      throw IoError("assertion '" + id + "' has unknown kind '" + kind + "'");
    }
  }
  return Scenario(std::move(assertions));
}

inline Scenario load_scenario(const std::filesystem::path& path) {
  return detail::with_io_context(
      path, [&] { return scenario_from_json(detail::parse_json_file(path)); });
}

/// Named sentences for T-schema work, parsed against a signature.
inline std::vector<std::pair<std::string, Formula>> named_sentences_from_json(
    const nlohmann::json& j, const Signature& sig) {
  std::vector<std::pair<std::string, Formula>> pairs;
  for (const auto& entry : j) {
    pairs.emplace_back(entry.at("name").get<std::string>(),
                       parse_formula(entry.at("formula").get<std::string>(), sig));
  }
  return pairs;
}

inline std::vector<std::pair<std::string, Formula>> load_named_sentences(
    const std::filesystem::path& path, const Signature& sig) {
  return detail::with_io_context(
      path, [&] { return named_sentences_from_json(detail::parse_json_file(path), sig); });
}

}  // namespace tarski

#endif  // TARSKI_IO_HPP
