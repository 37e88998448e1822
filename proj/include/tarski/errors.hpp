#ifndef TARSKI_ERRORS_HPP
#define TARSKI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tarski {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown token while scanning formula text. Positions are 0-based offsets.
class LexError : public Error {
 public:
  LexError(std::string message, std::size_t position)
      : Error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Structural parse failure; carries the offset and the token set that
/// would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected = {})
      : Error(std::move(message)), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Atom applied to the wrong number of terms.
class ArityError : public Error {
 public:
  ArityError(const std::string& predicate, int expected, int got)
      : Error("predicate '" + predicate + "' expects " + std::to_string(expected) +
              " argument(s), got " + std::to_string(got)),
        predicate_(predicate), expected_(expected), got_(got) {}
  const std::string& predicate() const { return predicate_; }
  int expected_arity() const { return expected_; }
  int got_arity() const { return got_; }

 private:
  std::string predicate_;
  int expected_;
  int got_;
};

/// Name not declared by the governing signature.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (enumeration size, atom count, ...) was hit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Character outside the symbol table. Position is 1-based.
class EncodeError : public Error {
 public:
  EncodeError(char symbol, std::size_t position)
      : Error("symbol '" + std::string(1, symbol) + "' at position " +
              std::to_string(position) + " is not in the table"),
        symbol_(symbol), position_(position) {}
  char symbol() const { return symbol_; }
  std::size_t position() const { return position_; }

 private:
  char symbol_;
  std::size_t position_;
};

class CorpusError : public Error {
 public:
  using Error::Error;
};

class ScenarioError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tarski

#endif  // TARSKI_ERRORS_HPP
