#ifndef TARSKI_GODEL_HPP
#define TARSKI_GODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tarski/errors.hpp"
#include "tarski/formula.hpp"
#include "tarski/parse.hpp"
#include "tarski/signature.hpp"

namespace tarski {

using Natural = boost::multiprecision::cpp_int;

namespace detail {

/// p_j, 1-based: p_1 = 2, p_2 = 3, ... Extends a shared cache by trial
/// division; indices stay small (bounded by the length of coded strings).
inline const std::vector<unsigned>& primes_up_to_index(std::size_t j) {
  static thread_local std::vector<unsigned> cache = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  while (cache.size() < j) {
    unsigned candidate = cache.back() + 2;
    for (;; candidate += 2) {
      bool prime = true;
      for (unsigned p : cache) {
        if (p * p > candidate) break;
        if (candidate % p == 0) { prime = false; break; }
      }
      if (prime) break;
    }
    cache.push_back(candidate);
  }
  return cache;
}

inline unsigned nth_prime(std::size_t j) { return primes_up_to_index(j)[j - 1]; }

}  // namespace detail

/// Assignment of positive integer codes to the symbols of a finite
/// alphabet. Always contains the six fixed assignments
/// '('->1, ')'->3, '~'->7, '0'->8, '='->13, 's'->24.
class SymbolTable {
 public:
  explicit SymbolTable(std::map<char, unsigned> codes) : codes_(std::move(codes)) {
    std::set<unsigned> seen;
    for (const auto& [symbol, code] : codes_) {
      if (code < 1) {
        throw Error("symbol '" + std::string(1, symbol) + "' has code " +
                    std::to_string(code) + "; codes must be >= 1");
      }
      if (!seen.insert(code).second) {
        throw Error("code " + std::to_string(code) + " assigned to more than one symbol");
      }
    }
    static const std::map<char, unsigned> kFixed = {
        {'(', 1}, {')', 3}, {'~', 7}, {'0', 8}, {'=', 13}, {'s', 24}};
    for (const auto& [symbol, code] : kFixed) {
      auto it = codes_.find(symbol);
      if (it == codes_.end() || it->second != code) {
        throw Error("table must map '" + std::string(1, symbol) + "' to " +
                    std::to_string(code));
      }
    }
  }

  bool contains(char symbol) const { return codes_.count(symbol) != 0; }

  unsigned code_of(char symbol) const {
    auto it = codes_.find(symbol);
    if (it == codes_.end()) {
      throw Error("symbol '" + std::string(1, symbol) + "' is not in the table");
    }
    return it->second;
  }

  /// Symbol carrying a given code, if any.
  std::optional<char> symbol_of(unsigned code) const {
    for (const auto& [symbol, c] : codes_) {
      if (c == code) return symbol;
    }
    return std::nullopt;
  }

  const std::map<char, unsigned>& codes() const { return codes_; }

  bool operator==(const SymbolTable&) const = default;

 private:
  std::map<char, unsigned> codes_;
};

/// The default table. Starts from the six fixed assignments and extends
/// them to the whole formula alphabet in a frozen order, each symbol taking
/// the smallest code not yet used:
///
///   space . , | & - > < _ 1 2 3 4 5 6 7 8 9 a..z (minus s) A..Z
///
/// The same table ships as demos/godel_table.json; a test pins the two
/// against each other.
inline const SymbolTable& default_symbol_table() {
  static const SymbolTable table = [] {
    std::map<char, unsigned> codes = {{'(', 1}, {')', 3}, {'~', 7},
                                      {'0', 8}, {'=', 13}, {'s', 24}};
    std::set<unsigned> used = {1, 3, 7, 8, 13, 24};
    std::string order = " .,|&-><_123456789";
    for (char c = 'a'; c <= 'z'; ++c) {
      if (c != 's') order += c;
    }
    for (char c = 'A'; c <= 'Z'; ++c) order += c;
    unsigned next = 1;
    for (char symbol : order) {
      while (used.count(next)) ++next;
      codes[symbol] = next;
      used.insert(next);
    }
    return SymbolTable(std::move(codes));
  }();
  return table;
}

/// Arbitrary-precision natural coding a symbol string against a table.
struct GodelCode {
  Natural value;
  SymbolTable table;
};

/// Prime-exponent coding: 2^len(s) * prod over i of p_{i+1}^{code(s_i)}.
/// The exponent of 2 carries the length; symbol i rides the (i+1)-th prime.
inline GodelCode encode(const SymbolTable& table, const std::string& s) {
  Natural value = Natural(1) << s.size();  // 2^len
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!table.contains(s[i])) throw EncodeError(s[i], i + 1);
    value *= boost::multiprecision::pow(Natural(detail::nth_prime(i + 2)),
                                        table.code_of(s[i]));
  }
  return GodelCode{std::move(value), table};
}

enum class DecodeStatus {
  Valid,        // the number codes a symbol string of the table
  NotACode,     // factorization does not have the code shape
  UnknownCode,  // shape is right but an exponent is outside the table
};

struct DecodeResult {
  DecodeStatus status = DecodeStatus::NotACode;
  std::string text;        // decoded string (Valid only)
  bool well_formed = false;  // text parses as a formula of the given signature
  std::string detail;      // failure explanation (NotACode / UnknownCode)
};

/// Factorizes n by trial division over successive primes and inverts the
/// coding. Requires the exponent of 2 to equal the number of consecutive
/// odd primes present, with no gaps and no leftover factor. Exponents and
/// prime indices are bounded by log2 n, so this always terminates.
inline DecodeResult decode(const SymbolTable& table, const Natural& n,
                           const Signature& sig = Signature::lcc()) {
  if (n < 1) throw Error("decode requires n >= 1");

  DecodeResult result;
  Natural rest = n;

  std::size_t length = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++length;
  }

  std::vector<unsigned> exponents;
  for (std::size_t i = 1; i <= length; ++i) {
    Natural prime = detail::nth_prime(i + 1);
    unsigned exponent = 0;
    while (rest % prime == 0) {
      rest /= prime;
      ++exponent;
    }
    if (exponent == 0) {
      result.status = DecodeStatus::NotACode;
      result.detail = "length field is " + std::to_string(length) + " but prime " +
                      prime.str() + " (position " + std::to_string(i) + ") is absent";
      return result;
    }
    exponents.push_back(exponent);
  }

  if (rest != 1) {
    result.status = DecodeStatus::NotACode;
    result.detail = length == 0 && n != 1
                        ? "length field is 0 but the number has odd factors"
                        : "leftover factor " + rest.str() + " beyond the declared length";
    return result;
  }

  std::string text;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    std::optional<char> symbol = table.symbol_of(exponents[i]);
    if (!symbol) {
      result.status = DecodeStatus::UnknownCode;
      result.detail = "exponent " + std::to_string(exponents[i]) + " at position " +
                      std::to_string(i + 1) + " is not a symbol code";
      return result;
    }
    text += *symbol;
  }

  result.status = DecodeStatus::Valid;
  result.text = std::move(text);
  try {
    parse_formula(result.text, sig);
    result.well_formed = true;
  } catch (const Error&) {
    result.well_formed = false;
  }
  return result;
}

inline constexpr unsigned long long kMaxNumeralValue = 1'000'000;

/// The term s(s(...s(0)...)) naming a natural number. Output length is
/// 3n+1 characters, so n is capped for resource sanity.
inline std::string numeral(const Natural& n) {
  if (n < 0) throw Error("numeral requires n >= 0");
  if (n > kMaxNumeralValue) {
    throw BudgetError("numeral of " + n.str() + " exceeds the length cap (n <= " +
                      std::to_string(kMaxNumeralValue) + ")");
  }
  auto count = n.convert_to<unsigned long long>();
  std::string out;
  out.reserve(3 * count + 1);
  for (unsigned long long i = 0; i < count; ++i) out += "s(";
  out += '0';
  for (unsigned long long i = 0; i < count; ++i) out += ')';
  return out;
}

/// Gödel number of a formula: the coding of its canonical text.
inline GodelCode code_of_formula(const SymbolTable& table, const Formula& f) {
  return encode(table, render(f));
}

}  // namespace tarski

#endif  // TARSKI_GODEL_HPP
