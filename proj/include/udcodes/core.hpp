#pragma once

// Value types shared by every module: alphabets, words, codes, exact Kraft
// values and factorizations. All of them are immutable after construction.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "udcodes/error.hpp"

namespace udcodes {

using BigInt = boost::multiprecision::cpp_int;
using Symbol = std::uint8_t;

/// Ordered set of distinct single-character symbols. Symbols must be
/// printable, non-whitespace ASCII, which caps the size at 94.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 94;

  explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
    index_.fill(-1);
    if (symbols_.empty()) {
      throw Error(ErrorKind::InvalidAlphabet, "alphabet must be nonempty");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const auto ch = static_cast<unsigned char>(symbols_[i]);
      if (ch <= 0x20 || ch >= 0x7f) {
        throw Error(ErrorKind::InvalidAlphabet,
                    "symbol at position " + std::to_string(i) +
                        " is not a printable non-whitespace ASCII character");
      }
      if (index_[ch] >= 0) {
        throw Error(ErrorKind::DuplicateSymbol,
                    std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
      }
      index_[ch] = static_cast<std::int16_t>(i);
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }

  bool contains(char ch) const noexcept {
    return index_[static_cast<unsigned char>(ch)] >= 0;
  }
  /// Index of `ch`; throws UnknownSymbol when absent.
  Symbol index_of(char ch) const {
    const auto idx = index_[static_cast<unsigned char>(ch)];
    if (idx < 0) {
      throw Error(ErrorKind::UnknownSymbol,
                  std::string("symbol '") + ch + "' is not in alphabet \"" + symbols_ + "\"");
    }
    return static_cast<Symbol>(idx);
  }
  char symbol_at(Symbol index) const { return symbols_.at(index); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// A nonempty sequence of alphabet indices. Ordered shortlex: by length, then
/// lexicographically by index.
class Word {
 public:
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
      throw Error(ErrorKind::EmptyWord, "the null string is not a code word");
    }
  }
  Word(std::initializer_list<Symbol> symbols) : Word(std::vector<Symbol>(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  /// True when this word occurs in `text` starting at `pos`.
  bool occurs_at(std::span<const Symbol> text, std::size_t pos) const noexcept {
    return pos + symbols_.size() <= text.size() &&
           std::equal(symbols_.begin(), symbols_.end(), text.begin() + pos);
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                  b.symbols_.begin(), b.symbols_.end());
  }

 private:
  std::vector<Symbol> symbols_;
};

/// Joins `parts` in order. `parts` must be nonempty.
inline Word concatenate(std::span<const Word> parts) {
  std::vector<Symbol> out;
  std::size_t total = 0;
  for (const auto& w : parts) total += w.size();
  out.reserve(total);
  for (const auto& w : parts) out.insert(out.end(), w.symbols().begin(), w.symbols().end());
  return Word(std::move(out));
}

/// Translates text into a word over `alphabet`.
inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  if (text.empty()) throw Error(ErrorKind::EmptyWord, "the null string is not a code word");
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char ch : text) out.push_back(alphabet.index_of(ch));
  return Word(std::move(out));
}

inline std::string render(const Word& word, const Alphabet& alphabet) {
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word.symbols()) out.push_back(alphabet.symbol_at(s));
  return out;
}

/// A finite, null-string-free set of words over one alphabet, stored in
/// shortlex order without duplicates. The empty code is allowed.
class Code {
 public:
  explicit Code(Alphabet alphabet, std::vector<Word> words = {})
      : alphabet_(std::move(alphabet)), words_(std::move(words)) {
    for (const auto& w : words_) {
      for (Symbol s : w.symbols()) {
        if (s >= alphabet_.size()) {
          throw Error(ErrorKind::UnknownSymbol,
                      "symbol index " + std::to_string(s) + " outside alphabet of size " +
                          std::to_string(alphabet_.size()));
        }
      }
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }
  const Word& operator[](std::size_t i) const noexcept { return words_[i]; }

  bool contains(const Word& w) const noexcept {
    return std::binary_search(words_.begin(), words_.end(), w);
  }
  std::size_t max_length() const noexcept { return empty() ? 0 : words_.back().size(); }
  std::size_t min_length() const noexcept { return empty() ? 0 : words_.front().size(); }

  /// This code with `w` removed (no-op when absent).
  Code without(const Word& w) const {
    std::vector<Word> rest;
    rest.reserve(words_.size());
    for (const auto& x : words_) {
      if (x != w) rest.push_back(x);
    }
    return Code(alphabet_, std::move(rest));
  }

  friend bool operator==(const Code&, const Code&) = default;
  /// Shortlex on codes: alphabet, then cardinality, then word by word.
  friend std::strong_ordering operator<=>(const Code& a, const Code& b) noexcept {
    if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
    if (auto c = a.words_.size() <=> b.words_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(),
                                                  b.words_.begin(), b.words_.end());
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
};

inline Code make_code(std::vector<Word> words, const Alphabet& alphabet) {
  return Code(alphabet, std::move(words));
}

/// Convenience for tests and tools: parse each text as a word.
inline Code make_code(std::initializer_list<std::string_view> texts, const Alphabet& alphabet) {
  std::vector<Word> words;
  for (auto t : texts) words.push_back(parse_word(t, alphabet));
  return Code(alphabet, std::move(words));
}

/// "{0, 10, 11}"
inline std::string render(const Code& code) {
  std::string out = "{";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ", ";
    out += render(code[i], code.alphabet());
  }
  return out + "}";
}

/// Exact nonnegative rational in lowest terms.
class KraftValue {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  KraftValue() = default;
  KraftValue(BigInt numerator, BigInt denominator) {
    if (denominator <= 0) throw Error(ErrorKind::InvalidArgument, "denominator must be positive");
    if (numerator < 0) throw Error(ErrorKind::InvalidArgument, "Kraft values are nonnegative");
    value_ = Rational(numerator, denominator);
  }
  static KraftValue integer(std::uint64_t n) { return KraftValue(BigInt(n), BigInt(1)); }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_zero() const { return value_ == 0; }

  KraftValue& operator+=(const KraftValue& o) {
    value_ += o.value_;
    return *this;
  }
  KraftValue& operator*=(const KraftValue& o) {
    value_ *= o.value_;
    return *this;
  }
  friend KraftValue operator+(KraftValue a, const KraftValue& b) { return a += b; }
  friend KraftValue operator*(KraftValue a, const KraftValue& b) { return a *= b; }

  friend bool operator==(const KraftValue& a, const KraftValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const KraftValue& a, const KraftValue& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "num/den", always with a denominator.
  std::string to_string() const {
    return numerator().str() + "/" + denominator().str();
  }

  /// Decimal approximation with `digits` significant digits (round half up).
  /// Display only; never compare these strings.
  std::string to_decimal(int digits = 12) const;

 private:
  explicit KraftValue(Rational r) : value_(std::move(r)) {}
  friend KraftValue kraft_power(const KraftValue&, unsigned);

  Rational value_{0};
};

inline std::string KraftValue::to_decimal(int digits) const {
  const BigInt num = numerator();
  const BigInt den = denominator();
  if (num == 0) return "0";
  auto pow10 = [](long e) -> BigInt {
    BigInt p = 1;
    for (long i = 0; i < e; ++i) p *= 10;
    return p;
  };
  // e = floor(log10(num/den))
  long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
  auto at_least_pow10 = [&](long x) {  // num/den >= 10^x
    return x >= 0 ? num >= den * pow10(x) : num * pow10(-x) >= den;
  };
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  auto scaled = [&](long s) -> BigInt {  // round(num/den * 10^s)
    BigInt n = num, d = den;
    if (s >= 0) n *= pow10(s);
    else d *= pow10(-s);
    return (2 * n + d) / (2 * d);
  };
  long shift = digits - 1 - e;
  BigInt q = scaled(shift);
  if (q >= pow10(digits)) {
    ++e;
    --shift;
    q = scaled(shift);
  }
  const std::string ds = q.str();
  if (e >= 0 && e < digits) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    std::string out = ds.substr(0, int_len);
    if (int_len < ds.size()) out += "." + ds.substr(int_len);
    return out;
  }
  if (e < 0 && e >= -6) return "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  std::string out = ds.substr(0, 1);
  if (ds.size() > 1) out += "." + ds.substr(1);
  return out + "e" + std::to_string(e);
}

/// Exact k-th power; k = 0 yields 1.
inline KraftValue kraft_power(const KraftValue& value, unsigned k) {
  KraftValue::Rational result{1};
  KraftValue::Rational base = value.value_;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return KraftValue(std::move(result));
}

/// A nonempty sequence of words together with their concatenation.
class Factorization {
 public:
  explicit Factorization(std::vector<Word> factors)
      : factors_(std::move(factors)), concatenation_(init_concat(factors_)) {}

  std::span<const Word> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const Word& concatenation() const noexcept { return concatenation_; }

  /// Factor lengths in order.
  std::vector<std::size_t> composition() const {
    std::vector<std::size_t> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.size());
    return out;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors_ == b.factors_;
  }
  /// Shortlex on the factor-length composition, then on the factors
  /// themselves.
  friend std::strong_ordering operator<=>(const Factorization& a, const Factorization& b) {
    if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.factors_.size(); ++i) {
      if (auto c = a.factors_[i].size() <=> b.factors_[i].size(); c != 0) return c;
    }
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
  }

 private:
  static Word init_concat(const std::vector<Word>& factors) {
    if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "a factorization needs a factor");
    return concatenate(factors);
  }

  std::vector<Word> factors_;
  Word concatenation_;
};

/// "0·10" (factors joined by U+00B7 MIDDLE DOT).
inline std::string render(const Factorization& f, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += "·";
    out += render(f.factors()[i], alphabet);
  }
  return out;
}

}  // namespace udcodes
