#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace udcodes {

enum class ErrorKind {
  EmptyWord,
  UnknownSymbol,
  DuplicateSymbol,
  InvalidAlphabet,
  MissingAlphabet,
  MixedAlphabets,
  EmptyCode,
  NotRefinement,
  NotUniquelyDecipherable,
  ChainViolation,
  ResourceLimit,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::MissingAlphabet: return "MissingAlphabet";
    case ErrorKind::MixedAlphabets: return "MixedAlphabets";
    case ErrorKind::EmptyCode: return "EmptyCode";
    case ErrorKind::NotRefinement: return "NotRefinement";
    case ErrorKind::NotUniquelyDecipherable: return "NotUniquelyDecipherable";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `line()` is set only by the code-file
/// parser.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(kind, message, line)),
        kind_(kind),
        message_(message),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind and line prefix.
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            std::optional<std::size_t> line) {
    std::string out(to_string(kind));
    if (line) out += " (line " + std::to_string(*line) + ")";
    out += ": ";
    out += message;
    return out;
  }

  ErrorKind kind_;
  std::string message_;
  std::optional<std::size_t> line_;
};

/// Resource caps shared by every operation that can blow up combinatorially.
/// Exceeding one raises ErrorKind::ResourceLimit; nothing is silently
/// truncated.
struct Limits {
  std::size_t max_states = 1'000'000;        // dangling-suffix / search states
  std::size_t max_tuples = 1'000'000;        // composition tuples and power tuples
  std::size_t max_factorizations = 10'000;   // factorizations materialized per word
};

}  // namespace udcodes
