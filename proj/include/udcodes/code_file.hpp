#pragma once

// Text format for codes:
//
//   # comment
//   alphabet 01
//   0
//   10
//   11
//
// Blank lines and lines whose first non-blank character is '#' are skipped.
// The first remaining line names the alphabet; each later line holds one word.
// Surrounding spaces, tabs and a trailing '\r' are ignored.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "udcodes/core.hpp"

namespace udcodes {

struct CodeFile {
  std::string path;
  Code code;
  std::vector<std::string> warnings;

  const Alphabet& alphabet() const noexcept { return code.alphabet(); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view blanks = " \t\r";
  const auto first = s.find_first_not_of(blanks);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(blanks);
  return s.substr(first, last - first + 1);
}

}  // namespace detail

inline CodeFile parse_code_file(std::string_view text, std::string path = {}) {
  std::optional<Alphabet> alphabet;
  std::vector<Word> words;
  std::vector<std::string> warnings;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const auto raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    try {
      if (!alphabet) {
        constexpr std::string_view keyword = "alphabet";
        if (!line.starts_with(keyword) ||
            (line.size() > keyword.size() && line[keyword.size()] != ' ' && line[keyword.size()] != '\t')) {
          throw Error(ErrorKind::MissingAlphabet, "expected 'alphabet <symbols>' first");
        }
        const auto symbols = detail::trim(line.substr(keyword.size()));
        if (symbols.find_first_of(" \t") != std::string_view::npos) {
          throw Error(ErrorKind::InvalidAlphabet, "alphabet symbols must not contain whitespace");
        }
        alphabet.emplace(symbols);
        continue;
      }
      auto word = parse_word(line, *alphabet);
      if (std::find(words.begin(), words.end(), word) != words.end()) {
        warnings.push_back("line " + std::to_string(line_no) + ": duplicate word " +
                           std::string(line) + " ignored");
        continue;
      }
      words.push_back(std::move(word));
    } catch (const Error& e) {
      throw Error(e.kind(), e.message(), line_no);
    }
  }
  if (!alphabet) throw Error(ErrorKind::MissingAlphabet, "no 'alphabet' line");
  return CodeFile{std::move(path), Code(*alphabet, std::move(words)), std::move(warnings)};
}

inline CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_code_file(buffer.str(), path);
}

/// Canonical form: the alphabet line, then one word per line in shortlex
/// order, each terminated by a single newline.
inline std::string emit_code_file(const Code& code) {
  std::string out = "alphabet " + code.alphabet().symbols() + "\n";
  for (const auto& w : code) out += render(w, code.alphabet()) + "\n";
  return out;
}

}  // namespace udcodes
