#pragma once

#include "udcodes/core.hpp"

namespace udcodes {

/// Sum of r^-len(x) over the code, exact. Accumulates over the common
/// denominator r^maxlen and reduces once at the end.
inline KraftValue kraft_sum(const Code& code) {
  if (code.empty()) return KraftValue();
  const BigInt r = code.alphabet().size();
  const std::size_t max_len = code.max_length();

  std::vector<BigInt> powers(max_len + 1);
  powers[0] = 1;
  for (std::size_t i = 1; i <= max_len; ++i) powers[i] = powers[i - 1] * r;

  BigInt numerator = 0;
  for (const auto& w : code) numerator += powers[max_len - w.size()];
  return KraftValue(numerator, powers[max_len]);
}

/// Two-argument form; `alphabet` must be the code's own alphabet.
inline KraftValue kraft_sum(const Code& code, const Alphabet& alphabet) {
  if (code.alphabet() != alphabet) {
    throw Error(ErrorKind::MixedAlphabets, "code is not over alphabet \"" + alphabet.symbols() + "\"");
  }
  return kraft_sum(code);
}

}  // namespace udcodes
