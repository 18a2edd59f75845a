#pragma once

// Factorization of words over a code, the refinement order, and irredundant
// refinements.
//
// D refines C (C <= D) when every word of C is a concatenation of one or more
// words of D. D is an irredundant refinement of C when no proper subset of D
// still refines C. Because refinement is monotone in the finer code, checking
// the single-word removals suffices.

#include <map>
#include <optional>
#include <set>

#include "udcodes/core.hpp"

namespace udcodes {

namespace detail {

inline void require_same_alphabet(const Code& a, const Code& b) {
  if (a.alphabet() != b.alphabet()) {
    throw Error(ErrorKind::MixedAlphabets, "codes over \"" + a.alphabet().symbols() +
                                               "\" and \"" + b.alphabet().symbols() + "\"");
  }
}

/// reach[i]: the suffix of `text` starting at i is a concatenation of code
/// words (reach[size] is true).
inline std::vector<bool> suffix_reachability(std::span<const Symbol> text, const Code& code) {
  std::vector<bool> reach(text.size() + 1, false);
  reach[text.size()] = true;
  for (std::size_t i = text.size(); i-- > 0;) {
    for (const auto& w : code) {
      if (w.size() > text.size() - i) break;
      if (reach[i + w.size()] && w.occurs_at(text, i)) {
        reach[i] = true;
        break;
      }
    }
  }
  return reach;
}

}  // namespace detail

/// All factorizations of `word` into code words, ordered shortlex by
/// factor-length composition. Throws ResourceLimit past
/// `limits.max_factorizations`.
inline std::vector<Factorization> factorizations(const Word& word, const Code& code,
                                                 const Limits& limits = {}) {
  const auto text = word.symbols();
  const auto reach = detail::suffix_reachability(text, code);
  std::vector<Factorization> out;
  if (!reach[0]) return out;

  std::vector<Word> parts;
  auto walk = [&](auto&& self, std::size_t pos) -> void {
    if (pos == text.size()) {
      if (out.size() >= limits.max_factorizations) {
        throw Error(ErrorKind::ResourceLimit,
                    "more than " + std::to_string(limits.max_factorizations) + " factorizations");
      }
      out.emplace_back(parts);
      return;
    }
    for (const auto& w : code) {
      if (w.size() > text.size() - pos) break;
      if (reach[pos + w.size()] && w.occurs_at(text, pos)) {
        parts.push_back(w);
        self(self, pos + w.size());
        parts.pop_back();
      }
    }
  };
  walk(walk, 0);
  std::stable_sort(out.begin(), out.end());
  return out;
}

/// The first factorization in canonical order (fewest factors, then
/// lexicographically smallest composition), without enumerating the rest.
inline std::optional<Factorization> first_factorization(const Word& word, const Code& code) {
  const auto text = word.symbols();
  const std::size_t n = text.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> fewest(n + 1, kNone);
  fewest[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (const auto& w : code) {
      if (w.size() > n - i) break;
      const auto next = fewest[i + w.size()];
      if (next != kNone && next + 1 < fewest[i] && w.occurs_at(text, i)) fewest[i] = next + 1;
    }
  }
  if (fewest[0] == kNone) return std::nullopt;

  std::vector<Word> parts;
  for (std::size_t pos = 0; pos < n;) {
    for (const auto& w : code) {
      if (w.size() > n - pos) continue;
      const auto next = fewest[pos + w.size()];
      if (next != kNone && next + 1 == fewest[pos] && w.occurs_at(text, pos)) {
        parts.push_back(w);
        pos += w.size();
        break;
      }
    }
  }
  return Factorization(std::move(parts));
}

/// Membership of `word` in fine+ .
inline bool factors_over(const Word& word, const Code& fine) {
  return detail::suffix_reachability(word.symbols(), fine)[0];
}

/// Decision only, no witnesses.
inline bool refines(const Code& coarse, const Code& fine) {
  detail::require_same_alphabet(coarse, fine);
  return std::ranges::all_of(coarse, [&](const Word& w) { return factors_over(w, fine); });
}

struct RefinementVerdict {
  bool holds = false;
  /// One canonical factorization per coarse word; complete iff holds.
  std::map<Word, Factorization> witnesses;
  /// Coarse words with no factorization over the fine code.
  std::vector<Word> unfactorable;
};

inline RefinementVerdict is_refinement(const Code& coarse, const Code& fine) {
  detail::require_same_alphabet(coarse, fine);
  RefinementVerdict verdict;
  for (const auto& w : coarse) {
    if (auto f = first_factorization(w, fine)) {
      verdict.witnesses.emplace(w, std::move(*f));
    } else {
      verdict.unfactorable.push_back(w);
    }
  }
  verdict.holds = verdict.unfactorable.empty();
  if (!verdict.holds) verdict.witnesses.clear();
  return verdict;
}

inline bool is_irredundant_refinement(const Code& coarse, const Code& fine) {
  if (!refines(coarse, fine)) return false;
  return std::ranges::none_of(fine, [&](const Word& d) { return refines(coarse, fine.without(d)); });
}

/// Every way to cut `word` into consecutive nonempty blocks, as block lists.
/// Ordered by factor-length composition, shortlex.
inline std::vector<std::vector<Word>> compositions(const Word& word) {
  const auto text = word.symbols();
  const std::size_t n = text.size();
  if (n > 63) throw Error(ErrorKind::ResourceLimit, "word too long to enumerate compositions");
  std::vector<std::vector<Word>> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t cuts = 0; cuts < count; ++cuts) {
    std::vector<Word> blocks;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == n || (cuts >> (i - 1)) & 1U) {
        blocks.emplace_back(std::vector<Symbol>(text.begin() + static_cast<std::ptrdiff_t>(start),
                                                text.begin() + static_cast<std::ptrdiff_t>(i)));
        start = i;
      }
    }
    out.push_back(std::move(blocks));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].size() != b[i].size()) return a[i].size() < b[i].size();
    }
    return false;
  });
  return out;
}

namespace detail {

/// Product of per-word composition counts, or nullopt past `cap`.
inline std::optional<std::size_t> composition_tuple_count(const Code& coarse, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& w : coarse) {
    if (w.size() - 1 >= 63) return std::nullopt;
    const std::uint64_t per = std::uint64_t{1} << (w.size() - 1);
    if (per > cap || total > cap / per) return std::nullopt;
    total *= per;
  }
  return total;
}

}  // namespace detail

/// All irredundant refinements of `coarse`, in canonical (shortlex) code
/// order. Each one is the block union of one composition per coarse word, so
/// the candidates are enumerated over composition tuples and filtered.
inline std::vector<Code> irredundant_refinements(const Code& coarse, const Limits& limits = {}) {
  if (!detail::composition_tuple_count(coarse, limits.max_tuples)) {
    BigInt exact = 1;
    for (const auto& w : coarse) exact <<= static_cast<unsigned>(w.size() - 1);
    throw Error(ErrorKind::ResourceLimit, exact.str() + " composition tuples exceed cap " +
                                              std::to_string(limits.max_tuples));
  }

  std::vector<std::vector<std::vector<Word>>> choices;
  choices.reserve(coarse.size());
  for (const auto& w : coarse) choices.push_back(compositions(w));

  std::set<Code> candidates;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    std::vector<Word> blocks;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& chosen = choices[i][pick[i]];
      blocks.insert(blocks.end(), chosen.begin(), chosen.end());
    }
    candidates.insert(Code(coarse.alphabet(), std::move(blocks)));

    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }

  std::vector<Code> out;
  for (const auto& c : candidates) {
    if (is_irredundant_refinement(coarse, c)) out.push_back(c);
  }
  return out;
}

/// floor(maxlen(coarse) / minlen(fine)): no coarse word is a concatenation of
/// more fine words than this.
inline std::size_t cover_exponent_bound(const Code& coarse, const Code& fine) {
  if (coarse.empty() || fine.empty()) {
    throw Error(ErrorKind::EmptyCode, "cover exponent needs two nonempty codes");
  }
  return coarse.max_length() / fine.min_length();
}

}  // namespace udcodes
