#pragma once

// Unique decipherability: the Sardinas-Patterson decision procedure with
// collision certificates, plus a bounded brute-force oracle over pairs of
// word sequences.

#include <optional>
#include <queue>
#include <set>
#include <utility>

#include "udcodes/core.hpp"

namespace udcodes {

struct UdVerdict {
  bool is_ud = true;
  /// Two distinct factorizations with the same concatenation. Present iff
  /// !is_ud. The first has the shortlex-smaller factor-length composition.
  std::optional<std::pair<Factorization, Factorization>> witness;
};

namespace detail {

inline UdVerdict collision(Factorization a, Factorization b) {
  if (b < a) std::swap(a, b);
  return UdVerdict{false, std::make_pair(std::move(a), std::move(b))};
}

inline bool is_proper_prefix(std::span<const Symbol> p, std::span<const Symbol> s) {
  return p.size() < s.size() && std::equal(p.begin(), p.end(), s.begin());
}

}  // namespace detail

/// Sardinas-Patterson. States are dangling suffixes; each carries the pair of
/// partial factorizations that produced it (the "ahead" side's concatenation
/// equals the "behind" side's concatenation followed by the suffix). States
/// are settled best-first on (length of the ahead concatenation, that
/// concatenation), so the first collision popped is the shortest ambiguous
/// word, ties broken lexicographically.
inline UdVerdict is_ud(const Code& code, const Limits& limits = {}) {
  if (code.size() <= 1) return UdVerdict{};

  using Suffix = std::vector<Symbol>;
  struct State {
    std::size_t cost;          // length of the ahead concatenation
    std::vector<Symbol> ahead_word;
    bool terminal;             // ahead and behind concatenate equally
    std::size_t seq;
    Suffix suffix;
    std::vector<Word> ahead;
    std::vector<Word> behind;
  };
  struct Later {
    bool operator()(const State& a, const State& b) const {
      if (a.cost != b.cost) return a.cost > b.cost;
      if (a.ahead_word != b.ahead_word) return a.ahead_word > b.ahead_word;
      if (a.terminal != b.terminal) return b.terminal;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<State, std::vector<State>, Later> queue;
  std::size_t seq = 0;
  auto push = [&](std::vector<Word> ahead, std::vector<Word> behind, Suffix suffix,
                  bool terminal) {
    auto ahead_word = concatenate(ahead);
    const auto symbols = ahead_word.symbols();
    queue.push(State{symbols.size(), {symbols.begin(), symbols.end()}, terminal, seq++,
                     std::move(suffix), std::move(ahead), std::move(behind)});
  };

  for (const auto& shorter : code) {
    for (const auto& longer : code) {
      if (detail::is_proper_prefix(shorter.symbols(), longer.symbols())) {
        const auto tail = longer.symbols().subspan(shorter.size());
        push({longer}, {shorter}, Suffix(tail.begin(), tail.end()), false);
      }
    }
  }

  std::set<Suffix> settled;
  while (!queue.empty()) {
    State state = queue.top();
    queue.pop();
    if (state.terminal) {
      return detail::collision(Factorization(std::move(state.ahead)),
                               Factorization(std::move(state.behind)));
    }
    if (!settled.insert(state.suffix).second) continue;
    if (settled.size() > limits.max_states) {
      throw Error(ErrorKind::ResourceLimit,
                  "dangling-suffix states exceeded " + std::to_string(limits.max_states));
    }
    const std::span<const Symbol> suffix = state.suffix;
    for (const auto& word : code) {
      const auto w = word.symbols();
      if (std::ranges::equal(w, suffix)) {
        auto behind = state.behind;
        behind.push_back(word);
        push(state.ahead, std::move(behind), {}, true);
      } else if (detail::is_proper_prefix(w, suffix)) {
        auto behind = state.behind;
        behind.push_back(word);
        const auto rest = suffix.subspan(w.size());
        push(state.ahead, std::move(behind), Suffix(rest.begin(), rest.end()), false);
      } else if (detail::is_proper_prefix(suffix, w)) {
        auto overtaking = state.behind;
        overtaking.push_back(word);
        const auto rest = w.subspan(suffix.size());
        push(std::move(overtaking), state.ahead, Suffix(rest.begin(), rest.end()), false);
      }
    }
  }
  return UdVerdict{};
}

/// Testing oracle. Explores every pair of word sequences with distinct first
/// words whose concatenations stay prefix-compatible, up to concatenation
/// length `max_total_len`, comparing the concatenated strings directly. A
/// reported collision is conclusive; "UD" is conclusive only up to the bound.
inline UdVerdict is_ud_bruteforce(const Code& code, std::size_t max_total_len) {
  if (max_total_len == 0) throw Error(ErrorKind::InvalidArgument, "bound must be positive");
  const auto words = code.words();

  std::vector<Word> top, bottom;
  std::vector<Symbol> top_str, bottom_str;
  std::optional<UdVerdict> found;

  auto compatible = [](const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    const auto n = std::min(a.size(), b.size());
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), b.begin());
  };

  // Extend whichever side is shorter until both concatenate to the same string.
  auto search = [&](auto&& self) -> void {
    if (found) return;
    if (top_str == bottom_str) {
      found = detail::collision(Factorization(top), Factorization(bottom));
      return;
    }
    const bool extend_top = top_str.size() < bottom_str.size();
    auto& seq = extend_top ? top : bottom;
    auto& str = extend_top ? top_str : bottom_str;
    const auto& other = extend_top ? bottom_str : top_str;
    for (const auto& w : words) {
      if (str.size() + w.size() > max_total_len) continue;
      const auto old = str.size();
      str.insert(str.end(), w.symbols().begin(), w.symbols().end());
      if (compatible(str, other)) {
        seq.push_back(w);
        self(self);
        seq.pop_back();
      }
      str.resize(old);
      if (found) return;
    }
  };

  for (std::size_t i = 0; i < words.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < words.size() && !found; ++j) {
      if (words[i].size() > max_total_len || words[j].size() > max_total_len) continue;
      top = {words[i]};
      bottom = {words[j]};
      top_str.assign(words[i].symbols().begin(), words[i].symbols().end());
      bottom_str.assign(words[j].symbols().begin(), words[j].symbols().end());
      if (compatible(top_str, bottom_str)) search(search);
    }
  }
  return found ? *found : UdVerdict{};
}

}  // namespace udcodes
