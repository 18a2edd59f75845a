#pragma once

// Code powers C^k (sets of concatenations of k words), the ordered tuple sets
// behind them, and the descending power chain C, C^2, C^4, ...

#include <iterator>

#include "udcodes/kraft.hpp"
#include "udcodes/refine.hpp"

namespace udcodes {

namespace detail {

/// |code|^k, throwing ResourceLimit when it exceeds `cap`.
inline std::size_t checked_tuple_count(std::size_t size, unsigned k, std::size_t cap) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "power exponent must be positive");
  std::size_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (size != 0 && total > cap / size) {
      throw Error(ErrorKind::ResourceLimit, std::to_string(size) + "^" + std::to_string(k) +
                                                " tuples exceed cap " + std::to_string(cap));
    }
    total *= size;
  }
  if (total > cap) {
    throw Error(ErrorKind::ResourceLimit, std::to_string(total) + " tuples exceed cap " +
                                              std::to_string(cap));
  }
  return total;
}

}  // namespace detail

/// The ordered k-tuples of code words, as factorizations, in lexicographic
/// order of factor indices. Materializes one tuple at a time.
class WordTuples {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Factorization;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const Code* code, unsigned k) : code_(code), pick_(k, 0) {
      if (code_->empty()) code_ = nullptr;
    }

    Factorization operator*() const {
      std::vector<Word> parts;
      parts.reserve(pick_.size());
      for (auto i : pick_) parts.push_back((*code_)[i]);
      return Factorization(std::move(parts));
    }
    iterator& operator++() {
      std::size_t i = pick_.size();
      while (i-- > 0) {
        if (++pick_[i] < code_->size()) return *this;
        pick_[i] = 0;
      }
      code_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (!a.code_ || !b.code_) return a.code_ == b.code_;
      return a.pick_ == b.pick_;
    }

   private:
    const Code* code_ = nullptr;
    std::vector<std::size_t> pick_;
  };

  WordTuples(Code code, unsigned k, const Limits& limits = {})
      : code_(std::move(code)), k_(k),
        count_(detail::checked_tuple_count(code_.size(), k, limits.max_tuples)) {}

  iterator begin() const { return iterator(&code_, k_); }
  iterator end() const { return {}; }
  std::size_t size() const noexcept { return count_; }

 private:
  Code code_;
  unsigned k_;
  std::size_t count_;
};

inline WordTuples word_tuples(const Code& code, unsigned k, const Limits& limits = {}) {
  return WordTuples(code, k, limits);
}

struct PowerExpansion {
  Code power;
  std::size_t tuples = 0;      // |code|^k
  std::size_t collisions = 0;  // tuples - |power|
};

inline PowerExpansion expand_power(const Code& code, unsigned k, const Limits& limits = {}) {
  const auto count = detail::checked_tuple_count(code.size(), k, limits.max_tuples);
  std::vector<Word> words;
  words.reserve(count);
  if (!code.empty()) {
    std::vector<std::size_t> pick(k, 0);
    std::vector<Symbol> buffer;
    for (;;) {
      buffer.clear();
      for (auto i : pick) buffer.insert(buffer.end(), code[i].symbols().begin(), code[i].symbols().end());
      words.emplace_back(buffer);
      std::size_t i = pick.size();
      while (i-- > 0) {
        if (++pick[i] < code.size()) break;
        pick[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  Code power(code.alphabet(), std::move(words));
  const auto distinct = power.size();
  return PowerExpansion{std::move(power), count, count - distinct};
}

inline Code code_power(const Code& code, unsigned k, const Limits& limits = {}) {
  return expand_power(code, k, limits).power;
}

struct PowerChain {
  Code base;
  std::vector<Code> members;             // C, C^2, C^4, ..., C^(2^n)
  std::vector<KraftValue> kraft_values;  // parallel to members
  /// descends[i]: members[i] refines members[i+1] and they differ.
  std::vector<bool> descends;
  bool strictly_descending = true;
  bool kraft_constant = true;
};

/// Built by repeated squaring of the previous member.
inline PowerChain power_chain(const Code& code, unsigned n, const Limits& limits = {}) {
  if (code.empty()) throw Error(ErrorKind::EmptyCode, "power chain of the empty code");
  PowerChain chain{code, {code}, {kraft_sum(code)}, {}, true, true};
  for (unsigned i = 0; i < n; ++i) {
    const Code& previous = chain.members.back();
    Code next = code_power(previous, 2, limits);
    const bool descends = next != previous && refines(next, previous);
    chain.descends.push_back(descends);
    chain.strictly_descending = chain.strictly_descending && descends;
    chain.kraft_values.push_back(kraft_sum(next));
    chain.kraft_constant = chain.kraft_constant && chain.kraft_values.back() == chain.kraft_values.front();
    chain.members.push_back(std::move(next));
  }
  return chain;
}

}  // namespace udcodes
