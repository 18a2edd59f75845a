#pragma once

// Instance checks for the Kraft-McMillan bound and its refinement-order
// extension. Every report carries both sides of each asserted inequality as
// exact rationals, so a failure can be audited without recomputation.

#include <cstdint>
#include <string>
#include <variant>

#include "udcodes/decipher.hpp"
#include "udcodes/kraft.hpp"
#include "udcodes/power.hpp"
#include "udcodes/refine.hpp"

namespace udcodes {

enum class PropositionId { McMillan, Prop1, Prop2Pair, Prop2Finiteness, Prop3Chain };

constexpr std::string_view to_string(PropositionId id) noexcept {
  switch (id) {
    case PropositionId::McMillan: return "McMillan";
    case PropositionId::Prop1: return "Prop1";
    case PropositionId::Prop2Pair: return "Prop2Pair";
    case PropositionId::Prop2Finiteness: return "Prop2Finiteness";
    case PropositionId::Prop3Chain: return "Prop3Chain";
  }
  return "Unknown";
}

enum class Relation { LessEqual, Less, Equal };

constexpr std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
  }
  return "?";
}

struct Comparison {
  std::string label;
  KraftValue lhs;
  Relation relation;
  KraftValue rhs;
  bool holds;
};

inline Comparison compare(std::string label, const KraftValue& lhs, Relation relation,
                          const KraftValue& rhs) {
  bool holds = false;
  switch (relation) {
    case Relation::LessEqual: holds = lhs <= rhs; break;
    case Relation::Less: holds = lhs < rhs; break;
    case Relation::Equal: holds = lhs == rhs; break;
  }
  return Comparison{std::move(label), lhs, relation, rhs, holds};
}

using Quantity = std::variant<KraftValue, std::int64_t, bool, std::string>;

struct Detail {
  std::string name;
  Quantity value;
};

struct PropositionReport {
  explicit PropositionReport(PropositionId id) : id(id) {}

  PropositionId id;
  bool passed = true;
  /// False when the code falls outside the statement's hypothesis (e.g. not
  /// UD for McMillan); such reports pass without asserting the bound.
  bool in_hypothesis = true;
  std::vector<Comparison> checks;  // asserted
  std::vector<Detail> details;     // recorded only
  std::vector<std::pair<std::string, std::int64_t>> parameters;

  void assert_that(Comparison c) {
    passed = passed && c.holds;
    checks.push_back(std::move(c));
  }
  void record(std::string name, Quantity value) {
    details.push_back(Detail{std::move(name), std::move(value)});
  }
  const Comparison* first_violation() const {
    for (const auto& c : checks) {
      if (!c.holds) return &c;
    }
    return nullptr;
  }
};

/// Powers used by check_prop1 are capped at this many tuples; kmax is
/// lowered to fit.
inline constexpr std::size_t kMaxPowerWords = 100'000;

namespace detail {

inline std::string render_witness(const UdVerdict& v, const Alphabet& alphabet) {
  const auto& [a, b] = *v.witness;
  return render(a.concatenation(), alphabet) + " = " + render(a, alphabet) + " = " +
         render(b, alphabet);
}

inline void require_ud(const Code& code, const Limits& limits, std::string_view role) {
  if (!is_ud(code, limits).is_ud) {
    throw Error(ErrorKind::NotUniquelyDecipherable,
                std::string(role) + " " + render(code) + " is not uniquely decipherable");
  }
}

}  // namespace detail

/// UD codes have Kraft sum at most 1. Also checks the intermediate bound
/// K(C)^k <= (m-1)k + 1 against the single-symbol code (m = maxlen(C)).
inline PropositionReport check_mcmillan(const Code& code, unsigned kmax = 3,
                                        const Limits& limits = {}) {
  PropositionReport report{PropositionId::McMillan};
  report.parameters.emplace_back("kmax", kmax);
  const auto verdict = is_ud(code, limits);
  const auto k_sum = kraft_sum(code);
  report.record("ud", verdict.is_ud);
  report.record("K(C)", k_sum);
  if (!verdict.is_ud) {
    report.in_hypothesis = false;
    report.record("witness", detail::render_witness(verdict, code.alphabet()));
    return report;
  }
  report.assert_that(compare("K(C) <= 1", k_sum, Relation::LessEqual, KraftValue::integer(1)));
  if (code.empty()) return report;

  const auto m = code.max_length();
  report.record("m", static_cast<std::int64_t>(m));
  for (unsigned k = 1; k <= kmax; ++k) {
    report.assert_that(compare("K(C)^" + std::to_string(k) + " <= (m-1)k+1",
                               kraft_power(k_sum, k), Relation::LessEqual,
                               KraftValue::integer((m - 1) * k + 1)));
  }
  return report;
}

/// K(C^k) <= K(C)^k always; equality for every k when C is UD; strict
/// inequality at k = m + n for a non-UD code whose collision witness has m and
/// n factors.
inline PropositionReport check_prop1(const Code& code, unsigned kmax = 3,
                                     const Limits& limits = {}) {
  if (kmax < 2) throw Error(ErrorKind::InvalidArgument, "kmax must be at least 2");
  PropositionReport report{PropositionId::Prop1};
  unsigned effective = 1;
  for (unsigned k = 2; k <= kmax; ++k) {
    try {
      detail::checked_tuple_count(code.size(), k, std::min(kMaxPowerWords, limits.max_tuples));
    } catch (const Error&) {
      break;
    }
    effective = k;
  }
  if (effective < 2) {
    throw Error(ErrorKind::ResourceLimit, "square of a " + std::to_string(code.size()) +
                                              "-word code exceeds the power cap");
  }
  report.parameters.emplace_back("kmax", kmax);
  report.parameters.emplace_back("kmax_effective", effective);

  const auto verdict = is_ud(code, limits);
  const auto k_sum = kraft_sum(code);
  report.record("ud", verdict.is_ud);
  report.record("K(C)", k_sum);

  for (unsigned k = 1; k <= effective; ++k) {
    const auto expansion = expand_power(code, k, limits);
    const auto lhs = kraft_sum(expansion.power);
    const auto rhs = kraft_power(k_sum, k);
    const auto ks = std::to_string(k);
    report.record("|C^" + ks + "|", static_cast<std::int64_t>(expansion.power.size()));
    report.assert_that(compare("K(C^" + ks + ") <= K(C)^" + ks, lhs, Relation::LessEqual, rhs));
    if (verdict.is_ud) {
      report.assert_that(compare("K(C^" + ks + ") = K(C)^" + ks, lhs, Relation::Equal, rhs));
    }
  }

  if (!verdict.is_ud) {
    const auto& [a, b] = *verdict.witness;
    const auto k = static_cast<unsigned>(a.size() + b.size());
    const auto ks = std::to_string(k);
    report.record("witness", detail::render_witness(verdict, code.alphabet()));
    report.record("k_strict", static_cast<std::int64_t>(k));
    const auto lhs = kraft_sum(code_power(code, k, limits));
    report.assert_that(
        compare("K(C^" + ks + ") < K(C)^" + ks, lhs, Relation::Less, kraft_power(k_sum, k)));
  }
  return report;
}

/// For UD codes coarse <= fine: every word of coarse^k is a concatenation of
/// between k and mk fine words, K(coarse) <= K(fine), and the inequality is
/// strict when fine is not an irredundant refinement of coarse.
inline PropositionReport check_prop2_pair(const Code& coarse, const Code& fine, unsigned kmax = 2,
                                          const Limits& limits = {}) {
  detail::require_ud(coarse, limits, "coarse code");
  detail::require_ud(fine, limits, "fine code");
  if (!refines(coarse, fine)) {
    throw Error(ErrorKind::NotRefinement, render(fine) + " does not refine " + render(coarse));
  }
  PropositionReport report{PropositionId::Prop2Pair};
  report.parameters.emplace_back("kmax", kmax);

  const auto k_coarse = kraft_sum(coarse);
  const auto k_fine = kraft_sum(fine);
  report.record("K(C)", k_coarse);
  report.record("K(D)", k_fine);

  if (!coarse.empty()) {
    const auto m = cover_exponent_bound(coarse, fine);
    report.record("m", static_cast<std::int64_t>(m));
    for (unsigned k = 1; k <= kmax; ++k) {
      std::size_t fewest = static_cast<std::size_t>(-1), most = 0, missing = 0;
      const auto power = code_power(coarse, k, limits);
      for (const auto& w : power) {
        const auto fs = factorizations(w, fine, limits);
        if (fs.empty()) ++missing;
        for (const auto& f : fs) {
          fewest = std::min(fewest, f.size());
          most = std::max(most, f.size());
        }
      }
      const auto ks = std::to_string(k);
      report.assert_that(compare("C^" + ks + " words without a factorization over D",
                                 KraftValue::integer(missing), Relation::Equal, KraftValue()));
      if (missing == power.size()) continue;
      report.assert_that(compare("k <= fewest D-factors in C^" + ks, KraftValue::integer(k),
                                 Relation::LessEqual, KraftValue::integer(fewest)));
      report.assert_that(compare("most D-factors in C^" + ks + " <= mk", KraftValue::integer(most),
                                 Relation::LessEqual, KraftValue::integer(m * k)));
    }
  }

  report.assert_that(compare("K(C) <= K(D)", k_coarse, Relation::LessEqual, k_fine));
  const bool irredundant = is_irredundant_refinement(coarse, fine);
  report.record("irredundant", irredundant);
  if (!irredundant) report.assert_that(compare("K(C) < K(D)", k_coarse, Relation::Less, k_fine));
  return report;
}

/// The UD codes D with code <= D and K(D) = K(code), in canonical order.
///
/// Any such D is an irredundant refinement (a redundant one would have a
/// strictly smaller finer UD subset), hence the block union of one
/// composition per word. The search picks compositions word by word and
/// prunes partial unions whose Kraft sum already exceeds the target or which
/// are no longer UD; both properties are inherited by supersets.
inline std::vector<Code> equal_kraft_refinements(const Code& code, const Limits& limits = {}) {
  detail::require_ud(code, limits, "code");
  const auto target = kraft_sum(code);
  const auto& alphabet = code.alphabet();

  std::vector<std::vector<std::vector<Word>>> choices;
  for (const auto& w : code) choices.push_back(compositions(w));

  std::vector<KraftValue> weight(code.max_length() + 1);
  for (std::size_t len = 0; len < weight.size(); ++len) {
    weight[len] = KraftValue(1, boost::multiprecision::pow(BigInt(alphabet.size()), static_cast<unsigned>(len)));
  }

  std::set<std::pair<std::size_t, std::vector<Word>>> visited;
  std::set<Code> found;
  auto search = [&](auto&& self, std::size_t i, const std::vector<Word>& blocks,
                    const KraftValue& sum) -> void {
    if (!visited.emplace(i, blocks).second) return;
    if (visited.size() > limits.max_states) {
      throw Error(ErrorKind::ResourceLimit,
                  "equal-Kraft search exceeded " + std::to_string(limits.max_states) + " states");
    }
    if (i == choices.size()) {
      Code candidate(alphabet, blocks);
      if (sum == target && is_irredundant_refinement(code, candidate)) found.insert(candidate);
      return;
    }
    for (const auto& composition : choices[i]) {
      std::vector<Word> merged = blocks;
      KraftValue merged_sum = sum;
      bool added = false;
      for (const auto& b : composition) {
        auto at = std::lower_bound(merged.begin(), merged.end(), b);
        if (at != merged.end() && *at == b) continue;
        merged.insert(at, b);
        merged_sum += weight[b.size()];
        added = true;
      }
      if (merged_sum > target) continue;
      if (added && !is_ud(Code(alphabet, merged), limits).is_ud) continue;
      self(self, i + 1, merged, merged_sum);
    }
  };
  search(search, 0, {}, KraftValue());
  return {found.begin(), found.end()};
}

/// Finitely many equal-Kraft UD refinements, each verified.
inline PropositionReport check_prop2_finiteness(const Code& code, const Limits& limits = {}) {
  PropositionReport report{PropositionId::Prop2Finiteness};
  const auto members = equal_kraft_refinements(code, limits);
  const auto k_sum = kraft_sum(code);
  report.record("K(C)", k_sum);
  report.record("count", static_cast<std::int64_t>(members.size()));
  bool self_included = false;
  for (const auto& d : members) {
    const auto label = render(d);
    report.record("refinement", label);
    self_included = self_included || d == code;
    report.assert_that(compare("K(" + label + ") = K(C)", kraft_sum(d), Relation::Equal, k_sum));
    const bool sound = is_ud(d, limits).is_ud && refines(code, d);
    report.passed = report.passed && sound;
    if (!sound) report.record("unsound refinement", label);
  }
  report.passed = report.passed && self_included;
  return report;
}

/// Finite shadow of the order-type claim for equal-Kraft chains: the chain
/// strictly descends, every Kraft value is equal, and each member has
/// finitely many equal-Kraft UD refinements (counts recorded). Throws
/// ChainViolation at the first adjacent pair that breaks order or equality.
inline PropositionReport check_prop3_chain(const std::vector<Code>& chain,
                                           const Limits& limits = {}) {
  PropositionReport report{PropositionId::Prop3Chain};
  report.parameters.emplace_back("length", static_cast<std::int64_t>(chain.size()));
  if (chain.empty()) return report;
  for (const auto& c : chain) detail::require_ud(c, limits, "chain member");

  const auto k_first = kraft_sum(chain.front());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& upper = chain[i];
    const auto& lower = chain[i + 1];
    const auto pair = "members " + std::to_string(i) + " and " + std::to_string(i + 1);
    if (upper == lower || !refines(lower, upper)) {
      throw Error(ErrorKind::ChainViolation,
                  pair + ": " + render(upper) + " is not strictly finer than " + render(lower));
    }
    const auto k_upper = kraft_sum(upper);
    const auto k_lower = kraft_sum(lower);
    if (k_upper != k_lower) {
      throw Error(ErrorKind::ChainViolation, pair + ": Kraft values " + k_upper.to_string() +
                                                 " != " + k_lower.to_string());
    }
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto is = std::to_string(i);
    report.assert_that(compare("K(member " + is + ") = K(member 0)", kraft_sum(chain[i]),
                               Relation::Equal, k_first));
    const auto above = equal_kraft_refinements(chain[i], limits);
    report.record("equal-Kraft refinements of member " + is, static_cast<std::int64_t>(above.size()));
  }
  return report;
}

}  // namespace udcodes
