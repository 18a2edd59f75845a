#pragma once

#include <span>
#include <string>

#include "udcodes/code_file.hpp"
#include "udcodes/kraft.hpp"
#include "udcodes/refine.hpp"

namespace udcodes {

struct HasseEdge {
  std::size_t coarse;
  std::size_t fine;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// Covering pairs of the refinement order restricted to `codes`: (i, j) when
/// codes[i] < codes[j] strictly (j refines i but not conversely) and no
/// k lies strictly between them. Sorted by (coarse, fine).
inline std::vector<HasseEdge> covering_relation(std::span<const Code> codes) {
  const std::size_t n = codes.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (codes[i].alphabet() != codes[0].alphabet()) {
      throw Error(ErrorKind::MixedAlphabets, "all codes must share one alphabet");
    }
  }
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) le[i][j] = i == j || refines(codes[i], codes[j]);
  }
  auto less = [&](std::size_t i, std::size_t j) { return le[i][j] && !le[j][i]; };

  std::vector<HasseEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (less(i, k) && less(k, j)) covered = false;
      }
      if (covered) edges.push_back({i, j});
    }
  }
  return edges;
}

namespace detail {

inline std::string dot_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace detail

/// DOT digraph; an edge C -> D means D is strictly finer than C with no input
/// code in between. Nodes follow input order.
inline std::string export_hasse(std::span<const CodeFile> files) {
  std::vector<Code> codes;
  codes.reserve(files.size());
  for (const auto& f : files) codes.push_back(f.code);
  const auto edges = covering_relation(codes);

  std::string out = "digraph refinement {\n";
  for (std::size_t i = 0; i < files.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + detail::dot_escape(files[i].path) +
           "\\n" + detail::dot_escape(render(files[i].code)) + "\\nK = " +
           kraft_sum(files[i].code).to_string() + "\"];\n";
  }
  for (const auto& e : edges) {
    out += "  n" + std::to_string(e.coarse) + " -> n" + std::to_string(e.fine) + ";\n";
  }
  return out + "}\n";
}

}  // namespace udcodes
