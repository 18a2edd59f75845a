#pragma once

// Golden transcripts of the command-line tool, shared by the unit tests and
// the acceptance suite. Paths are relative to the source root.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "udcodes/cli.hpp"

namespace golden {

// Tests run from the source root so paths printed by the tool are stable.
inline const std::filesystem::path kDir = "tests/golden";

inline std::string transcript(const udcodes::cli::CommandResult& r) {
  return "exit: " + std::to_string(r.exit_code) + "\n--- stdout\n" + r.out + "--- stderr\n" + r.err;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

inline std::vector<GoldenCase> cases() {
  std::vector<GoldenCase> out;
  const std::vector<std::pair<std::string, std::string>> fixtures{
      {"prefix", "codes/prefix.code"}, {"ambiguous", "codes/ambiguous.code"}, {"single", "codes/single.code"}};
  for (const auto& [tag, path] : fixtures) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
        {"kraft", {"kraft", path}},
        {"ud", {"ud", path}},
        {"refines", {"refines", path, "codes/letters.code"}},
        {"irredundant", {"irredundant", path}},
        {"irredundant_ud", {"irredundant", "--ud-only", path}},
        {"power", {"power", path, "-k", "2"}},
        {"chain", {"chain", path, "-n", "2"}},
        {"verify", {"verify", path}},
    };
    for (const auto& [cmd, args] : commands) {
      out.push_back({cmd + "_" + tag, args});
      auto json = args;
      json.insert(json.begin(), "--json");
      out.push_back({cmd + "_" + tag + "_json", json});
    }
  }
  const std::vector<std::string> all{"codes/prefix.code", "codes/ambiguous.code", "codes/single.code"};
  auto hasse = all;
  hasse.insert(hasse.begin(), "hasse");
  out.push_back({"hasse_fixtures", hasse});
  auto hasse_json = hasse;
  hasse_json.insert(hasse_json.begin(), "--json");
  out.push_back({"hasse_fixtures_json", hasse_json});
  out.push_back({"hasse_chain", {"hasse", "codes/letters.code", "codes/coarse.code", "codes/fine.code"}});
  out.push_back({"refines_fails", {"refines", "codes/coarse.code", "codes/deficient.code"}});
  out.push_back({"refines_fails_json", {"--json", "refines", "codes/coarse.code", "codes/deficient.code"}});
  out.push_back({"chain_deficient", {"chain", "codes/deficient.code", "-n", "2"}});
  out.push_back({"verify_letters", {"verify", "codes/letters.code"}});
  out.push_back({"error_missing_file", {"kraft", "codes/does-not-exist.code"}});
  out.push_back({"error_usage", {"power", "codes/prefix.code"}});
  out.push_back({"error_resource", {"--max-tuples", "3", "power", "codes/prefix.code", "-k", "2"}});
  out.push_back({"error_resource_json", {"--json", "--max-tuples", "3", "power", "codes/prefix.code", "-k", "2"}});
  return out;
}

inline void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

inline std::filesystem::path path_of(const GoldenCase& c) { return kDir / (c.name + ".txt"); }

}  // namespace golden
