#pragma once

// Command dispatch for the `udcodes` tool. run_command is the whole program
// minus process I/O, so tests drive it in-process.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage or input
// error, 3 resource limit.

#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "udcodes/code_file.hpp"
#include "udcodes/hasse.hpp"
#include "udcodes/udcodes.hpp"

namespace udcodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

using Json = nlohmann::ordered_json;

inline Json to_json(const KraftValue& v) {
  return Json{{"num", v.numerator().str()}, {"den", v.denominator().str()}};
}

/// "1/1 (≈ 1.00000000000)"
inline std::string describe(const KraftValue& v) {
  return v.to_string() + " (≈ " + v.to_decimal() + ")";
}

inline Json words_json(const Code& code) {
  Json out = Json::array();
  for (const auto& w : code) out.push_back(render(w, code.alphabet()));
  return out;
}

inline Json factors_json(const Factorization& f, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& w : f.factors()) out.push_back(render(w, alphabet));
  return out;
}

inline Json report_json(const PropositionReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"label", c.label},
                          {"lhs", to_json(c.lhs)},
                          {"relation", std::string(to_string(c.relation))},
                          {"rhs", to_json(c.rhs)},
                          {"holds", c.holds}});
  }
  Json details = Json::array();
  for (const auto& d : r.details) {
    Json value = std::visit(
        [](const auto& v) -> Json {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, KraftValue>) return to_json(v);
          else return Json(v);
        },
        d.value);
    details.push_back(Json{{"name", d.name}, {"value", std::move(value)}});
  }
  Json params = Json::object();
  for (const auto& [name, value] : r.parameters) params[name] = value;
  return Json{{"proposition", std::string(to_string(r.id))},
              {"passed", r.passed},
              {"in_hypothesis", r.in_hypothesis},
              {"checks", std::move(checks)},
              {"details", std::move(details)},
              {"parameters", std::move(params)}};
}

inline std::string report_text(const PropositionReport& r) {
  std::string out = std::string(r.passed ? "[pass] " : "[FAIL] ") + std::string(to_string(r.id));
  if (!r.in_hypothesis) out += " (out of hypothesis: not uniquely decipherable)";
  out += "\n";
  for (const auto& c : r.checks) {
    out += "  " + c.label + ": " + c.lhs.to_string() + " " + std::string(to_string(c.relation)) +
           " " + c.rhs.to_string() + (c.holds ? "" : "  VIOLATED") + "\n";
  }
  for (const auto& d : r.details) {
    out += "  " + d.name + " = ";
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, KraftValue>) out += describe(v);
          else if constexpr (std::is_same_v<T, bool>) out += v ? "true" : "false";
          else if constexpr (std::is_same_v<T, std::string>) out += v;
          else out += std::to_string(v);
        },
        d.value);
    out += "\n";
  }
  return out;
}

namespace detail {

struct Context {
  bool json = false;
  Limits limits;
  std::string command;
  std::vector<std::string> inputs;
  std::ostringstream out;
  std::ostringstream err;
};

inline CodeFile load(Context& ctx, const std::string& path) {
  auto file = read_code_file(path);
  for (const auto& w : file.warnings) ctx.err << "warning: " << path << ": " << w << "\n";
  return file;
}

inline int emit_json(Context& ctx, const std::string& verdict, Json exact_values, Json witnesses,
                     int exit_code) {
  Json doc{{"command", ctx.command},
           {"inputs", ctx.inputs},
           {"verdict", verdict},
           {"exact_values", std::move(exact_values)},
           {"witnesses", std::move(witnesses)}};
  ctx.out << doc.dump(2) << "\n";
  return exit_code;
}

inline std::string witness_text(const UdVerdict& v, const Alphabet& a) {
  const auto& [x, y] = *v.witness;
  return render(x.concatenation(), a) + " = " + render(x, a) + " = " + render(y, a);
}

inline int cmd_kraft(Context& ctx, const std::string& path) {
  const auto file = load(ctx, path);
  const auto k = kraft_sum(file.code);
  if (ctx.json) return emit_json(ctx, "ok", Json{{"K(C)", to_json(k)}}, Json::array(), kExitOk);
  ctx.out << describe(k) << "\n";
  return kExitOk;
}

inline int cmd_ud(Context& ctx, const std::string& path) {
  const auto file = load(ctx, path);
  const auto verdict = is_ud(file.code, ctx.limits);
  const int code = verdict.is_ud ? kExitOk : kExitPropertyFails;
  if (ctx.json) {
    Json witnesses = Json::array();
    if (!verdict.is_ud) {
      const auto& [x, y] = *verdict.witness;
      witnesses.push_back(Json{{"word", render(x.concatenation(), file.alphabet())},
                               {"factorizations", Json::array({factors_json(x, file.alphabet()),
                                                               factors_json(y, file.alphabet())})}});
    }
    return emit_json(ctx, verdict.is_ud ? "ud" : "not_ud", Json::object(), std::move(witnesses), code);
  }
  if (verdict.is_ud) {
    ctx.out << "uniquely decipherable\n";
  } else {
    ctx.out << "not uniquely decipherable\nwitness: " << witness_text(verdict, file.alphabet()) << "\n";
  }
  return code;
}

inline int cmd_refines(Context& ctx, const std::string& coarse_path, const std::string& fine_path) {
  const auto coarse = load(ctx, coarse_path);
  const auto fine = load(ctx, fine_path);
  const auto verdict = is_refinement(coarse.code, fine.code);
  const auto& a = coarse.alphabet();
  const int code = verdict.holds ? kExitOk : kExitPropertyFails;
  if (ctx.json) {
    Json witnesses = Json::array();
    for (const auto& [word, f] : verdict.witnesses) {
      witnesses.push_back(Json{{"word", render(word, a)}, {"factors", factors_json(f, a)}});
    }
    for (const auto& word : verdict.unfactorable) {
      witnesses.push_back(Json{{"word", render(word, a)}, {"factors", nullptr}});
    }
    return emit_json(ctx, verdict.holds ? "holds" : "fails",
                     Json{{"K(C)", to_json(kraft_sum(coarse.code))},
                          {"K(D)", to_json(kraft_sum(fine.code))}},
                     std::move(witnesses), code);
  }
  if (verdict.holds) {
    ctx.out << "refinement holds\n";
    for (const auto& [word, f] : verdict.witnesses) ctx.out << render(word, a) << " = " << render(f, a) << "\n";
  } else {
    ctx.out << "refinement fails\n";
    for (const auto& word : verdict.unfactorable) ctx.out << "no factorization: " << render(word, a) << "\n";
  }
  return code;
}

inline int cmd_irredundant(Context& ctx, const std::string& path, bool ud_only) {
  const auto file = load(ctx, path);
  struct Row {
    Code code;
    KraftValue kraft;
    bool ud;
  };
  std::vector<Row> rows;
  for (auto& d : irredundant_refinements(file.code, ctx.limits)) {
    const bool ud = is_ud(d, ctx.limits).is_ud;
    if (ud_only && !ud) continue;
    auto k = kraft_sum(d);
    rows.push_back(Row{std::move(d), std::move(k), ud});
  }
  if (ctx.json) {
    Json witnesses = Json::array();
    for (const auto& r : rows) {
      witnesses.push_back(Json{{"code", words_json(r.code)}, {"kraft", to_json(r.kraft)}, {"ud", r.ud}});
    }
    return emit_json(ctx, "ok", Json{{"K(C)", to_json(kraft_sum(file.code))}}, std::move(witnesses),
                     kExitOk);
  }
  ctx.out << rows.size() << (ud_only ? " UD" : "") << " irredundant refinements of "
          << render(file.code) << "\n";
  for (const auto& r : rows) {
    ctx.out << render(r.code) << "  " << describe(r.kraft) << "  " << (r.ud ? "UD" : "not UD") << "\n";
  }
  return kExitOk;
}

inline int cmd_power(Context& ctx, const std::string& path, unsigned k) {
  const auto file = load(ctx, path);
  const auto expansion = expand_power(file.code, k, ctx.limits);
  const auto lhs = kraft_sum(expansion.power);
  const auto rhs = kraft_power(kraft_sum(file.code), k);
  const auto ks = std::to_string(k);
  if (ctx.json) {
    return emit_json(ctx, "ok",
                     Json{{"K(C^" + ks + ")", to_json(lhs)},
                          {"K(C)^" + ks, to_json(rhs)},
                          {"words", expansion.power.size()},
                          {"tuples", expansion.tuples},
                          {"collisions", expansion.collisions}},
                     words_json(expansion.power), kExitOk);
  }
  ctx.out << "C^" << ks << ": " << expansion.power.size() << " words from " << expansion.tuples
          << " tuples (" << expansion.collisions << " collisions)\n";
  ctx.out << "K(C^" << ks << ") = " << describe(lhs) << "\n";
  ctx.out << "K(C)^" << ks << " = " << describe(rhs) << "\n";
  for (const auto& w : expansion.power) ctx.out << render(w, file.alphabet()) << "\n";
  return kExitOk;
}

inline int cmd_chain(Context& ctx, const std::string& path, unsigned n) {
  const auto file = load(ctx, path);
  const auto chain = power_chain(file.code, n, ctx.limits);
  if (ctx.json) {
    Json values = Json::array();
    Json members = Json::array();
    for (std::size_t i = 0; i < chain.members.size(); ++i) {
      values.push_back(to_json(chain.kraft_values[i]));
      members.push_back(Json{{"exponent", std::uint64_t{1} << i}, {"words", chain.members[i].size()}});
    }
    return emit_json(ctx, "ok",
                     Json{{"kraft_values", std::move(values)},
                          {"strictly_descending", chain.strictly_descending},
                          {"kraft_constant", chain.kraft_constant}},
                     std::move(members), kExitOk);
  }
  for (std::size_t i = 0; i < chain.members.size(); ++i) {
    ctx.out << "C^" << (std::uint64_t{1} << i) << ": " << chain.members[i].size()
            << " words, K = " << describe(chain.kraft_values[i]) << "\n";
  }
  ctx.out << "strictly descending: " << (chain.strictly_descending ? "yes" : "no") << "\n";
  ctx.out << "equal Kraft values: " << (chain.kraft_constant ? "yes" : "no") << "\n";
  return kExitOk;
}

inline int cmd_verify(Context& ctx, const std::string& path, unsigned kmax) {
  const auto file = load(ctx, path);
  const auto& code = file.code;
  std::vector<PropositionReport> reports;
  std::vector<std::string> skipped;

  reports.push_back(check_mcmillan(code, kmax, ctx.limits));
  reports.push_back(check_prop1(code, kmax, ctx.limits));
  const bool ud = is_ud(code, ctx.limits).is_ud;
  if (!ud) {
    skipped = {"Prop2Pair: code is not uniquely decipherable",
               "Prop2Finiteness: code is not uniquely decipherable",
               "Prop3Chain: code is not uniquely decipherable"};
  } else if (code.empty()) {
    reports.push_back(check_prop2_finiteness(code, ctx.limits));
    skipped = {"Prop2Pair: empty code", "Prop3Chain: empty code"};
  } else {
    std::vector<Word> letters;
    for (std::size_t s = 0; s < code.alphabet().size(); ++s) letters.push_back(Word{static_cast<Symbol>(s)});
    const Code single_symbols(code.alphabet(), std::move(letters));
    reports.push_back(check_prop2_pair(code, single_symbols, std::min(kmax, 2U), ctx.limits));
    reports.push_back(check_prop2_finiteness(code, ctx.limits));
    const auto square = code_power(code, 2, ctx.limits);
    if (kraft_sum(square) == kraft_sum(code)) {
      reports.push_back(check_prop3_chain({code, square}, ctx.limits));
    } else {
      skipped.push_back("Prop3Chain: K(C^2) != K(C), so C > C^2 is not an equal-Kraft chain");
    }
  }

  const bool all = std::ranges::all_of(reports, [](const auto& r) { return r.passed; });
  const int exit_code = all ? kExitOk : kExitPropertyFails;
  if (ctx.json) {
    Json values = Json::array();
    for (const auto& r : reports) values.push_back(report_json(r));
    Json notes = Json::array();
    for (const auto& s : skipped) notes.push_back(Json{{"skipped", s}});
    return emit_json(ctx, all ? "pass" : "fail", std::move(values), std::move(notes), exit_code);
  }
  ctx.out << "code " << render(code) << ", K(C) = " << describe(kraft_sum(code)) << "\n";
  for (const auto& r : reports) ctx.out << report_text(r);
  for (const auto& s : skipped) ctx.out << "[skip] " << s << "\n";
  ctx.out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return exit_code;
}

inline int cmd_hasse(Context& ctx, const std::vector<std::string>& paths) {
  std::vector<CodeFile> files;
  for (const auto& p : paths) files.push_back(load(ctx, p));
  const auto dot = export_hasse(files);
  if (ctx.json) {
    std::vector<Code> codes;
    for (const auto& f : files) codes.push_back(f.code);
    Json values = Json::object();
    for (const auto& f : files) values[f.path] = to_json(kraft_sum(f.code));
    Json edges = Json::array();
    for (const auto& e : covering_relation(codes)) {
      edges.push_back(Json{{"coarse", files[e.coarse].path}, {"fine", files[e.fine].path}});
    }
    return emit_json(ctx, "ok", std::move(values), std::move(edges), kExitOk);
  }
  ctx.out << dot;
  return kExitOk;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline CommandResult run_command(const std::vector<std::string>& args) {
  detail::Context ctx;
  CLI::App app{"Kraft sums, unique decipherability and refinement of codes", "udcodes"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "Emit one JSON object instead of the human report");
  app.add_option("--max-states", ctx.limits.max_states, "Cap on search states")->check(CLI::PositiveNumber);
  app.add_option("--max-tuples", ctx.limits.max_tuples, "Cap on composition and power tuples")
      ->check(CLI::PositiveNumber);

  std::string file, coarse, fine;
  std::vector<std::string> files;
  bool ud_only = false;
  unsigned k = 1, n = 0, kmax = 3;

  auto* kraft = app.add_subcommand("kraft", "Exact Kraft sum");
  kraft->add_option("FILE", file)->required();
  auto* ud = app.add_subcommand("ud", "Unique decipherability with a collision witness");
  ud->add_option("FILE", file)->required();
  auto* ref = app.add_subcommand("refines", "Does FINE refine COARSE?");
  ref->add_option("COARSE", coarse)->required();
  ref->add_option("FINE", fine)->required();
  auto* irr = app.add_subcommand("irredundant", "Enumerate irredundant refinements");
  irr->add_option("FILE", file)->required();
  irr->add_flag("--ud-only", ud_only, "Keep only uniquely decipherable refinements");
  auto* pow = app.add_subcommand("power", "Code power C^k");
  pow->add_option("FILE", file)->required();
  pow->add_option("-k", k, "Exponent")->required()->check(CLI::PositiveNumber);
  auto* chain = app.add_subcommand("chain", "Power chain C, C^2, C^4, ..., C^(2^n)");
  chain->add_option("FILE", file)->required();
  chain->add_option("-n", n, "Number of squarings")->required()->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "Check the Kraft-McMillan statements on a code");
  verify->add_option("FILE", file)->required();
  verify->add_option("--kmax", kmax, "Largest power examined")->check(CLI::Range(2U, 64U));
  auto* hasse = app.add_subcommand("hasse", "DOT diagram of the refinement order among codes");
  hasse->add_option("FILE", files)->required();
  for (auto* sub : {kraft, ud, ref, irr, pow, chain, verify, hasse}) sub->fallthrough();

  std::vector<const char*> argv{"udcodes"};
  for (const auto& a : args) argv.push_back(a.c_str());

  CommandResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\nRun with --help for usage.\n";
    result.exit_code = kExitUsage;
    return result;
  }

  try {
    if (kraft->parsed()) {
      ctx.command = "kraft";
      ctx.inputs = {file};
      result.exit_code = detail::cmd_kraft(ctx, file);
    } else if (ud->parsed()) {
      ctx.command = "ud";
      ctx.inputs = {file};
      result.exit_code = detail::cmd_ud(ctx, file);
    } else if (ref->parsed()) {
      ctx.command = "refines";
      ctx.inputs = {coarse, fine};
      result.exit_code = detail::cmd_refines(ctx, coarse, fine);
    } else if (irr->parsed()) {
      ctx.command = "irredundant";
      ctx.inputs = {file};
      result.exit_code = detail::cmd_irredundant(ctx, file, ud_only);
    } else if (pow->parsed()) {
      ctx.command = "power";
      ctx.inputs = {file};
      result.exit_code = detail::cmd_power(ctx, file, k);
    } else if (chain->parsed()) {
      ctx.command = "chain";
      ctx.inputs = {file};
      result.exit_code = detail::cmd_chain(ctx, file, n);
    } else if (verify->parsed()) {
      ctx.command = "verify";
      ctx.inputs = {file};
      result.exit_code = detail::cmd_verify(ctx, file, kmax);
    } else if (hasse->parsed()) {
      ctx.command = "hasse";
      ctx.inputs = files;
      result.exit_code = detail::cmd_hasse(ctx, files);
    }
  } catch (const Error& e) {
    ctx.out.str("");
    ctx.err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceLimit: result.exit_code = kExitResource; break;
      case ErrorKind::ChainViolation: result.exit_code = kExitPropertyFails; break;
      default: result.exit_code = kExitUsage; break;
    }
  }
  result.out = ctx.out.str();
  result.err = ctx.err.str();
  return result;
}

}  // namespace udcodes::cli
