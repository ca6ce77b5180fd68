#include "freegroup/cli.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "freegroup/imaginaries.hpp"
#include "freegroup/stallings.hpp"
#include "freegroup/whitehead.hpp"

namespace fg::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kLemmas{"relation", "freefactor", "surface", "flag",
                                       "abelian",  "orbit",      "separation", "all"};

std::string format_params(const VerificationReport& r) {
  std::string out;
  for (const auto& [key, value] : r.params) out += " " + key + "=" + std::to_string(value);
  return out;
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << to_string(r.status) << "  " << r.check_name << format_params(r) << "  (" << r.elapsed_ms << " ms)\n";
  for (const auto& w : r.witnesses) out << "    witness: " << w << '\n';
}

int exit_for(bool ok) { return ok ? kExitPass : kExitFail; }

int print_bool(std::ostream& out, Format format, bool value, json extra = json::object()) {
  if (format == Format::kJson) {
    extra["result"] = value;
    out << extra.dump() << '\n';
  } else {
    out << (value ? "true" : "false") << '\n';
  }
  return exit_for(value);
}

std::vector<Word> parse_words(const AlphabetPtr& alphabet, const std::vector<std::string>& texts) {
  std::vector<Word> words;
  for (const auto& t : texts) words.push_back(Word::parse(alphabet, t));
  return words;
}

AlphabetPtr require_alphabet(const std::string& csv) {
  if (csv.empty()) throw PreconditionError("--alphabet is required");
  return Alphabet::parse(csv);
}

void add_lemma(VerifyRun& run, const CliConfig& config, const GnConstruction& g, const std::string& lemma, bool lenient) {
  const int n = g.n;
  auto skip_or_throw = [&](const std::string& reason) {
    if (!lenient) throw PreconditionError(lemma + ": " + reason);
    run.skipped.push_back(lemma + ": " + reason);
  };

  if (lemma == "relation") {
    run.reports.push_back(verify_relation_chain(g));
  } else if (lemma == "freefactor") {
    if (n < 1) return skip_or_throw("needs n >= 1");
    run.reports.push_back(verify_free_factor_chain(g));
  } else if (lemma == "surface") {
    if (n % 2 != 0) return skip_or_throw("n odd");
    if (n < 2) return skip_or_throw("needs n >= 2");
    run.reports.push_back(verify_surface_rewrite(g));
  } else if (lemma == "flag") {
    if (config.i) {
      run.reports.push_back(explicit_flag_decomposition(g, *config.i));
      return;
    }
    if (lenient && n % 2 != 0) return skip_or_throw("n odd");
    if (n / 2 - 1 < 1) return skip_or_throw("no index with 1 <= i <= n/2 - 1");
    for (int i = 1; i <= n / 2 - 1; ++i) run.reports.push_back(explicit_flag_decomposition(g, i));
  } else if (lemma == "abelian") {
    if (n < 1) return skip_or_throw("needs n >= 1");
    run.reports.push_back(verify_not_decomposable(g));
  } else if (lemma == "orbit") {
    for (auto& r : documented_orbit_checks()) run.reports.push_back(std::move(r));
  } else if (lemma == "separation") {
    if (n < 2) return skip_or_throw("needs n >= 2");
    const std::vector<Word> h0{g.h_bar[0].begin(), g.h_bar[0].end()};
    const std::vector<Word> h2{g.h_bar[2].begin(), g.h_bar[2].end()};
    auto report = cross_conjugacy_scan(h0, h2, config.max_len, config.budget.value_or(100'000));
    report.params["n"] = n;
    run.reports.push_back(std::move(report));
  } else {
    throw PreconditionError("unknown lemma '" + lemma + "'");
  }
}

json gn_to_json(const GnConstruction& g) {
  auto strs = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.str());
    return out;
  };
  json j{{"n", g.n}, {"alphabet", g.alphabet->names()}, {"c", strs(g.c)}, {"d", strs(g.d)}, {"s", strs(g.s)}};
  if (g.rewrite) {
    j["surface_new_basis"] = strs(g.rewrite->new_basis);
    j["surface_residue"] = g.rewrite->identity_residue.str();
  }
  return j;
}

}  // namespace

bool VerifyRun::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

VerifyRun run_all(const CliConfig& config) {
  if (!config.n) throw PreconditionError("--n is required");
  const GnConstruction g = build_gn(*config.n, config.convention);
  const std::string lemma = config.lemma.value_or("all");
  VerifyRun run;
  if (lemma == "all") {
    CliConfig each = config;
    each.i.reset();
    for (const auto& name : kLemmas)
      if (name != "all") add_lemma(run, each, g, name, true);
  } else {
    add_lemma(run, config, g, lemma, false);
  }
  std::stable_sort(run.reports.begin(), run.reports.end(), report_order);
  return run;
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free-group toolkit: word utilities, equivalence relations, and G_n certificates", "fgtool"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string alphabet_csv;
  std::string format = "text";
  std::size_t budget = 0;
  app.add_option("--alphabet", alphabet_csv, "Comma-separated generator names");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget, "Element cap for the separation scan / node budget for Whitehead search")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> words;
  auto* reduce_cmd = app.add_subcommand("reduce", "Freely reduce words (stdin when no word is given)");
  reduce_cmd->add_option("words", words, "Words");

  auto* conj_cmd = app.add_subcommand("conj", "Decide conjugacy of two words");
  conj_cmd->add_option("words", words, "u v")->expected(2)->required();

  auto* root_cmd = app.add_subcommand("root", "Maximal root of a word");
  root_cmd->add_option("words", words, "w")->expected(1)->required();

  auto* primitive_cmd = app.add_subcommand("primitive", "Whitehead primitivity test");
  primitive_cmd->add_option("words", words, "w")->expected(1)->required();

  auto* member_cmd = app.add_subcommand("member", "Subgroup membership: member W GEN...");
  member_cmd->add_option("words", words, "w followed by generators")->required();

  long long m = 1, p = 1, q = 1;
  auto* eq_cmd = app.add_subcommand("eq", "Equivalence relations E0, E1, E2, E3");
  eq_cmd->require_subcommand(1);
  auto* e0_cmd = eq_cmd->add_subcommand("e0", "x y");
  e0_cmd->add_option("words", words)->expected(2)->required();
  auto* e1_cmd = eq_cmd->add_subcommand("e1", "x y x' y'");
  e1_cmd->add_option("--m", m)->check(CLI::PositiveNumber);
  e1_cmd->add_option("words", words)->expected(4)->required();
  auto* e2_cmd = eq_cmd->add_subcommand("e2", "x y x' y'");
  e2_cmd->add_option("--m", m)->check(CLI::PositiveNumber);
  e2_cmd->add_option("words", words)->expected(4)->required();
  auto* e3_cmd = eq_cmd->add_subcommand("e3", "x y z x' y' z'");
  e3_cmd->add_option("--p", p)->check(CLI::PositiveNumber);
  e3_cmd->add_option("--q", q)->check(CLI::PositiveNumber);
  e3_cmd->add_option("words", words)->expected(6)->required();

  int n_value = 0;
  auto* gn_cmd = app.add_subcommand("gn", "The groups G_n");
  gn_cmd->require_subcommand(1);
  auto* build_cmd = gn_cmd->add_subcommand("build", "Print the derived-element table of G_n");
  build_cmd->add_option("--n", n_value)->required()->check(CLI::NonNegativeNumber);

  int i_value = 0;
  std::string lemma = "all";
  std::string convention = "right";
  auto* verify_cmd = app.add_subcommand("verify", "Run certificates for G_n");
  verify_cmd->add_option("--n", n_value)->required()->check(CLI::NonNegativeNumber);
  auto* i_opt = verify_cmd->add_option("--i", i_value, "Flag decomposition index");
  verify_cmd->add_option("--lemma", lemma)->check(CLI::IsMember(kLemmas));
  verify_cmd->add_option("--max-len", config.max_len, "Product length for the separation scan")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--convention", convention, "Twist convention used to build G_n")
      ->check(CLI::IsMember({"right", "left"}));

  std::vector<std::string> argv_storage{"fgtool"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  config.format = format == "json" ? Format::kJson : Format::kText;
  if (budget > 0) config.budget = budget;

  try {
    if (*reduce_cmd) {
      auto alphabet = require_alphabet(alphabet_csv);
      std::vector<std::string> inputs = words;
      if (inputs.empty()) {
        for (std::string line; std::getline(in, line);)
          if (line.find_first_not_of(" \t\r") != std::string::npos) inputs.push_back(line);
      }
      json results = json::array();
      for (const auto& text : inputs) {
        Word w = Word::parse(alphabet, text);
        if (config.format == Format::kJson) {
          results.push_back(w.str());
        } else {
          out << w.str() << '\n';
        }
      }
      if (config.format == Format::kJson) out << json{{"reduced", results}}.dump() << '\n';
      return kExitPass;
    }
    if (*conj_cmd) {
      auto alphabet = require_alphabet(alphabet_csv);
      auto ws = parse_words(alphabet, words);
      return print_bool(out, config.format, is_conjugate(ws[0], ws[1]),
                        {{"canonical", {cyclic_normal_form(ws[0]).canonical.str(), cyclic_normal_form(ws[1]).canonical.str()}}});
    }
    if (*root_cmd) {
      auto alphabet = require_alphabet(alphabet_csv);
      Root r = root(Word::parse(alphabet, words[0]));
      if (config.format == Format::kJson) {
        out << json{{"root", r.base.str()}, {"exponent", r.exponent}}.dump() << '\n';
      } else {
        out << r.base.str() << ' ' << r.exponent << '\n';
      }
      return kExitPass;
    }
    if (*primitive_cmd) {
      auto alphabet = require_alphabet(alphabet_csv);
      return print_bool(out, config.format, is_primitive(Word::parse(alphabet, words[0])));
    }
    if (*member_cmd) {
      auto alphabet = require_alphabet(alphabet_csv);
      auto ws = parse_words(alphabet, words);
      std::vector<Word> gens(ws.begin() + 1, ws.end());
      return print_bool(out, config.format, contains(fold_subgroup(alphabet, gens), ws[0]));
    }
    if (*eq_cmd) {
      auto alphabet = require_alphabet(alphabet_csv);
      auto ws = parse_words(alphabet, words);
      bool result = false;
      if (*e0_cmd) result = e0(ws[0], ws[1]);
      if (*e1_cmd) result = e1(m, ws[0], ws[1], ws[2], ws[3]);
      if (*e2_cmd) result = e2(m, ws[0], ws[1], ws[2], ws[3]);
      if (*e3_cmd) result = e3(p, q, ws[0], ws[1], ws[2], ws[3], ws[4], ws[5]);
      return print_bool(out, config.format, result);
    }
    if (*gn_cmd) {
      const GnConstruction g = build_gn(n_value);
      if (config.format == Format::kJson) {
        out << gn_to_json(g).dump() << '\n';
      } else {
        out << "alphabet: ";
        for (std::size_t k = 0; k < g.alphabet->rank(); ++k) out << (k ? "," : "") << g.alphabet->name(k);
        out << '\n';
        for (int k = 0; k <= g.n; ++k) {
          out << "c" << k << " = " << g.c[k].str() << '\n';
          out << "d" << k << " = " << g.d[k].str() << '\n';
        }
        for (int k = 0; k < g.n; ++k) out << "s" << k << " = " << g.s[k].str() << '\n';
      }
      return kExitPass;
    }
    if (*verify_cmd) {
      config.command = "verify";
      config.n = n_value;
      config.lemma = lemma;
      if (*i_opt) config.i = i_value;
      config.convention = convention == "left" ? TwistConvention::kLeft : TwistConvention::kRight;
      if (config.i && lemma != "flag") throw PreconditionError("--i only applies to --lemma flag");

      const VerifyRun result = run_all(config);
      if (config.format == Format::kJson) {
        if (result.reports.size() == 1 && result.skipped.empty()) {
          out << to_json(result.reports.front()).dump() << '\n';
        } else {
          json reports = json::array();
          for (const auto& r : result.reports) reports.push_back(to_json(r));
          out << json{{"status", result.passed() ? "pass" : "fail"}, {"reports", reports}, {"skipped", result.skipped}}
                     .dump()
              << '\n';
        }
      } else {
        for (const auto& r : result.reports) print_report(out, r);
        for (const auto& s : result.skipped) out << "skipped: " << s << '\n';
        out << "overall: " << (result.passed() ? "pass" : "fail") << '\n';
      }
      return exit_for(result.passed());
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fg::cli
