// arscycle: confluence checking, cycle decomposition, and coherence
// certification for finite (or finitely materialized) rewriting systems.
//
// Exit codes are a stable contract:
//   0  success
//   1  property counterexample (failed span check, coherence counterexample)
//   2  malformed input
//   3  fuel exhausted / non-Noetherian evidence
//   4  internal oracle disagreement (never expected)

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "ars/coherence.hpp"
#include "ars/confluence.hpp"
#include "ars/core.hpp"
#include "ars/decomposition.hpp"
#include "ars/free_group.hpp"
#include "ars/generic_system.hpp"
#include "ars/json_io.hpp"
#include "ars/svk.hpp"
#include "ars/testkit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNonTerminating = 3;
constexpr int kExitOracleDisagreement = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ars::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Which system a subcommand operates on: a JSON file, the built-in
// free-group system, or a list-system instance file.
struct SystemOptions {
  std::string system_path;
  std::string svk_path;
  int freegroup_generators = 0;
  std::size_t max_len = 0;    // word-length bound for --freegroup
  std::size_t max_pairs = 0;  // pair bound for --svk

  void attach(CLI::App* cmd, bool bound_required) {
    auto* src = cmd->add_option_group("input", "system to operate on");
    src->add_option("--system", system_path, "system JSON file ('-' for stdin)");
    src->add_option("--freegroup", freegroup_generators, "free-group system on N generators")
        ->check(CLI::Range(1, 26));
    src->add_option("--svk", svk_path, "pushout list-system instance JSON file");
    src->require_option(1);
    cmd->add_option("--max-len", max_len,
                    bound_required ? "word-length bound for --freegroup (required with it)"
                                   : "word-length bound for --freegroup");
    cmd->add_option("--max-pairs", max_pairs, "pair bound for --svk");
  }

  std::unique_ptr<ars::RewritingSystem> load(bool need_finite) const {
    if (!system_path.empty()) {
      return std::make_unique<ars::GenericFiniteSystem>(
          ars::system_from_json(ars::parse_json_text(read_input(system_path))));
    }
    if (freegroup_generators > 0) {
      std::optional<std::size_t> bound;
      if (max_len > 0) bound = max_len;
      if (need_finite && !bound) {
        throw ars::ParseError("--freegroup needs --max-len for this command");
      }
      return std::make_unique<ars::FreeGroupSystem>(freegroup_generators, bound);
    }
    std::optional<std::size_t> bound;
    if (max_pairs > 0) bound = max_pairs;
    if (need_finite && !bound) {
      throw ars::ParseError("--svk needs --max-pairs for this command");
    }
    return std::make_unique<ars::SvkSystem>(
        ars::svk_instance_from_json(ars::parse_json_text(read_input(svk_path))), bound);
  }
};

std::unique_ptr<ars::Joiner> make_joiner(const std::string& kind,
                                         const ars::RewritingSystem& system) {
  if (kind == "auto") return std::make_unique<ars::AutoJoiner>(system);
  if (kind == "fg") {
    const auto* fg = dynamic_cast<const ars::FreeGroupSystem*>(&system);
    if (!fg) throw ars::ParseError("--joiner fg needs a --freegroup system");
    return std::make_unique<ars::FgJoiner>(fg->generators());
  }
  if (kind == "svk") {
    const auto* svk = dynamic_cast<const ars::SvkSystem*>(&system);
    if (!svk) throw ars::ParseError("--joiner svk needs an --svk system");
    return std::make_unique<ars::SvkJoiner>(*svk);
  }
  throw ars::ParseError("unknown joiner '" + kind + "'");
}

int run_check(const SystemOptions& input, const std::string& joiner_kind, bool json_output) {
  auto system = input.load(/*need_finite=*/true);
  auto joiner = make_joiner(joiner_kind, *system);
  const std::vector<ars::Span> spans = ars::enumerate_spans(*system);
  const ars::ConfluenceReport report = ars::check_local_confluence(*system, *joiner, spans);
  if (json_output) {
    std::cout << ars::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << "spans checked: " << report.entries.size() << ", failures: " << report.failures
              << "\n";
    for (const auto& entry : report.entries) {
      if (entry.status == ars::SpanCheckEntry::Status::Ok) continue;
      std::cout << "  span at '" << entry.span.apex << "' (" << entry.span.left.id << ", "
                << entry.span.right.id << "): " << entry.message << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitCounterexample;
}

int run_decompose(const SystemOptions& input, const std::string& joiner_kind,
                  const std::string& cycle_path, std::size_t fuel, const std::string& format) {
  auto system = input.load(/*need_finite=*/false);
  auto joiner = make_joiner(joiner_kind, *system);
  const ars::Cycle cycle =
      ars::cycle_from_json(ars::parse_json_text(read_input(cycle_path)), *system);
  if (fuel == 0) fuel = ars::default_decompose_fuel(cycle);
  try {
    const ars::DecompositionTrace trace = ars::decompose(*system, *joiner, cycle, fuel);
    if (format == "json") {
      std::cout << ars::trace_to_json(trace).dump(2) << "\n";
    } else {
      std::cout << "decomposed cycle at '" << cycle.basepoint() << "' (length " << cycle.length()
                << ") into " << trace.steps.size() << " confluence cycles, terminal '"
                << trace.terminal << "'\n";
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const ars::DecompStep& s = trace.steps[i];
        std::cout << "  step " << i << ": rotate " << s.rotation << ", span at '" << s.span.apex
                  << "' (" << s.span.left.id << ", " << s.span.right.id << "), remainder length "
                  << s.remainder.length() << "\n";
      }
    }
    return kExitOk;
  } catch (const ars::NonNoetherianError& e) {
    std::cerr << "non-Noetherian evidence: " << e.what() << "\n";
    std::cerr << "cycle: " << ars::chain_to_json(e.evidence().chain).dump() << "\n";
    return kExitNonTerminating;
  } catch (const ars::FuelExhaustedError& e) {
    std::cerr << e.what() << "\n";
    return kExitNonTerminating;
  }
}

ars::EdgeLabelling load_labelling(const std::string& spec, const ars::RewritingSystem& system) {
  if (spec == "@fg-letters") {
    const auto* fg = dynamic_cast<const ars::FreeGroupSystem*>(&system);
    if (!fg) throw ars::ParseError("@fg-letters needs a --freegroup system");
    return ars::word_value_labelling(std::make_shared<ars::FreeGroupTarget>(fg->generators()));
  }
  return ars::labelling_from_json(ars::parse_json_text(read_input(spec)));
}

int run_coherence(const SystemOptions& input, const std::string& joiner_kind,
                  const std::string& labelling_spec, std::size_t oracle_bound, bool json_output) {
  auto system = input.load(/*need_finite=*/true);
  auto joiner = make_joiner(joiner_kind, *system);
  const ars::EdgeLabelling labelling = load_labelling(labelling_spec, *system);
  const std::vector<ars::Span> spans = ars::enumerate_spans(*system);
  const ars::CoherenceVerdict verdict =
      ars::check_confluence_coherence(*system, *joiner, labelling, spans);

  ars::Json out = ars::verdict_to_json(verdict);
  bool disagreement = false;
  if (oracle_bound > 0) {
    const ars::BruteCoherenceResult oracle =
        ars::brute_coherence(*system, labelling, ars::EnumerationBound{oracle_bound, {}, {}});
    disagreement = verdict.certified != oracle.all_identity;
    out["oracle"] = ars::Json{{"cycles_checked", oracle.cycles_checked},
                              {"all_identity", oracle.all_identity},
                              {"agrees", !disagreement}};
    if (oracle.failing) out["oracle"]["failing_cycle"] = ars::chain_to_json(oracle.failing->chain);
  }
  if (json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (verdict.certified ? "certified" : "counterexample") << " after "
              << verdict.spans_checked << " spans\n";
    if (verdict.span) {
      std::cout << "  span at '" << verdict.span->apex << "' (" << verdict.span->left.id << ", "
                << verdict.span->right.id << ") evaluates to '" << *verdict.morphism << "'\n";
    }
    if (oracle_bound > 0) {
      std::cout << "  oracle over cycles <= " << oracle_bound << ": "
                << (disagreement ? "DISAGREES" : "agrees") << "\n";
    }
  }
  if (disagreement) return kExitOracleDisagreement;
  return verdict.certified ? kExitOk : kExitCounterexample;
}

int run_enumerate(const SystemOptions& input, std::size_t bound, const std::string& basepoint,
                  bool json_output) {
  auto system = input.load(/*need_finite=*/true);
  ars::EnumerationBound b{bound, {}, {}};
  if (!basepoint.empty()) b.basepoint = ars::VertexId{basepoint};
  const std::vector<ars::Cycle> cycles = ars::enumerate_cycles(*system, b);
  if (json_output) {
    ars::Json out = ars::Json::array();
    for (const ars::Cycle& c : cycles) out.push_back(ars::chain_to_json(c.chain));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << cycles.size() << " cycles of length <= " << bound << "\n";
    for (const ars::Cycle& c : cycles) {
      std::cout << "  " << ars::chain_to_json(c.chain).dump() << "\n";
    }
  }
  return kExitOk;
}

int run_freegroup(int generators, std::size_t max_len, const std::string& out_path) {
  const ars::FreeGroupSystem system(generators, max_len);
  const ars::Json j = ars::system_to_json(system);
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw ars::ParseError("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle decomposition and coherence checking for rewriting systems"};
  app.require_subcommand(1);

  SystemOptions check_input;
  std::string check_joiner = "auto";
  bool check_json = false;
  auto* check = app.add_subcommand("check", "validate local confluence over all spans");
  check_input.attach(check, true);
  check->add_option("--joiner", check_joiner, "auto|fg|svk")->default_str("auto");
  check->add_flag("--json", check_json, "JSON report on stdout");

  SystemOptions dec_input;
  std::string dec_joiner = "auto";
  std::string dec_cycle;
  std::size_t dec_fuel = 0;
  std::string dec_format = "text";
  auto* dec = app.add_subcommand("decompose", "decompose a cycle into confluence cycles");
  dec_input.attach(dec, false);
  dec->add_option("--cycle", dec_cycle, "cycle JSON file ('-' for stdin)")->required();
  dec->add_option("--joiner", dec_joiner, "auto|fg|svk")->default_str("auto");
  dec->add_option("--fuel", dec_fuel, "step budget (default 16*(len+1)^2)");
  dec->add_option("--format", dec_format, "text|json")->check(CLI::IsMember({"text", "json"}));

  SystemOptions coh_input;
  std::string coh_joiner = "auto";
  std::string coh_labelling;
  std::size_t coh_oracle = 0;
  bool coh_json = false;
  auto* coh = app.add_subcommand("coherence", "certify a labelling over confluence cycles");
  coh_input.attach(coh, true);
  coh->add_option("--labelling", coh_labelling, "labelling JSON file, or @fg-letters")->required();
  coh->add_option("--joiner", coh_joiner, "auto|fg|svk")->default_str("auto");
  coh->add_option("--oracle-bound", coh_oracle,
                  "also brute-force all cycles up to this length and compare");
  coh->add_flag("--json", coh_json, "JSON verdict on stdout");

  SystemOptions enum_input;
  std::size_t enum_bound = 4;
  std::string enum_basepoint;
  bool enum_json = false;
  auto* enumerate = app.add_subcommand("enumerate", "list all cycles up to a length bound");
  enum_input.attach(enumerate, true);
  enumerate->add_option("--bound", enum_bound, "maximum cycle length");
  enumerate->add_option("--basepoint", enum_basepoint, "only cycles based at this vertex");
  enumerate->add_flag("--json", enum_json, "JSON array on stdout");

  int fg_generators = 1;
  std::size_t fg_max_len = 4;
  std::string fg_out;
  auto* fg = app.add_subcommand("freegroup", "emit a bounded free-group system as JSON");
  fg->add_option("--generators", fg_generators, "number of generators")
      ->required()
      ->check(CLI::Range(1, 26));
  fg->add_option("--max-len", fg_max_len, "maximum word length")->required();
  fg->add_option("-o,--output", fg_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (check->parsed()) return run_check(check_input, check_joiner, check_json);
    if (dec->parsed()) return run_decompose(dec_input, dec_joiner, dec_cycle, dec_fuel, dec_format);
    if (coh->parsed())
      return run_coherence(coh_input, coh_joiner, coh_labelling, coh_oracle, coh_json);
    if (enumerate->parsed())
      return run_enumerate(enum_input, enum_bound, enum_basepoint, enum_json);
    if (fg->parsed()) return run_freegroup(fg_generators, fg_max_len, fg_out);
  } catch (const ars::FuelExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonTerminating;
  } catch (const ars::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
