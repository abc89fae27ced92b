// Command-line front end.  Links only against the C API in libsidon.
//
// Exit codes: 0 success / true verdict, 1 checked-false verdict,
// 2 usage or precondition error, 3 budget refusal, 4 internal error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sidon/sidon.h"

namespace {

enum ExitCode : int { kSuccess = 0, kFalse = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

struct Handles {
  std::unique_ptr<sidon_form, decltype(&sidon_form_free)> form{nullptr, &sidon_form_free};
  std::unique_ptr<sidon_set, decltype(&sidon_set_free)> set{nullptr, &sidon_set_free};
  std::unique_ptr<sidon_sequence, decltype(&sidon_sequence_free)> sequence{nullptr, &sidon_sequence_free};
  std::unique_ptr<sidon_trace, decltype(&sidon_trace_free)> trace{nullptr, &sidon_trace_free};
};

// Thrown after a failed C call; carries the process exit code.
struct CallFailed {
  int code;
};

void check(sidon_status status) {
  if (status == SIDON_OK) return;
  std::cerr << "sidon: " << sidon_status_name(status) << ": " << sidon_last_error() << '\n';
  switch (status) {
    case SIDON_ERR_BUDGET: throw CallFailed{kBudget};
    case SIDON_ERR_INTERNAL: throw CallFailed{kInternal};
    default: throw CallFailed{kUsage};
  }
}

std::string take(char* text) {
  std::string out = text == nullptr ? std::string() : std::string(text);
  sidon_string_free(text);
  return out;
}

struct RunConfig {
  std::string form;
  std::string set;
  std::string sequence;
  std::string mode = "poly";
  std::size_t terms = 10;
  std::size_t limit = 200;
  std::string m = "0";
  std::string m0;
  std::string epsilon;
  std::size_t arity = 2;
  std::size_t max_arity = 6;
  std::uint64_t max_n = 10000;
  std::string out;
  std::string format = "json";
  std::uint64_t tuple_budget = 100'000'000;
  std::uint64_t forbidden_budget = 100'000'000;
  std::uint32_t arity_limit = 20;
  std::uint32_t threads = std::max(1U, std::thread::hardware_concurrency());
  bool pretty = false;

  sidon_options options() const {
    sidon_options o;
    sidon_options_init(&o);
    o.tuple_budget = tuple_budget;
    o.forbidden_budget = forbidden_budget;
    o.arity_limit = arity_limit;
    o.threads = threads;
    return o;
  }
};

void print(const RunConfig& config, const std::string& json, const std::string& summary) {
  if (config.pretty) {
    std::cout << nlohmann::ordered_json::parse(json).dump(2) << '\n';
    std::cerr << summary << '\n';
  } else {
    std::cout << json << '\n';
  }
}

sidon_form* load_form(const RunConfig& config) {
  sidon_form* form = nullptr;
  check(sidon_form_parse(config.form.c_str(), &form));
  return form;
}

sidon_sequence* load_sequence(const RunConfig& config) {
  sidon_sequence* sequence = nullptr;
  check(sidon_sequence_parse(config.sequence.c_str(), &sequence));
  return sequence;
}

// --set accepts a bare CSV, list:, file:, or any sequence spec together with --terms.
sidon_set* load_set(const RunConfig& config, bool terms_given) {
  sidon_set* set = nullptr;
  const std::string& text = config.set;
  const bool finite = text.rfind("list:", 0) == 0 || text.rfind("file:", 0) == 0 ||
                      text.find_first_not_of("0123456789+-, ") == std::string::npos;
  if (finite && !terms_given) {
    check(sidon_set_parse(text.c_str(), &set));
    return set;
  }
  sidon_sequence* raw = nullptr;
  check(sidon_sequence_parse(text.c_str(), &raw));
  std::unique_ptr<sidon_sequence, decltype(&sidon_sequence_free)> sequence(raw, &sidon_sequence_free);
  if (!terms_given) {
    std::cerr << "sidon: infinite sequence '" << text << "' needs --terms\n";
    throw CallFailed{kUsage};
  }
  check(sidon_set_from_sequence(sequence.get(), config.terms, &set));
  return set;
}

int run_check_form(const RunConfig& config) {
  Handles h;
  h.form.reset(load_form(config));
  const sidon_options options = config.options();
  int holds = 0;
  char* json = nullptr;
  check(sidon_check_form(h.form.get(), &options, &holds, &json));
  print(config, take(json), holds ? "property N holds" : "property N fails");
  return holds ? kSuccess : kFalse;
}

int run_verify(const RunConfig& config, bool terms_given) {
  Handles h;
  h.form.reset(load_form(config));
  h.set.reset(load_set(config, terms_given));
  const sidon_options options = config.options();
  int sidon = 0;
  char* json = nullptr;
  check(sidon_verify(h.form.get(), h.set.get(), &options, &sidon, &json));
  print(config, take(json), sidon ? "the set is phi-Sidon" : "the set is not phi-Sidon");
  return sidon ? kSuccess : kFalse;
}

int run_construct(const RunConfig& config, bool m0_given) {
  Handles h;
  h.form.reset(load_form(config));
  h.sequence.reset(load_sequence(config));
  const sidon_options options = config.options();
  const sidon_trace_format format = config.format == "csv" ? SIDON_TRACE_CSV : SIDON_TRACE_JSON;
  sidon_trace* trace = nullptr;
  if (config.mode == "poly") {
    check(sidon_construct_poly(h.form.get(), h.sequence.get(), config.terms, &options, &trace));
  } else {
    check(sidon_construct_bounded(h.form.get(), h.sequence.get(), config.m.c_str(),
                                  m0_given ? config.m0.c_str() : nullptr, config.terms, nullptr, 0, &options,
                                  &trace));
  }
  h.trace.reset(trace);

  if (config.out.empty()) {
    char* text = nullptr;
    check(sidon_trace_render(h.trace.get(), format, &text));
    std::string rendered = take(text);
    if (format == SIDON_TRACE_JSON) {
      rendered.pop_back();  // print() adds the newline back
      print(config, rendered, "constructed " + std::to_string(sidon_trace_length(h.trace.get())) + " terms");
    } else {
      std::cout << rendered;
    }
    return kSuccess;
  }
  check(sidon_trace_write(h.trace.get(), format, config.out.c_str()));
  nlohmann::ordered_json summary;
  summary["mode"] = config.mode;
  summary["terms"] = sidon_trace_length(h.trace.get());
  summary["format"] = config.format;
  summary["out"] = config.out;
  print(config, summary.dump(), "wrote " + config.out);
  return kSuccess;
}

int run_growth(const RunConfig& config) {
  Handles h;
  h.form.reset(load_form(config));
  h.sequence.reset(load_sequence(config));
  int pass = 0;
  char* json = nullptr;
  check(sidon_check_growth(h.form.get(), h.sequence.get(), config.m.c_str(), config.terms, &pass, &json));
  print(config, take(json), pass ? "growth condition holds on the prefix" : "growth condition fails");
  return pass ? kSuccess : kFalse;
}

int run_refute(const RunConfig& config) {
  Handles h;
  h.form.reset(load_form(config));
  h.sequence.reset(load_sequence(config));
  int found = 0;
  char* json = nullptr;
  check(sidon_refute_bounded(h.form.get(), h.sequence.get(), config.m0.c_str(), config.limit, &found, &json));
  print(config, take(json), found ? "certificate found" : "no certificate within the limit");
  return found ? kSuccess : kFalse;
}

int run_density(const RunConfig& config) {
  Handles h;
  h.sequence.reset(load_sequence(config));
  int pass = 0;
  char* json = nullptr;
  check(sidon_density_check(h.sequence.get(), config.arity, config.epsilon.c_str(), config.terms, &pass, &json));
  print(config, take(json), pass ? "density condition holds" : "density condition fails");
  return pass ? kSuccess : kFalse;
}

int run_bound_sweep(const RunConfig& config) {
  int all_hold = 0;
  char* json = nullptr;
  check(sidon_bound_sweep(config.max_arity, config.max_n, &all_hold, &json));
  print(config, take(json), all_hold ? "inequality holds on the whole grid" : "inequality fails");
  return all_hold ? kSuccess : kFalse;
}

void add_common(CLI::App* command, RunConfig& config) {
  command->add_option("--threads", config.threads, "Worker threads (results do not depend on it)")
      ->envname("SIDON_THREADS")
      ->check(CLI::PositiveNumber);
  command->add_option("--tuple-budget", config.tuple_budget, "Max h-tuples per enumeration")
      ->envname("SIDON_TUPLE_BUDGET");
  command->add_option("--forbidden-budget", config.forbidden_budget, "Max value pairs for forbidden-value oracles")
      ->envname("SIDON_FORBIDDEN_BUDGET");
  command->add_option("--arity-limit", config.arity_limit, "Max arity for the exhaustive property-N check")
      ->envname("SIDON_ARITY_LIMIT");
  command->add_flag("--pretty", config.pretty, "Indent JSON and print a summary line on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify Sidon sets for integer linear forms"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  RunConfig config;

  auto* check_form = app.add_subcommand("check-form", "Decide property N for a linear form");
  check_form->add_option("--form", config.form, "Coefficients, e.g. 1,3")->required();
  add_common(check_form, config);

  auto* verify = app.add_subcommand("verify", "Brute-force phi-Sidon check of a finite set");
  verify->add_option("--form", config.form, "Coefficients, e.g. 1,3")->required();
  verify->add_option("--set", config.set, "CSV, list:<csv>, file:<path>, or a sequence spec with --terms")
      ->required();
  auto* verify_terms = verify->add_option("--terms", config.terms, "Prefix length when --set is a generator");
  add_common(verify, config);

  auto* construct = app.add_subcommand("construct", "Greedy construction tracking a sequence");
  construct->add_option("--form", config.form, "Coefficients, e.g. 1,3")->required();
  construct->add_option("--mode", config.mode, "poly or bounded")->check(CLI::IsMember({"poly", "bounded"}));
  construct->add_option("--sequence", config.sequence, "Sequence spec, e.g. squares")->required();
  construct->add_option("--terms", config.terms, "Number of terms K");
  construct->add_option("--m", config.m, "Growth slack m (bounded mode)");
  auto* construct_m0 =
      construct->add_option("--m0", config.m0, "Perturbation bound m0, p/q or integer (bounded; default max(m,1))");
  construct->add_option("--out", config.out, "Write the trace here instead of stdout");
  construct->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(construct, config);

  auto* growth = app.add_subcommand("growth", "Check b_1 > m and b_{k+1} > C b_k + (C+1) m on a prefix");
  growth->add_option("--form", config.form, "Coefficients, e.g. 1,3")->required();
  growth->add_option("--sequence", config.sequence, "Sequence spec")->required();
  growth->add_option("--m", config.m, "Growth slack m");
  growth->add_option("--terms", config.terms, "Prefix length K");
  add_common(growth, config);

  auto* refute = app.add_subcommand("refute", "Search for a window certificate against bounded perturbations");
  refute->add_option("--form", config.form, "Coefficients, e.g. 1,3")->required();
  refute->add_option("--sequence", config.sequence, "Sequence spec")->required();
  refute->add_option("--m0", config.m0, "Asserted perturbation bound (positive integer)")->required();
  refute->add_option("--limit", config.limit, "Largest window end t");
  add_common(refute, config);

  auto* density = app.add_subcommand("density", "Check |b_t - b_s| <= (t-s+1)^(h-epsilon) on a prefix");
  // --h is the arity here, so help is long-form only.
  density->set_help_flag("--help", "Print this help message and exit");
  density->add_option("--sequence", config.sequence, "Sequence spec")->required();
  density->add_option("--h", config.arity, "Arity h")->check(CLI::PositiveNumber);
  density->add_option("--epsilon", config.epsilon, "Positive rational p/q")->required();
  density->add_option("--terms", config.terms, "Prefix length K");
  add_common(density, config);

  auto* sweep = app.add_subcommand("bound-sweep", "Check 4^h n^(2h-1) + n < (n+1)^(4h) on a grid");
  sweep->add_option("--max-h", config.max_arity, "Largest h")->check(CLI::PositiveNumber);
  sweep->add_option("--max-n", config.max_n, "Largest n")->check(CLI::PositiveNumber);
  add_common(sweep, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (check_form->parsed()) return run_check_form(config);
    if (verify->parsed()) return run_verify(config, verify_terms->count() > 0);
    if (construct->parsed()) return run_construct(config, construct_m0->count() > 0);
    if (growth->parsed()) return run_growth(config);
    if (refute->parsed()) return run_refute(config);
    if (density->parsed()) return run_density(config);
    if (sweep->parsed()) return run_bound_sweep(config);
  } catch (const CallFailed& failed) {
    return failed.code;
  } catch (const std::exception& e) {
    std::cerr << "sidon: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
