// Acceptance checks.  Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.  Reference values come from the brute-force
// oracles in oracles.hpp or from direct evaluation of the closed formulas.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "sidon/bound_analysis.hpp"
#include "sidon/constructor.hpp"
#include "sidon/sidon_engine.hpp"

using sidon::FiniteSet;
using sidon::Integer;
using sidon::LinearForm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < limit_seconds;
  const bool pass = outcome.ok && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << outcome.detail << " (" << seconds
       << " s, limit " << limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << ")";
  std::cout << line.str() << std::endl;
}

const std::vector<std::string> kForms = {"1,3", "1,-2", "1,2,4", "2,3,7"};

// Random phi-Sidon sets with |A| <= 6 and 50 candidates b around max(A).
struct Instance {
  LinearForm form;
  std::vector<Integer> set;
  std::vector<Integer> candidates;
};

std::vector<Instance> instance_family(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (int round = 0; round < 64; ++round) {
    LinearForm form = LinearForm::parse(kForms[round % kForms.size()]);
    const long range = form.arity() == 2 ? 150 : 1200;
    auto set = oracle::random_sidon_set(form.coeffs(), 1 + rng() % 6, range, rng);
    std::vector<Integer> candidates;
    for (long d = -25; d < 25; ++d) candidates.push_back(set.back() + d);
    out.push_back({std::move(form), std::move(set), std::move(candidates)});
  }
  return out;
}

bool contains(const std::vector<Integer>& values, const Integer& v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

Outcome extension_equivalence() {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t extendable = 0;
  for (const Instance& inst : instance_family(1)) {
    const FiniteSet set(inst.set);
    for (const Integer& b : inst.candidates) {
      if (contains(inst.set, b)) continue;
      const bool fast = sidon::can_extend(inst.form, set, b).extendable;
      const bool slow = oracle::is_sidon(inst.form.coeffs(), oracle::with(inst.set, b));
      ++cases;
      extendable += slow ? 1 : 0;
      mismatches += fast != slow ? 1 : 0;
    }
  }
  return {cases >= 2000 && mismatches == 0,
          std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(extendable) + " extendable"};
}

Outcome forbidden_equivalence() {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  for (const Instance& inst : instance_family(2)) {
    const FiniteSet set(inst.set);
    const auto forbidden = sidon::forbidden_values(inst.form, set);
    const std::set<Integer> blocked(forbidden.begin(), forbidden.end());
    for (const Integer& b : inst.candidates) {
      if (contains(inst.set, b)) continue;
      ++cases;
      if (sidon::can_extend(inst.form, set, b).extendable != (blocked.count(b) == 0)) ++mismatches;
    }
  }
  return {cases >= 2000 && mismatches == 0,
          std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

Outcome poly_reproduction() {
  std::size_t runs = 0;
  std::string problems;
  for (const std::string form_text : {"1,3", "1,2,4"}) {
    for (const std::string spec : {"squares", "primes", "arith:1,1"}) {
      const LinearForm form = LinearForm::parse(form_text);
      auto b = sidon::parse_sequence_spec(spec);
      const auto trace = sidon::construct_poly(form, b, 12);
      const std::size_t h = form.arity();
      ++runs;
      const auto chosen = trace.chosen();
      const std::set<Integer> distinct(chosen.begin(), chosen.end());
      if (distinct.size() != 12 ||
          !oracle::is_sidon(form.coeffs(), std::vector<Integer>(distinct.begin(), distinct.end()))) {
        problems += " " + form_text + "/" + spec + ":not-sidon";
      }
      for (const auto& step : trace.steps) {
        const Integer n(static_cast<unsigned long>(step.k - 1));
        const Integer k(static_cast<unsigned long>(step.k));
        Integer step_limit = n;
        Integer global = 1;
        Integer four_h = 1;
        for (std::size_t i = 0; i < h; ++i) four_h *= 4;
        Integer n_pow = 1;
        for (std::size_t i = 0; i + 1 < 2 * h; ++i) n_pow *= n;
        step_limit += four_h * n_pow;
        for (std::size_t i = 0; i < 4 * h; ++i) global *= k;
        if (abs(step.chosen - step.target) != step.deviation || step.deviation > step_limit ||
            step.deviation >= global) {
          problems += " " + form_text + "/" + spec + ":k=" + std::to_string(step.k);
        }
      }
    }
  }
  return {problems.empty(), std::to_string(runs) + " constructions of 12 terms" +
                                (problems.empty() ? ", all bounds hold" : ", violations:" + problems)};
}

Outcome inequality_sweep() {
  const auto sweep = sidon::bound_sweep(6, 10000);
  std::string detail = std::to_string(sweep.checked) + " (h, n) pairs";
  if (sweep.first_failure) {
    detail += ", first failure h=" + std::to_string(sweep.first_failure->first) +
              " n=" + std::to_string(sweep.first_failure->second);
  }
  return {sweep.all_hold() && sweep.checked == 60000, detail};
}

Outcome bounded_reproduction() {
  const LinearForm form = LinearForm::parse("1,3");
  const Integer m(1);
  auto b = sidon::parse_sequence_spec("affine-geom:2,5,6");
  const std::size_t terms = 8;
  const auto targets = b.prefix(terms);
  if (!sidon::check_growth(form, b, m, terms).pass()) return {false, "B fails the growth check"};

  std::string detail;
  bool ok = true;
  for (long m0 = 1; m0 <= 2; ++m0) {
    std::size_t leaves = 0;
    std::size_t bad = 0;
    std::vector<Integer> chosen;
    // Every integer a with |a - b_k| < m0, at every step including the first.
    std::function<void(std::size_t)> branch = [&](std::size_t k) {
      if (k > terms) {
        ++leaves;
        const std::set<Integer> distinct(chosen.begin(), chosen.end());
        if (distinct.size() != terms ||
            !oracle::is_sidon(form.coeffs(), std::vector<Integer>(distinct.begin(), distinct.end()))) {
          ++bad;
        }
        return;
      }
      for (long d = -(m0 - 1); d <= m0 - 1; ++d) {
        chosen.push_back(targets[k - 1] + d);
        branch(k + 1);
        chosen.pop_back();
      }
    };
    branch(1);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < terms; ++i) expected *= static_cast<std::size_t>(2 * m0 - 1);
    ok = ok && bad == 0 && leaves == expected;
    detail += "m0=" + std::to_string(m0) + ": " + std::to_string(leaves) + " leaves, " + std::to_string(bad) +
              " non-Sidon; ";
  }
  const auto trace = sidon::construct_bounded(form, b, m, sidon::Rational(1), terms);
  const bool library_ok = trace.chosen() == targets && oracle::is_sidon(form.coeffs(), trace.chosen());
  detail += std::string("construct_bounded m0=1 ") + (library_ok ? "ok" : "mismatch");
  return {ok && library_ok, detail};
}

Outcome window_certificate() {
  const LinearForm form = LinearForm::parse("1,3");
  auto b = sidon::parse_sequence_spec("arith:1,1");
  const auto found = sidon::refute_bounded(form, b, Integer(5), 200);
  if (!found) return {false, "no certificate within K=200"};
  // Direct evaluation: lhs = (t-s+1)^2, rhs = 4 (b_t - b_s + 10) - 1 with b_k = k.
  const auto lhs = [](long s, long t) { return Integer((t - s + 1) * (t - s + 1)); };
  const auto rhs = [](long s, long t) { return Integer(4 * (t - s + 10) - 1); };
  const long s = static_cast<long>(found->s);
  const long t = static_cast<long>(found->t);
  const auto wide = sidon::window_certificate(form, b, Integer(5), 1, 100);
  const bool ok = found->lhs == lhs(s, t) && found->rhs == rhs(s, t) && found->lhs > found->rhs &&
                  wide.lhs == 10000 && wide.rhs == 435 && lhs(1, 100) == 10000 && rhs(1, 100) == 435;
  return {ok, "s=" + std::to_string(s) + " t=" + std::to_string(t) + " lhs=" + sidon::to_decimal(found->lhs) +
                  " rhs=" + sidon::to_decimal(found->rhs) + "; s=1 t=100 lhs=" + sidon::to_decimal(wide.lhs) +
                  " rhs=" + sidon::to_decimal(wide.rhs)};
}

Outcome cross_regime() {
  std::size_t sequences = 0;
  std::size_t refuted = 0;
  std::size_t constructed = 0;
  std::size_t subset_failures = 0;
  for (const std::string& form_text : kForms) {
    const LinearForm form = LinearForm::parse(form_text);
    const Integer c = form.norm();
    for (long m = 0; m <= 2; ++m) {
      bool built = false;
      for (long start = 1; start <= 6; ++start) {
        for (long extra_ratio = 1; extra_ratio <= 3; ++extra_ratio) {
          for (long offset = 0; offset <= 12; offset += 3) {
            const std::string spec = "affine-geom:" + std::to_string(start) + "," +
                                     sidon::to_decimal(c + extra_ratio - 1) + "," + std::to_string(offset);
            auto b = sidon::parse_sequence_spec(spec);
            if (!sidon::check_growth(form, b, Integer(m), 50).pass()) continue;
            ++sequences;
            for (long m0 = 1; m0 <= 10; ++m0) {
              if (sidon::refute_bounded(form, b, Integer(m0), 50)) ++refuted;
            }
            if (built) continue;
            built = true;
            // Constructed sets of 8 terms: every subset stays phi-Sidon.
            std::vector<std::vector<Integer>> sets;
            sets.push_back(sidon::construct_bounded(form, b, Integer(m), sidon::Rational(std::max(m, 1L)), 8).chosen());
            auto poly_b = sidon::parse_sequence_spec(spec);
            sets.push_back(sidon::construct_poly(form, poly_b, 8).chosen());
            for (const auto& chosen : sets) {
              ++constructed;
              const FiniteSet full = FiniteSet::from_unsorted(chosen);
              for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << full.size()); ++mask) {
                std::vector<Integer> subset;
                for (std::size_t i = 0; i < full.size(); ++i) {
                  if ((mask >> i) & 1U) subset.push_back(full[i]);
                }
                if (!sidon::is_sidon(form, FiniteSet(subset)).sidon || !oracle::is_sidon(form.coeffs(), subset)) {
                  ++subset_failures;
                }
              }
            }
          }
        }
      }
    }
  }
  return {sequences > 0 && refuted == 0 && constructed > 0 && subset_failures == 0,
          std::to_string(sequences) + " growth-passing B x 10 values of m0, " + std::to_string(refuted) +
              " refuted; " + std::to_string(constructed) + " constructed sets, " + std::to_string(subset_failures) +
              " failing subsets"};
}

Outcome determinism() {
  std::vector<std::string> commands;
  for (const std::string form_text : {"1,3", "1,2,4"}) {
    for (const std::string spec : {"squares", "primes", "arith:1,1"}) {
      commands.push_back("construct --form " + form_text + " --sequence " + spec + " --terms 12");
    }
  }
  commands.push_back("refute --form 1,3 --sequence arith:1,1 --m0 5 --limit 200");
  std::size_t compared = 0;
  std::string problems;
  for (const std::string& command : commands) {
    const CliResult reference = run_cli(command + " --threads 1");
    if (reference.code != 0 || reference.out.empty()) problems += " [" + command + " exit " + std::to_string(reference.code) + "]";
    for (int repeat = 0; repeat < 2; ++repeat) {
      for (const char* threads : {" --threads 1", " --threads 8"}) {
        const CliResult again = run_cli(command + threads);
        ++compared;
        if (again.out != reference.out || again.code != reference.code) problems += " [" + command + threads + "]";
      }
    }
  }
  return {problems.empty(), std::to_string(commands.size()) + " commands, " + std::to_string(compared) +
                                " reruns compared byte for byte" + (problems.empty() ? "" : "; differences:" + problems)};
}

}  // namespace

int main() {
  report(1, "can_extend agrees with brute-force is_sidon", 60, extension_equivalence);
  report(2, "can_extend agrees with forbidden_values", 120, forbidden_equivalence);
  report(3, "polynomial-perturbation construction, K=12", 60, poly_reproduction);
  report(4, "deviation bound inequality sweep, h<=6, n<=10^4", 30, inequality_sweep);
  report(5, "bounded-perturbation construction, exhaustive branching", 300, bounded_reproduction);
  report(6, "window certificate for b_k=k, m0=5", 10, window_certificate);
  report(7, "cross-regime consistency", 120, cross_regime);
  report(8, "CLI output identical across runs and thread counts", 120, determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
