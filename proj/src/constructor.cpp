#include "sidon/constructor.hpp"

#include <string>

#include "sidon/error.hpp"
#include "sidon/sidon_engine.hpp"

namespace sidon {

const char* mode_name(ConstructionMode mode) noexcept {
  return mode == ConstructionMode::kPolynomial ? "poly" : "bounded";
}

std::vector<Integer> ConstructionTrace::chosen() const {
  std::vector<Integer> out;
  out.reserve(steps.size());
  for (const TraceStep& step : steps) out.push_back(step.chosen);
  return out;
}

Integer poly_step_bound(std::size_t arity, std::uint64_t n) {
  const Integer count(static_cast<unsigned long>(n));
  return ipow(Integer(4), arity) * ipow(count, 2 * arity - 1) + count;
}

namespace {

void require_property_n(const LinearForm& form, const EngineOptions& options) {
  const PropertyNReport report = check_property_n(form, options);
  if (!report.holds) {
    fail(ErrorKind::kPrecondition, "the linear form lacks property N; only singleton phi-Sidon sets exist");
  }
}

Integer ceil_of(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace

ConstructionTrace construct_poly(const LinearForm& form, IntSequence& sequence, std::size_t terms,
                                 const EngineOptions& options) {
  require_property_n(form, options);
  ConstructionTrace trace;
  trace.mode = ConstructionMode::kPolynomial;
  if (terms == 0) return trace;

  const std::size_t h = form.arity();
  const Integer& first = sequence.at(1);
  FiniteSet chosen({first});
  trace.steps.push_back(TraceStep{1, first, first, Integer(0), Integer(0), Integer(1), 1});

  for (std::size_t k = 2; k <= terms; ++k) {
    const std::uint64_t n = k - 1;
    const Integer target = sequence.at(k);
    const Integer radius = poly_step_bound(h, n);

    std::uint64_t examined = 0;
    Integer offset(0);
    std::optional<Integer> accepted;
    // Offsets 0, +1, -1, +2, -2, ...
    while (!accepted) {
      if (abs(offset) > radius) {
        fail(ErrorKind::kInternal, "greedy scan at step " + std::to_string(k) + " passed the proven radius " +
                                       to_decimal(radius) + " without finding an admissible value");
      }
      const Integer candidate = target + offset;
      ++examined;
      if (!chosen.contains(candidate) && can_extend(form, chosen, candidate, options).extendable) {
        accepted = candidate;
      }
      offset = offset > 0 ? Integer(-offset) : Integer(1 - offset);
    }

    TraceStep step;
    step.k = k;
    step.target = target;
    step.chosen = *accepted;
    step.deviation = abs(*accepted - target);
    step.step_bound = radius;
    step.global_bound = ipow(Integer(static_cast<unsigned long>(k)), 4 * h);
    step.candidates_examined = examined;
    chosen = chosen.with(*accepted);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

GrowthCheck check_growth(const LinearForm& form, IntSequence& sequence, const Integer& m, std::size_t terms) {
  if (m < 0) fail(ErrorKind::kPrecondition, "m must be nonnegative");
  const std::vector<Integer> values = sequence.prefix(terms);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) {
      fail(ErrorKind::kPrecondition, "sequence term " + std::to_string(i + 1) + " is not positive");
    }
    if (i > 0 && values[i] <= values[i - 1]) {
      fail(ErrorKind::kPrecondition, "sequence is not strictly increasing at term " + std::to_string(i + 1));
    }
  }

  GrowthCheck check;
  check.norm = form.norm();
  check.m = m;
  if (values.empty()) return check;
  if (values[0] <= m) {
    check.first_violation = GrowthViolation{GrowthViolation::Kind::kStart, 1};
    return check;
  }
  const Integer slack = (form.norm() + 1) * m;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] <= form.norm() * values[k - 1] + slack) {
      check.first_violation = GrowthViolation{GrowthViolation::Kind::kGrowth, k};
      break;
    }
  }
  return check;
}

std::pair<Integer, Integer> bounded_interval(const Integer& target, const Rational& m0) {
  const Integer reach = ceil_of(m0) - 1;
  Integer low = target - reach;
  if (low < 1) low = 1;
  return {low, target + reach};
}

ConstructionTrace construct_bounded(const LinearForm& form, IntSequence& sequence, const Integer& m,
                                    const Rational& m0, std::size_t terms, const BoundedChooser& chooser,
                                    const EngineOptions& options) {
  if (m < 0) fail(ErrorKind::kPrecondition, "m must be nonnegative");
  const Integer ceiling = m > 1 ? m : Integer(1);
  if (m0 <= 0 || m0 > Rational(ceiling)) {
    fail(ErrorKind::kPrecondition, "m0 = " + to_string(m0) + " out of range: need 0 < m0 <= " + to_decimal(ceiling));
  }
  require_property_n(form, options);
  const GrowthCheck growth = check_growth(form, sequence, m, terms);
  if (!growth.pass()) {
    const GrowthViolation& v = *growth.first_violation;
    fail(ErrorKind::kPrecondition,
         v.kind == GrowthViolation::Kind::kStart
             ? std::string("growth check failed: b_1 <= m")
             : "growth check failed: b_" + std::to_string(v.k + 1) + " <= C b_" + std::to_string(v.k) + " + (C+1) m");
  }

  ConstructionTrace trace;
  trace.mode = ConstructionMode::kBounded;
  if (terms == 0) return trace;

  const Integer global_bound = ceil_of(m0);
  const Integer step_bound = global_bound - 1;
  const Integer& first = sequence.at(1);
  FiniteSet chosen({first});
  trace.steps.push_back(TraceStep{1, first, first, Integer(0), step_bound, global_bound, 1});

  for (std::size_t k = 2; k <= terms; ++k) {
    const Integer target = sequence.at(k);
    const auto [low, high] = bounded_interval(target, m0);
    const Integer pick = chooser ? chooser(k, target, low, high) : target;
    if (pick < low || pick > high) {
      fail(ErrorKind::kInvalidInput, "choice " + to_decimal(pick) + " at step " + std::to_string(k) +
                                         " lies outside [" + to_decimal(low) + ", " + to_decimal(high) + "]");
    }
    if (chosen.contains(pick) || !can_extend(form, chosen, pick, options).extendable) {
      fail(ErrorKind::kInternal, "bounded step " + std::to_string(k) + " produced a non-Sidon set with a_k = " +
                                     to_decimal(pick) + " despite a passing growth check");
    }
    chosen = chosen.with(pick);
    trace.steps.push_back(TraceStep{k, target, pick, abs(pick - target), step_bound, global_bound, 1});
  }
  return trace;
}

}  // namespace sidon
