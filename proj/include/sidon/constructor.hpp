#pragma once

// Greedy constructions of phi-Sidon sets that track a target sequence B:
//  - polynomial mode: |a_k - b_k| < k^{4h} for any integer B;
//  - bounded mode: |a_k - b_k| < m0 for B growing faster than C b_k + (C+1) m.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sidon/integer.hpp"
#include "sidon/linear_form.hpp"
#include "sidon/options.hpp"
#include "sidon/sequence.hpp"

namespace sidon {

enum class ConstructionMode { kPolynomial, kBounded };

const char* mode_name(ConstructionMode mode) noexcept;

struct TraceStep {
  std::size_t k = 0;
  Integer target;     // b_k
  Integer chosen;     // a_k
  Integer deviation;  // |a_k - b_k|
  // Polynomial mode: 4^h (k-1)^{2h-1} + (k-1) for k >= 2, else 0.
  // Bounded mode: largest admissible integer deviation, ceil(m0) - 1.
  Integer step_bound;
  // Polynomial mode: k^{4h}.  Bounded mode: ceil(m0).  Always deviation < global_bound.
  Integer global_bound;
  std::uint64_t candidates_examined = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ConstructionTrace {
  ConstructionMode mode = ConstructionMode::kPolynomial;
  std::vector<TraceStep> steps;

  std::vector<Integer> chosen() const;
  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

// 4^h n^{2h-1} + n: strict upper bound on the deviation at step n+1.
Integer poly_step_bound(std::size_t arity, std::uint64_t n);

// Nearest-first greedy: a_1 = b_1, then a_{n+1} is the first integer in
// b_{n+1}, +1, -1, +2, -2, ... that is outside A_n and keeps A_n phi-Sidon.
// Requires property N.  Throws Internal if the scan runs past the proven
// radius.
ConstructionTrace construct_poly(const LinearForm& form, IntSequence& sequence, std::size_t terms,
                                 const EngineOptions& options = {});

struct GrowthViolation {
  enum class Kind { kStart, kGrowth };
  Kind kind = Kind::kGrowth;
  // kStart: k = 1 (b_1 <= m).  kGrowth: b_{k+1} <= C b_k + (C+1) m.
  std::size_t k = 0;
};

struct GrowthCheck {
  Integer norm;  // C
  Integer m;
  std::optional<GrowthViolation> first_violation;
  bool pass() const { return !first_violation; }
};

// Checks b_1 > m and b_{k+1} > C b_k + (C+1) m for k < terms.  Throws
// Precondition if m < 0 or the prefix is not strictly increasing and positive.
GrowthCheck check_growth(const LinearForm& form, IntSequence& sequence, const Integer& m, std::size_t terms);

// Picks a_k in [low, high] (the integers within distance < m0 of target).
using BoundedChooser =
    std::function<Integer(std::size_t k, const Integer& target, const Integer& low, const Integer& high)>;

// a_1 = b_1; each later a_k comes from `chooser` (default: b_k itself).
// Requires property N, a passing growth check, and 0 < m0 <= max(m, 1).
// Every extension is still confirmed with can_extend; a failure throws
// Internal.
ConstructionTrace construct_bounded(const LinearForm& form, IntSequence& sequence, const Integer& m,
                                    const Rational& m0, std::size_t terms, const BoundedChooser& chooser = {},
                                    const EngineOptions& options = {});

// Integers a with |a - target| < m0 and a > 0, as an inclusive range.
std::pair<Integer, Integer> bounded_interval(const Integer& target, const Rational& m0);

}  // namespace sidon
