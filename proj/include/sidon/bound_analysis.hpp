#pragma once

// Counting certificates against bounded perturbations of dense sequences,
// and the numeric inequality behind the polynomial deviation bound.

#include <cstdint>
#include <optional>
#include <vector>

#include "sidon/integer.hpp"
#include "sidon/linear_form.hpp"
#include "sidon/sequence.hpp"

namespace sidon {

// A window s < t refutes every phi-Sidon A with |a_k - b_k| < m0 when
// (t-s+1)^h distinct values cannot fit below C (b_t - b_s + 2 m0) - 1.
struct WindowCertificate {
  std::size_t s = 0;
  std::size_t t = 0;
  Integer m0;
  Integer lhs;  // (t-s+1)^h
  Integer rhs;  // C (b_t - b_s + 2 m0) - 1
  bool contradiction() const { return lhs > rhs; }

  friend bool operator==(const WindowCertificate&, const WindowCertificate&) = default;
};

// Throws Precondition unless 1 <= s < t, m0 > 0 and B strictly increases on [s, t].
WindowCertificate window_certificate(const LinearForm& form, IntSequence& sequence, const Integer& m0,
                                     std::size_t s, std::size_t t);

// Scans windows with t <= limit by increasing t - s, then increasing s, and
// returns the first contradiction.  Throws Precondition if m0 <= 0 or B is
// not strictly increasing on the first `limit` terms.
std::optional<WindowCertificate> refute_bounded(const LinearForm& form, IntSequence& sequence,
                                                const Integer& m0, std::size_t limit);

struct DensityViolation {
  std::size_t s = 0;
  std::size_t t = 0;
};

struct DensityCheck {
  Rational epsilon;
  std::uint64_t violation_count = 0;
  // The first `max_reported` violations in (t-s, s) order.
  std::vector<DensityViolation> violations;
  bool pass() const { return violation_count == 0; }
};

// Checks b_t - b_s <= (t-s+1)^{h-epsilon} for all 1 <= s < t <= terms using
// only integer arithmetic.  Throws Precondition if epsilon <= 0, arity == 0,
// or the prefix is not strictly increasing.
DensityCheck density_check(IntSequence& sequence, std::size_t arity, const Rational& epsilon,
                           std::size_t terms, std::size_t max_reported = 1000);

// 4^h n^{2h-1} + n < (n+1)^{4h}, exactly.  Requires h >= 1 and n >= 1.
bool poly_bound_holds(std::size_t arity, std::uint64_t n);

struct BoundSweep {
  std::uint64_t checked = 0;
  std::optional<std::pair<std::size_t, std::uint64_t>> first_failure;  // (h, n)
  bool all_hold() const { return !first_failure; }
};

// poly_bound_holds over 1 <= h <= max_arity, 1 <= n <= max_n, h outermost.
BoundSweep bound_sweep(std::size_t max_arity, std::uint64_t max_n);

}  // namespace sidon
