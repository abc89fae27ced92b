#include "sidon/bound_analysis.hpp"

#include <string>

#include "sidon/constructor.hpp"
#include "sidon/error.hpp"

namespace sidon {

namespace {

Integer as_integer(std::size_t value) { return Integer(static_cast<unsigned long>(value)); }

void require_increasing(const std::vector<Integer>& values, std::size_t offset) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) {
      fail(ErrorKind::kPrecondition, "sequence is not strictly increasing at term " + std::to_string(offset + i));
    }
  }
}

}  // namespace

WindowCertificate window_certificate(const LinearForm& form, IntSequence& sequence, const Integer& m0,
                                     std::size_t s, std::size_t t) {
  if (s == 0) fail(ErrorKind::kPrecondition, "window indices start at 1");
  if (t <= s) fail(ErrorKind::kPrecondition, "window needs t > s");
  if (m0 <= 0) fail(ErrorKind::kPrecondition, "bounded perturbation needs m0 > 0");
  std::vector<Integer> window;
  for (std::size_t k = s; k <= t; ++k) window.push_back(sequence.at(k));
  require_increasing(window, s);

  WindowCertificate certificate;
  certificate.s = s;
  certificate.t = t;
  certificate.m0 = m0;
  certificate.lhs = ipow(as_integer(t - s + 1), form.arity());
  certificate.rhs = form.norm() * (window.back() - window.front() + 2 * m0) - 1;
  return certificate;
}

std::optional<WindowCertificate> refute_bounded(const LinearForm& form, IntSequence& sequence, const Integer& m0,
                                                std::size_t limit) {
  if (m0 <= 0) fail(ErrorKind::kPrecondition, "bounded perturbation needs m0 > 0");
  if (limit < 2) return std::nullopt;
  const std::vector<Integer> values = sequence.prefix(limit);
  require_increasing(values, 1);

  const Integer& norm = form.norm();
  const Integer margin = 2 * m0;
  for (std::size_t width = 1; width < limit; ++width) {
    const Integer lhs = ipow(as_integer(width + 1), form.arity());
    for (std::size_t s = 1; s + width <= limit; ++s) {
      const std::size_t t = s + width;
      Integer rhs = norm * (values[t - 1] - values[s - 1] + margin) - 1;
      if (lhs > rhs) return WindowCertificate{s, t, m0, lhs, std::move(rhs)};
    }
  }
  return std::nullopt;
}

DensityCheck density_check(IntSequence& sequence, std::size_t arity, const Rational& epsilon, std::size_t terms,
                           std::size_t max_reported) {
  if (epsilon <= 0) fail(ErrorKind::kPrecondition, "epsilon must be positive");
  if (arity == 0) fail(ErrorKind::kPrecondition, "arity must be positive");
  const std::vector<Integer> values = sequence.prefix(terms);
  require_increasing(values, 1);

  // diff <= w^{h - p/q}  <=>  diff^q <= w^{hq - p}  (both sides positive).
  const Integer p = epsilon.get_num();
  const Integer q = epsilon.get_den();
  if (!q.fits_ulong_p()) fail(ErrorKind::kPrecondition, "epsilon denominator too large");
  const unsigned long q_exp = q.get_ui();
  const Integer exponent = as_integer(arity) * q - p;
  const Integer magnitude = abs(exponent);
  if (!magnitude.fits_ulong_p()) fail(ErrorKind::kPrecondition, "epsilon numerator too large");
  const unsigned long w_exp = magnitude.get_ui();
  const bool positive = exponent >= 0;

  DensityCheck check;
  check.epsilon = epsilon;
  for (std::size_t width = 1; width < terms; ++width) {
    const Integer wpow = ipow(as_integer(width + 1), w_exp);
    for (std::size_t s = 1; s + width <= terms; ++s) {
      const std::size_t t = s + width;
      const Integer dpow = ipow(values[t - 1] - values[s - 1], q_exp);
      const bool within = positive ? dpow <= wpow : dpow * wpow <= 1;
      if (!within) {
        ++check.violation_count;
        if (check.violations.size() < max_reported) check.violations.push_back({s, t});
      }
    }
  }
  return check;
}

bool poly_bound_holds(std::size_t arity, std::uint64_t n) {
  if (arity == 0 || n == 0) fail(ErrorKind::kPrecondition, "need h >= 1 and n >= 1");
  return poly_step_bound(arity, n) < ipow(Integer(static_cast<unsigned long>(n + 1)), 4 * arity);
}

BoundSweep bound_sweep(std::size_t max_arity, std::uint64_t max_n) {
  BoundSweep sweep;
  for (std::size_t h = 1; h <= max_arity; ++h) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      ++sweep.checked;
      if (!poly_bound_holds(h, n)) {
        sweep.first_failure = std::make_pair(h, n);
        return sweep;
      }
    }
  }
  return sweep;
}

}  // namespace sidon
