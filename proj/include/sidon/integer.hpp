#pragma once

// Arbitrary-precision integer support shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace sidon {

using Integer = mpz_class;
using Rational = mpq_class;

// Strict decimal parse: optional sign followed by at least one digit.
// Surrounding ASCII whitespace is ignored; anything else throws InvalidInput.
Integer parse_integer(std::string_view text);

// Accepts "p/q" or a plain integer; the result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_decimal(const Integer& value);
std::string to_string(const Rational& value);

// Hash over the canonical (sign, limbs) encoding of an mpz value.
struct IntegerHash {
  std::size_t operator()(const Integer& value) const noexcept;
};

// Integer power with a machine-word exponent.
Integer ipow(const Integer& base, std::uint64_t exponent);

// base^exponent as an exact Integer, or throws Budget if the value would
// exceed `limit`.  Used to guard enumeration sizes.
std::uint64_t checked_count(std::uint64_t base, std::uint64_t exponent,
                            std::uint64_t limit, std::string_view what);

}  // namespace sidon
