#include "sidon/integer.hpp"

#include <cctype>
#include <string>

#include "sidon/error.hpp"

namespace sidon {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid_input";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kExhausted: return "exhausted";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

Integer parse_integer(std::string_view text) {
  const std::string_view body = trim(text);
  std::size_t pos = 0;
  if (pos < body.size() && (body[pos] == '-' || body[pos] == '+')) ++pos;
  if (pos == body.size()) fail(ErrorKind::kInvalidInput, "not an integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < body.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(body[i]))) {
      fail(ErrorKind::kInvalidInput, "not an integer: '" + std::string(text) + "'");
    }
  }
  // mpz_set_str rejects a leading '+'.
  std::string digits(body.substr(body[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body));
  const Integer num = parse_integer(body.substr(0, slash));
  const Integer den = parse_integer(body.substr(slash + 1));
  if (den == 0) fail(ErrorKind::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

std::size_t IntegerHash::operator()(const Integer& value) const noexcept {
  const mpz_srcptr raw = value.get_mpz_t();
  const std::size_t limbs = mpz_size(raw);
  // FNV-1a over the sign followed by the magnitude limbs.
  std::size_t hash = 1469598103934665603ULL;
  auto mix = [&hash](std::uint64_t word) {
    hash ^= word;
    hash *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(mpz_sgn(raw) + 1));
  for (std::size_t i = 0; i < limbs; ++i) mix(static_cast<std::uint64_t>(mpz_getlimbn(raw, i)));
  return hash ^ (hash >> 29);
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  if (exponent > static_cast<std::uint64_t>(~0UL)) fail(ErrorKind::kInvalidInput, "exponent too large");
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

std::uint64_t checked_count(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit,
                            std::string_view what) {
  const Integer count = ipow(Integer(static_cast<unsigned long>(base)), exponent);
  if (count > Integer(static_cast<unsigned long>(limit))) {
    fail(ErrorKind::kBudget, std::string(what) + " needs " + std::to_string(base) + "^" +
                                 std::to_string(exponent) + " = " + to_decimal(count) +
                                 " values, over the budget of " + std::to_string(limit));
  }
  return count.get_ui();
}

}  // namespace sidon
