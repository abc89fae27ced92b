#include "sidon/linear_form.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "sidon/error.hpp"

namespace sidon {

IndexSet IndexSet::full(std::size_t arity) {
  if (arity > kMaxArity) fail(ErrorKind::kInvalidInput, "arity above " + std::to_string(kMaxArity));
  return IndexSet(arity == 0 ? 0 : (~std::uint64_t{0} >> (64 - arity)));
}

IndexSet IndexSet::from_positions(std::span<const std::size_t> positions) {
  std::uint64_t mask = 0;
  for (std::size_t p : positions) {
    if (p == 0 || p > kMaxArity) fail(ErrorKind::kInvalidInput, "position out of range: " + std::to_string(p));
    mask |= std::uint64_t{1} << (p - 1);
  }
  return IndexSet(mask);
}

std::size_t IndexSet::cardinality() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool IndexSet::contains(std::size_t position) const {
  return position >= 1 && position <= 64 && ((mask_ >> (position - 1)) & 1U) != 0;
}

IndexSet IndexSet::complement(std::size_t arity) const { return IndexSet(full(arity).mask() & ~mask_); }

std::vector<std::size_t> IndexSet::positions() const {
  std::vector<std::size_t> out;
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)) + 1);
  }
  return out;
}

LinearForm::LinearForm(std::vector<Integer> coeffs) : LinearForm(std::move(coeffs), {}) {}

LinearForm::LinearForm(std::vector<Integer> coeffs, std::vector<std::size_t> positions)
    : coeffs_(std::move(coeffs)), positions_(std::move(positions)) {
  if (coeffs_.empty()) fail(ErrorKind::kInvalidInput, "linear form needs at least one coefficient");
  if (coeffs_.size() > kMaxArity) {
    fail(ErrorKind::kInvalidInput,
         "arity " + std::to_string(coeffs_.size()) + " above the supported maximum " + std::to_string(kMaxArity));
  }
  if (positions_.empty()) {
    for (std::size_t i = 1; i <= coeffs_.size(); ++i) positions_.push_back(i);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      fail(ErrorKind::kInvalidInput,
           "zero coefficient at position " + std::to_string(positions_[i]) +
               ": distinct tuples would collide, so no phi-Sidon set with two elements exists");
    }
    norm_ += abs(coeffs_[i]);
  }
}

LinearForm LinearForm::parse(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    fail(ErrorKind::kInvalidInput, "empty coefficient list");
  }
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coeffs.push_back(parse_integer(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return LinearForm(std::move(coeffs));
}

Integer LinearForm::subset_sum(IndexSet subset) const {
  Integer sum;
  for (std::size_t p : subset.positions()) {
    if (p > arity()) fail(ErrorKind::kInvalidInput, "index set exceeds arity");
    sum += coeffs_[p - 1];
  }
  return sum;
}

LinearForm LinearForm::contraction(IndexSet subset) const {
  if (subset.empty()) fail(ErrorKind::kInvalidInput, "contraction over the empty index set");
  std::vector<Integer> coeffs;
  std::vector<std::size_t> positions;
  for (std::size_t p : subset.positions()) {
    if (p > arity()) fail(ErrorKind::kInvalidInput, "index set exceeds arity");
    coeffs.push_back(coeffs_[p - 1]);
    positions.push_back(positions_[p - 1]);
  }
  return LinearForm(std::move(coeffs), std::move(positions));
}

Integer LinearForm::evaluate(std::span<const Integer> values) const {
  if (values.size() != arity()) fail(ErrorKind::kInvalidInput, "tuple length differs from arity");
  Integer sum;
  for (std::size_t i = 0; i < values.size(); ++i) sum += coeffs_[i] * values[i];
  return sum;
}

namespace {

bool canonical_orientation(std::uint64_t first, std::uint64_t second) {
  const int a = std::popcount(first);
  const int b = std::popcount(second);
  if (a != b) return a < b;
  return std::countr_zero(first) < std::countr_zero(second);
}

bool nested(std::uint64_t x, std::uint64_t y) { return (x & y) == x || (x & y) == y; }

}  // namespace

PropertyNReport check_property_n(const LinearForm& form, const EngineOptions& options) {
  const std::size_t h = form.arity();
  if (h > options.arity_limit) {
    fail(ErrorKind::kBudget, "arity too large for exhaustive check: h = " + std::to_string(h) +
                                 " exceeds the limit " + std::to_string(options.arity_limit) + " (3^h assignments)");
  }

  const std::uint64_t subsets = std::uint64_t{1} << h;
  std::vector<Integer> sums(subsets);
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    sums[mask] = sums[mask & (mask - 1)] + form.coeffs()[static_cast<std::size_t>(std::countr_zero(mask))];
  }

  PropertyNReport report;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    if (sums[mask] == 0) {
      report.vanishing_subset = IndexSet(mask);
      break;
    }
  }

  // Disjoint nonempty I1, I2 with equal sums exist iff two non-nested
  // subsets X, Y share a sum (take X \ Y and Y \ X).  Decide that in
  // O(2^h) before paying for the ordered 3^h witness search.
  std::unordered_map<Integer, std::vector<std::uint64_t>, IntegerHash> by_sum;
  by_sum.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) by_sum[sums[mask]].push_back(mask);
  bool violated = false;
  for (const auto& [sum, masks] : by_sum) {
    for (std::size_t i = 0; i < masks.size() && !violated; ++i) {
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        if (!nested(masks[i], masks[j])) {
          violated = true;
          break;
        }
      }
    }
    if (violated) break;
  }
  if (!violated) return report;

  std::vector<std::uint8_t> digits(h, 0);
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  while (true) {
    std::size_t i = 0;
    for (; i < h; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (digits[i] == 0) {
        digits[i] = 1;
        first |= bit;
        break;
      }
      if (digits[i] == 1) {
        digits[i] = 2;
        first &= ~bit;
        second |= bit;
        break;
      }
      digits[i] = 0;
      second &= ~bit;
    }
    if (i == h) break;
    if (first != 0 && second != 0 && canonical_orientation(first, second) && sums[first] == sums[second]) {
      report.holds = false;
      report.witness = NWitness{IndexSet(first), IndexSet(second), sums[first]};
      return report;
    }
  }
  fail(ErrorKind::kInternal, "property N fast check found a violation the ordered scan missed");
}

}  // namespace sidon
