#pragma once

// Integer linear forms c_1 x_1 + ... + c_h x_h, their subset sums, and the
// "property N" test (no two disjoint nonempty index sets with equal sums).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sidon/integer.hpp"
#include "sidon/options.hpp"

namespace sidon {

// Largest arity representable by IndexSet.
inline constexpr std::size_t kMaxArity = 63;

// Subset of positions {1, ..., h}; bit i-1 stands for position i.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t mask) : mask_(mask) {}

  static IndexSet full(std::size_t arity);
  static IndexSet from_positions(std::span<const std::size_t> positions);

  constexpr std::uint64_t mask() const { return mask_; }
  std::size_t cardinality() const;
  bool empty() const { return mask_ == 0; }
  bool contains(std::size_t position) const;
  IndexSet complement(std::size_t arity) const;
  bool disjoint_from(IndexSet other) const { return (mask_ & other.mask_) == 0; }

  // 1-based positions in increasing order.
  std::vector<std::size_t> positions() const;

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

class LinearForm {
 public:
  // Throws InvalidInput on an empty vector, a zero coefficient, or arity
  // above kMaxArity.
  explicit LinearForm(std::vector<Integer> coeffs);

  // "1,-2,4" -> (1, -2, 4).
  static LinearForm parse(std::string_view text);

  std::size_t arity() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t position) const { return coeffs_.at(position - 1); }

  // C = sum |c_i|.
  const Integer& norm() const { return norm_; }

  // Original positions of each coefficient; identity unless this form is a
  // contraction of another.
  const std::vector<std::size_t>& source_positions() const { return positions_; }

  // s_I = sum_{i in I} c_i, with s_{} = 0.
  Integer subset_sum(IndexSet subset) const;

  // Sum of all coefficients, i.e. s_{1..h}.
  Integer total() const { return subset_sum(IndexSet::full(arity())); }

  // The form restricted to the positions in `subset`.  Throws InvalidInput
  // for an empty subset.
  LinearForm contraction(IndexSet subset) const;

  Integer evaluate(std::span<const Integer> values) const;

 private:
  LinearForm(std::vector<Integer> coeffs, std::vector<std::size_t> positions);

  std::vector<Integer> coeffs_;
  std::vector<std::size_t> positions_;
  Integer norm_;
};

// Disjoint nonempty I1, I2 with s_{I1} = s_{I2}.
struct NWitness {
  IndexSet first;
  IndexSet second;
  Integer common_sum;
};

struct PropertyNReport {
  bool holds = true;
  std::optional<NWitness> witness;
  // First nonempty I (by increasing mask) with s_I = 0.  Reported for
  // diagnostics only; it does not by itself break property N.
  std::optional<IndexSet> vanishing_subset;
};

// Decides property N.  When it fails, the witness is the first violation
// met by a ternary counter over positions (position 1 least significant;
// digit 0 = neither, 1 = first set, 2 = second set), counting each unordered
// pair once in the orientation where the first set is smaller, or, at equal
// size, holds the lowest position.  Throws Budget when arity exceeds
// options.arity_limit.
PropertyNReport check_property_n(const LinearForm& form, const EngineOptions& options = {});

}  // namespace sidon
