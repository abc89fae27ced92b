#pragma once

// phi-images, phi-Sidon verification, translate families and the
// single-element extension test.
//
// Tuple enumeration order everywhere in this module: an odometer over the
// elements of A in increasing order, last coordinate fastest.  The rank of a
// tuple is its position in that order.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sidon/integer.hpp"
#include "sidon/linear_form.hpp"
#include "sidon/options.hpp"

namespace sidon {

// Strictly increasing, duplicate-free, nonempty.
class FiniteSet {
 public:
  // Throws InvalidInput unless `elements` is nonempty and strictly increasing.
  explicit FiniteSet(std::vector<Integer> elements);

  // Sorts; throws InvalidInput on duplicates or an empty input.
  static FiniteSet from_unsorted(std::vector<Integer> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Integer>& elements() const { return elements_; }
  const Integer& operator[](std::size_t i) const { return elements_[i]; }
  bool contains(const Integer& value) const;

  // A with `value` inserted.  Throws Precondition if already present.
  FiniteSet with(const Integer& value) const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<Integer> elements_;
};

struct PhiImage {
  std::vector<Integer> values;  // distinct values, increasing
  std::uint64_t total = 0;      // |A|^h
  std::uint64_t distinct() const { return values.size(); }
};

// Two distinct h-tuples from A with the same phi-value.  `first` precedes
// `second` in enumeration order; `second` is the earliest tuple whose value
// was already produced, `first` the earliest tuple producing that value.
struct CollisionWitness {
  std::vector<Integer> first;
  std::vector<Integer> second;
  Integer value;
};

struct SidonReport {
  bool sidon = true;
  std::optional<CollisionWitness> witness;
  std::uint64_t distinct = 0;
  std::uint64_t total = 0;
};

PhiImage phi_image(const LinearForm& form, const FiniteSet& set, const EngineOptions& options = {});

SidonReport is_sidon(const LinearForm& form, const FiniteSet& set, const EngineOptions& options = {});

// Phi_J(A, b) = phi_J(A) + s(J^c) b for one J, values in enumeration order
// (not deduplicated).
struct Translate {
  IndexSet subset;
  Integer shift;  // s(J^c) * b
  std::vector<Integer> values;
};

// All 2^h translates, indexed by J's mask.  Throws Precondition if b is in A.
std::vector<Translate> translate_family(const LinearForm& form, const FiniteSet& set, const Integer& b,
                                        const EngineOptions& options = {});

// Two translates sharing a value.  Tuples are full h-tuples over A with b
// substituted at the positions outside each J.
struct TranslateConflict {
  IndexSet first_subset;
  IndexSet second_subset;
  Integer value;
  std::vector<Integer> first_tuple;
  std::vector<Integer> second_tuple;
};

struct ExtensionReport {
  bool extendable = true;
  std::optional<TranslateConflict> conflict;
};

// Decides whether A u {b} is phi-Sidon for a phi-Sidon A by checking that
// the 2^h translates are pairwise disjoint.  One hash pass over
// (|A|+1)^h values.  Throws Precondition if b is in A, or if some
// translate repeats a value internally (A was not phi-Sidon).  Debug builds
// also verify A with is_sidon up front.
ExtensionReport can_extend(const LinearForm& form, const FiniteSet& set, const Integer& b,
                           const EngineOptions& options = {});

// Every integer b (in A or not) solving
//   (s(J2^c) - s(J1^c)) b = sum_{J1} c_j a_{1,j} - sum_{J2} c_j a_{2,j}
// for some distinct J1, J2 and some choice of elements.  Requires property N
// (Precondition otherwise) so the left coefficient never vanishes.  Small
// inputs only; budget options.forbidden_budget.
std::vector<Integer> forbidden_values(const LinearForm& form, const FiniteSet& set,
                                      const EngineOptions& options = {});

}  // namespace sidon
