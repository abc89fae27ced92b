#pragma once

// Indexed integer sequences b_1, b_2, ... from generators or files.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sidon/integer.hpp"

namespace sidon {

class SequenceSource {
 public:
  virtual ~SequenceSource() = default;
  // Value at 1-based index k.  Finite sources throw Exhausted past the end.
  virtual Integer at(std::size_t k) = 0;
  virtual std::optional<std::size_t> length() const { return std::nullopt; }
  virtual std::string describe() const = 0;
};

// Single-consumer lazy sequence.  The k-th value is a pure function of the
// source and k; values are cached as they are produced.
class IntSequence {
 public:
  explicit IntSequence(std::unique_ptr<SequenceSource> source);

  const Integer& at(std::size_t k);
  // Immutable copy of b_1..b_K.
  std::vector<Integer> prefix(std::size_t count);

  std::optional<std::size_t> length() const { return source_->length(); }
  std::string describe() const { return source_->describe(); }

 private:
  std::unique_ptr<SequenceSource> source_;
  std::vector<Integer> cache_;
};

// Schemes: file:<path>, squares, cubes, primes, arith:<a0>,<d>,
// geom:<a0>,<ratio>, affine-geom:<a0>,<ratio>,<offset>, list:<csv>.
IntSequence parse_sequence_spec(std::string_view spec);

IntSequence sequence_from_values(std::vector<Integer> values, std::string description = "list");

// One decimal integer per line; '#' starts a comment; blank lines skipped.
std::vector<Integer> read_integer_file(const std::string& path);

// Comma-separated integers, no empty fields.
std::vector<Integer> parse_integer_list(std::string_view csv);

}  // namespace sidon
