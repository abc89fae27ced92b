#include "sidon/sequence.hpp"

#include <fstream>
#include <string>

#include "sidon/error.hpp"

namespace sidon {

namespace {

Integer index_value(std::size_t k) { return Integer(static_cast<unsigned long>(k)); }

class PowerSource final : public SequenceSource {
 public:
  PowerSource(unsigned exponent, std::string name) : exponent_(exponent), name_(std::move(name)) {}
  Integer at(std::size_t k) override { return ipow(index_value(k), exponent_); }
  std::string describe() const override { return name_; }

 private:
  unsigned exponent_;
  std::string name_;
};

class ArithmeticSource final : public SequenceSource {
 public:
  ArithmeticSource(Integer start, Integer step) : start_(std::move(start)), step_(std::move(step)) {}
  Integer at(std::size_t k) override { return start_ + step_ * index_value(k - 1); }
  std::string describe() const override { return "arith:" + to_decimal(start_) + "," + to_decimal(step_); }

 private:
  Integer start_;
  Integer step_;
};

class GeometricSource final : public SequenceSource {
 public:
  GeometricSource(Integer start, Integer ratio) : start_(std::move(start)), ratio_(std::move(ratio)) {}
  Integer at(std::size_t k) override { return start_ * ipow(ratio_, k - 1); }
  std::string describe() const override { return "geom:" + to_decimal(start_) + "," + to_decimal(ratio_); }

 private:
  Integer start_;
  Integer ratio_;
};

// b_1 = start, b_{k+1} = ratio b_k + offset.  IntSequence caches earlier
// terms, but the source keeps its own running value so it stays usable on
// its own.
class AffineGeometricSource final : public SequenceSource {
 public:
  AffineGeometricSource(Integer start, Integer ratio, Integer offset)
      : start_(std::move(start)), ratio_(std::move(ratio)), offset_(std::move(offset)) {
    values_.push_back(start_);
  }
  Integer at(std::size_t k) override {
    while (values_.size() < k) values_.push_back(ratio_ * values_.back() + offset_);
    return values_[k - 1];
  }
  std::string describe() const override {
    return "affine-geom:" + to_decimal(start_) + "," + to_decimal(ratio_) + "," + to_decimal(offset_);
  }

 private:
  Integer start_;
  Integer ratio_;
  Integer offset_;
  std::vector<Integer> values_;
};

// Segmented sieve of Eratosthenes, extended one block at a time.
class PrimeSource final : public SequenceSource {
 public:
  Integer at(std::size_t k) override {
    while (primes_.size() < k) extend();
    return Integer(static_cast<unsigned long>(primes_[k - 1]));
  }
  std::string describe() const override { return "primes"; }

 private:
  void extend() {
    const std::uint64_t low = sieved_to_;
    const std::uint64_t high = low + kBlock;
    std::vector<bool> composite(kBlock, false);
    // Base primes up to sqrt(high) come from earlier blocks or from this one.
    for (std::uint64_t p : primes_) {
      if (p * p >= high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t m = start; m < high; m += p) composite[m - low] = true;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(low, 2); n < high; ++n) {
      if (composite[n - low]) continue;
      primes_.push_back(n);
      for (std::uint64_t m = n * n; m < high; m += n) composite[m - low] = true;
    }
    sieved_to_ = high;
  }

  static constexpr std::uint64_t kBlock = 1 << 16;
  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_to_ = 0;
};

class ListSource final : public SequenceSource {
 public:
  ListSource(std::vector<Integer> values, std::string description)
      : values_(std::move(values)), description_(std::move(description)) {}
  Integer at(std::size_t k) override {
    if (k == 0 || k > values_.size()) {
      fail(ErrorKind::kExhausted, "sequence " + description_ + " has " + std::to_string(values_.size()) +
                                      " terms; term " + std::to_string(k) + " requested");
    }
    return values_[k - 1];
  }
  std::optional<std::size_t> length() const override { return values_.size(); }
  std::string describe() const override { return description_; }

 private:
  std::vector<Integer> values_;
  std::string description_;
};

std::vector<Integer> parse_params(std::string_view scheme, std::string_view params, std::size_t expected) {
  std::vector<Integer> values;
  try {
    values = parse_integer_list(params);
  } catch (const Error& error) {
    fail(ErrorKind::kInvalidInput, std::string(scheme) + ": " + error.what());
  }
  if (values.size() != expected) {
    fail(ErrorKind::kInvalidInput, std::string(scheme) + " takes " + std::to_string(expected) +
                                       " comma-separated integers, got " + std::to_string(values.size()));
  }
  return values;
}

}  // namespace

IntSequence::IntSequence(std::unique_ptr<SequenceSource> source) : source_(std::move(source)) {}

const Integer& IntSequence::at(std::size_t k) {
  if (k == 0) fail(ErrorKind::kInvalidInput, "sequence indices start at 1");
  while (cache_.size() < k) cache_.push_back(source_->at(cache_.size() + 1));
  return cache_[k - 1];
}

std::vector<Integer> IntSequence::prefix(std::size_t count) {
  if (count > 0) at(count);
  return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<Integer> parse_integer_list(std::string_view csv) {
  std::vector<Integer> values;
  if (csv.find_first_not_of(" \t") == std::string_view::npos) {
    fail(ErrorKind::kInvalidInput, "empty integer list");
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    values.push_back(parse_integer(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::vector<Integer> read_integer_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot read " + path);
  std::vector<Integer> values;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      values.push_back(parse_integer(line));
    } catch (const Error& error) {
      fail(ErrorKind::kInvalidInput, path + ":" + std::to_string(number) + ": " + error.what());
    }
  }
  if (in.bad()) fail(ErrorKind::kIo, "error while reading " + path);
  return values;
}

IntSequence sequence_from_values(std::vector<Integer> values, std::string description) {
  return IntSequence(std::make_unique<ListSource>(std::move(values), std::move(description)));
}

IntSequence parse_sequence_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view scheme = spec.substr(0, colon);
  const std::string_view params = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_params = colon != std::string_view::npos;

  auto no_params = [&] {
    if (has_params) fail(ErrorKind::kInvalidInput, std::string(scheme) + " takes no parameters");
  };

  if (scheme == "squares") {
    no_params();
    return IntSequence(std::make_unique<PowerSource>(2, "squares"));
  }
  if (scheme == "cubes") {
    no_params();
    return IntSequence(std::make_unique<PowerSource>(3, "cubes"));
  }
  if (scheme == "primes") {
    no_params();
    return IntSequence(std::make_unique<PrimeSource>());
  }
  if (scheme == "arith") {
    auto p = parse_params(scheme, params, 2);
    return IntSequence(std::make_unique<ArithmeticSource>(p[0], p[1]));
  }
  if (scheme == "geom") {
    auto p = parse_params(scheme, params, 2);
    return IntSequence(std::make_unique<GeometricSource>(p[0], p[1]));
  }
  if (scheme == "affine-geom") {
    auto p = parse_params(scheme, params, 3);
    return IntSequence(std::make_unique<AffineGeometricSource>(p[0], p[1], p[2]));
  }
  if (scheme == "list") {
    std::vector<Integer> values;
    try {
      values = parse_integer_list(params);
    } catch (const Error& error) {
      fail(ErrorKind::kInvalidInput, std::string("list: ") + error.what());
    }
    return sequence_from_values(std::move(values), std::string(spec));
  }
  if (scheme == "file") {
    if (params.empty()) fail(ErrorKind::kInvalidInput, "file: needs a path");
    return sequence_from_values(read_integer_file(std::string(params)), std::string(spec));
  }
  fail(ErrorKind::kInvalidInput, "unknown sequence scheme '" + std::string(scheme) +
                                     "' (expected file:, squares, cubes, primes, arith:, geom:, affine-geom:, list:)");
}

}  // namespace sidon
