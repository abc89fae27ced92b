#include "sidon/sidon_engine.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "sidon/error.hpp"

namespace sidon {

FiniteSet::FiniteSet(std::vector<Integer> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) fail(ErrorKind::kInvalidInput, "set must be nonempty");
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (!(elements_[i - 1] < elements_[i])) {
      fail(ErrorKind::kInvalidInput, "set elements must be strictly increasing");
    }
  }
}

FiniteSet FiniteSet::from_unsorted(std::vector<Integer> elements) {
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i - 1] == elements[i]) {
      fail(ErrorKind::kInvalidInput, "duplicate set element " + to_decimal(elements[i]));
    }
  }
  return FiniteSet(std::move(elements));
}

bool FiniteSet::contains(const Integer& value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

FiniteSet FiniteSet::with(const Integer& value) const {
  if (contains(value)) fail(ErrorKind::kPrecondition, to_decimal(value) + " is already in the set");
  std::vector<Integer> out = elements_;
  out.insert(std::upper_bound(out.begin(), out.end(), value), value);
  return FiniteSet(std::move(out));
}

namespace {

using ValueIndex = std::unordered_map<Integer, std::uint64_t, IntegerHash>;
constexpr std::uint64_t kNoRank = std::numeric_limits<std::uint64_t>::max();

// Odometer over set^h for a coefficient list, restricted to leading
// coordinates in [lead_begin, lead_end).  Calls visit(rank, value) with
// value = shift + sum coeffs[i] * set[idx[i]].
class TupleWalker {
 public:
  TupleWalker(std::span<const Integer> coeffs, const FiniteSet& set) : arity_(coeffs.size()), size_(set.size()) {
    products_.resize(arity_ * size_);
    for (std::size_t i = 0; i < arity_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) products_[i * size_ + j] = coeffs[i] * set[j];
    }
    stride_ = 1;
    for (std::size_t i = 1; i < arity_; ++i) stride_ *= size_;
  }

  // Number of tuples sharing one leading coordinate.
  std::uint64_t stride() const { return stride_; }

  template <class Visit>
  void walk(std::size_t lead_begin, std::size_t lead_end, const Integer& shift, Visit&& visit) const {
    if (arity_ == 0) {
      visit(std::uint64_t{0}, shift);
      return;
    }
    if (lead_begin >= lead_end) return;
    std::vector<std::size_t> idx(arity_, 0);
    idx[0] = lead_begin;
    std::vector<Integer> partial(arity_ + 1);
    partial[0] = shift;
    for (std::size_t i = 0; i < arity_; ++i) partial[i + 1] = partial[i] + product(i, idx[i]);
    std::uint64_t rank = lead_begin * stride_;
    while (true) {
      visit(rank, partial[arity_]);
      ++rank;
      std::size_t i = arity_;
      while (i > 0) {
        --i;
        const std::size_t limit = (i == 0) ? lead_end : size_;
        if (++idx[i] < limit) break;
        if (i == 0) return;
        idx[i] = 0;
      }
      for (std::size_t j = i; j < arity_; ++j) partial[j + 1] = partial[j] + product(j, idx[j]);
    }
  }

 private:
  const Integer& product(std::size_t position, std::size_t element) const {
    return products_[position * size_ + element];
  }

  std::size_t arity_;
  std::size_t size_;
  std::uint64_t stride_ = 1;
  std::vector<Integer> products_;
};

std::vector<Integer> decode_tuple(const FiniteSet& set, std::size_t arity, std::uint64_t rank) {
  std::vector<Integer> tuple(arity);
  for (std::size_t i = arity; i > 0; --i) {
    tuple[i - 1] = set[static_cast<std::size_t>(rank % set.size())];
    rank /= set.size();
  }
  return tuple;
}

struct ChunkResult {
  ValueIndex first_rank;  // value -> smallest rank within the chunk
  std::uint64_t first_repeat = kNoRank;
};

ChunkResult scan_chunk(const TupleWalker& walker, std::size_t lead_begin, std::size_t lead_end) {
  ChunkResult out;
  out.first_rank.reserve(static_cast<std::size_t>((lead_end - lead_begin) * walker.stride()));
  const Integer zero;
  walker.walk(lead_begin, lead_end, zero, [&out](std::uint64_t rank, const Integer& value) {
    const auto [it, inserted] = out.first_rank.try_emplace(value, rank);
    if (!inserted && out.first_repeat == kNoRank) out.first_repeat = rank;
  });
  return out;
}

struct ImageScan {
  ValueIndex first_rank;            // value -> smallest rank overall
  std::uint64_t first_repeat = kNoRank;  // smallest rank whose value occurred earlier
  std::uint64_t total = 0;
};

// Splits the leading coordinate across workers and merges chunk results in
// chunk order, so the outcome is independent of the worker count.
ImageScan scan_image(const LinearForm& form, const FiniteSet& set, const EngineOptions& options) {
  ImageScan scan;
  scan.total = checked_count(set.size(), form.arity(), options.tuple_budget, "phi-image enumeration");
  const TupleWalker walker(form.coeffs(), set);

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, set.size()));
  std::vector<ChunkResult> chunks(workers);
  std::vector<std::size_t> bounds(workers + 1);
  for (std::size_t w = 0; w <= workers; ++w) bounds[w] = set.size() * w / workers;

  if (workers == 1) {
    chunks[0] = scan_chunk(walker, 0, set.size());
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            chunks[w] = scan_chunk(walker, bounds[w], bounds[w + 1]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  scan.first_rank = std::move(chunks[0].first_rank);
  scan.first_repeat = chunks[0].first_repeat;
  for (std::size_t w = 1; w < workers; ++w) {
    scan.first_repeat = std::min(scan.first_repeat, chunks[w].first_repeat);
    for (auto& [value, rank] : chunks[w].first_rank) {
      const auto [it, inserted] = scan.first_rank.try_emplace(value, rank);
      if (!inserted) scan.first_repeat = std::min(scan.first_repeat, rank);
    }
    chunks[w].first_rank.clear();
  }
  return scan;
}

}  // namespace

PhiImage phi_image(const LinearForm& form, const FiniteSet& set, const EngineOptions& options) {
  ImageScan scan = scan_image(form, set, options);
  PhiImage image;
  image.total = scan.total;
  image.values.reserve(scan.first_rank.size());
  for (auto& entry : scan.first_rank) image.values.push_back(entry.first);
  std::sort(image.values.begin(), image.values.end());
  return image;
}

SidonReport is_sidon(const LinearForm& form, const FiniteSet& set, const EngineOptions& options) {
  const ImageScan scan = scan_image(form, set, options);
  SidonReport report;
  report.total = scan.total;
  report.distinct = scan.first_rank.size();
  report.sidon = report.distinct == report.total;
  if (scan.first_repeat != kNoRank) {
    CollisionWitness witness;
    witness.second = decode_tuple(set, form.arity(), scan.first_repeat);
    witness.value = form.evaluate(witness.second);
    witness.first = decode_tuple(set, form.arity(), scan.first_rank.at(witness.value));
    report.witness = std::move(witness);
  }
  return report;
}

namespace {

std::vector<Integer> coefficients_on(const LinearForm& form, IndexSet subset) {
  std::vector<Integer> out;
  for (std::size_t p : subset.positions()) out.push_back(form.coeff(p));
  return out;
}

std::vector<Integer> translate_tuple(const FiniteSet& set, std::size_t arity, IndexSet subset, std::uint64_t rank,
                                     const Integer& b) {
  const std::vector<std::size_t> positions = subset.positions();
  const std::vector<Integer> inner = decode_tuple(set, positions.size(), rank);
  std::vector<Integer> tuple(arity, b);
  for (std::size_t i = 0; i < positions.size(); ++i) tuple[positions[i] - 1] = inner[i];
  return tuple;
}

void require_outside(const FiniteSet& set, const Integer& b) {
  if (set.contains(b)) fail(ErrorKind::kPrecondition, "candidate " + to_decimal(b) + " is already in the set");
}

}  // namespace

std::vector<Translate> translate_family(const LinearForm& form, const FiniteSet& set, const Integer& b,
                                        const EngineOptions& options) {
  require_outside(set, b);
  checked_count(set.size() + 1, form.arity(), options.tuple_budget, "translate family");
  const std::size_t h = form.arity();
  std::vector<Translate> family;
  family.reserve(std::size_t{1} << h);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h); ++mask) {
    const IndexSet subset(mask);
    Translate translate{subset, form.subset_sum(subset.complement(h)) * b, {}};
    const std::vector<Integer> coeffs = coefficients_on(form, subset);
    const TupleWalker walker(coeffs, set);
    walker.walk(0, set.size(), translate.shift,
                [&translate](std::uint64_t, const Integer& value) { translate.values.push_back(value); });
    family.push_back(std::move(translate));
  }
  return family;
}

ExtensionReport can_extend(const LinearForm& form, const FiniteSet& set, const Integer& b,
                           const EngineOptions& options) {
  require_outside(set, b);
#ifndef NDEBUG
  if (!is_sidon(form, set, options).sidon) fail(ErrorKind::kPrecondition, "can_extend requires a phi-Sidon set");
#endif
  checked_count(set.size() + 1, form.arity(), options.tuple_budget, "extension test");

  struct Origin {
    std::uint64_t mask;
    std::uint64_t rank;
  };
  std::unordered_map<Integer, Origin, IntegerHash> seen;
  const std::size_t h = form.arity();
  ExtensionReport report;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h) && report.extendable; ++mask) {
    const IndexSet subset(mask);
    const Integer shift = form.subset_sum(subset.complement(h)) * b;
    const std::vector<Integer> coeffs = coefficients_on(form, subset);
    const TupleWalker walker(coeffs, set);
    bool stop = false;
    walker.walk(0, set.size(), shift, [&](std::uint64_t rank, const Integer& value) {
      if (stop) return;
      const auto [it, inserted] = seen.try_emplace(value, Origin{mask, rank});
      if (inserted) return;
      if (it->second.mask == mask) {
        fail(ErrorKind::kPrecondition,
             "set is not phi-Sidon: the contraction to positions with mask " + std::to_string(mask) +
                 " repeats the value " + to_decimal(value));
      }
      const IndexSet earlier(it->second.mask);
      report.extendable = false;
      report.conflict = TranslateConflict{earlier, subset, value,
                                          translate_tuple(set, h, earlier, it->second.rank, b),
                                          translate_tuple(set, h, subset, rank, b)};
      stop = true;
    });
  }
  return report;
}

std::vector<Integer> forbidden_values(const LinearForm& form, const FiniteSet& set, const EngineOptions& options) {
  const PropertyNReport property = check_property_n(form, options);
  if (!property.holds) {
    fail(ErrorKind::kPrecondition, "forbidden_values requires property N; the translate equation may degenerate");
  }

  const std::size_t h = form.arity();
  const Integer n(static_cast<unsigned long>(set.size()));
  // sum over ordered pairs J1 != J2 of n^{|J1|+|J2|}
  const Integer work = ipow(n + 1, 2 * h) - ipow(n * n + 1, h);
  if (work > Integer(static_cast<unsigned long>(options.forbidden_budget))) {
    fail(ErrorKind::kBudget, "forbidden-value enumeration needs " + to_decimal(work) +
                                 " value pairs, over the budget of " + std::to_string(options.forbidden_budget));
  }

  const std::uint64_t subsets = std::uint64_t{1} << h;
  std::vector<std::vector<Integer>> images(subsets);
  std::vector<Integer> complement_sums(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const IndexSet subset(mask);
    complement_sums[mask] = form.subset_sum(subset.complement(h));
    const std::vector<Integer> coeffs = coefficients_on(form, subset);
    const TupleWalker walker(coeffs, set);
    std::vector<Integer>& image = images[mask];
    walker.walk(0, set.size(), Integer(0), [&image](std::uint64_t, const Integer& v) { image.push_back(v); });
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
  }

  std::unordered_set<Integer, IntegerHash> found;
  Integer numerator;
  // (J1, J2) and (J2, J1) give the same b, so unordered pairs suffice.
  for (std::uint64_t first = 0; first < subsets; ++first) {
    for (std::uint64_t second = first + 1; second < subsets; ++second) {
      const Integer denominator = complement_sums[second] - complement_sums[first];
      if (denominator == 0) fail(ErrorKind::kInternal, "vanishing coefficient under property N");
      for (const Integer& v1 : images[first]) {
        for (const Integer& v2 : images[second]) {
          numerator = v1 - v2;
          if (mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()) != 0) {
            Integer quotient;
            mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
            found.insert(std::move(quotient));
          }
        }
      }
    }
  }
  std::vector<Integer> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sidon
