#pragma once

#include <cstdint>

namespace sidon {

// Limits applied to every exponential enumeration.  Exceeding one is a
// refusal (ErrorKind::kBudget), never a silent truncation.
struct EngineOptions {
  // Maximum number of h-tuples enumerated by phi_image / is_sidon / can_extend.
  std::uint64_t tuple_budget = 100'000'000;
  // Maximum sum over subset pairs of |A|^{|J1|+|J2|} for forbidden_values.
  std::uint64_t forbidden_budget = 100'000'000;
  // Largest arity accepted by the 3^h property-N enumeration.
  unsigned arity_limit = 20;
  // Worker count for tuple enumeration.  Results never depend on it.
  unsigned threads = 1;
};

}  // namespace sidon
