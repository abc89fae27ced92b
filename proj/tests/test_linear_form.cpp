#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sidon/error.hpp"
#include "test_util.hpp"
#include "sidon/linear_form.hpp"

using sidon::ErrorKind;
using sidon::IndexSet;
using sidon::Integer;
using sidon::LinearForm;

namespace {

IndexSet positions(std::initializer_list<std::size_t> list) {
  std::vector<std::size_t> v(list);
  return IndexSet::from_positions(v);
}

}  // namespace

TEST_CASE("parse_form computes arity and norm") {
  const LinearForm a = LinearForm::parse("1,3");
  CHECK(a.arity() == 2);
  CHECK(a.norm() == 4);
  CHECK(a.coeffs() == oracle::ints({1, 3}));

  const LinearForm b = LinearForm::parse("1,-2,4");
  CHECK(b.arity() == 3);
  CHECK(b.norm() == 7);
  CHECK(b.coeffs() == oracle::ints({1, -2, 4}));

  const LinearForm big = LinearForm::parse("123456789012345678901234567890,-1");
  CHECK(big.norm() == Integer("123456789012345678901234567891"));
}

TEST_CASE("parse_form rejects bad input") {
  CHECK(error_kind([] { LinearForm::parse("1,0,2"); }) == ErrorKind::kInvalidInput);
  CHECK(error_kind([] { LinearForm::parse(""); }) == ErrorKind::kInvalidInput);
  CHECK(error_kind([] { LinearForm::parse("1,,2"); }) == ErrorKind::kInvalidInput);
  CHECK(error_kind([] { LinearForm::parse("1,x"); }) == ErrorKind::kInvalidInput);
  CHECK(error_kind([] { LinearForm::parse("1.5"); }) == ErrorKind::kInvalidInput);
  try {
    LinearForm::parse("1,0,2");
  } catch (const sidon::Error& e) {
    CHECK(std::string(e.what()).find("zero coefficient") != std::string::npos);
  }
}

TEST_CASE("subset sums") {
  const LinearForm f = LinearForm::parse("1,2,4");
  CHECK(f.subset_sum(positions({1, 3})) == 5);
  CHECK(f.subset_sum(IndexSet()) == 0);
  CHECK(LinearForm::parse("1,-2,4").subset_sum(positions({1, 2, 3})) == 3);
  CHECK(LinearForm::parse("7,-9").subset_sum(IndexSet()) == 0);
}

TEST_CASE("subset sums are additive over disjoint index sets") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-50, 50);
  for (int round = 0; round < 200; ++round) {
    const std::size_t h = 1 + rng() % 8;
    std::vector<Integer> coeffs;
    while (coeffs.size() < h) {
      const long c = coeff(rng);
      if (c != 0) coeffs.emplace_back(c);
    }
    const LinearForm f(coeffs);
    const std::uint64_t full = IndexSet::full(h).mask();
    const std::uint64_t i = rng() & full;
    const std::uint64_t j = rng() & full & ~i;
    CHECK(f.subset_sum(IndexSet(i | j)) == f.subset_sum(IndexSet(i)) + f.subset_sum(IndexSet(j)));
  }
}

TEST_CASE("index set complement partitions the positions") {
  const IndexSet s = positions({1, 3});
  const IndexSet c = s.complement(4);
  CHECK(c == positions({2, 4}));
  CHECK(s.disjoint_from(c));
  CHECK(IndexSet(s.mask() | c.mask()) == IndexSet::full(4));
  CHECK(s.cardinality() == 2);
  CHECK(s.positions() == std::vector<std::size_t>{1, 3});
}

TEST_CASE("property N examples") {
  SUBCASE("(1,1) fails with {1},{2}") {
    const auto r = sidon::check_property_n(LinearForm::parse("1,1"));
    REQUIRE_FALSE(r.holds);
    CHECK(r.witness->first == positions({1}));
    CHECK(r.witness->second == positions({2}));
    CHECK(r.witness->common_sum == 1);
  }
  SUBCASE("(1,3) holds") { CHECK(sidon::check_property_n(LinearForm::parse("1,3")).holds); }
  SUBCASE("(1,2,4) holds") { CHECK(sidon::check_property_n(LinearForm::parse("1,2,4")).holds); }
  SUBCASE("(1,2,3) fails with {3},{1,2}") {
    const auto r = sidon::check_property_n(LinearForm::parse("1,2,3"));
    REQUIRE_FALSE(r.holds);
    CHECK(r.witness->first == positions({3}));
    CHECK(r.witness->second == positions({1, 2}));
    CHECK(r.witness->common_sum == 3);
  }
}

TEST_CASE("property N fails whenever two coefficients are equal") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const std::size_t h = 2 + rng() % 6;
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < h; ++i) coeffs.emplace_back(static_cast<long>(1 + rng() % 1000) * 7919 + i);
    const std::size_t a = rng() % h;
    std::size_t b = rng() % h;
    if (b == a) b = (a + 1) % h;
    coeffs[b] = coeffs[a];
    const auto r = sidon::check_property_n(LinearForm(coeffs));
    CHECK_FALSE(r.holds);
  }
}

TEST_CASE("property N agrees with nested-subset oracle and witnesses re-evaluate") {
  std::mt19937_64 rng(2024);
  int failures = 0;
  for (int round = 0; round < 400; ++round) {
    const std::size_t h = 1 + rng() % (round < 380 ? 8 : 10);
    // Small coefficients make collisions common; large ones make them rare.
    const long span = (round % 3 == 0) ? 200 : 12;
    std::uniform_int_distribution<long> coeff(-span, span);
    std::vector<Integer> coeffs;
    while (coeffs.size() < h) {
      const long c = coeff(rng);
      if (c != 0) coeffs.emplace_back(c);
    }
    const LinearForm f(coeffs);
    const auto r = sidon::check_property_n(f);
    REQUIRE(r.holds == oracle::has_property_n(coeffs));
    if (!r.holds) {
      ++failures;
      const auto& w = *r.witness;
      CHECK_FALSE(w.first.empty());
      CHECK_FALSE(w.second.empty());
      CHECK(w.first.disjoint_from(w.second));
      CHECK(oracle::subset_sum(coeffs, w.first.mask()) == w.common_sum);
      CHECK(oracle::subset_sum(coeffs, w.second.mask()) == w.common_sum);
    }
    if (r.vanishing_subset) CHECK(oracle::subset_sum(coeffs, r.vanishing_subset->mask()) == 0);
  }
  CHECK(failures > 50);
}

TEST_CASE("vanishing subset sums are diagnostics only") {
  const auto r = sidon::check_property_n(LinearForm::parse("1,-1,5"));
  REQUIRE(r.vanishing_subset.has_value());
  CHECK(*r.vanishing_subset == positions({1, 2}));
  CHECK(r.holds == oracle::has_property_n(oracle::ints({1, -1, 5})));
  CHECK_FALSE(sidon::check_property_n(LinearForm::parse("1,3")).vanishing_subset.has_value());
}

TEST_CASE("property N refuses arities above the ceiling") {
  std::vector<Integer> coeffs;
  for (long i = 0; i < 21; ++i) coeffs.emplace_back(Integer(1) << static_cast<unsigned>(i));
  const LinearForm f(coeffs);
  CHECK(error_kind([&] { sidon::check_property_n(f); }) == ErrorKind::kBudget);
  sidon::EngineOptions raised;
  raised.arity_limit = 21;
  CHECK(sidon::check_property_n(f, raised).holds);  // powers of two: all subset sums distinct
}

TEST_CASE("contraction") {
  const LinearForm f = LinearForm::parse("1,-2,4");
  const LinearForm c = f.contraction(positions({1, 3}));
  CHECK(c.coeffs() == oracle::ints({1, 4}));
  CHECK(c.source_positions() == std::vector<std::size_t>{1, 3});

  const LinearForm g = LinearForm::parse("1,3");
  CHECK(g.contraction(IndexSet::full(2)).coeffs() == g.coeffs());
  CHECK(g.contraction(positions({2})).coeffs() == oracle::ints({3}));
  CHECK(error_kind([&] { g.contraction(IndexSet()); }) == ErrorKind::kInvalidInput);
}

TEST_CASE("evaluate") {
  const LinearForm f = LinearForm::parse("1,3");
  const auto t = oracle::ints({2, 5});
  CHECK(f.evaluate(t) == 17);
  const auto bad = oracle::ints({1});
  CHECK(error_kind([&] { f.evaluate(bad); }) == ErrorKind::kInvalidInput);
}
