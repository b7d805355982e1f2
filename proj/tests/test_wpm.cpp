#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "monid/corpus.hpp"
#include "monid/io.hpp"
#include "monid/wpm.hpp"
#include "support/brute.hpp"

using namespace monid;
using monid::testing::in_ideal;
using monid::testing::random_ideal;

namespace {

// Direct transcription of the definition, positions taken in `order`.
bool wpm_by_definition(const MonomialIdeal& I) {
  const auto& order = I.ring().order();
  const auto& G = I.gens();
  for (const auto& u : G) {
    for (const auto& v : G) {
      std::size_t p = 0;
      while (p < order.size() && u[order[p]] == v[order[p]])
        ++p;
      if (p == order.size() || u[order[p]] <= v[order[p]])
        continue;
      const Var t = order[p];
      bool found = false;
      for (std::size_t q = p + 1; q < order.size() && !found; ++q) {
        const Var j = order[q];
        if (v[j] == 0)
          continue;
        Exponent w = v;
        --w[j];
        ++w[t];
        found = in_ideal(G, w);
      }
      if (!found)
        return false;
    }
  }
  return true;
}

std::vector<Var> identity(std::size_t n) {
  std::vector<Var> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

} // namespace

TEST_CASE("weak polymatroidality examples") {
  CHECK(is_weakly_polymatroidal(parse_ideal("ring 3; x1*x2; x1*x3; x2*x3")).verdict);
  CHECK(is_weakly_polymatroidal(parse_ideal("ring 4; x1^3*x2*x4")).verdict);

  const auto bad = parse_ideal("ring 3; x1*x2; x3^2");
  const auto w = is_weakly_polymatroidal(bad);
  REQUIRE_FALSE(w.verdict);
  REQUIRE(w.failing_pair);
  CHECK(w.failing_pair->u == Exponent{1, 1, 0});
  CHECK(w.failing_pair->v == Exponent{0, 0, 2});
  CHECK(w.failing_pair->t == 0);
  CHECK(violates_exchange(bad, w.failing_pair->u, w.failing_pair->v, w.failing_pair->t));

  // (x1, x2^2) : x1 is the unit ideal.
  CHECK(is_weakly_polymatroidal(colon_by_variable(parse_ideal("ring 2; x1; x2^2"), 0)).verdict);
  CHECK_THROWS_AS(is_weakly_polymatroidal(MonomialIdeal::zero(PolyRing(2))), DomainError);
}

TEST_CASE("order search") {
  const auto order = find_wpm_order(parse_ideal("ring 3; x2*x3; x1*x2; x1*x3"));
  REQUIRE(order);
  CHECK(*order == identity(3));

  const auto swap = parse_ideal("ring 2; x1^2; x2");
  CHECK_FALSE(is_weakly_polymatroidal(swap).verdict);
  const auto found = find_wpm_order(swap);
  REQUIRE(found);
  CHECK(*found == std::vector<Var>{1, 0});
  CHECK(is_weakly_polymatroidal(swap.with_order(*found)).verdict);

  CHECK_FALSE(find_wpm_order(parse_ideal("ring 4; x1*x2; x3*x4")));
  CHECK_THROWS_AS(find_wpm_order(parse_ideal("ring 10; x1*x10"), 9), CapExceeded);
}

TEST_CASE("checker matches the definition under random orders") {
  std::mt19937_64 rng(31);
  int positives = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto I = random_ideal(rng, {.n = n, .max_gens = 4, .max_exp = 2});
    auto order = identity(n);
    std::shuffle(order.begin(), order.end(), rng);
    I = I.with_order(order);
    const auto w = is_weakly_polymatroidal(I);
    CHECK(w.verdict == wpm_by_definition(I));
    CHECK(w.verdict == !w.failing_pair.has_value());
    if (w.failing_pair)
      CHECK(violates_exchange(I, w.failing_pair->u, w.failing_pair->v, w.failing_pair->t));
    CHECK(is_weakly_polymatroidal(I).verdict == w.verdict);
    positives += w.verdict;
  }
  CHECK(positives > 100);
}

TEST_CASE("colon by the first variable keeps weak polymatroidality") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 300; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto I = random_ideal(rng, {.n = n, .max_gens = 5, .max_exp = 2});
    auto order = identity(n);
    std::shuffle(order.begin(), order.end(), rng);
    I = I.with_order(order);
    const Var first = order.front();
    if (!variable_in_support(I, first) || !wpm_by_definition(I))
      continue;
    ++checked;
    std::vector<Exponent> expected;
    for (const auto& u : I.gens())
      if (u[first] > 0)
        expected.push_back(u.over_variable(first));
    std::sort(expected.begin(), expected.end());
    const auto colon = colon_by_variable(I, first);
    CHECK(colon.gens() == expected);
    CHECK(colon.ring().order() == order);
    CHECK(wpm_by_definition(colon));
  }
  CHECK(checked == 300);
}

TEST_CASE("constructive corpus families are weakly polymatroidal") {
  for (auto family : {Family::MatroidalUniform, Family::RandomWpm, Family::Principal, Family::MaximalPower}) {
    CorpusSpec spec;
    spec.family = family;
    spec.n_min = 2;
    spec.n_max = 5;
    spec.degree_max = 3;
    spec.count = 60;
    spec.seed = 41;
    for (const auto& I : generate_corpus(spec))
      CHECK_MESSAGE(wpm_by_definition(I), to_string(family) << ": " << format_ideal(I));
  }
}
