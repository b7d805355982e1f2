#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "monid/io.hpp"
#include "monid/rank.hpp"
#include "support/brute.hpp"

using namespace monid;
using monid::testing::arank_by_subsets;
using monid::testing::random_ideal;
using monid::testing::rank_by_minors;

TEST_CASE("matrix rank examples") {
  CHECK(matrix_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 3);
  CHECK(matrix_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{1, 1}, {2, 1}, {3, 1}}) == 2);
  CHECK(matrix_rank(RationalMatrix(0, 3)) == 0);
  // Large entries stay exact.
  CHECK(matrix_rank({{1000000007, 999999937}, {999999937, 998999983}}) == 2);
}

TEST_CASE("rank and affine rank of ideals") {
  CHECK(rank_of_ideal(parse_ideal("ring 3; x1*x2; x2*x3; x1*x3")) == 3);
  CHECK(rank_of_ideal(parse_ideal("ring 2; x1^2")) == 1);
  CHECK(arank_of_ideal(parse_ideal("ring 2; x1^2")) == 1);
  CHECK(rank_of_ideal(parse_ideal("ring 2; x1*x2; x1^2*x2^2")) == 1);
  CHECK(arank_of_ideal(parse_ideal("ring 2; x1; x2")) == 2);
  // Minimalization happens first: this ideal is principal.
  CHECK(arank_of_ideal(parse_ideal("ring 1; x1; x1^2; x1^3")) == 1);
  // Three points on an affine plane missing the origin.
  CHECK(rank_of_ideal(parse_ideal("ring 2; x1^3; x1*x2; x2^2")) == 2);
  CHECK(arank_of_ideal(parse_ideal("ring 2; x1^3; x1*x2; x2^2")) == 3);
  CHECK(arank_of_ideal(parse_ideal("ring 4; x1*x2*x3*x4")) == 1);
}

TEST_CASE("analytic spread for single-degree ideals") {
  CHECK(analytic_spread_single_degree(parse_ideal("ring 3; x1*x2; x2*x3; x1*x3")) == 3);
  CHECK(analytic_spread_single_degree(parse_ideal("ring 3; x1; x2; x3")) == 3);
  CHECK_THROWS_AS(analytic_spread_single_degree(parse_ideal("ring 2; x1^2; x2")), DomainError);
}

TEST_CASE("rank and affine rank match exhaustive subset searches") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto I = random_ideal(rng, {.n = n, .max_gens = 6, .max_exp = 3});
    const auto r = rank_of_ideal(I);
    const auto a = arank_of_ideal(I);
    CHECK(r == rank_by_minors(I.gens()));
    CHECK(a == arank_by_subsets(I.gens()));
    CHECK(a >= r);
    CHECK(a <= r + 1);
  }
}

TEST_CASE("single-degree ideals have equal rank and affine rank") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t d = 1 + trial % 3;
    const auto I = random_ideal(rng, {.n = n, .max_gens = 6, .max_exp = 3, .degree = d});
    CHECK(rank_of_ideal(I) == arank_of_ideal(I));
    CHECK(analytic_spread_single_degree(I) == rank_of_ideal(I));
  }
}

TEST_CASE("rank is invariant under permuting variables and generators") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto I = random_ideal(rng, {.n = 4, .max_gens = 6, .max_exp = 2});
    std::vector<Var> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Exponent> permuted;
    for (const auto& u : I.gens()) {
      Exponent w(4);
      for (Var v = 0; v < 4; ++v)
        w[perm[v]] = u[v];
      permuted.push_back(w);
    }
    std::shuffle(permuted.begin(), permuted.end(), rng);
    const MonomialIdeal J(PolyRing(4), permuted);
    CHECK(rank_of_ideal(J) == rank_of_ideal(I));
    CHECK(arank_of_ideal(J) == arank_of_ideal(I));
  }
}
