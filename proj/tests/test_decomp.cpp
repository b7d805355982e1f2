#include <doctest.h>

#include <algorithm>
#include <random>

#include "monid/decomp.hpp"
#include "monid/io.hpp"
#include "monid/rank.hpp"
#include "monid/wpm.hpp"
#include "support/brute.hpp"

using namespace monid;
using monid::testing::for_each_in_box;
using monid::testing::in_target;
using monid::testing::random_ideal;

namespace {

using Spaces = std::vector<StanleySpace>;

// Independent cover check: every monomial of the box [0, lcm + 1] lies in
// exactly one space if it belongs to the target, in none otherwise.
bool covers_exactly(const StanleyDecomposition& d) {
  const auto& I = d.ideal();
  Exponent hi(I.num_vars());
  for (const auto& u : I.gens())
    for (Var v = 0; v < hi.size(); ++v)
      hi[v] = std::max(hi[v], u[v]);
  for (const auto& s : d.spaces())
    for (Var v = 0; v < hi.size(); ++v)
      hi[v] = std::max(hi[v], s.base[v]);
  for (Var v = 0; v < hi.size(); ++v)
    hi[v] += 1;
  bool ok = true;
  for_each_in_box(hi, [&](const Exponent& m) {
    std::size_t hits = 0;
    for (const auto& s : d.spaces()) {
      bool inside = true;
      for (Var v = 0; v < m.size(); ++v) {
        const bool free = std::find(s.free.begin(), s.free.end(), v) != s.free.end();
        inside = inside && (free ? m[v] >= s.base[v] : m[v] == s.base[v]);
      }
      hits += inside;
    }
    ok = ok && hits == (in_target(I, d.target(), m) ? 1U : 0U);
  });
  return ok;
}

} // namespace

TEST_CASE("principal ideal and quotient decompositions") {
  const auto a = principal_ideal_decomposition(parse_ideal("ring 2; x1*x2"));
  CHECK(a.spaces() == Spaces{{{1, 1}, {0, 1}}});
  CHECK(a.sdepth() == 2);
  CHECK(verify(a).ok);

  const auto b = principal_ideal_decomposition(parse_ideal("ring 3; x1"));
  CHECK(b.spaces() == Spaces{{{1, 0, 0}, {0, 1, 2}}});
  CHECK(b.sdepth() == 3);
  CHECK(verify(b).ok);

  const auto c = principal_quotient_decomposition(parse_ideal("ring 2; x1"));
  CHECK(c.spaces() == Spaces{{{0, 0}, {1}}});
  CHECK(c.sdepth() == 1);

  const auto d = principal_quotient_decomposition(parse_ideal("ring 2; x1*x2"));
  CHECK(d.spaces() == Spaces{{{0, 0}, {1}}, {{1, 0}, {0}}});
  CHECK(d.sdepth() == 1);
  CHECK(verify(d).ok);
  CHECK(covers_exactly(d));

  const auto e = principal_quotient_decomposition(parse_ideal("ring 1; x1^2"));
  CHECK(e.spaces() == Spaces{{{0}, {}}, {{1}, {}}});
  CHECK(e.sdepth() == 0);

  CHECK_THROWS_AS(principal_ideal_decomposition(parse_ideal("ring 2; x1; x2")), DomainError);
}

TEST_CASE("adding a free variable") {
  const auto I = parse_ideal("ring 2; x2");
  const StanleyDecomposition sub(I, Target::Ideal, {1}, {{{0, 1}, {1}}});
  CHECK(sub.sdepth() == 1);
  CHECK(verify(sub).ok);
  const auto full = add_free_variable(sub, 0);
  CHECK(full.spaces() == Spaces{{{0, 1}, {0, 1}}});
  CHECK(full.sdepth() == 2);
  CHECK(verify(full).ok);
  CHECK_THROWS_AS(add_free_variable(full, 0), DomainError);
}

TEST_CASE("splitting by a variable") {
  const auto a = split_by_variable(parse_ideal("ring 2; x1; x2"), 0);
  CHECK(a.eliminated.gens() == std::vector<Exponent>{{0, 1}});
  CHECK(a.colon.is_unit());
  const auto b = split_by_variable(parse_ideal("ring 3; x1*x2; x2*x3"), 0);
  CHECK(b.eliminated.gens() == std::vector<Exponent>{{0, 1, 1}});
  CHECK(b.colon.gens() == std::vector<Exponent>{{0, 1, 0}});

  // I is the disjoint union of I_elim (no x1) and x1 * (I : x1).
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto I = random_ideal(rng, {.n = 3, .max_gens = 4, .max_exp = 2});
    const auto f = support_union(I).front();
    const auto [elim, colon] = split_by_variable(I, f);
    for_each_in_box(Exponent{4, 4, 4}, [&](const Exponent& m) {
      const bool via_elim = m[f] == 0 && elim.contains(m);
      const bool via_colon = m[f] > 0 && colon.contains(m.over_variable(f));
      CHECK(!(via_elim && via_colon));
      CHECK((via_elim || via_colon) == I.contains(m));
    });
  }
}

TEST_CASE("constructions on named examples") {
  const auto maximal = parse_ideal("ring 4; x1; x2; x3; x4");
  const auto di = decompose_ideal_wpm(maximal);
  CHECK(verify(di).ok);
  CHECK(di.sdepth() >= 1);
  const auto dq = decompose_quotient_wpm(parse_ideal("ring 2; x1; x2"));
  CHECK(dq.spaces() == Spaces{{{0, 0}, {}}});
  CHECK(dq.sdepth() == 0);

  const auto principal = parse_ideal("ring 3; x1^2*x3");
  CHECK(decompose_ideal_wpm(principal).sdepth() == 3);
  CHECK(decompose_quotient_wpm(principal).sdepth() == 2);

  const auto veronese = parse_ideal("ring 3; x1*x2; x1*x3; x2*x3");
  const auto dv = decompose_ideal_wpm(veronese, {.check_invariants = true});
  CHECK(verify(dv).ok);
  CHECK(dv.sdepth() >= 1);
  CHECK(dv.sdepth() == 2);

  const auto cycle = parse_ideal("ring 4; x1*x2; x2*x3; x3*x4; x1*x4");
  CHECK(rank_of_ideal(cycle) == 3);
  const auto ci = decompose_ideal_squarefree(cycle, {.check_invariants = true});
  const auto cq = decompose_quotient_squarefree(cycle, {.check_invariants = true});
  CHECK(verify(ci).ok);
  CHECK(verify(cq).ok);
  CHECK(ci.sdepth() >= 2);
  CHECK(cq.sdepth() >= 1);

  CHECK(decompose_ideal_squarefree(parse_ideal("ring 3; x1*x2*x3")).sdepth() == 3);

  CHECK_THROWS_AS(decompose_ideal_wpm(parse_ideal("ring 3; x1*x2; x3^2")), DomainError);
  CHECK_THROWS_AS(decompose_ideal_squarefree(parse_ideal("ring 2; x1^2")), DomainError);
}

TEST_CASE("verify produces certificates") {
  const auto I = parse_ideal("ring 2; x1");
  const StanleyDecomposition whole(I, Target::Quotient, {{{0, 0}, {0, 1}}});
  const auto r = verify(whole);
  REQUIRE_FALSE(r.ok);
  CHECK(r.violation->kind == VerifyViolation::Kind::Overshoot);
  CHECK(r.violation->monomial == Exponent{1, 0});
  CHECK(describe(*r.violation, I.ring()) == "x1 is covered but not in the target");

  const StanleyDecomposition overlap(I, Target::Ideal, {{{1, 0}, {0, 1}}, {{2, 1}, {0}}});
  const auto o = verify(overlap);
  REQUIRE_FALSE(o.ok);
  CHECK(o.violation->kind == VerifyViolation::Kind::Overlap);
  CHECK(describe(*o.violation, I.ring()) == "spaces 0 and 1 both contain x1^2*x2");

  const StanleyDecomposition partial(I, Target::Ideal, {{{1, 0}, {0}}});
  const auto p = verify(partial);
  REQUIRE_FALSE(p.ok);
  CHECK(p.violation->kind == VerifyViolation::Kind::Uncovered);
  CHECK(p.violation->monomial == Exponent{1, 1});

  const StanleyDecomposition outside(parse_ideal("ring 2; x2"), Target::Ideal, {0}, {{{0, 0}, {0}}});
  CHECK(verify(outside).violation->kind == VerifyViolation::Kind::Malformed);

  CHECK(verify(principal_quotient_decomposition(parse_ideal("ring 3; x1*x2^2"))).ok);
  CHECK_THROWS_AS(verify(principal_ideal_decomposition(parse_ideal("ring 6; x1^40")), 1000), CapExceeded);
}

TEST_CASE("decomposition JSON round-trips") {
  const auto I = parse_ideal("ring 3; x1*x2; x2*x3");
  for (const auto& d : {decompose_ideal_squarefree(I), decompose_quotient_squarefree(I)}) {
    const auto j = decomposition_to_json(d);
    CHECK(decomposition_from_json(nlohmann::json::parse(j.dump()), I) == d);
  }
  const StanleyDecomposition sub(parse_ideal("ring 2; x2"), Target::Ideal, {1}, {{{0, 1}, {1}}});
  const auto j = decomposition_to_json(sub);
  CHECK(j.dump() == R"({"target":"ideal","n":2,"vars":[2],"spaces":[{"base":[0,1],"free":[2]}],"sdepth":1})");
  CHECK(decomposition_from_json(nlohmann::json::parse(j.dump()), sub.ideal()) == sub);
  CHECK_THROWS_AS(decomposition_from_json(nlohmann::json::parse(R"({"target":"ideal","n":2,"spaces":[]})"), I),
                  DomainError);
}

TEST_CASE("WPM constructions verify and meet their bounds on random ideals") {
  std::mt19937_64 rng(47);
  int built = 0;
  for (int trial = 0; trial < 6000 && built < 250; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto I = random_ideal(rng, {.n = n, .max_gens = 5, .max_exp = 2});
    if (!is_weakly_polymatroidal(I).verdict)
      continue;
    ++built;
    const auto a = arank_of_ideal(I);
    const auto di = decompose_ideal_wpm(I, {.check_invariants = true});
    const auto dq = decompose_quotient_wpm(I, {.check_invariants = true});
    CHECK(verify(di).ok);
    CHECK(verify(dq).ok);
    CHECK(covers_exactly(di));
    CHECK(covers_exactly(dq));
    CHECK(di.sdepth() + a >= n + 1);
    CHECK(dq.sdepth() + a >= n);
  }
  CHECK(built == 250);
}

TEST_CASE("squarefree constructions verify and meet their bounds on random ideals") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto I = random_ideal(rng, {.n = n, .max_gens = 6, .squarefree = true});
    const auto r = rank_of_ideal(I);
    const auto di = decompose_ideal_squarefree(I, {.check_invariants = true});
    const auto dq = decompose_quotient_squarefree(I, {.check_invariants = true});
    CHECK(verify(di).ok);
    CHECK(verify(dq).ok);
    CHECK(covers_exactly(di));
    CHECK(covers_exactly(dq));
    CHECK(di.sdepth() + r >= n + 1);
    CHECK(dq.sdepth() + r >= n);
  }
}

TEST_CASE("constructions respect a non-identity variable order") {
  const auto I = parse_ideal("ring 2; x1^2; x2").with_order({1, 0});
  REQUIRE(is_weakly_polymatroidal(I).verdict);
  const auto di = decompose_ideal_wpm(I, {.check_invariants = true});
  const auto dq = decompose_quotient_wpm(I, {.check_invariants = true});
  CHECK(verify(di).ok);
  CHECK(verify(dq).ok);
  CHECK(dq.sdepth() + arank_of_ideal(I) >= 2);
}
