#include "monid/corpus.hpp"

#include <algorithm>
#include <limits>

#include "monid/wpm.hpp"

namespace monid {

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::RandomSquarefree, "random-squarefree"},
    {Family::RandomSingleDegree, "random-single-degree"},
    {Family::RandomWpm, "random-wpm"},
    {Family::MatroidalUniform, "matroidal-uniform"},
    {Family::Principal, "principal"},
    {Family::MaximalPower, "maximal-power"},
    {Family::RandomMixed, "random-mixed"},
};

// Random monomial of total degree d: d balls into n boxes.
Exponent random_monomial(CorpusRng& rng, std::size_t n, std::size_t d) {
  Exponent m(n);
  for (std::size_t k = 0; k < d; ++k)
    ++m[rng.uniform(0, n - 1)];
  return m;
}

Exponent random_squarefree(CorpusRng& rng, std::size_t n, std::size_t d) {
  std::vector<Var> vars(n);
  for (Var v = 0; v < n; ++v)
    vars[v] = v;
  Exponent m(n);
  for (std::size_t k = 0; k < d; ++k) {
    const auto pick = rng.uniform(k, n - 1);
    std::swap(vars[k], vars[pick]);
    m[vars[k]] = 1;
  }
  return m;
}

// All monomials of degree d, optionally squarefree only.
std::vector<Exponent> all_of_degree(std::size_t n, std::size_t d, bool squarefree) {
  std::vector<Exponent> out;
  Exponent m(n);
  auto rec = [&](auto&& self, Var v, std::size_t left) -> void {
    if (v + 1 == n) {
      if (!squarefree || left <= 1) {
        m[v] = static_cast<Coord>(left);
        out.push_back(m);
      }
      return;
    }
    const std::size_t top = squarefree ? std::min<std::size_t>(left, 1) : left;
    for (std::size_t c = 0; c <= top; ++c) {
      m[v] = static_cast<Coord>(c);
      self(self, v + 1, left - c);
    }
    m[v] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// Smallest strongly stable ideal containing the seeds: closed under
// u -> x_i u / x_j for i < j.
std::vector<Exponent> borel_closure(std::vector<Exponent> seeds) {
  std::vector<Exponent> all;
  while (!seeds.empty()) {
    Exponent u = std::move(seeds.back());
    seeds.pop_back();
    if (std::find(all.begin(), all.end(), u) != all.end())
      continue;
    for (Var j = 0; j < u.size(); ++j) {
      if (u[j] == 0)
        continue;
      for (Var i = 0; i < j; ++i) {
        Exponent w = u;
        --w[j];
        ++w[i];
        seeds.push_back(std::move(w));
      }
    }
    all.push_back(std::move(u));
  }
  return all;
}

// Product of ideals generated by variable subsets: a transversal
// polymatroidal ideal.
std::vector<Exponent> transversal(CorpusRng& rng, std::size_t n, std::size_t d) {
  std::vector<Exponent> gens{Exponent(n)};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Var> subset;
    while (subset.empty())
      for (Var v = 0; v < n; ++v)
        if (rng.uniform(0, 2) == 0)
          subset.push_back(v);
    std::vector<Exponent> next;
    for (const auto& g : gens)
      for (Var v : subset)
        next.push_back(g.times_variable(v));
    gens = minimalize(next);
  }
  return gens;
}

std::size_t pick_count(CorpusRng& rng, const CorpusSpec& spec) {
  return rng.uniform(1, std::max<std::size_t>(spec.max_gens, 1));
}

std::vector<Exponent> random_mixed(CorpusRng& rng, const CorpusSpec& spec, std::size_t n) {
  std::vector<Exponent> gens;
  const auto m = pick_count(rng, spec);
  for (std::size_t k = 0; k < m; ++k)
    gens.push_back(random_monomial(rng, n, rng.uniform(spec.degree_min, spec.degree_max)));
  return gens;
}

MonomialIdeal make(std::size_t n, std::vector<Exponent> gens) {
  return MonomialIdeal(PolyRing(n), std::move(gens));
}

MonomialIdeal random_wpm(CorpusRng& rng, const CorpusSpec& spec, std::size_t n) {
  const auto d = rng.uniform(spec.degree_min, spec.degree_max);
  switch (rng.uniform(0, 3)) {
  case 0:
  case 1:
    for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
      auto ideal = make(n, random_mixed(rng, spec, n));
      if (!ideal.is_unit() && is_weakly_polymatroidal(ideal).verdict)
        return ideal;
    }
    throw CapExceeded("random-wpm: rejection sampling starved after " +
                      std::to_string(spec.max_attempts) + " attempts");
  case 2: {
    std::vector<Exponent> seeds;
    const auto m = rng.uniform(1, 2);
    for (std::size_t k = 0; k < m; ++k)
      seeds.push_back(random_monomial(rng, n, rng.uniform(spec.degree_min, spec.degree_max)));
    return make(n, borel_closure(std::move(seeds)));
  }
  default:
    return make(n, transversal(rng, n, d));
  }
}

} // namespace

const char* to_string(Family family) {
  for (const auto& f : kFamilies)
    if (f.family == family)
      return f.name;
  return "?";
}

Family family_from_string(const std::string& name) {
  for (const auto& f : kFamilies)
    if (name == f.name)
      return f.family;
  throw DomainError("unknown corpus family '" + name + "'");
}

std::uint64_t CorpusRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (hi <= lo)
    return lo;
  const std::uint64_t span = hi - lo + 1;
  if (span == 0)
    return engine_();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % span;
}

std::vector<MonomialIdeal> generate_corpus(const CorpusSpec& spec) {
  if (spec.n_min == 0 || spec.n_min > spec.n_max)
    throw DomainError("corpus: need 1 <= n_min <= n_max");
  if (spec.degree_min == 0 || spec.degree_min > spec.degree_max)
    throw DomainError("corpus: need 1 <= degree_min <= degree_max");

  CorpusRng rng(spec.seed);
  std::vector<MonomialIdeal> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const auto n = rng.uniform(spec.n_min, spec.n_max);
    switch (spec.family) {
    case Family::Principal:
      out.push_back(make(n, {random_monomial(rng, n, rng.uniform(spec.degree_min, spec.degree_max))}));
      break;
    case Family::RandomSquarefree: {
      std::vector<Exponent> gens;
      const auto m = pick_count(rng, spec);
      const auto top = std::min<std::size_t>(spec.degree_max, n);
      const auto bottom = std::min<std::size_t>(spec.degree_min, top);
      for (std::size_t k = 0; k < m; ++k)
        gens.push_back(random_squarefree(rng, n, rng.uniform(bottom, top)));
      out.push_back(make(n, std::move(gens)));
      break;
    }
    case Family::RandomSingleDegree: {
      const auto d = rng.uniform(spec.degree_min, spec.degree_max);
      std::vector<Exponent> gens;
      const auto m = pick_count(rng, spec);
      for (std::size_t k = 0; k < m; ++k)
        gens.push_back(random_monomial(rng, n, d));
      out.push_back(make(n, std::move(gens)));
      break;
    }
    case Family::RandomMixed:
      out.push_back(make(n, random_mixed(rng, spec, n)));
      break;
    case Family::RandomWpm:
      out.push_back(random_wpm(rng, spec, n));
      break;
    case Family::MatroidalUniform: {
      const auto top = std::min<std::size_t>(spec.degree_max, n);
      const auto d = rng.uniform(std::min<std::size_t>(spec.degree_min, top), top);
      out.push_back(make(n, all_of_degree(n, d, true)));
      break;
    }
    case Family::MaximalPower:
      out.push_back(make(n, all_of_degree(n, rng.uniform(spec.degree_min, spec.degree_max), false)));
      break;
    }
  }
  return out;
}

} // namespace monid
