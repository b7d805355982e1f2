#include <algorithm>

#include "monid/oracles.hpp"

namespace monid {

std::vector<Var> IrreducibleComponent::support() const {
  std::vector<Var> out;
  for (Var v = 0; v < bounds.size(); ++v)
    if (bounds[v] > 0)
      out.push_back(v);
  return out;
}

bool IrreducibleComponent::contains(const Exponent& m) const {
  for (Var v = 0; v < bounds.size(); ++v)
    if (bounds[v] > 0 && m[v] >= bounds[v])
      return true;
  return false;
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  // Each generator x_v^b of `other` must be a multiple of x_v^{bounds[v]}.
  for (Var v = 0; v < bounds.size(); ++v)
    if (other.bounds[v] > 0 && (bounds[v] == 0 || bounds[v] > other.bounds[v]))
      return false;
  return true;
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            std::uint64_t max_steps) {
  ideal.require_proper_nonzero("irreducible_decomposition");
  const std::size_t n = ideal.num_vars();

  // I = (I + x_v^{a_v}) ∩ (I + u / x_v^{a_v}) for a generator u that is not
  // a pure power and v its first variable. Leaves are generated by pure
  // powers, i.e. irreducible.
  std::vector<IrreducibleComponent> leaves;
  std::vector<MonomialIdeal> work{ideal};
  std::uint64_t steps = 0;
  while (!work.empty()) {
    if (++steps > max_steps)
      throw CapExceeded("irreducible decomposition exceeded " + std::to_string(max_steps) + " steps");
    MonomialIdeal current = std::move(work.back());
    work.pop_back();
    const auto& gens = current.gens();
    const auto mixed = std::find_if(gens.begin(), gens.end(), [](const Exponent& g) {
      return std::count_if(g.coords().begin(), g.coords().end(), [](Coord c) { return c > 0; }) > 1;
    });
    if (mixed == gens.end()) {
      IrreducibleComponent leaf{Exponent(n)};
      for (const auto& g : gens)
        for (Var v = 0; v < n; ++v)
          if (g[v] > 0)
            leaf.bounds[v] = g[v];
      leaves.push_back(std::move(leaf));
      continue;
    }
    const Exponent& u = *mixed;
    Var v = 0;
    while (u[v] == 0)
      ++v;
    Exponent power(n), rest = u;
    power[v] = u[v];
    rest[v] = 0;
    std::vector<Exponent> left = gens, right = gens;
    left.push_back(power);
    right.push_back(rest);
    work.emplace_back(current.ring(), std::move(right));
    work.emplace_back(current.ring(), std::move(left));
  }

  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  // A component containing another one is redundant in the intersection.
  std::vector<IrreducibleComponent> out;
  for (const auto& c : leaves) {
    const bool redundant = std::any_of(leaves.begin(), leaves.end(), [&](const IrreducibleComponent& d) {
      return !(d == c) && c.contains(d);
    });
    if (!redundant)
      out.push_back(c);
  }
  return out;
}

std::set<std::vector<Var>> associated_primes(const MonomialIdeal& ideal, std::uint64_t max_steps) {
  std::set<std::vector<Var>> primes;
  for (const auto& c : irreducible_decomposition(ideal, max_steps))
    primes.insert(c.support());
  return primes;
}

std::size_t max_height(const MonomialIdeal& ideal, std::uint64_t max_steps) {
  std::size_t h = 0;
  for (const auto& p : associated_primes(ideal, max_steps))
    h = std::max(h, p.size());
  return h;
}

} // namespace monid
