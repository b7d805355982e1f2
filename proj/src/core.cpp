#include "monid/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace monid {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::vector<Var> identity_order(std::size_t n) {
  std::vector<Var> order(n);
  std::iota(order.begin(), order.end(), Var{0});
  return order;
}

void require_var(const MonomialIdeal& ideal, Var v) {
  if (v >= ideal.num_vars())
    throw DomainError("variable index " + std::to_string(v + 1) +
                      " out of range 1.." + std::to_string(ideal.num_vars()));
}

void require_nonzero(const MonomialIdeal& ideal, const char* operation) {
  if (ideal.is_zero())
    throw DomainError(std::string(operation) + ": zero ideal");
}

} // namespace

PolyRing::PolyRing(std::size_t n) : PolyRing(default_names(n), identity_order(n)) {}

PolyRing::PolyRing(std::vector<std::string> names, std::vector<Var> order)
    : names_(std::move(names)), order_(std::move(order)) {
  const std::size_t n = names_.size();
  if (n == 0)
    throw DomainError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty())
      throw DomainError("empty variable name");
    if (!seen.insert(name).second)
      throw DomainError("duplicate variable name '" + name + "'");
  }
  if (order_.size() != n)
    throw DomainError("variable order must list all " + std::to_string(n) + " variables");
  position_.assign(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    const Var v = order_[p];
    if (v >= n || position_[v] != n)
      throw DomainError("variable order is not a permutation");
    position_[v] = p;
  }
}

bool PolyRing::has_identity_order() const {
  for (std::size_t p = 0; p < order_.size(); ++p)
    if (order_[p] != p)
      return false;
  return true;
}

PolyRing PolyRing::with_order(std::vector<Var> order) const {
  return PolyRing(names_, std::move(order));
}

std::uint64_t Exponent::degree() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint64_t{0});
}

bool Exponent::is_one() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

bool Exponent::is_squarefree() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c <= 1; });
}

bool Exponent::divides(const Exponent& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i])
      return false;
  return true;
}

Exponent Exponent::times_variable(Var v) const {
  if (coords_.at(v) == std::numeric_limits<Coord>::max())
    throw DomainError("exponent overflow");
  Exponent out = *this;
  ++out.coords_[v];
  return out;
}

Exponent Exponent::over_variable(Var v) const {
  if (coords_.at(v) == 0)
    throw DomainError("monomial is not divisible by the variable");
  Exponent out = *this;
  --out.coords_[v];
  return out;
}

Exponent Exponent::unit_vector(std::size_t n, Var v) {
  Exponent e(n);
  e[v] = 1;
  return e;
}

std::vector<Exponent> minimalize(std::span<const Exponent> gens) {
  std::vector<Exponent> sorted(gens.begin(), gens.end());
  // Sorting by degree first means a divisor is always seen before its
  // multiples.
  std::sort(sorted.begin(), sorted.end(), [](const Exponent& a, const Exponent& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Exponent> kept;
  for (auto& g : sorted) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Exponent& k) { return k.divides(g); });
    if (!redundant)
      kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(PolyRing ring, std::vector<Exponent> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens)
    if (g.size() != ring_.size())
      throw DomainError("generator has " + std::to_string(g.size()) +
                        " coordinates, ring has " + std::to_string(ring_.size()));
  gens_ = minimalize(gens);
}

bool MonomialIdeal::contains(const Exponent& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return g.divides(m); });
}

void MonomialIdeal::require_proper_nonzero(const char* operation) const {
  require_nonzero(*this, operation);
  if (is_unit())
    throw DomainError(std::string(operation) + ": unit ideal");
}

MonomialIdeal MonomialIdeal::with_order(std::vector<Var> order) const {
  return MonomialIdeal(ring_.with_order(std::move(order)), gens_);
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, Var v) {
  require_nonzero(ideal, "colon");
  require_var(ideal, v);
  std::vector<Exponent> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& u : ideal.gens())
    gens.push_back(u[v] > 0 ? u.over_variable(v) : u);
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal eliminate_variable(const MonomialIdeal& ideal, Var v) {
  require_var(ideal, v);
  std::vector<Exponent> gens;
  for (const auto& u : ideal.gens())
    if (u[v] == 0)
      gens.push_back(u);
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool is_squarefree(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "is_squarefree");
  return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                     [](const Exponent& g) { return g.is_squarefree(); });
}

bool is_single_degree(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "is_single_degree");
  const auto d = ideal.gens().front().degree();
  return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                     [d](const Exponent& g) { return g.degree() == d; });
}

std::vector<Var> support_union(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "support_union");
  std::vector<Var> support;
  for (Var v = 0; v < ideal.num_vars(); ++v)
    if (variable_in_support(ideal, v))
      support.push_back(v);
  return support;
}

bool variable_in_support(const MonomialIdeal& ideal, Var v) {
  require_var(ideal, v);
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [v](const Exponent& g) { return g[v] > 0; });
}

Exponent generator_lcm(const MonomialIdeal& ideal) {
  Exponent lcm(ideal.num_vars());
  for (const auto& g : ideal.gens())
    for (Var v = 0; v < lcm.size(); ++v)
      lcm[v] = std::max(lcm[v], g[v]);
  return lcm;
}

} // namespace monid
