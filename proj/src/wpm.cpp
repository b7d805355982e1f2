#include "monid/wpm.hpp"

#include <algorithm>
#include <numeric>

namespace monid {

namespace {

// Some x_j after t in the order with x_j | v and x_t * v / x_j in I.
bool has_exchange(const MonomialIdeal& ideal, const Exponent& v, Var t) {
  const auto& ring = ideal.ring();
  for (std::size_t p = ring.position(t) + 1; p < ring.size(); ++p) {
    const Var j = ring.order()[p];
    if (v[j] == 0)
      continue;
    Exponent w = v;
    --w[j];
    ++w[t];
    if (ideal.contains(w))
      return true;
  }
  return false;
}

// Variable at the first order position where u and v differ, if u is larger
// there.
std::optional<Var> first_excess(const PolyRing& ring, const Exponent& u, const Exponent& v) {
  for (Var x : ring.order()) {
    if (u[x] == v[x])
      continue;
    if (u[x] > v[x])
      return x;
    return std::nullopt;
  }
  return std::nullopt;
}

} // namespace

bool violates_exchange(const MonomialIdeal& ideal, const Exponent& u, const Exponent& v, Var t) {
  const auto excess = first_excess(ideal.ring(), u, v);
  return excess && *excess == t && !has_exchange(ideal, v, t);
}

WpmWitness is_weakly_polymatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw DomainError("is_weakly_polymatroidal: zero ideal");
  const auto& gens = ideal.gens();
  for (const auto& u : gens) {
    for (const auto& v : gens) {
      if (&u == &v)
        continue;
      const auto t = first_excess(ideal.ring(), u, v);
      if (t && !has_exchange(ideal, v, *t))
        return {false, WpmFailure{u, v, *t}};
    }
  }
  return {};
}

std::optional<std::vector<Var>> find_wpm_order(const MonomialIdeal& ideal, std::size_t max_n) {
  ideal.require_proper_nonzero("find_wpm_order");
  const std::size_t n = ideal.num_vars();
  if (n > max_n)
    throw CapExceeded("order search over " + std::to_string(n) + "! orders exceeds the limit n <= " +
                      std::to_string(max_n));
  std::vector<Var> order(n);
  std::iota(order.begin(), order.end(), Var{0});
  do {
    if (is_weakly_polymatroidal(ideal.with_order(order)).verdict)
      return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

} // namespace monid
