#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monid/core.hpp"

namespace monid {

/// A pair of generators (u, v) that first differ at variable `t` (in the
/// ring order) with u_t > v_t, and for which no later variable x_j dividing
/// v gives x_t * v / x_j in I.
struct WpmFailure {
  Exponent u;
  Exponent v;
  Var t;
};

struct WpmWitness {
  bool verdict = true;
  std::optional<WpmFailure> failing_pair;
};

/// Checks weak polymatroidality with respect to the ring's variable order.
/// The unit ideal passes (it has one generator); the zero ideal is rejected.
WpmWitness is_weakly_polymatroidal(const MonomialIdeal& ideal);

/// Re-checks a single pair: true if (u, v) violates the exchange condition
/// at t under the ring order of `ideal`.
bool violates_exchange(const MonomialIdeal& ideal, const Exponent& u, const Exponent& v, Var t);

inline constexpr std::size_t kDefaultOrderSearchLimit = 9;

/// Lexicographically first permutation (order()[p] = variable at position
/// p) under which the ideal is weakly polymatroidal, or nullopt. Throws
/// CapExceeded if n > max_n.
std::optional<std::vector<Var>> find_wpm_order(const MonomialIdeal& ideal,
                                               std::size_t max_n = kDefaultOrderSearchLimit);

} // namespace monid
