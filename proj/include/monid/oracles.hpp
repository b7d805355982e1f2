#pragma once

// Independent ground truth for small instances: the true Stanley depth,
// depth of S/I over Q via multigraded Betti numbers, and associated primes
// via irreducible decomposition. None of these use the constructions in
// decomp.hpp.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "monid/core.hpp"
#include "monid/decomp.hpp"

namespace monid {

// ---------------------------------------------------------------------------
// Exact Stanley depth

struct SdepthCaps {
  std::size_t max_n = 6;
  std::size_t max_poset = 4096;
  /// Search budget in cell visits, summed over all levels. Roughly a few
  /// seconds of work at the default.
  std::uint64_t max_work = 100'000'000;
};

/// The finite poset {a <= g : x^a in I} (or not in I, for S/I) with
/// g = componentwise maximum of the generators. An interval partition
/// of it is the same thing as a Stanley decomposition; an interval [c, d]
/// has dimension #{j : d_j = g_j}.
struct CharacteristicPoset {
  Exponent bound;                  // g
  std::vector<Exponent> elements;  // lex order
};

CharacteristicPoset characteristic_poset(const MonomialIdeal& ideal, Target target,
                                         const SdepthCaps& caps = {});

struct ExactSdepthResult {
  std::size_t sdepth = 0;
  std::size_t poset_size = 0;
  std::uint64_t nodes = 0;
  StanleyDecomposition witness;
};

/// Maximum of sdepth(D) over all Stanley decompositions D of I or S/I, with
/// one optimal decomposition. Throws CapExceeded outside the caps.
ExactSdepthResult exact_sdepth(const MonomialIdeal& ideal, Target target, const SdepthCaps& caps = {});

// ---------------------------------------------------------------------------
// Multigraded Betti numbers of S/I over Q

struct BettiCaps {
  std::size_t max_n = 8;
  std::uint64_t max_box = 2'000'000;
};

class BettiTable {
public:
  explicit BettiTable(std::size_t n) : n_(n) {}

  std::uint64_t at(std::size_t i, const Exponent& a) const;
  std::uint64_t total(std::size_t i) const;
  /// Largest i with a nonzero beta_i.
  std::size_t projective_dimension() const;
  std::size_t num_vars() const { return n_; }

  /// Nonzero entries keyed by (homological degree, multidegree).
  const std::map<std::pair<std::size_t, Exponent>, std::uint64_t>& entries() const { return entries_; }
  void set(std::size_t i, const Exponent& a, std::uint64_t value);

private:
  std::size_t n_;
  std::map<std::pair<std::size_t, Exponent>, std::uint64_t> entries_;
};

/// beta_{i,a}(S/I) for all a up to the lcm of the generators, from the
/// reduced homology of the upper Koszul complexes
/// K^a = {F ⊆ supp(a) : x^(a - F) in I}: beta_{i,a}(S/I) = dim H~_{i-2}(K^a)
/// for i >= 1, and beta_{0,0} = 1.
BettiTable betti_numbers(const MonomialIdeal& ideal, const BettiCaps& caps = {});

/// n - pd(S/I) (Auslander-Buchsbaum), over Q.
std::size_t depth_quotient(const MonomialIdeal& ideal, const BettiCaps& caps = {});

// ---------------------------------------------------------------------------
// Irreducible decomposition and associated primes

/// The irreducible ideal (x_i^{b_i} : b_i > 0).
struct IrreducibleComponent {
  Exponent bounds;

  std::vector<Var> support() const;
  std::size_t height() const { return support().size(); }
  bool contains(const Exponent& m) const;
  /// This component contains `other` as an ideal.
  bool contains(const IrreducibleComponent& other) const;

  auto operator<=>(const IrreducibleComponent&) const = default;
  bool operator==(const IrreducibleComponent&) const = default;
};

inline constexpr std::uint64_t kDefaultSplitCap = 1'000'000;

/// Irredundant irreducible decomposition, sorted. Rejects the zero and unit
/// ideals; throws CapExceeded after `max_steps` splitting steps.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            std::uint64_t max_steps = kDefaultSplitCap);

/// Ass(S/I) as sets of variable indices.
std::set<std::vector<Var>> associated_primes(const MonomialIdeal& ideal,
                                             std::uint64_t max_steps = kDefaultSplitCap);

std::size_t max_height(const MonomialIdeal& ideal, std::uint64_t max_steps = kDefaultSplitCap);

} // namespace monid
