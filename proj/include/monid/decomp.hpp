#pragma once

// Stanley decompositions of I and S/I.
//
// A Stanley space (u, Z) is the set of monomials m with m_j = u_j for j not
// in Z and m_j >= u_j for j in Z. A decomposition lives in a polynomial
// subring K[x_i : i in vars] of the ambient ring; top-level decompositions
// use every variable.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monid/core.hpp"

namespace monid {

enum class Target { Ideal, Quotient };

const char* to_string(Target target);
Target target_from_string(const std::string& name);

struct StanleySpace {
  Exponent base;
  std::vector<Var> free; // sorted, no duplicates

  std::size_t dimension() const { return free.size(); }
  bool contains(const Exponent& m) const;

  auto operator<=>(const StanleySpace&) const = default;
  bool operator==(const StanleySpace&) const = default;
};

class StanleyDecomposition {
public:
  /// Full-ring decomposition.
  StanleyDecomposition(MonomialIdeal ideal, Target target, std::vector<StanleySpace> spaces);
  /// Decomposition over the subring generated by `vars`.
  StanleyDecomposition(MonomialIdeal ideal, Target target, std::vector<Var> vars,
                       std::vector<StanleySpace> spaces);

  const MonomialIdeal& ideal() const { return ideal_; }
  Target target() const { return target_; }
  const std::vector<Var>& vars() const { return vars_; }
  bool is_full_ring() const { return vars_.size() == ideal_.num_vars(); }

  /// Sorted by (base lex, free lex).
  const std::vector<StanleySpace>& spaces() const { return spaces_; }

  /// Minimum space dimension. An empty decomposition (S/(1), or the zero
  /// ideal) reports the number of variables of its ring by convention.
  std::size_t sdepth() const;

  bool operator==(const StanleyDecomposition&) const = default;

private:
  MonomialIdeal ideal_;
  Target target_;
  std::vector<Var> vars_;
  std::vector<StanleySpace> spaces_;
};

inline std::size_t sdepth_of(const StanleyDecomposition& d) { return d.sdepth(); }

/// I = (u): the single space (u, all variables).
StanleyDecomposition principal_ideal_decomposition(const MonomialIdeal& ideal);

/// S/(u) by the staircase over supp(u) = {i1 < ... < ik}: for each t and each
/// 0 <= c < a_t the space (x_i1^a1 ... x_i(t-1)^a(t-1) x_it^c, all vars but
/// x_it).
StanleyDecomposition principal_quotient_decomposition(const MonomialIdeal& ideal);

/// Extends a decomposition over K[vars] to K[vars, x_v]. Requires that v is
/// not yet a variable of the decomposition and divides no generator.
StanleyDecomposition add_free_variable(const StanleyDecomposition& d, Var v);

struct SplitParts {
  MonomialIdeal eliminated; // I ∩ K[x_i : i != v]
  MonomialIdeal colon;      // (I : x_v)
};

/// The two pieces of I = I' ⊕ x_v I''. Requires v in the support of I.
SplitParts split_by_variable(const MonomialIdeal& ideal, Var v);

struct ConstructionOptions {
  /// Check the rank/affine-rank monotonicity facts the recursion relies on at
  /// every step and throw InvariantViolation if one fails.
  bool check_invariants = false;
};

/// Weakly polymatroidal ideals (ring order): sdepth >= n - arank(I) + 1.
StanleyDecomposition decompose_ideal_wpm(const MonomialIdeal& ideal,
                                         const ConstructionOptions& options = {});
/// Weakly polymatroidal ideals (ring order): sdepth(S/I) >= n - arank(I).
StanleyDecomposition decompose_quotient_wpm(const MonomialIdeal& ideal,
                                            const ConstructionOptions& options = {});
/// Squarefree ideals: sdepth >= n - rank(I) + 1.
StanleyDecomposition decompose_ideal_squarefree(const MonomialIdeal& ideal,
                                                const ConstructionOptions& options = {});
/// Squarefree ideals: sdepth(S/I) >= n - rank(I).
StanleyDecomposition decompose_quotient_squarefree(const MonomialIdeal& ideal,
                                                   const ConstructionOptions& options = {});

struct VerifyViolation {
  enum class Kind { Malformed, Overlap, Uncovered, Overshoot };
  Kind kind;
  std::size_t first = 0;  // space indices for Overlap / Malformed
  std::size_t second = 0;
  Exponent monomial;      // offending monomial; for Overlap one in both spaces
  std::string message;
};

struct VerifyResult {
  bool ok = true;
  std::optional<VerifyViolation> violation;
};

inline constexpr std::size_t kDefaultVerifyBoxCap = 50'000'000;

/// Decides exactly whether the spaces are pairwise disjoint and cover
/// precisely the target. Returns the first violation found: overlaps by
/// space index, then coverage failures in lex order of the monomial.
VerifyResult verify(const StanleyDecomposition& d, std::size_t box_cap = kDefaultVerifyBoxCap);

/// {"target", "n", "spaces": [{"base", "free"}], "sdepth"}; free variables
/// are 1-based. A "vars" array (1-based) is added for subring
/// decompositions.
nlohmann::ordered_json decomposition_to_json(const StanleyDecomposition& d);
StanleyDecomposition decomposition_from_json(const nlohmann::json& j, const MonomialIdeal& ideal);

std::string describe(const VerifyViolation& violation, const PolyRing& ring);

} // namespace monid
