#pragma once

// Rings, monomials and monomial ideals.
//
// Variables are addressed by 0-based index everywhere in the C++ API. The
// text format, JSON and the CLI use 1-based indices and translate at the
// boundary.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "monid/error.hpp"

namespace monid {

using Var = std::size_t;
using Coord = std::uint32_t;

class PolyRing {
public:
  /// x1..xn with the identity variable order.
  explicit PolyRing(std::size_t n);
  PolyRing(std::vector<std::string> names, std::vector<Var> order);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Var v) const { return names_.at(v); }

  /// order()[p] is the variable at position p. Position 0 is the largest
  /// variable for weak polymatroidality.
  const std::vector<Var>& order() const { return order_; }
  std::size_t position(Var v) const { return position_.at(v); }
  bool has_identity_order() const;

  PolyRing with_order(std::vector<Var> order) const;

  /// Same n and same names. The variable order is not part of ring equality
  /// because it only affects the WPM predicate, not the ideal.
  bool same_variables(const PolyRing& other) const { return names_ == other.names_; }
  bool operator==(const PolyRing& other) const = default;

private:
  std::vector<std::string> names_;
  std::vector<Var> order_;
  std::vector<std::size_t> position_;
};

/// Exponent vector of a monomial x^a.
class Exponent {
public:
  Exponent() = default;
  explicit Exponent(std::size_t n) : coords_(n, 0) {}
  Exponent(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit Exponent(std::vector<Coord> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  Coord operator[](Var v) const { return coords_[v]; }
  Coord& operator[](Var v) { return coords_[v]; }
  const std::vector<Coord>& coords() const { return coords_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;

  /// Componentwise <=, i.e. this monomial divides `other`.
  bool divides(const Exponent& other) const;

  /// x_v * this. Throws DomainError on coordinate overflow.
  Exponent times_variable(Var v) const;
  /// this / x_v. Precondition: coordinate v is positive.
  Exponent over_variable(Var v) const;

  static Exponent unit_vector(std::size_t n, Var v);

  // Lexicographic on the coordinates.
  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;

private:
  std::vector<Coord> coords_;
};

/// Unique antichain generating the same ideal as `gens`, sorted
/// lexicographically with duplicates merged.
std::vector<Exponent> minimalize(std::span<const Exponent> gens);

/// A monomial ideal, stored as its minimal generators G(I).
///
/// The zero ideal has no generators. The unit ideal has the single generator
/// 0. Both are representable; operations that need a proper nonzero ideal
/// reject them with DomainError.
class MonomialIdeal {
public:
  MonomialIdeal(PolyRing ring, std::vector<Exponent> gens);

  static MonomialIdeal zero(PolyRing ring) { return MonomialIdeal(std::move(ring), {}); }

  const PolyRing& ring() const { return ring_; }
  std::size_t num_vars() const { return ring_.size(); }
  const std::vector<Exponent>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_principal() const { return gens_.size() == 1; }

  bool contains(const Exponent& m) const;

  /// Throws DomainError unless the ideal is nonzero and proper.
  void require_proper_nonzero(const char* operation) const;

  MonomialIdeal with_order(std::vector<Var> order) const;

  bool operator==(const MonomialIdeal& other) const {
    return ring_.same_variables(other.ring_) && gens_ == other.gens_;
  }

private:
  PolyRing ring_;
  std::vector<Exponent> gens_;
};

/// (I : x_v). Rejects the zero ideal.
MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, Var v);

/// I ∩ K[x_i : i != v] viewed in the same ambient ring. May be zero.
MonomialIdeal eliminate_variable(const MonomialIdeal& ideal, Var v);

bool is_squarefree(const MonomialIdeal& ideal);
bool is_single_degree(const MonomialIdeal& ideal);
std::vector<Var> support_union(const MonomialIdeal& ideal);
bool variable_in_support(const MonomialIdeal& ideal, Var v);

/// Componentwise maximum of the generators (the lcm of G(I)).
Exponent generator_lcm(const MonomialIdeal& ideal);

} // namespace monid
