#include "monid/rank.hpp"

#include <cassert>
#include <optional>

namespace monid {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw DomainError("ragged matrix literal");
    for (auto x : row)
      data_.emplace_back(x);
  }
}

namespace {

// Pivot preference: smallest |numerator * denominator| keeps entry growth
// down. Only a heuristic; any nonzero pivot gives the same rank.
Rational pivot_weight(const Rational& x) {
  return abs(Rational(numerator(x) * denominator(x)));
}

RationalMatrix exponent_matrix(const MonomialIdeal& ideal, bool affine) {
  const auto& gens = ideal.gens();
  const std::size_t n = ideal.num_vars();
  RationalMatrix m(gens.size(), n + (affine ? 1 : 0));
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (Var v = 0; v < n; ++v)
      m(r, v) = gens[r][v];
    if (affine)
      m(r, n) = 1;
  }
  return m;
}

} // namespace

std::size_t matrix_rank(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::optional<std::size_t> best;
    Rational best_weight;
    for (std::size_t r = rank; r < m.rows(); ++r) {
      if (m(r, col) == 0)
        continue;
      Rational w = pivot_weight(m(r, col));
      if (!best || w < best_weight) {
        best = r;
        best_weight = std::move(w);
      }
    }
    if (!best)
      continue;
    if (*best != rank)
      for (std::size_t c = col; c < m.cols(); ++c)
        std::swap(m(*best, c), m(rank, c));
    const Rational pivot = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0)
        continue;
      const Rational factor = m(r, col) / pivot;
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of_ideal(const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("rank");
  return matrix_rank(exponent_matrix(ideal, false));
}

std::size_t arank_of_ideal(const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("arank");
  return matrix_rank(exponent_matrix(ideal, true));
}

std::size_t analytic_spread_single_degree(const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("analytic spread");
  if (!is_single_degree(ideal))
    throw DomainError("analytic spread is only computed for ideals generated in a single degree");
  const auto rank = rank_of_ideal(ideal);
  assert(rank == arank_of_ideal(ideal));
  return rank;
}

} // namespace monid
