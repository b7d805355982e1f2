#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monid/core.hpp"

namespace monid {

/// Exact rational, always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Rank over Q by Gaussian elimination. Takes a copy; the argument is not
/// modified.
std::size_t matrix_rank(RationalMatrix m);

/// Size of the largest linearly independent subset of the generator
/// exponents. Rejects the zero and unit ideals.
std::size_t rank_of_ideal(const MonomialIdeal& ideal);

/// Size of the largest affinely independent subset of the generator
/// exponents, computed as the rank of the exponents with a trailing 1 column.
std::size_t arank_of_ideal(const MonomialIdeal& ideal);

/// Analytic spread of an ideal generated in a single degree, where it equals
/// the rank. Throws DomainError for mixed-degree ideals.
std::size_t analytic_spread_single_degree(const MonomialIdeal& ideal);

} // namespace monid
