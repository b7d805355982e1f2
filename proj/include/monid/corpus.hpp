#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monid/core.hpp"

namespace monid {

enum class Family {
  RandomSquarefree,
  RandomSingleDegree,
  RandomWpm,
  MatroidalUniform,
  Principal,
  MaximalPower,
  RandomMixed,
};

const char* to_string(Family family);
Family family_from_string(const std::string& name);

struct CorpusSpec {
  Family family = Family::RandomSquarefree;
  std::size_t n_min = 2;
  std::size_t n_max = 4;
  std::size_t degree_min = 1;
  std::size_t degree_max = 3;
  std::size_t max_gens = 6;
  std::size_t count = 10;
  std::uint64_t seed = 7;
  /// Rejection-sampling attempts per instance before reporting starvation.
  std::size_t max_attempts = 20000;
};

/// Deterministic: the same spec always yields the same ideals, on every
/// platform. Ideals use x1..xn with the identity order. Throws CapExceeded
/// if rejection sampling starves and DomainError for an invalid spec.
std::vector<MonomialIdeal> generate_corpus(const CorpusSpec& spec);

/// Portable bounded draws on top of mt19937_64 (whose output sequence is
/// fixed by the standard, unlike the std distributions).
class CorpusRng {
public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

private:
  std::mt19937_64 engine_;
};

} // namespace monid
