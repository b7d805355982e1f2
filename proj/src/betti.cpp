#include <algorithm>
#include <bit>

#include "monid/oracles.hpp"
#include "monid/rank.hpp"

namespace monid {

std::uint64_t BettiTable::at(std::size_t i, const Exponent& a) const {
  const auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(std::size_t i) const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : entries_)
    if (key.first == i)
      sum += value;
  return sum;
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto& [key, value] : entries_)
    if (value > 0)
      pd = std::max(pd, key.first);
  return pd;
}

void BettiTable::set(std::size_t i, const Exponent& a, std::uint64_t value) {
  if (value == 0)
    entries_.erase({i, a});
  else
    entries_[{i, a}] = value;
}

namespace {

using Face = std::uint32_t; // bitmask over the support positions

// Reduced homology dimensions of a simplicial complex given by its faces
// (closed under subsets, possibly containing only the empty face). Entry k
// holds dim H~_{k-1}, so index 0 is the (-1)-dimensional homology.
std::vector<std::uint64_t> reduced_homology(const std::vector<Face>& faces, std::size_t vertices) {
  std::vector<std::vector<Face>> by_size(vertices + 1);
  for (Face f : faces)
    by_size[std::popcount(f)].push_back(f);

  // rank of the boundary from faces of size s to faces of size s - 1.
  std::vector<std::size_t> boundary_rank(vertices + 2, 0);
  for (std::size_t s = 1; s <= vertices; ++s) {
    const auto& rows = by_size[s - 1];
    const auto& cols = by_size[s];
    if (rows.empty() || cols.empty())
      continue;
    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int sign = 1;
      for (std::size_t bit = 0; bit < vertices; ++bit) {
        if (!((cols[c] >> bit) & 1U))
          continue;
        const Face facet = cols[c] & ~(Face{1} << bit);
        const auto r = std::lower_bound(rows.begin(), rows.end(), facet) - rows.begin();
        m(static_cast<std::size_t>(r), c) = sign;
        sign = -sign;
      }
    }
    boundary_rank[s] = matrix_rank(std::move(m));
  }

  std::vector<std::uint64_t> homology(vertices + 1, 0);
  for (std::size_t s = 0; s <= vertices; ++s)
    homology[s] = by_size[s].size() - boundary_rank[s] - boundary_rank[s + 1];
  return homology;
}

} // namespace

BettiTable betti_numbers(const MonomialIdeal& ideal, const BettiCaps& caps) {
  ideal.require_proper_nonzero("betti_numbers");
  const std::size_t n = ideal.num_vars();
  if (n > caps.max_n)
    throw CapExceeded("Betti numbers limited to n <= " + std::to_string(caps.max_n));
  const Exponent lcm = generator_lcm(ideal);
  std::uint64_t cells = 1;
  for (auto c : lcm.coords()) {
    cells *= std::uint64_t{c} + 1;
    if (cells > caps.max_box)
      throw CapExceeded("Betti multidegree box exceeds " + std::to_string(caps.max_box) + " cells");
  }

  BettiTable table(n);
  table.set(0, Exponent(n), 1);

  Exponent a(n);
  while (true) {
    if (ideal.contains(a)) {
      std::vector<Var> support;
      for (Var v = 0; v < n; ++v)
        if (a[v] > 0)
          support.push_back(v);
      const std::size_t s = support.size();

      std::vector<Face> faces;
      for (Face f = 0; f < (Face{1} << s); ++f) {
        Exponent b = a;
        for (std::size_t k = 0; k < s; ++k)
          if ((f >> k) & 1U)
            --b[support[k]];
        if (ideal.contains(b))
          faces.push_back(f);
      }

      // A cone over some vertex is acyclic.
      bool cone = false;
      for (std::size_t k = 0; k < s && !cone; ++k) {
        const Face bit = Face{1} << k;
        cone = std::all_of(faces.begin(), faces.end(), [&](Face f) {
          return std::binary_search(faces.begin(), faces.end(), f | bit);
        });
      }
      if (!cone) {
        const auto homology = reduced_homology(faces, s);
        for (std::size_t k = 0; k < homology.size(); ++k)
          if (homology[k] > 0)
            table.set(k + 1, a, homology[k]);
      }
    }

    std::size_t k = n;
    while (k > 0) {
      if (a[k - 1] < lcm[k - 1]) {
        ++a[k - 1];
        break;
      }
      a[k - 1] = 0;
      --k;
    }
    if (k == 0)
      break;
  }
  return table;
}

std::size_t depth_quotient(const MonomialIdeal& ideal, const BettiCaps& caps) {
  return ideal.num_vars() - betti_numbers(ideal, caps).projective_dimension();
}

} // namespace monid
