#include "monid/decomp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "monid/io.hpp"
#include "monid/rank.hpp"
#include "monid/wpm.hpp"

namespace monid {

const char* to_string(Target target) {
  return target == Target::Ideal ? "ideal" : "quotient";
}

Target target_from_string(const std::string& name) {
  if (name == "ideal")
    return Target::Ideal;
  if (name == "quotient")
    return Target::Quotient;
  throw DomainError("unknown target '" + name + "' (expected ideal or quotient)");
}

bool StanleySpace::contains(const Exponent& m) const {
  std::size_t k = 0;
  for (Var v = 0; v < m.size(); ++v) {
    const bool is_free = k < free.size() && free[k] == v;
    if (is_free) {
      ++k;
      if (m[v] < base[v])
        return false;
    } else if (m[v] != base[v]) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<Var> all_vars(std::size_t n) {
  std::vector<Var> vars(n);
  std::iota(vars.begin(), vars.end(), Var{0});
  return vars;
}

std::vector<Var> sorted_union(std::vector<Var> a, const std::vector<Var>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Exponent product(const Exponent& a, const Exponent& b) {
  Exponent out = a;
  for (Var v = 0; v < out.size(); ++v) {
    if (b[v] > std::numeric_limits<Coord>::max() - out[v])
      throw DomainError("exponent overflow");
    out[v] += b[v];
  }
  return out;
}

std::vector<StanleySpace> staircase(const Exponent& u, const std::vector<Var>& vars) {
  std::vector<StanleySpace> spaces;
  Exponent prefix(u.size());
  for (Var v : vars) {
    if (u[v] == 0)
      continue;
    std::vector<Var> free;
    std::copy_if(vars.begin(), vars.end(), std::back_inserter(free), [v](Var w) { return w != v; });
    for (Coord c = 0; c < u[v]; ++c) {
      Exponent base = prefix;
      base[v] = c;
      spaces.push_back({std::move(base), free});
    }
    prefix[v] = u[v];
  }
  return spaces;
}

void check(bool holds, const std::string& what) {
  if (!holds)
    throw InvariantViolation(what);
}

// Recursive constructor. `active` lists the variables of the current subring
// in ring order. Every emitted space is multiplied by `shift` and gains
// `extra_free` as free variables (variables dropped by add_free_variable
// steps above this call).
class Builder {
public:
  enum class Method { Wpm, Squarefree };

  Builder(Method method, Target target, const ConstructionOptions& options)
      : method_(method), target_(target), options_(options) {}

  std::vector<StanleySpace> run(const MonomialIdeal& ideal) {
    const auto& order = ideal.ring().order();
    recurse(ideal, order, Exponent(ideal.num_vars()), {});
    return std::move(out_);
  }

private:
  void emit(const Exponent& base, const std::vector<Var>& vars, const Exponent& shift,
            const std::vector<Var>& extra_free) {
    out_.push_back({product(base, shift), sorted_union(vars, extra_free)});
  }

  void recurse(const MonomialIdeal& ideal, std::vector<Var> active, const Exponent& shift,
               const std::vector<Var>& extra_free) {
    const std::size_t n = ideal.num_vars();
    if (ideal.is_zero()) {
      if (target_ == Target::Quotient)
        emit(Exponent(n), active, shift, extra_free);
      return;
    }
    if (ideal.is_unit()) {
      if (target_ == Target::Ideal)
        emit(Exponent(n), active, shift, extra_free);
      return;
    }
    if (ideal.is_principal()) {
      if (target_ == Target::Ideal) {
        emit(ideal.gens().front(), active, shift, extra_free);
      } else {
        std::vector<Var> sorted = active;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& space : staircase(ideal.gens().front(), sorted))
          emit(space.base, space.free, shift, extra_free);
      }
      return;
    }

    // A proper non-principal ideal always involves some active variable.
    const Var f = active.front();
    std::vector<Var> rest(active.begin() + 1, active.end());
    if (!variable_in_support(ideal, f)) {
      recurse(ideal, std::move(rest), shift, sorted_union(extra_free, {f}));
      return;
    }

    auto [eliminated, colon] = split_by_variable(ideal, f);
    if (options_.check_invariants)
      check_step(ideal, f, eliminated, colon);

    const Exponent colon_shift = shift.times_variable(f);
    if (method_ == Method::Wpm)
      recurse(colon, active, colon_shift, extra_free);
    else
      recurse(colon, rest, colon_shift, sorted_union(extra_free, {f}));
    recurse(eliminated, std::move(rest), shift, extra_free);
  }

  void check_step(const MonomialIdeal& ideal, Var f, const MonomialIdeal& eliminated,
                  const MonomialIdeal& colon) const {
    const std::string at = " (splitting at " + ideal.ring().name(f) + ")";
    if (method_ == Method::Wpm) {
      std::vector<Exponent> expected;
      for (const auto& u : ideal.gens())
        if (u[f] > 0)
          expected.push_back(u.over_variable(f));
      std::sort(expected.begin(), expected.end());
      check(colon.gens() == expected, "colon generators are not {u/x_f : x_f | u}" + at);
      if (!colon.is_unit()) {
        check(is_weakly_polymatroidal(colon).verdict, "colon ideal is not weakly polymatroidal" + at);
        check(arank_of_ideal(colon) <= arank_of_ideal(ideal), "arank(I : x_f) > arank(I)" + at);
      }
      if (!eliminated.is_zero())
        check(arank_of_ideal(eliminated) + 1 <= arank_of_ideal(ideal),
              "arank(I ∩ S') + 1 > arank(I)" + at);
    } else {
      for (const auto& g : colon.gens())
        check(g[f] == 0, "colon generator involves the split variable" + at);
      if (!colon.is_unit())
        check(rank_of_ideal(colon) <= rank_of_ideal(ideal), "rank(I : x_f) > rank(I)" + at);
      if (!eliminated.is_zero())
        check(rank_of_ideal(eliminated) + 1 <= rank_of_ideal(ideal),
              "rank(I ∩ S') + 1 > rank(I)" + at);
    }
  }

  Method method_;
  Target target_;
  const ConstructionOptions& options_;
  std::vector<StanleySpace> out_;
};

StanleyDecomposition build(const MonomialIdeal& ideal, Builder::Method method, Target target,
                           const ConstructionOptions& options) {
  Builder builder(method, target, options);
  return StanleyDecomposition(ideal, target, builder.run(ideal));
}

void require_wpm(const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("WPM decomposition");
  if (!is_weakly_polymatroidal(ideal).verdict)
    throw DomainError("ideal is not weakly polymatroidal in the given variable order");
}

void require_squarefree(const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("squarefree decomposition");
  if (!is_squarefree(ideal))
    throw DomainError("ideal is not squarefree");
}

} // namespace

StanleyDecomposition::StanleyDecomposition(MonomialIdeal ideal, Target target,
                                           std::vector<StanleySpace> spaces)
    : StanleyDecomposition(ideal, target, all_vars(ideal.num_vars()), std::move(spaces)) {}

StanleyDecomposition::StanleyDecomposition(MonomialIdeal ideal, Target target, std::vector<Var> vars,
                                           std::vector<StanleySpace> spaces)
    : ideal_(std::move(ideal)), target_(target), vars_(std::move(vars)), spaces_(std::move(spaces)) {
  const std::size_t n = ideal_.num_vars();
  std::sort(vars_.begin(), vars_.end());
  if (std::unique(vars_.begin(), vars_.end()) != vars_.end() || (!vars_.empty() && vars_.back() >= n))
    throw DomainError("invalid subring variable set");
  for (auto& space : spaces_) {
    if (space.base.size() != n)
      throw DomainError("space base has the wrong number of coordinates");
    std::sort(space.free.begin(), space.free.end());
    if (std::unique(space.free.begin(), space.free.end()) != space.free.end() ||
        (!space.free.empty() && space.free.back() >= n))
      throw DomainError("invalid free variable set");
  }
  std::sort(spaces_.begin(), spaces_.end());
}

std::size_t StanleyDecomposition::sdepth() const {
  if (spaces_.empty())
    return vars_.size();
  std::size_t best = spaces_.front().dimension();
  for (const auto& s : spaces_)
    best = std::min(best, s.dimension());
  return best;
}

StanleyDecomposition principal_ideal_decomposition(const MonomialIdeal& ideal) {
  if (!ideal.is_principal())
    throw DomainError("principal_ideal_decomposition: ideal is not principal");
  return StanleyDecomposition(ideal, Target::Ideal,
                              {{ideal.gens().front(), all_vars(ideal.num_vars())}});
}

StanleyDecomposition principal_quotient_decomposition(const MonomialIdeal& ideal) {
  if (!ideal.is_principal())
    throw DomainError("principal_quotient_decomposition: ideal is not principal");
  ideal.require_proper_nonzero("principal_quotient_decomposition");
  return StanleyDecomposition(ideal, Target::Quotient,
                              staircase(ideal.gens().front(), all_vars(ideal.num_vars())));
}

StanleyDecomposition add_free_variable(const StanleyDecomposition& d, Var v) {
  const auto& ideal = d.ideal();
  if (v >= ideal.num_vars())
    throw DomainError("variable index out of range");
  if (std::binary_search(d.vars().begin(), d.vars().end(), v))
    throw DomainError("add_free_variable: " + ideal.ring().name(v) +
                      " is already a variable of the decomposition");
  if (!ideal.is_zero() && variable_in_support(ideal, v))
    throw DomainError("add_free_variable: " + ideal.ring().name(v) + " divides a generator");
  std::vector<StanleySpace> spaces = d.spaces();
  for (auto& s : spaces)
    s.free = sorted_union(std::move(s.free), {v});
  return StanleyDecomposition(ideal, d.target(), sorted_union(d.vars(), {v}), std::move(spaces));
}

SplitParts split_by_variable(const MonomialIdeal& ideal, Var v) {
  if (ideal.is_zero() || !variable_in_support(ideal, v))
    throw DomainError("split_by_variable: variable is not in the support of the ideal");
  return {eliminate_variable(ideal, v), colon_by_variable(ideal, v)};
}

StanleyDecomposition decompose_ideal_wpm(const MonomialIdeal& ideal, const ConstructionOptions& options) {
  require_wpm(ideal);
  return build(ideal, Builder::Method::Wpm, Target::Ideal, options);
}

StanleyDecomposition decompose_quotient_wpm(const MonomialIdeal& ideal,
                                            const ConstructionOptions& options) {
  require_wpm(ideal);
  return build(ideal, Builder::Method::Wpm, Target::Quotient, options);
}

StanleyDecomposition decompose_ideal_squarefree(const MonomialIdeal& ideal,
                                                const ConstructionOptions& options) {
  require_squarefree(ideal);
  return build(ideal, Builder::Method::Squarefree, Target::Ideal, options);
}

StanleyDecomposition decompose_quotient_squarefree(const MonomialIdeal& ideal,
                                                   const ConstructionOptions& options) {
  require_squarefree(ideal);
  return build(ideal, Builder::Method::Squarefree, Target::Quotient, options);
}

VerifyResult verify(const StanleyDecomposition& d, std::size_t box_cap) {
  using Kind = VerifyViolation::Kind;
  const auto& ideal = d.ideal();
  const auto& spaces = d.spaces();
  const auto& vars = d.vars();
  const std::size_t n = ideal.num_vars();
  std::vector<bool> in_ring(n, false);
  for (Var v : vars)
    in_ring[v] = true;

  auto fail = [](VerifyViolation v) { return VerifyResult{false, std::move(v)}; };

  for (const auto& g : ideal.gens())
    for (Var v = 0; v < n; ++v)
      if (g[v] > 0 && !in_ring[v])
        return fail({Kind::Malformed, 0, 0, g, "a generator uses a variable outside the ring"});

  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (Var v = 0; v < n; ++v)
      if (!in_ring[v] && spaces[i].base[v] > 0)
        return fail({Kind::Malformed, i, i, spaces[i].base,
                     "space " + std::to_string(i) + ": base uses a variable outside the ring"});
    for (Var v : spaces[i].free)
      if (!in_ring[v])
        return fail({Kind::Malformed, i, i, spaces[i].base,
                     "space " + std::to_string(i) + ": free variable outside the ring"});
  }

  // Two spaces meet iff they agree off Z1 ∪ Z2 and each base is at least the
  // other's on the coordinates free only in the other.
  std::vector<std::vector<bool>> free_mask(spaces.size(), std::vector<bool>(n, false));
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (Var v : spaces[i].free)
      free_mask[i][v] = true;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t j = i + 1; j < spaces.size(); ++j) {
      bool meet = true;
      Exponent common(n);
      for (Var v = 0; v < n && meet; ++v) {
        const bool fi = free_mask[i][v], fj = free_mask[j][v];
        const Coord bi = spaces[i].base[v], bj = spaces[j].base[v];
        if (!fi && !fj)
          meet = bi == bj;
        else if (fi && !fj)
          meet = bj >= bi;
        else if (!fi && fj)
          meet = bi >= bj;
        common[v] = std::max(bi, bj);
      }
      if (meet)
        return fail({Kind::Overlap, i, j, common, "spaces overlap"});
    }
  }

  // Coverage on the box [0, rho + 1] over the ring variables.
  Coord rho = 0;
  for (const auto& g : ideal.gens())
    for (auto c : g.coords())
      rho = std::max(rho, c);
  for (const auto& s : spaces)
    for (auto c : s.base.coords())
      rho = std::max(rho, c);
  const std::uint64_t side = std::uint64_t{rho} + 2;
  std::uint64_t cells = 1;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (cells > box_cap / side)
      throw CapExceeded("verification box exceeds " + std::to_string(box_cap) + " cells");
    cells *= side;
  }

  Exponent m(n);
  while (true) {
    const bool covered =
        std::any_of(spaces.begin(), spaces.end(), [&](const StanleySpace& s) { return s.contains(m); });
    const bool wanted = (d.target() == Target::Ideal) == ideal.contains(m);
    if (covered != wanted)
      return fail({covered ? Kind::Overshoot : Kind::Uncovered, 0, 0, m,
                   covered ? "monomial covered but not in the target" : "monomial of the target not covered"});
    // Odometer in lex order: last ring variable moves fastest.
    std::size_t k = vars.size();
    while (k > 0) {
      const Var v = vars[k - 1];
      if (m[v] + 1 < side) {
        ++m[v];
        break;
      }
      m[v] = 0;
      --k;
    }
    if (k == 0)
      break;
  }
  return {};
}

nlohmann::ordered_json decomposition_to_json(const StanleyDecomposition& d) {
  nlohmann::ordered_json j;
  j["target"] = to_string(d.target());
  j["n"] = d.ideal().num_vars();
  if (!d.is_full_ring()) {
    auto vars = nlohmann::ordered_json::array();
    for (Var v : d.vars())
      vars.push_back(v + 1);
    j["vars"] = std::move(vars);
  }
  auto spaces = nlohmann::ordered_json::array();
  for (const auto& s : d.spaces()) {
    nlohmann::ordered_json js;
    js["base"] = exponent_to_json(s.base);
    auto free = nlohmann::ordered_json::array();
    for (Var v : s.free)
      free.push_back(v + 1);
    js["free"] = std::move(free);
    spaces.push_back(std::move(js));
  }
  j["spaces"] = std::move(spaces);
  j["sdepth"] = d.sdepth();
  return j;
}

StanleyDecomposition decomposition_from_json(const nlohmann::json& j, const MonomialIdeal& ideal) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    if (n != ideal.num_vars())
      throw DomainError("decomposition has n = " + std::to_string(n) + " but the ideal has n = " +
                        std::to_string(ideal.num_vars()));
    auto one_based = [n](const nlohmann::json& arr) {
      std::vector<Var> out;
      for (const auto& x : arr) {
        const auto v = x.get<long long>();
        if (v < 1 || static_cast<std::size_t>(v) > n)
          throw DomainError("variable index " + std::to_string(v) + " out of range");
        out.push_back(static_cast<Var>(v - 1));
      }
      return out;
    };
    const Target target = target_from_string(j.at("target").get<std::string>());
    std::vector<Var> vars = j.contains("vars") ? one_based(j.at("vars")) : all_vars(n);
    std::vector<StanleySpace> spaces;
    for (const auto& js : j.at("spaces")) {
      for (const auto& c : js.at("base"))
        if (!c.is_number_unsigned())
          throw DomainError("exponents must be non-negative integers");
      auto coords = js.at("base").get<std::vector<Coord>>();
      if (coords.size() != n)
        throw DomainError("space base has the wrong number of coordinates");
      spaces.push_back({Exponent(std::move(coords)), one_based(js.at("free"))});
    }
    return StanleyDecomposition(ideal, target, std::move(vars), std::move(spaces));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed decomposition JSON: ") + e.what());
  }
}

std::string describe(const VerifyViolation& violation, const PolyRing& ring) {
  using Kind = VerifyViolation::Kind;
  switch (violation.kind) {
  case Kind::Overlap:
    return "spaces " + std::to_string(violation.first) + " and " + std::to_string(violation.second) +
           " both contain " + format_monomial(ring, violation.monomial);
  case Kind::Malformed:
    return violation.message;
  case Kind::Uncovered:
    return format_monomial(ring, violation.monomial) + " is in the target but not covered";
  case Kind::Overshoot:
    return format_monomial(ring, violation.monomial) + " is covered but not in the target";
  }
  return violation.message;
}

} // namespace monid
