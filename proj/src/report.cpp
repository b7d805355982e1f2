#include "monid/report.hpp"

#include <algorithm>
#include <ostream>

#include "monid/decomp.hpp"
#include "monid/io.hpp"
#include "monid/rank.hpp"
#include "monid/wpm.hpp"

namespace monid {

namespace {

using json = nlohmann::ordered_json;

class Recorder {
public:
  explicit Recorder(std::vector<Comparison>& out) : out_(out) {}

  void compare(const std::string& tag, long long lhs, const std::string& relation, long long rhs,
               std::string detail = {}) {
    bool pass = false;
    if (relation == "<=")
      pass = lhs <= rhs;
    else if (relation == ">=")
      pass = lhs >= rhs;
    else if (relation == "==")
      pass = lhs == rhs;
    out_.push_back({tag, relation, lhs, rhs, pass, std::move(detail)});
  }

  void holds(const std::string& tag, bool pass, std::string detail) {
    out_.push_back({tag, "holds", nullptr, nullptr, pass, std::move(detail)});
  }

private:
  std::vector<Comparison>& out_;
};

json var_list(const std::vector<Var>& vars) {
  auto arr = json::array();
  for (Var v : vars)
    arr.push_back(v + 1);
  return arr;
}

long long as_ll(std::size_t x) { return static_cast<long long>(x); }

struct Construction {
  std::string method;
  Target target;
  std::size_t sdepth;
};

} // namespace

std::size_t Report::violations() const {
  return static_cast<std::size_t>(
      std::count_if(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.pass; }));
}

json Report::to_json() const {
  json j = body;
  auto arr = json::array();
  for (const auto& c : comparisons) {
    json jc;
    jc["tag"] = c.tag;
    jc["relation"] = c.relation;
    if (!c.lhs.is_null())
      jc["lhs"] = c.lhs;
    if (!c.rhs.is_null())
      jc["rhs"] = c.rhs;
    jc["status"] = c.pass ? "pass" : "fail";
    if (!c.detail.empty())
      jc["detail"] = c.detail;
    arr.push_back(std::move(jc));
  }
  j["comparisons"] = std::move(arr);
  j["violations"] = violations();
  return j;
}

int exit_code_for(const Report& report) { return report.violations() > 0 ? kExitViolation : 0; }

Report build_report(const MonomialIdeal& input, const ReportOptions& options) {
  input.require_proper_nonzero("report");
  MonomialIdeal ideal = input;
  const std::size_t n = ideal.num_vars();
  const auto nn = as_ll(n);

  Report report;
  json& body = report.body;
  Recorder rec(report.comparisons);
  json skipped = json::object();

  body["ideal"] = ideal_to_json(ideal);
  body["field"] = "QQ";

  // Weak polymatroidality is order dependent; record the order actually used.
  WpmWitness witness = is_weakly_polymatroidal(ideal);
  std::string order_source = "ring";
  if (!witness.verdict && options.find_order) {
    try {
      if (auto order = find_wpm_order(ideal, options.order_search_limit)) {
        ideal = ideal.with_order(*order);
        witness = is_weakly_polymatroidal(ideal);
        order_source = "search";
      }
    } catch (const CapExceeded& e) {
      skipped["order_search"] = e.what();
    }
  }
  body["order"] = var_list(ideal.ring().order());
  body["order_source"] = order_source;

  const bool squarefree = is_squarefree(ideal);
  const bool single_degree = is_single_degree(ideal);
  const bool wpm = witness.verdict;
  {
    json flags;
    flags["squarefree"] = squarefree;
    flags["single_degree"] = single_degree;
    flags["wpm"] = wpm;
    if (witness.failing_pair) {
      const auto& f = *witness.failing_pair;
      flags["wpm_witness"] = {{"u", exponent_to_json(f.u)}, {"v", exponent_to_json(f.v)}, {"t", f.t + 1}};
    }
    body["flags"] = std::move(flags);
  }

  const std::size_t rank = rank_of_ideal(ideal);
  const std::size_t arank = arank_of_ideal(ideal);
  const auto r = as_ll(rank), a = as_ll(arank);
  {
    json inv;
    inv["rank"] = rank;
    inv["arank"] = arank;
    inv["analytic_spread"] = single_degree ? json(analytic_spread_single_degree(ideal)) : json(nullptr);
    body["invariants"] = std::move(inv);
  }
  rec.compare("arank-ge-rank", a, ">=", r);
  rec.compare("arank-le-rank-plus-one", a, "<=", r + 1);
  if (single_degree)
    rec.compare("single-degree-rank-eq-arank", r, "==", a);

  // Recursion facts at the first variable (in the order) that divides some
  // generator. Earlier variables are unused, so this is the variable the
  // constructions split at first.
  std::optional<Var> split;
  for (Var v : ideal.ring().order())
    if (variable_in_support(ideal, v)) {
      split = v;
      break;
    }
  if (split) {
    const Var f = *split;
    const auto [eliminated, colon] = split_by_variable(ideal, f);
    const std::string at = "split at " + ideal.ring().name(f);
    if (!eliminated.is_zero())
      rec.compare("elim-arank", as_ll(arank_of_ideal(eliminated)) + 1, "<=", a, at);
    if (wpm) {
      std::vector<Exponent> expected;
      for (const auto& u : ideal.gens())
        if (u[f] > 0)
          expected.push_back(u.over_variable(f));
      std::sort(expected.begin(), expected.end());
      rec.holds("wpm-colon-generators", colon.gens() == expected, at);
      if (!colon.is_unit()) {
        rec.holds("wpm-colon-stays-wpm", is_weakly_polymatroidal(colon).verdict, at);
        rec.compare("wpm-colon-arank", as_ll(arank_of_ideal(colon)), "<=", a, at);
      }
    }
  }
  if (squarefree) {
    std::size_t worst = 0;
    bool any = false;
    for (Var j : support_union(ideal)) {
      const auto colon = colon_by_variable(ideal, j);
      if (colon.is_unit())
        continue;
      worst = std::max(worst, rank_of_ideal(colon));
      any = true;
    }
    if (any)
      rec.compare("squarefree-colon-rank", as_ll(worst), "<=", r, "maximum over all variables");
  }

  {
    json bounds = json::object();
    if (wpm)
      bounds["wpm"] = {{"sdepth_ideal", nn - a + 1}, {"sdepth_quotient", nn - a}, {"depth_quotient", nn - a}};
    if (squarefree)
      bounds["squarefree"] = {{"sdepth_ideal", nn - r + 1}, {"sdepth_quotient", nn - r}};
    body["bounds"] = std::move(bounds);
  }

  std::vector<Construction> built;
  json constructions = json::array();
  auto construct = [&](const std::string& method, Target target, auto&& make, long long bound) {
    const auto d = make(ideal, ConstructionOptions{});
    const auto verdict = verify(d, options.verify_box_cap);
    const auto sd = d.sdepth();
    json jc;
    jc["method"] = method;
    jc["target"] = to_string(target);
    jc["spaces"] = d.spaces().size();
    jc["sdepth"] = sd;
    jc["verified"] = verdict.ok;
    if (verdict.violation)
      jc["certificate"] = describe(*verdict.violation, ideal.ring());
    constructions.push_back(std::move(jc));
    const std::string prefix = method + "-" + to_string(target);
    rec.holds(prefix + "-verified", verdict.ok,
              verdict.violation ? describe(*verdict.violation, ideal.ring()) : "");
    rec.compare(prefix + "-sdepth", as_ll(sd), ">=", bound);
    built.push_back({method, target, sd});
    return sd;
  };
  if (wpm) {
    construct("wpm", Target::Ideal, decompose_ideal_wpm, nn - a + 1);
    construct("wpm", Target::Quotient, decompose_quotient_wpm, nn - a);
  }
  if (squarefree) {
    const auto si = construct("squarefree", Target::Ideal, decompose_ideal_squarefree, nn - r + 1);
    const auto sq = construct("squarefree", Target::Quotient, decompose_quotient_squarefree, nn - r);
    if (single_degree) {
      const auto spread = as_ll(analytic_spread_single_degree(ideal));
      rec.compare("squarefree-spread-ideal", as_ll(si), ">=", nn - spread + 1);
      rec.compare("squarefree-spread-quotient", as_ll(sq), ">=", nn - spread);
    }
  }
  body["constructions"] = std::move(constructions);

  json oracles = json::object();
  if (options.run_oracles) {
    std::optional<std::size_t> exact_ideal, exact_quotient, depth, height;
    auto exact = [&](Target target, std::optional<std::size_t>& slot) {
      const std::string key = std::string("exact_sdepth_") + to_string(target);
      try {
        const auto res = exact_sdepth(ideal, target, options.sdepth_caps);
        slot = res.sdepth;
        oracles[key] = res.sdepth;
        const auto check = verify(res.witness, options.verify_box_cap);
        rec.holds(std::string("exact-witness-verified-") + to_string(target), check.ok,
                  check.violation ? describe(*check.violation, ideal.ring()) : "");
      } catch (const CapExceeded& e) {
        skipped[key] = e.what();
      }
    };
    exact(Target::Ideal, exact_ideal);
    exact(Target::Quotient, exact_quotient);
    try {
      depth = depth_quotient(ideal, options.betti_caps);
      oracles["depth_quotient"] = *depth;
    } catch (const CapExceeded& e) {
      skipped["depth_quotient"] = e.what();
    }
    try {
      const auto primes = associated_primes(ideal, options.split_cap);
      json ass = json::array();
      std::size_t h = 0;
      for (const auto& p : primes) {
        ass.push_back(var_list(p));
        h = std::max(h, p.size());
      }
      height = h;
      oracles["ass"] = std::move(ass);
      oracles["max_ass_height"] = h;
    } catch (const CapExceeded& e) {
      skipped["ass"] = e.what();
    }

    for (const auto& c : built) {
      const auto& slot = c.target == Target::Ideal ? exact_ideal : exact_quotient;
      if (slot)
        rec.compare("oracle-dominates-" + c.method + "-" + to_string(c.target), as_ll(*slot), ">=",
                    as_ll(c.sdepth));
    }
    if (depth && exact_quotient)
      rec.compare("stanley-inequality", as_ll(*depth), "<=", as_ll(*exact_quotient),
                  "depth(S/I) <= sdepth(S/I)");
    if (wpm && depth)
      rec.compare("wpm-depth", as_ll(*depth), ">=", nn - a);
    if (wpm && height)
      rec.compare("wpm-ass-height", as_ll(*height), "<=", a);
    if (ideal.is_principal()) {
      if (exact_ideal)
        rec.compare("principal-sdepth-ideal", as_ll(*exact_ideal), "==", nn);
      if (exact_quotient)
        rec.compare("principal-sdepth-quotient", as_ll(*exact_quotient), "==", nn - 1);
      if (depth)
        rec.compare("principal-depth-quotient", as_ll(*depth), "==", nn - 1);
    }
  }
  if (!skipped.empty())
    oracles["skipped"] = std::move(skipped);
  body["oracles"] = std::move(oracles);
  return report;
}

CorpusSummary run_corpus(const CorpusSpec& spec, const ReportOptions& options, std::ostream& out) {
  CorpusSummary summary;
  for (const auto& ideal : generate_corpus(spec)) {
    const auto report = build_report(ideal, options);
    out << report.to_json().dump() << '\n';
    ++summary.instances;
    summary.violations += report.violations();
  }
  out << "violations: " << summary.violations << '\n';
  return summary;
}

} // namespace monid
