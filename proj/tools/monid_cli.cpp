// monid: command-line front end.
//
// Exit status: 0 ok, 1 input error, 2 feasibility cap exceeded, 3 a checked
// inequality failed (report/corpus) or an internal invariant broke.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monid/corpus.hpp"
#include "monid/decomp.hpp"
#include "monid/io.hpp"
#include "monid/oracles.hpp"
#include "monid/rank.hpp"
#include "monid/report.hpp"
#include "monid/wpm.hpp"

namespace {

using namespace monid;

struct Globals {
  bool json = false;
  std::string order;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_poset;
};

std::vector<Var> parse_order(const std::string& text, std::size_t n) {
  std::vector<Var> order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      const auto v = std::stoul(item);
      if (v < 1 || v > n)
        throw DomainError("--order: index " + item + " out of range 1.." + std::to_string(n));
      order.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw DomainError("--order: '" + item + "' is not a variable index");
    }
  }
  return order; // PolyRing validates the permutation
}

// "4" or "2-5"
std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* flag) {
  try {
    const auto dash = text.find('-');
    if (dash == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dash)), std::stoul(text.substr(dash + 1))};
  } catch (const std::logic_error&) {
    throw DomainError(std::string(flag) + ": expected N or LO-HI, got '" + text + "'");
  }
}

MonomialIdeal load(const std::string& path, const Globals& g) {
  auto ideal = read_ideal_file(path);
  if (!g.order.empty())
    ideal = ideal.with_order(parse_order(g.order, ideal.num_vars()));
  return ideal;
}

ReportOptions report_options(const Globals& g) {
  ReportOptions opt;
  if (g.max_n) {
    opt.sdepth_caps.max_n = *g.max_n;
    opt.betti_caps.max_n = *g.max_n;
  }
  if (g.max_poset)
    opt.sdepth_caps.max_poset = *g.max_poset;
  return opt;
}

std::string var_set(const PolyRing& ring, const std::vector<Var>& vars) {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i)
    out += (i ? "," : "") + ring.name(vars[i]);
  return out + "}";
}

void print_decomposition(const StanleyDecomposition& d, bool as_json) {
  if (as_json) {
    std::cout << decomposition_to_json(d).dump() << '\n';
    return;
  }
  const auto& ring = d.ideal().ring();
  for (const auto& s : d.spaces())
    std::cout << format_monomial(ring, s.base) << " K" << var_set(ring, s.free) << '\n';
  std::cout << "sdepth " << d.sdepth() << '\n';
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank, affine rank and Stanley decompositions of monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::size_t max_n = 0, max_poset = 0;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--order", g.order, "Variable order for weak polymatroidality, e.g. 2,1,3");
  auto* max_n_opt = app.add_option("--max-n", max_n, "Largest n for the exhaustive oracles");
  auto* max_poset_opt = app.add_option("--max-poset", max_poset, "Largest characteristic poset for exact sdepth");

  std::string file, decomposition_file;
  std::string target_name = "ideal", method_name;

  auto* rank_cmd = app.add_subcommand("rank", "Rank of the generator exponents");
  auto* arank_cmd = app.add_subcommand("arank", "Affine rank of the generator exponents");
  auto* spread_cmd = app.add_subcommand("spread", "Analytic spread (single-degree ideals)");
  for (auto* c : {rank_cmd, arank_cmd, spread_cmd})
    c->add_option("file", file, "Ideal file")->required();

  auto* wpm_cmd = app.add_subcommand("check-wpm", "Check weak polymatroidality");
  wpm_cmd->add_option("file", file, "Ideal file")->required();
  bool find_order = false;
  std::size_t order_limit = kDefaultOrderSearchLimit;
  wpm_cmd->add_flag("--find-order", find_order, "Search all variable orders");
  wpm_cmd->add_option("--order-limit", order_limit, "Largest n for the order search");

  auto* decompose_cmd = app.add_subcommand("decompose", "Construct a Stanley decomposition");
  decompose_cmd->add_option("file", file, "Ideal file")->required();
  decompose_cmd->add_option("--target", target_name, "ideal or quotient");
  decompose_cmd->add_option("--method", method_name, "wpm or squarefree (default: whichever applies)");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a decomposition against an ideal");
  verify_cmd->add_option("file", file, "Ideal file")->required();
  verify_cmd->add_option("decomposition", decomposition_file, "Decomposition JSON")->required();

  auto* exact_cmd = app.add_subcommand("sdepth-exact", "Exact Stanley depth by poset partitions");
  exact_cmd->add_option("file", file, "Ideal file")->required();
  exact_cmd->add_option("--target", target_name, "ideal or quotient");

  auto* depth_cmd = app.add_subcommand("depth", "depth(S/I) over Q from multigraded Betti numbers");
  depth_cmd->add_option("file", file, "Ideal file")->required();
  bool show_betti = false;
  depth_cmd->add_flag("--betti", show_betti, "Also print the Betti numbers");

  auto* ass_cmd = app.add_subcommand("ass", "Associated primes via irreducible decomposition");
  ass_cmd->add_option("file", file, "Ideal file")->required();

  auto* report_cmd = app.add_subcommand("report", "Run every applicable computation and check");
  report_cmd->add_option("file", file, "Ideal file")->required();
  report_cmd->add_flag("--find-order", find_order, "Search for a WPM order if the given one fails");

  auto* corpus_cmd = app.add_subcommand("corpus", "Generate ideals and report on each (JSON lines)");
  std::string family = "random-squarefree", n_range = "2-4", degree_range = "1-3";
  CorpusSpec spec;
  corpus_cmd->add_option("--family", family, "random-squarefree | random-single-degree | random-wpm | "
                                              "random-mixed | matroidal-uniform | principal | maximal-power");
  corpus_cmd->add_option("--n", n_range, "Number of variables, N or LO-HI");
  corpus_cmd->add_option("--degree", degree_range, "Generator degree, D or LO-HI");
  corpus_cmd->add_option("--count", spec.count, "Number of ideals");
  corpus_cmd->add_option("--seed", spec.seed, "Random seed");
  corpus_cmd->add_option("--max-gens", spec.max_gens, "Largest number of sampled generators");

  CLI11_PARSE(app, argc, argv);
  if (*max_n_opt)
    g.max_n = max_n;
  if (*max_poset_opt)
    g.max_poset = max_poset;

  try {
    if (rank_cmd->parsed() || arank_cmd->parsed() || spread_cmd->parsed()) {
      const auto ideal = load(file, g);
      const char* name = rank_cmd->parsed() ? "rank" : arank_cmd->parsed() ? "arank" : "spread";
      const auto value = rank_cmd->parsed()    ? rank_of_ideal(ideal)
                         : arank_cmd->parsed() ? arank_of_ideal(ideal)
                                               : analytic_spread_single_degree(ideal);
      if (g.json)
        std::cout << nlohmann::ordered_json{{name, value}}.dump() << '\n';
      else
        std::cout << name << ' ' << value << '\n';
      return 0;
    }

    if (wpm_cmd->parsed()) {
      auto ideal = load(file, g);
      auto witness = is_weakly_polymatroidal(ideal);
      std::optional<std::vector<Var>> found;
      if (find_order) {
        found = find_wpm_order(ideal, order_limit);
        if (found) {
          ideal = ideal.with_order(*found);
          witness = is_weakly_polymatroidal(ideal);
        }
      }
      const auto& ring = ideal.ring();
      nlohmann::ordered_json j;
      j["wpm"] = witness.verdict;
      auto order = nlohmann::ordered_json::array();
      for (Var v : ring.order())
        order.push_back(v + 1);
      j["order"] = order;
      if (witness.failing_pair) {
        const auto& f = *witness.failing_pair;
        j["witness"] = {{"u", exponent_to_json(f.u)}, {"v", exponent_to_json(f.v)}, {"t", f.t + 1}};
      }
      if (g.json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "wpm " << (witness.verdict ? "true" : "false") << '\n';
        std::cout << "order";
        for (Var v : ring.order())
          std::cout << ' ' << ring.name(v);
        std::cout << '\n';
        if (witness.failing_pair) {
          const auto& f = *witness.failing_pair;
          std::cout << "witness u=" << format_monomial(ring, f.u) << " v=" << format_monomial(ring, f.v)
                    << " t=" << ring.name(f.t) << '\n';
        }
      }
      return 0;
    }

    if (decompose_cmd->parsed()) {
      const auto ideal = load(file, g);
      const auto target = target_from_string(target_name);
      if (method_name.empty())
        method_name = is_weakly_polymatroidal(ideal).verdict ? "wpm" : "squarefree";
      std::optional<StanleyDecomposition> d;
      if (method_name == "wpm")
        d = target == Target::Ideal ? decompose_ideal_wpm(ideal) : decompose_quotient_wpm(ideal);
      else if (method_name == "squarefree")
        d = target == Target::Ideal ? decompose_ideal_squarefree(ideal) : decompose_quotient_squarefree(ideal);
      else
        throw DomainError("unknown method '" + method_name + "' (expected wpm or squarefree)");
      print_decomposition(*d, g.json);
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto ideal = load(file, g);
      std::ifstream in(decomposition_file);
      if (!in)
        throw Error("cannot open '" + decomposition_file + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed decomposition JSON: ") + e.what());
      }
      const auto d = decomposition_from_json(j, ideal);
      const auto result = verify(d);
      if (g.json) {
        nlohmann::ordered_json out{{"verified", result.ok}, {"sdepth", d.sdepth()}};
        if (result.violation)
          out["certificate"] = describe(*result.violation, ideal.ring());
        std::cout << out.dump() << '\n';
      } else if (result.ok) {
        std::cout << "verified, sdepth " << d.sdepth() << '\n';
      } else {
        std::cout << "not a Stanley decomposition: " << describe(*result.violation, ideal.ring()) << '\n';
      }
      return result.ok ? 0 : kExitInputError;
    }

    if (exact_cmd->parsed()) {
      const auto ideal = load(file, g);
      const auto target = target_from_string(target_name);
      const auto caps = report_options(g).sdepth_caps;
      const auto result = exact_sdepth(ideal, target, caps);
      if (g.json) {
        nlohmann::ordered_json j{{"target", to_string(target)},
                                 {"sdepth", result.sdepth},
                                 {"poset_size", result.poset_size},
                                 {"witness", decomposition_to_json(result.witness)}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "sdepth-exact " << to_string(target) << ' ' << result.sdepth << '\n';
      }
      return 0;
    }

    if (depth_cmd->parsed()) {
      const auto ideal = load(file, g);
      const auto caps = report_options(g).betti_caps;
      const auto table = betti_numbers(ideal, caps);
      const auto depth = ideal.num_vars() - table.projective_dimension();
      if (g.json) {
        nlohmann::ordered_json j{{"depth", depth}, {"field", "QQ"}};
        if (show_betti) {
          auto arr = nlohmann::ordered_json::array();
          for (const auto& [key, value] : table.entries())
            arr.push_back({{"i", key.first}, {"degree", exponent_to_json(key.second)}, {"value", value}});
          j["betti"] = arr;
        }
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "depth " << depth << '\n';
        if (show_betti)
          for (const auto& [key, value] : table.entries())
            std::cout << "beta_" << key.first << " " << format_monomial(ideal.ring(), key.second) << " = "
                      << value << '\n';
      }
      return 0;
    }

    if (ass_cmd->parsed()) {
      const auto ideal = load(file, g);
      const auto primes = associated_primes(ideal);
      std::size_t height = 0;
      for (const auto& p : primes)
        height = std::max(height, p.size());
      if (g.json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : primes) {
          auto jp = nlohmann::ordered_json::array();
          for (Var v : p)
            jp.push_back(v + 1);
          arr.push_back(jp);
        }
        std::cout << nlohmann::ordered_json{{"ass", arr}, {"max_height", height}}.dump() << '\n';
      } else {
        for (const auto& p : primes)
          std::cout << "(" << var_set(ideal.ring(), p).substr(1, var_set(ideal.ring(), p).size() - 2) << ")\n";
        std::cout << "max height " << height << '\n';
      }
      return 0;
    }

    if (report_cmd->parsed()) {
      const auto ideal = load(file, g);
      auto opt = report_options(g);
      opt.find_order = find_order;
      const auto report = build_report(ideal, opt);
      std::cout << (g.json ? report.to_json().dump() : report.to_json().dump(2)) << '\n';
      return exit_code_for(report);
    }

    if (corpus_cmd->parsed()) {
      spec.family = family_from_string(family);
      std::tie(spec.n_min, spec.n_max) = parse_range(n_range, "--n");
      std::tie(spec.degree_min, spec.degree_max) = parse_range(degree_range, "--degree");
      const auto summary = run_corpus(spec, report_options(g), std::cout);
      return summary.violations > 0 ? kExitViolation : 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "monid: infeasible: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const InvariantViolation& e) {
    std::cerr << "monid: invariant violated: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "monid: " << e.what() << '\n';
    return kExitInputError;
  }
  return 0;
}
