#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kts/extremal.hpp"
#include "kts/graph.hpp"
#include "kts/graph6.hpp"
#include "kts/harness.hpp"
#include "kts/ktree.hpp"
#include "kts/report.hpp"
#include "kts/spectra.hpp"

namespace kts {

namespace detail {

inline Graph load_graph(const std::string& g6, const std::string& edges_file) {
  if (!g6.empty() && !edges_file.empty())
    throw std::invalid_argument("give either --g6 or --edges, not both");
  if (!g6.empty()) return parse_graph6(g6);
  if (!edges_file.empty()) {
    std::ifstream in(edges_file);
    if (!in) throw std::invalid_argument("cannot open edge list file: " + edges_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
  }
  throw std::invalid_argument("a graph is required (--g6 or --edges)");
}

inline void emit_report(const VerificationReport& rep, bool csv, std::ostream& out) {
  if (csv)
    out << to_csv(rep);
  else
    out << to_json(rep).dump(2) << '\n';
}

}  // namespace detail

// Exit status: 0 success with zero anomalies, 1 anomalies found, 2 usage or
// parse errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"distance spectral radius / spanning k-tree verification toolkit"};
  app.require_subcommand(1);
  bool csv = false;
  app.add_flag("--csv", csv, "emit records as CSV instead of JSON");

  std::string g6, edges_file;
  int k = 4, n = 0, s = 1, t = 2;
  std::string mode = "exhaustive";
  std::uint64_t budget = 100000, seed = 0, trials = 200;
  int kmax = 8, smax = 6, nmax = 40;

  auto* spectra_cmd = app.add_subcommand("spectra", "lambda1, Wiener index and full spectrum");
  spectra_cmd->add_option("--g6", g6, "graph6 line");
  spectra_cmd->add_option("--edges", edges_file, "edge list file");

  auto* ktree_cmd = app.add_subcommand("ktree", "spanning k-tree verdict with certificate");
  ktree_cmd->add_option("--g6", g6, "graph6 line");
  ktree_cmd->add_option("--edges", edges_file, "edge list file");
  ktree_cmd->add_option("--k", k, "maximum tree degree")->required();

  auto* extremal_cmd = app.add_subcommand("extremal", "emit an extremal family graph");
  std::string family;
  extremal_cmd->add_option("family", family, "gstar|gsharp|gtilde|gprime")->required();
  extremal_cmd->add_option("--n", n, "order")->required();
  extremal_cmd->add_option("--k", k, "degree bound parameter");
  extremal_cmd->add_option("--s", s, "join clique size");
  extremal_cmd->add_option("--t", t, "component count");

  auto* verify_cmd = app.add_subcommand("verify", "spectral-threshold verification campaign");
  verify_cmd->add_option("--k", k, "degree bound")->required();
  verify_cmd->add_option("--n", n, "order")->required();
  verify_cmd->add_option("--mode", mode, "exhaustive|sample");
  verify_cmd->add_option("--budget", budget, "sample budget");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_flag("--csv", csv, "emit records as CSV instead of JSON");

  auto* sweep_cmd = app.add_subcommand("sweep", "ordering and sign sweeps over the extremal families");
  sweep_cmd->add_option("--kmax", kmax, "max k");
  sweep_cmd->add_option("--smax", smax, "max s");
  sweep_cmd->add_option("--nmax", nmax, "max order");
  sweep_cmd->add_flag("--csv", csv, "emit records as CSV instead of JSON");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "randomized property suites");
  lemmas_cmd->add_option("--trials", trials, "trials per property");
  lemmas_cmd->add_option("--seed", seed, "random seed");
  lemmas_cmd->add_flag("--csv", csv, "emit records as CSV instead of JSON");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (*spectra_cmd) {
      Graph g = detail::load_graph(g6, edges_file);
      DistMatrix d = all_pairs_distances(g);
      SpectralResult sr = lambda1(d);
      nlohmann::json j{{"n", g.order()},
                       {"edges", g.edge_count()},
                       {"lambda1", sr.lambda1},
                       {"wiener", wiener(d)},
                       {"spectrum", full_spectrum(d)},
                       {"iterations", sr.iterations},
                       {"residual", sr.residual}};
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*ktree_cmd) {
      Graph g = detail::load_graph(g6, edges_file);
      KTreeVerdict v = has_spanning_ktree(g, k);
      nlohmann::json j{{"n", g.order()}, {"k", k}, {"outcome", v.yes ? "YES" : "NO"}};
      if (v.yes) {
        nlohmann::json te = nlohmann::json::array();
        for (auto [a, b] : v.tree_edges) te.push_back({a, b});
        j["tree_edges"] = te;
      }
      if (v.win_violation) j["win_violation"] = set_members(*v.win_violation);
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*extremal_cmd) {
      Graph g(1);
      nlohmann::json j;
      if (family == "gstar") {
        g = gstar(n, k);
        j["wiener"] = gstar_wiener_closed(n, k);
        j["k"] = k;
      } else if (family == "gsharp") {
        g = gsharp(n);
        j["rho_closed"] = rho_sharp_closed(n);
      } else if (family == "gtilde") {
        g = gtilde(n, k, s);
        j["k"] = k;
        j["s"] = s;
      } else if (family == "gprime") {
        g = gprime(n, s, t);
        j["s"] = s;
        j["t"] = t;
      } else {
        throw std::invalid_argument("unknown family: " + family);
      }
      j["n"] = g.order();
      j["graph6"] = write_graph6(g);
      j["lambda1"] = lambda1(all_pairs_distances(g)).lambda1;
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*verify_cmd) {
      if (mode != "exhaustive" && mode != "sample")
        throw std::invalid_argument("mode must be exhaustive or sample");
      VerificationReport rep = verify_threshold(
          k, n, mode == "exhaustive" ? VerifyMode::Exhaustive : VerifyMode::Sample, budget, seed);
      detail::emit_report(rep, csv, out);
      return rep.anomalies() == 0 ? 0 : 1;
    }
    if (*sweep_cmd) {
      VerificationReport rep = sweep_family_orderings(kmax, smax, nmax);
      detail::emit_report(rep, csv, out);
      return rep.anomalies() == 0 ? 0 : 1;
    }
    if (*lemmas_cmd) {
      VerificationReport rep = property_suite(trials, seed);
      detail::emit_report(rep, csv, out);
      return rep.anomalies() == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace kts
