// ctverberg: command line front end. Every subcommand prints one JSON report
//   {"command", "input", "result", "timing_ms", "version"}
// where input.argv replays the invocation. Exit codes: 0 ok, 1 domain
// failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include <ctverberg/ctverberg.hpp>

using namespace ctv;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComplexSource {
  std::string file;
  std::vector<std::size_t> chessboard;
  std::vector<std::size_t> rainbow;
  std::size_t simplex = 0;
  std::size_t boundary = 0;
  std::size_t points = 0;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option_group("complex", "input complex (exactly one)");
    g->add_option("--complex", file, "complex JSON file")->check(CLI::ExistingFile);
    g->add_option("--chessboard", chessboard, "chessboard complex M N")->expected(2);
    g->add_option("--rainbow", rainbow, "rainbow complex on classes of these sizes")->delimiter(',');
    g->add_option("--simplex", simplex, "full simplex on N vertices");
    g->add_option("--boundary", boundary, "boundary of the simplex on N vertices");
    g->add_option("--points", points, "N isolated points");
    g->require_option(1);
  }

  SimplicialComplex build(std::size_t budget, json& echo) const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open " + file);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw UsageError(file + ": " + e.what());
      }
      echo["complex"] = file;
      return complex_from_json(j, budget);
    }
    if (!chessboard.empty()) {
      echo["chessboard"] = chessboard;
      return ctv::chessboard(chessboard[0], chessboard[1], budget);
    }
    if (!rainbow.empty()) {
      echo["rainbow"] = rainbow;
      return rainbow_complex(rainbow).complex;
    }
    if (simplex) {
      echo["simplex"] = simplex;
      return full_simplex(simplex);
    }
    if (boundary) {
      echo["boundary"] = boundary;
      return simplex_boundary(boundary);
    }
    echo["points"] = points;
    return discrete_points(points);
  }
};

json betti_to_json(const BettiProfile& b) {
  json j{{"p", b.p}, {"betti", b.betti}, {"hconn", hconn_to_json(hconn(b))}};
  if (b.minus_one) j["betti_minus_one"] = b.minus_one;
  return j;
}

json product_to_json(const ProductCellComplex& c) {
  json cells = json::array();
  for (int d = 0; d <= c.dim(); ++d)
    for (const auto& cell : c.cells(d)) cells.push_back(cell.factors);
  return {{"n", c.n()}, {"k", c.k()}, {"dim", c.dim()}, {"cell_counts", c.cell_counts()}, {"cells", std::move(cells)}};
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::string s = v.dump();
  if (s.size() > 100) s = s.substr(0, 97) + "...";
  return s;
}

void print_table(std::ostream& os, const json& report) {
  os << "command  " << report["command"].get<std::string>() << "\n";
  std::size_t w = 0;
  for (auto it = report["result"].begin(); it != report["result"].end(); ++it) w = std::max(w, it.key().size());
  for (auto it = report["result"].begin(); it != report["result"].end(); ++it) {
    os << std::left << std::setw(static_cast<int>(w) + 2) << it.key();
    if (it->is_array() && !it->empty() && it->front().is_object()) {
      os << it->size() << " entries\n";
      for (const auto& row : *it) {
        os << "  -";
        for (auto f = row.begin(); f != row.end(); ++f)
          if (!f->is_structured()) os << " " << f.key() << "=" << scalar(*f);
        os << "\n";
      }
    } else {
      os << scalar(*it) << "\n";
    }
  }
  os << "timing_ms  " << report["timing_ms"] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Tverberg toolkit: complexes, homology, index bounds and experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  std::string output;
  bool table = false;
  std::optional<std::size_t> budget_flag;
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_flag("--table", table, "human-readable table instead of JSON");
  app.add_option("--budget", budget_flag, "face-count budget (default CTV_FACE_BUDGET or 10^7)");

  // chessboard
  std::size_t cb_m = 0, cb_n = 0;
  auto* cmd_chess = app.add_subcommand("chessboard", "build the chessboard complex on an M x N board");
  cmd_chess->add_option("m", cb_m, "rows")->required();
  cmd_chess->add_option("n", cb_n, "columns")->required();

  // deleted-join / deleted-product
  ComplexSource dj_src, dp_src;
  std::uint32_t dj_n = 2, dj_k = 2, dp_n = 2, dp_k = 2;
  auto* cmd_dj = app.add_subcommand("deleted-join", "n-fold k-wise deleted join of a complex");
  dj_src.add_to(cmd_dj);
  cmd_dj->add_option("--n", dj_n, "number of copies")->check(CLI::Range(2u, 64u));
  cmd_dj->add_option("--k", dj_k, "k-wise disjointness")->check(CLI::Range(2u, 64u));
  auto* cmd_dp = app.add_subcommand("deleted-product", "n-fold k-wise deleted product of a complex");
  dp_src.add_to(cmd_dp);
  cmd_dp->add_option("--n", dp_n, "number of copies")->check(CLI::Range(2u, 64u));
  cmd_dp->add_option("--k", dp_k, "k-wise disjointness")->check(CLI::Range(2u, 64u));

  // betti / hconn
  ComplexSource hb_src, hc_src;
  std::uint32_t hb_p = 2, hc_p = 2;
  std::vector<std::uint32_t> hb_dj, hb_dp, hc_dj, hc_dp;
  auto* cmd_betti = app.add_subcommand("betti", "reduced Betti numbers over Z_p");
  auto* cmd_hconn = app.add_subcommand("hconn", "homological connectivity over Z_p");
  for (auto [cmd, src, p, dj, dp] : {std::tuple{cmd_betti, &hb_src, &hb_p, &hb_dj, &hb_dp},
                                     std::tuple{cmd_hconn, &hc_src, &hc_p, &hc_dj, &hc_dp}}) {
    src->add_to(cmd);
    cmd->add_option("--p", *p, "prime coefficient modulus");
    auto* j = cmd->add_option("--deleted-join", *dj, "apply the deleted join N K first")->expected(2);
    cmd->add_option("--deleted-product", *dp, "use the cellular complex of the deleted product N K")
        ->expected(2)
        ->excludes(j);
  }

  // verify-theorem / experiment
  TheoremInstance vt, ex;
  auto instance_flags = [](CLI::App* cmd, TheoremInstance& ti) {
    cmd->add_option("--d", ti.d, "target dimension")->required();
    cmd->add_option("--k", ti.k, "k (k+1 color classes)")->required();
    cmd->add_option("--m", ti.m_large, "number of large classes")->required();
    cmd->add_option("--p", ti.p, "prime p")->required();
    cmd->add_option("--n", ti.n, "exponent n, r = p^n")->required();
    cmd->add_option("--sizes", ti.sizes, "color class sizes, comma separated")->delimiter(',')->required();
  };
  auto* cmd_verify = app.add_subcommand("verify-theorem", "evaluate the theorem's hypotheses for a bundle");
  instance_flags(cmd_verify, vt);

  std::size_t ex_trials = 10;
  std::uint64_t ex_seed = 0;
  ExperimentOptions ex_opts;
  std::optional<std::int64_t> ex_q;
  bool ex_no_witnesses = false, ex_no_prune = false;
  auto* cmd_exp = app.add_subcommand("experiment", "seeded random trials of the face search");
  instance_flags(cmd_exp, ex);
  cmd_exp->add_option("--trials", ex_trials, "number of trials");
  cmd_exp->add_option("--seed", ex_seed, "base seed");
  cmd_exp->add_option("--q", ex_q, "faces to search for (default p^n - 1)");
  cmd_exp->add_option("--lp-budget", ex_opts.lp_budget, "LP calls per trial");
  cmd_exp->add_option("--coordinate-bound", ex_opts.coordinate_bound, "integer coordinates in [-B, B]");
  cmd_exp->add_option("--threads", ex_opts.threads, "worker threads");
  cmd_exp->add_flag("--no-witnesses", ex_no_witnesses, "omit witnesses from the report");
  cmd_exp->add_flag("--no-prune", ex_no_prune, "disable prefix pruning");

  // tverberg-search
  std::string ts_config;
  std::int64_t ts_q = 0;
  SearchOptions ts_opts;
  bool ts_no_prune = false;
  auto* cmd_search = app.add_subcommand("tverberg-search", "find q disjoint rainbow faces with a common point");
  cmd_search->add_option("--config", ts_config, "configuration JSON file")->required()->check(CLI::ExistingFile);
  cmd_search->add_option("--q", ts_q, "number of faces")->required();
  cmd_search->add_option("--lp-budget", ts_opts.lp_budget, "LP call budget");
  cmd_search->add_flag("--no-prune", ts_no_prune, "disable prefix pruning");

  // decompose
  std::vector<std::size_t> dc_sizes;
  std::uint32_t dc_r = 2;
  auto* cmd_dec = app.add_subcommand("decompose", "verify the deleted join of a rainbow complex is a join of chessboards");
  cmd_dec->add_option("--sizes", dc_sizes, "color class sizes")->delimiter(',')->required();
  cmd_dec->add_option("--r", dc_r, "number of copies")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  std::size_t budget = 0;
  try {
    budget = budget_flag ? *budget_flag : face_budget_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  json input;
  input["argv"] = json::array();
  for (int i = 1; i < argc; ++i) input["argv"].push_back(argv[i]);
  if (!budget_flag) {
    input["argv"].push_back("--budget");
    input["argv"].push_back(std::to_string(budget));
  }
  input["budget"] = budget;

  json result;
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (cmd == cmd_chess) {
      input["m"] = cb_m;
      input["n"] = cb_n;
      auto c = chessboard(cb_m, cb_n, budget);
      result = complex_to_json(c);
      result["f_vector"] = c.f_vector();
      result["dim"] = c.dim();
    } else if (cmd == cmd_dj) {
      auto base = dj_src.build(budget, input);
      input["n"] = dj_n;
      input["k"] = dj_k;
      auto c = deleted_join(base, dj_n, dj_k, budget);
      result = complex_to_json(c);
      result["f_vector"] = c.f_vector();
      result["dim"] = c.dim();
    } else if (cmd == cmd_dp) {
      auto base = dp_src.build(budget, input);
      input["n"] = dp_n;
      input["k"] = dp_k;
      result = product_to_json(deleted_product(base, dp_n, dp_k, budget));
    } else if (cmd == cmd_betti || cmd == cmd_hconn) {
      const bool is_betti = cmd == cmd_betti;
      const auto& src = is_betti ? hb_src : hc_src;
      const auto p = is_betti ? hb_p : hc_p;
      const auto& dj = is_betti ? hb_dj : hc_dj;
      const auto& dp = is_betti ? hb_dp : hc_dp;
      auto base = src.build(budget, input);
      input["p"] = p;
      ChainComplexModP cc;
      if (!dp.empty()) {
        input["deleted_product"] = dp;
        cc = cellular_chain_complex(deleted_product(base, dp[0], dp[1], budget), p);
      } else if (!dj.empty()) {
        input["deleted_join"] = dj;
        cc = chain_complex(deleted_join(base, dj[0], dj[1], budget), p);
      } else {
        cc = chain_complex(base, p);
      }
      auto b = betti(cc);
      result = betti_to_json(b);
      std::vector<std::size_t> cells;
      for (int d = 0; d <= cc.top_degree(); ++d) cells.push_back(cc.cells(d));
      result["cells"] = cells;
      result["euler_characteristic"] = euler_characteristic(cc);
    } else if (cmd == cmd_verify) {
      input["instance"] = instance_to_json(vt);
      auto v = volovikov_condition(vt);
      result = verdict_to_json(v);
      if (vt.valid()) {
        result["r"] = vt.r();
        result["deleted_join_index"] = index_bound_to_json(index_lower_bound_deleted_join(vt));
        result["deleted_product_index"] = index_bound_to_json(index_lower_bound_deleted_product(vt));
      }
      code = v.applicable ? 0 : 1;
    } else if (cmd == cmd_exp) {
      ex_opts.q = ex_q;
      ex_opts.prune = !ex_no_prune;
      input["instance"] = instance_to_json(ex);
      input["trials"] = ex_trials;
      input["seed"] = ex_seed;
      input["q"] = ex_q ? json(*ex_q) : json(nullptr);
      input["lp_budget"] = ex_opts.lp_budget;
      input["coordinate_bound"] = ex_opts.coordinate_bound;
      input["prune"] = ex_opts.prune;
      if (auto pr = ex.problems(); !pr.empty()) throw std::invalid_argument(pr.front());
      auto rep = verify_theorem_empirically(ex, ex_trials, ex_seed, ex_opts);
      result = experiment_to_json(rep, !ex_no_witnesses);
      code = (rep.counterexamples.empty() && rep.certificate_failures == 0) ? 0 : 1;
    } else if (cmd == cmd_search) {
      std::ifstream in(ts_config);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw UsageError(ts_config + ": " + e.what());
      }
      auto config = config_from_json(j);
      ts_opts.prune = !ts_no_prune;
      input["config"] = ts_config;
      input["q"] = ts_q;
      input["lp_budget"] = ts_opts.lp_budget;
      input["prune"] = ts_opts.prune;
      auto res = find_disjoint_intersecting_family(config, ts_q, ts_opts);
      result = {{"status", to_string(res.status)},
                {"q", ts_q},
                {"lp_calls", res.lp_calls},
                {"nodes", res.nodes},
                {"pivots", res.pivots}};
      if (res.witness) {
        result["witness"] = witness_to_json(*res.witness);
        result["certificate_ok"] = verify_witness(config, *res.witness);
      } else {
        result["witness"] = nullptr;
      }
      code = res.status == SearchStatus::Found ? 0 : 1;
    } else if (cmd == cmd_dec) {
      input["sizes"] = dc_sizes;
      input["r"] = dc_r;
      auto w = decomposition_isomorphism(dc_sizes, dc_r, budget);
      json vm = json::array();
      for (std::size_t u = 0; u < w.vertex_map.size(); ++u) vm.push_back({u, w.vertex_map[u]});
      result = {{"verified", w.verified},
                {"deleted_join_f_vector", w.deleted_join_side.f_vector()},
                {"chessboard_join_f_vector", w.chessboard_side.f_vector()},
                {"vertex_map", std::move(vm)}};
      code = w.verified ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << cmd->help();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << cmd->help();
    return 2;
  } catch (const std::exception& e) {
    result = {{"error", e.what()}};
    code = 1;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report{{"command", cmd->get_name()},
              {"input", std::move(input)},
              {"result", std::move(result)},
              {"timing_ms", elapsed},
              {"version", kVersion}};

  std::ostringstream text;
  if (table)
    print_table(text, report);
  else
    text << report.dump(2) << "\n";

  if (output.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 2;
    }
    out << text.str();
  }
  return code;
}
