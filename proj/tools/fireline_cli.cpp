// Command-line front end: graph generation, exact/heuristic surviving rates,
// containment classification, expansion checks, growth recurrences and
// simplicity statistics, all as reproducible seeded runs emitting JSON (and
// CSV for scans).

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "fireline/json_io.hpp"
#include "fireline/version.hpp"

using namespace fireline;

namespace {

std::uint64_t env_default_seed() {
    const char* s = std::getenv("FIRELINE_SEED");
    if (!s) return 0;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("FIRELINE_SEED is not an unsigned integer");
    }
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

struct Emitter {
    std::string command;
    std::uint64_t seed = 0;
    Json config = Json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    // Everything except "metadata" is byte-reproducible for a fixed config.
    void emit(const Json& result, const std::string& out_path) const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        Json report{{"config", config},
                    {"provenance", Json{{"command", command}, {"seed", seed}, {"version", kVersion}}},
                    {"metadata", Json{{"timestamp", iso_timestamp()}, {"wall_time_ms", ms}}},
                    {"result", result}};
        if (out_path.empty()) {
            std::cout << report.dump(2) << "\n";
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
            out << report.dump(2) << "\n";
        }
    }
};

Strategy strategy_by_name(const std::string& name) {
    if (name == "greedy") return greedy_strategy();
    if (name == "none") return no_protection();
    throw std::invalid_argument("unknown strategy '" + name + "' (greedy|none)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-firefighter processes on graphs: exact and Monte Carlo surviving rates, "
                 "containment classification, biregular random graphs and expansion checks"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    try {
        seed = env_default_seed();
    } catch (const std::exception& e) {
        std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }

    // --- gen -----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "sample a random (d,d+2)-biregular graph");
    int gen_d = 3, gen_n = 10, gen_tries = 10000;
    bool gen_multi = false;
    std::string gen_out, gen_report;
    gen->add_option("--d", gen_d, "X-side degree (>= 3)");
    gen->add_option("--n", gen_n, "scale parameter: |X| = (d+2)n, |Y| = dn");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--max-tries", gen_tries, "rejection cap for the simple sampler");
    gen->add_flag("--multigraph", gen_multi, "emit one unfiltered pairing projection instead");
    gen->add_option("--out", gen_out, "edge-list output path (simple mode)")->required();
    gen->add_option("--report", gen_report, "report JSON path (default stdout)");

    // --- solve ---------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "optimal saved count for one ignition vertex");
    std::string solve_graph, solve_out;
    int solve_v = 0, solve_k = 1;
    std::uint64_t solve_budget = 10'000'000;
    solve->add_option("--graph", solve_graph, "edge-list input")->required();
    solve->add_option("--v", solve_v, "ignition vertex")->required();
    solve->add_option("--k", solve_k, "firefighters per round");
    solve->add_option("--budget", solve_budget, "search node budget");
    solve->add_option("--out", solve_out, "report path (default stdout)");

    // --- rate ----------------------------------------------------------
    auto* rate = app.add_subcommand("rate", "surviving rate, exact or Monte Carlo");
    std::string rate_graph, rate_out, rate_mode = "exact", rate_strategy = "greedy";
    int rate_k = 1;
    long long rate_samples = 1000;
    bool rate_sweep = false;
    std::uint64_t rate_budget = 10'000'000;
    rate->add_option("--graph", rate_graph)->required();
    rate->add_option("--k", rate_k);
    rate->add_option("--mode", rate_mode, "exact|mc")->check(CLI::IsMember({"exact", "mc"}));
    rate->add_option("--strategy", rate_strategy, "mc strategy: greedy|none");
    rate->add_option("--samples", rate_samples, "mc sample count");
    rate->add_flag("--sweep", rate_sweep, "mc: play every vertex once instead of sampling");
    rate->add_option("--seed", seed);
    rate->add_option("--budget", rate_budget, "exact: per-vertex node budget");
    rate->add_option("--out", rate_out);

    // --- classify ------------------------------------------------------
    auto* classify_cmd = app.add_subcommand("classify", "containment classes and discharged weights");
    std::string cls_graph, cls_out, cls_eps;
    int cls_k = 2;
    classify_cmd->add_option("--graph", cls_graph)->required();
    classify_cmd->add_option("--k", cls_k);
    classify_cmd->add_option("--eps", cls_eps, "rational p/q; adds the density-bound verdict");
    classify_cmd->add_option("--out", cls_out);

    // --- expand --------------------------------------------------------
    auto* expand = app.add_subcommand("expand", "expansion check on a concrete graph");
    std::string exp_graph, exp_out, exp_which = "joint";
    int exp_d = 3, exp_exact_max = 8, exp_samples = 10000;
    double exp_eps = 0.088;
    expand->add_option("--graph", exp_graph)->required();
    expand->add_option("--which", exp_which, "a (Y-side) | b (X-side) | joint")
        ->check(CLI::IsMember({"a", "b", "joint"}));
    expand->add_option("--d", exp_d, "degree parameter (side checks)");
    expand->add_option("--eps", exp_eps, "expansion constant (eps or eps')");
    expand->add_option("--exact-max", exp_exact_max, "enumerate all subsets up to this size");
    expand->add_option("--samples", exp_samples, "samples per larger size class");
    expand->add_option("--seed", seed);
    expand->add_option("--out", exp_out);

    // --- recur ---------------------------------------------------------
    auto* recur = app.add_subcommand("recur", "fire-growth recurrence and phase projection");
    std::string rec_out, rec_side = "x";
    int rec_k = 2, rec_rmax = 10;
    long long rec_n = 0;
    double rec_eps = 0.088;
    recur->add_option("--k", rec_k)->required();
    recur->add_option("--rmax", rec_rmax, "trace covers s_1..s_{2 rmax}");
    recur->add_option("--n", rec_n, "graph size; adds p_t and the growth projection");
    recur->add_option("--eps", rec_eps, "eps' for the growth projection");
    recur->add_option("--side", rec_side, "ignition side: x|y (y is non-normative)")
        ->check(CLI::IsMember({"x", "y"}));
    recur->add_option("--out", rec_out);

    // --- simplicity ----------------------------------------------------
    auto* simp = app.add_subcommand("simplicity", "Monte Carlo simplicity probability of the pairing model");
    std::string simp_out;
    int simp_d = 3, simp_n = 100;
    long long simp_trials = 20000;
    simp->add_option("--d", simp_d);
    simp->add_option("--n", simp_n);
    simp->add_option("--trials", simp_trials);
    simp->add_option("--seed", seed);
    simp->add_option("--out", simp_out);

    // --- scan-eps ------------------------------------------------------
    auto* scan = app.add_subcommand("scan-eps", "largest admissible expansion constant for a rate curve");
    std::string scan_out, scan_which = "f", scan_csv;
    int scan_d = 3, scan_cgrid = 2000, scan_egrid = 2000;
    double scan_lo = 1e-3, scan_hi = 0.6;
    scan->add_option("--d", scan_d);
    scan->add_option("--which", scan_which, "f (Y-side rate) | g (X-side rate)")
        ->check(CLI::IsMember({"f", "g"}));
    scan->add_option("--c-grid", scan_cgrid);
    scan->add_option("--eps-grid", scan_egrid);
    scan->add_option("--eps-lo", scan_lo);
    scan->add_option("--eps-hi", scan_hi);
    scan->add_option("--out", scan_csv, "CSV output path");
    scan->add_option("--report", scan_out, "report JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }

    try {
        if (*gen) {
            Emitter em{"gen", seed};
            em.config = Json{{"d", gen_d},       {"n", gen_n},   {"seed", seed},
                             {"max_tries", gen_tries}, {"multigraph", gen_multi}, {"out", gen_out}};
            PairingConfig cfg{gen_n, gen_d, seed, gen_tries};
            Rng rng(seed);
            Json result;
            if (gen_multi) {
                Pairing p = generate_pairing(cfg, rng);
                Multigraph m = project(p, cfg);
                Json edges = Json::array();
                for (const auto& [buckets, mult] : m.edges)
                    edges.push_back(Json{{"x", buckets.first}, {"y", buckets.second}, {"mult", mult}});
                result = Json{{"x_buckets", m.x_buckets},
                              {"y_buckets", m.y_buckets},
                              {"simple", is_simple(m)},
                              {"edges", edges}};
                std::ofstream out(gen_out);
                if (!out) throw std::runtime_error("cannot open '" + gen_out + "'");
                out << result.dump(2) << "\n";
            } else {
                SampleResult s = sample_simple(cfg, rng);
                write_edge_list_file(s.graph, gen_out);
                result = Json{{"n_vertices", s.graph.n()},
                              {"edges", s.graph.edge_count()},
                              {"tries", s.tries},
                              {"biregular", validate_biregular(s.graph, gen_d)},
                              {"path", gen_out}};
            }
            em.emit(result, gen_report);
        } else if (*solve) {
            Emitter em{"solve", seed};
            em.config = Json{{"graph", solve_graph}, {"v", solve_v}, {"k", solve_k},
                             {"budget", solve_budget}};
            Graph g = read_edge_list_file(solve_graph);
            SolveResult res = exact_sn(g, solve_v, solve_k, SolveOptions{solve_budget, true});
            em.emit(solve_to_json(res), solve_out);
        } else if (*rate) {
            Emitter em{"rate", seed};
            em.config = Json{{"graph", rate_graph},   {"k", rate_k},
                             {"mode", rate_mode},     {"strategy", rate_strategy},
                             {"samples", rate_samples}, {"sweep", rate_sweep},
                             {"seed", seed},          {"budget", rate_budget}};
            Graph g = read_edge_list_file(rate_graph);
            RateReport rep;
            if (rate_mode == "exact")
                rep = rho_exact(g, rate_k, SolveOptions{rate_budget, true});
            else
                rep = rho_monte_carlo(g, rate_k, strategy_by_name(rate_strategy), rate_strategy,
                                      rate_samples, seed, rate_sweep);
            em.emit(rate_to_json(rep), rate_out);
        } else if (*classify_cmd) {
            Emitter em{"classify", seed};
            em.config = Json{{"graph", cls_graph}, {"k", cls_k}, {"eps", cls_eps}};
            Graph g = read_edge_list_file(cls_graph);
            ClassificationReport rep = discharge(g, cls_k);
            Json j;
            if (!cls_eps.empty()) {
                Rational eps = parse_rational(cls_eps);
                BoundVerdict v = verify_bound(g, cls_k, eps);
                rep.bound_rhs = v.rhs;
                j = classification_to_json(rep);
                j["bound"] = bound_to_json(v);
                j["rho_floor"] = rational_str(rho_floor(cls_k, eps));
            } else {
                j = classification_to_json(rep);
            }
            em.emit(j, cls_out);
        } else if (*expand) {
            Emitter em{"expand", seed};
            em.config = Json{{"graph", exp_graph}, {"which", exp_which},
                             {"d", exp_d},         {"eps", exp_eps},
                             {"exact_max", exp_exact_max}, {"samples", exp_samples},
                             {"seed", seed}};
            Graph g = read_edge_list_file(exp_graph);
            ExpansionReport rep;
            if (exp_which == "joint")
                rep = check_joint_expansion(g, exp_eps, exp_exact_max, exp_samples, seed);
            else
                rep = check_side_expansion(g, exp_d, exp_eps,
                                           exp_which == "a" ? ExpandSide::y_side
                                                            : ExpandSide::x_side,
                                           exp_exact_max, exp_samples, seed);
            em.emit(expansion_to_json(rep), exp_out);
        } else if (*recur) {
            Emitter em{"recur", seed};
            em.config = Json{{"k", rec_k}, {"rmax", rec_rmax}, {"n", rec_n},
                             {"eps", rec_eps}, {"side", rec_side}};
            RecurrenceTrace tr = fire_growth_trace(
                rec_k, rec_rmax, rec_n > 0 ? std::optional<long long>(rec_n) : std::nullopt,
                rec_side == "x" ? IgnitionSide::x_side : IgnitionSide::y_side);
            Json j = recurrence_to_json(tr);
            if (rec_side == "x") {
                std::vector<std::string> closed;
                for (int r = 1; r <= rec_rmax; ++r)
                    closed.push_back(rational_str(fire_growth_closed(rec_k, r)));
                j["s_even_closed_form"] = closed;
            }
            if (rec_n > 0)
                j["growth_projection"] =
                    growth_to_json(growth_projection(rec_k, rec_eps, static_cast<double>(rec_n)));
            em.emit(j, rec_out);
        } else if (*simp) {
            Emitter em{"simplicity", seed};
            em.config = Json{{"d", simp_d}, {"n", simp_n}, {"trials", simp_trials}, {"seed", seed}};
            PairingConfig cfg{simp_n, simp_d, seed, 1};
            SimplicityStats s = simplicity_rate(cfg, simp_trials);
            em.emit(simplicity_to_json(s), simp_out);
        } else if (*scan) {
            Emitter em{"scan-eps", seed};
            em.config = Json{{"d", scan_d},         {"which", scan_which},
                             {"c_grid", scan_cgrid}, {"eps_grid", scan_egrid},
                             {"eps_lo", scan_lo},    {"eps_hi", scan_hi}};
            EpsScan s = scan_eps(scan_d, scan_which == "f" ? RateKind::f : RateKind::g,
                                 scan_cgrid, scan_egrid, scan_lo, scan_hi);
            if (!scan_csv.empty()) {
                std::ofstream out(scan_csv);
                if (!out) throw std::runtime_error("cannot open '" + scan_csv + "'");
                out << eps_scan_csv(s);
            }
            Json j{{"admissible_eps", s.admissible_eps},
                   {"boundary_argmax_c", s.boundary_argmax_c},
                   {"rows", s.rows.size()}};
            if (!scan_csv.empty()) j["csv"] = scan_csv;
            em.emit(j, scan_out);
        }
    } catch (const std::exception& e) {
        std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
    return 0;
}
