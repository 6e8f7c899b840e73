#pragma once

// Surviving-rate computation (exact and Monte Carlo), the fire-growth
// recurrence on locally tree-like biregular graphs, and the growth-phase
// projection used to read off the O(log n) saved-count scale.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fireline/exec.hpp"
#include "fireline/fire.hpp"
#include "fireline/graph.hpp"
#include "fireline/rational.hpp"
#include "fireline/strategies.hpp"

namespace fireline {

struct RateReport {
    int k = 1;
    std::string mode;               // "exact" or "monte-carlo"
    Rational rho_rational;           // exact mode: (1/n^2) sum_v sn_k(G,v)
    double rho = 0.0;
    bool all_exact = true;           // exact mode: no per-vertex solve hit its budget
    std::vector<long long> per_vertex; // exact mode: sn_k(G,v) by vertex
    double stderr_val = 0.0;         // monte-carlo mode
    std::string strategy;
    long long samples = 0;
};

// Exact surviving rate: solves every ignition vertex. Vertices whose solver
// runs out of budget contribute their lower bound and clear all_exact.
RateReport rho_exact(const Graph& g, int k, const SolveOptions& opts = {},
                     Exec exec = Exec::parallel);

// Lower-bound estimator: mean of saved/n over sampled ignition vertices under
// a fixed (suboptimal) strategy. With sweep_all, every vertex is played once
// instead of sampling (the noise-free value of the same estimator).
RateReport rho_monte_carlo(const Graph& g, int k, const Strategy& strategy,
                           const std::string& strategy_name, long long samples,
                           std::uint64_t seed, bool sweep_all = false,
                           Exec exec = Exec::parallel);

// Newly-burning counts per round for greedy play on the locally-tree phase of
// a (k+1,k+3)-biregular graph, ignited on the degree-(k+1) side:
//   s_1 = s_2 = 1,  s_{2r+1} = s_{2r}(k+2) - k,  s_{2r+2} = s_{2r+1} k - k.
// pre: k >= 2 (k = 1 collapses to the periodic pattern 1,2,1,2,... and has no
// geometric growth; rejected). trace.s holds s_1..s_{2*r_max}.
enum class IgnitionSide { x_side, y_side };

struct RecurrenceTrace {
    int k = 0;
    IgnitionSide seed_side = IgnitionSide::x_side;
    std::vector<long long> s; // s[t-1] = s_t
    std::vector<long long> q; // cumulative burning
    std::optional<std::vector<long long>> p; // n - q_t when n supplied
};

// The y_side variant (seed s_2 = 3, level multipliers swapped) is
// non-normative: nothing pins its seed beyond symmetry.
RecurrenceTrace fire_growth_trace(int k, int r_max,
                                  std::optional<long long> n = std::nullopt,
                                  IgnitionSide side = IgnitionSide::x_side);

// Closed form for the even entries:
//   s_{2r} = (k-1)/(k(k+2)(k^2+2k-1)) * (k(k+2))^r + k(k+1)/(k^2+2k-1).
// Exact rational; throws logic_error if the value is not a positive integer
// (that would mean the formula was transcribed wrong).
Rational fire_growth_closed(int k, int r);

// Phase markers of the growth argument with all O(1) terms set to zero:
//   t_tree = (1/2) log_{k^2+2k} ln n      (tree phase ends)
//   t_half = t_tree + log_{1+eps'/2} (n / (2 q_start))   (half the graph burns)
//   t_stop = t_half + log_{1/(1-eps'/(2(k+3)))} n
//   saved_bound = 2(k+3)/eps' * t_stop
// A projection calculator, not a certified bound.
struct GrowthTimeline {
    double t_tree = 0.0;
    double t_half = 0.0;
    double t_stop = 0.0;
    double saved_bound = 0.0;
    bool o1_zeroed = true;
};

GrowthTimeline growth_projection(int k, double eps_prime, double n, long long q_start = 1);

// The biregular average degree (k+1)(k+3)/(k+2), asserted equal to the
// density threshold k+2 - 1/(k+2).
Rational average_degree_check(int k);

// Trend experiments: a series of (n, rho) points and the least-squares scale
// for the model rho = c * log(n) / n.
struct TrendPoint {
    long long n = 0;
    double rho = 0.0;
    double stderr_val = 0.0;
};

double fit_log_over_n(const std::vector<TrendPoint>& pts);

// CSV with columns n,rho_estimate,stderr,c_fit (c_fit repeated on each row).
std::string trend_csv(const std::vector<TrendPoint>& pts);

} // namespace fireline
