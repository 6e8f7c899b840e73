#pragma once

// Vertex-expansion machinery for (d,d+2)-biregular bipartite graphs.
//
// rate_f / rate_g are the first-moment rate functions for the containment
// events "some K on one side has all its edges inside a barely-larger K' on
// the other side": with |K| = c * (side size), the expected number of such
// pairs grows like rate^n, so the one-side expansion constants are the eps
// for which sup over c in (0, 1/2] of the rate stays below 1.
//
// check_side_expansion / check_joint_expansion test the expansion inequality
// on a concrete graph: exhaustively for small subset sizes, by sampling for
// larger ones. A reported violation is definitive; a clean report is
// evidence, never proof.

#include <cstdint>
#include <string>
#include <vector>

#include "fireline/exec.hpp"
#include "fireline/graph.hpp"
#include "fireline/rng.hpp"

namespace fireline {

// Which one-side inequality: Y-side (a) demands |N(K)| >= k*(d+2)/d*(1+eps),
// X-side (b) demands |N(K)| >= k*d/(d+2)*(1+eps).
enum class ExpandSide { y_side, x_side };

// Five-factor rate for Y-side containment events (log-domain evaluation):
//   c^{cd(d+1-(d+2)/d (1+e))} (1+e)^{(1+e)cd(d+2)(1-1/d)} e^{-e cd(d+2)}
//   (1-c)^{d(d+1)(1-c)} (1-c(1+e))^{-(d+2)(1-c(1+e))}
// pre: 0 < c <= 1/2, eps > 0, d >= 3, c(1+eps) < 1.
double rate_f(double c, double eps, int d);
// X-side analogue:
//   c^{c(d+2)(d-1-d/(d+2)(1+e))} (1+e)^{(1+e)cd(d+2)(1-1/(d+2))} e^{-e cd(d+2)}
//   (1-c)^{(d-1)(d+2)(1-c)} (1-c(1+e))^{-d(1-c(1+e))}
double rate_g(double c, double eps, int d);

// Direct products of the five factors, for agreement tests against the
// log-domain path.
double rate_f_direct(double c, double eps, int d);
double rate_g_direct(double c, double eps, int d);

enum class RateKind { f, g };

struct EpsScanRow {
    double eps;
    double sup_rate;
    double argmax_c;
};

struct EpsScan {
    int d = 3;
    RateKind which = RateKind::f;
    double admissible_eps = 0.0;   // largest grid eps with sup_c rate < 1
    double boundary_argmax_c = 0.0; // arg-max c at the first inadmissible eps
    std::vector<EpsScanRow> rows;
};

// Grid scan for the largest admissible eps. pre: both grids >= 1000 points.
EpsScan scan_eps(int d, RateKind which, int c_grid = 2000, int eps_grid = 2000,
                 double eps_lo = 1e-3, double eps_hi = 0.6);

std::string eps_scan_csv(const EpsScan& s);

struct Violation {
    std::vector<int> subset;   // K, sorted
    long long neighborhood;    // |N(K)|
    long long required;        // ceil of the real threshold
};

struct ExpansionReport {
    std::string side;                 // "Y", "X" or "joint"
    std::vector<int> checked_sizes;   // exhaustively enumerated
    std::vector<int> sampled_sizes;
    std::uint64_t subsets_checked = 0;
    std::vector<Violation> violations;

    bool clean() const { return violations.empty(); }
};

// One-side check per ExpandSide. pre: validate_biregular(g, d).
// Enumerates every K up to size exact_max (capped at half the side), then
// samples `samples` subsets per log-spaced larger size. Deterministic for a
// given seed regardless of thread count.
ExpansionReport check_side_expansion(const Graph& g, int d, double eps, ExpandSide side,
                                     int exact_max = 8, int samples = 10000,
                                     std::uint64_t seed = 0, Exec exec = Exec::parallel);

// Joint check over K within X union Y, |K| <= (|X|+|Y|)/2, demanding
// |N(K)| >= eps_prime * |K|.
ExpansionReport check_joint_expansion(const Graph& g, double eps_prime, int exact_max = 8,
                                      int samples = 10000, std::uint64_t seed = 0,
                                      Exec exec = Exec::parallel);

// Re-evaluates a reported violation against the graph (reports are
// self-verifying).
bool violation_is_real(const Graph& g, const Violation& viol);

} // namespace fireline
