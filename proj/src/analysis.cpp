#include "fireline/analysis.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fireline/discharging.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fireline {

RateReport rho_exact(const Graph& g, int k, const SolveOptions& opts, Exec exec) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("rho_exact needs a nonempty graph");
    RateReport r;
    r.k = k;
    r.mode = "exact";
    r.strategy = "optimal";
    r.per_vertex.assign(static_cast<std::size_t>(n), 0);
    std::vector<char> exact_flags(static_cast<std::size_t>(n), 1);

    auto solve_one = [&](int v) {
        SolveResult res = exact_sn(g, v, k, opts);
        r.per_vertex[static_cast<std::size_t>(v)] = res.sn;
        exact_flags[static_cast<std::size_t>(v)] = res.exact ? 1 : 0;
    };
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int v = 0; v < n; ++v) solve_one(v);
    } else
#endif
    {
        (void)exec;
        for (int v = 0; v < n; ++v) solve_one(v);
    }

    long long total = std::accumulate(r.per_vertex.begin(), r.per_vertex.end(), 0LL);
    r.rho_rational = rat(total) / rat(static_cast<long long>(n) * n);
    r.rho = rational_double(r.rho_rational);
    r.all_exact = std::all_of(exact_flags.begin(), exact_flags.end(), [](char c) { return c; });
    r.samples = n;
    return r;
}

RateReport rho_monte_carlo(const Graph& g, int k, const Strategy& strategy,
                           const std::string& strategy_name, long long samples,
                           std::uint64_t seed, bool sweep_all, Exec exec) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("rho_monte_carlo needs a nonempty graph");
    if (!sweep_all && samples < 1) throw std::invalid_argument("need samples >= 1");

    const long long count = sweep_all ? n : samples;
    std::vector<double> vals(static_cast<std::size_t>(count));

    auto run_one = [&](long long i) {
        int v;
        if (sweep_all) {
            v = static_cast<int>(i);
        } else {
            Rng rng = Rng::replica(seed, static_cast<std::uint64_t>(i));
            v = rng.below_int(n);
        }
        PlayOutcome out = play(g, v, k, strategy);
        vals[static_cast<std::size_t>(i)] = static_cast<double>(out.saved) / n;
    };
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i) run_one(i);
    } else
#endif
    {
        (void)exec;
        for (long long i = 0; i < count; ++i) run_one(i);
    }

    // Fixed-order reduction: bitwise deterministic for a given seed.
    double mean = 0.0;
    for (double x : vals) mean += x;
    mean /= static_cast<double>(count);
    double var = 0.0;
    for (double x : vals) var += (x - mean) * (x - mean);
    var = count > 1 ? var / static_cast<double>(count - 1) : 0.0;

    RateReport r;
    r.k = k;
    r.mode = "monte-carlo";
    r.rho = mean;
    r.rho_rational = 0;
    r.all_exact = false;
    r.stderr_val = std::sqrt(var / static_cast<double>(count));
    r.strategy = strategy_name;
    r.samples = count;
    return r;
}

namespace {

long long checked_mul_ll(long long a, long long b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("fire growth overflow");
    return static_cast<long long>(p);
}

} // namespace

RecurrenceTrace fire_growth_trace(int k, int r_max, std::optional<long long> n,
                                  IgnitionSide side) {
    if (k == 1)
        throw std::invalid_argument(
            "k = 1 collapses to the periodic pattern 1,2,1,2,... (greedy keeps the frontier "
            "bounded on the (2,4)-biregular tree); the growth recurrence needs k >= 2");
    if (k < 1) throw std::invalid_argument("fire_growth_trace needs k >= 2");
    if (r_max < 1) throw std::invalid_argument("fire_growth_trace needs r_max >= 1");

    RecurrenceTrace tr;
    tr.k = k;
    tr.seed_side = side;
    tr.s.reserve(static_cast<std::size_t>(2 * r_max));
    // Burned levels alternate between the two sides. A newly burning vertex
    // of degree D exposes D-1 children (D for the root), k of which are
    // protected each round.
    tr.s.push_back(1);
    if (side == IgnitionSide::x_side) {
        tr.s.push_back(1); // (k+1) neighbors, k protected
        while (static_cast<int>(tr.s.size()) < 2 * r_max) {
            long long prev = tr.s.back();
            if (tr.s.size() % 2 == 0) // next index odd: Y-level parents, k+2 children each
                tr.s.push_back(checked_mul_ll(prev, k + 2) - k);
            else // next index even: X-level parents, k children each
                tr.s.push_back(checked_mul_ll(prev, k) - k);
        }
    } else {
        tr.s.push_back(3); // (k+3) neighbors, k protected
        while (static_cast<int>(tr.s.size()) < 2 * r_max) {
            long long prev = tr.s.back();
            if (tr.s.size() % 2 == 0) // next index odd: X-level parents, k children each
                tr.s.push_back(checked_mul_ll(prev, k) - k);
            else
                tr.s.push_back(checked_mul_ll(prev, k + 2) - k);
        }
    }

    tr.q.resize(tr.s.size());
    long long acc = 0;
    for (std::size_t i = 0; i < tr.s.size(); ++i) {
        acc += tr.s[i];
        tr.q[i] = acc;
    }
    if (n) {
        std::vector<long long> p(tr.q.size());
        for (std::size_t i = 0; i < tr.q.size(); ++i) p[i] = *n - tr.q[i];
        tr.p = std::move(p);
    }
    return tr;
}

Rational fire_growth_closed(int k, int r) {
    if (k < 2) throw std::invalid_argument("fire_growth_closed needs k >= 2");
    if (r < 1) throw std::invalid_argument("fire_growth_closed needs r >= 1");
    Rational base = rat(static_cast<long long>(k) * (k + 2));
    Rational pow = 1;
    for (int i = 0; i < r; ++i) pow *= base;
    Rational val = rat(k - 1) / rat(static_cast<long long>(k) * (k + 2) *
                                    (static_cast<long long>(k) * k + 2 * k - 1)) *
                       pow +
                   rat(static_cast<long long>(k) * (k + 1)) /
                       rat(static_cast<long long>(k) * k + 2 * k - 1);
    if (denominator(val) != 1 || val <= 0)
        throw std::logic_error("closed form produced a non-integer: " + rational_str(val));
    return val;
}

GrowthTimeline growth_projection(int k, double eps_prime, double n, long long q_start) {
    if (k < 2) throw std::invalid_argument("growth_projection needs k >= 2");
    if (!(eps_prime > 0.0 && eps_prime < 1.0))
        throw std::invalid_argument("growth_projection needs 0 < eps_prime < 1");
    if (!(n >= 4.0)) throw std::invalid_argument("growth_projection needs n >= 4");
    if (q_start < 1) throw std::invalid_argument("growth_projection needs q_start >= 1");

    GrowthTimeline t;
    double base = static_cast<double>(k) * k + 2.0 * k;
    t.t_tree = 0.5 * std::log(std::log(n)) / std::log(base);
    double half_ratio = std::max(n / (2.0 * static_cast<double>(q_start)), 1.0);
    t.t_half = t.t_tree + std::log(half_ratio) / std::log(1.0 + eps_prime / 2.0);
    t.t_stop = t.t_half + std::log(n) / std::log(1.0 / (1.0 - eps_prime / (2.0 * (k + 3))));
    t.saved_bound = 2.0 * (k + 3) / eps_prime * t.t_stop;
    return t;
}

Rational average_degree_check(int k) {
    if (k < 1) throw std::invalid_argument("average_degree_check needs k >= 1");
    Rational avg = rat(static_cast<long long>(k + 1) * (k + 3), k + 2);
    if (avg != density_threshold(k))
        throw std::logic_error("biregular average degree must equal the density threshold");
    return avg;
}

double fit_log_over_n(const std::vector<TrendPoint>& pts) {
    if (pts.empty()) throw std::invalid_argument("fit needs at least one point");
    double num = 0.0, den = 0.0;
    for (const auto& p : pts) {
        double x = std::log(static_cast<double>(p.n)) / static_cast<double>(p.n);
        num += x * p.rho;
        den += x * x;
    }
    return num / den;
}

std::string trend_csv(const std::vector<TrendPoint>& pts) {
    double c = fit_log_over_n(pts);
    std::ostringstream out;
    out.precision(12);
    out << "n,rho_estimate,stderr,c_fit\n";
    for (const auto& p : pts) out << p.n << "," << p.rho << "," << p.stderr_val << "," << c << "\n";
    return out.str();
}

} // namespace fireline
