#include "fireline/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fireline/bits.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fireline {

namespace {

void rate_domain_check(double c, double eps, int d) {
    if (!(c > 0.0) || c > 0.5) throw std::invalid_argument("rate functions need 0 < c <= 1/2");
    if (!(eps > 0.0)) throw std::invalid_argument("rate functions need eps > 0");
    if (d < 3) throw std::invalid_argument("rate functions need d >= 3");
    if (c * (1.0 + eps) >= 1.0)
        throw std::invalid_argument("rate functions need c(1+eps) < 1 (last factor undefined)");
}

} // namespace

double rate_f(double c, double eps, int d) {
    rate_domain_check(c, eps, d);
    const double dd = d;
    double ln = c * dd * (dd + 1.0 - (dd + 2.0) / dd * (1.0 + eps)) * std::log(c) +
                (1.0 + eps) * c * dd * (dd + 2.0) * (1.0 - 1.0 / dd) * std::log(1.0 + eps) -
                eps * c * dd * (dd + 2.0) * std::log(eps) +
                dd * (dd + 1.0) * (1.0 - c) * std::log(1.0 - c) -
                (dd + 2.0) * (1.0 - c * (1.0 + eps)) * std::log(1.0 - c * (1.0 + eps));
    return std::exp(ln);
}

double rate_g(double c, double eps, int d) {
    rate_domain_check(c, eps, d);
    const double dd = d;
    double ln = c * (dd + 2.0) * (dd - 1.0 - dd / (dd + 2.0) * (1.0 + eps)) * std::log(c) +
                (1.0 + eps) * c * dd * (dd + 2.0) * (1.0 - 1.0 / (dd + 2.0)) * std::log(1.0 + eps) -
                eps * c * dd * (dd + 2.0) * std::log(eps) +
                (dd - 1.0) * (dd + 2.0) * (1.0 - c) * std::log(1.0 - c) -
                dd * (1.0 - c * (1.0 + eps)) * std::log(1.0 - c * (1.0 + eps));
    return std::exp(ln);
}

double rate_f_direct(double c, double eps, int d) {
    rate_domain_check(c, eps, d);
    const double dd = d;
    return std::pow(c, c * dd * (dd + 1.0 - (dd + 2.0) / dd * (1.0 + eps))) *
           std::pow(1.0 + eps, (1.0 + eps) * c * dd * (dd + 2.0) * (1.0 - 1.0 / dd)) *
           std::pow(eps, -eps * c * dd * (dd + 2.0)) *
           std::pow(1.0 - c, dd * (dd + 1.0) * (1.0 - c)) *
           std::pow(1.0 - c * (1.0 + eps), -(dd + 2.0) * (1.0 - c * (1.0 + eps)));
}

double rate_g_direct(double c, double eps, int d) {
    rate_domain_check(c, eps, d);
    const double dd = d;
    return std::pow(c, c * (dd + 2.0) * (dd - 1.0 - dd / (dd + 2.0) * (1.0 + eps))) *
           std::pow(1.0 + eps, (1.0 + eps) * c * dd * (dd + 2.0) * (1.0 - 1.0 / (dd + 2.0))) *
           std::pow(eps, -eps * c * dd * (dd + 2.0)) *
           std::pow(1.0 - c, (dd - 1.0) * (dd + 2.0) * (1.0 - c)) *
           std::pow(1.0 - c * (1.0 + eps), -dd * (1.0 - c * (1.0 + eps)));
}

EpsScan scan_eps(int d, RateKind which, int c_grid, int eps_grid, double eps_lo, double eps_hi) {
    if (c_grid < 1000 || eps_grid < 1000)
        throw std::invalid_argument("scan_eps needs grids of at least 1000 points");
    if (!(0.0 < eps_lo && eps_lo < eps_hi))
        throw std::invalid_argument("scan_eps needs 0 < eps_lo < eps_hi");
    auto rate = which == RateKind::f ? rate_f : rate_g;

    EpsScan scan;
    scan.d = d;
    scan.which = which;
    scan.rows.resize(static_cast<std::size_t>(eps_grid));

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < eps_grid; ++j) {
        double eps = eps_lo + (eps_hi - eps_lo) * j / (eps_grid - 1);
        double sup = 0.0, arg = 0.0;
        for (int i = 1; i <= c_grid; ++i) {
            double c = 0.5 * i / c_grid;
            if (c * (1.0 + eps) >= 1.0) break;
            double r = rate(c, eps, d);
            if (r > sup) {
                sup = r;
                arg = c;
            }
        }
        scan.rows[static_cast<std::size_t>(j)] = {eps, sup, arg};
    }

    scan.admissible_eps = 0.0;
    scan.boundary_argmax_c = scan.rows.back().argmax_c;
    for (std::size_t j = 0; j < scan.rows.size(); ++j) {
        if (scan.rows[j].sup_rate >= 1.0) {
            scan.boundary_argmax_c = scan.rows[j].argmax_c;
            break;
        }
        scan.admissible_eps = scan.rows[j].eps;
    }
    return scan;
}

std::string eps_scan_csv(const EpsScan& s) {
    std::ostringstream out;
    out << "eps,sup_rate,argmax_c\n";
    out.precision(12);
    for (const auto& r : s.rows) out << r.eps << "," << r.sup_rate << "," << r.argmax_c << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Concrete-graph checkers.
// ---------------------------------------------------------------------------

namespace {

int count_neighborhood(const Graph& g, const std::vector<int>& k_set) {
    DynBits in_k(g.n()), nb(g.n());
    for (int v : k_set) in_k.set(v);
    for (int v : k_set)
        for (int w : g.neighbors(v)) nb.set(w);
    int cnt = 0;
    nb.for_each([&](int w) { cnt += !in_k.test(w); });
    return cnt;
}

struct CheckPlan {
    std::vector<int> universe;
    long long cap = 0;                 // max |K|
    std::vector<long long> required;   // by |K|, 1..cap
};

// Conservative reading of the real threshold: sets have integer sizes, so we
// demand |N(K)| >= ceil(threshold); the 1e-9 slack guards FP round-up of
// products that are exactly integral.
long long ceil_threshold(long double t) {
    return static_cast<long long>(std::ceil(t - 1e-9L));
}

struct PartialReport {
    std::uint64_t subsets = 0;
    std::vector<Violation> violations;
};

// Enumerate all subsets of `universe` with size in [1, max_size] whose first
// element is universe[first]; union-of-neighborhoods is built incrementally.
void enumerate_from(const Graph& g, const CheckPlan& plan, int first, int max_size,
                    PartialReport& out) {
    const auto& uni = plan.universe;
    const int un = static_cast<int>(uni.size());
    std::vector<DynBits> nb_stack(static_cast<std::size_t>(max_size) + 1, DynBits(g.n()));
    std::vector<int> chosen;
    DynBits in_k(g.n());

    auto check_current = [&](int depth) {
        ++out.subsets;
        const DynBits& nb = nb_stack[static_cast<std::size_t>(depth)];
        int cnt = 0;
        const auto& nw = nb.words();
        const auto& kw = in_k.words();
        for (std::size_t i = 0; i < nw.size(); ++i)
            cnt += std::popcount(nw[i] & ~kw[i]);
        if (cnt < plan.required[static_cast<std::size_t>(depth)]) {
            Violation v;
            v.subset = chosen;
            v.neighborhood = cnt;
            v.required = plan.required[static_cast<std::size_t>(depth)];
            out.violations.push_back(std::move(v));
        }
    };

    // recursion depth bounded by max_size
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == max_size) return;
        for (int i = start; i < un; ++i) {
            int v = uni[static_cast<std::size_t>(i)];
            chosen.push_back(v);
            in_k.set(v);
            nb_stack[static_cast<std::size_t>(depth + 1)] = nb_stack[static_cast<std::size_t>(depth)];
            for (int w : g.neighbors(v)) nb_stack[static_cast<std::size_t>(depth + 1)].set(w);
            check_current(depth + 1);
            self(self, i + 1, depth + 1);
            in_k.reset(v);
            chosen.pop_back();
        }
    };

    int v0 = uni[static_cast<std::size_t>(first)];
    chosen.push_back(v0);
    in_k.set(v0);
    nb_stack[1] = nb_stack[0];
    for (int w : g.neighbors(v0)) nb_stack[1].set(w);
    check_current(1);
    rec(rec, first + 1, 1);
}

ExpansionReport run_check(const Graph& g, CheckPlan plan, const std::string& side_name,
                          int exact_max, int samples, std::uint64_t seed, Exec exec) {
    ExpansionReport rep;
    rep.side = side_name;
    if (plan.cap < 1) return rep;

    const int max_exact = static_cast<int>(std::min<long long>(exact_max, plan.cap));
    for (int s = 1; s <= max_exact; ++s) rep.checked_sizes.push_back(s);

    const int un = static_cast<int>(plan.universe.size());
    std::vector<PartialReport> parts(static_cast<std::size_t>(un));
    if (max_exact >= 1) {
#ifdef _OPENMP
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (int i = 0; i < un; ++i)
                enumerate_from(g, plan, i, max_exact, parts[static_cast<std::size_t>(i)]);
        } else
#endif
        {
            (void)exec;
            for (int i = 0; i < un; ++i)
                enumerate_from(g, plan, i, max_exact, parts[static_cast<std::size_t>(i)]);
        }
    }
    for (auto& p : parts) {
        rep.subsets_checked += p.subsets;
        for (auto& v : p.violations) rep.violations.push_back(std::move(v));
    }

    // Log-spaced larger sizes, sampled. Each draw runs on its own replica
    // stream keyed by (size index, draw index), so thread count is irrelevant.
    std::vector<long long> sizes;
    if (samples > 0) {
        for (long long s = max_exact + 1; s <= plan.cap; s = std::max(s + 1, 2 * s))
            sizes.push_back(s);
        if (!sizes.empty() && sizes.back() != plan.cap) sizes.push_back(plan.cap);
    }

    for (std::size_t si = 0; si < sizes.size(); ++si) {
        long long size = sizes[si];
        rep.sampled_sizes.push_back(static_cast<int>(size));
        std::vector<PartialReport> sparts(static_cast<std::size_t>(samples));
        auto draw_one = [&](int j) {
            Rng rng = Rng::replica(seed, (static_cast<std::uint64_t>(si) << 32) ^
                                             static_cast<std::uint64_t>(j));
            // Floyd's sampling of `size` distinct universe indices.
            std::vector<int> picked;
            std::vector<char> taken(static_cast<std::size_t>(un), 0);
            for (long long t = un - size; t < un; ++t) {
                int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(t) + 1));
                if (taken[static_cast<std::size_t>(r)]) r = static_cast<int>(t);
                taken[static_cast<std::size_t>(r)] = 1;
                picked.push_back(plan.universe[static_cast<std::size_t>(r)]);
            }
            std::sort(picked.begin(), picked.end());
            int cnt = count_neighborhood(g, picked);
            auto& pr = sparts[static_cast<std::size_t>(j)];
            ++pr.subsets;
            if (cnt < plan.required[static_cast<std::size_t>(size)])
                pr.violations.push_back({std::move(picked), cnt,
                                         plan.required[static_cast<std::size_t>(size)]});
        };
#ifdef _OPENMP
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (int j = 0; j < samples; ++j) draw_one(j);
        } else
#endif
        {
            for (int j = 0; j < samples; ++j) draw_one(j);
        }
        for (auto& p : sparts) {
            rep.subsets_checked += p.subsets;
            for (auto& v : p.violations) rep.violations.push_back(std::move(v));
        }
    }

    std::sort(rep.violations.begin(), rep.violations.end(), [](const Violation& a, const Violation& b) {
        if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
        return a.subset < b.subset;
    });
    return rep;
}

} // namespace

ExpansionReport check_side_expansion(const Graph& g, int d, double eps, ExpandSide side,
                                     int exact_max, int samples, std::uint64_t seed, Exec exec) {
    if (!validate_biregular(g, d))
        throw std::invalid_argument("check_side_expansion needs a validated (d,d+2)-biregular graph");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    CheckPlan plan;
    for (int v = 0; v < g.n(); ++v)
        if ((g.side(v) == Side::Y) == (side == ExpandSide::y_side)) plan.universe.push_back(v);
    plan.cap = static_cast<long long>(plan.universe.size()) / 2;
    plan.required.assign(static_cast<std::size_t>(plan.cap) + 1, 0);
    for (long long k = 1; k <= plan.cap; ++k) {
        long double ratio = side == ExpandSide::y_side
                                ? static_cast<long double>(d + 2) / d
                                : static_cast<long double>(d) / (d + 2);
        plan.required[static_cast<std::size_t>(k)] =
            ceil_threshold(static_cast<long double>(k) * ratio * (1.0L + static_cast<long double>(eps)));
    }
    return run_check(g, std::move(plan), side == ExpandSide::y_side ? "Y" : "X", exact_max,
                     samples, seed, exec);
}

ExpansionReport check_joint_expansion(const Graph& g, double eps_prime, int exact_max, int samples,
                                      std::uint64_t seed, Exec exec) {
    if (!(eps_prime > 0.0)) throw std::invalid_argument("eps_prime must be positive");
    CheckPlan plan;
    plan.universe.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) plan.universe[static_cast<std::size_t>(v)] = v;
    plan.cap = g.n() / 2;
    plan.required.assign(static_cast<std::size_t>(plan.cap) + 1, 0);
    for (long long k = 1; k <= plan.cap; ++k)
        plan.required[static_cast<std::size_t>(k)] =
            ceil_threshold(static_cast<long double>(eps_prime) * k);
    return run_check(g, std::move(plan), "joint", exact_max, samples, seed, exec);
}

bool violation_is_real(const Graph& g, const Violation& viol) {
    return count_neighborhood(g, viol.subset) == viol.neighborhood &&
           viol.neighborhood < viol.required;
}

} // namespace fireline
