#include "fireline/discharging.hpp"

#include <algorithm>
#include <stdexcept>

namespace fireline {

Rational density_threshold(int k) {
    if (k < 1) throw std::invalid_argument("density_threshold needs k >= 1");
    return rat(k + 2) - rat(1, k + 2);
}

ClassificationReport classify(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("classify needs k >= 1");
    const int n = g.n();
    ClassificationReport r;
    r.k = k;
    r.tau = density_threshold(k);
    r.cls.assign(static_cast<std::size_t>(n), VertexClass::none);
    r.omega.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) r.omega[static_cast<std::size_t>(v)] = g.degree(v);

    // A degree-(k+2) vertex is "crowded" if it has >= 2 neighbors of degree k+1.
    std::vector<char> crowded(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != k + 2) continue;
        int small = 0;
        for (int u : g.neighbors(v)) small += g.degree(u) == k + 1;
        crowded[static_cast<std::size_t>(v)] = small >= 2;
    }

    for (int v = 0; v < n; ++v) {
        if (g.degree(v) <= k) {
            r.cls[static_cast<std::size_t>(v)] = VertexClass::v1;
            r.v1.push_back(v);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (r.cls[static_cast<std::size_t>(v)] != VertexClass::none || g.degree(v) != k + 1)
            continue;
        bool near_small = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                      [&](int u) { return g.degree(u) <= k + 1; });
        if (near_small) {
            r.cls[static_cast<std::size_t>(v)] = VertexClass::v2;
            r.v2.push_back(v);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (r.cls[static_cast<std::size_t>(v)] != VertexClass::none || g.degree(v) != k + 1)
            continue;
        bool near_crowded = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                        [&](int u) { return crowded[static_cast<std::size_t>(u)]; });
        if (near_crowded) {
            r.cls[static_cast<std::size_t>(v)] = VertexClass::v3;
            r.v3.push_back(v);
        }
    }
    r.bound_lhs = static_cast<long long>(r.v1.size() + r.v2.size() + r.v3.size());
    return r;
}

ClassificationReport discharge(const Graph& g, int k) {
    ClassificationReport r = classify(g, k);
    const int n = g.n();
    r.omega_prime.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) r.omega_prime[static_cast<std::size_t>(v)] = rat(g.degree(v));

    const Rational share = rat(1, k + 2);
    for (int w = 0; w < n; ++w) {
        if (g.degree(w) < k + 2) continue; // donors; never inside v1|v2|v3
        for (int u : g.neighbors(w)) {
            if (g.degree(u) == k + 1 && !r.in_class(u)) {
                r.omega_prime[static_cast<std::size_t>(u)] += share;
                r.omega_prime[static_cast<std::size_t>(w)] -= share;
            }
        }
    }

    // Internal checks: the transfer only moves weight inside the complement
    // of the classes, and the discharged weights meet the threshold there.
    Rational before = 0, after = 0;
    for (int v = 0; v < n; ++v) {
        if (r.in_class(v)) {
            if (r.omega_prime[static_cast<std::size_t>(v)] != rat(g.degree(v)))
                throw std::logic_error("discharge touched a classified vertex");
            continue;
        }
        before += rat(g.degree(v));
        after += r.omega_prime[static_cast<std::size_t>(v)];
        const Rational& w = r.omega_prime[static_cast<std::size_t>(v)];
        if (g.degree(v) == k + 1 && w != r.tau)
            throw std::logic_error("degree-(k+1) vertex outside the classes must land exactly on the threshold");
        if (w < r.tau) throw std::logic_error("discharged weight below threshold");
    }
    if (before != after) throw std::logic_error("weight not conserved by discharging");
    return r;
}

BoundVerdict verify_bound(const Graph& g, int k, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("verify_bound needs eps > 0");
    if (g.n() < 2) throw std::invalid_argument("verify_bound needs n >= 2");
    BoundVerdict v;
    v.density = rat(2 * g.edge_count(), g.n());
    v.limit = density_threshold(k) - eps;
    if (v.density > v.limit)
        throw std::invalid_argument("density precondition violated: 2m/n = " +
                                    rational_str(v.density) + " exceeds tau - eps = " +
                                    rational_str(v.limit));
    ClassificationReport r = classify(g, k);
    v.lhs = rat(r.bound_lhs);
    v.rhs = eps * rat(g.n()) / r.tau;
    v.holds = v.lhs >= v.rhs;
    return v;
}

Rational rho_floor(int k, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("rho_floor needs eps > 0");
    return rat(2) * eps / (rat(5) * density_threshold(k));
}

} // namespace fireline
