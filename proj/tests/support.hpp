#pragma once

// Shared test helpers: independent oracles (kept deliberately naive and
// separate from the library code paths) and corpus generators.

#include <algorithm>
#include <vector>

#include "fireline/discharging.hpp"
#include "fireline/fire.hpp"
#include "fireline/graph.hpp"
#include "fireline/rng.hpp"

namespace testsupport {

using fireline::Graph;
using fireline::Rng;

// Marks every vertex lying on a simple cycle of length <= max_len by plain
// path enumeration: cycles are rooted at their smallest vertex and extended
// through larger vertices only.
inline std::vector<char> cycle_vertices_oracle(const Graph& g, int max_len) {
    const int n = g.n();
    std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    std::vector<char> in_path(static_cast<std::size_t>(n), 0);

    auto extend = [&](auto&& self, int s, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == s && path.size() >= 3) {
                for (int u : path) on_cycle[static_cast<std::size_t>(u)] = 1;
                continue;
            }
            if (w <= s || in_path[static_cast<std::size_t>(w)]) continue;
            if (static_cast<int>(path.size()) == max_len) continue;
            path.push_back(w);
            in_path[static_cast<std::size_t>(w)] = 1;
            self(self, s, w);
            in_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        in_path.assign(static_cast<std::size_t>(n), 0);
        in_path[static_cast<std::size_t>(s)] = 1;
        extend(extend, s, s);
    }
    return on_cycle;
}

// Quantifier-by-quantifier re-evaluation of the containment classes,
// structured differently from the library implementation on purpose.
inline fireline::VertexClass classify_one_oracle(const Graph& g, int k, int v) {
    using fireline::VertexClass;
    if (g.degree(v) <= k) return VertexClass::v1;
    if (g.degree(v) != k + 1) return VertexClass::none;
    for (int u : g.neighbors(v))
        if (g.degree(u) <= k + 1) return VertexClass::v2;
    for (int w : g.neighbors(v)) {
        if (g.degree(w) != k + 2) continue;
        int small_neighbors = 0;
        for (int u : g.neighbors(w)) small_neighbors += g.degree(u) == k + 1 ? 1 : 0;
        if (small_neighbors >= 2) return VertexClass::v3;
    }
    return VertexClass::none;
}

// A legal but arbitrary policy for property tests: protects a random subset
// of up to k legal vertices (sometimes fewer, sometimes none).
inline fireline::Strategy random_legal_strategy(std::uint64_t seed) {
    auto rng = std::make_shared<Rng>(seed);
    return [rng](const fireline::GameState& s) {
        std::vector<int> cand;
        for (int v = 0; v < s.graph->n(); ++v)
            if (!s.burning_at(v) && !s.protected_at(v)) cand.push_back(v);
        rng->shuffle(cand);
        std::size_t take = static_cast<std::size_t>(rng->below(static_cast<std::uint64_t>(s.k) + 1));
        cand.resize(std::min(cand.size(), take));
        return cand;
    };
}

// Random graph whose density stays below tau_k - eps; used by the
// discharging corpus tests. eps is a rational with denominator 100.
struct SparseSample {
    Graph graph;
    fireline::Rational eps;
};

inline SparseSample random_sparse_graph(int k, int n, Rng& rng) {
    using fireline::rat;
    // eps in [0.05, tau_k - 1], denominator 100
    fireline::Rational tau = fireline::density_threshold(k);
    long long hi = static_cast<long long>(fireline::rational_double((tau - 1) * 100));
    long long num = 5 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(hi - 5 + 1)));
    fireline::Rational eps = rat(num, 100);
    fireline::Rational limit = (tau - eps) * rat(n) / rat(2); // max edges
    long long m_max = static_cast<long long>(limit); // truncation = floor for positives
    long long cap = static_cast<long long>(n) * (n - 1) / 2;
    m_max = std::min(m_max, cap);
    long long m = m_max > 0 ? static_cast<long long>(rng.below(static_cast<std::uint64_t>(m_max) + 1)) : 0;
    return {fireline::gnm_random_graph(n, m, rng), eps};
}

} // namespace testsupport
