#include "fireline/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fireline {

Pairing generate_pairing(const PairingConfig& cfg, Rng& rng) {
    cfg.validate();
    Pairing p;
    p.match.resize(static_cast<std::size_t>(cfg.points()));
    std::iota(p.match.begin(), p.match.end(), 0u);
    rng.shuffle(p.match);
    return p;
}

Multigraph project(const Pairing& p, const PairingConfig& cfg) {
    cfg.validate();
    if (static_cast<long long>(p.match.size()) != cfg.points())
        throw std::invalid_argument("pairing size does not match config");
    Multigraph m;
    m.x_buckets = cfg.x_buckets();
    m.y_buckets = cfg.y_buckets();
    std::vector<std::pair<int, int>> raw;
    raw.reserve(p.match.size());
    for (std::size_t i = 0; i < p.match.size(); ++i) {
        int xb = static_cast<int>(i) / cfg.d;
        int yb = static_cast<int>(p.match[i]) / (cfg.d + 2);
        raw.emplace_back(xb, yb);
    }
    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 0; i < raw.size();) {
        std::size_t j = i;
        while (j < raw.size() && raw[j] == raw[i]) ++j;
        m.edges.push_back({raw[i], static_cast<int>(j - i)});
        i = j;
    }
    m.total_multiplicity = static_cast<long long>(raw.size());
    return m;
}

bool is_simple(const Multigraph& m) {
    return std::all_of(m.edges.begin(), m.edges.end(),
                       [](const auto& e) { return e.second == 1; });
}

Graph multigraph_to_graph(const Multigraph& m) {
    if (!is_simple(m)) throw std::invalid_argument("multigraph has a repeated edge");
    std::vector<Edge> edges;
    edges.reserve(m.edges.size());
    for (const auto& [buckets, mult] : m.edges) {
        (void)mult;
        edges.emplace_back(buckets.first, m.x_buckets + buckets.second);
    }
    std::vector<Side> side(static_cast<std::size_t>(m.x_buckets + m.y_buckets), Side::X);
    for (int y = 0; y < m.y_buckets; ++y) side[static_cast<std::size_t>(m.x_buckets + y)] = Side::Y;
    return build_graph(m.x_buckets + m.y_buckets, edges, std::move(side));
}

SampleResult sample_simple(const PairingConfig& cfg, Rng& rng) {
    cfg.validate();
    for (int t = 1; t <= cfg.max_tries; ++t) {
        Pairing p = generate_pairing(cfg, rng);
        Multigraph m = project(p, cfg);
        if (is_simple(m)) return {multigraph_to_graph(m), t};
    }
    throw RejectionCapExceeded(cfg.max_tries);
}

namespace {

// One trial on its own replica stream. A repeated edge can only arise from
// two points of the same X-bucket landing in the same Y-bucket, so checking
// each bucket's d partner buckets for duplicates decides simplicity without
// building the edge multiset.
bool simple_trial(const PairingConfig& cfg, std::uint64_t trial_index,
                  std::vector<std::uint32_t>& perm, std::vector<int>& partners) {
    Rng rng = Rng::replica(cfg.seed, trial_index);
    perm.resize(static_cast<std::size_t>(cfg.points()));
    std::iota(perm.begin(), perm.end(), 0u);
    rng.shuffle(perm);
    partners.resize(static_cast<std::size_t>(cfg.d));
    for (std::size_t i = 0; i < perm.size(); i += static_cast<std::size_t>(cfg.d)) {
        for (int j = 0; j < cfg.d; ++j) {
            partners[static_cast<std::size_t>(j)] =
                static_cast<int>(perm[i + static_cast<std::size_t>(j)]) / (cfg.d + 2);
            for (int l = 0; l < j; ++l)
                if (partners[static_cast<std::size_t>(l)] == partners[static_cast<std::size_t>(j)])
                    return false;
        }
    }
    return true;
}

} // namespace

SimplicityStats simplicity_rate(const PairingConfig& cfg, long long trials, Exec exec) {
    cfg.validate();
    if (trials < 1) throw std::invalid_argument("simplicity_rate needs trials >= 1");

    long long simple = 0;
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<std::uint32_t> perm;
            std::vector<int> partners;
            long long local = 0;
#pragma omp for schedule(static)
            for (long long t = 0; t < trials; ++t)
                local += simple_trial(cfg, static_cast<std::uint64_t>(t), perm, partners) ? 1 : 0;
#pragma omp atomic
            simple += local;
        }
#else
        exec = Exec::serial;
#endif
    }
    if (exec == Exec::serial) {
        std::vector<std::uint32_t> perm;
        std::vector<int> partners;
        for (long long t = 0; t < trials; ++t)
            simple += simple_trial(cfg, static_cast<std::uint64_t>(t), perm, partners) ? 1 : 0;
    }

    SimplicityStats s;
    s.d = cfg.d;
    s.n = cfg.n;
    s.trials = trials;
    s.simple_count = simple;
    s.estimate = static_cast<double>(simple) / static_cast<double>(trials);
    s.lambda = (static_cast<double>(cfg.d) * cfg.d - 1.0) / 2.0;
    s.predicted = std::exp(-s.lambda);
    return s;
}

} // namespace fireline
