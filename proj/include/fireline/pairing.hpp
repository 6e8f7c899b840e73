#pragma once

// Pairing model for random (d,d+2)-biregular bipartite graphs: d(d+2)n
// points on each side, X grouped into (d+2)n buckets of d points, Y into dn
// buckets of d+2 points. A pairing is a uniform perfect matching between the
// two point sets; collapsing buckets yields a multigraph, and conditioning on
// simplicity yields the uniform simple biregular graph. Loops are
// structurally impossible here (two disjoint point sets); that is asserted,
// not filtered.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fireline/exec.hpp"
#include "fireline/graph.hpp"
#include "fireline/rng.hpp"

namespace fireline {

struct PairingConfig {
    int n = 1;              // scale parameter
    int d = 3;              // X-side degree
    std::uint64_t seed = 0;
    int max_tries = 10000;  // rejection cap for sample_simple

    long long points() const { return static_cast<long long>(d) * (d + 2) * n; }
    int x_buckets() const { return (d + 2) * n; }
    int y_buckets() const { return d * n; }
    void validate() const {
        if (d < 3 || n < 1 || max_tries < 1)
            throw std::invalid_argument("pairing config needs d >= 3, n >= 1, max_tries >= 1");
    }
};

struct Pairing {
    // match[i] = Y-point matched to X-point i; a bijection on [0, d(d+2)n).
    std::vector<std::uint32_t> match;
};

struct Multigraph {
    int x_buckets = 0;
    int y_buckets = 0;
    // one entry per X-bucket/Y-bucket pair with multiplicity >= 1, sorted
    std::vector<std::pair<std::pair<int, int>, int>> edges;
    long long total_multiplicity = 0;
};

struct SimplicityStats {
    int d = 0;
    int n = 0;
    long long trials = 0;
    long long simple_count = 0;
    double estimate = 0.0;
    double lambda = 0.0;    // (d^2-1)/2
    double predicted = 0.0; // e^{-lambda}
};

// Thrown when sample_simple exhausts its rejection budget; raise the cap or
// lower d (acceptance probability decays like e^{-(d^2-1)/2}).
struct RejectionCapExceeded : std::runtime_error {
    int tries;
    explicit RejectionCapExceeded(int t)
        : std::runtime_error("no simple graph within " + std::to_string(t) + " pairing draws"),
          tries(t) {}
};

// Uniform perfect matching; deterministic for a given rng state.
Pairing generate_pairing(const PairingConfig& cfg, Rng& rng);

// Bucket of X-point i is i/d; bucket of Y-point j is j/(d+2).
Multigraph project(const Pairing& p, const PairingConfig& cfg);

bool is_simple(const Multigraph& m);

// Graph vertex layout: X-buckets are 0..(d+2)n-1, Y-buckets follow.
Graph multigraph_to_graph(const Multigraph& m);

struct SampleResult {
    Graph graph;
    int tries = 0;
};

// Rejection-samples a uniform simple (d,d+2)-biregular graph.
SampleResult sample_simple(const PairingConfig& cfg, Rng& rng);
inline Graph sample_simple_graph(const PairingConfig& cfg, Rng& rng) {
    return sample_simple(cfg, rng).graph;
}

// Monte Carlo estimate of the simplicity probability, against e^{-(d^2-1)/2}.
// Trials are split over replica RNG streams (cfg.seed XOR trial index), so the
// result is identical for any thread count.
SimplicityStats simplicity_rate(const PairingConfig& cfg, long long trials,
                                Exec exec = Exec::parallel);

} // namespace fireline
