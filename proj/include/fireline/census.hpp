#pragma once

// Short-cycle census: which vertices lie on a cycle of length at most L.
// The literal definition is implemented (v is on a cycle of length <= L iff
// two distinct neighbors a, b of v satisfy dist_{G-v}(a,b) <= L-2); the
// distance-from-a-bad-edge quantity used in asymptotic arguments upper-bounds
// this count. Callers working with biregular samples compute the real-valued
// cutoff log_{d^2-1} ln N and pass the floor.

#include <vector>

#include "fireline/exec.hpp"
#include "fireline/graph.hpp"

namespace fireline {

struct CycleCensus {
    int cutoff = 0;                   // L
    std::vector<char> on_short_cycle; // per vertex
    int count = 0;                    // number of true entries
};

// pre: L >= 3. Forests yield count = 0 for any L.
CycleCensus short_cycle_census(const Graph& g, int cutoff, Exec exec = Exec::parallel);

// Real-valued cutoff log_{d^2-1}(ln n_total); floor it before calling the census.
double short_cycle_cutoff(int d, double n_total);

// Vertex count of the balanced tree with i levels whose root side has degree d:
// 1 + d * sum_{j=0}^{i-1} (d-1)^{floor(j/2)} (d+1)^{ceil(j/2)}.
// Exact integer arithmetic; throws on overflow. pre: d >= 3, i >= 0.
unsigned long long balanced_tree_size(int d, int i);

} // namespace fireline
