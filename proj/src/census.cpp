#include "fireline/census.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fireline {

namespace {

// Scratch for one truncated BFS; reused across roots via the stamp trick.
struct BfsScratch {
    std::vector<int> dist;
    std::vector<int> stamp;
    std::vector<int> queue;
    int epoch = 0;

    explicit BfsScratch(int n) : dist(static_cast<std::size_t>(n)), stamp(static_cast<std::size_t>(n), -1) {}
};

// Is v on a cycle of length <= L?  Equivalent: some pair of distinct
// neighbors a,b of v is joined by a path of length <= L-2 in G - v.
bool on_short_cycle(const Graph& g, int v, int L, BfsScratch& s) {
    const auto& nbrs = g.neighbors(v);
    if (nbrs.size() < 2) return false;
    const int max_depth = L - 2;
    for (std::size_t ai = 0; ai + 1 < nbrs.size(); ++ai) {
        int a = nbrs[ai];
        ++s.epoch;
        s.queue.clear();
        s.queue.push_back(a);
        s.stamp[static_cast<std::size_t>(a)] = s.epoch;
        s.dist[static_cast<std::size_t>(a)] = 0;
        for (std::size_t head = 0; head < s.queue.size(); ++head) {
            int u = s.queue[head];
            int du = s.dist[static_cast<std::size_t>(u)];
            if (du == max_depth) continue;
            for (int w : g.neighbors(u)) {
                if (w == v) continue; // BFS runs in G - v
                auto wi = static_cast<std::size_t>(w);
                if (s.stamp[wi] == s.epoch) continue;
                s.stamp[wi] = s.epoch;
                s.dist[wi] = du + 1;
                s.queue.push_back(w);
            }
        }
        for (std::size_t bi = ai + 1; bi < nbrs.size(); ++bi) {
            int b = nbrs[bi];
            if (s.stamp[static_cast<std::size_t>(b)] == s.epoch) return true;
        }
    }
    return false;
}

} // namespace

CycleCensus short_cycle_census(const Graph& g, int cutoff, Exec exec) {
    if (cutoff < 3) throw std::invalid_argument("census cutoff must be >= 3");
    const int n = g.n();
    CycleCensus c;
    c.cutoff = cutoff;
    c.on_short_cycle.assign(static_cast<std::size_t>(n), 0);

    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            BfsScratch scratch(n);
#pragma omp for schedule(dynamic, 16)
            for (int v = 0; v < n; ++v)
                c.on_short_cycle[static_cast<std::size_t>(v)] =
                    on_short_cycle(g, v, cutoff, scratch) ? 1 : 0;
        }
#else
        exec = Exec::serial;
#endif
    }
    if (exec == Exec::serial) {
        BfsScratch scratch(n);
        for (int v = 0; v < n; ++v)
            c.on_short_cycle[static_cast<std::size_t>(v)] =
                on_short_cycle(g, v, cutoff, scratch) ? 1 : 0;
    }
    for (char b : c.on_short_cycle) c.count += b;
    return c;
}

double short_cycle_cutoff(int d, double n_total) {
    if (d < 3 || n_total <= 1.0) throw std::invalid_argument("cutoff needs d >= 3, n > 1");
    return std::log(std::log(n_total)) / std::log(static_cast<double>(d) * d - 1.0);
}

namespace {

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
    if (a != 0 && b > std::numeric_limits<unsigned long long>::max() / a)
        throw std::overflow_error("balanced_tree_size overflow");
    return a * b;
}

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
    if (a > std::numeric_limits<unsigned long long>::max() - b)
        throw std::overflow_error("balanced_tree_size overflow");
    return a + b;
}

} // namespace

unsigned long long balanced_tree_size(int d, int i) {
    if (d < 3 || i < 0) throw std::invalid_argument("balanced_tree_size needs d >= 3, i >= 0");
    // Level j (0-based below the root) holds d * (d-1)^{floor(j/2)} (d+1)^{ceil(j/2)} vertices.
    unsigned long long total = 1;
    unsigned long long level = 1; // (d-1)^{floor(j/2)} (d+1)^{ceil(j/2)} for j = 0
    for (int j = 0; j < i; ++j) {
        total = checked_add(total, checked_mul(static_cast<unsigned long long>(d), level));
        level = checked_mul(level, static_cast<unsigned long long>(j % 2 == 0 ? d + 1 : d - 1));
    }
    return total;
}

} // namespace fireline
