#include "fireline/strategies.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace fireline {

std::vector<int> greedy_choice(const GameState& s) {
    const Graph& g = *s.graph;
    std::vector<int> cand;
    s.burning.for_each([&](int u) {
        for (int w : g.neighbors(u))
            if (!s.burning_at(w) && !s.protected_at(w)) cand.push_back(w);
    });
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    if (static_cast<int>(cand.size()) > s.k) cand.resize(static_cast<std::size_t>(s.k));
    return cand;
}

Strategy greedy_strategy() {
    return [](const GameState& s) { return greedy_choice(s); };
}

namespace {

[[noreturn]] void wrong_class(int v, const char* cls) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not in class " + cls);
}

std::vector<int> minus(const std::vector<int>& xs, std::initializer_list<int> drop) {
    std::vector<int> out;
    for (int x : xs)
        if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
    return out;
}

} // namespace

std::vector<std::vector<int>> surround_schedule(const Graph& g, int v, int k, VertexClass cls) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
    ClassificationReport rep = classify(g, k);
    if (cls == VertexClass::none || rep.cls[static_cast<std::size_t>(v)] != cls)
        wrong_class(v, cls == VertexClass::v1   ? "v1"
                       : cls == VertexClass::v2 ? "v2"
                       : cls == VertexClass::v3 ? "v3"
                                                : "none");

    if (cls == VertexClass::v1) {
        // deg(v) <= k: seal the whole neighborhood at once.
        return {g.neighbors(v)};
    }

    if (cls == VertexClass::v2) {
        // Leave open the lowest-index neighbor u with deg(u) <= k+1; the fire
        // takes u next round and is sealed there (u has at most k open sides).
        int u = -1;
        for (int w : g.neighbors(v))
            if (g.degree(w) <= k + 1) {
                u = w;
                break;
            }
        if (u < 0) wrong_class(v, "v2");
        std::vector<std::vector<int>> sched;
        sched.push_back(minus(g.neighbors(v), {u}));
        std::vector<int> second;
        for (int x : minus(g.neighbors(u), {v}))
            if (std::find(sched[0].begin(), sched[0].end(), x) == sched[0].end())
                second.push_back(x);
        sched.push_back(std::move(second));
        return sched;
    }

    // v3: route the fire through a crowded degree-(k+2) neighbor w, then into
    // another degree-(k+1) neighbor u of w, sealing each frontier. Because v is
    // not in v2, u cannot be adjacent to v, so exactly {v, w, u} burn.
    int w = -1, u = -1;
    for (int cand_w : g.neighbors(v)) {
        if (g.degree(cand_w) != k + 2) continue;
        for (int cand_u : g.neighbors(cand_w))
            if (cand_u != v && g.degree(cand_u) == k + 1) {
                w = cand_w;
                u = cand_u;
                break;
            }
        if (w >= 0) break;
    }
    if (w < 0) wrong_class(v, "v3");
    std::vector<std::vector<int>> sched;
    sched.push_back(minus(g.neighbors(v), {w}));
    std::vector<int> second;
    for (int x : minus(g.neighbors(w), {v, u}))
        if (std::find(sched[0].begin(), sched[0].end(), x) == sched[0].end()) second.push_back(x);
    sched.push_back(std::move(second));
    std::vector<int> third;
    for (int x : minus(g.neighbors(u), {w}))
        if (std::find(sched[0].begin(), sched[0].end(), x) == sched[0].end() &&
            std::find(sched[1].begin(), sched[1].end(), x) == sched[1].end())
            third.push_back(x);
    sched.push_back(std::move(third));
    return sched;
}

// ---------------------------------------------------------------------------
// Exact solver. States are (burning, protected) pairs of bit masks taken
// at the start of a round (before protecting). Actions are protection sets;
// by the dominance argument below only maximal ones need exploring:
//
//   Claim: if S c S' are both legal protection sets for a state, the optimal
//   final burned count after playing S' is <= that after playing S.
//   Sketch: couple the two continuations round by round, always protecting in
//   the S-game whatever the S'-game protects (legal: any vertex unburned in
//   the S'-game is unburned in the S-game by induction). By induction the
//   burning set of the S'-game stays a subset of the S-game's. So protecting
//   a superset never hurts, and it suffices to search sets of size exactly k,
//   or everything that is left when fewer than k candidates remain.
//
// brute_sn below deliberately ignores this and enumerates all subsets, so the
// equivalence tests validate the argument empirically.
// ---------------------------------------------------------------------------

namespace {

// Fixed-width bit mask covering up to 256 vertices; plenty for the solver's
// domain (the search itself is only practical far below that).
struct Mask {
    std::array<std::uint64_t, 4> w{};

    bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

    int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
               std::popcount(w[3]);
    }
    bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }

    friend Mask operator|(Mask a, const Mask& b) {
        for (int i = 0; i < 4; ++i) a.w[static_cast<std::size_t>(i)] |= b.w[static_cast<std::size_t>(i)];
        return a;
    }
    friend Mask operator&(Mask a, const Mask& b) {
        for (int i = 0; i < 4; ++i) a.w[static_cast<std::size_t>(i)] &= b.w[static_cast<std::size_t>(i)];
        return a;
    }
    Mask andnot(const Mask& b) const { // this & ~b
        Mask r = *this;
        for (int i = 0; i < 4; ++i) r.w[static_cast<std::size_t>(i)] &= ~b.w[static_cast<std::size_t>(i)];
        return r;
    }
    bool operator==(const Mask& o) const { return w == o.w; }

    template <typename F>
    void for_each(F&& f) const {
        for (int wi = 0; wi < 4; ++wi) {
            std::uint64_t x = w[static_cast<std::size_t>(wi)];
            while (x) {
                f(wi * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

struct StateKey {
    Mask burn, prot;
    bool operator==(const StateKey& o) const { return burn == o.burn && prot == o.prot; }
};

struct StateHash {
    std::size_t operator()(const StateKey& s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](std::uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        };
        for (auto x : s.burn.w) mix(x);
        for (auto x : s.prot.w) mix(x);
        return static_cast<std::size_t>(h);
    }
};

struct Solver {
    const Graph& g;
    int n;
    int k;
    std::vector<Mask> adj;
    Mask full;
    SolveOptions opts;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    int best_burn;
    std::vector<std::vector<int>> best_sched;
    std::vector<std::vector<int>> cur_sched;

    std::unordered_map<StateKey, int, StateHash> memo;

    Solver(const Graph& graph, int kk, const SolveOptions& o)
        : g(graph), n(graph.n()), k(kk), opts(o), best_burn(graph.n() + 1) {
        adj.assign(static_cast<std::size_t>(n), Mask{});
        for (int v = 0; v < n; ++v) {
            for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)].set(w);
            full.set(v);
        }
    }

    Mask frontier(const Mask& burn, const Mask& prot) const {
        Mask nb;
        burn.for_each([&](int v) { nb = nb | adj[static_cast<std::size_t>(v)]; });
        return nb.andnot(burn).andnot(prot);
    }

    Mask spread_once(const Mask& burn, const Mask& prot) const {
        return burn | frontier(burn, prot);
    }

    void record_leaf(const Mask& burn) {
        int b = burn.count();
        if (b < best_burn) {
            best_burn = b;
            best_sched = cur_sched;
        }
    }

    static std::vector<int> mask_to_vec(const Mask& m) {
        std::vector<int> out;
        m.for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Candidate ordering: frontier first, then by BFS distance from the fire,
    // then by index. Finds good incumbents early; completeness is unaffected.
    std::vector<int> ordered_candidates(const Mask& burn, const Mask& prot) const {
        std::vector<int> dist(static_cast<std::size_t>(n), n + 1);
        std::vector<int> q;
        burn.for_each([&](int v) {
            dist[static_cast<std::size_t>(v)] = 0;
            q.push_back(v);
        });
        for (std::size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (int w : g.neighbors(u))
                if (dist[static_cast<std::size_t>(w)] > dist[static_cast<std::size_t>(u)] + 1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push_back(w);
                }
        }
        std::vector<int> cand = mask_to_vec(full.andnot(burn).andnot(prot));
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
            return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
        });
        return cand;
    }

    // Min final burned reachable from this start-of-round state; -1 when the
    // node budget ran out somewhere below (then memo is not written).
    int solve(const Mask& burn, const Mask& prot) {
        if (++nodes > opts.node_budget) {
            out_of_budget = true;
            return -1;
        }
        if (!frontier(burn, prot).any()) { // terminal: fire is sealed
            record_leaf(burn);
            return burn.count();
        }
        StateKey key{burn, prot};
        if (opts.use_memo) {
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }

        Mask cand_mask = full.andnot(burn).andnot(prot);
        int cand_count = cand_mask.count();
        int best = n + 1;
        bool truncated = false;

        if (cand_count <= k) {
            // Protect everything that is left; the fire is sealed immediately.
            cur_sched.push_back(mask_to_vec(cand_mask));
            int val = solve(burn, prot | cand_mask);
            cur_sched.pop_back();
            if (val < 0)
                truncated = true;
            else
                best = val;
        } else {
            std::vector<int> cand = ordered_candidates(burn, prot);
            std::vector<int> pick(static_cast<std::size_t>(k));
            // Lexicographic k-subsets over the ordered candidate list.
            std::vector<int> idx(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                Mask pmask;
                for (int i = 0; i < k; ++i) {
                    pick[static_cast<std::size_t>(i)] = cand[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                    pmask.set(pick[static_cast<std::size_t>(i)]);
                }
                Mask prot2 = prot | pmask;
                Mask burn2 = spread_once(burn, prot2);
                // A child already burning >= the running best cannot improve it.
                if (burn2.count() < best) {
                    cur_sched.push_back(pick);
                    int val = solve(burn2, prot2);
                    cur_sched.pop_back();
                    if (val < 0)
                        truncated = true;
                    else
                        best = std::min(best, val);
                }
                // next combination
                int i = k - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == cand_count - k + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }

        if (truncated) return -1;
        if (opts.use_memo) memo.emplace(key, best);
        return best;
    }
};

} // namespace

SolveResult exact_sn(const Graph& g, int v, int k, const SolveOptions& opts) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("ignition vertex out of range");
    if (k < 1) throw std::invalid_argument("exact_sn needs k >= 1");
    if (g.n() > 256) throw std::invalid_argument("exact_sn supports n <= 256");
    if (opts.node_budget < 1) throw std::invalid_argument("node budget must be >= 1");

    Solver solver(g, k, opts);
    Mask burn;
    burn.set(v);
    int val = solver.solve(burn, Mask{});

    SolveResult res;
    res.v = v;
    res.k = k;
    res.nodes_expanded = solver.nodes;
    if (val >= 0) {
        res.exact = true;
        res.sn = g.n() - val;
        res.schedule = std::move(solver.best_sched);
    } else {
        res.exact = false;
        if (solver.best_burn <= g.n()) {
            res.sn = g.n() - solver.best_burn;
            res.schedule = std::move(solver.best_sched);
        } else {
            // Budget died before any complete play; fall back to a greedy
            // witness so the lower bound still replays.
            PlayOutcome po = play(g, v, k, greedy_strategy());
            res.sn = po.saved;
            res.schedule = std::move(po.schedule);
        }
    }
    return res;
}

namespace {

struct U64PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        std::uint64_t x = p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0x7f4a7c15u);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

struct BruteSolver {
    const Graph& g;
    int n, k;
    std::vector<std::uint64_t> adj;
    std::uint64_t full;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, U64PairHash> memo;

    BruteSolver(const Graph& graph, int kk) : g(graph), n(graph.n()), k(kk) {
        adj.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
        full = (std::uint64_t{1} << n) - 1;
    }

    std::uint64_t frontier(std::uint64_t burn, std::uint64_t prot) const {
        std::uint64_t nb = 0;
        std::uint64_t b = burn;
        while (b) {
            nb |= adj[static_cast<std::size_t>(std::countr_zero(b))];
            b &= b - 1;
        }
        return nb & ~burn & ~prot;
    }

    int solve(std::uint64_t burn, std::uint64_t prot) {
        if (!frontier(burn, prot)) return std::popcount(burn);
        auto key = std::make_pair(burn, prot);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        std::uint64_t cand = ~burn & ~prot & full;
        int best = n + 1;
        // Every submask of the legal candidates with popcount <= k, including
        // the empty set.
        std::uint64_t s = cand;
        while (true) {
            if (std::popcount(s) <= k) {
                std::uint64_t prot2 = prot | s;
                std::uint64_t burn2 = burn | frontier(burn, prot2);
                best = std::min(best, solve(burn2, prot2));
            }
            if (s == 0) break;
            s = (s - 1) & cand;
        }
        memo.emplace(key, best);
        return best;
    }
};

} // namespace

int brute_sn(const Graph& g, int v, int k) {
    if (g.n() > 10) throw std::invalid_argument("brute_sn is exhaustive; n <= 10 only");
    if (v < 0 || v >= g.n()) throw std::invalid_argument("ignition vertex out of range");
    if (k < 1) throw std::invalid_argument("brute_sn needs k >= 1");
    BruteSolver b(g, k);
    return g.n() - b.solve(std::uint64_t{1} << v, 0);
}

} // namespace fireline
