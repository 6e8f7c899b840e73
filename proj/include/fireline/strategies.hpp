#pragma once

// Protection policies: the greedy frontier policy, the class-based
// containment schedules, the exact branch-and-bound solver for the optimal
// saved count, and an exhaustive oracle for cross-checking it.

#include <cstdint>
#include <vector>

#include "fireline/discharging.hpp"
#include "fireline/fire.hpp"
#include "fireline/graph.hpp"

namespace fireline {

// Up to k unburned, unprotected vertices adjacent to the fire; ties broken
// by higher degree, then lower index.
std::vector<int> greedy_choice(const GameState& s);
Strategy greedy_strategy();

// Containment schedule for an ignition at v in the named class:
//   v1: protect all of v's neighbors in round 1            -> 1 vertex burns
//   v2: leave only a small-degree neighbor open, then seal  -> 2 burn
//   v3: route the fire v -> w -> u and seal each frontier   -> 3 burn
// Throws std::invalid_argument when v is not in the claimed class.
std::vector<std::vector<int>> surround_schedule(const Graph& g, int v, int k, VertexClass cls);

struct SolveResult {
    int v = 0;
    int k = 1;
    int sn = 0;          // optimal saved count (lower bound when !exact)
    bool exact = true;
    std::uint64_t nodes_expanded = 0;
    std::vector<std::vector<int>> schedule; // witness achieving sn
};

struct SolveOptions {
    std::uint64_t node_budget = 10'000'000;
    bool use_memo = true; // exposed so tests can show the memo never changes sn
};

// Exact optimal saved count via depth-first search over (burning, protected)
// states with memoization. Supports n <= 256. When the node budget runs out
// the best complete play found so far is returned with exact = false; its
// saved count is a valid lower bound and the schedule replays to it.
SolveResult exact_sn(const Graph& g, int v, int k, const SolveOptions& opts = {});

// Exhaustive oracle: every round tries every legal protection set of size
// <= k (including smaller-than-k sets and the empty set, so it does not rely
// on the dominance argument the solver uses). pre: n <= 10.
int brute_sn(const Graph& g, int v, int k);

} // namespace fireline
