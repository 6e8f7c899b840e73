#pragma once

// The k-firefighter process state machine. Each round the firefighter
// protects up to k unburned, unprotected vertices (anywhere in the graph),
// then the fire spreads to every unprotected neighbor of a burning vertex.
// Burning and protected sets only grow; the process stops once no neighbor
// of the fire is unprotected.

#include <functional>
#include <vector>

#include "fireline/bits.hpp"
#include "fireline/graph.hpp"

namespace fireline {

struct GameState {
    const Graph* graph = nullptr;
    int k = 1;
    DynBits burning;
    DynBits protected_;
    int round = 0;

    bool burning_at(int v) const { return burning.test(v); }
    bool protected_at(int v) const { return protected_.test(v); }

    // pre: |S| <= k, S disjoint from burning and protected. Protecting fewer
    // than k (including none) is legal.
    void protect(const std::vector<int>& s);
    void spread();
    bool is_terminal() const;
};

GameState ignite(const Graph& g, int v, int k);

using Strategy = std::function<std::vector<int>(const GameState&)>;

struct PlayOutcome {
    int v = 0;
    int k = 1;
    int saved = 0;
    int burned = 0;
    int rounds = 0;
    std::vector<std::vector<int>> schedule; // per-round protection sets
};

// Alternates protect/spread from ignition until terminal.
PlayOutcome play(const Graph& g, int v, int k, const Strategy& strategy);

// Replays a recorded schedule; rounds beyond the schedule protect nothing.
PlayOutcome replay(const Graph& g, int v, int k, const std::vector<std::vector<int>>& schedule);

inline Strategy no_protection() {
    return [](const GameState&) { return std::vector<int>{}; };
}

} // namespace fireline
