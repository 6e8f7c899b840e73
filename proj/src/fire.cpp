#include "fireline/fire.hpp"

#include <stdexcept>
#include <string>

namespace fireline {

GameState ignite(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.n())
        throw std::invalid_argument("ignition vertex " + std::to_string(v) + " out of range");
    if (k < 1) throw std::invalid_argument("at least one firefighter per round (k >= 1)");
    GameState s;
    s.graph = &g;
    s.k = k;
    s.burning = DynBits(g.n());
    s.protected_ = DynBits(g.n());
    s.burning.set(v);
    s.round = 0;
    return s;
}

void GameState::protect(const std::vector<int>& s) {
    if (static_cast<int>(s.size()) > k)
        throw std::invalid_argument("protection set larger than k");
    for (int v : s) {
        if (v < 0 || v >= graph->n())
            throw std::invalid_argument("protected vertex out of range");
        if (burning.test(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " is already burning");
        if (protected_.test(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " is already protected");
    }
    for (int v : s) protected_.set(v);
}

void GameState::spread() {
    DynBits next = burning;
    burning.for_each([&](int u) {
        for (int w : graph->neighbors(u))
            if (!protected_.test(w)) next.set(w);
    });
    burning = std::move(next);
    ++round;
}

bool GameState::is_terminal() const {
    bool open = false;
    burning.for_each([&](int u) {
        if (open) return;
        for (int w : graph->neighbors(u))
            if (!burning.test(w) && !protected_.test(w)) {
                open = true;
                return;
            }
    });
    return !open;
}

PlayOutcome play(const Graph& g, int v, int k, const Strategy& strategy) {
    GameState s = ignite(g, v, k);
    PlayOutcome out;
    out.v = v;
    out.k = k;
    while (!s.is_terminal()) {
        std::vector<int> choice = strategy(s);
        s.protect(choice);
        s.spread();
        out.schedule.push_back(std::move(choice));
    }
    out.rounds = s.round;
    out.burned = s.burning.count();
    out.saved = g.n() - out.burned;
    return out;
}

PlayOutcome replay(const Graph& g, int v, int k, const std::vector<std::vector<int>>& schedule) {
    std::size_t next = 0;
    return play(g, v, k, [&](const GameState&) {
        return next < schedule.size() ? schedule[next++] : std::vector<int>{};
    });
}

} // namespace fireline
