#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fireline/strategies.hpp"
#include "fireline/pairing.hpp"
#include "support.hpp"

using namespace fireline;

TEST_CASE("greedy choices") {
    Graph p5 = path_graph(5);
    GameState s = ignite(p5, 2, 1);
    CHECK(greedy_choice(s) == std::vector<int>{1}); // degree tie, lower index

    Graph st = star_graph(5);
    GameState c = ignite(st, 0, 2);
    auto pick = greedy_choice(c);
    CHECK(pick.size() == 2);
    for (int v : pick) CHECK(v >= 1);

    // no unprotected neighbors: empty choice
    Graph k2 = complete_graph(2);
    GameState t = ignite(k2, 0, 1);
    t.protect({1});
    CHECK(greedy_choice(t).empty());

    // higher degree wins the tie-break
    Graph g = build_graph(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    GameState h = ignite(g, 0, 1);
    CHECK(greedy_choice(h) == std::vector<int>{2}); // deg(2)=3 > deg(1)=1
}

TEST_CASE("surround schedule: class v1") {
    // k=2, star K_{1,2} center has degree 2 <= k
    Graph g = star_graph(2);
    auto sched = surround_schedule(g, 0, 2, VertexClass::v1);
    PlayOutcome out = replay(g, 0, 2, sched);
    CHECK(out.burned == 1);
    CHECK(out.saved == g.n() - 1);
}

TEST_CASE("surround schedule: class v2") {
    // k=2: v of degree 3 adjacent to u of degree 3; both degree k+1
    Graph g = build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}});
    // deg(0)=3, deg(1)=3: 0 is v2 via neighbor 1 (degree <= k+1)
    auto rep = classify(g, 2);
    REQUIRE(rep.cls[0] == VertexClass::v2);
    auto sched = surround_schedule(g, 0, 2, VertexClass::v2);
    PlayOutcome out = replay(g, 0, 2, sched);
    CHECK(out.burned == 2);
}

namespace {

// k=2 gadget with v in v3: v(deg 3) -- w(deg 4), w has two deg-3 neighbors
// (v and u), and v's other neighbors have degree 4 so v avoids v2.
Graph v3_gadget(int& v_out) {
    // vertices: 0=v, 1=w, 2=u, 3=a, 4=b, then leaves
    std::vector<Edge> e = {{0, 1}, {0, 3}, {0, 4}, {1, 2}};
    int next = 5;
    // w needs degree 4: edges to v,u + 2 leaves
    e.push_back({1, next++});
    e.push_back({1, next++});
    // u needs degree 3: edge to w + 2 leaves
    e.push_back({2, next++});
    e.push_back({2, next++});
    // a, b need degree 4: edge to v + 3 leaves each
    for (int rep = 0; rep < 3; ++rep) e.push_back({3, next++});
    for (int rep = 0; rep < 3; ++rep) e.push_back({4, next++});
    v_out = 0;
    return build_graph(next, e);
}

} // namespace

TEST_CASE("surround schedule: class v3 burns exactly three") {
    int v;
    Graph g = v3_gadget(v);
    auto rep = classify(g, 2);
    REQUIRE(rep.cls[static_cast<std::size_t>(v)] == VertexClass::v3);
    auto sched = surround_schedule(g, v, 2, VertexClass::v3);
    PlayOutcome out = replay(g, v, 2, sched);
    CHECK(out.burned == 3);
}

TEST_CASE("surround schedule rejects wrong classes") {
    Graph g = star_graph(2);
    CHECK_THROWS_AS(surround_schedule(g, 0, 2, VertexClass::v2), std::invalid_argument);
    CHECK_THROWS_AS(surround_schedule(g, 0, 2, VertexClass::v3), std::invalid_argument);
    CHECK_THROWS_AS(surround_schedule(g, 0, 2, VertexClass::none), std::invalid_argument);
}

TEST_CASE("exact_sn: pinned values") {
    CHECK(exact_sn(path_graph(5), 2, 1).sn == 3); // interior of P_5 saves n-2
    CHECK(exact_sn(complete_graph(5), 0, 1).sn == 1);
    // K_{2,6}, ignition at a degree-2 leaf
    Graph k26 = complete_bipartite(2, 6);
    SolveResult r = exact_sn(k26, 2, 1);
    CHECK(r.sn == 2);
    CHECK(r.sn == brute_sn(k26, 2, 1));
    CHECK(r.exact);
    // witness replays to its own value
    CHECK(replay(k26, 2, 1, r.schedule).saved == r.sn);
}

TEST_CASE("brute_sn: pinned values") {
    CHECK(brute_sn(complete_graph(2), 0, 1) == 1);
    Graph empty4 = build_graph(4, {});
    CHECK(brute_sn(empty4, 0, 1) == 3);
    CHECK(brute_sn(cycle_graph(4), 0, 1) == 2);
    CHECK_THROWS_AS(brute_sn(path_graph(11), 0, 1), std::invalid_argument);
}

TEST_CASE("exact_sn equals brute_sn over a random corpus") {
    Rng rng(2024);
    int graphs = 0;
    while (graphs < 60) {
        int n = 2 + rng.below_int(7); // up to 8
        long long cap = static_cast<long long>(n) * (n - 1) / 2;
        Graph g = gnm_random_graph(n, rng.below(static_cast<std::uint64_t>(cap) + 1), rng);
        ++graphs;
        for (int v = 0; v < n; ++v)
            for (int k = 1; k <= 3; ++k) {
                SolveResult res = exact_sn(g, v, k);
                REQUIRE(res.exact);
                REQUIRE(res.sn == brute_sn(g, v, k));
                REQUIRE(replay(g, v, k, res.schedule).saved == res.sn);
            }
    }
}

TEST_CASE("exact_sn equals brute_sn on structured graphs") {
    Rng rng(66);
    std::vector<Graph> zoo;
    zoo.push_back(path_graph(8));
    zoo.push_back(cycle_graph(8));
    zoo.push_back(star_graph(7));
    zoo.push_back(complete_graph(6));
    zoo.push_back(complete_bipartite(2, 6));
    zoo.push_back(complete_bipartite(4, 4));
    zoo.push_back(sample_simple_graph(PairingConfig{1, 3, 6, 100000}, rng)); // 8 vertices
    for (const Graph& g : zoo)
        for (int v = 0; v < g.n(); ++v)
            for (int k = 1; k <= 3; ++k)
                REQUIRE(exact_sn(g, v, k).sn == brute_sn(g, v, k));
}

TEST_CASE("exact_sn monotone in k; strategies never beat it") {
    Rng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + rng.below_int(7);
        long long cap = static_cast<long long>(n) * (n - 1) / 2;
        Graph g = gnm_random_graph(n, rng.below(static_cast<std::uint64_t>(cap) + 1), rng);
        int v = rng.below_int(n);
        int prev = -1;
        for (int k = 1; k <= 3; ++k) {
            int sn = exact_sn(g, v, k).sn;
            CHECK(sn >= prev);
            prev = sn;
            CHECK(play(g, v, k, greedy_strategy()).saved <= sn);
            CHECK(play(g, v, k, testsupport::random_legal_strategy(trial)).saved <= sn);
        }
    }
}

TEST_CASE("memoization never changes the answer") {
    Rng rng(555);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + rng.below_int(6);
        long long cap = static_cast<long long>(n) * (n - 1) / 2;
        Graph g = gnm_random_graph(n, rng.below(static_cast<std::uint64_t>(cap) + 1), rng);
        int v = rng.below_int(n);
        SolveOptions with{.node_budget = 100000000, .use_memo = true};
        SolveOptions without{.node_budget = 100000000, .use_memo = false};
        CHECK(exact_sn(g, v, 2, with).sn == exact_sn(g, v, 2, without).sn);
    }
}

TEST_CASE("budget exhaustion yields a replayable lower bound") {
    Graph g = complete_bipartite(4, 9); // 13 vertices, heavy branching
    SolveResult full = exact_sn(g, 0, 2);
    REQUIRE(full.exact);
    SolveResult tight = exact_sn(g, 0, 2, SolveOptions{.node_budget = 50, .use_memo = true});
    CHECK_FALSE(tight.exact);
    CHECK(tight.sn <= full.sn);
    CHECK(replay(g, 0, 2, tight.schedule).saved == tight.sn);
}

TEST_CASE("surround strategy matches classes on random sparse graphs") {
    Rng rng(808);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + trial % 2;
        int n = 5 + rng.below_int(16);
        auto sample = testsupport::random_sparse_graph(k, n, rng);
        ClassificationReport rep = classify(sample.graph, k);
        for (int v = 0; v < n; ++v) {
            VertexClass c = rep.cls[static_cast<std::size_t>(v)];
            if (c == VertexClass::none) continue;
            auto sched = surround_schedule(sample.graph, v, k, c);
            PlayOutcome out = replay(sample.graph, v, k, sched);
            int expect = c == VertexClass::v1 ? 1 : c == VertexClass::v2 ? 2 : 3;
            REQUIRE(out.burned == expect);
            ++checked;
        }
    }
    CHECK(checked > 100);
}
