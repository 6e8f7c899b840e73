#pragma once

// Immutable simple undirected graph with optional bipartition labels.
// Every module reads this; nothing mutates it after construction, so
// sharing across worker threads needs no synchronization.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fireline/rng.hpp"

namespace fireline {

enum class Side : std::uint8_t { X, Y };

using Edge = std::pair<int, int>;

class Graph {
public:
    int n() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_sides() const { return side_.has_value(); }
    Side side(int v) const { return (*side_)[static_cast<std::size_t>(v)]; }
    const std::vector<Side>& sides() const { return *side_; }

    bool adjacent(int u, int v) const;

    std::vector<Edge> edges() const;

    friend Graph build_graph(int n, const std::vector<Edge>& edges,
                             std::optional<std::vector<Side>> side);

private:
    std::vector<std::vector<int>> adj_; // sorted ascending
    std::optional<std::vector<Side>> side_;
    long long m_ = 0;
};

// Validates simplicity, symmetry and (when labels are given) that every edge
// joins X to Y. Throws std::invalid_argument naming the offending edge.
Graph build_graph(int n, const std::vector<Edge>& edges,
                  std::optional<std::vector<Side>> side = std::nullopt);

// True iff every X-vertex has degree d and every Y-vertex degree d+2.
// Requires side labels.
bool validate_biregular(const Graph& g, int d);

// --- edge-list text format ----------------------------------------------
// line 1:          "n m"
// optional block:  n lines "v X" / "v Y"  (side labels, one per vertex)
// then:            m lines "u v"
// Malformed input is rejected with the 1-based line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// --- stock constructions (used by tests, experiments and the CLI) --------
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);              // K_{1,leaves}
Graph complete_bipartite(int a, int b);
// Balanced bipartite tree: root has full degree for its side, every other
// vertex keeps its side's degree (X: d, Y: d+2) until the last level.
Graph biregular_tree(int d, int levels, Side root_side = Side::X);
// Uniform random simple graph with exactly m edges.
Graph gnm_random_graph(int n, long long m, Rng& rng);

} // namespace fireline
