#include "fireline/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fireline {

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges,
                  std::optional<std::vector<Side>> side) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (side && static_cast<int>(side->size()) != n)
        throw std::invalid_argument("side label count does not match vertex count");

    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range");
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (side && (*side)[static_cast<std::size_t>(u)] == (*side)[static_cast<std::size_t>(v)])
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") joins two vertices of the same side");
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[static_cast<std::size_t>(v)];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    g.side_ = std::move(side);
    g.m_ = static_cast<long long>(edges.size());
    return g;
}

bool validate_biregular(const Graph& g, int d) {
    if (!g.has_sides()) throw std::invalid_argument("validate_biregular needs side labels");
    for (int v = 0; v < g.n(); ++v) {
        int want = g.side(v) == Side::X ? d : d + 2;
        if (g.degree(v) != want) return false;
    }
    return true;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::invalid_argument("edge list parse error at line " + std::to_string(line) + ": " +
                                what);
}

// Strict: the whole token must be a decimal integer.
long long parse_int(const std::string& tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        parse_fail(line, "bad integer '" + tok + "'");
    return value;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) parse_fail(1, "missing header");
    ++lineno;
    long long n = 0, m = 0;
    {
        std::istringstream ss(line);
        std::string t1, t2, extra;
        if (!(ss >> t1 >> t2) || (ss >> extra)) parse_fail(lineno, "header must be 'n m'");
        n = parse_int(t1, lineno);
        m = parse_int(t2, lineno);
        if (n < 0 || m < 0) parse_fail(lineno, "negative n or m");
        if (n > 100'000'000) parse_fail(lineno, "vertex count too large");
    }

    std::optional<std::vector<Side>> side;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));

    bool decided_sides = false;
    std::vector<char> side_seen;
    long long side_lines = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok1, tok2, extra;
        if (!(ss >> tok1 >> tok2)) parse_fail(lineno, "expected two tokens");
        if (ss >> extra) parse_fail(lineno, "trailing tokens");

        bool is_side_line = tok2 == "X" || tok2 == "Y";
        if (!decided_sides) {
            decided_sides = true;
            if (is_side_line) {
                side.emplace(static_cast<std::size_t>(n), Side::X);
                side_seen.assign(static_cast<std::size_t>(n), 0);
            }
        }

        if (is_side_line) {
            if (!side) parse_fail(lineno, "side label after edge lines");
            if (side_lines == n) parse_fail(lineno, "more side lines than vertices");
            long long v = parse_int(tok1, lineno);
            if (v < 0 || v >= n) parse_fail(lineno, "vertex id out of range");
            if (side_seen[static_cast<std::size_t>(v)]) parse_fail(lineno, "duplicate side label");
            side_seen[static_cast<std::size_t>(v)] = 1;
            (*side)[static_cast<std::size_t>(v)] = tok2 == "X" ? Side::X : Side::Y;
            ++side_lines;
            continue;
        }

        if (side && side_lines != n) parse_fail(lineno, "side block is incomplete");
        long long u = parse_int(tok1, lineno);
        long long v = parse_int(tok2, lineno);
        if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(lineno, "edge endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (static_cast<long long>(edges.size()) != m)
        throw std::invalid_argument("edge list declares " + std::to_string(m) + " edges but has " +
                                    std::to_string(edges.size()));
    if (side && side_lines != n)
        throw std::invalid_argument("side block is incomplete: " + std::to_string(side_lines) +
                                    " of " + std::to_string(n) + " labels");
    return build_graph(static_cast<int>(n), edges, std::move(side));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << " " << g.edge_count() << "\n";
    if (g.has_sides())
        for (int v = 0; v < g.n(); ++v)
            out << v << " " << (g.side(v) == Side::X ? 'X' : 'Y') << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_edge_list(g, out);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return build_graph(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    std::vector<Side> side(static_cast<std::size_t>(a + b), Side::X);
    for (int j = 0; j < b; ++j) side[static_cast<std::size_t>(a + j)] = Side::Y;
    return build_graph(a + b, e, side);
}

Graph biregular_tree(int d, int levels, Side root_side) {
    if (d < 2 || levels < 0) throw std::invalid_argument("biregular_tree needs d >= 2, levels >= 0");
    std::vector<Edge> e;
    std::vector<Side> side;
    auto deg_of = [&](Side s) { return s == Side::X ? d : d + 2; };
    auto other = [](Side s) { return s == Side::X ? Side::Y : Side::X; };

    side.push_back(root_side);
    std::vector<int> frontier = {0};
    for (int lvl = 1; lvl <= levels; ++lvl) {
        std::vector<int> next;
        for (int u : frontier) {
            int children = deg_of(side[static_cast<std::size_t>(u)]) - (u == 0 ? 0 : 1);
            for (int c = 0; c < children; ++c) {
                int id = static_cast<int>(side.size());
                side.push_back(other(side[static_cast<std::size_t>(u)]));
                e.emplace_back(u, id);
                next.push_back(id);
            }
        }
        frontier = std::move(next);
    }
    return build_graph(static_cast<int>(side.size()), e, side);
}

Graph gnm_random_graph(int n, long long m, Rng& rng) {
    const long long cap = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > cap) throw std::invalid_argument("gnm: m out of range");
    // Sample m distinct pairs by rejection; fine at the densities we use.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<char> used;
    if (n > 0) used.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    while (static_cast<long long>(edges.size()) < m) {
        int u = rng.below_int(n);
        int v = rng.below_int(n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        auto idx = static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v);
        if (used[idx]) continue;
        used[idx] = 1;
        edges.emplace_back(u, v);
    }
    return build_graph(n, edges);
}

} // namespace fireline
