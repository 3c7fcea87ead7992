#include "graphfair/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "graphfair/errors.hpp"

namespace graphfair {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw BadSize("graph needs a nonnegative vertex count");
    std::set<std::pair<int, int>> dedup;
    for (auto [a, b] : edges) {
        if (a == b) throw BadSize("self loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw BadSize("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        }
        dedup.emplace(std::min(a, b), std::max(a, b));
    }
    edges_.assign(dedup.begin(), dedup.end());
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [a, b] : edges_) {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int a, int b) const {
    if (a == b) return false;
    const auto& nb = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// Branch on an uncovered edge: one endpoint must join the cover.
void cover_search(const Graph& g, std::vector<bool>& in_cover, std::size_t edge_idx, int size,
                  std::vector<int>& best, int& best_size) {
    if (size >= best_size) return;
    const auto& edges = g.edges();
    while (edge_idx < edges.size()) {
        auto [a, b] = edges[edge_idx];
        if (in_cover[static_cast<std::size_t>(a)] || in_cover[static_cast<std::size_t>(b)]) {
            ++edge_idx;
            continue;
        }
        for (int v : {a, b}) {
            in_cover[static_cast<std::size_t>(v)] = true;
            cover_search(g, in_cover, edge_idx + 1, size + 1, best, best_size);
            in_cover[static_cast<std::size_t>(v)] = false;
        }
        return;
    }
    // Every edge covered.
    best.clear();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_cover[static_cast<std::size_t>(v)]) best.push_back(v);
    }
    best_size = size;
}

}  // namespace

std::vector<int> min_vertex_cover_exact(const Graph& g, int max_n) {
    if (g.vertex_count() > max_n) {
        throw TooLarge("exact cover search limited to " + std::to_string(max_n) + " vertices, got " +
                       std::to_string(g.vertex_count()));
    }
    std::vector<bool> in_cover(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> best;
    int best_size = g.vertex_count() + 1;
    cover_search(g, in_cover, 0, 0, best, best_size);
    return best;
}

std::vector<int> vertex_cover_2approx(const Graph& g) {
    std::vector<bool> matched(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> cover;
    for (auto [a, b] : g.edges()) {
        if (matched[static_cast<std::size_t>(a)] || matched[static_cast<std::size_t>(b)]) continue;
        matched[static_cast<std::size_t>(a)] = matched[static_cast<std::size_t>(b)] = true;
        cover.push_back(a);
        cover.push_back(b);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& subset, const std::vector<int>& cover) {
    std::vector<bool> in_subset(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<bool> in_cover(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : subset) in_subset[static_cast<std::size_t>(v)] = true;
    for (int v : cover) in_cover[static_cast<std::size_t>(v)] = true;
    for (auto [a, b] : g.edges()) {
        if (in_subset[static_cast<std::size_t>(a)] && in_subset[static_cast<std::size_t>(b)] &&
            !in_cover[static_cast<std::size_t>(a)] && !in_cover[static_cast<std::size_t>(b)]) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> all_pairs_distance(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = n + 1;  // hop distances are < n, so this is a safe infinity
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (auto [a, b] : g.edges()) {
        d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        d[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int via = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                                d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (via < d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = via;
                }
            }
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x >= inf) x = kUnreachable;
        }
    }
    return d;
}

int diameter(const Graph& g) {
    int best = 0;
    for (const auto& row : all_pairs_distance(g)) {
        for (int x : row) best = std::max(best, x);
    }
    return best;
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, std::move(edges));
}

Graph make_star_bridge_clique(int n) {
    if (n < 3) throw BadSize("star-bridge-clique family needs n >= 3");
    const int star_half = (n - 1 + 1) / 2;  // ceil((n-1)/2)
    const int bridge = star_half;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < star_half; ++v) edges.emplace_back(0, v);
    edges.emplace_back(0, bridge);
    if (bridge + 1 < n) edges.emplace_back(bridge, bridge + 1);
    for (int i = bridge + 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, std::move(edges));
}

}  // namespace graphfair
