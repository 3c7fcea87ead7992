#ifndef GRAPHFAIR_GRAPH_HPP
#define GRAPHFAIR_GRAPH_HPP

#include <utility>
#include <vector>

namespace graphfair {

// Simple undirected graph on vertices 0..n-1. Edges are stored sorted with
// lo < hi and deduplicated; construction rejects loops and out-of-range ids.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int a, int b) const;

    bool operator==(const Graph&) const = default;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Components are returned sorted internally and ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Exact minimum vertex cover by branch and bound on an uncovered edge.
// Throws TooLarge when the graph has more than max_n vertices.
std::vector<int> min_vertex_cover_exact(const Graph& g, int max_n = 20);

// Both endpoints of a greedily built maximal matching; at most twice optimal.
std::vector<int> vertex_cover_2approx(const Graph& g);

// Checks that cover hits every edge of the subgraph induced by the given
// vertex subset (every edge with both endpoints inside it).
bool is_vertex_cover(const Graph& g, const std::vector<int>& subset, const std::vector<int>& cover);

constexpr int kUnreachable = -1;

// Floyd-Warshall all-pairs hop distances; kUnreachable marks disconnected pairs.
std::vector<std::vector<int>> all_pairs_distance(const Graph& g);

// Largest finite entry of the distance matrix.
int diameter(const Graph& g);

Graph make_path(int n);
Graph make_star(int n);  // center is vertex 0
Graph make_complete(int n);

// Star with its center joined through a bridge vertex to a clique. For n
// vertices: center 0, star leaves 1..ceil((n-1)/2)-1, bridge ceil((n-1)/2),
// then a clique on the remaining floor((n-1)/2) vertices, attached to the
// bridge at its smallest vertex. Needs n >= 3.
Graph make_star_bridge_clique(int n);

}  // namespace graphfair

#endif  // GRAPHFAIR_GRAPH_HPP
