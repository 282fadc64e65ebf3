#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "cmenger/errors.hpp"

namespace cmenger {

using VertexSet = std::vector<int>;  ///< sorted, duplicate-free vertex ids
using Path = std::vector<int>;       ///< vertex sequence; a single vertex is a length-0 path
using Mask = std::vector<char>;      ///< per-vertex membership flags
using Edge = std::pair<int, int>;

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/**
 * Finite simple undirected graph on vertices 0..n-1.
 * Immutable once built; neighbor lists are kept sorted.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws input_error on loops, duplicate edges or ids out of range.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return m_; }
    bool valid(int v) const noexcept { return v >= 0 && v < vertex_count(); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    /// All edges as (u,v) with u<v, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::size_t m_ = 0;
};

VertexSet normalize(VertexSet s);
void check_vertices(const Graph& g, const VertexSet& s);
Mask make_mask(int n, const VertexSet& s);
VertexSet mask_to_set(const Mask& m);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const Graph& g);

/// Multi-source BFS. Sources outside `allowed` are ignored; unreached vertices get kInfinity.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const Mask* allowed = nullptr, int limit = kInfinity);

/// Length of a shortest X-Y path; kInfinity if either set is empty or no path exists.
int dist(const Graph& g, const VertexSet& x, const VertexSet& y);
/// Same, inside the subgraph induced by `allowed`.
int dist_within(const Graph& g, const Mask& allowed, const VertexSet& x, const VertexSet& y);

VertexSet ball(const Graph& g, const VertexSet& x, int r);
VertexSet ball_within(const Graph& g, const Mask& allowed, const VertexSet& x, int r);

/// Components of G[z], each sorted, listed by minimum vertex.
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& z);
/// Component label per vertex of G[allowed]; -1 outside. Labels follow minimum vertex order.
std::vector<int> component_labels(const Graph& g, const Mask& allowed);
bool is_connected_set(const Graph& g, const VertexSet& z);

/// Shortest X-Y path inside `allowed` (whole graph if null). Among shortest paths,
/// the lexicographically least vertex sequence is returned.
std::optional<Path> shortest_path(const Graph& g, const VertexSet& x, const VertexSet& y,
                                  const Mask* allowed = nullptr);

/// Contiguous piece of p from u to v, oriented u -> v.
Path subpath(const Path& p, int u, int v);
int path_length(const Path& p);
Path reversed(Path p);
/// Distinct vertices, consecutive ones adjacent in g, nonempty.
bool is_path(const Graph& g, const Path& p);
/// Position of v on p, or -1.
int index_on(const Path& p, int v);

/// G[keep] with vertices renumbered in increasing order; new_to_old receives the mapping.
Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<int>* new_to_old = nullptr);

}  // namespace cmenger
