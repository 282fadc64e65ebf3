#include "cmenger/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cmenger {

Graph::Graph(int n) {
    if (n < 0) throw input_error("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), {});
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (!valid(u) || !valid(v))
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw input_error("self-loop at " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw input_error("duplicate edge");
    }
    m_ = edges.size();
}

bool Graph::adjacent(int u, int v) const {
    if (!valid(u) || !valid(v)) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet normalize(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

void check_vertices(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (!g.valid(v)) throw input_error("invalid vertex id " + std::to_string(v));
}

Mask make_mask(int n, const VertexSet& s) {
    Mask m(static_cast<std::size_t>(n), 0);
    for (int v : s) m[v] = 1;
    return m;
}

VertexSet mask_to_set(const Mask& m) {
    VertexSet out;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v]) out.push_back(static_cast<int>(v));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet all_vertices(const Graph& g) {
    VertexSet out(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
    return out;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const Mask* allowed, int limit) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), kInfinity);
    std::deque<int> q;
    for (int s : sources) {
        if (!g.valid(s)) throw input_error("invalid vertex id " + std::to_string(s));
        if (allowed && !(*allowed)[s]) continue;
        if (d[s] != 0) {
            d[s] = 0;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (d[u] >= limit) continue;
        for (int w : g.neighbors(u)) {
            if (d[w] != kInfinity || (allowed && !(*allowed)[w])) continue;
            d[w] = d[u] + 1;
            q.push_back(w);
        }
    }
    return d;
}

static int dist_impl(const Graph& g, const Mask* allowed, const VertexSet& x, const VertexSet& y) {
    check_vertices(g, x);
    check_vertices(g, y);
    if (x.empty() || y.empty()) return kInfinity;
    auto d = bfs_distances(g, x, allowed);
    int best = kInfinity;
    for (int v : y)
        if (!allowed || (*allowed)[v]) best = std::min(best, d[v]);
    return best;
}

int dist(const Graph& g, const VertexSet& x, const VertexSet& y) { return dist_impl(g, nullptr, x, y); }

int dist_within(const Graph& g, const Mask& allowed, const VertexSet& x, const VertexSet& y) {
    return dist_impl(g, &allowed, x, y);
}

static VertexSet ball_impl(const Graph& g, const Mask* allowed, const VertexSet& x, int r) {
    check_vertices(g, x);
    if (r < 0) throw input_error("negative radius");
    auto d = bfs_distances(g, x, allowed, r);
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (d[v] <= r) out.push_back(v);
    return out;
}

VertexSet ball(const Graph& g, const VertexSet& x, int r) { return ball_impl(g, nullptr, x, r); }

VertexSet ball_within(const Graph& g, const Mask& allowed, const VertexSet& x, int r) {
    return ball_impl(g, &allowed, x, r);
}

std::vector<int> component_labels(const Graph& g, const Mask& allowed) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!allowed[s] || label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (allowed[w] && label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& z) {
    check_vertices(g, z);
    auto label = component_labels(g, make_mask(g.vertex_count(), z));
    std::vector<VertexSet> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (label[v] < 0) continue;
        if (static_cast<std::size_t>(label[v]) >= out.size()) out.resize(label[v] + 1);
        out[label[v]].push_back(v);
    }
    return out;
}

bool is_connected_set(const Graph& g, const VertexSet& z) {
    return !z.empty() && induced_components(g, z).size() == 1;
}

std::optional<Path> shortest_path(const Graph& g, const VertexSet& x, const VertexSet& y, const Mask* allowed) {
    check_vertices(g, x);
    check_vertices(g, y);
    auto d = bfs_distances(g, y, allowed);
    int start = -1;
    for (int v : x) {
        if (allowed && !(*allowed)[v]) continue;
        if (d[v] == kInfinity) continue;
        if (start == -1 || d[v] < d[start] || (d[v] == d[start] && v < start)) start = v;
    }
    if (start == -1) return std::nullopt;
    Path p{start};
    int u = start;
    while (d[u] > 0) {
        for (int w : g.neighbors(u))
            if (d[w] == d[u] - 1 && (!allowed || (*allowed)[w])) {
                u = w;
                break;
            }
        p.push_back(u);
    }
    return p;
}

int index_on(const Path& p, int v) {
    auto it = std::find(p.begin(), p.end(), v);
    return it == p.end() ? -1 : static_cast<int>(it - p.begin());
}

Path subpath(const Path& p, int u, int v) {
    int i = index_on(p, u), j = index_on(p, v);
    if (i < 0 || j < 0) throw input_error("subpath endpoint not on path");
    Path out;
    if (i <= j) {
        out.assign(p.begin() + i, p.begin() + j + 1);
    } else {
        for (int t = i; t >= j; --t) out.push_back(p[t]);
    }
    return out;
}

int path_length(const Path& p) { return p.empty() ? -1 : static_cast<int>(p.size()) - 1; }

Path reversed(Path p) {
    std::reverse(p.begin(), p.end());
    return p;
}

bool is_path(const Graph& g, const Path& p) {
    if (p.empty()) return false;
    for (int v : p)
        if (!g.valid(v)) return false;
    if (normalize(p).size() != p.size()) return false;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (!g.adjacent(p[i - 1], p[i])) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<int>* new_to_old) {
    check_vertices(g, keep);
    VertexSet k = normalize(keep);
    std::vector<int> old_to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < k.size(); ++i) old_to_new[k[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0) edges.emplace_back(old_to_new[u], old_to_new[v]);
    if (new_to_old) *new_to_old = k;
    return Graph(static_cast<int>(k.size()), edges);
}

}  // namespace cmenger
