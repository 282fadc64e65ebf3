#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "cmenger/graph.hpp"
#include "cmenger/testbed.hpp"

namespace cmenger::testing {

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph grid_graph(int rows, int cols) { return gen_family(FamilyKind::grid, {rows, cols}, 0).graph; }

/// Erdos-Renyi style graph with edge probability num/den.
inline Graph random_graph(Lcg& rng, int n, int num, int den) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(num, den)) e.emplace_back(i, j);
    return Graph(n, e);
}

inline VertexSet random_subset(Lcg& rng, int n, int max_size) {
    VertexSet s;
    int size = 1 + rng.below(max_size);
    for (int i = 0; i < size; ++i) s.push_back(rng.below(n));
    return normalize(s);
}

/// k paths of lengths in [1, max_len] on consecutive ids, then free sources, free sinks and one spare vertex.
inline Setting random_setting(Lcg& rng, int k, int max_len, int free_s, int free_t) {
    std::vector<Path> paths;
    VertexSet s, t;
    int next = 0;
    for (int h = 0; h < k; ++h) {
        int len = 1 + rng.below(max_len);
        Path p;
        for (int i = 0; i <= len; ++i) p.push_back(next++);
        s.push_back(p.front());
        t.push_back(p.back());
        paths.push_back(p);
    }
    for (int i = 0; i < free_s; ++i) s.push_back(next++);
    for (int i = 0; i < free_t; ++i) t.push_back(next++);
    ++next;
    return Setting(next, s, t, paths);
}

/// Vertices that may appear in pairs: the path vertices plus the terminals.
inline VertexSet admissible_vertices(const Setting& st) {
    VertexSet out;
    for (int v = 0; v < st.vertex_count(); ++v)
        if (st.on_paths(v) || st.in_s(v) || st.in_t(v)) out.push_back(v);
    return out;
}

inline JumpSet random_pairs(Lcg& rng, const Setting& st, int count) {
    VertexSet adm = admissible_vertices(st);
    JumpSet f;
    for (int i = 0; i < count; ++i) {
        int a = adm[rng.below(static_cast<int>(adm.size()))];
        int b = adm[rng.below(static_cast<int>(adm.size()))];
        if (a != b) f.emplace_back(a, b);
    }
    return normalize_pairs(f);
}

/// A random c-augmenting sequence as a pair list, or empty when the random walk gets stuck.
inline std::vector<Pair> random_sequence(Lcg& rng, const Setting& st, int c, int max_pairs) {
    VertexSet free_s, free_t;
    for (int v = 0; v < st.vertex_count(); ++v) {
        if (st.free_source(v)) free_s.push_back(v);
        if (st.free_sink(v)) free_t.push_back(v);
    }
    if (free_s.empty() || free_t.empty()) return {};
    std::vector<Pair> out;
    int a = free_s[rng.below(static_cast<int>(free_s.size()))];
    for (int step = 0; step < max_pairs; ++step) {
        bool finish = step + 1 == max_pairs || st.k() == 0 || rng.chance(1, 3);
        int b;
        if (finish) {
            b = free_t[rng.below(static_cast<int>(free_t.size()))];
        } else {
            int h = rng.below(st.k());
            if (st.length(h) < c + 1) return {};
            b = st.path(h)[c + 1 + rng.below(st.length(h) - c)];
        }
        if (b == a) return {};
        out.emplace_back(a, b);
        if (finish) return out;
        int h = st.path_of(b);
        a = st.path(h)[rng.below(st.pos(b) - c)];
    }
    return {};
}

// Any bite at all, by plain DFS over candidate paths.
inline bool brute_has_bite(const Graph& g, const VertexSet& y, int l, int d) {
    const int n = g.vertex_count();
    Mask in_y = make_mask(n, y);
    const int bound = 2 * (d - 2) * (l - 1);
    Mask on(n, 0);
    bool found = false;
    std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
        if (found) return;
        for (int w : g.neighbors(v)) {
            if (on[w]) continue;
            if (in_y[w]) {
                if (w != start && len + 1 >= 2) {
                    int dd = dist_within(g, in_y, {start}, {w});
                    if (dd == kInfinity || dd > bound) found = true;
                }
                continue;
            }
            if (len + 1 >= l) continue;
            on[w] = 1;
            dfs(start, w, len + 1);
            on[w] = 0;
        }
    };
    for (int u : y) {
        on[u] = 1;
        dfs(u, u, 0);
        on[u] = 0;
        if (found) return true;
    }
    return false;
}

/// Smallest vertex set meeting every S-T path, by subsets in increasing size.
inline int brute_min_cut(const Graph& g, const VertexSet& s, const VertexSet& t) {
    const int n = g.vertex_count();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        Mask keep(n);
        for (int v = 0; v < n; ++v) keep[v] = !(mask >> v & 1);
        VertexSet s2, t2;
        for (int v : s)
            if (keep[v]) s2.push_back(v);
        for (int v : t)
            if (keep[v]) t2.push_back(v);
        if (dist_within(g, keep, s2, t2) == kInfinity) best = size;
    }
    return best;
}

/// Floyd-Warshall all-pairs distances; kInfinity when unreachable.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = kInfinity / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int w : g.neighbors(v)) d[v][w] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf) x = kInfinity;
    return d;
}

}  // namespace cmenger::testing
