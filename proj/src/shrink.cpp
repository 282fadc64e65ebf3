#include "cmenger/shrink.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace cmenger {

namespace {

constexpr std::int64_t kBig = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) return a * b;
    if (a > kBig / b) return kBig;
    return a * b;
}

void check_params(std::int64_t l, int d) {
    if (l < 2) throw input_error("l must be at least 2");
    if (d < 2) throw input_error("d must be at least 2");
}

// Distances capped into int range for comparison against 64-bit bounds.
bool exceeds(int dist_value, std::int64_t bound) {
    return dist_value == kInfinity || static_cast<std::int64_t>(dist_value) > bound;
}

// Heap index of node j of a subtree hung below child slot `side` (1 or 2) of the root.
int lift_index(int j, int side) {
    int t = 0;
    while ((1 << (t + 1)) - 1 <= j) ++t;
    int p = j - ((1 << t) - 1);
    return (1 << (t + 1)) - 1 + (side - 1) * (1 << t) + p;
}

// Rebuilds H_m rooted at v from the introducing path of each non-seed vertex.
// intro[v] indexes `paths`; each path's ends are older than its interior.
SubdivisionWitness replay_tree(int v, int m, const std::vector<int>& intro, const std::vector<Path>& paths) {
    if (intro[v] < 0) throw invariant_error("tree replay reached a seed vertex");
    const Path& p = paths[intro[v]];
    int u1 = p.front(), u2 = p.back();
    SubdivisionWitness w;
    w.d = m;
    int size = binary_tree_size(m);
    w.branch_map.assign(size, -1);
    w.edge_paths.assign(size - 1, {});
    w.branch_map[0] = v;
    w.edge_paths[0] = subpath(p, v, u1);
    w.edge_paths[1] = subpath(p, v, u2);
    if (m == 2) {
        w.branch_map[1] = u1;
        w.branch_map[2] = u2;
        return w;
    }
    for (int side = 1; side <= 2; ++side) {
        auto sub = replay_tree(side == 1 ? u1 : u2, m - 1, intro, paths);
        for (std::size_t j = 0; j < sub.branch_map.size(); ++j) {
            int to = lift_index(static_cast<int>(j), side);
            w.branch_map[to] = sub.branch_map[j];
            if (j > 0) w.edge_paths[to - 1] = std::move(sub.edge_paths[j - 1]);
        }
    }
    return w;
}

}  // namespace

std::optional<Path> find_bite(const Graph& g, const VertexSet& y_in, std::int64_t l, int d) {
    check_params(l, d);
    check_vertices(g, y_in);
    VertexSet y = normalize(y_in);
    const int n = g.vertex_count();
    Mask in_y = make_mask(n, y);
    Mask out_y(n);
    for (int v = 0; v < n; ++v) out_y[v] = !in_y[v];
    const std::int64_t bound = sat_mul(2 * (d - 2), l - 1);
    const int cap = l >= kInfinity ? kInfinity : static_cast<int>(l);

    for (int u : y) {
        auto dy = bfs_distances(g, {u}, &in_y);
        // Outside distances from u: first step leaves y.
        VertexSet first;
        for (int w : g.neighbors(u))
            if (out_y[w]) first.push_back(w);
        if (first.empty()) continue;
        auto dout = bfs_distances(g, first, &out_y);
        for (int v : y) {
            if (v <= u || !exceeds(dy[v], bound)) continue;
            int best = kInfinity;
            for (int w : g.neighbors(v))
                if (out_y[w] && dout[w] != kInfinity) best = std::min(best, dout[w] + 2);
            if (best == kInfinity || best > cap) continue;
            // Lexicographically least shortest u..v path through the outside.
            auto dv = bfs_distances(g, [&] {
                VertexSet s;
                for (int w : g.neighbors(v))
                    if (out_y[w]) s.push_back(w);
                return s;
            }(), &out_y);
            Path p{u};
            int cur = -1;
            for (int w : first)
                if (dv[w] != kInfinity && dv[w] + 2 == best && (cur == -1 || w < cur)) cur = w;
            p.push_back(cur);
            while (dv[cur] > 0) {
                for (int w : g.neighbors(cur))
                    if (out_y[w] && dv[w] == dv[cur] - 1) {
                        cur = w;
                        break;
                    }
                p.push_back(cur);
            }
            p.push_back(v);
            return p;
        }
    }
    return std::nullopt;
}

BiteClosure bite_closure(const Graph& g, const VertexSet& z, std::int64_t l, int d) {
    check_params(l, d);
    check_vertices(g, z);
    BiteClosure out{normalize(z), {}};
    while (auto bite = find_bite(g, out.y, l, d)) {
        VertexSet inner(bite->begin() + 1, bite->end() - 1);
        out.y = set_union(out.y, normalize(inner));
        out.history.push_back(std::move(*bite));
    }
    return out;
}

ClosureOutcome close_bites(const Graph& g, const VertexSet& z, std::int64_t l, int d) {
    BiteClosure cl = bite_closure(g, z, l, d);
    const std::int64_t reach = sat_mul(d - 2, l - 1);
    auto dz = bfs_distances(g, normalize(z));
    int far = -1;
    for (int v : cl.y)
        if (exceeds(dz[v], reach) && (far == -1 || dz[v] > dz[far])) far = v;
    if (far == -1) return cl;

    std::vector<int> intro(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < cl.history.size(); ++i)
        for (std::size_t j = 1; j + 1 < cl.history[i].size(); ++j) intro[cl.history[i][j]] = static_cast<int>(i);
    SubdivisionWitness w = replay_tree(far, d, intro, cl.history);
    if (auto v = validate_subdivision(g, w, d, l - 1); !v)
        throw invariant_error("bite replay produced an invalid witness: " + v.reason);
    return w;
}

CarveOutcome carve(const Graph& g, const VertexSet& a_in, std::int64_t l, int d) {
    check_params(l, d);
    check_vertices(g, a_in);
    VertexSet a = normalize(a_in);
    if (d == 2) return a;
    auto outcome = close_bites(g, set_difference(all_vertices(g), a), l, d);
    if (auto* w = std::get_if<SubdivisionWitness>(&outcome)) return std::move(*w);
    VertexSet b = set_difference(all_vertices(g), std::get<BiteClosure>(outcome).y);
    if (auto v = carve_bullet_distance(g, b, l, d); !v) throw invariant_error("carve: " + v.reason);
    return b;
}

Verdict carve_bullet_near(const Graph& g, const VertexSet& a, const VertexSet& b, std::int64_t l, int d) {
    VertexSet outside = set_difference(all_vertices(g), normalize(a));
    auto dd = bfs_distances(g, outside);
    const std::int64_t reach = sat_mul(d - 2, l - 1);
    for (int v : set_difference(normalize(a), normalize(b)))
        if (exceeds(dd[v], reach)) return Verdict::fail("vertex " + std::to_string(v) + " of a\\b too far from V\\a");
    return Verdict::pass();
}

Verdict carve_bullet_detour(const Graph& g, const VertexSet& b_in, std::int64_t l, int d) {
    const int n = g.vertex_count();
    VertexSet b = normalize(b_in);
    Mask in_b = make_mask(n, b);
    Mask out_b(n);
    for (int v = 0; v < n; ++v) out_b[v] = !in_b[v];
    const std::int64_t bound = sat_mul(2 * (d - 2), l - 1);
    for (int u = 0; u < n; ++u) {
        if (in_b[u]) continue;
        VertexSet first;
        for (int w : g.neighbors(u))
            if (in_b[w]) first.push_back(w);
        if (first.empty()) continue;
        auto din = bfs_distances(g, first, &in_b);
        auto dout = bfs_distances(g, {u}, &out_b);
        for (int v = u + 1; v < n; ++v) {
            if (in_b[v] || g.adjacent(u, v) || !exceeds(dout[v], bound)) continue;
            for (int w : g.neighbors(v))
                if (in_b[w] && din[w] != kInfinity && static_cast<std::int64_t>(din[w]) + 2 <= l)
                    return Verdict::fail("short detour through b between " + std::to_string(u) + " and " +
                                         std::to_string(v));
        }
    }
    return Verdict::pass();
}

Verdict carve_bullet_distance(const Graph& g, const VertexSet& b_in, std::int64_t l, int d) {
    const int n = g.vertex_count();
    Mask out_b = make_mask(n, normalize(b_in));
    for (auto& x : out_b) x = !x;
    const std::int64_t bound = sat_mul(sat_mul(d - 2, l), l - 1);
    const int cap = l >= kInfinity ? kInfinity : static_cast<int>(l);
    for (int u = 0; u < n; ++u) {
        if (!out_b[u]) continue;
        auto dg = bfs_distances(g, {u}, nullptr, cap);
        auto dr = bfs_distances(g, {u}, &out_b);
        for (int v = u + 1; v < n; ++v)
            if (out_b[v] && dg[v] <= cap && exceeds(dr[v], bound))
                return Verdict::fail("pair " + std::to_string(u) + "," + std::to_string(v) +
                                     " stretched beyond (d-2)l(l-1) outside b");
    }
    return Verdict::pass();
}

WebGrowthReport check_web_growth(const Graph& g, const VertexSet& z_in, const std::vector<Path>& m_seq,
                                 std::int64_t l, int d) {
    check_params(l, d);
    check_vertices(g, z_in);
    const int n = g.vertex_count();
    VertexSet z = normalize(z_in);
    Mask in_z = make_mask(n, z);
    Mask cur = in_z;

    WebGrowthReport rep;
    rep.height.assign(n, -1);
    for (int v : z) rep.height[v] = 0;
    std::vector<int> intro(n, -1);
    std::vector<int> added_order;

    for (std::size_t i = 0; i < m_seq.size(); ++i) {
        const Path& p = m_seq[i];
        if (!is_path(g, p)) throw discipline_error(i, "not a path of the graph");
        if (p.size() < 2) throw discipline_error(i, "length zero");
        if (static_cast<std::int64_t>(p.size()) - 1 > l) throw discipline_error(i, "longer than l");
        int u1 = p.front(), u2 = p.back();
        if (!cur[u1] || !cur[u2]) throw discipline_error(i, "an end lies outside the current set");
        for (std::size_t j = 1; j + 1 < p.size(); ++j)
            if (cur[p[j]]) throw discipline_error(i, "interior meets the current set");
        auto lab = component_labels(g, cur);
        if (lab[u1] == lab[u2]) throw discipline_error(i, "ends in the same component");
        int h = 1 + std::min(rep.height[u1], rep.height[u2]);
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
            cur[p[j]] = 1;
            rep.height[p[j]] = h;
            intro[p[j]] = static_cast<int>(i);
            added_order.push_back(p[j]);
        }
    }

    auto zlab = component_labels(g, in_z);
    const std::int64_t reach = sat_mul(d, l - 1);
    const int cap = reach >= kInfinity ? kInfinity : static_cast<int>(reach);
    // Grown set after each step, rebuilt incrementally.
    Mask grown = in_z;
    std::size_t next = 0;
    for (std::size_t i = 0; i < m_seq.size(); ++i) {
        const Path& p = m_seq[i];
        for (std::size_t j = 1; j + 1 < p.size(); ++j) grown[p[j]] = 1;
        for (; next < added_order.size() && intro[added_order[next]] == static_cast<int>(i); ++next) {
            int v = added_order[next];
            WebGrowthReport::Reason why;
            if (in_z[p.front()] && in_z[p.back()]) {
                why = WebGrowthReport::Reason::Bridge;
            } else {
                auto dv = bfs_distances(g, {v}, &grown, cap);
                VertexSet comps;
                for (int x : z)
                    if (dv[x] <= cap) comps.push_back(zlab[x]);
                why = normalize(comps).size() >= 3 ? WebGrowthReport::Reason::ThreeComponents
                                                   : WebGrowthReport::Reason::Unsupported;
            }
            if (why == WebGrowthReport::Reason::Unsupported) rep.valid = false;
            rep.added.push_back(v);
            rep.reason.push_back(why);
        }
    }

    int top = -1;
    for (int v = 0; v < n; ++v)
        if (rep.height[v] > rep.max_height) {
            rep.max_height = rep.height[v];
            top = v;
        }
    if (rep.max_height >= d - 1 && top >= 0) {
        int m = rep.max_height + 1;
        std::vector<Path> paths(m_seq.begin(), m_seq.end());
        auto w = truncate_witness(replay_tree(top, m, intro, paths), d);
        if (auto v = validate_subdivision(g, w, d, l); !v)
            throw invariant_error("growth replay produced an invalid witness: " + v.reason);
        rep.witness = std::move(w);
    }
    return rep;
}

}  // namespace cmenger
