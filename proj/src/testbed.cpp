#include "cmenger/testbed.hpp"

#include <algorithm>

#include "cmenger/tree.hpp"

namespace cmenger {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(int n, const VertexSet& vs) {
    Bits b((n + 63) / 64, 0);
    for (int v : vs) b[v >> 6] |= std::uint64_t{1} << (v & 63);
    return b;
}

bool meets(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

void merge_into(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

constexpr std::size_t kPathCap = 2'000'000;

// Induced S-T paths whose interior avoids S and T, in DFS order from each start.
std::vector<Path> induced_st_paths(const Graph& g, const VertexSet& s, const VertexSet& t) {
    const int n = g.vertex_count();
    Mask in_s = make_mask(n, s), in_t = make_mask(n, t);
    std::vector<Path> out;
    std::vector<int> touch(n, 0);
    Mask on(n, 0);
    Path cur;
    auto push = [&](int v) {
        cur.push_back(v);
        on[v] = 1;
        for (int w : g.neighbors(v)) ++touch[w];
    };
    auto pop = [&]() {
        int v = cur.back();
        cur.pop_back();
        on[v] = 0;
        for (int w : g.neighbors(v)) --touch[w];
    };
    auto dfs = [&](auto&& self) -> void {
        int last = cur.back();
        for (int w : g.neighbors(last)) {
            if (on[w] || touch[w] != 1) continue;
            if (in_t[w]) {
                cur.push_back(w);
                out.push_back(cur);
                cur.pop_back();
                if (out.size() > kPathCap) throw capacity_error("oracle: too many candidate paths");
                continue;
            }
            if (in_s[w]) continue;
            push(w);
            self(self);
            pop();
        }
    };
    for (int s0 : s) {
        if (in_t[s0]) {
            out.push_back({s0});
            continue;
        }
        push(s0);
        dfs(dfs);
        pop();
    }
    return out;
}

bool separates(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& x, int r) {
    const int n = g.vertex_count();
    Mask keep = make_mask(n, ball(g, x, r));
    for (auto& b : keep) b = !b;
    VertexSet src;
    for (int v : s)
        if (keep[v]) src.push_back(v);
    if (src.empty()) return true;
    auto dd = bfs_distances(g, src, &keep);
    return std::none_of(t.begin(), t.end(), [&](int v) { return keep[v] && dd[v] != kInfinity; });
}

std::uint64_t binomial_sum(int n, int k) {
    std::uint64_t total = 0, term = 1;
    for (int i = 0; i <= std::min(n, k); ++i) {
        if (i > 0) term = term * static_cast<std::uint64_t>(n - i + 1) / static_cast<std::uint64_t>(i);
        total += term;
        if (total > kOracleSubsetCap) return total;
    }
    return total;
}

}  // namespace

std::optional<std::vector<Path>> oracle_far_paths_metric(const Graph& g, const Graph& metric, const VertexSet& s_in,
                                                         const VertexSet& t_in, int m, int c, bool force) {
    check_vertices(g, s_in);
    check_vertices(g, t_in);
    if (metric.vertex_count() != g.vertex_count()) throw input_error("metric graph has a different vertex count");
    if (m < 0 || c < 0) throw input_error("oracle needs m, c >= 0");
    if (!force && (g.vertex_count() > kOracleVertexCap || m > kOracleFamilyCap))
        throw capacity_error("oracle_far_paths: instance beyond the exhaustive cap");
    if (m == 0) return std::vector<Path>{};
    const int n = g.vertex_count();
    VertexSet s = normalize(s_in), t = normalize(t_in);
    std::vector<Path> paths = induced_st_paths(g, s, t);
    std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) { return a.front() < b.front(); });
    std::vector<Bits> own, near;
    for (const auto& p : paths) {
        VertexSet vs = normalize(p);
        own.push_back(to_bits(n, vs));
        near.push_back(to_bits(n, ball(metric, vs, std::min(c, n))));
    }
    std::vector<int> chosen;
    auto search = [&](auto&& self, std::size_t from, const Bits& blocked) -> bool {
        if (static_cast<int>(chosen.size()) == m) return true;
        for (std::size_t j = from; j < paths.size(); ++j) {
            if (!chosen.empty() && paths[j].front() <= paths[chosen.back()].front()) continue;
            if (meets(blocked, own[j])) continue;
            Bits nb = blocked;
            merge_into(nb, near[j]);
            chosen.push_back(static_cast<int>(j));
            if (self(self, j + 1, nb)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 0, Bits((n + 63) / 64, 0))) return std::nullopt;
    std::vector<Path> out;
    for (int j : chosen) out.push_back(paths[j]);
    return out;
}

std::optional<std::vector<Path>> oracle_far_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int m, int c,
                                                  bool force) {
    return oracle_far_paths_metric(g, g, s, t, m, c, force);
}

std::optional<VertexSet> oracle_separator(const Graph& g, const VertexSet& s_in, const VertexSet& t_in, int k, int r,
                                          bool force) {
    check_vertices(g, s_in);
    check_vertices(g, t_in);
    if (k < 0 || r < 0) throw input_error("oracle needs k, r >= 0");
    const int n = g.vertex_count();
    if (!force && binomial_sum(n, k) > kOracleSubsetCap)
        throw capacity_error("oracle_separator: too many candidate sets");
    VertexSet s = normalize(s_in), t = normalize(t_in);
    const int radius = std::min(r, n);
    for (int size = 0; size <= std::min(k, n); ++size) {
        VertexSet x(size);
        for (int i = 0; i < size; ++i) x[i] = i;
        for (;;) {
            if (separates(g, s, t, x, radius)) return x;
            int i = size - 1;
            while (i >= 0 && x[i] == n - size + i) --i;
            if (i < 0) break;
            ++x[i];
            for (int j = i + 1; j < size; ++j) x[j] = x[j - 1] + 1;
        }
    }
    return std::nullopt;
}

JumpingVerdict exhaustive_is_jumping(const JumpSet& f, int c, const Setting& st) {
    if (c < 0) throw input_error("barrier length must be non-negative");
    const int k = st.k();
    auto cleared = [&](const Barrier& q) {
        for (auto [a, b] : f) {
            bool starts = st.in_s(a) && !st.on_paths(a);
            if (!starts && st.on_paths(a)) starts = st.pos(a) < q.span[st.path_of(a)].first;
            bool ends = st.in_t(b) && !st.on_paths(b);
            if (!ends && st.on_paths(b)) ends = st.pos(b) > q.span[st.path_of(b)].second;
            if (starts && ends) return true;
        }
        return false;
    };
    Barrier q;
    q.span.assign(k, {0, 0});
    for (;;) {
        if (!cleared(q)) return {false, q};
        int h = 0;
        for (; h < k; ++h) {
            auto& [lo, hi] = q.span[h];
            if (hi < st.length(h) && hi - lo < c) {
                ++hi;
                break;
            }
            if (lo < st.length(h)) {
                ++lo;
                hi = lo;
                break;
            }
            lo = hi = 0;
        }
        if (h == k) return {true, std::nullopt};
    }
}

// ---------------------------------------------------------------- example instance

std::vector<Path> worked_example_paths() { return {{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14, 15}}; }

std::vector<Pair> worked_example_pairs() { return {{16, 12}, {8, 4}, {1, 5}, {2, 13}, {10, 15}, {11, 6}, {3, 17}}; }

Instance gen_worked_example() {
    std::vector<Edge> edges;
    for (const auto& p : worked_example_paths())
        for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
    for (auto [a, b] : worked_example_pairs()) edges.emplace_back(std::min(a, b), std::max(a, b));
    Instance inst;
    inst.graph = Graph(18, edges);
    inst.s = {0, 8, 16};
    inst.t = {7, 15, 17};
    inst.k = 2;
    inst.c = 2;
    inst.d = 3;
    inst.label = "worked_example";
    return inst;
}

Setting worked_example_setting() {
    Instance inst = gen_worked_example();
    return Setting(inst.graph.vertex_count(), inst.s, inst.t, worked_example_paths());
}

// ---------------------------------------------------------------- families

FamilyKind family_from_name(const std::string& name) {
    if (name == "binary_tree") return FamilyKind::binary_tree;
    if (name == "subdivided_tree") return FamilyKind::subdivided_tree;
    if (name == "grid") return FamilyKind::grid;
    if (name == "caterpillar") return FamilyKind::caterpillar;
    if (name == "random_bounded_pw") return FamilyKind::random_bounded_pw;
    throw input_error("unknown family: " + name);
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::binary_tree: return "binary_tree";
        case FamilyKind::subdivided_tree: return "subdivided_tree";
        case FamilyKind::grid: return "grid";
        case FamilyKind::caterpillar: return "caterpillar";
        case FamilyKind::random_bounded_pw: return "random_bounded_pw";
    }
    return "unknown";
}

namespace {

void need(const std::vector<int>& params, std::size_t lo, std::size_t hi, const char* kind) {
    if (params.size() < lo || params.size() > hi)
        throw input_error(std::string(kind) + ": wrong number of parameters");
}

// Leaves of the heap-numbered tree, split into left and right halves.
void tree_terminals(int d, Instance& inst) {
    int first = (1 << (d - 1)) - 1, last = binary_tree_size(d) - 1;
    int mid = first + (last - first + 1) / 2;
    for (int v = first; v <= last; ++v) (v < mid ? inst.s : inst.t).push_back(v);
}

std::string label_of(FamilyKind kind, const std::vector<int>& params) {
    std::string out = family_name(kind);
    for (int p : params) out += ":" + std::to_string(p);
    return out;
}

}  // namespace

Instance gen_family(FamilyKind kind, const std::vector<int>& params, std::uint64_t seed) {
    Instance inst;
    inst.k = 1;
    inst.c = 1;
    inst.d = 3;
    inst.seed = seed;
    inst.label = label_of(kind, params);
    Lcg rng(seed);
    std::vector<Edge> edges;
    switch (kind) {
        case FamilyKind::binary_tree: {
            need(params, 1, 1, "binary_tree");
            const int d = params[0];
            if (d < 2 || d > 12) throw input_error("binary_tree: depth must lie in [2, 12]");
            inst.graph = make_binary_tree(d);
            inst.d = d;
            tree_terminals(d, inst);
            return inst;
        }
        case FamilyKind::subdivided_tree: {
            need(params, 2, 2, "subdivided_tree");
            const int d = params[0], l = params[1];
            if (d < 2 || d > 10 || l < 1 || l > 20) throw input_error("subdivided_tree: need 2<=d<=10, 1<=l<=20");
            const int base = binary_tree_size(d);
            int next = base;
            for (int v = 1; v < base; ++v) {
                int len = 1 + rng.below(l);
                int prev = binary_tree_parent(v);
                for (int i = 1; i < len; ++i) {
                    edges.emplace_back(prev, next);
                    prev = next++;
                }
                edges.emplace_back(prev, v);
            }
            for (auto& e : edges)
                if (e.first > e.second) std::swap(e.first, e.second);
            inst.graph = Graph(next, edges);
            inst.d = d;
            tree_terminals(d, inst);
            return inst;
        }
        case FamilyKind::grid: {
            need(params, 2, 2, "grid");
            const int rows = params[0], cols = params[1];
            if (rows < 1 || cols < 1 || rows * cols > 4096) throw input_error("grid: bad dimensions");
            for (int r = 0; r < rows; ++r)
                for (int q = 0; q < cols; ++q) {
                    int v = r * cols + q;
                    if (q + 1 < cols) edges.emplace_back(v, v + 1);
                    if (r + 1 < rows) edges.emplace_back(v, v + cols);
                }
            inst.graph = Graph(rows * cols, edges);
            for (int r = 0; r < rows; ++r) {
                inst.s.push_back(r * cols);
                inst.t.push_back(r * cols + cols - 1);
            }
            inst.s = normalize(inst.s);
            inst.t = normalize(inst.t);
            return inst;
        }
        case FamilyKind::caterpillar: {
            need(params, 2, 2, "caterpillar");
            const int spine = params[0], legs = params[1];
            if (spine < 1 || legs < 0 || spine * (legs + 1) > 4096) throw input_error("caterpillar: bad parameters");
            int next = spine;
            for (int v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
            for (int v = 0; v < spine; ++v) {
                int count = rng.below(legs + 1);
                for (int i = 0; i < count; ++i) edges.emplace_back(v, next++);
            }
            inst.graph = Graph(next, edges);
            inst.s = {0};
            inst.t = {spine - 1};
            return inst;
        }
        case FamilyKind::random_bounded_pw: {
            need(params, 2, 3, "random_bounded_pw");
            const int w = params[0], n = params[1];
            const int density = params.size() > 2 ? params[2] : 50;
            if (w < 1 || n < 1 || n > 4096 || density < 0 || density > 100)
                throw input_error("random_bounded_pw: need w>=1, 1<=n<=4096, density in [0,100]");
            std::vector<int> active;
            for (int v = 0; v < n; ++v) {
                bool linked = false;
                for (int x : active)
                    if (rng.chance(density, 100)) {
                        edges.emplace_back(x, v);
                        linked = true;
                    }
                if (!active.empty() && !linked) edges.emplace_back(active[rng.below(static_cast<int>(active.size()))], v);
                VertexSet bag = active;
                bag.push_back(v);
                inst.bags.push_back(normalize(bag));
                active.push_back(v);
                while (static_cast<int>(active.size()) > w) active.erase(active.begin() + rng.below(static_cast<int>(active.size())));
            }
            inst.graph = Graph(n, edges);
            int ns = 1 + rng.below(3), nt = 1 + rng.below(3);
            for (int i = 0; i < ns; ++i) inst.s.push_back(rng.below(n));
            for (int i = 0; i < nt; ++i) inst.t.push_back(rng.below(n));
            inst.s = normalize(inst.s);
            inst.t = normalize(inst.t);
            return inst;
        }
    }
    throw input_error("unknown family");
}

Instance subdivide_instance(const Instance& inst, int n) {
    if (n < 1) throw input_error("subdivision factor must be at least 1");
    if (n == 1) return inst;
    const Graph& g = inst.graph;
    int next = g.vertex_count();
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int i = 1; i < n; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    Instance out = inst;
    out.graph = Graph(next, edges);
    out.c = inst.c * n;
    out.label = inst.label + "/subdivided:" + std::to_string(n);
    out.bags.clear();
    return out;
}

}  // namespace cmenger
