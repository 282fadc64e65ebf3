#include "cmenger/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace cmenger {

int SubdivisionWitness::max_edge_length() const {
    int best = 0;
    for (const auto& p : edge_paths) best = std::max(best, path_length(p));
    return best;
}

int binary_tree_size(int d) {
    if (d < 2) throw input_error("binary tree depth must be at least 2");
    if (d > 24) throw capacity_error("binary tree depth too large");
    return (1 << d) - 1;
}

Graph make_binary_tree(int d) {
    int n = binary_tree_size(d);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(binary_tree_parent(v), v);
    return Graph(n, edges);
}

Verdict validate_subdivision(const Graph& g, const SubdivisionWitness& w, int d, std::int64_t l) {
    if (d < 2) return Verdict::fail("depth below 2");
    const int n = binary_tree_size(d);
    if (w.d != d) return Verdict::fail("witness depth " + std::to_string(w.d) + " != " + std::to_string(d));
    if (static_cast<int>(w.branch_map.size()) != n) return Verdict::fail("branch map size");
    if (static_cast<int>(w.edge_paths.size()) != n - 1) return Verdict::fail("edge path count");
    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);  // -2 = branch image
    for (int v = 0; v < n; ++v) {
        int h = w.branch_map[v];
        if (!g.valid(h)) return Verdict::fail("branch image out of range");
        if (owner[h] != -1) return Verdict::fail("branch images not distinct");
        owner[h] = -2;
    }
    for (int c = 1; c < n; ++c) {
        const Path& p = w.edge_paths[c - 1];
        if (!is_path(g, p)) return Verdict::fail("edge path " + std::to_string(c) + " is not a path");
        int len = path_length(p);
        if (len < 1 || len > l)
            return Verdict::fail("edge path " + std::to_string(c) + " has length " + std::to_string(len));
        if (p.front() != w.branch_map[binary_tree_parent(c)] || p.back() != w.branch_map[c])
            return Verdict::fail("edge path " + std::to_string(c) + " has wrong ends");
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (owner[p[i]] != -1) return Verdict::fail("edge path " + std::to_string(c) + " interior collides");
            owner[p[i]] = c;
        }
    }
    return Verdict::pass();
}

SubdivisionWitness truncate_witness(const SubdivisionWitness& w, int d) {
    int n = binary_tree_size(d);
    if (d > w.d) throw input_error("cannot truncate to a deeper tree");
    SubdivisionWitness out;
    out.d = d;
    out.branch_map.assign(w.branch_map.begin(), w.branch_map.begin() + n);
    out.edge_paths.assign(w.edge_paths.begin(), w.edge_paths.begin() + (n - 1));
    return out;
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& g, int d, int l) : g_(g), d_(d), l_(l) {
        n_tree_ = binary_tree_size(d);
        first_leaf_ = (1 << (d - 1)) - 1;
        tree_deg_.assign(n_tree_, 0);
        for (int v = 1; v < n_tree_; ++v) {
            ++tree_deg_[v];
            ++tree_deg_[binary_tree_parent(v)];
        }
        build_order();
        used_.assign(g.vertex_count(), 0);
        img_.assign(n_tree_, -1);
        paths_.assign(n_tree_ - 1, {});
        routed_.assign(n_tree_, 0);
    }

    std::optional<SubdivisionWitness> run() {
        const int hn = g_.vertex_count();
        if (n_tree_ > hn) return std::nullopt;
        int need3 = 0, have3 = 0;
        for (int v = 0; v < n_tree_; ++v) need3 += tree_deg_[v] >= 3;
        for (int v = 0; v < hn; ++v) have3 += g_.degree(v) >= 3;
        if (have3 < need3) return std::nullopt;

        int s0 = order_[0];
        std::vector<int> cand;
        for (int v = 0; v < hn; ++v)
            if (g_.degree(v) >= tree_deg_[s0]) cand.push_back(v);
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        for (int v : cand) {
            place(s0, v);
            if (feasible() && step(1)) return finish();
            unplace(s0, v);
        }
        return std::nullopt;
    }

private:
    // Internal tree vertices in BFS order from a degree-3 vertex; higher degree first among siblings.
    void build_order() {
        int start = d_ >= 3 ? 1 : 0;
        std::vector<char> seen(n_tree_, 0);
        anchor_.assign(n_tree_, -1);
        order_.push_back(start);
        seen[start] = 1;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            int x = order_[i];
            std::vector<int> nb;
            if (x > 0) nb.push_back(binary_tree_parent(x));
            for (int c : {2 * x + 1, 2 * x + 2})
                if (c < n_tree_) nb.push_back(c);
            std::stable_sort(nb.begin(), nb.end(), [&](int a, int b) { return tree_deg_[a] > tree_deg_[b]; });
            for (int y : nb) {
                if (seen[y] || y >= first_leaf_) continue;
                seen[y] = 1;
                anchor_[y] = x;
                order_.push_back(y);
            }
        }
    }

    void place(int x, int v) {
        img_[x] = v;
        used_[v] = 1;
        ++mapped_;
    }
    void unplace(int x, int v) {
        img_[x] = -1;
        used_[v] = 0;
        --mapped_;
    }

    int free_count() const { return static_cast<int>(std::count(used_.begin(), used_.end(), 0)); }

    // Every mapped tree vertex keeps enough free neighbours for its unrouted edges, and
    // enough free host vertices remain for the unmapped tree vertices.
    bool feasible() const {
        if (free_count() < n_tree_ - mapped_) return false;
        for (int x = 0; x < n_tree_; ++x) {
            if (img_[x] < 0) continue;
            int need = tree_deg_[x] - routed_[x];
            if (need <= 0) continue;
            int freen = 0;
            for (int w : g_.neighbors(img_[x])) freen += !used_[w];
            if (freen < need) return false;
        }
        return true;
    }

    static int edge_index(int a, int b) { return std::max(a, b) - 1; }

    bool step(std::size_t idx) {
        if (idx == order_.size()) return match_leaves();
        int x = order_[idx], y = anchor_[x];
        int max_len = std::min(l_, g_.vertex_count() - 1);
        for (int len = 1; len <= max_len; ++len) {
            bool reached = false;
            Path cur{img_[y]};
            if (extend(idx, x, y, len, cur, reached)) return true;
            if (!reached) break;  // no free path this long exists at all
        }
        return false;
    }

    // DFS over simple free paths from img_[y] of exact length len; the end becomes img_[x].
    bool extend(std::size_t idx, int x, int y, int len, Path& cur, bool& reached) {
        int u = cur.back();
        if (path_length(cur) == len - 1) reached = true;
        for (int w : g_.neighbors(u)) {
            if (used_[w]) continue;
            if (path_length(cur) + 1 == len) {
                if (g_.degree(w) < tree_deg_[x]) continue;
                cur.push_back(w);  // interior is already marked by the enclosing frames
                place(x, w);
                ++routed_[x];
                ++routed_[y];
                paths_[edge_index(x, y)] = cur;
                if (feasible() && step(idx + 1)) return true;
                --routed_[x];
                --routed_[y];
                unplace(x, w);
                cur.pop_back();
            } else {
                cur.push_back(w);
                used_[w] = 1;
                bool ok = extend(idx, x, y, len, cur, reached);
                used_[w] = 0;
                cur.pop_back();
                if (ok) return true;
            }
        }
        return false;
    }

    // Leaves take distinct free neighbours of their parents' images (bipartite matching).
    bool match_leaves() {
        std::vector<int> leaves;
        for (int v = first_leaf_; v < n_tree_; ++v) leaves.push_back(v);
        std::vector<int> match_of_host(g_.vertex_count(), -1);
        std::vector<int> leaf_host(n_tree_, -1);
        for (int leaf : leaves) {
            std::vector<char> seen(g_.vertex_count(), 0);
            if (!augment(leaf, seen, match_of_host, leaf_host)) return false;
        }
        for (int leaf : leaves) {
            img_[leaf] = leaf_host[leaf];
            paths_[leaf - 1] = {img_[binary_tree_parent(leaf)], leaf_host[leaf]};
        }
        return true;
    }

    bool augment(int leaf, std::vector<char>& seen, std::vector<int>& match_of_host, std::vector<int>& leaf_host) {
        for (int w : g_.neighbors(img_[binary_tree_parent(leaf)])) {
            if (used_[w] || seen[w]) continue;
            seen[w] = 1;
            if (match_of_host[w] == -1 || augment(match_of_host[w], seen, match_of_host, leaf_host)) {
                match_of_host[w] = leaf;
                leaf_host[leaf] = w;
                return true;
            }
        }
        return false;
    }

    SubdivisionWitness finish() const {
        SubdivisionWitness w;
        w.d = d_;
        w.branch_map = img_;
        w.edge_paths.resize(n_tree_ - 1);
        for (int c = 1; c < n_tree_; ++c) {
            Path p = paths_[c - 1];
            if (p.front() != img_[binary_tree_parent(c)]) p = reversed(p);
            w.edge_paths[c - 1] = p;
        }
        return w;
    }

    const Graph& g_;
    int d_, l_;
    int n_tree_ = 0, first_leaf_ = 0, mapped_ = 0;
    std::vector<int> tree_deg_, order_, anchor_;
    std::vector<char> used_;
    std::vector<int> img_, routed_;
    std::vector<Path> paths_;
};

}  // namespace

std::optional<SubdivisionWitness> contains_subdivision(const Graph& g, int d, int l) {
    if (d < 2) throw input_error("depth must be at least 2");
    if (l < 1) throw input_error("subdivision length must be at least 1");
    EmbeddingSearch search(g, d, l);
    auto w = search.run();
    if (w && !validate_subdivision(g, *w, d, l)) throw invariant_error("embedding search produced an invalid witness");
    return w;
}

int pathwidth_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kPathwidthCap)
        throw capacity_error("pathwidth_exact supports at most " + std::to_string(kPathwidthCap) + " vertices");
    if (n == 0) return 0;
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= 1u << w;
    const std::uint32_t full = (1u << n) - 1;
    // best[S]: minimal max boundary over layouts whose prefix set is S.
    std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int boundary = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v & 1u) && (adj[v] & ~s & full)) ++boundary;
        int inner = 255;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1u) inner = std::min<int>(inner, best[s & ~(1u << v)]);
        best[s] = static_cast<std::uint8_t>(std::max(boundary, inner));
    }
    return best[full];
}

std::optional<int> path_decomposition_width(const Graph& g, const std::vector<VertexSet>& bags) {
    const int n = g.vertex_count();
    std::vector<int> first(n, -1), last(n, -1), count(n, 0);
    int width = -1;
    for (int i = 0; i < static_cast<int>(bags.size()); ++i) {
        for (int v : normalize(bags[i])) {
            if (!g.valid(v)) return std::nullopt;
            if (first[v] < 0) first[v] = i;
            last[v] = i;
            ++count[v];
        }
        width = std::max(width, static_cast<int>(normalize(bags[i]).size()) - 1);
    }
    for (int v = 0; v < n; ++v) {
        if (first[v] < 0) return std::nullopt;
        if (count[v] != last[v] - first[v] + 1) return std::nullopt;  // bags holding v are contiguous
    }
    for (auto [u, v] : g.edges()) {
        if (std::max(first[u], first[v]) > std::min(last[u], last[v])) return std::nullopt;
    }
    return std::max(width, 0);
}

}  // namespace cmenger
