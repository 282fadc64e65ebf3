#include "cmenger/augment.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <tuple>

namespace cmenger {

JumpSet normalize_pairs(JumpSet f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

Pair flipped(Pair p) { return {p.second, p.first}; }

// ---------------------------------------------------------------- Setting

Setting::Setting(int n, VertexSet s, VertexSet t, std::vector<Path> paths)
    : n_(n), s_(normalize(std::move(s))), t_(normalize(std::move(t))), paths_(std::move(paths)) {
    if (n < 0) throw input_error("negative vertex count");
    path_of_.assign(n, -1);
    pos_.assign(n, -1);
    side_.assign(n, 0);
    auto check = [&](int v) {
        if (v < 0 || v >= n) throw input_error("setting vertex " + std::to_string(v) + " out of range");
    };
    for (int v : s_) check(v), side_[v] = 1;
    for (int v : t_) {
        check(v);
        if (side_[v] == 1) throw input_error("S and T intersect at " + std::to_string(v));
        side_[v] = 2;
    }
    for (std::size_t h = 0; h < paths_.size(); ++h) {
        const Path& p = paths_[h];
        if (p.size() < 2) throw input_error("setting path " + std::to_string(h) + " too short");
        for (std::size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            check(v);
            if (path_of_[v] != -1) throw input_error("setting paths overlap at " + std::to_string(v));
            path_of_[v] = static_cast<int>(h);
            pos_[v] = static_cast<int>(i);
            bool end = i == 0 || i + 1 == p.size();
            if (!end && side_[v] != 0) throw input_error("terminal inside setting path " + std::to_string(h));
        }
        if (side_[p.front()] != 1 || side_[p.back()] != 2)
            throw input_error("setting path " + std::to_string(h) + " is not an S-T path");
    }
}

int Setting::union_dist(int u, int v) const {
    if (!valid(u) || !valid(v) || path_of_[u] < 0 || path_of_[u] != path_of_[v]) return kInfinity;
    return std::abs(pos_[u] - pos_[v]);
}

bool Setting::admissible(Pair p) const {
    auto ok = [&](int v) { return valid(v) && (path_of_[v] >= 0 || side_[v] != 0); };
    return p.first != p.second && ok(p.first) && ok(p.second);
}

Setting Setting::swapped() const {
    std::vector<Path> rev;
    for (const auto& p : paths_) rev.push_back(reversed(p));
    return Setting(n_, t_, s_, std::move(rev));
}

Verdict setting_in_graph(const Graph& g, const Setting& st) {
    if (g.vertex_count() != st.vertex_count()) return Verdict::fail("vertex count mismatch");
    for (int h = 0; h < st.k(); ++h)
        if (!is_path(g, st.path(h))) return Verdict::fail("setting path " + std::to_string(h) + " is not a path of g");
    return Verdict::pass();
}

Verdict validate_barrier(const Barrier& q, int c, const Setting& st) {
    if (static_cast<int>(q.span.size()) != st.k()) return Verdict::fail("barrier size differs from k");
    for (int h = 0; h < st.k(); ++h) {
        auto [lo, hi] = q.span[h];
        if (lo < 0 || hi > st.length(h) || lo > hi) return Verdict::fail("barrier span outside its path");
        if (hi - lo > c) return Verdict::fail("barrier span longer than c");
    }
    return Verdict::pass();
}

Verdict validate_sequence(const AugmentingSequence& seq, const Setting& st) {
    const auto& ps = seq.pairs;
    if (seq.c < 0) return Verdict::fail("negative budget");
    if (ps.empty()) return Verdict::fail("empty sequence");
    for (auto p : ps)
        if (!st.admissible(p)) return Verdict::fail("pair outside the admissible pairs");
    if (!st.free_source(ps.front().first)) return Verdict::fail("first pair does not start at a free source");
    if (!st.free_sink(ps.back().second)) return Verdict::fail("last pair does not end at a free sink");
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        int b = ps[i].second, a = ps[i + 1].first;
        if (!st.on_paths(b) || st.path_of(a) != st.path_of(b))
            return Verdict::fail("hand-off " + std::to_string(i) + " leaves its path");
        if (st.pos(a) + seq.c + 1 > st.pos(b))
            return Verdict::fail("hand-off " + std::to_string(i) + " steps back less than c+1");
    }
    return Verdict::pass();
}

bool jumps(Pair p, const Barrier& q, const Setting& st) {
    if (!st.admissible(p)) throw input_error("pair not admissible in the setting");
    if (static_cast<int>(q.span.size()) != st.k()) throw input_error("barrier size differs from k");
    auto [a, b] = p;
    auto inside = [&](int v) {
        int h = st.path_of(v);
        return h >= 0 && st.pos(v) >= q.span[h].first && st.pos(v) <= q.span[h].second;
    };
    if (inside(a) || inside(b)) return false;
    bool a_ok = st.free_source(a) || (st.on_paths(a) && st.pos(a) < q.span[st.path_of(a)].first);
    bool b_ok = st.free_sink(b) || (st.on_paths(b) && st.pos(b) > q.span[st.path_of(b)].second);
    return a_ok && b_ok;
}

namespace {

void check_pairs(const JumpSet& f, const Setting& st) {
    for (auto p : f)
        if (!st.admissible(p))
            throw input_error("pair (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                              ") not admissible in the setting");
}

Barrier trailing_barrier(const std::vector<int>& reach, int c) {
    Barrier q;
    for (int r : reach) q.span.emplace_back(std::max(0, r - c), r);
    return q;
}

}  // namespace

SequenceOrBarrier find_augmenting_sequence(const JumpSet& f_in, int c, const Setting& st) {
    if (c < 0) throw input_error("negative budget");
    JumpSet f = normalize_pairs(f_in);
    check_pairs(f, st);
    const int n = st.vertex_count();
    std::vector<int> reach(st.k(), 0);
    std::vector<Pair> rec_pair(n);
    std::vector<int> rec_prev(n, -1);

    auto unwind = [&](Pair last, int prev) {
        AugmentingSequence seq{{last}, c};
        for (int cur = prev; cur != -1; cur = rec_prev[cur]) seq.pairs.push_back(rec_pair[cur]);
        std::reverse(seq.pairs.begin(), seq.pairs.end());
        return seq;
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (auto p : f) {
            auto [a, b] = p;
            int prev;
            if (st.free_source(a)) {
                prev = -1;
            } else if (st.on_paths(a)) {
                int h = st.path_of(a);
                if (st.pos(a) + c + 1 > reach[h]) continue;
                prev = st.path(h)[reach[h]];
            } else {
                continue;
            }
            if (st.free_sink(b)) return unwind(p, prev);
            if (!st.on_paths(b)) continue;
            int h2 = st.path_of(b);
            if (st.pos(b) <= reach[h2]) continue;
            reach[h2] = st.pos(b);
            rec_pair[b] = p;
            rec_prev[b] = prev;
            changed = true;
        }
    }
    return trailing_barrier(reach, c);
}

JumpingVerdict is_jumping(const JumpSet& f, int c, const Setting& st) {
    auto r = find_augmenting_sequence(f, c, st);
    if (std::holds_alternative<AugmentingSequence>(r)) return {true, std::nullopt};
    return {false, std::get<Barrier>(r)};
}

Verdict check_minimal_order(const AugmentingSequence& seq, const Setting& st) {
    const auto& ps = seq.pairs;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            for (int ui = 0; ui < 2; ++ui)
                for (int vi = 0; vi < 2; ++vi) {
                    int u = ui ? ps[i].second : ps[i].first;
                    int v = vi ? ps[j].second : ps[j].first;
                    if (!st.on_paths(u) || st.path_of(u) != st.path_of(v)) continue;
                    if (st.pos(u) < st.pos(v)) continue;
                    bool handoff = ui == 1 && vi == 0;
                    if (handoff && (st.pos(u) - st.pos(v) <= seq.c || j == i + 1)) continue;
                    return Verdict::fail("pairs " + std::to_string(i) + " and " + std::to_string(j) +
                                         " out of order on path " + std::to_string(st.path_of(u)));
                }
    return Verdict::pass();
}

AugmentingSequence minimize_sequence(const JumpSet& f_in, int c, const Setting& st) {
    JumpSet f = normalize_pairs(f_in);
    if (auto j = is_jumping(f, c, st); !j.jumping)
        throw not_jumping_error("pair set is not " + std::to_string(c) + "-jumping", *j.barrier);
    const int n = st.vertex_count();
    constexpr int kNone = kInfinity;
    // togo[v]: fewest further pairs needed from a partial sequence ending at path vertex v.
    std::vector<int> togo(n, kNone);
    auto after = [&](int b) {
        if (st.free_sink(b)) return 0;
        if (st.on_paths(b)) return togo[b];
        return kNone;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : f) {
            if (!st.on_paths(a)) continue;
            int need = after(b);
            if (need == kNone) continue;
            const Path& p = st.path(st.path_of(a));
            for (int i = st.pos(a) + c + 1; i < static_cast<int>(p.size()); ++i)
                if (togo[p[i]] > need + 1) {
                    togo[p[i]] = need + 1;
                    changed = true;
                }
        }
    }
    auto key = [&](int v) {
        return st.on_paths(v) ? std::make_pair(st.path_of(v), st.pos(v)) : std::make_pair(st.k(), v);
    };
    auto better = [&](Pair x, Pair y) {
        return std::make_pair(key(x.second), key(x.first)) < std::make_pair(key(y.second), key(y.first));
    };

    AugmentingSequence seq{{}, c};
    int best = kNone;
    for (auto [a, b] : f)
        if (st.free_source(a) && after(b) != kNone) best = std::min(best, after(b) + 1);
    if (best == kNone) throw invariant_error("jumping set without a reachable sink");
    std::optional<Pair> pick;
    for (auto p : f)
        if (st.free_source(p.first) && after(p.second) != kNone && after(p.second) + 1 == best &&
            (!pick || better(p, *pick)))
            pick = p;
    seq.pairs.push_back(*pick);
    while (!st.free_sink(seq.pairs.back().second)) {
        int cur = seq.pairs.back().second;
        std::optional<Pair> nxt;
        for (auto p : f) {
            if (st.path_of(p.first) != st.path_of(cur) || st.pos(p.first) + c + 1 > st.pos(cur)) continue;
            int need = after(p.second);
            if (need == kNone || need + 1 != togo[cur]) continue;
            if (!nxt || better(p, *nxt)) nxt = p;
        }
        if (!nxt) throw invariant_error("minimum sequence reconstruction stalled");
        seq.pairs.push_back(*nxt);
    }
    if (auto v = validate_sequence(seq, st); !v) throw invariant_error("minimum sequence invalid: " + v.reason);
    if (auto v = check_minimal_order(seq, st); !v) throw invariant_error("minimum sequence misordered: " + v.reason);
    return seq;
}

namespace {

Verdict coordinate_separated(const JumpSet& f, int l, const Setting& st, bool second) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            int u = second ? f[i].second : f[i].first;
            int v = second ? f[j].second : f[j].first;
            int dd = st.union_dist(u, v);
            if (dd != kInfinity && dd <= l)
                return Verdict::fail(std::string(second ? "second" : "first") + " coordinates " + std::to_string(u) +
                                     "," + std::to_string(v) + " at union distance " + std::to_string(dd));
        }
    return Verdict::pass();
}

}  // namespace

Verdict is_separated(const JumpSet& f_in, int l, const Setting& st) {
    JumpSet f = normalize_pairs(f_in);
    if (auto v = coordinate_separated(f, l, st, false); !v) return v;
    return coordinate_separated(f, l, st, true);
}

JumpSet separate_tops(const JumpSet& f_in, int p, int q, const Setting& st) {
    if (p < 0 || q < 0) throw input_error("negative budget");
    JumpSet f = normalize_pairs(f_in);
    check_pairs(f, st);
    const int k = st.k();
    std::vector<int> top(k, 0);
    std::vector<std::vector<Pair>> stored(k);
    for (;;) {
        Barrier bar;
        for (int h = 0; h < k; ++h) bar.span.emplace_back(std::max(0, top[h] - p), std::min(st.length(h), top[h] + q));
        auto it = std::find_if(f.begin(), f.end(), [&](Pair x) { return jumps(x, bar, st); });
        if (it == f.end())
            throw not_jumping_error("pair set is not " + std::to_string(p + q) + "-jumping", std::move(bar));
        auto [a, b] = *it;
        std::vector<Pair> seq = st.free_source(a) ? std::vector<Pair>{} : stored[st.path_of(a)];
        seq.push_back(*it);
        if (st.free_sink(b)) {
            JumpSet d = normalize_pairs(seq);
            if (!is_jumping(d, p, st).jumping) throw invariant_error("end-separated set lost its jumping power");
            if (auto v = coordinate_separated(d, q, st, true); !v) throw invariant_error("separate_tops: " + v.reason);
            return d;
        }
        int h2 = st.path_of(b);
        top[h2] = st.pos(b);
        stored[h2] = std::move(seq);
    }
}

JumpSet separate_all(const JumpSet& f, int c, const Setting& st) {
    if (c < 0) throw input_error("negative budget");
    JumpSet first = separate_tops(f, 3 * c, 2 * c, st);
    JumpSet rev;
    for (auto x : first) rev.push_back(flipped(x));
    JumpSet second = separate_tops(normalize_pairs(rev), c, 2 * c, st.swapped());
    JumpSet out;
    for (auto x : second) out.push_back(flipped(x));
    out = normalize_pairs(out);
    if (!is_jumping(out, c, st).jumping) throw invariant_error("separate_all output is not c-jumping");
    if (auto v = is_separated(out, 2 * c, st); !v) throw invariant_error("separate_all: " + v.reason);
    return out;
}

Verdict check_far_in_union(const std::vector<Path>& paths, int c, const Setting& st) {
    std::vector<int> owner(st.vertex_count(), -1);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (int v : paths[i]) {
            if (!st.valid(v)) return Verdict::fail("vertex out of range");
            if (owner[v] != -1) return Verdict::fail("paths share vertex " + std::to_string(v));
            owner[v] = static_cast<int>(i);
        }
    for (int h = 0; h < st.k(); ++h) {
        const Path& p = st.path(h);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size() && static_cast<int>(j - i) <= c; ++j)
                if (owner[p[i]] >= 0 && owner[p[j]] >= 0 && owner[p[i]] != owner[p[j]])
                    return Verdict::fail("vertices " + std::to_string(p[i]) + " and " + std::to_string(p[j]) +
                                         " of different paths are close along the system");
    }
    return Verdict::pass();
}

std::vector<Path> get_paths(const JumpSet& d_set, int c, const Setting& st) {
    if (auto v = is_separated(d_set, 2 * c, st); !v) throw input_error("get_paths needs a 2c-separated set: " + v.reason);
    AugmentingSequence seq = minimize_sequence(d_set, c, st);
    const auto& ps = seq.pairs;
    const int n = st.vertex_count(), k = st.k();

    // Hand-off segments between b_i and a_{i+1}, counted per vertex and per path edge.
    std::vector<int> on_segments(n, 0);
    std::vector<std::vector<int>> edge_uses(k);
    for (int h = 0; h < k; ++h) edge_uses[h].assign(st.length(h), 0);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        int h = st.path_of(ps[i].second);
        int lo = st.pos(ps[i + 1].first), hi = st.pos(ps[i].second);
        for (int x = lo; x <= hi; ++x)
            if (++on_segments[st.path(h)[x]] > 2)
                throw invariant_error("path vertex " + std::to_string(st.path(h)[x]) + " on three hand-off segments");
        for (int e = lo; e < hi; ++e) ++edge_uses[h][e];
    }

    std::vector<int> next(n, -1), indeg(n, 0), outdeg(n, 0);
    auto arc = [&](int u, int w) {
        next[u] = w;
        ++outdeg[u];
        ++indeg[w];
    };
    for (int h = 0; h < k; ++h)
        for (int e = 0; e < st.length(h); ++e) {
            int u = st.path(h)[e], w = st.path(h)[e + 1];
            if (edge_uses[h][e] == 0) arc(u, w);
            else if (edge_uses[h][e] == 2) arc(w, u);
        }
    for (auto [a, b] : ps) arc(a, b);

    const int first_a = ps.front().first, last_b = ps.back().second;
    auto expect = [&](int v, int in, int out) {
        if (indeg[v] != in || outdeg[v] != out)
            throw invariant_error("degree count at vertex " + std::to_string(v) + " is " + std::to_string(indeg[v]) +
                                  "/" + std::to_string(outdeg[v]));
    };
    expect(first_a, 0, 1);
    expect(last_b, 1, 0);
    for (int h = 0; h < k; ++h) {
        const Path& p = st.path(h);
        expect(p.front(), 0, 1);
        expect(p.back(), 1, 0);
        // Interior vertices strictly inside a single hand-off segment drop out.
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (indeg[p[i]] != 0 || outdeg[p[i]] != 0) expect(p[i], 1, 1);
    }

    std::vector<int> sources{first_a};
    for (int h = 0; h < k; ++h) sources.push_back(st.path(h).front());
    std::vector<char> seen(n, 0);
    std::vector<Path> out;
    for (int s : sources) {
        Path p{s};
        seen[s] = 1;
        for (int cur = s; next[cur] != -1;) {
            cur = next[cur];
            if (seen[cur]) throw invariant_error("walk from a source revisits a vertex");
            seen[cur] = 1;
            p.push_back(cur);
        }
        if (!st.in_t(p.back())) throw invariant_error("walk from a source ends outside T");
        out.push_back(std::move(p));
    }
    if (auto v = check_far_in_union(out, c, st); !v) throw invariant_error("get_paths: " + v.reason);
    return out;
}

ShortcutResult shortcut(const AugmentingSequence& seq, const std::vector<VertexSet>& partition, const Setting& st) {
    const int n = static_cast<int>(seq.pairs.size());
    if (auto v = validate_sequence(seq, st); !v) throw input_error("shortcut input: " + v.reason);
    std::vector<int> hits(n, 0);
    std::vector<VertexSet> classes;
    for (const auto& cls : partition) {
        for (int i : cls) {
            if (i < 0 || i >= n) throw input_error("partition index out of range");
            ++hits[i];
        }
        if (!cls.empty()) classes.push_back(normalize(cls));
    }
    for (int i = 0; i < n; ++i)
        if (hits[i] != 1) throw input_error("not a partition of the sequence indices");

    ShortcutResult res{seq, {}};
    for (int i = 0; i < n; ++i) res.origin.emplace_back(i, i);
    for (;;) {
        auto it = std::find_if(classes.begin(), classes.end(), [](const VertexSet& c) { return c.size() >= 2; });
        if (it == classes.end()) break;
        int i = it->front(), j = it->back(), shift = j - i;
        auto& ps = res.seq.pairs;
        std::vector<Pair> np(ps.begin(), ps.begin() + i);
        std::vector<std::pair<int, int>> no(res.origin.begin(), res.origin.begin() + i);
        np.emplace_back(ps[i].first, ps[j].second);
        no.emplace_back(res.origin[i].first, res.origin[j].second);
        np.insert(np.end(), ps.begin() + j + 1, ps.end());
        no.insert(no.end(), res.origin.begin() + j + 1, res.origin.end());
        ps = std::move(np);
        res.origin = std::move(no);
        std::vector<VertexSet> remapped;
        for (auto& cls : classes) {
            VertexSet out;
            if (&cls == &*it) {
                out = {i};
            } else {
                for (int h : cls)
                    if (h < i) out.push_back(h);
                    else if (h > j) out.push_back(h - shift);
            }
            if (!out.empty()) remapped.push_back(std::move(out));
        }
        classes = std::move(remapped);
    }
    if (auto v = validate_sequence(res.seq, st); !v) throw invariant_error("shortcut output: " + v.reason);
    return res;
}

// ---------------------------------------------------------------- classical disjoint paths

namespace {

struct FlowNet {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;
    explicit FlowNet(int nodes) : out(nodes) {}
    void add(int u, int v, int cap) {
        out[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap});
        out[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    }
    // One shortest augmenting path of one unit; false if none.
    bool augment(int src, int snk) {
        std::vector<int> via(out.size(), -1);
        std::vector<char> seen(out.size(), 0);
        std::deque<int> q{src};
        seen[src] = 1;
        while (!q.empty() && !seen[snk]) {
            int u = q.front();
            q.pop_front();
            for (int e : out[u])
                if (arcs[e].cap > 0 && !seen[arcs[e].to]) {
                    seen[arcs[e].to] = 1;
                    via[arcs[e].to] = e;
                    q.push_back(arcs[e].to);
                }
        }
        if (!seen[snk]) return false;
        for (int v = snk; v != src; v = arcs[via[v] ^ 1].to) {
            arcs[via[v]].cap -= 1;
            arcs[via[v] ^ 1].cap += 1;
        }
        return true;
    }
    std::vector<char> reachable(int src) const {
        std::vector<char> seen(out.size(), 0);
        std::vector<int> stack{src};
        seen[src] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : out[u])
                if (arcs[e].cap > 0 && !seen[arcs[e].to]) {
                    seen[arcs[e].to] = 1;
                    stack.push_back(arcs[e].to);
                }
        }
        return seen;
    }
};

}  // namespace

DisjointPaths max_disjoint_paths(const Graph& g, const VertexSet& s_in, const VertexSet& t_in, int limit) {
    check_vertices(g, s_in);
    check_vertices(g, t_in);
    if (limit < 0) throw input_error("negative path limit");
    VertexSet s = normalize(s_in), t = normalize(t_in);
    const int n = g.vertex_count();
    const int big = n + 2;
    const int src = 2 * n, snk = 2 * n + 1;
    FlowNet net(2 * n + 2);
    std::vector<int> split_arc(n);
    for (int v = 0; v < n; ++v) {
        split_arc[v] = static_cast<int>(net.arcs.size());
        net.add(2 * v, 2 * v + 1, 1);
    }
    for (auto [u, w] : g.edges()) {
        net.add(2 * u + 1, 2 * w, big);
        net.add(2 * w + 1, 2 * u, big);
    }
    std::vector<int> source_arc;
    for (int v : s) {
        source_arc.push_back(static_cast<int>(net.arcs.size()));
        net.add(src, 2 * v, big);
    }
    for (int v : t) net.add(2 * v + 1, snk, big);

    int flow = 0;
    while (flow < limit && net.augment(src, snk)) ++flow;

    DisjointPaths res;
    Mask in_s = make_mask(n, s), in_t = make_mask(n, t);
    // Decompose: follow used split arcs from each S vertex carrying flow.
    auto used = [&](int v) { return net.arcs[split_arc[v]].cap == 0; };
    std::vector<int> net_out(n, -1);
    // Net flow on graph arcs can cancel in opposite directions; resolve per vertex.
    for (int v = 0; v < n; ++v) {
        if (!used(v)) continue;
        std::vector<int> cands;
        for (int e : net.out[2 * v + 1]) {
            const auto& a = net.arcs[e];
            if (e % 2 == 0 && a.to < 2 * n && a.to % 2 == 0) {
                int w = a.to / 2;
                int fwd = net.arcs[e ^ 1].cap;
                int back = 0;
                for (int e2 : net.out[2 * w + 1]) {
                    const auto& a2 = net.arcs[e2];
                    if (e2 % 2 == 0 && a2.to == 2 * v) back = net.arcs[e2 ^ 1].cap;
                }
                if (fwd - back > 0) cands.push_back(w);
            }
        }
        if (cands.size() > 1) throw invariant_error("vertex with two outgoing flow arcs");
        if (!cands.empty()) net_out[v] = cands.front();
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        if (net.arcs[source_arc[i] ^ 1].cap == 0) continue;
        Path p{v};
        for (int cur = v; net_out[cur] >= 0;) {
            cur = net_out[cur];
            p.push_back(cur);
            if (p.size() > static_cast<std::size_t>(n)) throw invariant_error("flow walk does not terminate");
        }
        auto first_t = std::find_if(p.begin(), p.end(), [&](int x) { return in_t[x]; });
        if (first_t == p.end()) throw invariant_error("flow walk misses T");
        int j = static_cast<int>(first_t - p.begin()), b = j;
        while (!in_s[p[b]]) --b;
        res.paths.emplace_back(p.begin() + b, p.begin() + j + 1);
    }
    if (static_cast<int>(res.paths.size()) != flow) throw invariant_error("flow decomposition count mismatch");
    std::sort(res.paths.begin(), res.paths.end());
    if (flow < limit) {
        auto seen = net.reachable(src);
        for (int v = 0; v < n; ++v)
            if (seen[2 * v] && !seen[2 * v + 1]) res.cut.push_back(v);
        if (static_cast<int>(res.cut.size()) != flow) throw invariant_error("cut size differs from flow value");
    }
    return res;
}

MengerOutcome menger_disjoint_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int k) {
    if (k < 0) throw input_error("negative k");
    auto r = max_disjoint_paths(g, s, t, k + 1);
    if (static_cast<int>(r.paths.size()) >= k + 1) return std::move(r.paths);
    return std::move(r.cut);
}

}  // namespace cmenger
