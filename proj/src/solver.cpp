#include "cmenger/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "cmenger/shrink.hpp"

namespace cmenger {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a >= kConstantCap - b) return kConstantCap;
    return a + b;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kConstantCap / b) return kConstantCap;
    return std::min(kConstantCap, a * b);
}

bool beyond(int dist_value, std::int64_t r) {
    return dist_value == kInfinity || static_cast<std::int64_t>(dist_value) > r;
}

// Every finite distance is below n, so radii are clamped to n.
int clamp_radius(std::int64_t r, const Graph& g) {
    return static_cast<int>(std::min<std::int64_t>(std::max<std::int64_t>(r, 0), g.vertex_count()));
}

}  // namespace

ConstantTable constants(int k, std::int64_t c, int d) {
    if (k < 0 || c < 0 || d < 0) throw input_error("constants need non-negative k, c, d");
    static std::mutex mu;
    static std::map<std::tuple<int, std::int64_t, int>, ConstantTable> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find({k, c, d}); it != memo.end()) return it->second;
    }
    ConstantTable t;
    t.k = k;
    t.c = c;
    t.d = d;
    t.c_eff = c;
    if (k > 0) {
        const std::int64_t ce = std::max<std::int64_t>(c, 2);
        t.c_eff = ce;
        t.c1 = ce;
        t.c2 = sat_add(sat_add(t.c1, ce), sat_mul(d, ce - 1));
        t.c3 = sat_add(sat_mul(2, sat_add(ce, t.c2)), sat_mul(sat_mul(2, ce), d));
        t.c4 = sat_mul(sat_mul(t.c3, t.c3), d);
        t.c5 = sat_mul(5, t.c4);
        t.c6 = t.c3;
        t.c7 = sat_add(t.c6, sat_mul(sat_mul(2, t.c3), d));
        ConstantTable narrow = constants(k - 1, sat_mul(sat_mul(ce, ce), d), d);
        ConstantTable wide = constants(k - 1, t.c7, d);
        t.c8 = std::max({ce, narrow.f_value(), wide.f_value()});
        t.c9 = std::max({sat_mul(ce, d), sat_add(t.c2, t.c5), narrow.g_value(), wide.g_value()});
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_tuple(k, c, d), t);
    return t;
}

std::string certificate_kind(const Certificate& cert) {
    switch (cert.index()) {
        case 0: return "far_paths";
        case 1: return "separator";
        default: return "subdivision";
    }
}

// ---------------------------------------------------------------- verification

Verdict verify_certificate(const Graph& g, const VertexSet& s_in, const VertexSet& t_in, int k, std::int64_t c, int d,
                           const ConstantTable& table, const Certificate& cert) {
    for (int v : s_in)
        if (!g.valid(v)) return Verdict::fail("S vertex out of range");
    for (int v : t_in)
        if (!g.valid(v)) return Verdict::fail("T vertex out of range");
    const int n = g.vertex_count();
    Mask in_s = make_mask(n, normalize(s_in)), in_t = make_mask(n, normalize(t_in));

    if (auto* fp = std::get_if<FarPaths>(&cert)) {
        if (static_cast<int>(fp->parts.size()) != k + 1)
            return Verdict::fail("expected " + std::to_string(k + 1) + " parts, got " + std::to_string(fp->parts.size()));
        std::vector<VertexSet> parts;
        for (const auto& p : fp->parts) {
            for (int v : p)
                if (!g.valid(v)) return Verdict::fail("part vertex out of range");
            parts.push_back(normalize(p));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!is_connected_set(g, parts[i])) return Verdict::fail("part " + std::to_string(i) + " is not connected");
            bool hs = std::any_of(parts[i].begin(), parts[i].end(), [&](int v) { return in_s[v]; });
            bool ht = std::any_of(parts[i].begin(), parts[i].end(), [&](int v) { return in_t[v]; });
            if (!hs || !ht) return Verdict::fail("part " + std::to_string(i) + " misses S or T");
        }
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                int dd = dist(g, parts[i], parts[j]);
                if (dd == 0) return Verdict::fail("distance 0 between parts " + std::to_string(i) + " and " + std::to_string(j));
                if (!beyond(dd, c))
                    return Verdict::fail("parts " + std::to_string(i) + " and " + std::to_string(j) + " at distance " +
                                         std::to_string(dd));
            }
        return Verdict::pass();
    }
    if (auto* sep = std::get_if<Separator>(&cert)) {
        VertexSet x = normalize(sep->x);
        if (static_cast<int>(x.size()) > k) return Verdict::fail("separator larger than k");
        for (int v : x)
            if (!g.valid(v)) return Verdict::fail("separator vertex out of range");
        VertexSet covered = ball(g, x, clamp_radius(table.g_value(), g));
        Mask keep = make_mask(n, covered);
        for (auto& b : keep) b = !b;
        auto lab = component_labels(g, keep);
        std::vector<char> has_s(n, 0);
        for (int v = 0; v < n; ++v)
            if (lab[v] >= 0 && in_s[v]) has_s[lab[v]] = 1;
        for (int v = 0; v < n; ++v)
            if (lab[v] >= 0 && in_t[v] && has_s[lab[v]])
                return Verdict::fail("an S-T path avoids the separator balls (reaches " + std::to_string(v) + ")");
        return Verdict::pass();
    }
    const auto& w = std::get<SubdivisionWitness>(cert);
    if (w.d != d) return Verdict::fail("witness depth differs from d");
    return validate_subdivision(g, w, d, table.f_value());
}

// ---------------------------------------------------------------- detail checks

namespace detail {

Verdict near_geodesic(const Graph& g, const Path& p, std::int64_t c3, int d) {
    const std::int64_t along = sat_mul(sat_mul(std::max(d - 2, 0), c3), std::max<std::int64_t>(c3 - 1, 0));
    if (along >= static_cast<std::int64_t>(p.size())) return Verdict::pass();
    const int cap = clamp_radius(c3, g);
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto dg = bfs_distances(g, {p[i]}, nullptr, cap);
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (static_cast<std::int64_t>(j - i) > along && !beyond(dg[p[j]], c3))
                return Verdict::fail("vertices " + std::to_string(p[i]) + " and " + std::to_string(p[j]) +
                                     " far along the path but close in the graph");
    }
    return Verdict::pass();
}

Verdict validate_leap(const Graph& g, const Setting& st, const std::vector<int>& dvp, const Leap& leap,
                      std::int64_t c2) {
    const Path& p = leap.path;
    if (!is_path(g, p) || p.size() < 2) return Verdict::fail("leap is not a path of length at least one");
    const int a = p.front(), b = p.back();
    const int len = path_length(p);
    auto in_far = [&](int v) { return beyond(dvp[v], c2); };
    auto terminal = [&](int v) { return st.in_s(v) || st.in_t(v); };
    switch (leap.kind) {
        case 4: {
            bool ends = (st.in_s(a) && st.in_t(b)) || (st.in_t(a) && st.in_s(b));
            if (!ends) return Verdict::fail("kind 4 leap without an S end and a T end");
            for (int v : p)
                if (!in_far(v)) return Verdict::fail("kind 4 leap leaves the far shell");
            return Verdict::pass();
        }
        case 3:
        case 2: {
            Path q = st.on_paths(a) ? p : reversed(p);
            int sys = q.front(), term = q.back();
            if (!st.on_paths(sys) || !terminal(term)) return Verdict::fail("leap ends of the wrong sort");
            if (leap.kind == 3) {
                if (in_far(term)) return Verdict::fail("kind 3 terminal inside the far shell");
                if (len != dvp[term]) return Verdict::fail("kind 3 leap is not a geodesic to the system");
                return Verdict::pass();
            }
            if (!in_far(term)) return Verdict::fail("kind 2 terminal outside the far shell");
            if (static_cast<std::int64_t>(len) <= c2) return Verdict::fail("kind 2 leap too short");
            for (int i = static_cast<int>(c2) + 1; i < len; ++i)
                if (!in_far(q[i])) return Verdict::fail("kind 2 leap interior leaves the far shell");
            return Verdict::pass();
        }
        case 1: {
            if (!st.on_paths(a) || !st.on_paths(b)) return Verdict::fail("kind 1 leap end off the system");
            if (static_cast<std::int64_t>(len) < 2 * c2) return Verdict::fail("kind 1 leap too short");
            for (std::int64_t i = c2 + 1; i < len - c2; ++i)
                if (!in_far(p[i])) return Verdict::fail("kind 1 leap middle leaves the far shell");
            return Verdict::pass();
        }
        default: return Verdict::fail("unknown leap kind");
    }
}

Barrier widen_barrier(const Barrier& q, std::int64_t budget, const Setting& st) {
    Barrier out;
    for (int h = 0; h < st.k(); ++h) {
        auto [lo, hi] = q.span[h];
        const std::int64_t len = st.length(h);
        std::int64_t nhi = std::min(len, std::max<std::int64_t>(hi, sat_add(lo, budget)));
        std::int64_t nlo = std::max<std::int64_t>(0, nhi - budget);
        out.span.emplace_back(static_cast<int>(std::min<std::int64_t>(nlo, lo)), static_cast<int>(nhi));
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------- solver

namespace {

struct Context {
    const TableProvider& table;
    int d;
    std::vector<std::string>& trace;
};

void note(Context& ctx, int k, const std::string& msg) { ctx.trace.push_back("k=" + std::to_string(k) + ": " + msg); }

SubdivisionWitness map_witness(const SubdivisionWitness& w, const std::vector<int>& to_old) {
    SubdivisionWitness out = w;
    for (int& v : out.branch_map) v = to_old[v];
    for (auto& p : out.edge_paths)
        for (int& v : p) v = to_old[v];
    return out;
}

// Shortest piece of p between S and T with no internal terminal.
Path trim_to_terminals(const Path& p, const Mask& in_s, const Mask& in_t) {
    auto jt = std::find_if(p.begin(), p.end(), [&](int v) { return in_t[v]; });
    if (jt == p.end()) throw invariant_error("path without a T vertex");
    int j = static_cast<int>(jt - p.begin()), i = j;
    while (i >= 0 && !in_s[p[i]]) --i;
    if (i < 0) throw invariant_error("path without an S vertex before T");
    return Path(p.begin() + i, p.begin() + j + 1);
}

Path concat(Path a, const Path& b) {
    if (!a.empty() && !b.empty() && a.back() == b.front()) a.insert(a.end(), b.begin() + 1, b.end());
    else a.insert(a.end(), b.begin(), b.end());
    return a;
}

Certificate solve_rec(const Graph& g, const VertexSet& s, const VertexSet& t, int k, std::int64_t c, Context& ctx);

Certificate check_witness(const Graph& g, SubdivisionWitness w, const ConstantTable& tab, const char* where) {
    if (auto v = validate_subdivision(g, w, tab.d, tab.f_value()); !v)
        throw invariant_error(std::string(where) + " produced a subdivision longer than the table allows: " + v.reason);
    return w;
}

// Step: reduce S and T to disjoint sets by carving around a shared vertex.
Certificate shared_terminal(const Graph& g, const VertexSet& s, const VertexSet& t, int k, const ConstantTable& tab,
                            int r, Context& ctx) {
    const int d = ctx.d;
    const std::int64_t ce = tab.c_eff;
    const std::int64_t radius = sat_add(ce, sat_mul(d - 2, ce - 1));
    VertexSet a = ball(g, {r}, clamp_radius(radius, g));
    note(ctx, k, "shared terminal " + std::to_string(r) + ", carving a ball of radius " + std::to_string(radius));
    auto carved = carve(g, a, std::max<std::int64_t>(ce, 2), d);
    if (auto* w = std::get_if<SubdivisionWitness>(&carved)) return check_witness(g, std::move(*w), tab, "carve");
    VertexSet b = std::get<VertexSet>(carved);
    std::vector<int> to_old;
    Graph sub = induced_subgraph(g, set_difference(all_vertices(g), b), &to_old);
    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
    auto remap = [&](const VertexSet& x) {
        VertexSet out;
        for (int v : x)
            if (to_new[v] >= 0) out.push_back(to_new[v]);
        return normalize(out);
    };
    auto back = [&](const VertexSet& x) {
        VertexSet out;
        for (int v : x) out.push_back(to_old[v]);
        return normalize(out);
    };
    Certificate inner = solve_rec(sub, remap(s), remap(t), k - 1, sat_mul(sat_mul(ce, ce), d), ctx);
    if (auto* fp = std::get_if<FarPaths>(&inner)) {
        FarPaths out;
        for (const auto& p : fp->parts) out.parts.push_back(back(p));
        out.parts.push_back({r});
        return out;
    }
    if (auto* sep = std::get_if<Separator>(&inner)) {
        VertexSet x = back(sep->x);
        x.push_back(r);
        return Separator{normalize(x), tab.g_value()};
    }
    return check_witness(g, map_witness(std::get<SubdivisionWitness>(inner), to_old), tab, "recursion");
}

struct Anatomy {
    Path inner;          // from w to its pivot, outside the shell
    VertexSet outer;     // rest of the end segment, inside the shell
};

Certificate assemble(const Graph& g, const Setting& st, const std::vector<int>& dvp, const JumpSet& f,
                     const std::map<Pair, Leap>& leaps, const ConstantTable& tab, std::int64_t c, int k, Context& ctx);

Certificate main_case(const Graph& g, const VertexSet& s, const VertexSet& t, int k, const ConstantTable& tab,
                      Context& ctx) {
    const int n = g.vertex_count();
    const int d = ctx.d;
    Mask in_s = make_mask(n, s), in_t = make_mask(n, t);

    // k paths pairwise far apart, from one level down.
    Certificate inner = solve_rec(g, s, t, k - 1, tab.c7, ctx);
    if (auto* sep = std::get_if<Separator>(&inner)) {
        note(ctx, k, "separator inherited from the level below");
        return Separator{sep->x, tab.g_value()};
    }
    if (auto* w = std::get_if<SubdivisionWitness>(&inner)) return check_witness(g, *w, tab, "recursion");
    std::vector<Path> rough;
    for (const auto& part : std::get<FarPaths>(inner).parts) {
        Mask pm = make_mask(n, part);
        auto p = shortest_path(g, set_intersection(part, s), set_intersection(part, t), &pm);
        if (!p) throw invariant_error("far part without an S-T path");
        rough.push_back(*p);
    }

    // Near-geodesic replacements inside G minus a carved set.
    VertexSet used;
    for (const auto& p : rough) used = set_union(used, normalize(p));
    auto carved = carve(g, set_difference(all_vertices(g), used), std::max<std::int64_t>(tab.c3, 2), d);
    if (auto* w = std::get_if<SubdivisionWitness>(&carved)) return check_witness(g, std::move(*w), tab, "carve");
    Mask outside_b = make_mask(n, std::get<VertexSet>(carved));
    for (auto& x : outside_b) x = !x;
    std::vector<Path> paths;
    for (const auto& p : rough) {
        auto q = shortest_path(g, {p.front()}, {p.back()}, &outside_b);
        if (!q) throw invariant_error("carving disconnected a path from its ends");
        Path tr = trim_to_terminals(*q, in_s, in_t);
        if (auto v = detail::near_geodesic(g, tr, tab.c3, d); !v) throw invariant_error("near-geodesic: " + v.reason);
        paths.push_back(std::move(tr));
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            if (!beyond(dist(g, normalize(paths[i]), normalize(paths[j])), tab.c6))
                throw invariant_error("replacement paths closer than c6");
    note(ctx, k, "path system of " + std::to_string(paths.size()) + " near-geodesic paths");

    Setting st(n, s, t, paths);
    VertexSet vp;
    for (const auto& p : paths) vp = set_union(vp, normalize(p));
    auto dvp = bfs_distances(g, vp);

    std::map<Pair, Leap> leaps;
    JumpSet f;
    const std::int64_t c2 = tab.c2, c5 = tab.c5, c9 = tab.c9;
    for (int round = 0;; ++round) {
        auto found = find_augmenting_sequence(f, static_cast<int>(std::min<std::int64_t>(c5, n)), st);
        if (std::holds_alternative<AugmentingSequence>(found)) break;
        const Barrier bar = std::get<Barrier>(found);
        Barrier wide = detail::widen_barrier(bar, c5, st);
        VertexSet qs, a_side, b_side;
        for (int h = 0; h < st.k(); ++h) {
            auto [lo, hi] = wide.span[h];
            qs.push_back(st.path(h)[(lo + hi) / 2]);
            for (int i = 0; i < lo; ++i) a_side.push_back(st.path(h)[i]);
            for (int i = hi + 1; i <= st.length(h); ++i) b_side.push_back(st.path(h)[i]);
        }
        qs = normalize(qs);
        auto dq = bfs_distances(g, qs);
        Mask far(n);
        for (int v = 0; v < n; ++v) far[v] = beyond(dq[v], c9);
        auto lab = component_labels(g, far);
        std::vector<char> comp_s(n, 0);
        for (int v : s)
            if (lab[v] >= 0) comp_s[lab[v]] = 1;
        bool escape = std::any_of(t.begin(), t.end(), [&](int v) { return lab[v] >= 0 && comp_s[lab[v]]; });
        if (!escape) {
            note(ctx, k, "barrier round " + std::to_string(round) + " gives a separator");
            return Separator{qs, c9};
        }
        auto da = bfs_distances(g, normalize(a_side));
        auto db = bfs_distances(g, normalize(b_side));
        Mask in_x(n), in_y(n);
        for (int v = 0; v < n; ++v) {
            in_x[v] = far[v] && !beyond(da[v], c2);
            in_y[v] = far[v] && !beyond(db[v], c2);
            if (in_x[v] && in_y[v]) throw invariant_error("both barrier sides near vertex " + std::to_string(v));
        }
        auto geodesic = [&](int v) {
            auto p = shortest_path(g, {v}, vp);
            if (!p) throw invariant_error("no geodesic to the path system");
            return *p;
        };
        Leap leap;
        Pair pr;
        int s_in_y = -1, t_in_x = -1;
        for (int v : s)
            if (in_y[v]) { s_in_y = v; break; }
        for (int v : t)
            if (in_x[v]) { t_in_x = v; break; }
        if (s_in_y >= 0) {
            Path j = geodesic(s_in_y);
            leap = {3, j, -1, -1};
            pr = {s_in_y, j.back()};
        } else if (t_in_x >= 0) {
            Path j = reversed(geodesic(t_in_x));
            leap = {3, j, -1, -1};
            pr = {j.front(), t_in_x};
        } else {
            auto p = shortest_path(g, s, t, &far);
            if (!p) throw invariant_error("escape component without a path");
            const Path& pp = *p;
            int j = 0;
            while (!(in_t[pp[j]] || in_y[pp[j]])) ++j;
            int i = j - 1;
            while (i >= 0 && !(in_s[pp[i]] || in_x[pp[i]])) --i;
            if (i < 0) throw invariant_error("escape path does not start in S");
            Path q(pp.begin() + i, pp.begin() + j + 1);
            int x = q.front(), y = q.back();
            if (!in_x[x] && !in_y[y]) {
                leap = {4, q, -1, -1};
                pr = {x, y};
            } else {
                Path l = q;
                int ax = -1, by = -1;
                if (in_x[x]) {
                    Path jx = geodesic(x);
                    if (path_length(jx) != c2) throw invariant_error("tail at x does not have length c2");
                    l = concat(reversed(jx), l);
                    ax = x;
                }
                if (in_y[y]) {
                    Path jy = geodesic(y);
                    if (path_length(jy) != c2) throw invariant_error("tail at y does not have length c2");
                    l = concat(l, jy);
                    by = y;
                }
                leap = {(ax >= 0 && by >= 0) ? 1 : 2, l, ax, by};
                pr = {l.front(), l.back()};
            }
        }
        if (!jumps(pr, bar, st)) throw invariant_error("extracted leap does not jump the barrier");
        if (auto v = detail::validate_leap(g, st, dvp, leap, c2); !v) throw invariant_error("leap: " + v.reason);
        note(ctx, k, "barrier round " + std::to_string(round) + " adds a kind " + std::to_string(leap.kind) + " leap (" +
                         std::to_string(pr.first) + "," + std::to_string(pr.second) + ")");
        Leap rev{leap.kind, reversed(leap.path), leap.y, leap.x};
        leaps[pr] = leap;
        leaps[flipped(pr)] = rev;
        f.push_back(pr);
        f.push_back(flipped(pr));
        f = normalize_pairs(f);
    }
    return assemble(g, st, dvp, f, leaps, tab, tab.c_eff, k, ctx);
}

Certificate assemble(const Graph& g, const Setting& st, const std::vector<int>& dvp, const JumpSet& f,
                     const std::map<Pair, Leap>& leaps, const ConstantTable& tab, std::int64_t c, int k, Context& ctx) {
    const int n = g.vertex_count();
    const int d = ctx.d;
    const int c4 = static_cast<int>(std::min<std::int64_t>(tab.c4, n));
    const std::int64_t c1 = tab.c1, c2 = tab.c2;

    JumpSet dset = separate_all(f, c4, st);
    AugmentingSequence seq = minimize_sequence(dset, c4, st);
    const auto& ps = seq.pairs;
    const int len = static_cast<int>(ps.size());
    std::vector<Leap> lp;
    for (auto p : ps) lp.push_back(leaps.at(p));
    note(ctx, k, "separated sequence of " + std::to_string(len) + " leaps");

    if (len == 1) {
        if (lp[0].kind != 4) throw invariant_error("single-leap sequence of kind " + std::to_string(lp[0].kind));
        FarPaths out;
        for (const auto& p : st.paths()) out.parts.push_back(normalize(p));
        out.parts.push_back(normalize(lp[0].path));
        return out;
    }
    for (int i = 0; i < len; ++i) {
        bool end = i == 0 || i == len - 1;
        if (lp[i].kind == 4 || (!end && lp[i].kind != 1) || (end && lp[i].kind == 1))
            throw invariant_error("leap kinds do not fit their positions in the sequence");
    }

    auto in_v1 = [&](int v) { return beyond(dvp[v], c1); };
    Mask v1(n);
    for (int v = 0; v < n; ++v) v1[v] = in_v1(v);

    // Pieces of each leap farther than c1 from the system; contiguous by the leap shapes.
    std::vector<Path> core(len);
    for (int i = 0; i < len; ++i) {
        const Path& p = lp[i].path;
        int lo = -1, hi = -1;
        for (int j = 0; j < static_cast<int>(p.size()); ++j)
            if (in_v1(p[j])) {
                if (lo == -1) lo = j;
                else if (hi != j - 1) throw invariant_error("leap meets the shell in two pieces");
                hi = j;
            }
        if (lo >= 0) core[i].assign(p.begin() + lo, p.begin() + hi + 1);
    }

    // Hand-off vertices and their anatomy.
    std::vector<int> w_list;
    std::map<int, Anatomy> anat;
    auto describe = [&](int w, Path from_w) {
        Anatomy a;
        std::size_t cut = std::min<std::size_t>(from_w.size(), static_cast<std::size_t>(std::min<std::int64_t>(c2, n)) + 1);
        from_w.resize(cut);
        std::size_t j = 0;
        while (j < from_w.size() && !in_v1(from_w[j])) ++j;
        a.inner.assign(from_w.begin(), from_w.begin() + j);
        for (std::size_t x = j; x < from_w.size(); ++x) {
            if (!in_v1(from_w[x])) throw invariant_error("end segment re-enters the inner zone");
            a.outer.push_back(from_w[x]);
        }
        a.outer = normalize(a.outer);
        if (a.inner.empty()) throw invariant_error("hand-off vertex inside the shell");
        anat[w] = a;
    };
    for (int i = 0; i < len; ++i) {
        if (i > 0) {
            w_list.push_back(ps[i].first);
            describe(ps[i].first, lp[i].path);
        }
        if (i < len - 1) {
            w_list.push_back(ps[i].second);
            describe(ps[i].second, reversed(lp[i].path));
        }
    }
    anat[ps.front().first] = Anatomy{{ps.front().first}, {}};
    anat[ps.back().second] = Anatomy{{ps.back().second}, {}};
    std::sort(w_list.begin(), w_list.end());
    if (std::adjacent_find(w_list.begin(), w_list.end()) != w_list.end())
        throw invariant_error("hand-off vertices repeat");

    // Mated hand-off vertices and their shell connectors.
    std::vector<std::pair<int, int>> mated;
    std::map<int, int> mate;
    for (std::size_t i = 0; i < w_list.size(); ++i)
        for (std::size_t j = i + 1; j < w_list.size(); ++j)
            if (st.union_dist(w_list[i], w_list[j]) <= c4) {
                int u = w_list[i], v = w_list[j];
                if (mate.count(u) || mate.count(v)) throw invariant_error("hand-off vertex mated twice");
                mate[u] = v;
                mate[v] = u;
                mated.emplace_back(u, v);
            }
    VertexSet z;
    for (const auto& r : core) z = set_union(z, normalize(r));
    for (auto [u, v] : mated) {
        if (anat[u].outer.empty() || anat[v].outer.empty()) continue;
        auto p = shortest_path(g, anat[u].outer, anat[v].outer, &v1);
        if (p && path_length(*p) <= c) z = set_union(z, normalize(*p));
    }

    // Greedy growth paths between components of the web.
    std::vector<std::vector<int>> owners(n);
    for (std::size_t i = 0; i < w_list.size(); ++i)
        for (int v : anat[w_list[i]].outer) owners[v].push_back(static_cast<int>(i));
    Mask cur = make_mask(n, z);
    std::vector<Path> growth;
    const int c_cap = clamp_radius(c, g);
    for (;;) {
        auto lab = component_labels(g, cur);
        std::optional<Path> pick;
        int comps = 0;
        for (int v = 0; v < n; ++v) comps = std::max(comps, lab[v] + 1);
        for (int comp = 0; comp < comps && !pick; ++comp)
            for (int opt = -1; opt < static_cast<int>(w_list.size()) && !pick; ++opt) {
                auto ok = [&](int v) {
                    for (int o : owners[v])
                        if (o != opt) return false;
                    return true;
                };
                std::vector<int> dd(n, kInfinity), par(n, -1);
                std::deque<int> q;
                for (int v = 0; v < n; ++v)
                    if (lab[v] == comp && ok(v)) {
                        dd[v] = 0;
                        q.push_back(v);
                    }
                while (!q.empty() && !pick) {
                    int u = q.front();
                    q.pop_front();
                    if (dd[u] + 1 > c_cap) continue;
                    for (int w : g.neighbors(u)) {
                        if (!ok(w)) continue;
                        if (cur[w]) {
                            if (lab[w] == comp) continue;
                            Path p{w};
                            for (int x = u; x != -1; x = par[x]) p.push_back(x);
                            std::reverse(p.begin(), p.end());
                            pick = p;
                            break;
                        }
                        if (dd[w] != kInfinity) continue;
                        dd[w] = dd[u] + 1;
                        par[w] = u;
                        q.push_back(w);
                    }
                }
            }
        if (!pick) break;
        for (std::size_t j = 1; j + 1 < pick->size(); ++j) cur[(*pick)[j]] = 1;
        growth.push_back(std::move(*pick));
    }
    auto report = check_web_growth(g, z, growth, std::max<std::int64_t>(c, 2), d);
    if (report.witness) return check_witness(g, *report.witness, tab, "web growth");
    if (!report.valid) throw invariant_error("web growth left a vertex without support");
    {
        VertexSet v2;
        for (int v = 0; v < n; ++v)
            if (beyond(dvp[v], c2)) v2.push_back(v);
        auto d2 = bfs_distances(g, v2);
        const std::int64_t reach = sat_mul(d, c - 1);
        Mask in_z = make_mask(n, z);
        for (const auto& m : growth)
            for (int v : m) {
                std::int64_t allowed = in_z[v] ? reach + 1 : reach;
                if (beyond(d2[v], allowed)) throw invariant_error("growth path strays from the far shell");
            }
    }
    note(ctx, k, "web with " + std::to_string(growth.size()) + " growth paths");

    // Components, index classes and the shortcut sequence.
    auto lab = component_labels(g, cur);
    std::map<int, VertexSet> by_comp;
    std::vector<VertexSet> classes;
    std::vector<int> class_comp;
    for (int i = 0; i < len; ++i) {
        if (core[i].empty()) {
            bool end = i == 0 || i == len - 1;
            if (!end || lp[i].kind != 3 || path_length(lp[i].path) > c1)
                throw invariant_error("leap " + std::to_string(i) + " misses the shell");
            classes.push_back({i});
            class_comp.push_back(-1);
            continue;
        }
        by_comp[lab[core[i].front()]].push_back(i);
    }
    for (auto& [comp, idx] : by_comp) {
        classes.push_back(idx);
        class_comp.push_back(comp);
    }
    ShortcutResult sc = shortcut(seq, classes, st);
    std::vector<int> class_of(len, -1);
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
        for (int i : classes[ci]) class_of[i] = static_cast<int>(ci);

    std::map<Pair, VertexSet> piece;
    JumpSet short_pairs;
    for (std::size_t t = 0; t < sc.seq.pairs.size(); ++t) {
        auto [p, q] = sc.seq.pairs[t];
        auto [ia, jb] = sc.origin[t];
        int ci = class_of[ia];
        if (class_of[jb] != ci) throw invariant_error("shortcut pair spans two classes");
        Path link;
        if (class_comp[ci] < 0) {
            link = lp[ia].path;
        } else {
            int sp = anat.at(p).inner.back(), sq = anat.at(q).inner.back();
            Mask allowed(n);
            for (int v = 0; v < n; ++v) allowed[v] = lab[v] == class_comp[ci];
            allowed[sp] = allowed[sq] = 1;
            auto l = shortest_path(g, {sp}, {sq}, &allowed);
            if (!l) throw invariant_error("no link through a web component");
            link = *l;
        }
        VertexSet pc = normalize(link);
        pc = set_union(pc, normalize(anat.at(p).inner));
        pc = set_union(pc, normalize(anat.at(q).inner));
        piece[{p, q}] = pc;
        short_pairs.push_back({p, q});
    }
    short_pairs = normalize_pairs(short_pairs);
    auto routes = get_paths(short_pairs, c4, st);
    FarPaths out;
    for (const auto& r : routes) {
        VertexSet part = normalize(r);
        for (std::size_t i = 0; i + 1 < r.size(); ++i)
            if (auto it = piece.find({r[i], r[i + 1]}); it != piece.end()) part = set_union(part, it->second);
        out.parts.push_back(part);
    }
    note(ctx, k, "assembled " + std::to_string(out.parts.size()) + " far parts");
    return out;
}

Certificate solve_rec(const Graph& g, const VertexSet& s_in, const VertexSet& t_in, int k, std::int64_t c,
                      Context& ctx) {
    VertexSet s = normalize(s_in), t = normalize(t_in);
    const ConstantTable tab = ctx.table(k, c, ctx.d);
    Certificate out;
    if (k == 0) {
        auto p = shortest_path(g, s, t);
        note(ctx, 0, p ? "single path" : "no S-T path");
        if (p) out = FarPaths{{normalize(*p)}};
        else out = Separator{{}, tab.g_value()};
    } else if (c == 0) {
        note(ctx, k, "classical disjoint paths");
        auto m = menger_disjoint_paths(g, s, t, k);
        if (auto* paths = std::get_if<std::vector<Path>>(&m)) {
            FarPaths fp;
            for (const auto& p : *paths) fp.parts.push_back(normalize(p));
            out = fp;
        } else {
            out = Separator{std::get<VertexSet>(m), tab.g_value()};
        }
    } else if (auto both = set_intersection(s, t); !both.empty()) {
        out = shared_terminal(g, s, t, k, tab, both.front(), ctx);
    } else {
        out = main_case(g, s, t, k, tab, ctx);
    }
    if (auto v = verify_certificate(g, s, t, k, c, ctx.d, tab, out); !v)
        throw invariant_error("level k=" + std::to_string(k) + " certificate rejected: " + v.reason);
    return out;
}

}  // namespace

SolveReport solve(const Graph& g, const VertexSet& s, const VertexSet& t, int k, std::int64_t c, int d,
                  const SolveOptions& opts) {
    check_vertices(g, s);
    check_vertices(g, t);
    if (k < 0) throw input_error("k must be non-negative");
    if (c < 0) throw input_error("c must be non-negative");
    if (d < 2) throw input_error("d must be at least 2");
    TableProvider provider = opts.table ? opts.table : TableProvider(constants);
    SolveReport rep{Separator{}, provider(k, c, d), {}};
    Context ctx{provider, d, rep.trace};
    rep.certificate = solve_rec(g, s, t, k, c, ctx);
    return rep;
}

}  // namespace cmenger
