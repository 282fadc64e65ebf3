#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cmenger/graph.hpp"

namespace cmenger {

using Pair = std::pair<int, int>;       ///< ordered (a, b)
using JumpSet = std::vector<Pair>;      ///< sorted, duplicate-free

JumpSet normalize_pairs(JumpSet f);
Pair flipped(Pair p);

/**
 * Disjoint terminal sets S, T and k vertex-disjoint S-T paths, each with no internal terminal.
 * Path h runs from its S end (position 0) to its T end.
 */
class Setting {
public:
    /// Validates the structure over vertex ids 0..n-1; throws input_error.
    Setting(int n, VertexSet s, VertexSet t, std::vector<Path> paths);

    int vertex_count() const { return n_; }
    int k() const { return static_cast<int>(paths_.size()); }
    const VertexSet& s() const { return s_; }
    const VertexSet& t() const { return t_; }
    const std::vector<Path>& paths() const { return paths_; }
    const Path& path(int h) const { return paths_.at(h); }
    int length(int h) const { return static_cast<int>(paths_.at(h).size()) - 1; }

    bool valid(int v) const { return v >= 0 && v < n_; }
    int path_of(int v) const { return path_of_[v]; }
    int pos(int v) const { return pos_[v]; }
    bool on_paths(int v) const { return path_of_[v] >= 0; }
    bool in_s(int v) const { return side_[v] == 1; }
    bool in_t(int v) const { return side_[v] == 2; }
    bool free_source(int v) const { return in_s(v) && !on_paths(v); }  ///< S minus the path vertices
    bool free_sink(int v) const { return in_t(v) && !on_paths(v); }    ///< T minus the path vertices

    /// Distance in the union of the paths; kInfinity unless both lie on the same path.
    int union_dist(int u, int v) const;
    /// Distinct vertices, both in the union of the paths or in S or T.
    bool admissible(Pair p) const;
    /// Same system with S and T exchanged and every path reversed.
    Setting swapped() const;

private:
    int n_;
    VertexSet s_, t_;
    std::vector<Path> paths_;
    std::vector<int> path_of_, pos_;
    std::vector<char> side_;
};

/// Checks that the setting's paths are paths of g.
Verdict setting_in_graph(const Graph& g, const Setting& st);

/// One subpath per setting path, stored as inclusive positions [lo, hi].
struct Barrier {
    std::vector<std::pair<int, int>> span;
    bool operator==(const Barrier&) const = default;
};

/// Every span is a subpath of its path of length at most c.
Verdict validate_barrier(const Barrier& q, int c, const Setting& st);

struct AugmentingSequence {
    std::vector<Pair> pairs;
    int c = 0;
    bool operator==(const AugmentingSequence&) const = default;
};

/// Full sequence check (first a free in S, last b free in T, hand-offs step back at least c+1).
Verdict validate_sequence(const AugmentingSequence& seq, const Setting& st);

/// Raised when a pair set is required to be jumping at some budget and is not.
struct not_jumping_error : input_error {
    not_jumping_error(const std::string& what, Barrier b) : input_error(what), barrier(std::move(b)) {}
    Barrier barrier;
};

bool jumps(Pair p, const Barrier& q, const Setting& st);

using SequenceOrBarrier = std::variant<AugmentingSequence, Barrier>;

/// Fixpoint over furthest-reached positions; a sequence in f, or a barrier jumped by no member of f.
SequenceOrBarrier find_augmenting_sequence(const JumpSet& f, int c, const Setting& st);

struct JumpingVerdict {
    bool jumping = false;
    std::optional<Barrier> barrier;  ///< set when not jumping
};
JumpingVerdict is_jumping(const JumpSet& f, int c, const Setting& st);

/// Shortest sequence in f; ties broken by the (path, position) keys of successive b's.
/// Throws not_jumping_error if f is not c-jumping.
AugmentingSequence minimize_sequence(const JumpSet& f, int c, const Setting& st);

/// The ordering conditions a minimum-length sequence satisfies on every path.
Verdict check_minimal_order(const AugmentingSequence& seq, const Setting& st);

/// Subset of f that is p-jumping with pairwise union-distance of second coordinates above q.
JumpSet separate_tops(const JumpSet& f, int p, int q, const Setting& st);

/// Subset of f that is c-jumping and 2c-separated. Requires f to be 5c-jumping.
JumpSet separate_all(const JumpSet& f, int c, const Setting& st);

/// Pairwise union-distances among first coordinates and among second coordinates exceed l.
Verdict is_separated(const JumpSet& f, int l, const Setting& st);

/// k+1 disjoint S-T paths in the union of the paths, the leftover terminals and the pair edges.
/// Pair edges appear as consecutive vertices (a, b). Requires d_set c-jumping and 2c-separated.
std::vector<Path> get_paths(const JumpSet& d_set, int c, const Setting& st);

/// Disjointness plus no union subpath of length <= c joining two of the paths.
Verdict check_far_in_union(const std::vector<Path>& paths, int c, const Setting& st);

struct ShortcutResult {
    AugmentingSequence seq;
    std::vector<std::pair<int, int>> origin;  ///< per output pair: indices of the a and the b in the input
};

/// Collapses each class of the partition (0-based indices) to its extreme indices, recursively.
ShortcutResult shortcut(const AugmentingSequence& seq, const std::vector<VertexSet>& partition, const Setting& st);

struct DisjointPaths {
    std::vector<Path> paths;
    VertexSet cut;  ///< minimum S-T vertex cut; filled only when fewer than the requested paths exist
};

/// Up to `limit` vertex-disjoint S-T paths, each with no internal S or T vertex.
DisjointPaths max_disjoint_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int limit = kInfinity);

using MengerOutcome = std::variant<std::vector<Path>, VertexSet>;
/// k+1 vertex-disjoint S-T paths, or a cut of at most k vertices.
MengerOutcome menger_disjoint_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int k);

}  // namespace cmenger
