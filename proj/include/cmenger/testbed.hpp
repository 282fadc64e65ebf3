#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmenger/augment.hpp"
#include "cmenger/graph.hpp"

namespace cmenger {

struct Instance {
    Graph graph;
    VertexSet s, t;
    int k = 1;
    std::int64_t c = 1;
    int d = 3;
    std::string label = "instance";
    std::optional<std::uint64_t> seed;
    std::vector<VertexSet> bags;  ///< generating path decomposition, when the generator has one; not serialized

    bool operator==(const Instance& o) const {
        return graph == o.graph && s == o.s && t == o.t && k == o.k && c == o.c && d == o.d && label == o.label &&
               seed == o.seed;
    }
};

/// 64-bit linear congruential stream: x <- x * 6364136223846793005 + 1442695040888963407, output x >> 33.
class Lcg {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint32_t next() {
        state_ = state_ * kMultiplier + kIncrement;
        return static_cast<std::uint32_t>(state_ >> 33);
    }
    /// Uniform-ish value in [0, n); n >= 1.
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint32_t>(n)); }
    /// True with probability num/den.
    bool chance(int num, int den) { return below(den) < num; }
    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

inline constexpr int kOracleVertexCap = 25;
inline constexpr int kOracleFamilyCap = 4;
inline constexpr std::uint64_t kOracleSubsetCap = 5'000'000;

/// m S-T paths pairwise farther than c apart, or absent; exhaustive over induced paths with no
/// internal terminal. Throws capacity_error past the caps unless force is set.
std::optional<std::vector<Path>> oracle_far_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int m,
                                                  int c, bool force = false);

/// Same search, but closeness is measured in `metric` (same vertex ids) instead of g.
std::optional<std::vector<Path>> oracle_far_paths_metric(const Graph& g, const Graph& metric, const VertexSet& s,
                                                         const VertexSet& t, int m, int c, bool force = false);

/// Smallest X (then lexicographically least) with |X| <= k whose radius-r balls meet every S-T path.
std::optional<VertexSet> oracle_separator(const Graph& g, const VertexSet& s, const VertexSet& t, int k, int r,
                                          bool force = false);

/// Every barrier with spans of length <= c, checked one by one.
JumpingVerdict exhaustive_is_jumping(const JumpSet& f, int c, const Setting& st);

Instance gen_worked_example();
/// The two setting paths of the example.
std::vector<Path> worked_example_paths();
/// The seven pairs of the example, in sequence order.
std::vector<Pair> worked_example_pairs();
Setting worked_example_setting();

enum class FamilyKind { binary_tree, subdivided_tree, grid, caterpillar, random_bounded_pw };

FamilyKind family_from_name(const std::string& name);
std::string family_name(FamilyKind kind);

/**
 * Parameters per kind:
 *   binary_tree [d]; subdivided_tree [d, l]; grid [rows, cols]; caterpillar [spine, legs];
 *   random_bounded_pw [w, n] or [w, n, density percent].
 */
Instance gen_family(FamilyKind kind, const std::vector<int>& params, std::uint64_t seed);

/// Every edge becomes a path of n edges; original ids kept, new vertices appended; c scaled by n.
Instance subdivide_instance(const Instance& inst, int n);

}  // namespace cmenger
