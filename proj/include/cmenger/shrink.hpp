#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cmenger/graph.hpp"
#include "cmenger/tree.hpp"

namespace cmenger {

/// Result of closing a seed set under bites; history[i] was the i-th bite added.
struct BiteClosure {
    VertexSet y;
    std::vector<Path> history;
};

/**
 * A bite for y: path of length in [2, l], ends in y, interior outside y, and the ends at
 * distance > 2(d-2)(l-1) inside G[y]. Returns the least end pair (u<v); for that pair the
 * shortest such path, lexicographically least among shortest. Oriented u -> v.
 */
std::optional<Path> find_bite(const Graph& g, const VertexSet& y, std::int64_t l, int d);

/// Repeated bite insertion starting from z, without the distance check.
BiteClosure bite_closure(const Graph& g, const VertexSet& z, std::int64_t l, int d);

using ClosureOutcome = std::variant<BiteClosure, SubdivisionWitness>;

/// Closure whose vertices are all within (d-2)(l-1) of z, or an (l-1)-subdivision of H_d
/// rebuilt from the bite history when some closure vertex lies farther out.
ClosureOutcome close_bites(const Graph& g, const VertexSet& z, std::int64_t l, int d);

using CarveOutcome = std::variant<VertexSet, SubdivisionWitness>;

/// B inside a with the three carve properties (d >= 3), or the witness from close_bites.
/// d = 2 returns B = a unchanged.
CarveOutcome carve(const Graph& g, const VertexSet& a, std::int64_t l, int d);

/// Every vertex of a\b within (d-2)(l-1) of V\a.
Verdict carve_bullet_near(const Graph& g, const VertexSet& a, const VertexSet& b, std::int64_t l, int d);
/// No path of length <= l with distinct nonadjacent ends outside b, interior in b, and the
/// ends more than 2(d-2)(l-1) apart in G\b.
Verdict carve_bullet_detour(const Graph& g, const VertexSet& b, std::int64_t l, int d);
/// u,v outside b with dist_G(u,v) <= l have dist_{G\b}(u,v) <= (d-2) l (l-1).
Verdict carve_bullet_distance(const Graph& g, const VertexSet& b, std::int64_t l, int d);

/// Raised by check_web_growth when a path breaks the growth discipline. index is 0-based.
struct discipline_error : input_error {
    discipline_error(std::size_t i, const std::string& why)
        : input_error("growth path " + std::to_string(i) + ": " + why), index(i) {}
    std::size_t index;
};

struct WebGrowthReport {
    enum class Reason { Bridge, ThreeComponents, Unsupported };
    std::vector<int> height;       ///< per vertex; -1 when not in the grown set
    VertexSet added;               ///< vertices outside z contributed by the paths
    std::vector<Reason> reason;    ///< parallel to `added`
    int max_height = 0;
    bool valid = true;             ///< every added vertex has a supporting reason
    std::optional<SubdivisionWitness> witness;  ///< present when some height reaches d-1
};

/// Validates a growth sequence against z and classifies every added vertex.
WebGrowthReport check_web_growth(const Graph& g, const VertexSet& z, const std::vector<Path>& m_seq,
                                 std::int64_t l, int d);

}  // namespace cmenger
