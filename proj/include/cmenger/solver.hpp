#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cmenger/augment.hpp"
#include "cmenger/graph.hpp"
#include "cmenger/tree.hpp"

namespace cmenger {

/// Radii of the recursive construction, instantiated with equalities.
/// c_eff is the working distance (raised to 2 when k >= 1). For k = 0 every entry is zero.
struct ConstantTable {
    int k = 0;
    std::int64_t c = 0;
    int d = 0;
    std::int64_t c_eff = 0;
    std::int64_t c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6 = 0, c7 = 0, c8 = 0, c9 = 0;
    std::int64_t f_value() const { return c8; }  ///< subdivision length bound
    std::int64_t g_value() const { return c9; }  ///< separator radius
    bool operator==(const ConstantTable&) const = default;
};

/// Values saturate at 2^62.
inline constexpr std::int64_t kConstantCap = std::int64_t{1} << 62;

ConstantTable constants(int k, std::int64_t c, int d);

/// A bridge path for the path system; path runs from the pair's first vertex to its second.
struct Leap {
    int kind = 0;  ///< 1..4
    Path path;
    int x = -1;    ///< anchor at distance c2 from the first end along the path (kinds 1, 2)
    int y = -1;    ///< anchor at distance c2 from the second end (kind 1, or kind 2 oriented toward the system)
};

struct FarPaths {
    std::vector<VertexSet> parts;
    bool operator==(const FarPaths&) const = default;
};

struct Separator {
    VertexSet x;
    std::int64_t radius = 0;
    bool operator==(const Separator&) const = default;
};

using Certificate = std::variant<FarPaths, Separator, SubdivisionWitness>;

std::string certificate_kind(const Certificate& cert);

using TableProvider = std::function<ConstantTable(int k, std::int64_t c, int d)>;

struct SolveOptions {
    /// Source of the radii at every recursion level; defaults to `constants`.
    TableProvider table;
};

struct SolveReport {
    Certificate certificate;
    ConstantTable table;
    std::vector<std::string> trace;  ///< one line per construction step taken, outermost level first
};

/// Three-way certificate for (g, S, T) with parameters (k, c, d). Requires d >= 2.
/// Throws invariant_error if an internal guarantee fails.
SolveReport solve(const Graph& g, const VertexSet& s, const VertexSet& t, int k, std::int64_t c, int d,
                  const SolveOptions& opts = {});

/// Independent check of a certificate against the radii in `table`.
Verdict verify_certificate(const Graph& g, const VertexSet& s, const VertexSet& t, int k, std::int64_t c, int d,
                           const ConstantTable& table, const Certificate& cert);

namespace detail {

/// Any two vertices are close along the path or farther than c3 apart in g.
Verdict near_geodesic(const Graph& g, const Path& p, std::int64_t c3, int d);

/// Shape conditions of each leap kind; dist_to_system holds distances to the path union.
Verdict validate_leap(const Graph& g, const Setting& st, const std::vector<int>& dist_to_system, const Leap& leap,
                      std::int64_t c2);

/// Grows every span to length budget (or its whole path), keeping the original inside.
Barrier widen_barrier(const Barrier& q, std::int64_t budget, const Setting& st);

}  // namespace detail

}  // namespace cmenger
