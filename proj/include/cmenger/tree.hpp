#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cmenger/graph.hpp"

namespace cmenger {

/**
 * Embedding of a subdivision of the uniform binary tree H_d into a host graph.
 *
 * H_d uses heap numbering: root 0, children of v are 2v+1 and 2v+2.
 * edge_paths[c-1] is the host path for the tree edge (parent(c), c), oriented parent -> child.
 */
struct SubdivisionWitness {
    int d = 0;
    std::vector<int> branch_map;
    std::vector<Path> edge_paths;

    /// Longest edge path; the witness is an l-subdivision for every l >= this.
    int max_edge_length() const;
    bool operator==(const SubdivisionWitness&) const = default;
};

int binary_tree_size(int d);
inline int binary_tree_parent(int v) { return (v - 1) / 2; }

/// H_d: 2^d - 1 vertices, root 0 of degree two. Throws input_error for d < 2.
Graph make_binary_tree(int d);

/// Checks that w is an l-subdivision of H_d in g (distinct branch images, paths of length 1..l,
/// interiors pairwise disjoint and disjoint from branch images).
Verdict validate_subdivision(const Graph& g, const SubdivisionWitness& w, int d, std::int64_t l);

/// The sub-witness for H_d inside a witness for a deeper tree (heap prefixes coincide).
SubdivisionWitness truncate_witness(const SubdivisionWitness& w, int d);

/// Exhaustive search for an l-subdivision of H_d with an explicit image for every tree vertex.
std::optional<SubdivisionWitness> contains_subdivision(const Graph& g, int d, int l);

inline constexpr int kPathwidthCap = 18;

/// Exact path-width via the vertex separation subset DP. capacity_error above kPathwidthCap vertices.
int pathwidth_exact(const Graph& g);

/// Width of a bag sequence (max bag size - 1) if it is a valid path decomposition of g, else nullopt.
std::optional<int> path_decomposition_width(const Graph& g, const std::vector<VertexSet>& bags);

}  // namespace cmenger
