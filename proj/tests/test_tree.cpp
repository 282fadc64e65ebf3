#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"

#include "cmenger/tree.hpp"

using namespace cmenger;
using namespace cmenger::testing;

namespace {

Graph subdivide_all(const Graph& g, int len) {
    Instance inst;
    inst.graph = g;
    return subdivide_instance(inst, len).graph;
}

// Vertex separation number over all orders; equals path-width.
int brute_pathwidth(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<int> place(n);
        for (int i = 0; i < n; ++i) place[order[i]] = i;
        int width = 0;
        for (int i = 0; i < n; ++i) {
            int open = 0;
            for (int j = 0; j <= i; ++j) {
                int v = order[j];
                for (int w : g.neighbors(v))
                    if (place[w] > i) {
                        ++open;
                        break;
                    }
            }
            width = std::max(width, open);
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("binary trees") {
    Graph h2 = make_binary_tree(2);
    CHECK(h2.vertex_count() == 3);
    CHECK(h2.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    Graph h3 = make_binary_tree(3);
    CHECK(h3.vertex_count() == 7);
    CHECK(sorted_degrees(h3) == std::vector<int>{1, 1, 1, 1, 2, 3, 3});
    CHECK(h3.degree(0) == 2);
    Graph h4 = make_binary_tree(4);
    CHECK(h4.vertex_count() == 15);
    auto deg4 = sorted_degrees(h4);
    CHECK(std::count(deg4.begin(), deg4.end(), 1) == 8);
    CHECK_THROWS_AS(make_binary_tree(1), input_error);
    CHECK(binary_tree_size(5) == 31);
    CHECK(binary_tree_parent(6) == 2);
}

TEST_CASE("subdivision search fixtures") {
    Graph h3 = make_binary_tree(3);
    auto w = contains_subdivision(h3, 3, 1);
    REQUIRE(w);
    CHECK(validate_subdivision(h3, *w, 3, 1));
    CHECK(w->max_edge_length() == 1);

    CHECK_FALSE(contains_subdivision(path_graph(10), 3, 9));

    Graph once = subdivide_all(h3, 2);
    auto w2 = contains_subdivision(once, 3, 2);
    REQUIRE(w2);
    CHECK(validate_subdivision(once, *w2, 3, 2));
    CHECK_FALSE(contains_subdivision(once, 3, 1));
}

TEST_CASE("witness validation catches broken witnesses") {
    Graph h3 = make_binary_tree(3);
    auto w = *contains_subdivision(h3, 3, 1);
    auto bad = w;
    bad.branch_map[1] = bad.branch_map[2];
    CHECK_FALSE(validate_subdivision(h3, bad, 3, 1));
    bad = w;
    bad.edge_paths[0] = {bad.branch_map[0]};
    CHECK_FALSE(validate_subdivision(h3, bad, 3, 1));
    CHECK_FALSE(validate_subdivision(h3, w, 4, 1));
}

TEST_CASE("truncating a deeper witness") {
    Graph h4 = make_binary_tree(4);
    auto w = contains_subdivision(h4, 4, 1);
    REQUIRE(w);
    auto t = truncate_witness(*w, 3);
    CHECK(t.d == 3);
    CHECK(validate_subdivision(h4, t, 3, 1));
}

TEST_CASE("H_d contains no subdivision of H_{d+1}") {
    for (int d = 2; d <= 3; ++d) {
        Graph h = make_binary_tree(d);
        CHECK_FALSE(contains_subdivision(h, d + 1, h.vertex_count()));
    }
}

TEST_CASE("subdivision search is monotone in l") {
    Lcg rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Instance inst = gen_family(FamilyKind::subdivided_tree, {3, 3}, rng.next());
        for (int l = 1; l <= 4; ++l) {
            auto w = contains_subdivision(inst.graph, 3, l);
            if (!w) continue;
            CHECK(validate_subdivision(inst.graph, *w, 3, l));
            CHECK(validate_subdivision(inst.graph, *w, 3, l + 1));
            CHECK(contains_subdivision(inst.graph, 3, l + 1));
        }
        CHECK(contains_subdivision(inst.graph, 3, 3));
    }
}

TEST_CASE("path-width fixtures") {
    CHECK(pathwidth_exact(path_graph(5)) == 1);
    CHECK(pathwidth_exact(cycle_graph(5)) == 2);
    CHECK(brute_pathwidth(cycle_graph(5)) == 2);
    CHECK(pathwidth_exact(make_binary_tree(4)) >= 2);
    CHECK(pathwidth_exact(Graph(1)) == 0);
    CHECK(pathwidth_exact(complete_graph(5)) == 4);
    CHECK_THROWS_AS(pathwidth_exact(path_graph(kPathwidthCap + 1)), capacity_error);
}

TEST_CASE("path decomposition width check") {
    Graph p = path_graph(4);
    CHECK(path_decomposition_width(p, {{0, 1}, {1, 2}, {2, 3}}) == 1);
    CHECK_FALSE(path_decomposition_width(p, {{0, 1}, {2, 3}}));
    CHECK_FALSE(path_decomposition_width(p, {{0, 1}, {1, 2}, {0, 2, 3}}));
}

TEST_CASE("property: subset DP agrees with permutation search") {
    Lcg rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.below(7);
        Graph g = random_graph(rng, n, 1, 3);
        CHECK(pathwidth_exact(g) == brute_pathwidth(g));
    }
}
