#include "doctest.h"
#include "helpers.hpp"

using namespace cmenger;
using namespace cmenger::testing;

namespace {

// Path 0..10 with a free source 20 and a free sink 21; ids 11..19 unused.
Setting crossing_setting() {
    Path p;
    for (int i = 0; i <= 10; ++i) p.push_back(i);
    return Setting(22, {0, 20}, {10, 21}, {p});
}

Barrier first_vertices(const Setting& st) {
    Barrier q;
    q.span.assign(st.k(), {0, 0});
    return q;
}

}  // namespace

TEST_CASE("setting validation") {
    CHECK_THROWS_AS(Setting(4, {0}, {0}, {}), input_error);
    CHECK_THROWS_AS(Setting(4, {0}, {3}, {{0, 1}, {1, 3}}), input_error);
    CHECK_THROWS_AS(Setting(4, {0, 1}, {3}, {{0, 1, 3}}), input_error);
    CHECK_THROWS_AS(Setting(4, {0}, {3}, {{3, 1, 0}}), input_error);
    CHECK_THROWS_AS(Setting(4, {0}, {3}, {{0}}), input_error);
    CHECK_THROWS_AS(Setting(4, {0}, {5}, {}), input_error);
    Setting st(5, {0, 4}, {3}, {{0, 1, 2, 3}});
    CHECK(st.k() == 1);
    CHECK(st.free_source(4));
    CHECK_FALSE(st.free_source(0));
    CHECK(st.union_dist(0, 3) == 3);
    CHECK(st.union_dist(0, 4) == kInfinity);
    CHECK(st.union_dist(4, 4) == kInfinity);
    CHECK(st.admissible({4, 2}));
    CHECK_FALSE(st.admissible({2, 2}));
    Setting sw = st.swapped();
    CHECK(sw.path(0) == Path{3, 2, 1, 0});
    CHECK(sw.free_sink(4));
}

TEST_CASE("jumps") {
    Setting st(6, {0, 4}, {3, 5}, {{0, 1, 2, 3}});
    Barrier q{{{1, 2}}};
    CHECK(jumps({4, 5}, q, st));
    CHECK(jumps({0, 3}, q, st));
    CHECK_FALSE(jumps({1, 3}, q, st));
    CHECK_FALSE(jumps({4, 2}, q, st));
    CHECK_FALSE(jumps({3, 0}, q, st));
    Setting fig = worked_example_setting();
    CHECK(jumps({16, 12}, first_vertices(fig), fig));
    CHECK_THROWS_AS(jumps({4, 4}, q, st), input_error);
}

TEST_CASE("find_augmenting_sequence fixtures") {
    Setting st(6, {0, 4}, {3, 5}, {{0, 1, 2, 3}});
    auto direct = find_augmenting_sequence({{4, 5}}, 1, st);
    REQUIRE(std::holds_alternative<AugmentingSequence>(direct));
    CHECK(std::get<AugmentingSequence>(direct).pairs == std::vector<Pair>{{4, 5}});

    auto none = find_augmenting_sequence({}, 2, st);
    REQUIRE(std::holds_alternative<Barrier>(none));
    CHECK(std::get<Barrier>(none) == first_vertices(st));

    Setting fig = worked_example_setting();
    auto seq = find_augmenting_sequence(normalize_pairs(worked_example_pairs()), 2, fig);
    REQUIRE(std::holds_alternative<AugmentingSequence>(seq));
    CHECK(std::get<AugmentingSequence>(seq).pairs == worked_example_pairs());
    CHECK(validate_sequence(std::get<AugmentingSequence>(seq), fig));
}

TEST_CASE("an unjumped barrier really is unjumped") {
    Lcg rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        Setting st = random_setting(rng, 1 + rng.below(2), 8, 1, 1);
        int c = rng.below(3);
        JumpSet f = random_pairs(rng, st, rng.below(8));
        auto out = find_augmenting_sequence(f, c, st);
        if (auto* q = std::get_if<Barrier>(&out)) {
            CHECK(validate_barrier(*q, c, st));
            for (auto p : f) CHECK_FALSE(jumps(p, *q, st));
        } else {
            const auto& s = std::get<AugmentingSequence>(out);
            CHECK(validate_sequence(s, st));
            for (auto p : s.pairs) CHECK(std::binary_search(f.begin(), f.end(), p));
        }
    }
}

TEST_CASE("is_jumping on the example") {
    Setting fig = worked_example_setting();
    JumpSet f = normalize_pairs(worked_example_pairs());
    CHECK(is_jumping(f, 2, fig).jumping);
    auto at5 = is_jumping(f, 5, fig);
    CHECK_FALSE(at5.jumping);
    CHECK(at5.jumping == exhaustive_is_jumping(f, 5, fig).jumping);
    REQUIRE(at5.barrier);
    CHECK(validate_barrier(*at5.barrier, 5, fig));
    auto empty = is_jumping({}, 1, fig);
    CHECK_FALSE(empty.jumping);
    CHECK(*empty.barrier == first_vertices(fig));
}

TEST_CASE("minimize_sequence") {
    Setting st(6, {0, 4}, {3, 5}, {{0, 1, 2, 3}});
    CHECK(minimize_sequence({{0, 3}, {4, 2}, {4, 5}, {1, 5}}, 0, st).pairs.size() == 1);
    Setting fig = worked_example_setting();
    auto m = minimize_sequence(normalize_pairs(worked_example_pairs()), 2, fig);
    CHECK(m.pairs.size() == 7);
    CHECK(m.pairs == worked_example_pairs());
    CHECK(check_minimal_order(m, fig));
    try {
        minimize_sequence(normalize_pairs(worked_example_pairs()), 3, fig);
        FAIL("expected not_jumping_error");
    } catch (const not_jumping_error& e) {
        CHECK(validate_barrier(e.barrier, 3, fig));
    }
}

TEST_CASE("the example is not 1-separated") {
    Setting fig = worked_example_setting();
    JumpSet f = normalize_pairs(worked_example_pairs());
    CHECK(fig.union_dist(1, 2) == 1);
    CHECK_FALSE(is_separated(f, 1, fig));
    CHECK(is_separated(f, 0, fig));
}

TEST_CASE("separate_tops") {
    Setting fig = worked_example_setting();
    JumpSet f = normalize_pairs(worked_example_pairs());
    JumpSet d0 = separate_tops(f, 2, 0, fig);
    CHECK(is_jumping(d0, 2, fig).jumping);
    JumpSet d = separate_tops(f, 1, 1, fig);
    CHECK(is_jumping(d, 1, fig).jumping);
    for (auto x : d)
        for (auto y : d)
            if (x != y) CHECK(fig.union_dist(x.second, y.second) >= 2);
    Setting st(6, {0, 4}, {3, 5}, {{0, 1, 2, 3}});
    CHECK(separate_tops({{4, 5}}, 1, 1, st) == JumpSet{{4, 5}});
    CHECK_THROWS_AS(separate_tops(f, 2, 2, fig), not_jumping_error);
}

TEST_CASE("separate_all") {
    Setting fig = worked_example_setting();
    JumpSet f = normalize_pairs(worked_example_pairs());
    JumpSet d = separate_all(f, 0, fig);
    CHECK(is_jumping(d, 0, fig).jumping);
    CHECK(is_separated(d, 0, fig));
    for (auto p : d) CHECK(std::binary_search(f.begin(), f.end(), p));
    CHECK_THROWS_AS(separate_all(f, 1, fig), not_jumping_error);

    Lcg rng(41);
    int runs = 0;
    for (int trial = 0; trial < 200 && runs < 30; ++trial) {
        Setting st = random_setting(rng, 2, 24, 1, 1);
        auto seq = random_sequence(rng, st, 5, 4);
        if (seq.empty()) continue;
        JumpSet dense = random_pairs(rng, st, 20);
        for (auto p : seq) dense.push_back(p);
        dense = normalize_pairs(dense);
        JumpSet out = separate_all(dense, 1, st);
        CHECK(is_jumping(out, 1, st).jumping);
        CHECK(is_separated(out, 2, st));
        ++runs;
    }
    CHECK(runs == 30);
}

TEST_CASE("get_paths fixtures") {
    Setting none(2, {0}, {1}, {});
    auto one = get_paths({{0, 1}}, 3, none);
    CHECK(one == std::vector<Path>{{0, 1}});

    Setting st = crossing_setting();
    auto paths = get_paths({{2, 21}, {20, 8}}, 2, st);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0] == Path{20, 8, 9, 10});
    CHECK(paths[1] == Path{0, 1, 2, 21});
    CHECK(check_far_in_union(paths, 2, st));
    CHECK_THROWS_AS(get_paths({{2, 21}, {20, 8}, {3, 21}}, 2, st), input_error);
}

TEST_CASE("shortcut") {
    Setting fig = worked_example_setting();
    AugmentingSequence seq{worked_example_pairs(), 2};
    auto same = shortcut(seq, {{0}, {1}, {2}, {3}, {4}, {5}, {6}}, fig);
    CHECK(same.seq == seq);
    auto all = shortcut(seq, {{0, 1, 2, 3, 4, 5, 6}}, fig);
    CHECK(all.seq.pairs == std::vector<Pair>{{16, 17}});
    CHECK(all.origin == std::vector<std::pair<int, int>>{{0, 6}});
    auto part = shortcut(seq, {{0}, {1, 2}, {3}, {4, 5}, {6}}, fig);
    CHECK(part.seq.pairs.size() <= 5);
    CHECK(validate_sequence(part.seq, fig));
    CHECK_THROWS_AS(shortcut(seq, {{0, 1}, {1, 2, 3, 4, 5, 6}}, fig), input_error);
    CHECK_THROWS_AS(shortcut(seq, {{0, 1, 2}}, fig), input_error);
}

TEST_CASE("classical disjoint paths") {
    Graph par(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}});
    auto three = menger_disjoint_paths(par, {0, 3, 6}, {2, 5, 8}, 2);
    REQUIRE(std::holds_alternative<std::vector<Path>>(three));
    CHECK(std::get<std::vector<Path>>(three).size() == 3);

    Graph bow(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
    auto cut = menger_disjoint_paths(bow, {0, 1}, {3, 4}, 1);
    REQUIRE(std::holds_alternative<VertexSet>(cut));
    CHECK(std::get<VertexSet>(cut) == VertexSet{2});

    auto shared = max_disjoint_paths(path_graph(3), {1}, {1});
    CHECK(shared.paths == std::vector<Path>{{1}});
}
