#include <doctest.h>

#include <algorithm>
#include <random>

#include "divgrace/labeling.hpp"
#include "support.hpp"

using namespace divgrace;

TEST_CASE("divisible label sets") {
    CHECK(divisible_label_set(12, 6).values ==
          std::vector<int>{1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17});
    CHECK(divisible_label_set(7, 1).values == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(divisible_label_set(5, 5).values == std::vector<int>{1, 3, 5, 7, 9});
    CHECK_THROWS_AS(divisible_label_set(10, 3), Error);

    // decomposes into d runs of m consecutive values
    const auto p = divisibility_params(12, 4);
    CHECK(p.m == 3);
    CHECK(p.delta_prime == std::vector<int>{4, 8, 12});
    for (int i = 0; i < 4; ++i)
        for (int off = 1; off <= 3; ++off)
            CHECK(divisible_label_set(12, 4).contains(4 * i + off));
}

TEST_CASE("label set validation") {
    CHECK_THROWS_AS(LabelSet({0, 1}), Error);
    CHECK_THROWS_AS(LabelSet({1, 1}), Error);
    CHECK_THROWS_AS(LabelSet({2, 1}), Error);
    CHECK(LabelSet({1, 3, 5}).without(3).values == std::vector<int>{1, 5});
    CHECK_THROWS_AS(LabelSet({1, 3, 5}).without(2), Error);
}

TEST_CASE("standard labeling hand traces") {
    auto l = standard_alpha_s(build_caterpillar({{1, 1}}), LabelSet({1, 2, 3}));
    CHECK(l.values == std::vector<int>{1, 0, 2, 3}); // x1, y1^1, x1^1, y1

    auto path = standard_alpha_s(build_caterpillar({{0, 0, 0, 0}}), LabelSet({1, 2, 3}));
    CHECK(path.values == std::vector<int>{1, 0, 2, 3}); // x1, x2, y1, y2

    auto odd3 = standard_alpha_s(build_caterpillar({{1, 1}}), LabelSet({1, 3, 5}));
    CHECK(odd3.values == std::vector<int>{2, 0, 3, 5});
    CHECK(odd3.sorted_differences() == std::vector<int>{1, 3, 5});

    CHECK_THROWS_AS(standard_alpha_s(build_caterpillar({{1, 1}}), LabelSet({1, 2})), Error);
    CHECK_THROWS_AS(standard_alpha_s(build_cycle(8), LabelSet({1, 2, 3, 4, 5, 6, 7, 8})), Error);
}

TEST_CASE("verify_alpha_s detects mutations") {
    const LabelSet s({1, 2, 3});
    auto l = standard_alpha_s(build_caterpillar({{1, 1}}), s);
    CHECK(verify_alpha_s(l, s).holds);

    auto swapped = l;
    std::swap(swapped.values[0], swapped.values[1]); // two A labels
    auto rep = verify_alpha_s(swapped, s);
    CHECK_FALSE(rep.holds);
    CHECK_FALSE(rep.failures.empty());

    auto dup = l;
    dup.values[0] = dup.values[1];
    CHECK_FALSE(verify_alpha_s(dup, s).holds);

    auto high = l;
    high.values[3] = 9;
    CHECK_FALSE(verify_alpha_s(high, s).holds);
}

TEST_CASE("verify_d_divisible") {
    Labeling graceful{build_caterpillar({{1, 1}}), {1, 0, 2, 3}};
    CHECK(verify_d_divisible(graceful, 1, true).holds);

    Labeling odd{build_caterpillar({{1, 1}}), {2, 0, 3, 5}};
    CHECK(verify_d_divisible(odd, 3, true).holds);
    CHECK_THROWS_AS(verify_d_divisible(odd, 2, true), Error); // 2 does not divide 3

    // separation is side-agnostic: complement swaps the low part
    auto comp = complement_labeling(odd, 5);
    CHECK(verify_d_divisible(comp, 3, true).holds);
}

TEST_CASE("mv labels") {
    Labeling l{build_cycle(8), {5, 4, 1, 0, 6, 7, 8, 9}};
    auto open = open_caterpillar(l.host);
    Labeling path{open, l.values};
    CHECK(mv_labels(path, Side::A) == std::vector<int>{2, 3});
    CHECK(mv_labels(path, Side::B) == std::vector<int>{});

    Labeling contiguous{build_caterpillar({{1, 1}}), {1, 0, 2, 3}};
    CHECK(mv_labels(contiguous, Side::A).empty());
    CHECK(mv_labels(contiguous, Side::B).empty());
}

TEST_CASE("closing difference and extension") {
    auto open = open_caterpillar(build_cycle(8));
    auto f = standard_alpha_s(open, divisible_label_set(8, 2).without(4));
    CHECK(closing_difference(f) == 4);
    auto closed = extend_with_closing_edge(f, 4);
    CHECK(closed.host.kind == GraphKind::cycle);
    CHECK(closed.sorted_differences() == divisible_label_set(8, 2).values);
    CHECK(verify_d_divisible(closed, 2, true).holds);
    CHECK_THROWS_AS(extend_with_closing_edge(f, 5), Error);

    Labeling odd_spine{build_caterpillar({{2, 0, 1}}), {5, 0, 1, 3, 2, 4}};
    CHECK_THROWS_AS(closing_difference(odd_spine), Error);
}

TEST_CASE("complement labeling") {
    auto c8 = standard_alpha_s(open_caterpillar(build_cycle(8)),
                               divisible_label_set(8, 2).without(4));
    auto closed = extend_with_closing_edge(c8, 4);
    auto comp = complement_labeling(closed, 9);
    CHECK(comp.sorted_differences() == closed.sorted_differences());
    CHECK(complement_labeling(comp, 9) == closed); // involution
    CHECK(comp.min_b() < comp.max_a());            // parts swapped sides
    CHECK_THROWS_AS(complement_labeling(closed, 5), Error);
}

TEST_CASE("standard labeling: random label sets stay valid") {
    std::mt19937 rng(20250809);
    const auto specs = testsupport::caterpillar_sweep(4, 6, 12);
    std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
    for (int trial = 0; trial < 150; ++trial) {
        const auto& spec = specs[pick(rng)];
        auto g = build_caterpillar(spec);
        const int e = g.edge_count();
        std::vector<int> pool(static_cast<std::size_t>(2 * e));
        for (int i = 0; i < 2 * e; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(static_cast<std::size_t>(e));
        std::sort(pool.begin(), pool.end());
        const LabelSet s(pool);
        auto l = standard_alpha_s(g, s);
        REQUIRE(verify_alpha_s(l, s).holds);

        // gap accounting: interior holes of S turn into mv-labels
        const int holes = s.max_value() - s.size() - (s.values.front() - 1);
        REQUIRE(static_cast<int>(mv_labels(l, Side::A).size() + mv_labels(l, Side::B).size()) ==
                holes);

        // monotone part labels along the canonical orders
        for (int id = 1; id < g.count_a; ++id) REQUIRE(l.value(id) < l.value(id - 1));
        for (int id = g.count_a + 1; id < g.vertex_count(); ++id)
            REQUIRE(l.value(id) > l.value(id - 1));
    }
}

TEST_CASE("every caterpillar takes every admissible divisor") {
    for (const auto& spec : testsupport::caterpillar_sweep(4, 5, 10)) {
        auto g = build_caterpillar(spec);
        for (int d : testsupport::divisors_of(g.edge_count())) {
            auto l = standard_alpha_s(g, divisible_label_set(g.edge_count(), d));
            REQUIRE(verify_d_divisible(l, d, true).holds);
        }
    }
}
