#include <doctest.h>

#include <algorithm>

#include "divgrace/cycle.hpp"
#include "divgrace/oracle.hpp"
#include "support.hpp"

using namespace divgrace;

TEST_CASE("single edge") {
    auto k2 = build_caterpillar({{0, 0}});
    auto all = search_labelings(k2, LabelSet({1}), false);
    CHECK(all.size() == 2); // (0,1) and (1,0)
    auto alpha = search_labelings(k2, LabelSet({1}), true);
    REQUIRE(alpha.size() == 1);
    CHECK(alpha[0].values == std::vector<int>{0, 1});
}

TEST_CASE("oracle contains the standard labeling") {
    auto g = build_caterpillar({{1, 1}});
    const LabelSet s({1, 2, 3});
    auto std_l = standard_alpha_s(g, s);
    auto found = search_labelings(g, s, true);
    CHECK(std::find(found.begin(), found.end(), std_l) != found.end());
    for (const auto& l : found) REQUIRE(verify_alpha_s(l, s).holds);
}

TEST_CASE("oracle confirms the cycle construction") {
    auto want = cycle_d_divisible(2, 2).labeling;
    auto found = search_labelings(build_cycle(8), divisible_label_set(8, 2), true);
    CHECK(std::find(found.begin(), found.end(), want) != found.end());
}

TEST_CASE("oracle rejects oversized instances") {
    CHECK_THROWS_AS(search_labelings(build_corona(6, 1), divisible_label_set(24, 2), true),
                    Error);
}

TEST_CASE("oracle results are deterministic and relabel-invariant") {
    const LabelSet s = divisible_label_set(4, 2);
    auto a = search_labelings(build_caterpillar({{1, 0, 1}}), s, true);
    auto b = search_labelings(build_caterpillar({{1, 0, 1}}), s, true);
    CHECK(a == b);
}

TEST_CASE("node budget reports exhaustion") {
    SearchOptions opt;
    opt.require_alpha = true;
    opt.node_budget = 3;
    int count = 0;
    auto outcome = search_labelings_visit(build_cycle(8), divisible_label_set(8, 2), opt,
                                          [&count](const Labeling&) {
                                              ++count;
                                              return true;
                                          });
    CHECK(outcome == SearchOutcome::budget_exhausted);
}

TEST_CASE("transform sequence search") {
    // the H(10,2) chain: some verified sequence from 19 to 17 must exist
    CaterpillarSpec spec;
    spec.pendants.assign(10, 2);
    auto g = build_caterpillar(spec);
    auto f = standard_alpha_s(g, divisible_label_set(30, 6).without(17));
    REQUIRE(closing_difference(f) == 19);

    auto seq = search_transform_sequence(f, 17, 3);
    REQUIRE(seq.has_value());
    auto out = compose_transforms(f, *seq);
    CHECK(closing_difference(out) == 17);
    CHECK(verify_alpha_s(out, LabelSet(f.sorted_differences())).holds);

    // reaching the current value needs no operations
    auto empty = search_transform_sequence(f, 19, 3);
    REQUIRE(empty.has_value());
    CHECK(empty->empty());

    // an unreachable target comes back empty-handed
    CHECK_FALSE(search_transform_sequence(f, 23, 2).has_value());
}
