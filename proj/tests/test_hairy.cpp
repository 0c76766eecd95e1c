#include <doctest.h>

#include <algorithm>

#include "divgrace/hairy.hpp"
#include "divgrace/oracle.hpp"
#include "support.hpp"

using namespace divgrace;

TEST_CASE("classification of the k-th edge") {
    auto g = build_hairy_cycle({{3, 3, 0, 0, 3, 6, 0, 1, 3, 1}});
    auto cls = classify_kth_edge(g);
    CHECK(cls.tag == OddCaseTag::cycle_edge_xy);
    CHECK(cls.s == 3);
    CHECK(cls.subcase == OddCase::Sub::s4_2); // n_4 = 0 forces a re-representation

    auto g2 = build_hairy_cycle({{1, 3, 1, 3, 3, 0, 0, 3, 6, 0}});
    auto cls2 = classify_kth_edge(g2);
    CHECK(cls2.tag == OddCaseTag::cycle_edge_xy);
    CHECK(cls2.s == 3);
    CHECK(cls2.subcase == OddCase::Sub::s4_2);
    CHECK(g2.n_at(g2.t()) == 6);
    CHECK(g2.m_at(g2.t()) == 0);

    // corona k-th edge is always a cycle edge
    for (int t = 2; t <= 6; ++t)
        for (int lambda = 1; lambda <= 3; ++lambda) {
            auto cls3 = classify_kth_edge(build_corona(t, lambda));
            REQUIRE((cls3.tag == OddCaseTag::cycle_edge_xy ||
                     cls3.tag == OddCaseTag::cycle_edge_xy_prev));
            REQUIRE(cls3.s == (t % 2 == 1 ? (t + 1) / 2 : (t + 2) / 2));
        }
}

TEST_CASE("odd labeling of the ten-spine example") {
    // built directly in the form with n_t != 0, m_t = 0
    auto g = build_hairy_cycle({{1, 3, 1, 3, 3, 0, 0, 3, 6, 0}});
    auto r = odd_alpha_hairy(g);
    const int e = g.edge_count();
    CHECK(e == 30);
    CHECK(r.labeling.value(g.x_pend(5, 6)) == 2 * e - 1); // 59
    CHECK(r.labeling.value(g.y(5)) == 2 * e - 3);         // 57
    CHECK(verify_d_divisible(r.labeling, e, true).holds);

    // the original representation re-reads the cycle, then still verifies
    auto r2 = odd_alpha_hairy(build_hairy_cycle({{3, 3, 0, 0, 3, 6, 0, 1, 3, 1}}));
    CHECK(r2.provenance.representation.has_value());
    CHECK(verify_d_divisible(r2.labeling, e, true).holds);
}

TEST_CASE("pendant-from-B case picks c = 2k-1 and labels the k-th edge 2k+1") {
    auto g = build_hairy_cycle({{0, 2, 0, 0}});
    const int k = g.count_b;
    auto cls = classify_kth_edge(g);
    REQUIRE(cls.tag == OddCaseTag::pendant_from_b);
    auto r = odd_alpha_hairy(g);
    CHECK(*r.provenance.c == 2 * k - 1);
    const auto diffs = r.labeling.edge_differences();
    CHECK(diffs[static_cast<std::size_t>(k - 1)] == 2 * k + 1);
    CHECK(std::abs(diffs.back()) == 2 * k - 1); // closing edge carries c
}

TEST_CASE("odd labelings across the hairy sweep, both routes") {
    int cases[5] = {0, 0, 0, 0, 0};
    for (const auto& spec : testsupport::hairy_sweep(4, 8, 16)) {
        auto g = build_hairy_cycle(spec);
        const int e = g.edge_count();
        auto closed = odd_alpha_hairy(g, OddRoute::closed_form);
        auto rewritten = odd_alpha_hairy(g, OddRoute::construct_transform);
        REQUIRE(verify_d_divisible(closed.labeling, e, true).holds);
        REQUIRE(verify_d_divisible(rewritten.labeling, e, true).holds);
        REQUIRE(closed.labeling == rewritten.labeling);
        auto cls = classify_kth_edge(g);
        cases[static_cast<int>(cls.tag) + (cls.subcase == OddCase::Sub::s4_2 ? 1 : 0)]++;
    }
    for (int i = 0; i < 5; ++i) REQUIRE(cases[i] > 0); // every case exercised
}

TEST_CASE("case 4 with pendants at x_{s+1}: the derived gap holds") {
    int checked = 0;
    for (const auto& spec : testsupport::hairy_sweep(4, 6, 16)) {
        auto g = build_hairy_cycle(spec);
        auto cls = classify_kth_edge(g);
        if (cls.tag != OddCaseTag::cycle_edge_xy || cls.subcase != OddCase::Sub::s4_1) continue;
        const int k = g.count_b;
        auto f = standard_alpha_s(open_caterpillar(g),
                                  divisible_label_set(g.edge_count(), g.edge_count())
                                      .without(2 * k - 1));
        // removing c = 2k-1 leaves a width-4 gap just below f(y_s); the
        // B-order predecessor of y_s is x_s^{n_s} whenever n_s > 0
        const int ys = g.y(cls.s);
        if (ys == f.host.count_a) continue; // y_s opens the B order
        REQUIRE(f.value(ys - 1) + 4 == f.value(ys));
        if (g.n_at(cls.s) > 0) {
            REQUIRE(ys - 1 == g.x_pend(cls.s, g.n_at(cls.s)));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("H(2t,1) closed forms for d = 2") {
    auto h5 = h2t1_two_divisible(5);
    CHECK(h5.value(h5.host.x(1)) == 11);
    CHECK(h5.value(h5.host.y(3)) == 18);
    auto h3 = h2t1_two_divisible(3);
    CHECK(h3.value(h3.host.x_pend(1, 1)) == 10);
    for (int t : {3, 5, 7, 9, 11})
        REQUIRE(verify_d_divisible(h2t1_two_divisible(t), 2, true).holds);
    CHECK_THROWS_AS(h2t1_two_divisible(4), Error);
    CHECK_THROWS_AS(h2t1_two_divisible(1), Error);
}

TEST_CASE("candidate closing values") {
    auto p30_6 = divisibility_params(30, 6);
    CHECK(candidate_closing_values(p30_6, false) == std::pair<int, int>{17, 19});
    auto p30_5 = divisibility_params(30, 5);
    CHECK(candidate_closing_values(p30_5, false) == std::pair<int, int>{17, 18});
    auto p8_1 = divisibility_params(8, 1);
    CHECK(candidate_closing_values(p8_1, true) == std::pair<int, int>{4, 5});
}

TEST_CASE("the H(10,2) corona at d = 6 follows the published chain") {
    auto r = corona_d_divisible(5, 2, 6);
    CHECK(*r.provenance.c == 17);
    CHECK(r.provenance.closing_trace == std::vector<int>{19, 18, 17});
    REQUIRE(r.provenance.operations.size() == 2);
    CHECK(r.provenance.operations[0] == TransformRequest{TransformOp::O1, 3, std::nullopt});
    CHECK(r.provenance.operations[1] == TransformRequest{TransformOp::O5, 4, std::nullopt});
    CHECK(verify_d_divisible(r.labeling, 6, true).holds);
    const auto diffs = r.labeling.edge_differences();
    CHECK(diffs.back() == 17); // the closing edge [x_1,y_5] carries 17
}

TEST_CASE("even-t coronas extend directly") {
    auto r = corona_d_divisible(4, 2, 3); // e = 24, c2 = (24+3+1)/2 = 14
    CHECK(r.provenance.construction == "corona/even-t");
    CHECK(r.provenance.operations.empty());
    CHECK(*r.provenance.c == 14);
    CHECK(verify_d_divisible(r.labeling, 3, true).holds);
}

TEST_CASE("frozen H(6,3) labeling at d = 4") {
    auto r = corona_d_divisible(3, 3, 4);
    CHECK(r.provenance.construction == "corona/m6-t3-direct");
    CHECK(verify_d_divisible(r.labeling, 4, true).holds);
}

TEST_CASE("inadmissible divisors are rejected") {
    CHECK_THROWS_AS(corona_d_divisible(3, 1, 5), Error);
}

TEST_CASE("corona sweep with mv-label accounting") {
    for (int t = 2; t <= 6; ++t)
        for (int lambda = 1; lambda <= 3; ++lambda) {
            const int e = 2 * t * (lambda + 1);
            for (int d : testsupport::divisors_of(e)) {
                auto r = corona_d_divisible(t, lambda, d);
                REQUIRE(verify_d_divisible(r.labeling, d, true).holds);

                if (d == e || t % 2 == 0 || d % 2 == 0) continue;
                // odd t, odd d: the removal of c1 leaves the mv-labels split
                // around evenly, d_B in {(d-1)/2, (d+1)/2}
                auto p = divisibility_params(e, d);
                auto [c1, c2] = candidate_closing_values(p, false);
                CaterpillarSpec spec;
                spec.pendants.assign(static_cast<std::size_t>(2 * t), lambda);
                auto f = standard_alpha_s(build_caterpillar(spec),
                                          divisible_label_set(e, d).without(c1));
                const int d_b = static_cast<int>(mv_labels(f, Side::B).size());
                REQUIRE((d_b == (d - 1) / 2 || d_b == (d + 1) / 2));
                // closing difference = |B| + d_B
                REQUIRE(closing_difference(f) == f.host.count_b + d_b);
            }
        }
}

TEST_CASE("closing difference accounting holds on cycle-style standards") {
    // k + d_B identity for standard labelings of opened hairy cycles
    for (const auto& spec : testsupport::hairy_sweep(3, 4, 14)) {
        auto h = build_hairy_cycle(spec);
        const int e = h.edge_count();
        for (int d : testsupport::divisors_of(e)) {
            auto full = divisible_label_set(e, d);
            const int c = full.values[full.values.size() / 2];
            if (c == 1) continue;
            auto f = standard_alpha_s(open_caterpillar(h), full.without(c));
            REQUIRE(closing_difference(f) ==
                    h.count_b + static_cast<int>(mv_labels(f, Side::B).size()));
        }
    }
}
