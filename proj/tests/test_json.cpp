#include <doctest.h>

#include "divgrace/cycle.hpp"
#include "divgrace/json_io.hpp"

using namespace divgrace;
using nlohmann::json;

TEST_CASE("graph json round trip") {
    for (const auto& g : {build_caterpillar({{1, 2, 0, 3}}), build_hairy_cycle({{2, 2, 2, 2}}),
                          build_cycle(8)}) {
        auto j = graph_to_json(g);
        auto back = graph_from_json(j);
        CHECK(back == g);
        CHECK(canonical_dump(graph_to_json(back)) == canonical_dump(j));
    }
    auto corona = graph_to_json(build_corona(3, 2));
    CHECK(corona.at("lambda") == 2);
    CHECK(corona.at("t") == 3);
}

TEST_CASE("labeling json round trip") {
    auto r = cycle_d_divisible(2, 2);
    auto j = labeling_to_json(r.labeling, 2);
    j["provenance"] = provenance_to_json(r.provenance);
    auto back = labeling_from_json(j);
    CHECK(back == r.labeling);
    auto j2 = labeling_to_json(back, 2);
    j2["provenance"] = provenance_to_json(r.provenance);
    CHECK(canonical_dump(j2) == canonical_dump(j));
    CHECK(j.at("d") == 2);
    CHECK(j.at("provenance").at("c") == 4);
}

TEST_CASE("labeling json validation") {
    json bad;
    bad["graph"] = graph_to_json(build_cycle(8));
    bad["values"] = std::vector<int>{1, 2, 3};
    CHECK_THROWS_AS(labeling_from_json(bad), Error);
    CHECK_THROWS_AS(graph_from_json(json::object()), Error);
}

TEST_CASE("decomposition json round trip") {
    auto l = cycle_d_divisible(2, 2).labeling;
    auto dec = decompose(l, 2, 2);
    auto j = decomposition_to_json(dec, true);
    auto back = decomposition_from_json(j);
    CHECK(back.v == dec.v);
    CHECK(back.base_blocks.size() == dec.base_blocks.size());
    CHECK(back.blocks == dec.blocks);
    CHECK(canonical_dump(decomposition_to_json(back, true)) == canonical_dump(j));
    CHECK(verify_decomposition(back, l.host).holds);
}

TEST_CASE("dot export") {
    auto r = cycle_d_divisible(2, 2);
    auto dot = to_dot(r.labeling);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(dot.find("x1 -- y4") != std::string::npos); // closing edge
    CHECK(dot.find("label=\"4\"") != std::string::npos);
    CHECK(to_dot(build_caterpillar({{1, 1}})).find("x1_1") != std::string::npos);
}
