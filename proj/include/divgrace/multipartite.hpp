#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divgrace/error.hpp"

namespace divgrace {

// K_{partCount x partSize} on vertex set Z_v, v = partCount * partSize,
// with parts the residue classes modulo partCount.
struct MultipartiteSpec {
    int part_count = 0;
    int part_size = 0;

    int v() const { return part_count * part_size; }
    void validate() const;
};

std::int64_t multipartite_edge_count(const MultipartiteSpec& spec);

// All pairs {u,w} with u != w (mod partCount), u < w, in lexicographic order.
std::vector<std::pair<int, int>> multipartite_edges(const MultipartiteSpec& spec);

} // namespace divgrace
