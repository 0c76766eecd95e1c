#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divgrace/labeling.hpp"
#include "divgrace/multipartite.hpp"

namespace divgrace {

// A labeled copy of the host graph in Z_v; developing it by +1 (mod v)
// v times yields v blocks of the decomposition.
struct BaseBlock {
    std::vector<std::pair<int, int>> edges; // vertex pairs in Z_v, edge order of the host
    int shift_index = 0;                    // j in 0..n-1
};

struct Decomposition {
    int v = 0;
    int part_count = 0; // m + 1
    int part_size = 0;  // 2dn
    int n = 0;
    std::vector<BaseBlock> base_blocks;
    std::vector<std::vector<std::pair<int, int>>> blocks; // developed; may be left empty
};

// Block j maps edge [a,b] to (f(a), f(b) + j*d(m+1)) in Z_v, v = (m+1)*2dn.
// The union of the blocks' difference sets covers each admissible difference
// class exactly once.
std::vector<BaseBlock> base_blocks(const Labeling& l, int d, int n);

Decomposition develop(const std::vector<BaseBlock>& blocks, int v, int part_count, int n,
                      bool materialize = true);

// Convenience: base blocks + development in one step.
Decomposition decompose(const Labeling& l, int d, int n, bool materialize = true);

struct DecompositionReport {
    bool holds = false;
    std::vector<std::string> failures;
    std::int64_t block_count = 0;
    std::int64_t edge_count = 0;
};

// Checks every block embeds the host injectively, crosses parts only,
// partitions the multipartite edge set exactly, and is closed under +1.
DecompositionReport verify_decomposition(const Decomposition& dec,
                                         const OrderedBipartiteGraph& gamma);

} // namespace divgrace
