#include "divgrace/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace divgrace {

std::vector<BaseBlock> base_blocks(const Labeling& l, int d, int n) {
    if (n < 1) fail(Errc::invalid_request, "n must be positive");
    const VerifyReport check = verify_d_divisible(l, d, true);
    if (!check.holds)
        fail(Errc::invalid_labeling, "labeling is not a d-divisible alpha-labeling");
    if (!(l.max_a() < l.min_b()))
        fail(Errc::invalid_labeling, "expected part A on the low label side");

    const int e = l.host.edge_count();
    const int m = e / d;
    const int period = d * (m + 1);
    std::vector<BaseBlock> out;
    for (int j = 0; j < n; ++j) {
        BaseBlock b;
        b.shift_index = j;
        for (const auto& [a, bb] : l.host.edges)
            b.edges.emplace_back(l.value(a), l.value(bb) + j * period);
        for (const auto& [u, w] : b.edges)
            if ((w - u) % (m + 1) == 0)
                fail(Errc::internal_contradiction, "block difference divisible by m+1");
        out.push_back(std::move(b));
    }
    return out;
}

Decomposition develop(const std::vector<BaseBlock>& blocks, int v, int part_count, int n,
                      bool materialize) {
    Decomposition dec;
    dec.v = v;
    dec.part_count = part_count;
    dec.part_size = v / part_count;
    dec.n = n;
    dec.base_blocks = blocks;
    if (materialize) {
        dec.blocks.reserve(static_cast<std::size_t>(v) * blocks.size());
        for (const BaseBlock& b : blocks)
            for (int shift = 0; shift < v; ++shift) {
                std::vector<std::pair<int, int>> copy;
                copy.reserve(b.edges.size());
                for (const auto& [u, w] : b.edges)
                    copy.emplace_back((u + shift) % v, (w + shift) % v);
                dec.blocks.push_back(std::move(copy));
            }
    }
    return dec;
}

Decomposition decompose(const Labeling& l, int d, int n, bool materialize) {
    const auto blocks = base_blocks(l, d, n); // validates d and the labeling
    const int m = l.host.edge_count() / d;
    const int v = (m + 1) * 2 * d * n;
    return develop(blocks, v, m + 1, n, materialize);
}

namespace {

std::vector<std::vector<std::pair<int, int>>> all_blocks(const Decomposition& dec) {
    if (!dec.blocks.empty()) return dec.blocks;
    return develop(dec.base_blocks, dec.v, dec.part_count, dec.n, true).blocks;
}

std::vector<std::pair<int, int>> normalized(const std::vector<std::pair<int, int>>& block) {
    std::vector<std::pair<int, int>> out;
    out.reserve(block.size());
    for (auto [u, w] : block) out.emplace_back(std::min(u, w), std::max(u, w));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

DecompositionReport verify_decomposition(const Decomposition& dec,
                                         const OrderedBipartiteGraph& gamma) {
    DecompositionReport r;
    const int v = dec.v;
    const auto blocks = all_blocks(dec);
    r.block_count = static_cast<std::int64_t>(blocks.size());

    bool injective = true, crosses = true, sized = true;
    for (const auto& block : blocks) {
        if (static_cast<int>(block.size()) != gamma.edge_count()) sized = false;
        std::set<int> verts;
        for (auto [u, w] : block) {
            r.edge_count += 1;
            verts.insert(u);
            verts.insert(w);
            if (u % dec.part_count == w % dec.part_count) crosses = false;
        }
        if (static_cast<int>(verts.size()) != gamma.vertex_count()) injective = false;
    }
    if (!sized) r.failures.push_back("block-size-mismatch");
    if (!injective) r.failures.push_back("block-not-injective");
    if (!crosses) r.failures.push_back("edge-inside-part");

    // exact multiset equality with the multipartite edge set
    MultipartiteSpec mp{dec.part_count, dec.part_size};
    std::map<std::pair<int, int>, std::int64_t> counts;
    for (const auto& block : blocks)
        for (auto [u, w] : block) counts[{std::min(u, w), std::max(u, w)}] += 1;
    bool partition = true;
    for (const auto& [u, w] : multipartite_edges(mp)) {
        auto it = counts.find({u, w});
        if (it == counts.end() || it->second != 1) {
            partition = false;
            break;
        }
    }
    std::int64_t total = 0;
    for (const auto& [edge, cnt] : counts) total += cnt;
    if (total != multipartite_edge_count(mp)) partition = false;
    if (!partition) r.failures.push_back("edge-multiset-mismatch");

    // cyclic invariance: translating every block by +1 permutes the block multiset
    std::map<std::vector<std::pair<int, int>>, std::int64_t> blockset, shiftedset;
    for (const auto& block : blocks) {
        blockset[normalized(block)] += 1;
        std::vector<std::pair<int, int>> shifted;
        shifted.reserve(block.size());
        for (auto [u, w] : block) shifted.emplace_back((u + 1) % v, (w + 1) % v);
        shiftedset[normalized(shifted)] += 1;
    }
    if (blockset != shiftedset) r.failures.push_back("not-cyclic");

    r.holds = r.failures.empty();
    return r;
}

} // namespace divgrace
