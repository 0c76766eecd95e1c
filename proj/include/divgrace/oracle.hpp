#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "divgrace/transforms.hpp"

namespace divgrace {

struct SearchOptions {
    bool require_alpha = false;
    std::uint64_t limit = UINT64_MAX;
    int max_vertices = 20;
    std::uint64_t node_budget = 0; // 0 = unlimited
};

enum class SearchOutcome { completed, limit_reached, budget_exhausted };

// Exhaustive backtracking over injective assignments into {0..max S} whose
// absolute edge differences are exactly S. With require_alpha the part roles
// are fixed: every A label below every B label. Deterministic order.
// The visitor returns false to stop early.
SearchOutcome search_labelings_visit(const OrderedBipartiteGraph& g, const LabelSet& s,
                                     const SearchOptions& options,
                                     const std::function<bool(const Labeling&)>& visit);

std::vector<Labeling> search_labelings(const OrderedBipartiteGraph& g, const LabelSet& s,
                                       bool require_alpha, std::uint64_t limit = UINT64_MAX);

// Smallest set of pairwise-disjoint operations reaching the target closing
// difference, found by iterative deepening; nullopt when none within budget.
std::optional<std::vector<TransformRequest>>
search_transform_sequence(const Labeling& l, int target_closing, int budget = 3);

} // namespace divgrace
