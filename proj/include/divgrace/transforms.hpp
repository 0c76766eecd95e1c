#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divgrace/labeling.hpp"

namespace divgrace {

enum class TransformOp { O1, O2, O3, O4, O5, O5_4 };

const char* op_name(TransformOp op);
TransformOp op_from_name(const std::string& name);

struct TransformRequest {
    TransformOp op;
    int s = 0;            // spine index, 1 <= s <= t-1; ignored for O4
    std::optional<int> j; // pendant index for O5_4; scanned when absent

    bool operator==(const TransformRequest&) const = default;
};

struct ConditionResult {
    std::string name;
    bool holds = false;
};

struct PreconditionReport {
    bool ok = false;
    std::vector<ConditionResult> conditions;
    std::optional<int> resolved_j; // O5_4 only
};

// Reports each numbered condition of the requested operation.
PreconditionReport check_preconditions(const Labeling& l, const TransformRequest& r);

// Edges whose labels the operation exchanges (the commuting pair/triple).
// Two requests may be composed iff these sets are disjoint.
std::vector<int> changed_edge_indices(const Labeling& l, const TransformRequest& r);

// The operation's effect on f(y_t) - f(x_1).
int closing_delta(const Labeling& l, const TransformRequest& r);

// Applies the operation; the input is never mutated. The result is verified
// to be an alpha_S-labeling for the same S.
Labeling apply_transform(const Labeling& l, const TransformRequest& r);

// Sequential application; the touched edge sets must be pairwise disjoint.
Labeling compose_transforms(const Labeling& l, const std::vector<TransformRequest>& rs);

} // namespace divgrace
