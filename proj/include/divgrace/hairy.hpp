#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divgrace/transforms.hpp"

namespace divgrace {

// Structural class of the k-th canonical edge (k = |B|), which decides how
// an odd labeling of a bipartite hairy cycle is assembled.
enum class OddCaseTag {
    pendant_from_b,    // [y_s, y_s^j]
    pendant_from_a,    // [x_s, x_s^j]
    cycle_edge_xy_prev, // [x_s, y_{s-1}]
    cycle_edge_xy       // [x_s, y_s]
};

struct OddCase {
    OddCaseTag tag;
    int s = 0;
    int j = 0; // pendant index for the pendant cases
    enum class Sub { none, s4_1, s4_2 } subcase = Sub::none;
};

OddCase classify_kth_edge(const OrderedBipartiteGraph& g);

// How an odd labeling is produced: directly from the per-case closed forms,
// or by building the standard labeling and repairing the closing difference
// with an operation. Both yield the same labeling; keeping the two routes
// separate lets tests cross-check them.
enum class OddRoute { closed_form, construct_transform };

struct Provenance {
    std::string construction;
    std::optional<int> c;
    std::vector<TransformRequest> operations;
    std::vector<int> closing_trace;
    std::optional<CaterpillarSpec> representation; // set when the cycle was re-read
};

struct LabeledResult {
    Labeling labeling;
    Provenance provenance;
};

// Odd (e-divisible) alpha-labeling of a bipartite hairy cycle.
LabeledResult odd_alpha_hairy(const OrderedBipartiteGraph& g,
                              OddRoute route = OddRoute::closed_form);

// d-divisible alpha-labeling of the corona H(2t, lambda) for any divisor d
// of e = 2t(lambda+1).
LabeledResult corona_d_divisible(int t, int lambda, int d);

// Closed-form 2-divisible alpha-labeling of H(2t,1), t odd > 1.
Labeling h2t1_two_divisible(int t);

// The two closing-difference candidates (e+d-+1)/2 (d odd) or (e+d-+2)/2
// (d even); both are checked to avoid Delta'. Which one a corona removes is
// decided by the parity of t.
std::pair<int, int> candidate_closing_values(const DivisibilityParams& p, bool t_even);

} // namespace divgrace
