#include "divgrace/cycle.hpp"

#include <algorithm>

namespace divgrace {

std::vector<int> cycle_closing_value(int k, int d) {
    if (k < 1) fail(Errc::invalid_spec, "cycle parameter k must be positive");
    const DivisibilityParams p = divisibility_params(4 * k, d);
    std::vector<int> out;
    if (p.m % 2 == 0) {
        out.push_back(2 * k + (d % 2 == 0 ? (d - 2) / 2 : (d - 1) / 2));
    } else {
        // m odd forces d divisible by 4, c odd
        out.push_back(2 * k + (d - 2) / 2);
        out.push_back(2 * k + (d + 2) / 2);
    }
    for (int c : out)
        if (p.in_delta_prime(c))
            fail(Errc::internal_contradiction, "cycle closing value lies in Delta'");
    return out;
}

LabeledResult cycle_d_divisible(int k, int d, std::optional<int> c_choice) {
    const int e = 4 * k;
    const std::vector<int> valid = cycle_closing_value(k, d);
    int c = valid.front();
    if (c_choice) {
        if (std::find(valid.begin(), valid.end(), *c_choice) == valid.end())
            fail(Errc::invalid_request, "c is not a valid closing difference here");
        c = *c_choice;
    }

    OrderedBipartiteGraph cycle = build_cycle(e);
    const LabelSet s = divisible_label_set(e, d).without(c);
    Labeling f = standard_alpha_s(open_caterpillar(cycle), s);
    if (closing_difference(f) != c)
        fail(Errc::internal_contradiction, "closing difference does not match the predicted c");

    LabeledResult out;
    out.labeling = extend_with_closing_edge(f, c);
    out.provenance.construction = "cycle/standard";
    out.provenance.c = c;
    out.provenance.closing_trace = {c};
    if (!verify_d_divisible(out.labeling, d, true).holds)
        fail(Errc::internal_contradiction, "cycle labeling failed verification");
    return out;
}

} // namespace divgrace
