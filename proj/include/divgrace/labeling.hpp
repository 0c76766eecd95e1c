#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divgrace/caterpillar.hpp"

namespace divgrace {

// A strictly increasing set of positive integers, the prescribed edge
// differences of an alpha_S-labeling.
struct LabelSet {
    std::vector<int> values; // sorted ascending, distinct, all >= 1

    explicit LabelSet(std::vector<int> v);
    LabelSet() = default;

    int size() const { return static_cast<int>(values.size()); }
    int max_value() const { return values.empty() ? 0 : values.back(); }
    bool contains(int s) const;
    LabelSet without(int s) const; // removes s; error if absent

    bool operator==(const LabelSet&) const = default;
};

// The parameter bundle behind every divisible construction: e = d*m,
// Delta = {1..e+d-1}, Delta' = {m+1, 2(m+1), ..., (d-1)(m+1)}.
struct DivisibilityParams {
    int e = 0;
    int d = 0;
    int m = 0;
    int delta_max = 0;               // e + d - 1 = d(m+1) - 1
    std::vector<int> delta_prime;    // multiples of m+1 below delta_max
    std::optional<int> c;            // removed element, when chosen
    std::optional<int> c1, c2;       // candidate closing differences
    std::optional<int> k;            // |B| of the host graph
    std::optional<int> d_a, d_b;     // mv-label counts in f(A), f(B)

    bool in_delta_prime(int s) const { return s >= 1 && s <= delta_max && s % (m + 1) == 0; }
};

DivisibilityParams divisibility_params(int e, int d); // not-admissible if d does not divide e

// Delta \ Delta' — the difference set of a d-divisible graceful labeling.
LabelSet divisible_label_set(int e, int d);

// A vertex labeling of a host graph; values indexed by vertex id.
struct Labeling {
    OrderedBipartiteGraph host;
    std::vector<int> values;

    int value(int id) const { return values[static_cast<std::size_t>(id)]; }
    std::vector<int> edge_differences() const;        // per edge, in edge order
    std::vector<int> sorted_differences() const;
    int max_a() const;
    int min_b() const;

    bool operator==(const Labeling&) const = default;
};

struct VerifyReport {
    bool holds = false;
    std::vector<std::string> failures;
};

// The labeling of Theorem 2.1's proof: edges in canonical order take the
// elements of S ascending, every edge satisfies f(b) - f(a) = its label,
// and the last A vertex gets 0.
Labeling standard_alpha_s(const OrderedBipartiteGraph& g, const LabelSet& s);

VerifyReport verify_alpha_s(const Labeling& l, const LabelSet& s);

// d-divisible graceful check; with require_alpha also the part separation
// (accepted with either part on the low side).
VerifyReport verify_d_divisible(const Labeling& l, int d, bool require_alpha);

// Integers strictly inside a part's label range that the part does not use.
std::vector<int> mv_labels(const Labeling& l, Side side);

int closing_difference(const Labeling& l); // f(y_t) - f(x_1)

// Close the host with edge [x_1,y_t] labeled c; requires the closing
// difference to equal c and c to be unused among the edge differences.
Labeling extend_with_closing_edge(const Labeling& l, int c);

Labeling complement_labeling(const Labeling& l, int top_label);

} // namespace divgrace
