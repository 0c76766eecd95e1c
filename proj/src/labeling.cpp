#include "divgrace/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

namespace divgrace {

LabelSet::LabelSet(std::vector<int> v) : values(std::move(v)) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1) fail(Errc::invalid_spec, "label set entries must be positive");
        if (i > 0 && values[i] <= values[i - 1])
            fail(Errc::invalid_spec, "label set must be strictly increasing");
    }
}

bool LabelSet::contains(int s) const {
    return std::binary_search(values.begin(), values.end(), s);
}

LabelSet LabelSet::without(int s) const {
    if (!contains(s)) fail(Errc::invalid_request, "element not in label set");
    std::vector<int> v;
    v.reserve(values.size() - 1);
    for (int x : values)
        if (x != s) v.push_back(x);
    return LabelSet(std::move(v));
}

DivisibilityParams divisibility_params(int e, int d) {
    if (e < 1 || d < 1 || e % d != 0)
        fail(Errc::not_admissible, "d must be a positive divisor of e");
    DivisibilityParams p;
    p.e = e;
    p.d = d;
    p.m = e / d;
    p.delta_max = e + d - 1;
    for (int i = 1; i <= d - 1; ++i) p.delta_prime.push_back(i * (p.m + 1));
    return p;
}

LabelSet divisible_label_set(int e, int d) {
    const DivisibilityParams p = divisibility_params(e, d);
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(e));
    for (int s = 1; s <= p.delta_max; ++s)
        if (!p.in_delta_prime(s)) v.push_back(s);
    return LabelSet(std::move(v));
}

std::vector<int> Labeling::edge_differences() const {
    std::vector<int> out;
    out.reserve(host.edges.size());
    for (const auto& [a, b] : host.edges) out.push_back(value(b) - value(a));
    return out;
}

std::vector<int> Labeling::sorted_differences() const {
    std::vector<int> out;
    out.reserve(host.edges.size());
    for (const auto& [a, b] : host.edges) out.push_back(std::abs(value(b) - value(a)));
    std::sort(out.begin(), out.end());
    return out;
}

int Labeling::max_a() const {
    int best = values[0];
    for (int id = 0; id < host.count_a; ++id) best = std::max(best, value(id));
    return best;
}

int Labeling::min_b() const {
    int best = value(host.count_a);
    for (int id = host.count_a; id < host.vertex_count(); ++id) best = std::min(best, value(id));
    return best;
}

Labeling standard_alpha_s(const OrderedBipartiteGraph& g, const LabelSet& s) {
    if (g.kind != GraphKind::caterpillar)
        fail(Errc::wrong_kind, "standard labeling is defined on caterpillars");
    if (s.size() != g.edge_count())
        fail(Errc::size_mismatch, "label set size must equal the edge count");

    Labeling l;
    l.host = g;
    l.values.assign(static_cast<std::size_t>(g.vertex_count()), -1);

    // Anchor: the last vertex in the A order gets 0, then propagate backward
    // through the edge order; consecutive edges always share a vertex.
    l.values[static_cast<std::size_t>(g.count_a - 1)] = 0;
    for (int idx = g.edge_count() - 1; idx >= 0; --idx) {
        const auto [a, b] = g.edges[static_cast<std::size_t>(idx)];
        const int lab = s.values[static_cast<std::size_t>(idx)];
        int& fa = l.values[static_cast<std::size_t>(a)];
        int& fb = l.values[static_cast<std::size_t>(b)];
        if (fa >= 0 && fb < 0)
            fb = fa + lab;
        else if (fb >= 0 && fa < 0)
            fa = fb - lab;
        else if (fa < 0 && fb < 0)
            fail(Errc::internal_contradiction, "edge with no labeled endpoint during propagation");
    }
    return l;
}

static bool check_injective(const Labeling& l, VerifyReport& r) {
    std::unordered_set<int> seen;
    for (int v : l.values)
        if (!seen.insert(v).second) {
            r.failures.push_back("not-injective");
            return false;
        }
    return true;
}

VerifyReport verify_alpha_s(const Labeling& l, const LabelSet& s) {
    VerifyReport r;
    check_injective(l, r);
    if (l.sorted_differences() != s.values) r.failures.push_back("difference-set-mismatch");
    for (int v : l.values)
        if (v < 0 || v > s.max_value()) {
            r.failures.push_back("range-exceeded");
            break;
        }
    if (!(l.max_a() < l.min_b())) r.failures.push_back("alpha-separation-violated");
    r.holds = r.failures.empty();
    return r;
}

VerifyReport verify_d_divisible(const Labeling& l, int d, bool require_alpha) {
    const int e = l.host.edge_count();
    const LabelSet expected = divisible_label_set(e, d); // throws not-admissible
    VerifyReport r;
    check_injective(l, r);
    if (l.sorted_differences() != expected.values) r.failures.push_back("difference-set-mismatch");
    for (int v : l.values)
        if (v < 0 || v > expected.max_value()) {
            r.failures.push_back("range-exceeded");
            break;
        }
    if (require_alpha) {
        // the separation may put either part on the low side
        int max_a = l.values[0], min_a = l.values[0];
        for (int id = 0; id < l.host.count_a; ++id) {
            max_a = std::max(max_a, l.value(id));
            min_a = std::min(min_a, l.value(id));
        }
        int max_b = l.value(l.host.count_a), min_b = max_b;
        for (int id = l.host.count_a; id < l.host.vertex_count(); ++id) {
            max_b = std::max(max_b, l.value(id));
            min_b = std::min(min_b, l.value(id));
        }
        if (!(max_a < min_b || max_b < min_a)) r.failures.push_back("alpha-separation-violated");
    }
    r.holds = r.failures.empty();
    return r;
}

std::vector<int> mv_labels(const Labeling& l, Side side) {
    const int begin = side == Side::A ? 0 : l.host.count_a;
    const int end = side == Side::A ? l.host.count_a : l.host.vertex_count();
    if (begin == end) fail(Errc::invalid_request, "empty part has no mv-labels");
    std::set<int> used;
    for (int id = begin; id < end; ++id) used.insert(l.value(id));
    std::vector<int> out;
    for (int v = *used.begin(); v <= *used.rbegin(); ++v)
        if (!used.count(v)) out.push_back(v);
    return out;
}

int closing_difference(const Labeling& l) {
    const auto& g = l.host;
    if (!g.spec.even_length())
        fail(Errc::wrong_kind, "closing difference needs endpoints x_1 and y_t");
    return l.value(g.y(g.t())) - l.value(g.x(1));
}

Labeling extend_with_closing_edge(const Labeling& l, int c) {
    if (l.host.kind != GraphKind::caterpillar)
        fail(Errc::wrong_kind, "extension starts from a caterpillar labeling");
    if (!l.host.spec.even_length())
        fail(Errc::cannot_extend, "no closing edge [x_1,y_t] on an odd spine");
    if (closing_difference(l) != c)
        fail(Errc::cannot_extend, "closing difference does not equal c");
    for (int diff : l.sorted_differences())
        if (diff == c) fail(Errc::cannot_extend, "c already appears as an edge difference");
    Labeling out;
    out.host = close_graph(l.host.spec);
    out.values = l.values;
    return out;
}

Labeling complement_labeling(const Labeling& l, int top_label) {
    for (int v : l.values)
        if (v > top_label) fail(Errc::invalid_top, "top label below an existing label");
    Labeling out = l;
    for (int& v : out.values) v = top_label - v;
    return out;
}

} // namespace divgrace
