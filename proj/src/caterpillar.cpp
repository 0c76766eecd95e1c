#include "divgrace/caterpillar.hpp"

#include <algorithm>
#include <numeric>

namespace divgrace {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_spec: return "invalid-spec";
        case Errc::non_bipartite_unsupported: return "non-bipartite-unsupported";
        case Errc::wrong_kind: return "wrong-kind";
        case Errc::size_mismatch: return "size-mismatch";
        case Errc::not_admissible: return "not-admissible";
        case Errc::cannot_extend: return "cannot-extend";
        case Errc::invalid_top: return "invalid-top";
        case Errc::preconditions_not_met: return "preconditions-not-met";
        case Errc::not_disjoint: return "not-disjoint";
        case Errc::invalid_request: return "invalid-request";
        case Errc::search_budget_exceeded: return "search-budget-exceeded";
        case Errc::invalid_labeling: return "invalid-labeling";
        case Errc::out_of_domain: return "out-of-domain";
        case Errc::internal_contradiction: return "internal-contradiction";
        case Errc::io_error: return "io-error";
    }
    return "unknown";
}

const char* kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::caterpillar: return "caterpillar";
        case GraphKind::hairy_cycle: return "hairy-cycle";
        case GraphKind::cycle: return "cycle";
        case GraphKind::generic: return "generic";
    }
    return "generic";
}

GraphKind kind_from_name(const std::string& name) {
    if (name == "caterpillar") return GraphKind::caterpillar;
    if (name == "hairy-cycle") return GraphKind::hairy_cycle;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "generic") return GraphKind::generic;
    fail(Errc::invalid_spec, "unknown graph kind: " + name);
}

int CaterpillarSpec::pendant_sum() const {
    return std::accumulate(pendants.begin(), pendants.end(), 0);
}

int CaterpillarSpec::edge_count() const {
    return length() - 1 + pendant_sum();
}

void CaterpillarSpec::validate() const {
    if (pendants.empty())
        fail(Errc::invalid_spec, "empty pendant sequence");
    for (int p : pendants)
        if (p < 0)
            fail(Errc::invalid_spec, "negative pendant count");
    if (edge_count() < 1)
        fail(Errc::invalid_spec, "single-vertex caterpillar has no edges");
}

OrderedBipartiteGraph build_caterpillar(const CaterpillarSpec& spec) {
    spec.validate();
    OrderedBipartiteGraph g;
    g.spec = spec;
    g.kind = GraphKind::caterpillar;

    const int t = spec.spine_pairs();
    g.spine_x.resize(t);
    g.pend_x.resize(t);
    g.pend_y.resize(t);
    if (spec.even_length())
        g.spine_y.resize(t);
    else
        g.spine_y.resize(t - 1);

    // A order: x_i, then y_i pendants.
    int next = 0;
    for (int i = 1; i <= t; ++i) {
        g.spine_x[i - 1] = next++;
        const int m = spec.pendants_at_y(i);
        auto& py = g.pend_y[i - 1];
        for (int j = 0; j < m; ++j) py.push_back(next++);
    }
    g.count_a = next;

    // B order: x_i pendants, then y_i.
    for (int i = 1; i <= t; ++i) {
        const int n = spec.pendants_at_x(i);
        auto& px = g.pend_x[i - 1];
        for (int j = 0; j < n; ++j) px.push_back(next++);
        if (spec.has_y(i)) g.spine_y[i - 1] = next++;
    }
    g.count_b = next - g.count_a;

    // Edge order (pendants at x_i, [x_i,y_i], pendants at y_i, [y_i,x_{i+1}]).
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= g.n_at(i); ++j) g.edges.emplace_back(g.x(i), g.x_pend(i, j));
        if (g.has_y(i)) {
            g.edges.emplace_back(g.x(i), g.y(i));
            for (int j = 1; j <= g.m_at(i); ++j) g.edges.emplace_back(g.y_pend(i, j), g.y(i));
            if (i < t) g.edges.emplace_back(g.x(i + 1), g.y(i));
        }
    }
    return g;
}

OrderedBipartiteGraph build_hairy_cycle(const CaterpillarSpec& spec) {
    spec.validate();
    if (!spec.even_length())
        fail(Errc::non_bipartite_unsupported, "odd cycle length: hairy cycle would not be bipartite");
    if (spec.spine_pairs() < 2)
        fail(Errc::invalid_spec, "hairy cycle needs a cycle of length >= 4");
    if (spec.pendant_sum() == 0)
        fail(Errc::invalid_spec, "no pendant edges: a cycle is not a hairy cycle");
    OrderedBipartiteGraph g = build_caterpillar(spec);
    g.kind = GraphKind::hairy_cycle;
    g.closing_edge_index = g.edge_count();
    g.edges.emplace_back(g.x(1), g.y(g.t()));
    return g;
}

OrderedBipartiteGraph build_corona(int t, int lambda) {
    if (t < 2) fail(Errc::invalid_spec, "corona needs cycle length >= 4");
    if (lambda < 1) fail(Errc::invalid_spec, "corona needs at least one pendant per vertex");
    CaterpillarSpec spec;
    spec.pendants.assign(static_cast<std::size_t>(2 * t), lambda);
    return build_hairy_cycle(spec);
}

OrderedBipartiteGraph build_cycle(int k_edges) {
    if (k_edges % 2 != 0)
        fail(Errc::non_bipartite_unsupported, "odd cycles are not bipartite");
    if (k_edges < 4) fail(Errc::invalid_spec, "cycle needs >= 4 edges");
    CaterpillarSpec spec;
    spec.pendants.assign(static_cast<std::size_t>(k_edges), 0);
    OrderedBipartiteGraph g = build_caterpillar(spec);
    g.kind = GraphKind::cycle;
    g.closing_edge_index = g.edge_count();
    g.edges.emplace_back(g.x(1), g.y(g.t()));
    return g;
}

OrderedBipartiteGraph open_caterpillar(const OrderedBipartiteGraph& g) {
    if (!g.closing_edge_index)
        fail(Errc::wrong_kind, "graph has no closing edge");
    OrderedBipartiteGraph open = g;
    open.kind = GraphKind::caterpillar;
    open.edges.pop_back();
    open.closing_edge_index.reset();
    return open;
}

OrderedBipartiteGraph close_graph(const CaterpillarSpec& spec) {
    if (spec.pendant_sum() == 0) return build_cycle(spec.length());
    return build_hairy_cycle(spec);
}

EdgeRole edge_role(const OrderedBipartiteGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        fail(Errc::invalid_request, "edge index out of range");
    if (g.closing_edge_index && *g.closing_edge_index == edge_index)
        return EdgeRole{EdgeRole::closing, 1, 0};
    int idx = edge_index;
    for (int i = 1; i <= g.t(); ++i) {
        const int n = g.n_at(i);
        if (idx < n) return EdgeRole{EdgeRole::x_pendant, i, idx + 1};
        idx -= n;
        if (!g.has_y(i)) break;
        if (idx == 0) return EdgeRole{EdgeRole::spine_xy, i, 0};
        --idx;
        const int m = g.m_at(i);
        if (idx < m) return EdgeRole{EdgeRole::y_pendant, i, idx + 1};
        idx -= m;
        if (i < g.t()) {
            if (idx == 0) return EdgeRole{EdgeRole::spine_yx, i, 0};
            --idx;
        }
    }
    fail(Errc::internal_contradiction, "edge index not classified");
}

CaterpillarSpec rerepresent_hairy(const OrderedBipartiteGraph& g, int rotation, bool reflect) {
    if (g.kind != GraphKind::hairy_cycle)
        fail(Errc::wrong_kind, "rerepresentation is defined for hairy cycles");
    const int len = g.spec.length();
    CaterpillarSpec out;
    out.pendants.resize(static_cast<std::size_t>(len));
    const int start = ((rotation % len) + len) % len;
    for (int i = 0; i < len; ++i) {
        const int src = reflect ? ((start - i) % len + len) % len : (start + i) % len;
        out.pendants[static_cast<std::size_t>(i)] = g.spec.pendants[static_cast<std::size_t>(src)];
    }
    return out;
}

std::vector<int> canonical_cycle_form(const std::vector<int>& pendants) {
    const int len = static_cast<int>(pendants.size());
    std::vector<int> best;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int start = 0; start < len; ++start) {
            std::vector<int> cand(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) {
                const int src = reflect ? ((start - i) % len + len) % len : (start + i) % len;
                cand[static_cast<std::size_t>(i)] = pendants[static_cast<std::size_t>(src)];
            }
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

} // namespace divgrace
