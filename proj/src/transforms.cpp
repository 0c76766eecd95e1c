#include "divgrace/transforms.hpp"

#include <algorithm>
#include <set>

namespace divgrace {

const char* op_name(TransformOp op) {
    switch (op) {
        case TransformOp::O1: return "O1";
        case TransformOp::O2: return "O2";
        case TransformOp::O3: return "O3";
        case TransformOp::O4: return "O4";
        case TransformOp::O5: return "O5";
        case TransformOp::O5_4: return "O5_4";
    }
    return "?";
}

TransformOp op_from_name(const std::string& name) {
    if (name == "O1") return TransformOp::O1;
    if (name == "O2") return TransformOp::O2;
    if (name == "O3") return TransformOp::O3;
    if (name == "O4") return TransformOp::O4;
    if (name == "O5") return TransformOp::O5;
    if (name == "O5_4" || name == "O54") return TransformOp::O5_4;
    fail(Errc::invalid_request, "unknown operation: " + name);
}

namespace {

// (spine index, pendant index or 0 for x_i / y_i themselves)
struct VertexRole {
    int i = 0;
    int pend = 0;
};

std::vector<VertexRole> vertex_roles(const OrderedBipartiteGraph& g) {
    std::vector<VertexRole> roles(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 1; i <= g.t(); ++i) {
        roles[static_cast<std::size_t>(g.x(i))] = {i, 0};
        if (g.has_y(i)) roles[static_cast<std::size_t>(g.y(i))] = {i, 0};
        for (int j = 1; j <= g.n_at(i); ++j) roles[static_cast<std::size_t>(g.x_pend(i, j))] = {i, j};
        for (int j = 1; j <= g.m_at(i); ++j) roles[static_cast<std::size_t>(g.y_pend(i, j))] = {i, j};
    }
    return roles;
}

// Gap to the predecessor of y_s in the B order, which is x_s^{n_s} whenever
// n_s > 0. The predecessor must exist: when y_s opens the B order the -1
// shift of x_{s+1}^1 can land on g(x_1), so the condition fails.
int pred_gap_of_y(const Labeling& l, int s) {
    const int id = l.host.y(s);
    if (id == l.host.count_a) return 0;
    return l.value(id) - l.value(id - 1);
}

int find_edge(const OrderedBipartiteGraph& g, int u, int v) {
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        const auto& [a, b] = g.edges[static_cast<std::size_t>(idx)];
        if ((a == u && b == v) || (a == v && b == u)) return idx;
    }
    fail(Errc::internal_contradiction, "edge not found");
}

void require_caterpillar(const Labeling& l) {
    if (l.host.kind != GraphKind::caterpillar)
        fail(Errc::wrong_kind, "transforms act on caterpillar labelings");
}

void require_s(const Labeling& l, int s) {
    if (s < 1 || s > l.host.t() - 1 || !l.host.has_y(s))
        fail(Errc::invalid_request, "spine index s out of range");
}

std::optional<int> scan_o54_j(const Labeling& l, int s, std::optional<int> given) {
    const auto& g = l.host;
    const int want = l.value(g.x(s)) - 4;
    if (given) {
        if (*given >= 1 && *given <= g.m_at(s) && l.value(g.y_pend(s, *given)) == want) return given;
        return std::nullopt;
    }
    for (int j = 1; j <= g.m_at(s); ++j)
        if (l.value(g.y_pend(s, j)) == want) return j;
    return std::nullopt;
}

} // namespace

PreconditionReport check_preconditions(const Labeling& l, const TransformRequest& r) {
    require_caterpillar(l);
    const auto& g = l.host;
    PreconditionReport rep;
    auto add = [&rep](const std::string& name, bool holds) {
        rep.conditions.push_back({name, holds});
    };

    switch (r.op) {
        case TransformOp::O1:
        case TransformOp::O2: {
            require_s(l, r.s);
            const int step = r.op == TransformOp::O1 ? 1 : 2;
            const bool c1 = g.n_at(r.s + 1) >= 1 &&
                            l.value(g.y(r.s)) + step == l.value(g.x_pend(r.s + 1, 1));
            add("(1)", c1);
            add("(2)", pred_gap_of_y(l, r.s) >= step + 1);
            break;
        }
        case TransformOp::O3: {
            require_s(l, r.s);
            const int fy = l.value(g.y(r.s));
            const bool c1 = g.n_at(r.s + 1) >= 2 &&
                            fy + 1 == l.value(g.x_pend(r.s + 1, 1)) &&
                            fy + 2 == l.value(g.x_pend(r.s + 1, 2));
            add("(1)", c1);
            add("(2)", pred_gap_of_y(l, r.s) >= 3);
            break;
        }
        case TransformOp::O4: {
            const int t = g.t();
            add("(1)", g.n_at(t) >= 1);
            add("(2)", g.has_y(t) && g.m_at(t) == 0);
            break;
        }
        case TransformOp::O5: {
            require_s(l, r.s);
            const int fy = l.value(g.y(r.s));
            add("(1)", g.n_at(r.s + 1) >= 1 && fy == l.value(g.x_pend(r.s + 1, 1)) - 2);
            add("(2)", g.n_at(r.s) >= 1 && fy == l.value(g.x_pend(r.s, g.n_at(r.s))) + 1);
            break;
        }
        case TransformOp::O5_4: {
            require_s(l, r.s);
            rep.resolved_j = scan_o54_j(l, r.s, r.j);
            add("(1)", rep.resolved_j.has_value());
            const int fy = l.value(g.y(r.s));
            add("(2)", g.n_at(r.s) >= 1 && fy == l.value(g.x_pend(r.s, g.n_at(r.s))) + 1);
            bool c3 = g.n_at(r.s + 1) >= 4;
            for (int i = 1; c3 && i <= 4; ++i)
                c3 = l.value(g.x_pend(r.s + 1, i)) == fy + i;
            if (c3) {
                // the value fy+5 must stay free for g(x_s^{n_s})
                c3 = std::find(l.values.begin(), l.values.end(), fy + 5) == l.values.end();
                if (c3 && g.n_at(r.s + 1) >= 5)
                    c3 = l.value(g.x_pend(r.s + 1, 5)) == fy + 6;
            }
            add("(3)", c3);
            break;
        }
    }
    rep.ok = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                         [](const ConditionResult& c) { return c.holds; });
    return rep;
}

std::vector<int> changed_edge_indices(const Labeling& l, const TransformRequest& r) {
    require_caterpillar(l);
    const auto& g = l.host;
    switch (r.op) {
        case TransformOp::O1:
        case TransformOp::O2:
            require_s(l, r.s);
            if (g.n_at(r.s + 1) < 1) fail(Errc::invalid_request, "no pendant at x_{s+1}");
            return {find_edge(g, g.y(r.s), g.x(r.s + 1)),
                    find_edge(g, g.x(r.s + 1), g.x_pend(r.s + 1, 1))};
        case TransformOp::O3:
            require_s(l, r.s);
            if (g.n_at(r.s + 1) < 2) fail(Errc::invalid_request, "fewer than two pendants at x_{s+1}");
            return {find_edge(g, g.y(r.s), g.x(r.s + 1)),
                    find_edge(g, g.x(r.s + 1), g.x_pend(r.s + 1, 2))};
        case TransformOp::O4: {
            const int t = g.t();
            if (!g.has_y(t) || g.n_at(t) < 1) fail(Errc::invalid_request, "O4 needs y_t and a pendant at x_t");
            return {find_edge(g, g.x(t), g.y(t)),
                    find_edge(g, g.x(t), g.x_pend(t, g.n_at(t)))};
        }
        case TransformOp::O5:
            require_s(l, r.s);
            if (g.n_at(r.s) < 1) fail(Errc::invalid_request, "no pendant at x_s");
            return {find_edge(g, g.x(r.s), g.x_pend(r.s, g.n_at(r.s))),
                    find_edge(g, g.x(r.s), g.y(r.s))};
        case TransformOp::O5_4: {
            require_s(l, r.s);
            const auto j = scan_o54_j(l, r.s, r.j);
            if (g.n_at(r.s) < 1 || !j) fail(Errc::invalid_request, "O5_4 pendant index unresolved");
            return {find_edge(g, g.x(r.s), g.x_pend(r.s, g.n_at(r.s))),
                    find_edge(g, g.x(r.s), g.y(r.s)),
                    find_edge(g, g.y(r.s), g.y_pend(r.s, *j))};
        }
    }
    fail(Errc::invalid_request, "unknown operation");
}

int closing_delta(const Labeling& l, const TransformRequest& r) {
    switch (r.op) {
        case TransformOp::O1:
        case TransformOp::O5:
        case TransformOp::O5_4: return -1;
        case TransformOp::O2:
        case TransformOp::O3: return -2;
        case TransformOp::O4: {
            const auto& g = l.host;
            if (!g.has_y(g.t()) || g.n_at(g.t()) < 1)
                fail(Errc::invalid_request, "O4 needs y_t and a pendant at x_t");
            return -(l.value(g.y(g.t())) - l.value(g.x_pend(g.t(), g.n_at(g.t()))));
        }
    }
    fail(Errc::invalid_request, "unknown operation");
}

Labeling apply_transform(const Labeling& l, const TransformRequest& r) {
    const PreconditionReport rep = check_preconditions(l, r);
    if (!rep.ok) {
        std::string what = std::string(op_name(r.op)) + " preconditions failed:";
        for (const auto& c : rep.conditions)
            if (!c.holds) what += " " + c.name;
        fail(Errc::preconditions_not_met, what);
    }

    const auto& g = l.host;
    const auto roles = vertex_roles(g);
    Labeling out = l;

    auto shift_prefix_through_s = [&](int s, int amount) {
        // H_2 of O1/O2/O3: every vertex of spine index <= s, on both sides.
        for (int id = 0; id < g.vertex_count(); ++id)
            if (roles[static_cast<std::size_t>(id)].i <= s)
                out.values[static_cast<std::size_t>(id)] += amount;
    };

    switch (r.op) {
        case TransformOp::O1:
        case TransformOp::O2: {
            const int step = r.op == TransformOp::O1 ? 1 : 2;
            shift_prefix_through_s(r.s, step);
            out.values[static_cast<std::size_t>(g.x_pend(r.s + 1, 1))] -= step;
            break;
        }
        case TransformOp::O3:
            shift_prefix_through_s(r.s, 2);
            out.values[static_cast<std::size_t>(g.x_pend(r.s + 1, 2))] -= 2;
            break;
        case TransformOp::O4: {
            const int t = g.t();
            std::swap(out.values[static_cast<std::size_t>(g.y(t))],
                      out.values[static_cast<std::size_t>(g.x_pend(t, g.n_at(t)))]);
            break;
        }
        case TransformOp::O5:
        case TransformOp::O5_4: {
            // H_2: A vertices x_1..x_s with the pendants of y_1..y_{s-1},
            // B vertices up to x_s^{n_s - 1}.
            const int ns = g.n_at(r.s);
            for (int id = 0; id < g.count_a; ++id) {
                const auto& ro = roles[static_cast<std::size_t>(id)];
                if (ro.i < r.s || (ro.i == r.s && ro.pend == 0))
                    out.values[static_cast<std::size_t>(id)] += 1;
            }
            for (int id = g.count_a; id < g.vertex_count(); ++id) {
                const auto& ro = roles[static_cast<std::size_t>(id)]; // pend == 0 here means y_i
                if (ro.i < r.s || (ro.i == r.s && ro.pend >= 1 && ro.pend <= ns - 1))
                    out.values[static_cast<std::size_t>(id)] += 1;
            }
            if (r.op == TransformOp::O5) {
                out.values[static_cast<std::size_t>(g.x_pend(r.s, ns))] = l.value(g.x_pend(r.s, ns)) + 2;
            } else {
                out.values[static_cast<std::size_t>(g.x_pend(r.s, ns))] = l.value(g.y(r.s)) + 5;
                out.values[static_cast<std::size_t>(g.y_pend(r.s, *rep.resolved_j))] = l.value(g.x(r.s));
            }
            break;
        }
    }

    const VerifyReport check = verify_alpha_s(out, LabelSet(l.sorted_differences()));
    if (!check.holds)
        fail(Errc::internal_contradiction,
             std::string(op_name(r.op)) + " produced an invalid labeling");
    return out;
}

Labeling compose_transforms(const Labeling& l, const std::vector<TransformRequest>& rs) {
    Labeling cur = l;
    std::set<int> touched;
    for (const TransformRequest& r : rs) {
        const auto changed = changed_edge_indices(cur, r);
        for (int idx : changed)
            if (touched.count(idx))
                fail(Errc::not_disjoint, "operations touch a common edge");
        cur = apply_transform(cur, r);
        touched.insert(changed.begin(), changed.end());
    }
    return cur;
}

} // namespace divgrace
