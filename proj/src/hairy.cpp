#include "divgrace/hairy.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "divgrace/oracle.hpp"

namespace divgrace {

OddCase classify_kth_edge(const OrderedBipartiteGraph& g) {
    if (g.kind != GraphKind::hairy_cycle)
        fail(Errc::wrong_kind, "classification is defined for hairy cycles");
    const int k = g.count_b;
    const EdgeRole role = edge_role(g, k - 1);
    OddCase c;
    switch (role.kind) {
        case EdgeRole::x_pendant:
            c.tag = OddCaseTag::pendant_from_a;
            c.s = role.i;
            c.j = role.j;
            return c;
        case EdgeRole::y_pendant:
            c.tag = OddCaseTag::pendant_from_b;
            c.s = role.i;
            c.j = role.j;
            return c;
        case EdgeRole::spine_yx:
            c.tag = OddCaseTag::cycle_edge_xy_prev;
            c.s = role.i + 1;
            return c;
        case EdgeRole::spine_xy:
            c.tag = OddCaseTag::cycle_edge_xy;
            c.s = role.i;
            if (role.i >= g.t())
                fail(Errc::internal_contradiction, "k-th edge cannot be the last spine edge");
            c.subcase = g.n_at(role.i + 1) != 0 ? OddCase::Sub::s4_1 : OddCase::Sub::s4_2;
            return c;
        case EdgeRole::closing:
            break;
    }
    fail(Errc::internal_contradiction, "k-th edge cannot be the closing edge");
}

namespace {

struct ResolvedOdd {
    OrderedBipartiteGraph graph;
    OddCase cls;
    bool rearranged = false;
};

// Case 4 with n_{s+1} = 0 needs a representation with n_t != 0 and m_t = 0;
// one exists whenever the hairy cycle is not a cycle.
ResolvedOdd resolve_odd_case(const OrderedBipartiteGraph& g) {
    OddCase cls = classify_kth_edge(g);
    if (cls.tag != OddCaseTag::cycle_edge_xy || cls.subcase == OddCase::Sub::s4_1)
        return {g, cls, false};
    const int t = g.t();
    if (g.n_at(t) != 0 && g.m_at(t) == 0) return {g, cls, false};
    const int len = g.spec.length();
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int rot = 0; rot < len; ++rot) {
            const CaterpillarSpec spec = rerepresent_hairy(g, rot, reflect != 0);
            if (spec.pendants[static_cast<std::size_t>(len - 2)] == 0) continue;
            if (spec.pendants[static_cast<std::size_t>(len - 1)] != 0) continue;
            OrderedBipartiteGraph g2 = build_hairy_cycle(spec);
            return {g2, classify_kth_edge(g2), true};
        }
    }
    fail(Errc::internal_contradiction, "no representation with n_t != 0 and m_t = 0");
}

struct ClosedForms {
    std::vector<int> fx, fy;              // 1-based, index 0 unused
    std::vector<std::vector<int>> fxp, fyp; // [r][i], 1-based
};

ClosedForms odd_closed_forms(const OrderedBipartiteGraph& g, const OddCase& cls) {
    const int t = g.t();
    const int e = g.edge_count();
    const int s = cls.s;
    std::vector<int> sm(static_cast<std::size_t>(t) + 2, 0); // sum of m_l, l = r..t
    for (int r = t; r >= 1; --r) sm[static_cast<std::size_t>(r)] = sm[static_cast<std::size_t>(r) + 1] + g.m_at(r);
    std::vector<int> sn(static_cast<std::size_t>(t) + 1, 0); // sum of n_l, l = 1..r
    for (int r = 1; r <= t; ++r) sn[static_cast<std::size_t>(r)] = sn[static_cast<std::size_t>(r) - 1] + g.n_at(r);

    ClosedForms f;
    f.fx.assign(static_cast<std::size_t>(t) + 1, 0);
    f.fy.assign(static_cast<std::size_t>(t) + 1, 0);
    f.fxp.assign(static_cast<std::size_t>(t) + 1, {});
    f.fyp.assign(static_cast<std::size_t>(t) + 1, {});
    auto SM = [&](int r) { return sm[static_cast<std::size_t>(r)]; };
    auto SN = [&](int r) { return sn[static_cast<std::size_t>(r)]; };

    switch (cls.tag) {
        case OddCaseTag::pendant_from_b: // k-th edge [y_s, y_s^j]
            for (int r = 1; r <= t; ++r)
                f.fx[static_cast<std::size_t>(r)] = 2 * SM(r) + 2 * (t - r) + (r <= s ? 2 : 0);
            for (int r = 1; r <= t; ++r)
                f.fy[static_cast<std::size_t>(r)] = f.fx[1] + 2 * SN(r) + 2 * r - 1;
            for (int r = 1; r <= t; ++r)
                for (int i = 1; i <= g.n_at(r); ++i)
                    f.fxp[static_cast<std::size_t>(r)].push_back(
                        r == 1 ? f.fx[1] + 2 * i - 1 : f.fy[static_cast<std::size_t>(r) - 1] + 2 * i);
            for (int r = 1; r <= t; ++r)
                for (int i = 1; i <= g.m_at(r); ++i) {
                    const int v = (r != s || i <= cls.j - 1)
                                      ? f.fx[static_cast<std::size_t>(r)] - 2 * i
                                      : f.fx[static_cast<std::size_t>(r)] - 2 * (i + 1);
                    f.fyp[static_cast<std::size_t>(r)].push_back(v);
                }
            break;

        case OddCaseTag::pendant_from_a: // k-th edge [x_s, x_s^j]
            for (int r = 1; r <= t; ++r)
                f.fx[static_cast<std::size_t>(r)] = 2 * SM(r) + 2 * (t - r);
            for (int r = 1; r <= t; ++r)
                for (int i = 1; i <= g.m_at(r); ++i)
                    f.fyp[static_cast<std::size_t>(r)].push_back(f.fx[static_cast<std::size_t>(r)] - 2 * i);
            for (int r = 1; r <= t; ++r)
                f.fy[static_cast<std::size_t>(r)] =
                    f.fx[1] + 2 * SN(r) + (r <= s - 1 ? 2 * r - 1 : 2 * r + 1);
            for (int r = 1; r <= t; ++r)
                for (int i = 1; i <= g.n_at(r); ++i) {
                    int v;
                    if (r == 1)
                        v = f.fx[1] + 2 * i - 1;
                    else if (r == s && i > cls.j)
                        v = f.fy[static_cast<std::size_t>(r) - 1] + 2 * i + 2;
                    else
                        v = f.fy[static_cast<std::size_t>(r) - 1] + 2 * i;
                    f.fxp[static_cast<std::size_t>(r)].push_back(v);
                }
            break;

        case OddCaseTag::cycle_edge_xy_prev: // k-th edge [x_s, y_{s-1}]
            for (int r = 1; r <= t; ++r)
                f.fx[static_cast<std::size_t>(r)] = 2 * SM(r) + 2 * (t - r) + (r <= s - 1 ? 2 : 0);
            for (int r = 1; r <= t; ++r)
                f.fy[static_cast<std::size_t>(r)] = f.fx[1] + 2 * SN(r) + 2 * r - 1;
            for (int r = 1; r <= t; ++r)
                for (int i = 1; i <= g.n_at(r); ++i)
                    f.fxp[static_cast<std::size_t>(r)].push_back(
                        r == 1 ? f.fx[1] + 2 * i - 1 : f.fy[static_cast<std::size_t>(r) - 1] + 2 * i);
            for (int r = 1; r <= t; ++r)
                for (int i = 1; i <= g.m_at(r); ++i)
                    f.fyp[static_cast<std::size_t>(r)].push_back(f.fx[static_cast<std::size_t>(r)] - 2 * i);
            break;

        case OddCaseTag::cycle_edge_xy:
            if (cls.subcase == OddCase::Sub::s4_1) { // n_{s+1} != 0
                for (int r = 1; r <= t; ++r)
                    f.fx[static_cast<std::size_t>(r)] = 2 * SM(r) + 2 * (t - r) + (r <= s ? 2 : 0);
                for (int r = 1; r <= t; ++r)
                    for (int i = 1; i <= g.m_at(r); ++i)
                        f.fyp[static_cast<std::size_t>(r)].push_back(f.fx[static_cast<std::size_t>(r)] - 2 * i);
                for (int r = 1; r <= t; ++r)
                    f.fy[static_cast<std::size_t>(r)] =
                        f.fx[1] + 2 * SN(r) + (r != s ? 2 * r - 1 : 2 * r + 1);
                for (int r = 1; r <= t; ++r)
                    for (int i = 1; i <= g.n_at(r); ++i) {
                        int v;
                        if (r == 1)
                            v = f.fx[1] + 2 * i - 1;
                        else if (r == s + 1)
                            v = i == 1 ? f.fy[static_cast<std::size_t>(s)] - 2
                                       : f.fy[static_cast<std::size_t>(s)] + 2 * (i - 1);
                        else
                            v = f.fy[static_cast<std::size_t>(r) - 1] + 2 * i;
                        f.fxp[static_cast<std::size_t>(r)].push_back(v);
                    }
            } else { // n_t != 0, m_t = 0
                for (int r = 1; r <= t; ++r)
                    f.fx[static_cast<std::size_t>(r)] = 2 * SM(r) + 2 * (t - r);
                for (int r = 1; r <= t; ++r)
                    for (int i = 1; i <= g.m_at(r); ++i)
                        f.fyp[static_cast<std::size_t>(r)].push_back(f.fx[static_cast<std::size_t>(r)] - 2 * i);
                for (int r = 1; r <= t; ++r) {
                    if (r == t)
                        f.fy[static_cast<std::size_t>(r)] = 2 * e - 3;
                    else
                        f.fy[static_cast<std::size_t>(r)] =
                            f.fx[1] + 2 * SN(r) + (r <= s - 1 ? 2 * r - 1 : 2 * r + 1);
                }
                for (int r = 1; r <= t; ++r)
                    for (int i = 1; i <= g.n_at(r); ++i) {
                        int v;
                        if (r == 1)
                            v = f.fx[1] + 2 * i - 1;
                        else if (r == t && i == g.n_at(t))
                            v = 2 * e - 1;
                        else
                            v = f.fy[static_cast<std::size_t>(r) - 1] + 2 * i;
                        f.fxp[static_cast<std::size_t>(r)].push_back(v);
                    }
            }
            break;
    }
    return f;
}

Labeling assemble(const OrderedBipartiteGraph& g, const ClosedForms& f) {
    Labeling l;
    l.host = g;
    l.values.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int r = 1; r <= g.t(); ++r) {
        l.values[static_cast<std::size_t>(g.x(r))] = f.fx[static_cast<std::size_t>(r)];
        if (g.has_y(r)) l.values[static_cast<std::size_t>(g.y(r))] = f.fy[static_cast<std::size_t>(r)];
        for (int i = 1; i <= g.n_at(r); ++i)
            l.values[static_cast<std::size_t>(g.x_pend(r, i))] =
                f.fxp[static_cast<std::size_t>(r)][static_cast<std::size_t>(i) - 1];
        for (int i = 1; i <= g.m_at(r); ++i)
            l.values[static_cast<std::size_t>(g.y_pend(r, i))] =
                f.fyp[static_cast<std::size_t>(r)][static_cast<std::size_t>(i) - 1];
    }
    return l;
}

const char* case_name(const OddCase& cls) {
    switch (cls.tag) {
        case OddCaseTag::pendant_from_b: return "hairy-odd/pendant-b";
        case OddCaseTag::pendant_from_a: return "hairy-odd/pendant-a";
        case OddCaseTag::cycle_edge_xy_prev: return "hairy-odd/cycle-prev";
        case OddCaseTag::cycle_edge_xy:
            return cls.subcase == OddCase::Sub::s4_1 ? "hairy-odd/cycle-direct"
                                                     : "hairy-odd/cycle-end-swap";
    }
    return "hairy-odd";
}

} // namespace

LabeledResult odd_alpha_hairy(const OrderedBipartiteGraph& g, OddRoute route) {
    const ResolvedOdd res = resolve_odd_case(g);
    const auto& host = res.graph;
    const int e = host.edge_count();
    const int k = host.count_b;

    int c = 2 * k - 1;
    std::optional<TransformRequest> op;
    switch (res.cls.tag) {
        case OddCaseTag::pendant_from_b:
        case OddCaseTag::cycle_edge_xy_prev:
            break;
        case OddCaseTag::pendant_from_a:
            c = 2 * k + 1;
            break;
        case OddCaseTag::cycle_edge_xy:
            op = res.cls.subcase == OddCase::Sub::s4_1
                     ? TransformRequest{TransformOp::O2, res.cls.s, std::nullopt}
                     : TransformRequest{TransformOp::O4, 0, std::nullopt};
            break;
    }

    LabeledResult out;
    out.provenance.construction = case_name(res.cls);
    out.provenance.c = c;
    if (res.rearranged) out.provenance.representation = host.spec;

    if (route == OddRoute::closed_form) {
        out.labeling = assemble(host, odd_closed_forms(host, res.cls));
    } else {
        out.provenance.construction += "/transform";
        const LabelSet s = divisible_label_set(e, e).without(c);
        Labeling f = standard_alpha_s(open_caterpillar(host), s);
        out.provenance.closing_trace.push_back(closing_difference(f));
        if (op) {
            f = apply_transform(f, *op);
            out.provenance.operations.push_back(*op);
            out.provenance.closing_trace.push_back(closing_difference(f));
        }
        out.labeling = extend_with_closing_edge(f, c);
    }

    if (!verify_d_divisible(out.labeling, e, true).holds)
        fail(Errc::internal_contradiction, "odd labeling failed verification");
    return out;
}

Labeling h2t1_two_divisible(int t) {
    if (t <= 1 || t % 2 == 0)
        fail(Errc::out_of_domain, "closed form covers H(2t,1) for odd t > 1");
    OrderedBipartiteGraph g = build_corona(t, 1);
    Labeling l;
    l.host = g;
    l.values.assign(static_cast<std::size_t>(g.vertex_count()), 0);

    auto set_x = [&](int r, int v) { l.values[static_cast<std::size_t>(g.x(r))] = v; };
    auto set_y = [&](int r, int v) { l.values[static_cast<std::size_t>(g.y(r))] = v; };
    auto set_xp = [&](int r, int v) { l.values[static_cast<std::size_t>(g.x_pend(r, 1))] = v; };
    auto set_yp = [&](int r, int v) { l.values[static_cast<std::size_t>(g.y_pend(r, 1))] = v; };

    if (t % 4 == 1) {
        for (int r = 1; r <= t; ++r) {
            if (r <= (t + 3) / 4)
                set_x(r, 2 * t + 3 - 2 * r);
            else if (r <= (t + 1) / 2)
                set_x(r, 2 * t + 2 - 2 * r);
            else
                set_x(r, 2 * t + 1 - 2 * r);

            if (r <= (t - 1) / 4)
                set_yp(r, 2 * t + 2 - 2 * r);
            else if (r <= (t - 1) / 2)
                set_yp(r, 2 * t + 1 - 2 * r);
            else
                set_yp(r, 2 * t - 2 * r);

            if (r == 1)
                set_xp(r, 3 * t + 2);
            else if (r <= (t + 1) / 2)
                set_xp(r, 2 * t - 1 + 2 * r);
            else if (r == (t + 3) / 2)
                set_xp(r, 3 * t + 1);
            else
                set_xp(r, 2 * t + 2 * r);

            if (r <= (t - 1) / 2)
                set_y(r, 2 * t + 2 * r);
            else if (r == (t + 1) / 2)
                set_y(r, 3 * t + 3);
            else
                set_y(r, 2 * t + 1 + 2 * r);
        }
    } else {
        for (int r = 1; r <= t; ++r) {
            if (r <= (t + 1) / 4)
                set_x(r, 2 * t + 3 - 2 * r);
            else if (r <= (t + 1) / 2)
                set_x(r, 2 * t + 2 - 2 * r);
            else
                set_x(r, 2 * t + 1 - 2 * r);

            if (r <= (t + 1) / 4)
                set_yp(r, 2 * t + 2 - 2 * r);
            else if (r <= (t + 1) / 2)
                set_yp(r, 2 * t + 1 - 2 * r);
            else
                set_yp(r, 2 * t - 2 * r);

            if (r == 1)
                set_xp(r, 3 * t + 1);
            else if (r <= (t + 3) / 2)
                set_xp(r, 2 * t - 1 + 2 * r);
            else
                set_xp(r, 2 * t + 2 * r);

            if (r <= (t - 1) / 2)
                set_y(r, 2 * t + 2 * r);
            else if (r == (t + 1) / 2)
                set_y(r, 3 * t + 3);
            else
                set_y(r, 2 * t + 1 + 2 * r);
        }
    }

    if (!verify_d_divisible(l, 2, true).holds)
        fail(Errc::internal_contradiction, "H(2t,1) closed form failed verification");
    return l;
}

std::pair<int, int> candidate_closing_values(const DivisibilityParams& p, bool /*t_even*/) {
    if (p.e % 2 != 0)
        fail(Errc::not_admissible, "closing candidates assume an even size");
    const int c1 = p.d % 2 == 1 ? (p.e + p.d - 1) / 2 : (p.e + p.d - 2) / 2;
    const int c2 = p.d % 2 == 1 ? (p.e + p.d + 1) / 2 : (p.e + p.d + 2) / 2;
    if (p.in_delta_prime(c1) || p.in_delta_prime(c2))
        fail(Errc::internal_contradiction, "closing candidate lies in Delta'");
    return {c1, c2};
}

namespace {

// 4-divisible alpha-labeling of H(6,3): the single parameter set in the case
// tree with no rewriting route from a standard labeling. Found once by
// exhaustive search and frozen; values follow the A-then-B vertex order.
constexpr std::array<int, 24> k_h63_d4_values = {
    0,  1,  5,  6,  2,  3,  4,  7,  8,  9,  10, 11, // A: x1, y1^*, x2, y2^*, x3, y3^*
    25, 26, 27, 24, 18, 19, 22, 13, 16, 21, 23, 12, // B: x1^*, y1, x2^*, y2, x3^*, y3
};

LabeledResult corona_h63_d4() {
    LabeledResult out;
    out.labeling.host = build_corona(3, 3);
    out.labeling.values.assign(k_h63_d4_values.begin(), k_h63_d4_values.end());
    out.provenance.construction = "corona/m6-t3-direct";
    if (!verify_d_divisible(out.labeling, 4, true).holds)
        fail(Errc::internal_contradiction, "frozen H(6,3) labeling failed verification");
    return out;
}

} // namespace

LabeledResult corona_d_divisible(int t, int lambda, int d) {
    OrderedBipartiteGraph h = build_corona(t, lambda);
    const int e = h.edge_count();
    const DivisibilityParams p = divisibility_params(e, d);

    if (d == e) {
        LabeledResult r = odd_alpha_hairy(h, OddRoute::closed_form);
        r.provenance.construction = "corona/odd-labeling";
        return r;
    }

    const bool t_even = t % 2 == 0;
    const auto [c1, c2] = candidate_closing_values(p, t_even);
    const int c = t_even ? c2 : c1;
    const int mid = (t + 1) / 2;
    const int m = p.m;

    if (!t_even && d % 2 == 0 && lambda == 1 && d == 2) {
        LabeledResult out;
        out.labeling = h2t1_two_divisible(t);
        out.provenance.construction = "corona/lambda1-closed-form";
        out.provenance.c = closing_difference(out.labeling);
        return out;
    }
    if (!t_even && d % 2 == 0 && lambda == 3 && m == 6 && t == 3) return corona_h63_d4();
    if (!t_even && d % 2 == 0 && lambda >= 4 && (lambda + 3) % m == 0 && m >= 4 && t == 3 && lambda < 7)
        fail(Errc::internal_contradiction,
             "parameter set is unreachable: no admissible even d exists here");

    const LabelSet s = divisible_label_set(e, d).without(c);
    const Labeling f = standard_alpha_s(open_caterpillar(h), s);

    LabeledResult out;
    out.provenance.c = c;

    auto run_ops = [&](const std::vector<TransformRequest>& ops, bool scan_o54) -> std::optional<Labeling> {
        Labeling cur = f;
        out.provenance.operations.clear();
        out.provenance.closing_trace = {closing_difference(f)};
        std::set<int> touched;
        auto apply_one = [&](const TransformRequest& r) -> bool {
            if (!check_preconditions(cur, r).ok) return false;
            const auto changed = changed_edge_indices(cur, r);
            for (int idx : changed)
                if (touched.count(idx)) return false;
            cur = apply_transform(cur, r);
            touched.insert(changed.begin(), changed.end());
            out.provenance.operations.push_back(r);
            out.provenance.closing_trace.push_back(closing_difference(cur));
            return true;
        };
        for (const TransformRequest& r : ops)
            if (!apply_one(r)) return std::nullopt;
        if (scan_o54) {
            bool done = false;
            for (int ss = 1; !done && ss <= t - 1; ++ss)
                done = apply_one({TransformOp::O5_4, ss, std::nullopt});
            if (!done) return std::nullopt;
        }
        if (closing_difference(cur) != c) return std::nullopt;
        return extend_with_closing_edge(cur, c);
    };

    std::optional<Labeling> labeled;
    if (t_even) {
        out.provenance.construction = "corona/even-t";
        labeled = run_ops({}, false);
    } else if (d % 2 == 1) {
        out.provenance.construction = "corona/odd-t/o1";
        labeled = run_ops({{TransformOp::O1, mid, std::nullopt}}, false);
    } else if (lambda == 1) {
        out.provenance.construction = "corona/lambda1-search";
        labeled = std::nullopt; // resolved by the sequence search below
    } else if ((lambda + 2) % m == 0) {
        out.provenance.construction = "corona/odd-t/o2";
        labeled = run_ops({{TransformOp::O2, mid, std::nullopt}}, false);
    } else if ((lambda + 3) % m == 0) {
        if (m == 2) {
            out.provenance.construction = "corona/odd-t/m2-o1-o5";
            labeled = run_ops({{TransformOp::O1, mid, std::nullopt}, {TransformOp::O5, 1, std::nullopt}}, false);
        } else if (m == 3) {
            out.provenance.construction = "corona/odd-t/m3-o1-o1";
            labeled = run_ops({{TransformOp::O1, 1, std::nullopt}, {TransformOp::O1, mid, std::nullopt}}, false);
        } else if (lambda == 2) { // m = 5
            out.provenance.construction = "corona/odd-t/m5-o1-o5";
            labeled = run_ops({{TransformOp::O1, mid, std::nullopt}, {TransformOp::O5, mid + 1, std::nullopt}}, false);
        } else if (lambda == 3) { // m = 6, t >= 5
            out.provenance.construction = "corona/odd-t/m6-o1-o5";
            labeled = run_ops({{TransformOp::O1, mid, std::nullopt}, {TransformOp::O5, 3, std::nullopt}}, false);
        } else { // lambda >= 4 (t >= 5, or t = 3 with lambda >= 7)
            out.provenance.construction = "corona/odd-t/o1-o54";
            labeled = run_ops({{TransformOp::O1, mid, std::nullopt}}, true);
        }
    } else {
        out.provenance.construction = "corona/odd-t/o3";
        labeled = run_ops({{TransformOp::O3, mid, std::nullopt}}, false);
    }

    if (!labeled) {
        if (auto seq = search_transform_sequence(f, c, 3)) {
            labeled = run_ops(*seq, false);
            if (out.provenance.construction != "corona/lambda1-search")
                out.provenance.construction += "+search";
        }
    }
    if (!labeled && h.vertex_count() <= 20) {
        auto found = search_labelings(h, divisible_label_set(e, d), true, 1);
        if (!found.empty()) {
            labeled = found.front();
            out.provenance.construction += "+oracle";
            out.provenance.operations.clear();
            out.provenance.closing_trace.clear();
        }
    }
    if (!labeled)
        fail(Errc::internal_contradiction, "corona construction did not reach the closing value");

    out.labeling = *labeled;
    if (!verify_d_divisible(out.labeling, d, true).holds)
        fail(Errc::internal_contradiction, "corona labeling failed verification");
    return out;
}

} // namespace divgrace
