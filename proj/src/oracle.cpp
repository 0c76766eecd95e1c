#include "divgrace/oracle.hpp"

#include <algorithm>
#include <set>

namespace divgrace {

namespace {

struct Searcher {
    const OrderedBipartiteGraph& g;
    const LabelSet& s;
    const SearchOptions& opt;
    const std::function<bool(const Labeling&)>& visit;

    std::vector<int> order{};                          // assignment order of vertex ids
    std::vector<std::vector<int>> closes{};            // per order position, ids of earlier neighbours
    std::vector<int> values{};                         // by vertex id, -1 = unset
    std::vector<char> label_used{};                    // 0..max
    std::vector<char> diff_avail{};                    // 1..max
    std::uint64_t nodes = 0;
    std::uint64_t found = 0;
    bool stop = false;
    bool budget_hit = false;

    int max_label() const { return s.max_value(); }

    void build_order() {
        std::vector<char> placed(static_cast<std::size_t>(g.vertex_count()), 0);
        auto place = [&](int id) {
            order.push_back(id);
            placed[static_cast<std::size_t>(id)] = 1;
        };
        place(g.x(1));
        // assigning y_t right after x_1 closes the closing edge early
        if (g.closing_edge_index) place(g.y(g.t()));
        for (const auto& [a, b] : g.edges) {
            if (!placed[static_cast<std::size_t>(a)]) place(a);
            if (!placed[static_cast<std::size_t>(b)]) place(b);
        }
        closes.resize(order.size());
        std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t p = 0; p < order.size(); ++p) pos[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
        for (const auto& [a, b] : g.edges) {
            const int pa = pos[static_cast<std::size_t>(a)], pb = pos[static_cast<std::size_t>(b)];
            if (pa < pb)
                closes[static_cast<std::size_t>(pb)].push_back(a);
            else
                closes[static_cast<std::size_t>(pa)].push_back(b);
        }
    }

    bool alpha_ok(int id, int value, int min_b, int max_a) const {
        if (!opt.require_alpha) return true;
        return g.is_a(id) ? value < min_b : value > max_a;
    }

    void run() {
        build_order();
        values.assign(static_cast<std::size_t>(g.vertex_count()), -1);
        label_used.assign(static_cast<std::size_t>(max_label()) + 1, 0);
        diff_avail.assign(static_cast<std::size_t>(max_label()) + 1, 0);
        for (int d : s.values) diff_avail[static_cast<std::size_t>(d)] = 1;
        recurse(0, max_label() + 1, -1);
    }

    void recurse(std::size_t pos, int min_b, int max_a) {
        if (stop || budget_hit) return;
        if (opt.node_budget && ++nodes > opt.node_budget) {
            budget_hit = true;
            return;
        }
        if (pos == order.size()) {
            Labeling l;
            l.host = g;
            l.values = values;
            ++found;
            if (!visit(l) || found >= opt.limit) stop = true;
            return;
        }
        const int id = order[pos];
        const auto& back = closes[pos];

        std::vector<int> candidates;
        if (back.empty()) {
            for (int v = 0; v <= max_label(); ++v) candidates.push_back(v);
        } else {
            const int fo = values[static_cast<std::size_t>(back[0])];
            for (int d : s.values) {
                if (!diff_avail[static_cast<std::size_t>(d)]) continue;
                if (fo - d >= 0) candidates.push_back(fo - d);
                if (fo + d <= max_label()) candidates.push_back(fo + d);
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        }

        for (int v : candidates) {
            if (label_used[static_cast<std::size_t>(v)]) continue;
            if (!alpha_ok(id, v, min_b, max_a)) continue;
            // consume one difference per closed edge; all must be distinct and available
            std::vector<int> consumed;
            bool ok = true;
            for (int other : back) {
                const int d = std::abs(v - values[static_cast<std::size_t>(other)]);
                if (d == 0 || d > max_label() || !diff_avail[static_cast<std::size_t>(d)]) {
                    ok = false;
                    break;
                }
                diff_avail[static_cast<std::size_t>(d)] = 0;
                consumed.push_back(d);
            }
            if (ok) {
                values[static_cast<std::size_t>(id)] = v;
                label_used[static_cast<std::size_t>(v)] = 1;
                recurse(pos + 1,
                        g.is_a(id) ? min_b : std::min(min_b, v),
                        g.is_a(id) ? std::max(max_a, v) : max_a);
                label_used[static_cast<std::size_t>(v)] = 0;
                values[static_cast<std::size_t>(id)] = -1;
            }
            for (int d : consumed) diff_avail[static_cast<std::size_t>(d)] = 1;
            if (stop || budget_hit) return;
        }
    }
};

} // namespace

SearchOutcome search_labelings_visit(const OrderedBipartiteGraph& g, const LabelSet& s,
                                     const SearchOptions& options,
                                     const std::function<bool(const Labeling&)>& visit) {
    if (s.size() != g.edge_count())
        fail(Errc::size_mismatch, "label set size must equal the edge count");
    if (g.vertex_count() > options.max_vertices)
        fail(Errc::search_budget_exceeded, "instance exceeds the search vertex bound");
    Searcher searcher{g, s, options, visit};
    searcher.run();
    if (searcher.budget_hit) return SearchOutcome::budget_exhausted;
    if (searcher.stop) return SearchOutcome::limit_reached;
    return SearchOutcome::completed;
}

std::vector<Labeling> search_labelings(const OrderedBipartiteGraph& g, const LabelSet& s,
                                       bool require_alpha, std::uint64_t limit) {
    SearchOptions opt;
    opt.require_alpha = require_alpha;
    opt.limit = limit;
    std::vector<Labeling> out;
    search_labelings_visit(g, s, opt, [&out](const Labeling& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

namespace {

std::vector<TransformRequest> candidate_requests(const Labeling& l) {
    std::vector<TransformRequest> out;
    const int t = l.host.t();
    for (TransformOp op : {TransformOp::O1, TransformOp::O2, TransformOp::O3,
                           TransformOp::O4, TransformOp::O5, TransformOp::O5_4}) {
        if (op == TransformOp::O4) {
            TransformRequest r{op, 0, std::nullopt};
            if (check_preconditions(l, r).ok) out.push_back(r);
            continue;
        }
        for (int s = 1; s <= t - 1; ++s) {
            TransformRequest r{op, s, std::nullopt};
            if (check_preconditions(l, r).ok) out.push_back(r);
        }
    }
    return out;
}

std::optional<std::vector<TransformRequest>> dfs_sequence(const Labeling& cur, int target,
                                                          int depth, std::set<int>& touched,
                                                          std::vector<TransformRequest>& seq) {
    const int cd = closing_difference(cur);
    if (cd == target) return seq;
    if (depth == 0 || cd < target) return std::nullopt;
    for (const TransformRequest& r : candidate_requests(cur)) {
        const auto changed = changed_edge_indices(cur, r);
        if (std::any_of(changed.begin(), changed.end(),
                        [&touched](int e) { return touched.count(e) > 0; }))
            continue;
        touched.insert(changed.begin(), changed.end());
        seq.push_back(r);
        if (auto hit = dfs_sequence(apply_transform(cur, r), target, depth - 1, touched, seq))
            return hit;
        seq.pop_back();
        for (int e : changed) touched.erase(e);
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<TransformRequest>>
search_transform_sequence(const Labeling& l, int target_closing, int budget) {
    for (int depth = 0; depth <= budget; ++depth) {
        std::set<int> touched;
        std::vector<TransformRequest> seq;
        if (auto hit = dfs_sequence(l, target_closing, depth, touched, seq)) return hit;
    }
    return std::nullopt;
}

} // namespace divgrace
