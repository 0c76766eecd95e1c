#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divgrace/error.hpp"

namespace divgrace {

// Pendant-count description of a caterpillar: [n_1, m_1, ..., n_t, m_t].
// The spine alternates x_1, y_1, x_2, ..., with n_i pendant edges at x_i and
// m_i at y_i. An odd-length sequence describes a spine ending at x_t (the
// trailing m_t is absent, not zero: the vertex y_t does not exist).
struct CaterpillarSpec {
    std::vector<int> pendants;

    int length() const { return static_cast<int>(pendants.size()); }
    bool even_length() const { return length() % 2 == 0; }
    int spine_pairs() const { return (length() + 1) / 2; } // t
    int spine_vertex_count() const { return length(); }
    int pendants_at_x(int i) const { return pendants[2 * (i - 1)]; } // 1-based i
    bool has_y(int i) const { return 2 * i - 1 < length(); }
    int pendants_at_y(int i) const { return has_y(i) ? pendants[2 * i - 1] : 0; }
    int pendant_sum() const;
    int edge_count() const; // spine edges (length-1) + pendant sum

    void validate() const; // throws invalid_spec

    bool operator==(const CaterpillarSpec&) const = default;
};

enum class GraphKind { caterpillar, hairy_cycle, cycle, generic };

const char* kind_name(GraphKind k);
GraphKind kind_from_name(const std::string& name);

enum class Side { A, B };

// A bipartite graph with the canonical vertex and edge orders used by every
// construction in this library. Vertex ids are dense: 0..|A|-1 follow the
// A order (x_1, y_1-pendants, x_2, ...), |A|..|V|-1 follow the B order
// (x_1-pendants, y_1, x_2-pendants, ...). Edges are listed pendants-at-x_i,
// spine [x_i,y_i], pendants-at-y_i, spine [y_i,x_{i+1}], for i = 1..t, with
// the closing edge [x_1,y_t] appended last for hairy cycles and cycles.
struct OrderedBipartiteGraph {
    CaterpillarSpec spec;
    GraphKind kind = GraphKind::caterpillar;
    int count_a = 0;
    int count_b = 0;
    std::vector<std::pair<int, int>> edges; // (a-id, b-id)
    std::optional<int> closing_edge_index;

    // role lookup, 1-based spine index
    std::vector<int> spine_x;              // id of x_i
    std::vector<int> spine_y;              // id of y_i (may be shorter than spine_x)
    std::vector<std::vector<int>> pend_x;  // ids of x_i^j (B side)
    std::vector<std::vector<int>> pend_y;  // ids of y_i^j (A side)

    int t() const { return static_cast<int>(spine_x.size()); }
    int vertex_count() const { return count_a + count_b; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_a(int id) const { return id < count_a; }
    Side side_of(int id) const { return is_a(id) ? Side::A : Side::B; }

    int x(int i) const { return spine_x[static_cast<std::size_t>(i) - 1]; }
    bool has_y(int i) const { return i >= 1 && i <= static_cast<int>(spine_y.size()); }
    int y(int i) const { return spine_y[static_cast<std::size_t>(i) - 1]; }
    int n_at(int i) const { return static_cast<int>(pend_x[static_cast<std::size_t>(i) - 1].size()); }
    int m_at(int i) const { return static_cast<int>(pend_y[static_cast<std::size_t>(i) - 1].size()); }
    int x_pend(int i, int j) const { return pend_x[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1]; }
    int y_pend(int i, int j) const { return pend_y[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1]; }

    bool operator==(const OrderedBipartiteGraph&) const = default;
};

// Which structural role an edge plays; i is the spine index it belongs to.
struct EdgeRole {
    enum Kind { x_pendant, spine_xy, y_pendant, spine_yx, closing } kind;
    int i = 0; // spine index (for spine_yx: the edge [y_i, x_{i+1}])
    int j = 0; // pendant index, when applicable
};

EdgeRole edge_role(const OrderedBipartiteGraph& g, int edge_index);

OrderedBipartiteGraph build_caterpillar(const CaterpillarSpec& spec);
OrderedBipartiteGraph build_hairy_cycle(const CaterpillarSpec& spec);
OrderedBipartiteGraph build_corona(int t, int lambda);
OrderedBipartiteGraph build_cycle(int k_edges);

// The caterpillar obtained by deleting the closing edge (ids unchanged).
OrderedBipartiteGraph open_caterpillar(const OrderedBipartiteGraph& g);

// Rebuild the closed graph a caterpillar labeling extends to.
OrderedBipartiteGraph close_graph(const CaterpillarSpec& spec);

// Another representation of the same hairy cycle: restart the cycle traversal
// at spine position `rotation` (0-based, 0..2t-1), reversed when `reflect`.
CaterpillarSpec rerepresent_hairy(const OrderedBipartiteGraph& g, int rotation, bool reflect);

// Lexicographically least pendant sequence over all rotations/reflections;
// equal forms <=> isomorphic hairy cycles.
std::vector<int> canonical_cycle_form(const std::vector<int>& pendants);

} // namespace divgrace
