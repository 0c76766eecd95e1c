#include "divgrace/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace divgrace {

using nlohmann::json;

json graph_to_json(const OrderedBipartiteGraph& g) {
    json j;
    j["kind"] = kind_name(g.kind);
    j["pendants"] = g.spec.pendants;
    j["t"] = g.spec.spine_pairs();
    if (g.kind == GraphKind::hairy_cycle) {
        const auto& p = g.spec.pendants;
        if (std::all_of(p.begin(), p.end(), [&p](int x) { return x == p.front(); }))
            j["lambda"] = p.front();
    }
    return j;
}

OrderedBipartiteGraph graph_from_json(const json& j) {
    if (!j.contains("kind") || !j.contains("pendants"))
        fail(Errc::io_error, "graph json needs kind and pendants");
    CaterpillarSpec spec;
    spec.pendants = j.at("pendants").get<std::vector<int>>();
    switch (kind_from_name(j.at("kind").get<std::string>())) {
        case GraphKind::caterpillar: return build_caterpillar(spec);
        case GraphKind::hairy_cycle: return build_hairy_cycle(spec);
        case GraphKind::cycle: return build_cycle(spec.length());
        case GraphKind::generic: break;
    }
    fail(Errc::io_error, "unsupported graph kind in json");
}

json provenance_to_json(const Provenance& p) {
    json j;
    j["construction"] = p.construction;
    if (p.c) j["c"] = *p.c;
    if (!p.operations.empty()) {
        json ops = json::array();
        for (const auto& r : p.operations) {
            json o;
            o["op"] = op_name(r.op);
            if (r.op != TransformOp::O4) o["s"] = r.s;
            if (r.j) o["j"] = *r.j;
            ops.push_back(o);
        }
        j["operations"] = ops;
    }
    if (!p.closing_trace.empty()) j["closingTrace"] = p.closing_trace;
    if (p.representation) j["representation"] = p.representation->pendants;
    return j;
}

json labeling_to_json(const Labeling& l) {
    json j;
    j["graph"] = graph_to_json(l.host);
    j["values"] = l.values; // vertex ids follow the A-then-B order
    return j;
}

json labeling_to_json(const Labeling& l, int d) {
    json j = labeling_to_json(l);
    j["d"] = d;
    return j;
}

Labeling labeling_from_json(const json& j) {
    if (!j.contains("graph") || !j.contains("values"))
        fail(Errc::io_error, "labeling json needs graph and values");
    Labeling l;
    l.host = graph_from_json(j.at("graph"));
    l.values = j.at("values").get<std::vector<int>>();
    if (static_cast<int>(l.values.size()) != l.host.vertex_count())
        fail(Errc::io_error, "value count does not match the vertex count");
    return l;
}

json report_to_json(const VerifyReport& r) {
    json j;
    j["holds"] = r.holds;
    j["failures"] = r.failures;
    return j;
}

json report_to_json(const DecompositionReport& r) {
    json j;
    j["holds"] = r.holds;
    j["failures"] = r.failures;
    j["blockCount"] = r.block_count;
    j["edgeCount"] = r.edge_count;
    return j;
}

json decomposition_to_json(const Decomposition& dec, bool include_developed) {
    json j;
    j["v"] = dec.v;
    j["partCount"] = dec.part_count;
    j["partSize"] = dec.part_size;
    j["n"] = dec.n;
    json bb = json::array();
    for (const auto& b : dec.base_blocks) {
        json edges = json::array();
        for (auto [u, w] : b.edges) edges.push_back(json::array({u, w}));
        bb.push_back(edges);
    }
    j["baseBlocks"] = bb;
    if (include_developed && !dec.blocks.empty()) {
        json dv = json::array();
        for (const auto& block : dec.blocks) {
            json edges = json::array();
            for (auto [u, w] : block) edges.push_back(json::array({u, w}));
            dv.push_back(edges);
        }
        j["developed"] = dv;
    }
    return j;
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition dec;
    dec.v = j.at("v").get<int>();
    dec.part_count = j.at("partCount").get<int>();
    dec.part_size = j.at("partSize").get<int>();
    dec.n = j.at("n").get<int>();
    int shift = 0;
    for (const auto& edges : j.at("baseBlocks")) {
        BaseBlock b;
        b.shift_index = shift++;
        for (const auto& e : edges) b.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        dec.base_blocks.push_back(std::move(b));
    }
    if (j.contains("developed"))
        for (const auto& edges : j.at("developed")) {
            std::vector<std::pair<int, int>> block;
            for (const auto& e : edges) block.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            dec.blocks.push_back(std::move(block));
        }
    return dec;
}

std::string canonical_dump(const json& j) {
    return j.dump(2) + "\n"; // nlohmann objects keep keys sorted
}

namespace {

std::string vertex_name(const OrderedBipartiteGraph& g, int id) {
    for (int i = 1; i <= g.t(); ++i) {
        if (g.x(i) == id) return "x" + std::to_string(i);
        if (g.has_y(i) && g.y(i) == id) return "y" + std::to_string(i);
        for (int j = 1; j <= g.n_at(i); ++j)
            if (g.x_pend(i, j) == id) return "x" + std::to_string(i) + "_" + std::to_string(j);
        for (int j = 1; j <= g.m_at(i); ++j)
            if (g.y_pend(i, j) == id) return "y" + std::to_string(i) + "_" + std::to_string(j);
    }
    return "v" + std::to_string(id);
}

std::string dot_impl(const OrderedBipartiteGraph& g, const Labeling* l) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  rankdir=LR;\n";
    out << "  { rank=same;";
    for (int id = 0; id < g.count_a; ++id) out << " " << vertex_name(g, id) << ";";
    out << " }\n";
    out << "  { rank=same;";
    for (int id = g.count_a; id < g.vertex_count(); ++id) out << " " << vertex_name(g, id) << ";";
    out << " }\n";
    if (l)
        for (int id = 0; id < g.vertex_count(); ++id)
            out << "  " << vertex_name(g, id) << " [label=\"" << vertex_name(g, id) << "="
                << l->value(id) << "\"];\n";
    for (const auto& [a, b] : g.edges) {
        out << "  " << vertex_name(g, a) << " -- " << vertex_name(g, b);
        if (l) out << " [label=\"" << std::abs(l->value(b) - l->value(a)) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string to_dot(const OrderedBipartiteGraph& g) { return dot_impl(g, nullptr); }

std::string to_dot(const Labeling& l) { return dot_impl(l.host, &l); }

} // namespace divgrace
