#include "divgrace/multipartite.hpp"

namespace divgrace {

void MultipartiteSpec::validate() const {
    if (part_count < 1 || part_size < 1)
        fail(Errc::invalid_spec, "multipartite spec needs positive part count and size");
}

std::int64_t multipartite_edge_count(const MultipartiteSpec& spec) {
    spec.validate();
    const std::int64_t v = spec.v();
    return v * (v - spec.part_size) / 2;
}

std::vector<std::pair<int, int>> multipartite_edges(const MultipartiteSpec& spec) {
    spec.validate();
    const int v = spec.v();
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(multipartite_edge_count(spec)));
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w)
            if (u % spec.part_count != w % spec.part_count) out.emplace_back(u, w);
    return out;
}

} // namespace divgrace
