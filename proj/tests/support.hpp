#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "divgrace/caterpillar.hpp"

namespace testsupport {

// Enumerates pendant sequences of length `len` with entries summing to at
// most `max_sum`, invoking fn on each.
template <typename Fn>
void for_each_sequence(int len, int max_sum, Fn&& fn) {
    std::vector<int> seq(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == len) {
            fn(seq);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            seq[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, budget - v);
        }
        seq[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, max_sum);
}

// All caterpillar specs with length in [1, 2*max_t], pendant sum <= max_sum
// and 1 <= edge count <= max_e.
inline std::vector<divgrace::CaterpillarSpec> caterpillar_sweep(int max_t, int max_sum, int max_e) {
    std::vector<divgrace::CaterpillarSpec> out;
    for (int len = 1; len <= 2 * max_t; ++len)
        for_each_sequence(len, max_sum, [&](const std::vector<int>& seq) {
            divgrace::CaterpillarSpec spec{seq};
            const int e = spec.edge_count();
            if (e >= 1 && e <= max_e) out.push_back(spec);
        });
    return out;
}

// Bipartite hairy cycles: even length, t >= 2, at least one pendant.
inline std::vector<divgrace::CaterpillarSpec> hairy_sweep(int max_t, int max_sum, int max_e) {
    std::vector<divgrace::CaterpillarSpec> out;
    for (int t = 2; t <= max_t; ++t)
        for_each_sequence(2 * t, max_sum, [&](const std::vector<int>& seq) {
            divgrace::CaterpillarSpec spec{seq};
            if (spec.pendant_sum() == 0) return;
            if (spec.edge_count() + 1 <= max_e) out.push_back(spec);
        });
    return out;
}

inline std::vector<int> divisors_of(int e) {
    std::vector<int> out;
    for (int d = 1; d <= e; ++d)
        if (e % d == 0) out.push_back(d);
    return out;
}

} // namespace testsupport
