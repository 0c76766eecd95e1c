#pragma once

#include <optional>
#include <vector>

#include "divgrace/hairy.hpp"

namespace divgrace {

// Valid closing differences c = 2k + d_y for C_{4k}: a single value when
// m = 4k/d is even, two (both odd) when m is odd.
std::vector<int> cycle_closing_value(int k, int d);

// d-divisible alpha-labeling of C_{4k}; when two closing values exist the
// smaller is the default.
LabeledResult cycle_d_divisible(int k, int d, std::optional<int> c_choice = std::nullopt);

} // namespace divgrace
