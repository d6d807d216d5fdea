#pragma once

#include <vector>

namespace coverdec {

enum class Color : unsigned char { Red, Blue };

/// Total color assignment for a point list, by index.
using Coloring = std::vector<Color>;

/// Disjoint exhaustive split of point indices.
struct Partition {
    std::vector<std::vector<int>> parts;
};

} // namespace coverdec
