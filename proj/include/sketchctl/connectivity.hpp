#pragma once

#include <cstdint>
#include <vector>

#include "sketchctl/raster.hpp"

namespace sketchctl {

// Per-pixel component ids: 0 = ground, 1..count = ink components under
// 8-adjacency.
struct ComponentLabeling {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;
    int count = 0;

    std::int32_t at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

// Depth-first flood fill with an explicit worklist; each root start opens a
// new component.
ComponentLabeling label_components(const BinaryMask& mask);

// A_L = 1 - L / L_max, clamped to [0, 1]. L_max must be >= 1.
double connectivity_score(int components, int max_components);

} // namespace sketchctl
