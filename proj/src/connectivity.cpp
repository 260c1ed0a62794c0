#include "sketchctl/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace sketchctl {

ComponentLabeling label_components(const BinaryMask& mask) {
    const int w = mask.width;
    const int h = mask.height;
    ComponentLabeling labeling;
    labeling.width = w;
    labeling.height = h;
    labeling.labels.assign(mask.bits.size(), 0);

    std::vector<std::size_t> worklist;
    for (std::size_t start = 0; start < mask.bits.size(); ++start) {
        if (!mask.bits[start] || labeling.labels[start] != 0) continue;
        const std::int32_t id = ++labeling.count;
        labeling.labels[start] = id;
        worklist.assign(1, start);
        while (!worklist.empty()) {
            const std::size_t p = worklist.back();
            worklist.pop_back();
            const int px = static_cast<int>(p % w);
            const int py = static_cast<int>(p / w);
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int nx = px + dx;
                    const int ny = py + dy;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    const std::size_t q = static_cast<std::size_t>(ny) * w + nx;
                    if (mask.bits[q] && labeling.labels[q] == 0) {
                        labeling.labels[q] = id;
                        worklist.push_back(q);
                    }
                }
            }
        }
    }
    return labeling;
}

double connectivity_score(int components, int max_components) {
    if (max_components < 1) throw std::invalid_argument("max_components must be >= 1");
    if (components < 0) throw std::invalid_argument("components must be >= 0");
    const double score = 1.0 - static_cast<double>(components) / max_components;
    return std::clamp(score, 0.0, 1.0);
}

} // namespace sketchctl
