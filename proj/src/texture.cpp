#include "sketchctl/texture.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sketchctl {

GlcmOffset glcm_offset(GlcmDirection direction, int distance) {
    switch (direction) {
        case GlcmDirection::deg0: return {0, distance};
        case GlcmDirection::deg45: return {-distance, distance};
        case GlcmDirection::deg90: return {-distance, 0};
        case GlcmDirection::deg135: return {-distance, -distance};
    }
    throw std::invalid_argument("unknown GLCM direction");
}

LevelImage quantize(const SketchRaster& raster, int levels) {
    if (levels < 2 || levels > 256) throw std::invalid_argument("levels must be in [2, 256]");
    LevelImage image;
    image.width = raster.width;
    image.height = raster.height;
    image.levels = levels;
    image.values.resize(raster.pixels.size());
    for (std::size_t i = 0; i < raster.pixels.size(); ++i) {
        image.values[i] = static_cast<std::uint8_t>((raster.pixels[i] * levels) / 256);
    }
    return image;
}

namespace {

void accumulate_rows(const LevelImage& img, const GlcmOffset& off, int y_begin, int y_end,
                     std::uint64_t* counts) {
    const int g = img.levels;
    for (int y = y_begin; y < y_end; ++y) {
        const int ny = y + off.dy;
        if (ny < 0 || ny >= img.height) continue;
        for (int x = 0; x < img.width; ++x) {
            const int nx = x + off.dx;
            if (nx < 0 || nx >= img.width) continue;
            const int a = img.at(x, y);
            const int b = img.at(nx, ny);
            ++counts[static_cast<std::size_t>(a) * g + b];
            ++counts[static_cast<std::size_t>(b) * g + a];
        }
    }
}

} // namespace

GlcmMatrix glcm(const LevelImage& image, GlcmDirection direction, int distance) {
    if (distance < 1) throw std::invalid_argument("distance must be >= 1");
    if (image.width < 1 || image.height < 1) throw std::invalid_argument("image must be nonempty");

    const GlcmOffset off = glcm_offset(direction, distance);
    const int g = image.levels;
    GlcmMatrix m;
    m.levels = g;
    m.direction = direction;
    m.distance = distance;
    m.counts.assign(static_cast<std::size_t>(g) * g, 0);

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    if (threads > 1 && image.height > 1) {
        std::vector<std::vector<std::uint64_t>> partial(
            threads, std::vector<std::uint64_t>(m.counts.size(), 0));
#pragma omp parallel
        {
            const int tid = omp_get_thread_num();
#pragma omp for schedule(static)
            for (int y = 0; y < image.height; ++y) {
                accumulate_rows(image, off, y, y + 1, partial[tid].data());
            }
        }
        for (const auto& local : partial) {
            for (std::size_t i = 0; i < m.counts.size(); ++i) m.counts[i] += local[i];
        }
    } else {
        accumulate_rows(image, off, 0, image.height, m.counts.data());
    }
#else
    accumulate_rows(image, off, 0, image.height, m.counts.data());
#endif

    for (const std::uint64_t c : m.counts) m.total += c;
    m.empty = m.total == 0;
    if (!m.empty) {
        m.probs.resize(m.counts.size());
        const double inv = 1.0 / static_cast<double>(m.total);
        for (std::size_t i = 0; i < m.counts.size(); ++i) {
            m.probs[i] = static_cast<double>(m.counts[i]) * inv;
        }
    }
    return m;
}

std::optional<TextureFeatures> texture_features(const GlcmMatrix& matrix) {
    if (matrix.empty) return std::nullopt;
    const int g = matrix.levels;
    TextureFeatures f;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            const double p = matrix.prob_at(i, j);
            if (p == 0.0) continue;
            const double diff = std::abs(i - j);
            f.contrast += diff * diff * p;
            f.dissimilarity += diff * p;
            f.homogeneity += p / (1.0 + diff);
        }
    }
    const double span = g - 1;
    f.contrast_scaled = f.contrast / (span * span);
    f.dissimilarity_scaled = f.dissimilarity / span;
    f.homogeneity_scaled = f.homogeneity;
    return f;
}

double direction_texture_score(const TextureFeatures& features) {
    return ((1.0 - features.contrast_scaled) + (1.0 - features.dissimilarity_scaled) +
            features.homogeneity_scaled) /
           3.0;
}

double texture_score(std::span<const std::optional<TextureFeatures>> per_direction) {
    double acc = 0.0;
    int live = 0;
    for (const auto& features : per_direction) {
        if (!features) continue;
        acc += direction_texture_score(*features);
        ++live;
    }
    if (live == 0) throw std::runtime_error("image too small for texture analysis");
    return acc / live;
}

} // namespace sketchctl
