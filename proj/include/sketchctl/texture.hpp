#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sketchctl/raster.hpp"

namespace sketchctl {

struct LevelImage {
    int width = 0;
    int height = 0;
    int levels = 0;
    std::vector<std::uint8_t> values;

    std::uint8_t at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

enum class GlcmDirection { deg0, deg45, deg90, deg135 };

inline constexpr std::array<GlcmDirection, 4> kGlcmDirections = {
    GlcmDirection::deg0, GlcmDirection::deg45, GlcmDirection::deg90, GlcmDirection::deg135};

// (dy, dx) step for a direction at a given distance.
struct GlcmOffset {
    int dy = 0;
    int dx = 0;
};
GlcmOffset glcm_offset(GlcmDirection direction, int distance);

// Symmetric co-occurrence counts and their normalized probabilities.
// `empty` is set when the image holds no in-bounds pixel pair for the offset.
struct GlcmMatrix {
    int levels = 0;
    GlcmDirection direction = GlcmDirection::deg0;
    int distance = 1;
    bool empty = true;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> counts; // levels x levels
    std::vector<double> probs;         // counts / total

    std::uint64_t count_at(int i, int j) const { return counts[static_cast<std::size_t>(i) * levels + j]; }
    double prob_at(int i, int j) const { return probs[static_cast<std::size_t>(i) * levels + j]; }
};

struct TextureFeatures {
    double contrast = 0.0;
    double dissimilarity = 0.0;
    double homogeneity = 0.0;
    double contrast_scaled = 0.0;      // contrast / (G-1)^2
    double dissimilarity_scaled = 0.0; // dissimilarity / (G-1)
    double homogeneity_scaled = 0.0;   // homogeneity
};

// level = floor(intensity * levels / 256); levels must be in [2, 256].
LevelImage quantize(const SketchRaster& raster, int levels);

// Accumulates both orderings of every in-bounds pixel pair, then normalizes.
GlcmMatrix glcm(const LevelImage& image, GlcmDirection direction, int distance);

// Contrast, dissimilarity, homogeneity and their [0, 1] scalings.
// Returns nullopt for an empty matrix.
std::optional<TextureFeatures> texture_features(const GlcmMatrix& matrix);

// Per-direction score ((1-C_s) + (1-D_s) + H_s) / 3.
double direction_texture_score(const TextureFeatures& features);

// Mean of the per-direction scores over non-empty directions. Throws when
// every direction is empty.
double texture_score(std::span<const std::optional<TextureFeatures>> per_direction);

} // namespace sketchctl
