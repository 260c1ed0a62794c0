#include "sketchctl/abstraction.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include "sketchctl/connectivity.hpp"
#include "sketchctl/contour.hpp"
#include "sketchctl/texture.hpp"

namespace sketchctl {

void ScoreWeights::validate() const {
    if (continuity < 0.0 || connectivity < 0.0 || texture < 0.0) {
        throw std::invalid_argument("score weights must be non-negative");
    }
    if (continuity + connectivity + texture <= 0.0) {
        throw std::invalid_argument("score weights must not all be zero");
    }
}

double abstraction_score(double continuity, double connectivity, double texture,
                         const ScoreWeights& weights) {
    weights.validate();
    for (const double v : {continuity, connectivity, texture}) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("component scores must be finite and >= 0");
        }
    }
    return weights.continuity * continuity + weights.connectivity * connectivity +
           weights.texture * texture;
}

double sequence_score(std::span<const double> per_frame) {
    if (per_frame.empty()) throw std::invalid_argument("sequence must contain at least one frame");
    double acc = 0.0;
    for (const double v : per_frame) acc += v;
    return acc / static_cast<double>(per_frame.size());
}

ControlParams map_to_control(double combined_score) {
    if (combined_score <= 0.5) return {0.55, 0.4};
    if (combined_score <= 1.0) return {0.65, 0.5};
    return {0.85, 0.6};
}

FrameScores analyze_frame(const SketchRaster& raster, const AnalysisConfig& config) {
    const BinaryMask mask = binarize(raster, config.binarize_threshold);

    const ContourSet contours = trace_contours(mask);
    const double a_c = continuity_score(contours, raster.width, raster.height);

    const ComponentLabeling labeling = label_components(mask);
    const double a_l = connectivity_score(labeling.count, config.max_components);

    const LevelImage levels = quantize(raster, config.glcm_levels);
    std::vector<std::optional<TextureFeatures>> per_direction;
    per_direction.reserve(kGlcmDirections.size());
    for (const GlcmDirection direction : kGlcmDirections) {
        per_direction.push_back(texture_features(glcm(levels, direction, config.glcm_distance)));
    }
    const double a_t = texture_score(per_direction);

    FrameScores scores;
    scores.continuity = a_c;
    scores.connectivity = a_l;
    scores.texture = a_t;
    scores.combined = abstraction_score(a_c, a_l, a_t, config.weights);
    return scores;
}

AbstractionReport analyze_sequence(std::span<const SketchRaster> frames,
                                   const AnalysisConfig& config) {
    if (frames.empty()) throw std::invalid_argument("sequence must contain at least one frame");
    config.weights.validate();

    AbstractionReport report;
    report.config = config;
    report.frames.resize(frames.size());

    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(frames.size()); ++i) {
        try {
            report.frames[i] = analyze_frame(frames[i], config);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<double> combined;
    combined.reserve(report.frames.size());
    for (const FrameScores& f : report.frames) combined.push_back(f.combined);
    report.sequence_combined = sequence_score(combined);
    report.control = map_to_control(report.sequence_combined);
    return report;
}

} // namespace sketchctl
