#pragma once

#include <span>
#include <vector>

#include "sketchctl/raster.hpp"

namespace sketchctl {

struct ScoreWeights {
    double continuity = 1.0 / 3.0;
    double connectivity = 1.0 / 3.0;
    double texture = 1.0 / 3.0;

    void validate() const;
};

// Adapter guidance strength and gating fraction derived from the sequence
// abstraction score.
struct ControlParams {
    double scale = 0.0;
    double tau = 0.0;
    bool operator==(const ControlParams&) const = default;
};

struct AnalysisConfig {
    ScoreWeights weights{};
    int max_components = 100;  // L_max
    int glcm_levels = 16;
    int glcm_distance = 1;
    int binarize_threshold = 128;
};

struct FrameScores {
    double continuity = 0.0;   // A_C
    double connectivity = 0.0; // A_L
    double texture = 0.0;      // A_T
    double combined = 0.0;     // S_C
};

struct AbstractionReport {
    std::vector<FrameScores> frames;
    double sequence_combined = 0.0;
    ControlParams control{};
    AnalysisConfig config{};
};

// S_C = w_C * A_C + w_L * A_L + w_T * A_T.
double abstraction_score(double continuity, double connectivity, double texture,
                         const ScoreWeights& weights);

// Arithmetic mean over per-frame scores; rejects an empty list.
double sequence_score(std::span<const double> per_frame);

// Step mapping:  S_C <= 0.5 -> (0.55, 0.4);  0.5 < S_C <= 1.0 -> (0.65, 0.5);
// otherwise (0.85, 0.6).
ControlParams map_to_control(double combined_score);

FrameScores analyze_frame(const SketchRaster& raster, const AnalysisConfig& config);

// Per-frame analysis (parallel fan-out) + sequence aggregation + control
// mapping.
AbstractionReport analyze_sequence(std::span<const SketchRaster> frames,
                                   const AnalysisConfig& config);

} // namespace sketchctl
