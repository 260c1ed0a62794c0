#pragma once

#include <span>
#include <vector>

#include "sketchctl/raster.hpp"

namespace sketchctl {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Vec2&) const = default;
};

// A traced border as a closed polyline of pixel centers. Hole borders carry
// is_hole = true; their areas subtract from a contour set's total while their
// perimeters still add.
struct Contour {
    std::vector<Vec2> points;
    double area = 0.0;
    double perimeter = 0.0;
    bool is_hole = false;
};

struct ContourSet {
    std::vector<Contour> contours;
    double total_area = 0.0;
    double total_perimeter = 0.0;
};

// Noise filter: borders below either bound are dropped before aggregation.
inline constexpr double kMinContourArea = 5.0;
inline constexpr double kMinContourPerimeter = 10.0;

// 1/2 |sum x_i y_{i+1} - x_{i+1} y_i| with cyclic wrap. Degenerate inputs
// yield 0.
double shoelace_area(std::span<const Vec2> points);

// Sum of Euclidean edge lengths including the closing edge.
double polyline_perimeter(std::span<const Vec2> points);

// Suzuki-style border following over 8-connectivity. Returns every outer and
// hole border, unfiltered, each as a closed polyline of pixel centers.
std::vector<Contour> trace_borders(const BinaryMask& mask);

// trace_borders + the noise filter + signed totals (holes subtract area).
ContourSet trace_contours(const BinaryMask& mask);

// A_C = (S * P_max) / (S_max * P); returns 0 when the set has no perimeter.
double continuity_score(const ContourSet& set, int width, int height);

} // namespace sketchctl
