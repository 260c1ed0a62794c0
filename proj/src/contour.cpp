#include "sketchctl/contour.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sketchctl {

double shoelace_area(std::span<const Vec2> points) {
    const std::size_t n = points.size();
    if (n < 3) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = points[i];
        const Vec2& b = points[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(acc);
}

double polyline_perimeter(std::span<const Vec2> points) {
    const std::size_t n = points.size();
    if (n < 2) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = points[i];
        const Vec2& b = points[(i + 1) % n];
        acc += std::hypot(b.x - a.x, b.y - a.y);
    }
    return acc;
}

namespace {

// 8-neighborhood in clockwise screen order (x right, y down), starting East.
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

int direction_of(int from_x, int from_y, int to_x, int to_y) {
    const int dx = to_x - from_x;
    const int dy = to_y - from_y;
    for (int d = 0; d < 8; ++d) {
        if (kDx[d] == dx && kDy[d] == dy) return d;
    }
    throw std::logic_error("direction_of: pixels are not 8-adjacent");
}

Contour finish_contour(std::vector<Vec2> points, bool hole) {
    Contour c;
    c.area = shoelace_area(points);
    c.perimeter = polyline_perimeter(points);
    c.points = std::move(points);
    c.is_hole = hole;
    return c;
}

} // namespace

std::vector<Contour> trace_borders(const BinaryMask& mask) {
    const int w = mask.width;
    const int h = mask.height;
    std::vector<int> f(mask.bits.begin(), mask.bits.end());
    const auto fget = [&](int x, int y) -> int {
        if (x < 0 || y < 0 || x >= w || y >= h) return 0;
        return f[static_cast<std::size_t>(y) * w + x];
    };
    const auto fset = [&](int x, int y, int v) { f[static_cast<std::size_t>(y) * w + x] = v; };

    std::vector<Contour> out;
    int nbd = 1;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int v = fget(x, y);
            if (v == 0) continue;
            const bool outer = v == 1 && fget(x - 1, y) == 0;
            const bool hole = !outer && v >= 1 && fget(x + 1, y) == 0;
            if (!outer && !hole) continue;
            ++nbd;

            // Scan clockwise around the start pixel for the first ink
            // neighbor, beginning at the zero pixel that triggered the start.
            const int from_dir = outer ? 4 : 0; // W for outer starts, E for holes
            int d1 = -1;
            for (int k = 0; k < 8; ++k) {
                const int d = (from_dir + k) & 7;
                if (fget(x + kDx[d], y + kDy[d]) != 0) {
                    d1 = d;
                    break;
                }
            }
            std::vector<Vec2> points{{static_cast<double>(x), static_cast<double>(y)}};
            if (d1 < 0) {
                // Isolated pixel: a single-point border.
                fset(x, y, -nbd);
                out.push_back(finish_contour(std::move(points), hole));
                continue;
            }
            const int x1 = x + kDx[d1];
            const int y1 = y + kDy[d1];
            int x2 = x1, y2 = y1; // previous border pixel
            int x3 = x, y3 = y;   // current border pixel
            for (;;) {
                // Counterclockwise scan around the current pixel, starting
                // just past the previous one. The East neighbor being
                // examined as ground decides the negative marking that stops
                // this border from re-triggering a start later in the scan.
                const int dprev = direction_of(x3, y3, x2, y2);
                bool east_zero = false;
                int x4 = 0, y4 = 0;
                for (int k = 1; k <= 8; ++k) {
                    const int d = (dprev - k) & 7;
                    const int nx = x3 + kDx[d];
                    const int ny = y3 + kDy[d];
                    if (fget(nx, ny) != 0) {
                        x4 = nx;
                        y4 = ny;
                        break;
                    }
                    if (d == 0) east_zero = true;
                }
                if (east_zero) {
                    fset(x3, y3, -nbd);
                } else if (fget(x3, y3) == 1) {
                    fset(x3, y3, nbd);
                }
                if (x4 == x && y4 == y && x3 == x1 && y3 == y1) break;
                x2 = x3;
                y2 = y3;
                x3 = x4;
                y3 = y4;
                points.push_back({static_cast<double>(x3), static_cast<double>(y3)});
            }
            out.push_back(finish_contour(std::move(points), hole));
        }
    }
    return out;
}

ContourSet trace_contours(const BinaryMask& mask) {
    ContourSet set;
    for (Contour& c : trace_borders(mask)) {
        if (c.area < kMinContourArea || c.perimeter < kMinContourPerimeter) continue;
        set.total_area += c.is_hole ? -c.area : c.area;
        set.total_perimeter += c.perimeter;
        set.contours.push_back(std::move(c));
    }
    return set;
}

double continuity_score(const ContourSet& set, int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be >= 1");
    if (set.total_perimeter <= 0.0) return 0.0;
    const double s_max = static_cast<double>(width) * height;
    const double p_max = 2.0 * (width + height);
    return (set.total_area * p_max) / (s_max * set.total_perimeter);
}

} // namespace sketchctl
