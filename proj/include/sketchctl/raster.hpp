#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sketchctl {

// A single grayscale sketch frame, row-major, top-left origin.
// Downstream metrics treat dark pixels as ink on a light ground.
struct SketchRaster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return pixels.size(); }
    bool operator==(const SketchRaster&) const = default;
};

// Foreground mask over a raster; 1 = ink.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    bool operator==(const BinaryMask&) const = default;
};

class PgmParseError : public std::runtime_error {
public:
    PgmParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Decodes P2 (ASCII) or P5 (binary) PGM with maxval <= 255. Header comments
// (`#` to end of line) are accepted and discarded. Every sample value is
// preserved exactly. Malformed input throws PgmParseError carrying the byte
// offset of the defect.
SketchRaster load_pgm(std::span<const std::byte> bytes);
SketchRaster load_pgm_file(const std::filesystem::path& path);

// Encodes as P5 with maxval 255. load_pgm(write_pgm(r)) == r, bit-exactly.
std::vector<std::byte> write_pgm(const SketchRaster& raster);
void write_pgm_file(const SketchRaster& raster, const std::filesystem::path& path);

// Ink is strictly darker than the threshold: bit = (intensity < threshold).
BinaryMask binarize(const SketchRaster& raster, int threshold = 128);

} // namespace sketchctl
