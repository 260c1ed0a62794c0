#include "sketchctl/raster.hpp"

#include <cctype>
#include <fstream>

namespace sketchctl {

namespace {

struct ByteCursor {
    std::span<const std::byte> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    int peek() const { return eof() ? -1 : std::to_integer<int>(bytes[pos]); }
    int get() {
        const int c = peek();
        if (c >= 0) ++pos;
        return c;
    }
};

bool is_pgm_space(int c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

void skip_space_and_comments(ByteCursor& cur) {
    for (;;) {
        while (!cur.eof() && is_pgm_space(cur.peek())) cur.get();
        if (cur.peek() == '#') {
            while (!cur.eof() && cur.get() != '\n') {}
            continue;
        }
        return;
    }
}

long read_header_int(ByteCursor& cur, const char* field) {
    skip_space_and_comments(cur);
    const std::size_t at = cur.pos;
    if (cur.eof()) throw PgmParseError(std::string("unexpected end of header reading ") + field, at);
    if (!std::isdigit(cur.peek())) {
        throw PgmParseError(std::string("expected digit for ") + field, at);
    }
    long value = 0;
    while (std::isdigit(cur.peek())) {
        value = value * 10 + (cur.get() - '0');
        if (value > 1'000'000'000L) throw PgmParseError(std::string(field) + " out of range", at);
    }
    return value;
}

} // namespace

SketchRaster load_pgm(std::span<const std::byte> bytes) {
    if (bytes.size() < 2 || std::to_integer<char>(bytes[0]) != 'P') {
        throw PgmParseError("not a PGM: missing magic", 0);
    }
    const char kind = std::to_integer<char>(bytes[1]);
    if (kind != '2' && kind != '5') {
        throw PgmParseError("unsupported PGM magic (want P2 or P5)", 1);
    }

    ByteCursor cur{bytes, 2};
    skip_space_and_comments(cur);
    const std::size_t width_at = cur.pos;
    const long width = read_header_int(cur, "width");
    skip_space_and_comments(cur);
    const std::size_t height_at = cur.pos;
    const long height = read_header_int(cur, "height");
    skip_space_and_comments(cur);
    const std::size_t maxval_at = cur.pos;
    const long maxval = read_header_int(cur, "maxval");

    if (width < 1) throw PgmParseError("width must be >= 1", width_at);
    if (height < 1) throw PgmParseError("height must be >= 1", height_at);
    if (maxval < 1) throw PgmParseError("maxval must be >= 1", maxval_at);
    if (maxval > 255) throw PgmParseError("maxval > 255 not supported", maxval_at);

    SketchRaster raster;
    raster.width = static_cast<int>(width);
    raster.height = static_cast<int>(height);
    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    raster.pixels.resize(count);

    if (kind == '5') {
        const int sep = cur.get();
        if (sep < 0 || !is_pgm_space(sep)) {
            throw PgmParseError("expected single whitespace after maxval", cur.pos == 0 ? 0 : cur.pos - 1);
        }
        if (bytes.size() - cur.pos < count) {
            // Offset of the first sample byte the payload is missing.
            throw PgmParseError("truncated P5 pixel data", bytes.size());
        }
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = std::to_integer<std::uint8_t>(bytes[cur.pos + i]);
            if (v > maxval) throw PgmParseError("sample exceeds maxval", cur.pos + i);
            raster.pixels[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            skip_space_and_comments(cur);
            const std::size_t at = cur.pos;
            if (cur.eof()) throw PgmParseError("truncated P2 pixel data", bytes.size());
            if (!std::isdigit(cur.peek())) throw PgmParseError("expected digit in P2 sample", at);
            long v = 0;
            while (std::isdigit(cur.peek())) {
                v = v * 10 + (cur.get() - '0');
                if (v > 1'000'000L) throw PgmParseError("P2 sample out of range", at);
            }
            if (v > maxval) throw PgmParseError("sample exceeds maxval", at);
            raster.pixels[i] = static_cast<std::uint8_t>(v);
        }
    }
    return raster;
}

SketchRaster load_pgm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_pgm(std::as_bytes(std::span<const char>(buf)));
}

std::vector<std::byte> write_pgm(const SketchRaster& raster) {
    const std::string header = "P5\n" + std::to_string(raster.width) + " " +
                               std::to_string(raster.height) + "\n255\n";
    std::vector<std::byte> out;
    out.reserve(header.size() + raster.pixels.size());
    for (const char c : header) out.push_back(static_cast<std::byte>(c));
    for (const std::uint8_t v : raster.pixels) out.push_back(static_cast<std::byte>(v));
    return out;
}

void write_pgm_file(const SketchRaster& raster, const std::filesystem::path& path) {
    const auto bytes = write_pgm(raster);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to " + path.string());
}

BinaryMask binarize(const SketchRaster& raster, int threshold) {
    if (threshold < 0 || threshold > 255) {
        throw std::invalid_argument("binarize threshold must be in [0, 255]");
    }
    BinaryMask mask;
    mask.width = raster.width;
    mask.height = raster.height;
    mask.bits.resize(raster.pixels.size());
    for (std::size_t i = 0; i < raster.pixels.size(); ++i) {
        mask.bits[i] = raster.pixels[i] < threshold ? 1 : 0;
    }
    return mask;
}

} // namespace sketchctl
