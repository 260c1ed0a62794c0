#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sketchctl {

// Counter-based random number source. Every draw is a pure function of
// (seed, stream, index), so bulk sampling can be parallelized over `index`
// and still produce bit-identical results for a fixed seed, independent of
// thread count. Operations that consume randomness take an Rng and claim a
// fresh stream per logical draw block.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Claims the next draw block. Two calls never return the same stream.
    std::uint64_t next_stream() { return stream_++; }

    // Scalar convenience draws (one stream each).
    double next_normal() { return normal_at(seed_, next_stream(), 0); }
    double next_uniform() { return uniform_at(seed_, next_stream(), 0); }

    static double normal_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
    static double uniform_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

private:
    std::uint64_t seed_;
    std::uint64_t stream_ = 0;
};

namespace detail {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// splitmix64 finalizer (Steele, Lea, Flood).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t h = mix64(seed + kGolden);
    h = mix64(h ^ (stream + kGolden));
    h = mix64(h ^ (index + kGolden));
    return h;
}

// 53-bit uniform in [0, 1).
constexpr double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace detail

inline double Rng::uniform_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return detail::to_unit(detail::mix64(detail::counter_hash(seed, stream, index) + detail::kGolden));
}

inline double Rng::normal_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const std::uint64_t h = detail::counter_hash(seed, stream, index);
    const std::uint64_t r1 = detail::mix64(h + detail::kGolden);
    const std::uint64_t r2 = detail::mix64(h + 2 * detail::kGolden);
    // Box-Muller, cosine branch. u1 is kept strictly positive for the log.
    const double u1 = static_cast<double>((r1 >> 11) + 1) * 0x1.0p-53;
    const double u2 = detail::to_unit(r2);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace sketchctl
