#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace corrind::rng {

// Philox-4x32-10 counter-based generator. Every draw is a pure function
// of (key, counter), so values can be produced in any order and from any
// thread without coordination.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static Counter block(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
            ctr = Counter{
                static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                static_cast<std::uint32_t>(p1),
                static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                static_cast<std::uint32_t>(p0),
            };
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

// Independent draw streams; the tag keeps coordinates from colliding
// across uses of the same (seed, a, b) triple.
enum class Stream : std::uint32_t {
    loading = 1,
    factor = 2,
    noise = 3,
    event_pick = 4,
};

// One 128-bit block for coordinate (a, b) in a stream, as two 64-bit words.
inline std::array<std::uint64_t, 2> draw_block(std::uint64_t seed, Stream stream,
                                               std::uint64_t a, std::uint64_t b) {
    const Philox4x32::Counter ctr{
        static_cast<std::uint32_t>(a),
        static_cast<std::uint32_t>(a >> 32),
        static_cast<std::uint32_t>(b),
        static_cast<std::uint32_t>(b >> 32) ^ static_cast<std::uint32_t>(stream),
    };
    const Philox4x32::Key key{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
    };
    const auto out = Philox4x32::block(ctr, key);
    return {std::uint64_t(out[0]) | (std::uint64_t(out[1]) << 32),
            std::uint64_t(out[2]) | (std::uint64_t(out[3]) << 32)};
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, Stream stream, std::uint64_t a, std::uint64_t b) {
    return double(draw_block(seed, stream, a, b)[0] >> 11) * 0x1p-53;
}

// Standard normal via Box-Muller on the two words of one block.
inline double normal01(std::uint64_t seed, Stream stream, std::uint64_t a, std::uint64_t b) {
    const auto words = draw_block(seed, stream, a, b);
    const double u1 = double((words[0] >> 11) + 1) * 0x1p-53;  // (0, 1]
    const double u2 = double(words[1] >> 11) * 0x1p-53;        // [0, 1)
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace corrind::rng
