#pragma once

#include <array>
#include <cstdint>

// Counter-based RNG (Philox4x32-10). Every (seed, stream) pair addresses an
// independent sequence, so per-walker-per-step streams can be drawn in any
// order, from any thread, and still reproduce bit-identically.

namespace ssmc {

struct Philox4x32 {
    static constexpr std::uint32_t M0 = 0xD2511F53u;
    static constexpr std::uint32_t M1 = 0xCD9E8D57u;
    static constexpr std::uint32_t W0 = 0x9E3779B9u;
    static constexpr std::uint32_t W1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 2> key,
                                              std::array<std::uint32_t, 4> ctr)
    {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(M0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(M1) * ctr[2];
            const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
            const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += W0;
            key[1] += W1;
        }
        return ctr;
    }
};

// One logical random stream: fixed (seed, stream id), draws indexed by a
// 64-bit counter. Cheap to construct; nothing is buffered across blocks
// except the current one.
class StreamRng {
public:
    // Counter words are disjoint by construction: lane 0 counts draw blocks,
    // lanes 1/2 hold the stream coordinates, lane 3 carries a domain tag plus
    // the (rarely nonzero) high halves. No two streams share a counter.
    StreamRng(std::uint64_t seed, std::uint64_t stream_hi, std::uint64_t stream_lo)
        : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
          base_{0,
                std::uint32_t(stream_lo),
                std::uint32_t(stream_hi),
                0x53534D43u ^ std::uint32_t(stream_lo >> 32) ^
                    std::uint32_t((stream_hi >> 32) * 0x9E3779B9u)}
    {
    }

    std::uint32_t next_u32()
    {
        const std::uint64_t block_idx = draw_ >> 2;
        const unsigned lane = unsigned(draw_ & 3);
        ++draw_;
        if (block_idx != cached_block_ || !have_block_) {
            std::array<std::uint32_t, 4> ctr = base_;
            ctr[0] = std::uint32_t(block_idx);
            cache_ = Philox4x32::block(key_, ctr);
            cached_block_ = block_idx;
            have_block_ = true;
        }
        return cache_[lane];
    }

    std::uint64_t next_u64()
    {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // uniform double in [0,1) with 53 random bits
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // unbiased integer in [0, bound) via rejection on the top bits
    std::uint32_t below(std::uint32_t bound)
    {
        if (bound <= 1) return 0;
        const std::uint32_t limit = std::uint32_t(-bound) % bound; // 2^32 mod bound
        for (;;) {
            const std::uint32_t r = next_u32();
            if (r >= limit) return r % bound;
        }
    }

private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> base_;
    std::uint64_t draw_ = 0;
    std::uint64_t cached_block_ = 0;
    bool have_block_ = false;
    std::array<std::uint32_t, 4> cache_{};
};

// Stable 64-bit sub-seed for trial/instance fan-out: independent of how many
// streams were drawn before it.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b)
{
    const auto out = Philox4x32::block(
        {std::uint32_t(root), std::uint32_t(root >> 32)},
        {std::uint32_t(a), std::uint32_t(a >> 32), std::uint32_t(b), std::uint32_t(b >> 32)});
    return (std::uint64_t(out[0]) << 32) | out[1];
}

} // namespace ssmc
