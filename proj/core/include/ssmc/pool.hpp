#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ssmc {

// Walkers are processed in fixed 4096-wide blocks. Reductions store one
// partial per block and combine serially in block order, so results do not
// depend on how many threads executed the blocks.
inline constexpr std::size_t kWalkerBlock = 4096;

inline std::size_t block_count(std::size_t n) { return (n + kWalkerBlock - 1) / kWalkerBlock; }

// fn(block_index, begin, end) — must be safe to run concurrently per block.
template <class Fn>
void for_blocks(std::size_t count, unsigned threads, Fn&& fn)
{
    const std::size_t nblocks = block_count(count);
    if (nblocks == 0) return;
    if (threads <= 1 || nblocks == 1) {
        for (std::size_t b = 0; b < nblocks; ++b)
            fn(b, b * kWalkerBlock, std::min(count, (b + 1) * kWalkerBlock));
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t b = next.fetch_add(1);
                if (b >= nblocks || failed.load(std::memory_order_relaxed)) return;
                fn(b, b * kWalkerBlock, std::min(count, (b + 1) * kWalkerBlock));
            }
        } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
        }
    };
    std::vector<std::thread> team;
    const unsigned extra = std::min<std::size_t>(threads, nblocks) - 1;
    team.reserve(extra);
    for (unsigned i = 0; i < extra; ++i) team.emplace_back(worker);
    worker();
    for (auto& t : team) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace ssmc
