#pragma once

#include <array>
#include <cstdint>

namespace ratbound {

/// Philox4x32-10 counter-based generator, as in Random123.
/// A block is a pure function of (counter, key), so any instance of a
/// campaign can be regenerated independently of the others.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key);
};

/// Sequential draws from the substream (seed, stream). Words are consumed
/// from counter blocks {index, 0, stream_lo, stream_hi} in order.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    /// 53-bit uniform in [0, 1) from two consecutive words (high word first).
    double uniform();

private:
    Philox4x32::Key key_;
    std::uint64_t stream_;
    std::uint32_t block_index_ = 0;
    Philox4x32::Counter buffer_{};
    int used_ = 4;
};

}  // namespace ratbound
