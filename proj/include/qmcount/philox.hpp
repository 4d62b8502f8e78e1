#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Stateless:
// each 128-bit counter + 64-bit key pair maps to four 32-bit words, so
// independent substreams are just distinct keys and parallel runs stay
// reproducible at any thread count.

#include <cstdint>

namespace qmc {

struct philox4x32 {
    static constexpr std::uint32_t M0 = 0xD2511F53u;
    static constexpr std::uint32_t M1 = 0xCD9E8D57u;
    static constexpr std::uint32_t W0 = 0x9E3779B9u;
    static constexpr std::uint32_t W1 = 0xBB67AE85u;

    struct block {
        std::uint32_t v[4];
    };

    static block generate(std::uint64_t key, std::uint64_t ctr_hi, std::uint64_t ctr_lo) {
        std::uint32_t c[4] = {static_cast<std::uint32_t>(ctr_lo),
                              static_cast<std::uint32_t>(ctr_lo >> 32),
                              static_cast<std::uint32_t>(ctr_hi),
                              static_cast<std::uint32_t>(ctr_hi >> 32)};
        std::uint32_t k0 = static_cast<std::uint32_t>(key);
        std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
        for (int round = 0; round < 10; ++round) {
            std::uint64_t p0 = static_cast<std::uint64_t>(M0) * c[0];
            std::uint64_t p1 = static_cast<std::uint64_t>(M1) * c[2];
            std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            std::uint32_t n0 = hi1 ^ c[1] ^ k0;
            std::uint32_t n1 = lo1;
            std::uint32_t n2 = hi0 ^ c[3] ^ k1;
            std::uint32_t n3 = lo0;
            c[0] = n0; c[1] = n1; c[2] = n2; c[3] = n3;
            k0 += W0;
            k1 += W1;
        }
        return block{{c[0], c[1], c[2], c[3]}};
    }
};

// buffered stream of doubles in [0, 1) drawn from one Philox substream
class philox_stream {
public:
    philox_stream(std::uint64_t key, std::uint64_t stream_id)
        : key_(key), hi_(stream_id), lo_(0), pos_(4) {}

    double uniform() {
        if (pos_ == 4) {
            buf_ = philox4x32::generate(key_, hi_, lo_);
            ++lo_;
            pos_ = 0;
        }
        // 32 bits of mantissa are plenty for sampling
        return (buf_.v[pos_++] + 0.5) * (1.0 / 4294967296.0);
    }

private:
    std::uint64_t key_, hi_, lo_;
    philox4x32::block buf_{};
    int pos_;
};

}  // namespace qmc
