// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_RNG_HPP
#define CHAINCX_RNG_HPP

#include <cstdint>
#include <random>

namespace chaincx {

/// Deterministic simulation randomness. The engine is mt19937_64, whose
/// output sequence the C++ standard pins down exactly; the value mappings
/// below are spelled out here instead of going through std distributions,
/// whose results vary between standard libraries. Same seed, same stream,
/// on every platform.
class SimRng {
public:
    explicit SimRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1): top 53 bits scaled by 2^-53.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_unit() < p; }

    /// Uniform integer in [0, bound) by rejection, bias-free.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace chaincx

#endif // CHAINCX_RNG_HPP
