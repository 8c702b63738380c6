// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_POW_HPP
#define CHAINCX_POW_HPP

#include <array>
#include <cstdint>
#include <string>

#include "complexity.hpp"

namespace chaincx {

enum struct Protocol { PoW, PoS, Hybrid };

const char* protocol_name(Protocol p);
Protocol protocol_from_string(const std::string& text);

/// One currency's protocol descriptor: the inputs the complexity measure
/// needs. Hash rates may exceed 1e19 (Bitcoin scale).
struct CurrencyParams {
    std::string name;
    Protocol protocol = Protocol::PoW;
    double block_time_s = 0.0;
    double hashrate_hs = 0.0;
};

/// Throws on non-positive fields or fewer than one expected trial per block.
void validate(const CurrencyParams& params);

/// 256-bit hash target, stored big-endian. The canonical maximum target
/// is 0x00000000FFFF followed by 52 zero hex digits (0xFFFF * 2^208), the
/// ~2^224 cap that difficulty 1 corresponds to.
struct HashTarget {
    std::array<std::uint8_t, 32> bytes_be{};

    std::string to_hex() const;
};

HashTarget max_target();

/// P(sigma_b) = 1 / (hashrate * block_time): the probability that a given
/// trial broadcasts a freshly found block.
double broadcast_probability(const CurrencyParams& params);

/// Entropy of the two-state mining/broadcasting machine with occupancy
/// (1 - P(sigma_b), P(sigma_b)).
ComplexityValue pow_complexity(const CurrencyParams& params);

/// target = floor(max_target / difficulty), for difficulty >= 1.
HashTarget difficulty_to_target(double difficulty);

/// Expected trials per block under uniform hashing: 2^256 / target.
/// Roughly 2^32 (4.295e9) at difficulty 1, linear in difficulty.
double expected_hashes_per_block(double difficulty);

} // namespace chaincx

#endif // CHAINCX_POW_HPP
