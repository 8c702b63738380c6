// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_NXT_HPP
#define CHAINCX_NXT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "complexity.hpp"

namespace chaincx {

/// Base target of the genesis block, the unit the base target is
/// expressed in: 2^64 / (120 * 1e9), i.e. 60-second blocks when the full
/// one-billion-token supply forges at twice this value.
inline constexpr double kGenesisBaseTarget = 153722867.3;

/// Hard protocol cap 2^64 / (2 * 60).
inline constexpr double kMaxTargetValue = 153722867280912930.0;

/// Stakes below this (in whole NXT) never forge.
inline constexpr std::uint64_t kMinForgingBalanceNxt = 1000;

/// Confirmations required before a stake amount counts, at one
/// confirmation per 60-second block (1440 blocks = 24 hours).
inline constexpr std::uint64_t kRequiredConfirmations = 1440;

using PublicKey = std::array<std::uint8_t, 32>;
using GenerationSignature = std::array<std::uint8_t, 32>;

/// A stake amount together with when it arrived; confirmations accrue at
/// one per 60 seconds from received_at_s.
struct StakeEntry {
    std::uint64_t amount_nxt = 0;
    double received_at_s = 0.0;
};

struct ForgingAccount {
    std::string name;
    PublicKey public_key{};
    std::vector<StakeEntry> stakes;

    std::uint64_t stake_nxt() const;
};

/// 64-bit per-(account, block) lottery value drawn from iterated hashing.
struct Hit {
    std::uint64_t value = 0;
};

/// T_k = T_b * S * B_k, clamped to the protocol cap.
struct AccountTarget {
    double value = 0.0;
};

/// Constants steering the per-block base-target adjustment. With r =
/// clamp(avg/60, min_ratio, max_ratio), slow blocks scale the base target
/// by r itself and fast blocks by 1 - gamma*(1-r); the result is floored
/// at prev/2 and capped at kMaxTargetValue.
struct RetargetConstants {
    double max_ratio = 67.0 / 60.0;
    double min_ratio = 53.0 / 60.0;
    double gamma = 0.64; // damping on downward adjustments
};

/// Base-target evolution state: current and previous value plus the last
/// three block intervals the adjustment averages over.
struct BaseTargetState {
    double base_target = kGenesisBaseTarget;
    double prev_base_target = kGenesisBaseTarget;
    std::vector<double> recent_block_times_s; // exactly 3 entries to retarget
    RetargetConstants constants;
};

/// Eight chained SHA-256 applications: the first over public_key followed
/// by generation_signature as one 64-byte message, seven more over the
/// running digest. The first 8 bytes of the final digest, little-endian,
/// form the hit.
Hit compute_hit(const PublicKey& public_key, const GenerationSignature& generation_signature);

/// Same, for callers holding raw buffers; lengths must both be 32.
Hit compute_hit(const std::uint8_t* public_key, std::size_t public_key_len,
                const std::uint8_t* generation_signature, std::size_t generation_signature_len);

/// T_k = T_b * S * B_k, then clamped to kMaxTargetValue. Zero whenever
/// seconds_elapsed or effective_balance is zero.
AccountTarget account_target(double base_target, double seconds_elapsed,
                             std::uint64_t effective_balance_nxt);

/// Forging succeeds exactly when the target strictly exceeds the hit.
/// Compared in extended precision so 64-bit hits participate exactly.
bool can_forge(Hit hit, AccountTarget target);

/// Smallest whole second S with account_target(base_target, S, balance)
/// beating the hit. Throws Unreachable when the cap prevents any S from
/// working.
std::uint64_t forge_wait_time(Hit hit, double base_target, std::uint64_t balance_nxt);

/// One adjustment step from the last three block intervals. Fixed point
/// at a 60-second average; slower blocks raise the base target, faster
/// blocks lower it, per-step movement bounded by the ratio constants and
/// the half-of-previous floor.
BaseTargetState retarget_base(const BaseTargetState& state);

/// Stake that may forge at time now_s: the total of amounts confirmed at
/// least 1440 times, or zero when that total is under 1000 NXT.
std::uint64_t effective_balance(const ForgingAccount& account, double now_s);

/// Entropy of the targeting/broadcasting machine at one broadcast per
/// block_time seconds: binary_shannon_entropy(1 / block_time).
ComplexityValue nxt_complexity(double block_time_s);

} // namespace chaincx

#endif // CHAINCX_NXT_HPP
