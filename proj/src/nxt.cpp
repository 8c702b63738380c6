// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "nxt.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "sha256.hpp"

namespace chaincx {

namespace {

constexpr double kTargetSpacingS = 60.0;

// Beyond this many seconds a double can no longer step by one, so the
// whole-second boundary search is meaningless.
constexpr double kMaxRepresentableSeconds = 9007199254740992.0; // 2^53

void validate_constants(const RetargetConstants& c) {
    if (!std::isfinite(c.max_ratio) || !std::isfinite(c.min_ratio) || !std::isfinite(c.gamma))
        throw_validation("retarget constants must be finite");
    if (c.min_ratio <= 0.0 || c.max_ratio < c.min_ratio)
        throw_validation("retarget constants require 0 < min_ratio <= max_ratio");
    if (c.gamma < 0.0)
        throw_validation("retarget gamma must be non-negative");
}

} // namespace

std::uint64_t ForgingAccount::stake_nxt() const {
    std::uint64_t total = 0;
    for (const StakeEntry& entry : stakes)
        total += entry.amount_nxt;
    return total;
}

Hit compute_hit(const PublicKey& public_key, const GenerationSignature& generation_signature) {
    return compute_hit(public_key.data(), public_key.size(),
                       generation_signature.data(), generation_signature.size());
}

Hit compute_hit(const std::uint8_t* public_key, std::size_t public_key_len,
                const std::uint8_t* generation_signature, std::size_t generation_signature_len) {
    if (public_key == nullptr || public_key_len != 32)
        throw_invalid("compute_hit: public key must be 32 bytes");
    if (generation_signature == nullptr || generation_signature_len != 32)
        throw_invalid("compute_hit: generation signature must be 32 bytes");

    std::uint8_t message[64];
    std::copy(public_key, public_key + 32, message);
    std::copy(generation_signature, generation_signature + 32, message + 32);

    Digest256 digest = sha256(message, sizeof(message));
    for (int round = 1; round < 8; ++round)
        digest = sha256(digest.data(), digest.size());

    std::uint64_t value = 0;
    for (int i = 7; i >= 0; --i)
        value = (value << 8) | digest[static_cast<std::size_t>(i)];
    return Hit{value};
}

AccountTarget account_target(double base_target, double seconds_elapsed,
                             std::uint64_t effective_balance_nxt) {
    if (!std::isfinite(base_target) || base_target < 0.0)
        throw_domain("account_target: base_target must be non-negative");
    if (!std::isfinite(seconds_elapsed) || seconds_elapsed < 0.0)
        throw_domain("account_target: seconds_elapsed must be non-negative");
    const double raw = base_target * seconds_elapsed * static_cast<double>(effective_balance_nxt);
    return AccountTarget{std::min(raw, kMaxTargetValue)};
}

bool can_forge(Hit hit, AccountTarget target) {
    // long double carries a 64-bit mantissa on x86, so the hit converts
    // exactly and the strict comparison has no rounding slack.
    return static_cast<long double>(target.value) > static_cast<long double>(hit.value);
}

std::uint64_t forge_wait_time(Hit hit, double base_target, std::uint64_t balance_nxt) {
    if (!std::isfinite(base_target) || base_target <= 0.0)
        throw_domain("forge_wait_time: base_target must be positive");
    if (balance_nxt == 0)
        throw_domain("forge_wait_time: balance must be positive");
    if (static_cast<long double>(kMaxTargetValue) <= static_cast<long double>(hit.value))
        throw Error(ErrorCode::Unreachable,
                    "forge_wait_time: the target cap can never exceed this hit");

    const long double rate =
        static_cast<long double>(base_target) * static_cast<long double>(balance_nxt);
    long double guess = static_cast<long double>(hit.value) / rate + 1.0L;
    guess = std::max(guess, 1.0L);
    if (guess >= static_cast<long double>(kMaxRepresentableSeconds))
        throw Error(ErrorCode::Unreachable,
                    "forge_wait_time: wait exceeds the representable whole-second horizon");

    double s = std::floor(static_cast<double>(guess));
    while (s > 1.0 && can_forge(hit, account_target(base_target, s - 1.0, balance_nxt)))
        s -= 1.0;
    while (!can_forge(hit, account_target(base_target, s, balance_nxt))) {
        s += 1.0;
        if (s >= kMaxRepresentableSeconds)
            throw Error(ErrorCode::Unreachable,
                        "forge_wait_time: wait exceeds the representable whole-second horizon");
    }
    return static_cast<std::uint64_t>(s);
}

BaseTargetState retarget_base(const BaseTargetState& state) {
    if (state.recent_block_times_s.size() != 3)
        throw Error(ErrorCode::State, "retarget_base: need exactly the last 3 block times");
    for (double t : state.recent_block_times_s) {
        if (!std::isfinite(t) || t <= 0.0)
            throw Error(ErrorCode::State, "retarget_base: block times must be positive");
    }
    if (!std::isfinite(state.base_target) || state.base_target <= 0.0)
        throw Error(ErrorCode::State, "retarget_base: base target must be positive");
    validate_constants(state.constants);

    const double average = (state.recent_block_times_s[0] + state.recent_block_times_s[1] +
                            state.recent_block_times_s[2]) /
                           3.0;
    const double ratio = std::clamp(average / kTargetSpacingS, state.constants.min_ratio,
                                    state.constants.max_ratio);
    // Asymmetric on purpose: slow blocks raise the base target in full
    // proportion (up to max_ratio), fast blocks lower it damped by gamma
    // (down to min_ratio). Block intervals are right-skewed, and a
    // symmetric blend settles several percent above the 60 s spacing.
    double next;
    if (ratio > 1.0)
        next = state.base_target * ratio;
    else
        next = state.base_target * (1.0 - state.constants.gamma * (1.0 - ratio));
    next = std::max(next, state.base_target / 2.0);
    next = std::min(next, kMaxTargetValue);

    BaseTargetState out = state;
    out.prev_base_target = state.base_target;
    out.base_target = next;
    return out;
}

std::uint64_t effective_balance(const ForgingAccount& account, double now_s) {
    std::uint64_t qualifying = 0;
    for (const StakeEntry& entry : account.stakes) {
        const double age_s = now_s - entry.received_at_s;
        if (age_s < 0.0)
            continue;
        const double confirmations = std::floor(age_s / kTargetSpacingS);
        if (confirmations >= static_cast<double>(kRequiredConfirmations))
            qualifying += entry.amount_nxt;
    }
    if (qualifying < kMinForgingBalanceNxt)
        return 0;
    return qualifying;
}

ComplexityValue nxt_complexity(double block_time_s) {
    if (!std::isfinite(block_time_s) || block_time_s <= 0.0)
        throw_domain("nxt_complexity: block_time_s must be positive");
    return binary_shannon_entropy(1.0 / block_time_s);
}

} // namespace chaincx
