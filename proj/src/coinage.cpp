// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "coinage.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace chaincx {

double WalletOutput::accrued_coin_days(double now_s) const {
    const double held_s = now_s - received_at_s;
    if (held_s <= 0.0)
        return 0.0;
    return amount * (held_s / kSecondsPerDay);
}

CoinAge coin_age(double amount, double holding_days) {
    if (!std::isfinite(amount) || amount <= 0.0)
        throw_domain("coin_age: amount must be positive");
    if (!std::isfinite(holding_days) || holding_days < 0.0)
        throw_domain("coin_age: holding_days must be non-negative");
    return CoinAge{amount * holding_days};
}

CoinstakeRecord consume_coin_age(WalletOutput& output, double now_s, std::uint64_t block_height) {
    if (output.spent)
        throw Error(ErrorCode::State, "consume_coin_age: output already spent");
    if (!std::isfinite(output.amount) || output.amount <= 0.0)
        throw_domain("consume_coin_age: output amount must be positive");

    CoinstakeRecord record;
    record.consumed = CoinAge{output.accrued_coin_days(now_s)};
    record.owner = output.owner;
    record.block_height = block_height;
    record.minted_at_s = now_s;

    // The age resets on spend: model the change as a fresh output.
    output.received_at_s = now_s;
    return record;
}

double kernel_target(double base_target_per_coinday, CoinAge consumed) {
    if (!std::isfinite(base_target_per_coinday) || base_target_per_coinday <= 0.0)
        throw_domain("kernel_target: base target per coin-day must be positive");
    if (!std::isfinite(consumed.coin_days) || consumed.coin_days < 0.0)
        throw_domain("kernel_target: coin-days must be non-negative");
    return base_target_per_coinday * consumed.coin_days;
}

double expected_kernel_time(CoinAge consumed, CoinAge reference_age, double reference_time_s) {
    if (!std::isfinite(consumed.coin_days) || consumed.coin_days <= 0.0)
        throw_domain("expected_kernel_time: coin-days must be positive");
    if (!std::isfinite(reference_age.coin_days) || reference_age.coin_days <= 0.0)
        throw_domain("expected_kernel_time: reference coin-days must be positive");
    if (!std::isfinite(reference_time_s) || reference_time_s <= 0.0)
        throw_domain("expected_kernel_time: reference time must be positive");
    return reference_time_s * reference_age.coin_days / consumed.coin_days;
}

double continuous_retarget(double prev_target, double observed_rate_bps,
                           double desired_rate_bps, double max_step_ratio) {
    if (!std::isfinite(prev_target) || prev_target <= 0.0)
        throw_domain("continuous_retarget: previous target must be positive");
    if (!std::isfinite(observed_rate_bps) || observed_rate_bps <= 0.0)
        throw_domain("continuous_retarget: observed rate must be positive");
    if (!std::isfinite(desired_rate_bps) || desired_rate_bps <= 0.0)
        throw_domain("continuous_retarget: desired rate must be positive");
    if (!std::isfinite(max_step_ratio) || max_step_ratio <= 1.0)
        throw_domain("continuous_retarget: max_step_ratio must exceed 1");

    // Slow blocks (observed < desired) raise the target to ease minting.
    const double ratio = std::clamp(desired_rate_bps / observed_rate_bps,
                                    1.0 / max_step_ratio, max_step_ratio);
    return prev_target * ratio;
}

ComplexityValue hybrid_complexity(const CurrencyParams& params) {
    return binary_shannon_entropy(broadcast_probability(params));
}

} // namespace chaincx
