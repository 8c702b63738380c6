// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_COINAGE_HPP
#define CHAINCX_COINAGE_HPP

#include <cstdint>
#include <string>

#include "complexity.hpp"
#include "pow.hpp"

namespace chaincx {

inline constexpr double kSecondsPerDay = 86400.0;

/// An unspent amount accruing coin age since it was received.
struct WalletOutput {
    std::string owner;
    double amount = 0.0;
    double received_at_s = 0.0;
    bool spent = false;

    /// Coin-days accrued at now_s; zero at the moment of receipt.
    double accrued_coin_days(double now_s) const;
};

/// Coin-days: currency amount times holding period in days.
struct CoinAge {
    double coin_days = 0.0;
};

/// What a minted stake block consumed: the coinstake transaction's record.
struct CoinstakeRecord {
    CoinAge consumed;
    std::string owner;
    std::uint64_t block_height = 0;
    double minted_at_s = 0.0;
};

/// amount * holding_days, exact.
CoinAge coin_age(double amount, double holding_days);

/// Spends the output's accrued age into a coinstake record and restarts
/// the output at zero age (received_at_s = now_s). Throws if already spent.
CoinstakeRecord consume_coin_age(WalletOutput& output, double now_s,
                                 std::uint64_t block_height = 0);

/// Stake-kernel hash target: base target per coin-day times the coin-days
/// consumed. More coin age, easier target. Zero age cannot mint.
double kernel_target(double base_target_per_coinday, CoinAge consumed);

/// Expected time for `consumed` coin-days to find a kernel, scaled from a
/// reference observation: time is inversely proportional to coin age.
double expected_kernel_time(CoinAge consumed, CoinAge reference_age, double reference_time_s);

/// One continuous-retarget step: multiplicative nudge of the target
/// toward the desired block rate, per-step ratio bounded by
/// max_step_ratio. Fixed point when observed equals desired.
double continuous_retarget(double prev_target, double observed_rate_bps,
                           double desired_rate_bps, double max_step_ratio = 1.1);

/// Same entropy path as pow_complexity, applied to PoS/hybrid rows with
/// their published hash rates.
ComplexityValue hybrid_complexity(const CurrencyParams& params);

} // namespace chaincx

#endif // CHAINCX_COINAGE_HPP
