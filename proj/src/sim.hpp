// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_SIM_HPP
#define CHAINCX_SIM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coinage.hpp"
#include "complexity.hpp"
#include "nxt.hpp"
#include "pow.hpp"

namespace chaincx {

/// A block one forger proposes for a given height.
struct CandidateBlock {
    std::string forger;
    std::uint64_t height = 0;
    std::uint32_t tx_count = 0; // at most 255 bundled transactions
    double difficulty_contribution = 0.0;
    double timestamp_s = 0.0;
    std::uint64_t forger_hit = 0;
};

inline constexpr std::uint32_t kMaxTxPerBlock = 255;

/// Chain tip summary. Applying a block is a pure transition: the new
/// state is a function of the old state and the block alone.
struct LedgerState {
    std::uint64_t height = 0;
    std::map<std::string, std::uint64_t> balances_nxt;
    double cumulative_difficulty = 0.0;
    GenerationSignature generation_signature{};
};

/// apply_block(state, block, forger_key) -> successor state: height + 1,
/// difficulty accumulated, generation signature advanced as
/// SHA-256(forger public key || previous signature). Balances carry over
/// unchanged (transactions are opaque counters here).
LedgerState apply_block(const LedgerState& state, const CandidateBlock& block,
                        const PublicKey& forger_public_key);

/// Per-block trace entry kept for replay-style verification and CSV export.
struct BlockRecord {
    std::uint64_t height = 0;
    double time_s = 0.0;
    double interval_s = 0.0;
    std::string winner;
    double base_target = 0.0;
    std::uint32_t candidate_count = 1;
    std::uint32_t tx_count = 0;
};

/// Everything a seeded run measures.
struct SimulationReport {
    std::string kind; // "pow", "nxt", or "coinage"
    std::uint64_t seed = 0;
    double duration_s = 0.0;
    std::vector<double> block_intervals_s;
    std::vector<std::string> winners; // aligned with block_intervals_s
    std::map<std::string, double> state_occupancy_s;
    std::map<std::string, std::uint64_t> wins_per_account;
    std::uint64_t fork_events = 0;
    std::vector<BlockRecord> blocks;

    std::uint64_t block_count() const { return block_intervals_s.size(); }
    double total_occupancy_s() const;
    /// Mean interval after dropping the first warmup_blocks blocks.
    double mean_interval_s(std::uint64_t warmup_blocks = 0) const;
};

struct PowSimConfig {
    CurrencyParams params;
    // When set, overrides the per-tick probability derived from params
    // (1 / block_time). Must lie in (0, 1].
    double tick_success_probability = 0.0;
    bool has_explicit_probability = false;
};

struct NxtSimConfig {
    std::vector<ForgingAccount> accounts;
    RetargetConstants constants;
    double genesis_base_target = kGenesisBaseTarget;
};

struct CoinageSimConfig {
    std::vector<WalletOutput> outputs;
    double kernel_scale_per_coinday = 1e-8; // per-second success per coin-day
};

/// PoW as a per-second Bernoulli process: each tick succeeds with
/// probability 1/block_time (or the explicit override), so intervals are
/// geometric with the configured mean. States: mining / broadcasting.
SimulationReport simulate_pow(const PowSimConfig& config, double duration_s, std::uint64_t seed);

/// Nxt forging. Each block, every account derives its hit from its public
/// key and the chain's generation signature; each second every account's
/// target T_b * S * B grows until someone's target beats their hit.
/// Simultaneous winners fork; the candidate with the highest cumulative
/// difficulty wins, ties broken by lowest hit then account order. The base
/// target retargets every block once three intervals exist.
/// States: targeting / broadcasting.
SimulationReport simulate_nxt_forging(const NxtSimConfig& config, double duration_s,
                                      std::uint64_t seed);

/// Coin-age kernels: one trial per unspent output per second, success
/// probability scale * accrued coin-days, success consumes the age.
/// States: searching / minting.
SimulationReport simulate_coinage_kernel(const CoinageSimConfig& config, double duration_s,
                                         std::uint64_t seed);

/// Entropy of the normalized measured occupancy distribution.
ComplexityValue empirical_complexity(const SimulationReport& report);

/// Fraction of blocks each account won, aligned with `accounts`. Throws
/// Mismatch unless the account set equals the simulated one.
std::vector<double> stake_share_estimate(const SimulationReport& report,
                                         const std::vector<ForgingAccount>& accounts);

/// Derives the deterministic per-account public key used when a config
/// does not pin one explicitly.
PublicKey derive_public_key(std::uint64_t seed, std::size_t account_index);

/// Derives the genesis generation signature for a run.
GenerationSignature derive_genesis_signature(std::uint64_t seed);

} // namespace chaincx

#endif // CHAINCX_SIM_HPP
