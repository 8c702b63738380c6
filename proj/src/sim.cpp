// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <set>

#include "errors.hpp"
#include "rng.hpp"
#include "sha256.hpp"

namespace chaincx {

namespace {

std::uint64_t whole_seconds(double duration_s) {
    if (!std::isfinite(duration_s) || duration_s < 1.0)
        throw_domain("simulation duration must be at least one second");
    return static_cast<std::uint64_t>(duration_s);
}

void append_u64_le(std::vector<std::uint8_t>& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

Digest256 tagged_hash(const char* tag, std::uint64_t a, std::uint64_t b) {
    std::vector<std::uint8_t> buf(tag, tag + std::strlen(tag));
    append_u64_le(buf, a);
    append_u64_le(buf, b);
    return sha256(buf.data(), buf.size());
}

} // namespace

PublicKey derive_public_key(std::uint64_t seed, std::size_t account_index) {
    return tagged_hash("chaincx.account", seed, account_index);
}

GenerationSignature derive_genesis_signature(std::uint64_t seed) {
    return tagged_hash("chaincx.genesis", seed, 0);
}

LedgerState apply_block(const LedgerState& state, const CandidateBlock& block,
                        const PublicKey& forger_public_key) {
    if (block.height != state.height + 1)
        throw_validation("apply_block: candidate height does not extend this state");
    if (block.tx_count > kMaxTxPerBlock)
        throw_validation("apply_block: candidate bundles more than 255 transactions");
    if (!std::isfinite(block.difficulty_contribution) || block.difficulty_contribution < 0.0)
        throw_validation("apply_block: difficulty contribution must be non-negative");

    LedgerState next = state;
    next.height = block.height;
    next.cumulative_difficulty = state.cumulative_difficulty + block.difficulty_contribution;

    std::uint8_t material[64];
    std::copy(forger_public_key.begin(), forger_public_key.end(), material);
    std::copy(state.generation_signature.begin(), state.generation_signature.end(), material + 32);
    next.generation_signature = sha256(material, sizeof(material));
    return next;
}

double SimulationReport::total_occupancy_s() const {
    double total = 0.0;
    for (const auto& [name, seconds] : state_occupancy_s)
        total += seconds;
    return total;
}

double SimulationReport::mean_interval_s(std::uint64_t warmup_blocks) const {
    if (block_intervals_s.size() <= warmup_blocks)
        throw Error(ErrorCode::State, "mean_interval_s: no blocks after the warm-up window");
    double sum = 0.0;
    for (std::size_t i = warmup_blocks; i < block_intervals_s.size(); ++i)
        sum += block_intervals_s[i];
    return sum / static_cast<double>(block_intervals_s.size() - warmup_blocks);
}

SimulationReport simulate_pow(const PowSimConfig& config, double duration_s, std::uint64_t seed) {
    double p;
    double block_time;
    if (config.has_explicit_probability) {
        p = config.tick_success_probability;
        if (!std::isfinite(p) || p <= 0.0 || p > 1.0)
            throw_domain("simulate_pow: tick_success_probability must lie in (0, 1]");
        block_time = 1.0 / p;
    } else {
        validate(config.params);
        block_time = config.params.block_time_s;
        p = 1.0 / block_time;
        if (p > 1.0)
            throw_domain("simulate_pow: block time under one tick is not simulable");
    }

    const std::uint64_t ticks = whole_seconds(duration_s);
    if (static_cast<double>(ticks) < 10.0 * block_time)
        throw_domain("simulate_pow: duration must cover at least 10 expected blocks");

    SimRng rng(seed);
    SimulationReport report;
    report.kind = "pow";
    report.seed = seed;
    report.duration_s = static_cast<double>(ticks);

    const std::string miner = "network";
    double mining_s = 0.0;
    double broadcasting_s = 0.0;
    std::uint64_t last_block_tick = 0;
    std::uint64_t height = 0;

    for (std::uint64_t t = 1; t <= ticks; ++t) {
        if (!rng.bernoulli(p)) {
            mining_s += 1.0;
            continue;
        }
        broadcasting_s += 1.0;
        ++height;
        const double interval = static_cast<double>(t - last_block_tick);
        report.block_intervals_s.push_back(interval);
        report.winners.push_back(miner);
        report.blocks.push_back(BlockRecord{height, static_cast<double>(t), interval, miner,
                                            0.0, 1, 0});
        last_block_tick = t;
    }

    report.state_occupancy_s["mining"] = mining_s;
    report.state_occupancy_s["broadcasting"] = broadcasting_s;
    report.wins_per_account[miner] = height;
    return report;
}

SimulationReport simulate_nxt_forging(const NxtSimConfig& config, double duration_s,
                                      std::uint64_t seed) {
    if (config.accounts.empty())
        throw_validation("simulate_nxt_forging: at least one account required");
    if (!std::isfinite(config.genesis_base_target) || config.genesis_base_target <= 0.0)
        throw_validation("simulate_nxt_forging: genesis base target must be positive");

    struct Forger {
        std::string name;
        PublicKey public_key;
        std::uint64_t balance_nxt;
    };

    std::vector<Forger> forgers;
    std::set<std::string> names;
    for (std::size_t i = 0; i < config.accounts.size(); ++i) {
        ForgingAccount account = config.accounts[i];
        if (account.name.empty())
            account.name = "account-" + std::to_string(i);
        if (!names.insert(account.name).second)
            throw_validation("simulate_nxt_forging: duplicate account name '" + account.name + "'");
        PublicKey key = account.public_key;
        if (key == PublicKey{})
            key = derive_public_key(seed, i);
        const std::uint64_t balance = effective_balance(account, 0.0);
        forgers.push_back(Forger{account.name, key, balance});
    }

    const bool any_forger = std::any_of(forgers.begin(), forgers.end(),
                                        [](const Forger& f) { return f.balance_nxt > 0; });
    if (!any_forger)
        throw Error(ErrorCode::NoForger,
                    "simulate_nxt_forging: no account meets the 1000 NXT effective-balance threshold");

    const std::uint64_t ticks = whole_seconds(duration_s);
    SimRng rng(seed);

    SimulationReport report;
    report.kind = "nxt";
    report.seed = seed;
    report.duration_s = static_cast<double>(ticks);
    for (const Forger& f : forgers)
        report.wins_per_account[f.name] = 0;

    LedgerState ledger;
    ledger.generation_signature = derive_genesis_signature(seed);
    for (const Forger& f : forgers)
        ledger.balances_nxt[f.name] = f.balance_nxt;

    double base_target = config.genesis_base_target;
    double prev_base_target = base_target;
    std::deque<double> recent_intervals;

    double targeting_s = 0.0;
    double broadcasting_s = 0.0;
    std::uint64_t elapsed = 0;

    std::vector<std::uint64_t> hits(forgers.size());
    while (elapsed < ticks) {
        // Hits are fixed for the whole block, derived from the chain's
        // generation signature; only S grows while everyone waits.
        for (std::size_t k = 0; k < forgers.size(); ++k)
            hits[k] = compute_hit(forgers[k].public_key, ledger.generation_signature).value;

        std::vector<std::size_t> eligible;
        std::uint64_t s = 0;
        while (elapsed + s < ticks) {
            ++s;
            for (std::size_t k = 0; k < forgers.size(); ++k) {
                if (forgers[k].balance_nxt == 0)
                    continue;
                // Eligibility is the plain product T_b * S * B_k against
                // the hit; the 2^64/120 cap constrains the base target
                // during retargeting, not this comparison.
                const double rate = base_target * static_cast<double>(forgers[k].balance_nxt);
                if (can_forge(Hit{hits[k]}, AccountTarget{rate * static_cast<double>(s)}))
                    eligible.push_back(k);
            }
            if (!eligible.empty())
                break;
        }

        if (eligible.empty()) {
            // Duration ran out mid-block; the tail was all targeting.
            targeting_s += static_cast<double>(ticks - elapsed);
            elapsed = ticks;
            break;
        }

        // Every winner of this second broadcasts a candidate. They all
        // extend the same parent with the same base target, so cumulative
        // difficulty ties; lowest hit wins, then account name.
        std::vector<CandidateBlock> candidates;
        for (std::size_t k : eligible) {
            CandidateBlock candidate;
            candidate.forger = forgers[k].name;
            candidate.height = ledger.height + 1;
            candidate.tx_count = static_cast<std::uint32_t>(rng.next_below(kMaxTxPerBlock + 1));
            candidate.difficulty_contribution = 1.0 / base_target;
            candidate.timestamp_s = static_cast<double>(elapsed + s);
            candidate.forger_hit = hits[k];
            candidates.push_back(candidate);
        }
        if (candidates.size() > 1)
            ++report.fork_events;

        std::size_t winner = 0;
        for (std::size_t c = 1; c < candidates.size(); ++c) {
            const CandidateBlock& a = candidates[c];
            const CandidateBlock& b = candidates[winner];
            const double da = ledger.cumulative_difficulty + a.difficulty_contribution;
            const double db = ledger.cumulative_difficulty + b.difficulty_contribution;
            if (da > db || (da == db && (a.forger_hit < b.forger_hit ||
                                         (a.forger_hit == b.forger_hit && a.forger < b.forger))))
                winner = c;
        }
        const CandidateBlock& block = candidates[winner];
        const std::size_t winner_index = eligible[winner];
        ledger = apply_block(ledger, block, forgers[winner_index].public_key);

        elapsed += s;
        targeting_s += static_cast<double>(s - 1);
        broadcasting_s += 1.0;
        report.block_intervals_s.push_back(static_cast<double>(s));
        report.winners.push_back(block.forger);
        ++report.wins_per_account[block.forger];
        report.blocks.push_back(BlockRecord{ledger.height, static_cast<double>(elapsed),
                                            static_cast<double>(s), block.forger, base_target,
                                            static_cast<std::uint32_t>(candidates.size()),
                                            block.tx_count});

        recent_intervals.push_back(static_cast<double>(s));
        if (recent_intervals.size() > 3)
            recent_intervals.pop_front();
        if (recent_intervals.size() == 3) {
            BaseTargetState state;
            state.base_target = base_target;
            state.prev_base_target = prev_base_target;
            state.recent_block_times_s.assign(recent_intervals.begin(), recent_intervals.end());
            state.constants = config.constants;
            const BaseTargetState retargeted = retarget_base(state);
            prev_base_target = retargeted.prev_base_target;
            base_target = retargeted.base_target;
        }
    }

    report.state_occupancy_s["targeting"] = targeting_s;
    report.state_occupancy_s["broadcasting"] = broadcasting_s;
    return report;
}

SimulationReport simulate_coinage_kernel(const CoinageSimConfig& config, double duration_s,
                                         std::uint64_t seed) {
    if (config.outputs.empty())
        throw_validation("simulate_coinage_kernel: at least one output required");
    if (!std::isfinite(config.kernel_scale_per_coinday) || config.kernel_scale_per_coinday <= 0.0)
        throw_validation("simulate_coinage_kernel: kernel scale must be positive");

    std::vector<WalletOutput> outputs = config.outputs;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (outputs[i].owner.empty())
            outputs[i].owner = "output-" + std::to_string(i);
        if (outputs[i].spent)
            throw_validation("simulate_coinage_kernel: output '" + outputs[i].owner +
                             "' is already spent");
        if (!std::isfinite(outputs[i].amount) || outputs[i].amount <= 0.0)
            throw_validation("simulate_coinage_kernel: output amounts must be positive");
    }

    const std::uint64_t ticks = whole_seconds(duration_s);
    SimRng rng(seed);

    SimulationReport report;
    report.kind = "coinage";
    report.seed = seed;
    report.duration_s = static_cast<double>(ticks);
    for (const WalletOutput& output : outputs)
        report.wins_per_account.emplace(output.owner, 0);

    double searching_s = 0.0;
    double minting_s = 0.0;
    std::uint64_t last_block_tick = 0;
    std::uint64_t height = 0;

    for (std::uint64_t t = 1; t <= ticks; ++t) {
        bool minted_this_tick = false;
        const double now = static_cast<double>(t);
        for (WalletOutput& output : outputs) {
            // One hash per unspent wallet-output per second: a single
            // bounded trial, never more.
            const double age = output.accrued_coin_days(now);
            if (age <= 0.0)
                continue;
            const double p = std::min(1.0, config.kernel_scale_per_coinday * age);
            if (!rng.bernoulli(p))
                continue;
            const CoinstakeRecord record = consume_coin_age(output, now, height + 1);
            ++height;
            const double interval =
                minted_this_tick ? 0.0 : static_cast<double>(t - last_block_tick);
            report.block_intervals_s.push_back(interval);
            report.winners.push_back(record.owner);
            ++report.wins_per_account[record.owner];
            report.blocks.push_back(BlockRecord{height, now, interval, record.owner,
                                                record.consumed.coin_days, 1, 0});
            minted_this_tick = true;
            last_block_tick = t;
        }
        if (minted_this_tick)
            minting_s += 1.0;
        else
            searching_s += 1.0;
    }

    report.state_occupancy_s["searching"] = searching_s;
    report.state_occupancy_s["minting"] = minting_s;
    return report;
}

ComplexityValue empirical_complexity(const SimulationReport& report) {
    const double total = report.total_occupancy_s();
    if (!(total > 0.0))
        throw Error(ErrorCode::State, "empirical_complexity: report has no measured occupancy");

    EpsilonMachine machine;
    for (const auto& [name, seconds] : report.state_occupancy_s) {
        machine.states.push_back(name);
        machine.occupancy.push_back(seconds / total);
    }
    return statistical_complexity(machine);
}

std::vector<double> stake_share_estimate(const SimulationReport& report,
                                         const std::vector<ForgingAccount>& accounts) {
    if (report.kind != "nxt")
        throw Error(ErrorCode::Mismatch, "stake_share_estimate: report is not a forging run");
    if (accounts.size() != report.wins_per_account.size())
        throw Error(ErrorCode::Mismatch,
                    "stake_share_estimate: account list does not match the simulated set");

    std::uint64_t total = 0;
    for (const auto& [name, wins] : report.wins_per_account)
        total += wins;
    if (total == 0)
        throw Error(ErrorCode::State, "stake_share_estimate: the run produced no blocks");

    std::vector<double> shares;
    shares.reserve(accounts.size());
    for (const ForgingAccount& account : accounts) {
        const auto it = report.wins_per_account.find(account.name);
        if (it == report.wins_per_account.end())
            throw Error(ErrorCode::Mismatch, "stake_share_estimate: unknown account '" +
                                                 account.name + "'");
        shares.push_back(static_cast<double>(it->second) / static_cast<double>(total));
    }
    return shares;
}

} // namespace chaincx
