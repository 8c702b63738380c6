// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "chaincx.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "coinage.hpp"
#include "complexity.hpp"
#include "config.hpp"
#include "dataset.hpp"
#include "errors.hpp"
#include "nxt.hpp"
#include "pow.hpp"
#include "report.hpp"
#include "sim.hpp"

namespace {

thread_local std::string g_last_error;

chaincx_status map_code(chaincx::ErrorCode code) {
    using chaincx::ErrorCode;
    switch (code) {
    case ErrorCode::Domain: return CHAINCX_ERR_DOMAIN;
    case ErrorCode::InvalidArgument: return CHAINCX_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return CHAINCX_ERR_PARSE;
    case ErrorCode::Validation: return CHAINCX_ERR_VALIDATION;
    case ErrorCode::State: return CHAINCX_ERR_STATE;
    case ErrorCode::NoForger: return CHAINCX_ERR_NO_FORGER;
    case ErrorCode::Unreachable: return CHAINCX_ERR_UNREACHABLE;
    case ErrorCode::Mismatch: return CHAINCX_ERR_MISMATCH;
    case ErrorCode::Io: return CHAINCX_ERR_IO;
    case ErrorCode::Internal: return CHAINCX_ERR_INTERNAL;
    }
    return CHAINCX_ERR_INTERNAL;
}

template <typename Fn>
chaincx_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CHAINCX_OK;
    } catch (const chaincx::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CHAINCX_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return CHAINCX_ERR_INTERNAL;
    }
}

chaincx_status require(bool ok, const char* message) {
    if (ok)
        return CHAINCX_OK;
    g_last_error = message;
    return CHAINCX_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

chaincx::RenderFormat to_render_format(chaincx_format format) {
    switch (format) {
    case CHAINCX_FORMAT_TEXT: return chaincx::RenderFormat::Text;
    case CHAINCX_FORMAT_CSV: return chaincx::RenderFormat::Csv;
    case CHAINCX_FORMAT_JSON: return chaincx::RenderFormat::Json;
    }
    chaincx::throw_invalid("unknown render format");
}

} // namespace

struct chaincx_dataset {
    chaincx::CurrencyDataset data;
};

struct chaincx_analysis {
    std::vector<chaincx::ComplexityRow> rows;
};

struct chaincx_report {
    chaincx::SimulationReport data;
    // Flattened views handed out through the accessors.
    std::vector<std::pair<std::string, double>> states;
    std::vector<std::pair<std::string, std::uint64_t>> accounts;

    explicit chaincx_report(chaincx::SimulationReport&& report) : data(std::move(report)) {
        for (const auto& [name, seconds] : data.state_occupancy_s)
            states.emplace_back(name, seconds);
        for (const auto& [name, wins] : data.wins_per_account)
            accounts.emplace_back(name, wins);
    }
};

extern "C" {

const char* chaincx_version(void) { return "0.1.0"; }

const char* chaincx_status_name(chaincx_status status) {
    switch (status) {
    case CHAINCX_OK: return "ok";
    case CHAINCX_ERR_DOMAIN: return "domain error";
    case CHAINCX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CHAINCX_ERR_PARSE: return "parse error";
    case CHAINCX_ERR_VALIDATION: return "validation error";
    case CHAINCX_ERR_STATE: return "state error";
    case CHAINCX_ERR_NO_FORGER: return "no eligible forger";
    case CHAINCX_ERR_UNREACHABLE: return "target unreachable";
    case CHAINCX_ERR_MISMATCH: return "mismatch";
    case CHAINCX_ERR_IO: return "i/o error";
    case CHAINCX_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* chaincx_last_error(void) { return g_last_error.c_str(); }

void chaincx_string_free(char* text) { delete[] text; }

chaincx_status chaincx_binary_shannon_entropy(double p, double* bits) {
    if (chaincx_status s = require(bits != nullptr, "bits must not be null"))
        return s;
    return guarded([&] { *bits = chaincx::binary_shannon_entropy(p).bits; });
}

chaincx_status chaincx_statistical_complexity(const double* occupancy, size_t state_count,
                                              double* bits) {
    if (chaincx_status s = require(occupancy != nullptr && bits != nullptr,
                                   "occupancy and bits must not be null"))
        return s;
    return guarded([&] {
        chaincx::EpsilonMachine machine;
        machine.occupancy.assign(occupancy, occupancy + state_count);
        *bits = chaincx::statistical_complexity(machine).bits;
    });
}

chaincx_status chaincx_pade_log1m(double x, double* value) {
    if (chaincx_status s = require(value != nullptr, "value must not be null"))
        return s;
    return guarded([&] { *value = chaincx::pade_log1m(x); });
}

chaincx_status chaincx_stable_one_minus_term(double p, double* value) {
    if (chaincx_status s = require(value != nullptr, "value must not be null"))
        return s;
    return guarded([&] { *value = chaincx::stable_one_minus_term(p); });
}

chaincx_status chaincx_broadcast_probability(double hashrate_hs, double block_time_s,
                                             double* probability) {
    if (chaincx_status s = require(probability != nullptr, "probability must not be null"))
        return s;
    return guarded([&] {
        chaincx::CurrencyParams params{"", chaincx::Protocol::PoW, block_time_s, hashrate_hs};
        *probability = chaincx::broadcast_probability(params);
    });
}

chaincx_status chaincx_pow_complexity(double hashrate_hs, double block_time_s, double* bits) {
    if (chaincx_status s = require(bits != nullptr, "bits must not be null"))
        return s;
    return guarded([&] {
        chaincx::CurrencyParams params{"", chaincx::Protocol::PoW, block_time_s, hashrate_hs};
        *bits = chaincx::pow_complexity(params).bits;
    });
}

chaincx_status chaincx_difficulty_to_target(double difficulty, uint8_t target_be[32]) {
    if (chaincx_status s = require(target_be != nullptr, "target buffer must not be null"))
        return s;
    return guarded([&] {
        const chaincx::HashTarget target = chaincx::difficulty_to_target(difficulty);
        std::memcpy(target_be, target.bytes_be.data(), 32);
    });
}

chaincx_status chaincx_expected_hashes_per_block(double difficulty, double* hashes) {
    if (chaincx_status s = require(hashes != nullptr, "hashes must not be null"))
        return s;
    return guarded([&] { *hashes = chaincx::expected_hashes_per_block(difficulty); });
}

chaincx_status chaincx_compute_hit(const uint8_t public_key[32],
                                   const uint8_t generation_signature[32], uint64_t* hit) {
    if (chaincx_status s = require(hit != nullptr, "hit must not be null"))
        return s;
    return guarded([&] {
        *hit = chaincx::compute_hit(public_key, public_key ? 32 : 0, generation_signature,
                                    generation_signature ? 32 : 0)
                   .value;
    });
}

chaincx_status chaincx_account_target(double base_target, double seconds_elapsed,
                                      uint64_t effective_balance_nxt, double* target) {
    if (chaincx_status s = require(target != nullptr, "target must not be null"))
        return s;
    return guarded([&] {
        *target = chaincx::account_target(base_target, seconds_elapsed, effective_balance_nxt).value;
    });
}

chaincx_status chaincx_can_forge(uint64_t hit, double target, int* can_forge) {
    if (chaincx_status s = require(can_forge != nullptr, "can_forge must not be null"))
        return s;
    return guarded([&] {
        *can_forge = chaincx::can_forge(chaincx::Hit{hit}, chaincx::AccountTarget{target}) ? 1 : 0;
    });
}

chaincx_status chaincx_forge_wait_time(uint64_t hit, double base_target, uint64_t balance_nxt,
                                       uint64_t* seconds) {
    if (chaincx_status s = require(seconds != nullptr, "seconds must not be null"))
        return s;
    return guarded([&] {
        *seconds = chaincx::forge_wait_time(chaincx::Hit{hit}, base_target, balance_nxt);
    });
}

chaincx_status chaincx_retarget_base(double base_target, const double block_times_s[3],
                                     double max_ratio, double min_ratio, double gamma,
                                     double* new_base_target) {
    if (chaincx_status s = require(block_times_s != nullptr && new_base_target != nullptr,
                                   "block_times_s and new_base_target must not be null"))
        return s;
    return guarded([&] {
        chaincx::BaseTargetState state;
        state.base_target = base_target;
        state.prev_base_target = base_target;
        state.recent_block_times_s.assign(block_times_s, block_times_s + 3);
        state.constants = chaincx::RetargetConstants{max_ratio, min_ratio, gamma};
        *new_base_target = chaincx::retarget_base(state).base_target;
    });
}

chaincx_status chaincx_effective_balance(const chaincx_stake_entry* entries, size_t entry_count,
                                         double now_s, uint64_t* balance_nxt) {
    if (chaincx_status s = require(balance_nxt != nullptr && (entries != nullptr || entry_count == 0),
                                   "entries and balance_nxt must not be null"))
        return s;
    return guarded([&] {
        chaincx::ForgingAccount account;
        for (size_t i = 0; i < entry_count; ++i)
            account.stakes.push_back(
                chaincx::StakeEntry{entries[i].amount_nxt, entries[i].received_at_s});
        *balance_nxt = chaincx::effective_balance(account, now_s);
    });
}

chaincx_status chaincx_nxt_complexity(double block_time_s, double* bits) {
    if (chaincx_status s = require(bits != nullptr, "bits must not be null"))
        return s;
    return guarded([&] { *bits = chaincx::nxt_complexity(block_time_s).bits; });
}

chaincx_status chaincx_coin_age(double amount, double holding_days, double* coin_days) {
    if (chaincx_status s = require(coin_days != nullptr, "coin_days must not be null"))
        return s;
    return guarded([&] { *coin_days = chaincx::coin_age(amount, holding_days).coin_days; });
}

chaincx_status chaincx_kernel_target(double base_target_per_coinday, double coin_days,
                                     double* target) {
    if (chaincx_status s = require(target != nullptr, "target must not be null"))
        return s;
    return guarded([&] {
        *target = chaincx::kernel_target(base_target_per_coinday, chaincx::CoinAge{coin_days});
    });
}

chaincx_status chaincx_expected_kernel_time(double coin_days, double reference_coin_days,
                                            double reference_time_s, double* seconds) {
    if (chaincx_status s = require(seconds != nullptr, "seconds must not be null"))
        return s;
    return guarded([&] {
        *seconds = chaincx::expected_kernel_time(chaincx::CoinAge{coin_days},
                                                 chaincx::CoinAge{reference_coin_days},
                                                 reference_time_s);
    });
}

chaincx_status chaincx_continuous_retarget(double prev_target, double observed_rate_bps,
                                           double desired_rate_bps, double max_step_ratio,
                                           double* new_target) {
    if (chaincx_status s = require(new_target != nullptr, "new_target must not be null"))
        return s;
    return guarded([&] {
        *new_target = chaincx::continuous_retarget(prev_target, observed_rate_bps,
                                                   desired_rate_bps, max_step_ratio);
    });
}

chaincx_status chaincx_hybrid_complexity(double hashrate_hs, double block_time_s, double* bits) {
    if (chaincx_status s = require(bits != nullptr, "bits must not be null"))
        return s;
    return guarded([&] {
        chaincx::CurrencyParams params{"", chaincx::Protocol::Hybrid, block_time_s, hashrate_hs};
        *bits = chaincx::hybrid_complexity(params).bits;
    });
}

chaincx_status chaincx_dataset_load(const char* path, chaincx_dataset** dataset) {
    if (chaincx_status s = require(path != nullptr && dataset != nullptr,
                                   "path and dataset must not be null"))
        return s;
    return guarded([&] {
        auto handle = std::make_unique<chaincx_dataset>();
        handle->data = chaincx::load_currency_dataset(path);
        *dataset = handle.release();
    });
}

chaincx_status chaincx_dataset_parse(const char* text, chaincx_dataset** dataset) {
    if (chaincx_status s = require(text != nullptr && dataset != nullptr,
                                   "text and dataset must not be null"))
        return s;
    return guarded([&] {
        auto handle = std::make_unique<chaincx_dataset>();
        handle->data = chaincx::parse_currency_dataset(text);
        *dataset = handle.release();
    });
}

chaincx_status chaincx_dataset_bundled(int table, chaincx_dataset** dataset) {
    if (chaincx_status s = require(dataset != nullptr, "dataset must not be null"))
        return s;
    return guarded([&] {
        if (table != 1 && table != 2)
            chaincx::throw_invalid("bundled table index must be 1 or 2");
        auto handle = std::make_unique<chaincx_dataset>();
        handle->data = table == 1 ? chaincx::bundled_table1() : chaincx::bundled_table2();
        *dataset = handle.release();
    });
}

size_t chaincx_dataset_row_count(const chaincx_dataset* dataset) {
    return dataset ? dataset->data.rows.size() : 0;
}

void chaincx_dataset_free(chaincx_dataset* dataset) { delete dataset; }

chaincx_status chaincx_dataset_analyze(const chaincx_dataset* dataset,
                                       chaincx_analysis** analysis) {
    if (chaincx_status s = require(dataset != nullptr && analysis != nullptr,
                                   "dataset and analysis must not be null"))
        return s;
    return guarded([&] {
        auto handle = std::make_unique<chaincx_analysis>();
        handle->rows = chaincx::analyze_dataset(dataset->data);
        *analysis = handle.release();
    });
}

size_t chaincx_analysis_row_count(const chaincx_analysis* analysis) {
    return analysis ? analysis->rows.size() : 0;
}

chaincx_status chaincx_analysis_row(const chaincx_analysis* analysis, size_t index,
                                    chaincx_analysis_row_view* view) {
    if (chaincx_status s = require(analysis != nullptr && view != nullptr,
                                   "analysis and view must not be null"))
        return s;
    return guarded([&] {
        if (index >= analysis->rows.size())
            chaincx::throw_invalid("row index out of range");
        const chaincx::ComplexityRow& row = analysis->rows[index];
        view->name = row.name.c_str();
        view->protocol = chaincx::protocol_name(row.protocol);
        view->block_time_s = row.block_time_s;
        view->hashrate_hs = row.hashrate_hs;
        view->c_mu_bits = row.c_mu_bits;
        view->has_expected = row.has_expected ? 1 : 0;
        view->expected_c_mu = row.expected_c_mu;
        view->golden_pass = (row.golden_pass && row.error.empty()) ? 1 : 0;
        view->note = row.note.c_str();
        view->error = row.error.c_str();
    });
}

int chaincx_analysis_all_pass(const chaincx_analysis* analysis) {
    return analysis && chaincx::all_rows_pass(analysis->rows) ? 1 : 0;
}

chaincx_status chaincx_analysis_render(const chaincx_analysis* analysis, chaincx_format format,
                                       char** document) {
    if (chaincx_status s = require(analysis != nullptr && document != nullptr,
                                   "analysis and document must not be null"))
        return s;
    return guarded([&] {
        *document = copy_string(chaincx::render_table(analysis->rows, to_render_format(format)));
    });
}

void chaincx_analysis_free(chaincx_analysis* analysis) { delete analysis; }

chaincx_status chaincx_simulate_pow(const char* config_json, uint64_t seed, double duration_s,
                                    chaincx_report** report) {
    if (chaincx_status s = require(config_json != nullptr && report != nullptr,
                                   "config_json and report must not be null"))
        return s;
    return guarded([&] {
        const chaincx::PowSimConfig config = chaincx::parse_pow_config(config_json);
        *report = new chaincx_report(chaincx::simulate_pow(config, duration_s, seed));
    });
}

chaincx_status chaincx_simulate_nxt(const char* config_json, uint64_t seed, double duration_s,
                                    chaincx_report** report) {
    if (chaincx_status s = require(config_json != nullptr && report != nullptr,
                                   "config_json and report must not be null"))
        return s;
    return guarded([&] {
        const chaincx::NxtSimConfig config = chaincx::parse_nxt_config(config_json);
        *report = new chaincx_report(chaincx::simulate_nxt_forging(config, duration_s, seed));
    });
}

chaincx_status chaincx_simulate_coinage(const char* config_json, uint64_t seed, double duration_s,
                                        chaincx_report** report) {
    if (chaincx_status s = require(config_json != nullptr && report != nullptr,
                                   "config_json and report must not be null"))
        return s;
    return guarded([&] {
        const chaincx::CoinageSimConfig config = chaincx::parse_coinage_config(config_json);
        *report = new chaincx_report(chaincx::simulate_coinage_kernel(config, duration_s, seed));
    });
}

uint64_t chaincx_report_block_count(const chaincx_report* report) {
    return report ? report->data.block_count() : 0;
}

uint64_t chaincx_report_fork_events(const chaincx_report* report) {
    return report ? report->data.fork_events : 0;
}

uint64_t chaincx_report_seed(const chaincx_report* report) {
    return report ? report->data.seed : 0;
}

double chaincx_report_duration_s(const chaincx_report* report) {
    return report ? report->data.duration_s : 0.0;
}

chaincx_status chaincx_report_mean_interval(const chaincx_report* report, uint64_t warmup_blocks,
                                            double* mean_s) {
    if (chaincx_status s = require(report != nullptr && mean_s != nullptr,
                                   "report and mean_s must not be null"))
        return s;
    return guarded([&] { *mean_s = report->data.mean_interval_s(warmup_blocks); });
}

size_t chaincx_report_state_count(const chaincx_report* report) {
    return report ? report->states.size() : 0;
}

chaincx_status chaincx_report_state(const chaincx_report* report, size_t index, const char** name,
                                    double* seconds) {
    if (chaincx_status s = require(report != nullptr && name != nullptr && seconds != nullptr,
                                   "report, name, and seconds must not be null"))
        return s;
    return guarded([&] {
        if (index >= report->states.size())
            chaincx::throw_invalid("state index out of range");
        *name = report->states[index].first.c_str();
        *seconds = report->states[index].second;
    });
}

size_t chaincx_report_account_count(const chaincx_report* report) {
    return report ? report->accounts.size() : 0;
}

chaincx_status chaincx_report_account(const chaincx_report* report, size_t index,
                                      const char** name, uint64_t* wins) {
    if (chaincx_status s = require(report != nullptr && name != nullptr && wins != nullptr,
                                   "report, name, and wins must not be null"))
        return s;
    return guarded([&] {
        if (index >= report->accounts.size())
            chaincx::throw_invalid("account index out of range");
        *name = report->accounts[index].first.c_str();
        *wins = report->accounts[index].second;
    });
}

chaincx_status chaincx_report_empirical_complexity(const chaincx_report* report, double* bits) {
    if (chaincx_status s = require(report != nullptr && bits != nullptr,
                                   "report and bits must not be null"))
        return s;
    return guarded([&] { *bits = chaincx::empirical_complexity(report->data).bits; });
}

chaincx_status chaincx_report_stake_shares(const chaincx_report* report, double* shares,
                                           size_t share_count) {
    if (chaincx_status s = require(report != nullptr && shares != nullptr,
                                   "report and shares must not be null"))
        return s;
    return guarded([&] {
        std::vector<chaincx::ForgingAccount> accounts;
        for (const auto& [name, wins] : report->accounts) {
            chaincx::ForgingAccount account;
            account.name = name;
            accounts.push_back(std::move(account));
        }
        if (share_count != accounts.size())
            chaincx::throw_invalid("shares buffer size does not match the account count");
        const std::vector<double> result = chaincx::stake_share_estimate(report->data, accounts);
        for (size_t i = 0; i < result.size(); ++i)
            shares[i] = result[i];
    });
}

chaincx_status chaincx_report_render(const chaincx_report* report, chaincx_format format,
                                     char** document) {
    if (chaincx_status s = require(report != nullptr && document != nullptr,
                                   "report and document must not be null"))
        return s;
    return guarded([&] {
        *document = copy_string(chaincx::render_report(report->data, to_render_format(format)));
    });
}

void chaincx_report_free(chaincx_report* report) { delete report; }

} // extern "C"
