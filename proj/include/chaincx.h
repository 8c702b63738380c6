/* Copyright (c) 2026 The chaincx developers
 * Distributed under the MIT software license, see the accompanying
 * file COPYING or http://www.opensource.org/licenses/mit-license.php.
 *
 * chaincx — statistical complexity of consensus protocols.
 *
 * C API of the shared library. Scalar operations take out-parameters and
 * return a status code; datasets, analyses, and simulation reports are
 * opaque handles. Strings returned through char** are heap-allocated and
 * must be released with chaincx_string_free(). On any non-OK status,
 * chaincx_last_error() carries a thread-local detail message.
 */

#ifndef CHAINCX_H
#define CHAINCX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CHAINCX_API __declspec(dllexport)
#else
#define CHAINCX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chaincx_status {
    CHAINCX_OK = 0,
    CHAINCX_ERR_DOMAIN = 1,           /* argument outside mathematical domain */
    CHAINCX_ERR_INVALID_ARGUMENT = 2, /* malformed input (length, shape, null) */
    CHAINCX_ERR_PARSE = 3,            /* unreadable dataset/config text */
    CHAINCX_ERR_VALIDATION = 4,       /* input violates a documented invariant */
    CHAINCX_ERR_STATE = 5,            /* object cannot serve the request */
    CHAINCX_ERR_NO_FORGER = 6,        /* no account above the 1000 NXT threshold */
    CHAINCX_ERR_UNREACHABLE = 7,      /* target can never exceed the hit */
    CHAINCX_ERR_MISMATCH = 8,         /* report and account set disagree */
    CHAINCX_ERR_IO = 9,
    CHAINCX_ERR_INTERNAL = 10
} chaincx_status;

typedef enum chaincx_format {
    CHAINCX_FORMAT_TEXT = 0,
    CHAINCX_FORMAT_CSV = 1,
    CHAINCX_FORMAT_JSON = 2
} chaincx_format;

/* Default base-target retargeting constants (see chaincx_retarget_base). */
#define CHAINCX_DEFAULT_MAX_RATIO (67.0 / 60.0)
#define CHAINCX_DEFAULT_MIN_RATIO (53.0 / 60.0)
#define CHAINCX_DEFAULT_GAMMA 0.64

/* Base target of the genesis block: 2^64 / (120 * 1e9). */
#define CHAINCX_GENESIS_BASE_TARGET 153722867.3

/* Hard protocol cap 2^64 / (2 * 60). */
#define CHAINCX_MAX_TARGET_VALUE 153722867280912930.0

CHAINCX_API const char* chaincx_version(void);
CHAINCX_API const char* chaincx_status_name(chaincx_status status);
CHAINCX_API const char* chaincx_last_error(void);
CHAINCX_API void chaincx_string_free(char* text);

/* --- statistical complexity ------------------------------------------- */

/* C = -((1-p) log2(1-p) + p log2 p), in bits; stable down to p ~ 1e-300. */
CHAINCX_API chaincx_status chaincx_binary_shannon_entropy(double p, double* bits);

/* C = -sum p_i log2 p_i over an occupancy vector that sums to 1. */
CHAINCX_API chaincx_status chaincx_statistical_complexity(const double* occupancy,
                                                          size_t state_count, double* bits);

/* Pade approximant of ln(1-x): -x(6-x)/(6-4x), for x in [0, 1). */
CHAINCX_API chaincx_status chaincx_pade_log1m(double x, double* value);

/* -(1-p) log2(1-p) without rounding 1-p to 1 for tiny p. */
CHAINCX_API chaincx_status chaincx_stable_one_minus_term(double p, double* value);

/* --- proof of work ------------------------------------------------------ */

/* P(broadcast) = 1 / (hashrate * block_time). */
CHAINCX_API chaincx_status chaincx_broadcast_probability(double hashrate_hs, double block_time_s,
                                                         double* probability);

/* Entropy of the two-state mining/broadcasting machine. */
CHAINCX_API chaincx_status chaincx_pow_complexity(double hashrate_hs, double block_time_s,
                                                  double* bits);

/* target = floor(max_target / difficulty); big-endian 32-byte result.
 * The maximum target is 0x00000000FFFF followed by 52 zero hex digits. */
CHAINCX_API chaincx_status chaincx_difficulty_to_target(double difficulty,
                                                        uint8_t target_be[32]);

/* Expected trials per block, 2^256 / target (about 4.295e9 at difficulty 1). */
CHAINCX_API chaincx_status chaincx_expected_hashes_per_block(double difficulty, double* hashes);

/* --- Nxt-style forging -------------------------------------------------- */

/* Eight chained SHA-256 passes over (public key, generation signature);
 * first 8 bytes of the final digest, little-endian. */
CHAINCX_API chaincx_status chaincx_compute_hit(const uint8_t public_key[32],
                                               const uint8_t generation_signature[32],
                                               uint64_t* hit);

/* T = base_target * seconds * balance, clamped to CHAINCX_MAX_TARGET_VALUE. */
CHAINCX_API chaincx_status chaincx_account_target(double base_target, double seconds_elapsed,
                                                  uint64_t effective_balance_nxt, double* target);

/* *can_forge = 1 exactly when target strictly exceeds the hit. */
CHAINCX_API chaincx_status chaincx_can_forge(uint64_t hit, double target, int* can_forge);

/* Smallest whole second at which the account target beats the hit. */
CHAINCX_API chaincx_status chaincx_forge_wait_time(uint64_t hit, double base_target,
                                                   uint64_t balance_nxt, uint64_t* seconds);

/* One retarget step from the last three block intervals. Fixed point at a
 * 60 s average; a slower average raises the base target proportionally
 * (at most max_ratio), a faster one lowers it damped by gamma (at most
 * down to the min_ratio factor), then the half-of-previous floor and the
 * protocol cap apply. Pass the CHAINCX_DEFAULT_* constants unless tuning. */
CHAINCX_API chaincx_status chaincx_retarget_base(double base_target,
                                                 const double block_times_s[3], double max_ratio,
                                                 double min_ratio, double gamma,
                                                 double* new_base_target);

typedef struct chaincx_stake_entry {
    uint64_t amount_nxt;
    double received_at_s;
} chaincx_stake_entry;

/* Stake confirmed at least 1440 times by now_s, zero when under 1000 NXT. */
CHAINCX_API chaincx_status chaincx_effective_balance(const chaincx_stake_entry* entries,
                                                     size_t entry_count, double now_s,
                                                     uint64_t* balance_nxt);

/* Entropy of the targeting/broadcasting machine at the given block time. */
CHAINCX_API chaincx_status chaincx_nxt_complexity(double block_time_s, double* bits);

/* --- coin age ------------------------------------------------------------ */

/* coin-days = amount * holding_days. */
CHAINCX_API chaincx_status chaincx_coin_age(double amount, double holding_days,
                                            double* coin_days);

/* Stake-kernel target: base target per coin-day times coin-days consumed. */
CHAINCX_API chaincx_status chaincx_kernel_target(double base_target_per_coinday,
                                                 double coin_days, double* target);

/* Expected kernel time, inversely proportional to coin age:
 * reference_time * reference_coin_days / coin_days. */
CHAINCX_API chaincx_status chaincx_expected_kernel_time(double coin_days,
                                                        double reference_coin_days,
                                                        double reference_time_s,
                                                        double* seconds);

/* Continuous per-block retarget toward the desired rate, per-step ratio
 * bounded by max_step_ratio (> 1). */
CHAINCX_API chaincx_status chaincx_continuous_retarget(double prev_target,
                                                       double observed_rate_bps,
                                                       double desired_rate_bps,
                                                       double max_step_ratio,
                                                       double* new_target);

/* Same entropy path as PoW, applied to PoS/hybrid parameters. */
CHAINCX_API chaincx_status chaincx_hybrid_complexity(double hashrate_hs, double block_time_s,
                                                     double* bits);

/* --- datasets and table analysis ---------------------------------------- */

typedef struct chaincx_dataset chaincx_dataset;
typedef struct chaincx_analysis chaincx_analysis;

CHAINCX_API chaincx_status chaincx_dataset_load(const char* path, chaincx_dataset** dataset);
CHAINCX_API chaincx_status chaincx_dataset_parse(const char* text, chaincx_dataset** dataset);
/* table 1 (PoW) or table 2 (PoS/hybrid) as shipped with the library. */
CHAINCX_API chaincx_status chaincx_dataset_bundled(int table, chaincx_dataset** dataset);
CHAINCX_API size_t chaincx_dataset_row_count(const chaincx_dataset* dataset);
CHAINCX_API void chaincx_dataset_free(chaincx_dataset* dataset);

CHAINCX_API chaincx_status chaincx_dataset_analyze(const chaincx_dataset* dataset,
                                                   chaincx_analysis** analysis);
CHAINCX_API size_t chaincx_analysis_row_count(const chaincx_analysis* analysis);

/* Pointers stay valid for the lifetime of the analysis handle. */
typedef struct chaincx_analysis_row_view {
    const char* name;
    const char* protocol;
    double block_time_s;
    double hashrate_hs;
    double c_mu_bits;
    int has_expected;
    double expected_c_mu;
    int golden_pass;
    const char* note;  /* empty string when absent */
    const char* error; /* empty string when the row analyzed cleanly */
} chaincx_analysis_row_view;

CHAINCX_API chaincx_status chaincx_analysis_row(const chaincx_analysis* analysis, size_t index,
                                                chaincx_analysis_row_view* view);
/* 1 when every row analyzed cleanly and matched its printed expectation. */
CHAINCX_API int chaincx_analysis_all_pass(const chaincx_analysis* analysis);
CHAINCX_API chaincx_status chaincx_analysis_render(const chaincx_analysis* analysis,
                                                   chaincx_format format, char** document);
CHAINCX_API void chaincx_analysis_free(chaincx_analysis* analysis);

/* --- simulations --------------------------------------------------------- */

typedef struct chaincx_report chaincx_report;

/* config_json schemas are documented in the project README. Runs are
 * deterministic: the same (config, seed, duration) always produces a
 * bit-identical report. */
CHAINCX_API chaincx_status chaincx_simulate_pow(const char* config_json, uint64_t seed,
                                                double duration_s, chaincx_report** report);
CHAINCX_API chaincx_status chaincx_simulate_nxt(const char* config_json, uint64_t seed,
                                                double duration_s, chaincx_report** report);
CHAINCX_API chaincx_status chaincx_simulate_coinage(const char* config_json, uint64_t seed,
                                                    double duration_s, chaincx_report** report);

CHAINCX_API uint64_t chaincx_report_block_count(const chaincx_report* report);
CHAINCX_API uint64_t chaincx_report_fork_events(const chaincx_report* report);
CHAINCX_API uint64_t chaincx_report_seed(const chaincx_report* report);
CHAINCX_API double chaincx_report_duration_s(const chaincx_report* report);
CHAINCX_API chaincx_status chaincx_report_mean_interval(const chaincx_report* report,
                                                        uint64_t warmup_blocks, double* mean_s);

CHAINCX_API size_t chaincx_report_state_count(const chaincx_report* report);
CHAINCX_API chaincx_status chaincx_report_state(const chaincx_report* report, size_t index,
                                                const char** name, double* seconds);

CHAINCX_API size_t chaincx_report_account_count(const chaincx_report* report);
CHAINCX_API chaincx_status chaincx_report_account(const chaincx_report* report, size_t index,
                                                  const char** name, uint64_t* wins);

/* Entropy of the measured occupancy distribution. */
CHAINCX_API chaincx_status chaincx_report_empirical_complexity(const chaincx_report* report,
                                                               double* bits);

/* Win fraction per account, in the report's account order (as returned by
 * chaincx_report_account). `shares` must hold account_count doubles. */
CHAINCX_API chaincx_status chaincx_report_stake_shares(const chaincx_report* report,
                                                       double* shares, size_t share_count);

CHAINCX_API chaincx_status chaincx_report_render(const chaincx_report* report,
                                                 chaincx_format format, char** document);
CHAINCX_API void chaincx_report_free(chaincx_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHAINCX_H */
