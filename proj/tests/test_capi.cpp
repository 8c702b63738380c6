// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

// Exercises the extern-C surface the shared library exports — the same
// contract the CLI and foreign-language embedders build on. Only
// chaincx.h is included from the project.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>

#include <doctest.h>

#include "chaincx.h"
#include "support/checks.hpp"
#include "support/ref_sha256.hpp"

using chaincx_test::rel_close;

namespace {

const char* kTwoForgers = R"({
    "accounts": [
        {"name": "alice", "stake_nxt": 500000000},
        {"name": "bob", "stake_nxt": 500000000}
    ]
})";

} // namespace

TEST_CASE("version and status strings exist") {
    CHECK(std::string(chaincx_version()) == "0.1.0");
    CHECK(std::string(chaincx_status_name(CHAINCX_OK)) == "ok");
    CHECK(std::string(chaincx_status_name(CHAINCX_ERR_DOMAIN)) == "domain error");
}

TEST_CASE("scalar entropy functions and their error codes") {
    double bits = -1.0;
    CHECK(chaincx_binary_shannon_entropy(0.5, &bits) == CHAINCX_OK);
    CHECK(bits == 1.0);

    CHECK(chaincx_binary_shannon_entropy(3.9e-22, &bits) == CHAINCX_OK);
    CHECK(rel_close(bits, 2.83e-20, 0.01));

    CHECK(chaincx_binary_shannon_entropy(1.5, &bits) == CHAINCX_ERR_DOMAIN);
    CHECK(std::strlen(chaincx_last_error()) > 0);
    CHECK(chaincx_binary_shannon_entropy(0.5, nullptr) == CHAINCX_ERR_INVALID_ARGUMENT);

    const double uniform4[4] = {0.25, 0.25, 0.25, 0.25};
    CHECK(chaincx_statistical_complexity(uniform4, 4, &bits) == CHAINCX_OK);
    CHECK(bits == 2.0);

    const double broken[2] = {0.9, 0.3};
    CHECK(chaincx_statistical_complexity(broken, 2, &bits) == CHAINCX_ERR_VALIDATION);

    double value = 0.0;
    CHECK(chaincx_pade_log1m(0.1, &value) == CHAINCX_OK);
    CHECK(rel_close(value, -0.1 * (5.9 / 5.6), 1e-15));
    CHECK(chaincx_pade_log1m(1.0, &value) == CHAINCX_ERR_DOMAIN);

    CHECK(chaincx_stable_one_minus_term(0.5, &value) == CHAINCX_OK);
    CHECK(value == 0.5);
}

TEST_CASE("pow functions through the C surface") {
    double p = 0.0;
    CHECK(chaincx_broadcast_probability(4.27e18, 600.0, &p) == CHAINCX_OK);
    CHECK(rel_close(p, 3.9e-22, 0.01));
    CHECK(chaincx_broadcast_probability(-1.0, 600.0, &p) == CHAINCX_ERR_DOMAIN);

    double bits = 0.0;
    CHECK(chaincx_pow_complexity(2.78e19, 600.0, &bits) == CHAINCX_OK);
    CHECK(rel_close(bits, 4.51e-21, 0.005));

    uint8_t target[32];
    CHECK(chaincx_difficulty_to_target(1.0, target) == CHAINCX_OK);
    CHECK(target[0] == 0x00);
    CHECK(target[4] == 0xFF);
    CHECK(target[5] == 0xFF);
    CHECK(target[6] == 0x00);
    CHECK(chaincx_difficulty_to_target(0.5, target) == CHAINCX_ERR_DOMAIN);

    double hashes = 0.0;
    CHECK(chaincx_expected_hashes_per_block(1.0, &hashes) == CHAINCX_OK);
    CHECK(rel_close(hashes, 4295032833.0, 1e-6));
}

TEST_CASE("nxt functions through the C surface") {
    uint8_t key[32] = {0};
    uint8_t sig[32] = {0};
    uint64_t hit = 0;
    CHECK(chaincx_compute_hit(key, sig, &hit) == CHAINCX_OK);

    std::array<uint8_t, 32> key_arr{};
    std::array<uint8_t, 32> sig_arr{};
    CHECK(hit == chaincx_ref::iterated_hit(key_arr, sig_arr));

    double target = 0.0;
    CHECK(chaincx_account_target(CHAINCX_GENESIS_BASE_TARGET, 60.0, 1000, &target) == CHAINCX_OK);
    CHECK(rel_close(target, 9.223372038e12, 1e-9));

    int can = 0;
    CHECK(chaincx_can_forge(100, 100.0, &can) == CHAINCX_OK);
    CHECK(can == 0);
    CHECK(chaincx_can_forge(100, 100.5, &can) == CHAINCX_OK);
    CHECK(can == 1);

    uint64_t wait = 0;
    CHECK(chaincx_forge_wait_time(0, CHAINCX_GENESIS_BASE_TARGET, 1000, &wait) == CHAINCX_OK);
    CHECK(wait == 1);
    CHECK(chaincx_forge_wait_time(UINT64_MAX, CHAINCX_GENESIS_BASE_TARGET, 1000, &wait) ==
          CHAINCX_ERR_UNREACHABLE);

    const double steady[3] = {60.0, 60.0, 60.0};
    double next = 0.0;
    CHECK(chaincx_retarget_base(2.5e8, steady, CHAINCX_DEFAULT_MAX_RATIO,
                                CHAINCX_DEFAULT_MIN_RATIO, CHAINCX_DEFAULT_GAMMA,
                                &next) == CHAINCX_OK);
    CHECK(next == 2.5e8);

    const chaincx_stake_entry entries[2] = {{3000, -10.0 * 86400.0}, {2000, -300.0}};
    uint64_t balance = 0;
    CHECK(chaincx_effective_balance(entries, 2, 0.0, &balance) == CHAINCX_OK);
    CHECK(balance == 3000);

    double bits = 0.0;
    CHECK(chaincx_nxt_complexity(60.0, &bits) == CHAINCX_OK);
    CHECK(rel_close(bits, 0.122, 0.005));
}

TEST_CASE("coin-age functions through the C surface") {
    double coin_days = 0.0;
    CHECK(chaincx_coin_age(10.0, 90.0, &coin_days) == CHAINCX_OK);
    CHECK(coin_days == 900.0);
    CHECK(chaincx_coin_age(-10.0, 90.0, &coin_days) == CHAINCX_ERR_DOMAIN);

    double target = 0.0;
    CHECK(chaincx_kernel_target(2e-7, 900.0, &target) == CHAINCX_OK);
    CHECK(rel_close(target, 1.8e-4, 1e-12));

    double seconds = 0.0;
    CHECK(chaincx_expected_kernel_time(200.0 * 365.0, 100.0 * 365.0, 2.0 * 86400.0, &seconds) ==
          CHAINCX_OK);
    CHECK(seconds == 86400.0);

    double next = 0.0;
    CHECK(chaincx_continuous_retarget(1e6, 0.01, 0.01, 1.1, &next) == CHAINCX_OK);
    CHECK(next == 1e6);

    double bits = 0.0;
    CHECK(chaincx_hybrid_complexity(3.32e16, 600.0, &bits) == CHAINCX_OK);
    CHECK(rel_close(bits, 3.29e-18, 0.005));
}

TEST_CASE("dataset handles: bundled tables analyze and render") {
    chaincx_dataset* dataset = nullptr;
    REQUIRE(chaincx_dataset_bundled(1, &dataset) == CHAINCX_OK);
    CHECK(chaincx_dataset_row_count(dataset) == 15);

    chaincx_analysis* analysis = nullptr;
    REQUIRE(chaincx_dataset_analyze(dataset, &analysis) == CHAINCX_OK);
    chaincx_dataset_free(dataset);

    CHECK(chaincx_analysis_row_count(analysis) == 15);
    CHECK(chaincx_analysis_all_pass(analysis) == 1);

    chaincx_analysis_row_view view;
    REQUIRE(chaincx_analysis_row(analysis, 0, &view) == CHAINCX_OK);
    CHECK(std::string(view.name) == "Bitcoin");
    CHECK(std::string(view.protocol) == "pow");
    CHECK(view.has_expected == 1);
    CHECK(view.golden_pass == 1);
    CHECK(rel_close(view.c_mu_bits, 4.51e-21, 0.005));

    CHECK(chaincx_analysis_row(analysis, 99, &view) == CHAINCX_ERR_INVALID_ARGUMENT);

    char* document = nullptr;
    REQUIRE(chaincx_analysis_render(analysis, CHAINCX_FORMAT_TEXT, &document) == CHAINCX_OK);
    CHECK(std::string(document).find("4.51e-21") != std::string::npos);
    chaincx_string_free(document);
    chaincx_analysis_free(analysis);

    CHECK(chaincx_dataset_bundled(3, &dataset) == CHAINCX_ERR_INVALID_ARGUMENT);
    CHECK(chaincx_dataset_parse("garbage", &dataset) == CHAINCX_ERR_PARSE);
    CHECK(chaincx_dataset_load("/does/not/exist.csv", &dataset) == CHAINCX_ERR_IO);
}

TEST_CASE("simulations through the C surface are deterministic and measurable") {
    chaincx_report* a = nullptr;
    chaincx_report* b = nullptr;
    REQUIRE(chaincx_simulate_nxt(kTwoForgers, 4711, 120000.0, &a) == CHAINCX_OK);
    REQUIRE(chaincx_simulate_nxt(kTwoForgers, 4711, 120000.0, &b) == CHAINCX_OK);

    char* doc_a = nullptr;
    char* doc_b = nullptr;
    REQUIRE(chaincx_report_render(a, CHAINCX_FORMAT_JSON, &doc_a) == CHAINCX_OK);
    REQUIRE(chaincx_report_render(b, CHAINCX_FORMAT_JSON, &doc_b) == CHAINCX_OK);
    CHECK(std::string(doc_a) == std::string(doc_b));
    chaincx_string_free(doc_a);
    chaincx_string_free(doc_b);
    chaincx_report_free(b);

    CHECK(chaincx_report_seed(a) == 4711);
    CHECK(chaincx_report_duration_s(a) == 120000.0);
    CHECK(chaincx_report_block_count(a) > 1000);

    double mean = 0.0;
    CHECK(chaincx_report_mean_interval(a, 100, &mean) == CHAINCX_OK);
    CHECK(mean > 40.0);
    CHECK(mean < 80.0);

    REQUIRE(chaincx_report_state_count(a) == 2);
    double occupancy_total = 0.0;
    for (size_t i = 0; i < 2; ++i) {
        const char* name = nullptr;
        double seconds = 0.0;
        REQUIRE(chaincx_report_state(a, i, &name, &seconds) == CHAINCX_OK);
        occupancy_total += seconds;
    }
    CHECK(occupancy_total == 120000.0);

    REQUIRE(chaincx_report_account_count(a) == 2);
    uint64_t wins_total = 0;
    for (size_t i = 0; i < 2; ++i) {
        const char* name = nullptr;
        uint64_t wins = 0;
        REQUIRE(chaincx_report_account(a, i, &name, &wins) == CHAINCX_OK);
        wins_total += wins;
    }
    CHECK(wins_total == chaincx_report_block_count(a));

    double bits = 0.0;
    CHECK(chaincx_report_empirical_complexity(a, &bits) == CHAINCX_OK);
    CHECK(bits > 0.05);
    CHECK(bits < 0.3);

    double shares[2] = {0.0, 0.0};
    CHECK(chaincx_report_stake_shares(a, shares, 2) == CHAINCX_OK);
    CHECK(rel_close(shares[0] + shares[1], 1.0, 1e-12));
    CHECK(chaincx_report_stake_shares(a, shares, 1) == CHAINCX_ERR_INVALID_ARGUMENT);

    chaincx_report_free(a);

    // Error paths: bad config JSON, ineligible accounts.
    chaincx_report* bad = nullptr;
    CHECK(chaincx_simulate_nxt("{", 1, 1000.0, &bad) == CHAINCX_ERR_PARSE);
    CHECK(chaincx_simulate_nxt(R"({"accounts": [{"stake_nxt": 10}]})", 1, 1000.0, &bad) ==
          CHAINCX_ERR_NO_FORGER);

    chaincx_report* pow = nullptr;
    REQUIRE(chaincx_simulate_pow(R"({"tick_success_probability": 0.5})", 9, 1000.0, &pow) ==
            CHAINCX_OK);
    CHECK(chaincx_report_block_count(pow) > 300);
    chaincx_report_free(pow);

    chaincx_report* coinage = nullptr;
    REQUIRE(chaincx_simulate_coinage(
                R"({"outputs": [{"owner": "bob", "amount": 1000, "received_at_s": -8640000}],
                    "kernel_scale_per_coinday": 1e-7})",
                3, 30000.0, &coinage) == CHAINCX_OK);
    CHECK(chaincx_report_block_count(coinage) > 0);
    chaincx_report_free(coinage);
}
