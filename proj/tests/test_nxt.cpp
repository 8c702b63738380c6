// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "errors.hpp"
#include "nxt.hpp"
#include "rng.hpp"
#include "support/checks.hpp"
#include "support/ref_sha256.hpp"

using chaincx::account_target;
using chaincx::AccountTarget;
using chaincx::BaseTargetState;
using chaincx::can_forge;
using chaincx::compute_hit;
using chaincx::effective_balance;
using chaincx::Error;
using chaincx::forge_wait_time;
using chaincx::ForgingAccount;
using chaincx::GenerationSignature;
using chaincx::Hit;
using chaincx::kGenesisBaseTarget;
using chaincx::kMaxTargetValue;
using chaincx::nxt_complexity;
using chaincx::PublicKey;
using chaincx::retarget_base;
using chaincx::SimRng;
using chaincx::StakeEntry;
using chaincx_test::rel_close;

namespace {

PublicKey key_from(std::uint64_t seed) {
    PublicKey key{};
    for (std::size_t i = 0; i < key.size(); ++i)
        key[i] = static_cast<std::uint8_t>((seed >> (8 * (i % 8))) + i);
    return key;
}

} // namespace

TEST_CASE("the reference digest matches the published SHA-256 test vector") {
    // FIPS 180-4 appendix: SHA-256("abc").
    const std::uint8_t abc[3] = {'a', 'b', 'c'};
    const auto digest = chaincx_ref::sha256(abc, 3);
    const std::uint8_t expected[32] = {0xba, 0x78, 0x16, 0xbf, 0x8f, 0x01, 0xcf, 0xea,
                                       0x41, 0x41, 0x40, 0xde, 0x5d, 0xae, 0x22, 0x23,
                                       0xb0, 0x03, 0x61, 0xa3, 0x96, 0x17, 0x7a, 0x9c,
                                       0xb4, 0x10, 0xff, 0x61, 0xf2, 0x00, 0x15, 0xad};
    CHECK(std::equal(digest.begin(), digest.end(), expected));
}

TEST_CASE("compute_hit is deterministic and matches the independent oracle") {
    const PublicKey zero_key{};
    const GenerationSignature zero_sig{};
    const Hit h1 = compute_hit(zero_key, zero_sig);
    const Hit h2 = compute_hit(zero_key, zero_sig);
    CHECK(h1.value == h2.value);
    CHECK(h1.value == chaincx_ref::iterated_hit(zero_key, zero_sig));

    SimRng rng(4242);
    for (int i = 0; i < 32; ++i) {
        const PublicKey key = key_from(rng.next_u64());
        const GenerationSignature sig = key_from(rng.next_u64());
        CHECK(compute_hit(key, sig).value == chaincx_ref::iterated_hit(key, sig));
    }
}

TEST_CASE("compute_hit rejects malformed buffers") {
    const PublicKey key{};
    CHECK_THROWS_AS(compute_hit(key.data(), 31, key.data(), 32), Error);
    CHECK_THROWS_AS(compute_hit(key.data(), 32, key.data(), 16), Error);
    CHECK_THROWS_AS(compute_hit(nullptr, 32, key.data(), 32), Error);
}

TEST_CASE("hits pass a uniformity check over 1e5 keys") {
    // Kolmogorov-Smirnov against U(0,1) at the 1% level: D < 1.628/sqrt(n).
    // This exercises the i.i.d. modelling assumption, not SHA-256 itself.
    constexpr int n = 100000;
    const GenerationSignature sig = key_from(77);
    SimRng rng(20180512);
    std::vector<double> u;
    u.reserve(n);
    for (int i = 0; i < n; ++i) {
        const PublicKey key = key_from(rng.next_u64());
        u.push_back(static_cast<double>(compute_hit(key, sig).value) * 0x1.0p-64);
    }
    std::sort(u.begin(), u.end());
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        d = std::max(d, u[static_cast<std::size_t>(i)] - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - u[static_cast<std::size_t>(i)]);
    }
    CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("account target is the clamped triple product") {
    CHECK(account_target(kGenesisBaseTarget, 0.0, 1000).value == 0.0);
    CHECK(account_target(kGenesisBaseTarget, 60.0, 0).value == 0.0);

    // 153722867.3 * 60 * 1000
    CHECK(rel_close(account_target(kGenesisBaseTarget, 60.0, 1000).value, 9.223372038e12, 1e-9));

    // Linear in the balance below the cap.
    const double once = account_target(1e9, 30.0, 5000).value;
    const double twice = account_target(1e9, 30.0, 10000).value;
    CHECK(twice == 2.0 * once);

    // The hard cap 2^64/120 binds for large products.
    CHECK(account_target(1e12, 1e6, 1000000).value == kMaxTargetValue);

    CHECK_THROWS_AS(account_target(-1.0, 60.0, 1000), Error);
    CHECK_THROWS_AS(account_target(1e9, -1.0, 1000), Error);
}

TEST_CASE("forging requires the target to strictly beat the hit") {
    CHECK_FALSE(can_forge(Hit{100}, AccountTarget{100.0}));
    CHECK(can_forge(Hit{100}, AccountTarget{101.0}));
    CHECK(can_forge(Hit{0}, AccountTarget{1e-9}));
    // The cap sits far below the top of the 64-bit hit range.
    CHECK_FALSE(can_forge(Hit{UINT64_MAX}, AccountTarget{kMaxTargetValue}));
}

TEST_CASE("forge wait time inverts the forging condition") {
    CHECK(forge_wait_time(Hit{0}, kGenesisBaseTarget, 1000) == 1);

    // A hit just under base_target * 60 * balance forges at second 60.
    const double rate = kGenesisBaseTarget * 1000.0;
    const auto hit = static_cast<std::uint64_t>(rate * 60.0) - 1;
    CHECK(forge_wait_time(Hit{hit}, kGenesisBaseTarget, 1000) == 60);

    CHECK_THROWS_AS(forge_wait_time(Hit{0}, 0.0, 1000), Error);
    CHECK_THROWS_AS(forge_wait_time(Hit{0}, kGenesisBaseTarget, 0), Error);

    // Hits at or above the cap are unreachable forever.
    const auto unreachable = static_cast<std::uint64_t>(kMaxTargetValue) + 1;
    CHECK_THROWS_AS(forge_wait_time(Hit{unreachable}, kGenesisBaseTarget, 1000), Error);
}

TEST_CASE("forge wait time boundary property on random triples") {
    SimRng rng(97531);
    for (int i = 0; i < 1000; ++i) {
        const double base_target = 1e6 + rng.next_unit() * 1e10;
        const std::uint64_t balance = 1000 + rng.next_below(100000000);
        const std::uint64_t hit = rng.next_below(static_cast<std::uint64_t>(kMaxTargetValue));
        const std::uint64_t s = forge_wait_time(Hit{hit}, base_target, balance);
        CHECK(can_forge(Hit{hit}, account_target(base_target, static_cast<double>(s), balance)));
        if (s > 1) {
            CHECK_FALSE(can_forge(
                Hit{hit}, account_target(base_target, static_cast<double>(s - 1), balance)));
        }
    }
}

TEST_CASE("doubling the balance never lengthens the wait") {
    SimRng rng(1357);
    for (int i = 0; i < 200; ++i) {
        const double base_target = 1e6 + rng.next_unit() * 1e9;
        const std::uint64_t balance = 1000 + rng.next_below(1000000);
        const std::uint64_t hit = rng.next_below(static_cast<std::uint64_t>(kMaxTargetValue));
        CHECK(forge_wait_time(Hit{hit}, base_target, 2 * balance) <=
              forge_wait_time(Hit{hit}, base_target, balance));
    }
}

TEST_CASE("the eligible set at second S is exactly the product rule") {
    // Brute force over random small populations: account k is eligible
    // at second S exactly when T_b * S * B_k > H_k.
    SimRng rng(8080);
    for (int round = 0; round < 50; ++round) {
        const double base_target = 1e6 + rng.next_unit() * 1e9;
        const std::size_t population = 1 + rng.next_below(64);
        std::vector<std::uint64_t> balances(population);
        std::vector<std::uint64_t> hits(population);
        for (std::size_t k = 0; k < population; ++k) {
            balances[k] = 1000 + rng.next_below(1000000);
            hits[k] = rng.next_u64();
        }
        for (std::uint64_t s = 1; s <= 20; ++s) {
            for (std::size_t k = 0; k < population; ++k) {
                const bool formula = base_target * static_cast<double>(s) *
                                         static_cast<double>(balances[k]) >
                                     static_cast<double>(hits[k]);
                const bool decision = can_forge(
                    Hit{hits[k]},
                    AccountTarget{(base_target * static_cast<double>(balances[k])) *
                                  static_cast<double>(s)});
                // Same product, same strict comparison; association is fixed
                // so both sides round identically.
                CHECK(formula == decision);
            }
        }
    }
}

TEST_CASE("a larger stake is eligible whenever a smaller one is") {
    // With equal hits, targets are ordered by the balance factor, so the
    // richer account's per-second eligibility event contains the poorer
    // one's. Brute force over a small grid.
    SimRng rng(606);
    for (int round = 0; round < 100; ++round) {
        const double base_target = 1e6 + rng.next_unit() * 1e9;
        const std::uint64_t b_small = 1000 + rng.next_below(1000000);
        const std::uint64_t b_large = b_small + 1 + rng.next_below(1000000);
        const std::uint64_t hit = rng.next_u64();
        for (std::uint64_t s = 1; s <= 100; s += 7) {
            const bool small_ok = can_forge(
                Hit{hit}, account_target(base_target, static_cast<double>(s), b_small));
            const bool large_ok = can_forge(
                Hit{hit}, account_target(base_target, static_cast<double>(s), b_large));
            if (small_ok)
                CHECK(large_ok);
        }
    }
}

TEST_CASE("retargeting holds still at the 60-second fixed point") {
    BaseTargetState state;
    state.base_target = 2.5e8;
    state.prev_base_target = 2.4e8;
    state.recent_block_times_s = {60.0, 60.0, 60.0};
    const BaseTargetState next = retarget_base(state);
    CHECK(next.base_target == 2.5e8);
    CHECK(next.prev_base_target == 2.5e8);
}

TEST_CASE("slow blocks raise the base target within the ratio bound") {
    BaseTargetState state;
    state.base_target = 2.5e8;
    state.recent_block_times_s = {90.0, 90.0, 90.0};
    const BaseTargetState next = retarget_base(state);
    CHECK(next.base_target > state.base_target);
    CHECK(next.base_target <= state.base_target * state.constants.max_ratio);
}

TEST_CASE("fast blocks lower the base target, never below half") {
    BaseTargetState state;
    state.base_target = 2.5e8;
    state.recent_block_times_s = {10.0, 10.0, 10.0};
    const BaseTargetState gentle = retarget_base(state);
    CHECK(gentle.base_target < state.base_target);
    CHECK(gentle.base_target >= state.base_target / 2.0);

    // An extreme gamma with a wide-open ratio window hits the half floor.
    state.constants.gamma = 8.0;
    state.constants.min_ratio = 0.01;
    const BaseTargetState clamped = retarget_base(state);
    CHECK(clamped.base_target == state.base_target / 2.0);
}

TEST_CASE("retargeting needs exactly three positive intervals") {
    BaseTargetState state;
    state.recent_block_times_s = {60.0, 60.0};
    CHECK_THROWS_AS(retarget_base(state), Error);
    state.recent_block_times_s = {60.0, -1.0, 60.0};
    CHECK_THROWS_AS(retarget_base(state), Error);
}

TEST_CASE("base target never leaves [half, cap] across random retarget runs") {
    SimRng rng(2026);
    BaseTargetState state;
    state.base_target = kGenesisBaseTarget;
    state.prev_base_target = kGenesisBaseTarget;
    for (int i = 0; i < 2000; ++i) {
        state.recent_block_times_s = {1.0 + rng.next_unit() * 200.0,
                                      1.0 + rng.next_unit() * 200.0,
                                      1.0 + rng.next_unit() * 200.0};
        const double before = state.base_target;
        state = retarget_base(state);
        CHECK(state.base_target >= before / 2.0);
        CHECK(state.base_target <= kMaxTargetValue);
        CHECK(state.prev_base_target == before);
    }
}

TEST_CASE("effective balance applies the 1000 NXT and 1440 confirmation rules") {
    const double day = 86400.0;
    ForgingAccount account;

    account.stakes = {StakeEntry{999, -10.0 * day}};
    CHECK(effective_balance(account, 0.0) == 0); // under the threshold

    account.stakes = {StakeEntry{1000, -1440.0 * 60.0}};
    CHECK(effective_balance(account, 0.0) == 1000); // exactly 1440 confirmations

    // 5000 NXT total, of which 2000 arrived minutes ago.
    account.stakes = {StakeEntry{3000, -10.0 * day}, StakeEntry{2000, -300.0}};
    CHECK(effective_balance(account, 0.0) == 3000);
    CHECK(account.stake_nxt() == 5000);

    // One confirmation short of 1440.
    account.stakes = {StakeEntry{5000, -(1439.0 * 60.0 + 59.0)}};
    CHECK(effective_balance(account, 0.0) == 0);

    // The clock moving forward confirms it.
    CHECK(effective_balance(account, 61.0) == 5000);
}

TEST_CASE("nxt complexity reproduces the quoted values") {
    CHECK(rel_close(nxt_complexity(60.0).bits, 0.122, 0.005));
    // MPFR-frozen values.
    CHECK(rel_close(nxt_complexity(60.0).bits, 0.12229159706937462, 1e-12));
    CHECK(rel_close(nxt_complexity(600.0).bits, 0.017783851361743189, 1e-12));
    CHECK(nxt_complexity(2.0).bits == 1.0);
    CHECK_THROWS_AS(nxt_complexity(0.0), Error);
    CHECK_THROWS_AS(nxt_complexity(-60.0), Error);
}
