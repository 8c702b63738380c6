// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "pow.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace chaincx {

namespace {

using boost::multiprecision::cpp_int;

cpp_int max_target_int() {
    // 0xFFFF shifted to byte positions 4..5 of the 32-byte big-endian value.
    return cpp_int(0xFFFF) << 208;
}

cpp_int to_cpp_int(const HashTarget& t) {
    cpp_int v = 0;
    for (std::uint8_t b : t.bytes_be)
        v = (v << 8) | b;
    return v;
}

HashTarget from_cpp_int(cpp_int v) {
    HashTarget t;
    for (int i = 31; i >= 0; --i) {
        t.bytes_be[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v & 0xFF);
        v >>= 8;
    }
    return t;
}

} // namespace

const char* protocol_name(Protocol p) {
    switch (p) {
    case Protocol::PoW: return "pow";
    case Protocol::PoS: return "pos";
    case Protocol::Hybrid: return "hybrid";
    }
    return "unknown";
}

Protocol protocol_from_string(const std::string& text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "pow") return Protocol::PoW;
    if (lower == "pos") return Protocol::PoS;
    if (lower == "hybrid") return Protocol::Hybrid;
    throw_parse("unknown protocol '" + text + "' (expected pow, pos, or hybrid)");
}

void validate(const CurrencyParams& params) {
    if (!std::isfinite(params.block_time_s) || params.block_time_s <= 0.0)
        throw_domain(params.name + ": block_time_s must be positive");
    if (!std::isfinite(params.hashrate_hs) || params.hashrate_hs <= 0.0)
        throw_domain(params.name + ": hashrate_hs must be positive");
    if (params.hashrate_hs * params.block_time_s < 1.0)
        throw_domain(params.name + ": fewer than one expected trial per block");
}

std::string HashTarget::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string hex;
    hex.reserve(64);
    for (std::uint8_t b : bytes_be) {
        hex.push_back(digits[b >> 4]);
        hex.push_back(digits[b & 0x0F]);
    }
    return hex;
}

HashTarget max_target() {
    return from_cpp_int(max_target_int());
}

double broadcast_probability(const CurrencyParams& params) {
    validate(params);
    // Products reach ~1.7e22 for Bitcoin; keep the division in extended
    // precision before narrowing.
    const long double trials =
        static_cast<long double>(params.hashrate_hs) * static_cast<long double>(params.block_time_s);
    return static_cast<double>(1.0L / trials);
}

ComplexityValue pow_complexity(const CurrencyParams& params) {
    return binary_shannon_entropy(broadcast_probability(params));
}

HashTarget difficulty_to_target(double difficulty) {
    if (!std::isfinite(difficulty) || difficulty < 1.0)
        throw_domain("difficulty_to_target: difficulty must be >= 1");

    // Every finite double is mantissa * 2^exponent exactly, so the floor
    // division can be carried out in exact integer arithmetic.
    int exponent = 0;
    const double mantissa_d = std::frexp(difficulty, &exponent); // in [0.5, 1)
    const cpp_int mantissa = cpp_int(std::ldexp(mantissa_d, 53));
    exponent -= 53;

    cpp_int numerator = max_target_int();
    cpp_int denominator = mantissa;
    if (exponent >= 0)
        denominator <<= exponent;
    else
        numerator <<= -exponent;
    return from_cpp_int(numerator / denominator);
}

double expected_hashes_per_block(double difficulty) {
    const HashTarget target = difficulty_to_target(difficulty);
    const cpp_int t = to_cpp_int(target);
    if (t == 0)
        throw_domain("expected_hashes_per_block: difficulty collapses the target to zero");
    const long double space = std::ldexp(1.0L, 256); // 2^256, exact
    return static_cast<double>(space / t.convert_to<long double>());
}

} // namespace chaincx
