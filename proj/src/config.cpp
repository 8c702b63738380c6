// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace chaincx {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw_parse("config is not valid JSON");
    if (!doc.is_object())
        throw_parse("config must be a JSON object");
    return doc;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool found = false;
        for (const char* k : known) {
            if (key == k) {
                found = true;
                break;
            }
        }
        if (!found)
            throw_parse(where + ": unknown key '" + key + "'");
    }
}

double require_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw_parse(where + ": missing '" + std::string(key) + "'");
    if (!obj[key].is_number())
        throw_parse(where + ": '" + std::string(key) + "' must be a number");
    return obj[key].get<double>();
}

double optional_number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key))
        return fallback;
    return obj[key].get<double>();
}

std::uint8_t hex_nibble(char c, const std::string& where) {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw_parse(where + ": invalid hex digit");
}

PublicKey parse_public_key_hex(const std::string& hex, const std::string& where) {
    if (hex.size() != 64)
        throw_parse(where + ": public_key_hex must be 64 hex digits");
    PublicKey key{};
    for (std::size_t i = 0; i < 32; ++i)
        key[i] = static_cast<std::uint8_t>((hex_nibble(hex[2 * i], where) << 4) |
                                           hex_nibble(hex[2 * i + 1], where));
    return key;
}

std::uint64_t require_whole_nxt(const json& obj, const char* key, const std::string& where) {
    const double value = require_number(obj, key, where);
    if (value < 0.0 || value != std::floor(value))
        throw_validation(where + ": '" + std::string(key) + "' must be a whole NXT amount");
    return static_cast<std::uint64_t>(value);
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorCode::Io, "cannot open file '" + path + "'");
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

PowSimConfig parse_pow_config(const std::string& json_text) {
    const json doc = parse_json(json_text);
    reject_unknown_keys(doc, {"name", "hashrate_hs", "block_time_s", "tick_success_probability"},
                        "pow config");

    PowSimConfig config;
    if (doc.contains("tick_success_probability")) {
        if (doc.contains("hashrate_hs") || doc.contains("block_time_s"))
            throw_parse("pow config: give either tick_success_probability or currency parameters");
        config.tick_success_probability = doc["tick_success_probability"].get<double>();
        config.has_explicit_probability = true;
        return config;
    }
    config.params.name = doc.value("name", "pow");
    config.params.protocol = Protocol::PoW;
    config.params.hashrate_hs = require_number(doc, "hashrate_hs", "pow config");
    config.params.block_time_s = require_number(doc, "block_time_s", "pow config");
    return config;
}

NxtSimConfig parse_nxt_config(const std::string& json_text) {
    const json doc = parse_json(json_text);
    reject_unknown_keys(doc, {"accounts", "constants", "genesis_base_target"}, "nxt config");
    if (!doc.contains("accounts") || !doc["accounts"].is_array())
        throw_parse("nxt config: 'accounts' array required");

    NxtSimConfig config;
    std::size_t index = 0;
    for (const json& entry : doc["accounts"]) {
        const std::string where = "nxt config account " + std::to_string(index);
        if (!entry.is_object())
            throw_parse(where + ": must be an object");
        reject_unknown_keys(entry, {"name", "stake_nxt", "stakes", "public_key_hex"}, where);

        ForgingAccount account;
        account.name = entry.value("name", "");
        if (entry.contains("public_key_hex"))
            account.public_key = parse_public_key_hex(entry["public_key_hex"].get<std::string>(), where);

        if (entry.contains("stake_nxt")) {
            // Shorthand: one long-confirmed stake entry.
            account.stakes.push_back(
                StakeEntry{require_whole_nxt(entry, "stake_nxt", where), -2.0 * 86400.0});
        } else if (entry.contains("stakes") && entry["stakes"].is_array()) {
            for (const json& stake : entry["stakes"]) {
                reject_unknown_keys(stake, {"amount_nxt", "received_at_s"}, where);
                account.stakes.push_back(
                    StakeEntry{require_whole_nxt(stake, "amount_nxt", where),
                               optional_number(stake, "received_at_s", -2.0 * 86400.0)});
            }
        } else {
            throw_parse(where + ": needs 'stake_nxt' or a 'stakes' array");
        }
        config.accounts.push_back(std::move(account));
        ++index;
    }

    if (doc.contains("constants")) {
        const json& c = doc["constants"];
        reject_unknown_keys(c, {"max_ratio", "min_ratio", "gamma"}, "nxt config constants");
        config.constants.max_ratio = optional_number(c, "max_ratio", config.constants.max_ratio);
        config.constants.min_ratio = optional_number(c, "min_ratio", config.constants.min_ratio);
        config.constants.gamma = optional_number(c, "gamma", config.constants.gamma);
    }
    config.genesis_base_target =
        optional_number(doc, "genesis_base_target", config.genesis_base_target);
    return config;
}

CoinageSimConfig parse_coinage_config(const std::string& json_text) {
    const json doc = parse_json(json_text);
    reject_unknown_keys(doc, {"outputs", "kernel_scale_per_coinday"}, "coinage config");
    if (!doc.contains("outputs") || !doc["outputs"].is_array())
        throw_parse("coinage config: 'outputs' array required");

    CoinageSimConfig config;
    std::size_t index = 0;
    for (const json& entry : doc["outputs"]) {
        const std::string where = "coinage config output " + std::to_string(index);
        if (!entry.is_object())
            throw_parse(where + ": must be an object");
        reject_unknown_keys(entry, {"owner", "amount", "received_at_s"}, where);
        WalletOutput output;
        output.owner = entry.value("owner", "");
        output.amount = require_number(entry, "amount", where);
        output.received_at_s = optional_number(entry, "received_at_s", 0.0);
        config.outputs.push_back(std::move(output));
        ++index;
    }
    config.kernel_scale_per_coinday =
        optional_number(doc, "kernel_scale_per_coinday", config.kernel_scale_per_coinday);
    return config;
}

} // namespace chaincx
