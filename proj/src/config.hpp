// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_CONFIG_HPP
#define CHAINCX_CONFIG_HPP

#include <string>

#include "sim.hpp"

namespace chaincx {

/// Scenario files are JSON. Unknown keys are rejected to catch typos.
///
/// pow:     {"hashrate_hs": H, "block_time_s": T} or
///          {"tick_success_probability": p}
/// nxt:     {"accounts": [{"name"?, "stake_nxt" or
///            "stakes": [{"amount_nxt", "received_at_s"?}], "public_key_hex"?}],
///           "constants"?: {"max_ratio"?, "min_ratio"?, "gamma"?},
///           "genesis_base_target"?}
/// coinage: {"outputs": [{"owner"?, "amount", "received_at_s"?}],
///           "kernel_scale_per_coinday"?}
PowSimConfig parse_pow_config(const std::string& json_text);
NxtSimConfig parse_nxt_config(const std::string& json_text);
CoinageSimConfig parse_coinage_config(const std::string& json_text);

std::string read_text_file(const std::string& path);

} // namespace chaincx

#endif // CHAINCX_CONFIG_HPP
