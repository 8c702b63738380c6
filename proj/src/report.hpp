// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_REPORT_HPP
#define CHAINCX_REPORT_HPP

#include <string>

#include "dataset.hpp"
#include "sim.hpp"

namespace chaincx {

/// Serializes a simulation report. JSON carries every measured field at
/// full precision; CSV lists one block per row under `# key: value`
/// summary comments; text is a human-readable summary.
std::string render_report(const SimulationReport& report, RenderFormat format);

} // namespace chaincx

#endif // CHAINCX_REPORT_HPP
