// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace chaincx {

namespace {

std::string render_report_json(const SimulationReport& report) {
    nlohmann::json doc;
    doc["kind"] = report.kind;
    doc["seed"] = report.seed;
    doc["duration_s"] = report.duration_s;
    doc["block_count"] = report.block_count();
    doc["fork_events"] = report.fork_events;
    if (report.block_count() > 0)
        doc["mean_interval_s"] = report.mean_interval_s();

    doc["state_occupancy_s"] = nlohmann::json::object();
    for (const auto& [state, seconds] : report.state_occupancy_s)
        doc["state_occupancy_s"][state] = seconds;

    doc["wins_per_account"] = nlohmann::json::object();
    for (const auto& [account, wins] : report.wins_per_account)
        doc["wins_per_account"][account] = wins;

    doc["block_intervals_s"] = report.block_intervals_s;
    doc["winners"] = report.winners;

    doc["blocks"] = nlohmann::json::array();
    for (const BlockRecord& block : report.blocks) {
        doc["blocks"].push_back({{"height", block.height},
                                 {"time_s", block.time_s},
                                 {"interval_s", block.interval_s},
                                 {"winner", block.winner},
                                 {"base_target", block.base_target},
                                 {"candidates", block.candidate_count},
                                 {"tx_count", block.tx_count}});
    }
    return doc.dump(2) + "\n";
}

std::string render_report_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "# kind: " << report.kind << "\n";
    out << "# seed: " << report.seed << "\n";
    out << "# duration_s: " << format_full(report.duration_s) << "\n";
    out << "# block_count: " << report.block_count() << "\n";
    out << "# fork_events: " << report.fork_events << "\n";
    for (const auto& [state, seconds] : report.state_occupancy_s)
        out << "# occupancy_s " << state << ": " << format_full(seconds) << "\n";
    for (const auto& [account, wins] : report.wins_per_account)
        out << "# wins " << account << ": " << wins << "\n";
    out << "height,time_s,interval_s,winner,base_target,candidates,tx_count\n";
    for (const BlockRecord& block : report.blocks) {
        out << block.height << ',' << format_full(block.time_s) << ','
            << format_full(block.interval_s) << ',' << block.winner << ','
            << format_full(block.base_target) << ',' << block.candidate_count << ','
            << block.tx_count << "\n";
    }
    return out.str();
}

std::string render_report_text(const SimulationReport& report) {
    std::ostringstream out;
    out << report.kind << " simulation, seed " << report.seed << ", "
        << format_full(report.duration_s) << " s simulated\n";
    out << "  blocks produced:  " << report.block_count() << "\n";
    if (report.block_count() > 0)
        out << "  mean interval:    " << format_full(report.mean_interval_s()) << " s\n";
    out << "  fork events:      " << report.fork_events << "\n";
    out << "  state occupancy:\n";
    for (const auto& [state, seconds] : report.state_occupancy_s)
        out << "    " << state << ": " << format_full(seconds) << " s\n";
    out << "  wins per account:\n";
    for (const auto& [account, wins] : report.wins_per_account)
        out << "    " << account << ": " << wins << "\n";
    return out.str();
}

} // namespace

std::string render_report(const SimulationReport& report, RenderFormat format) {
    switch (format) {
    case RenderFormat::Text: return render_report_text(report);
    case RenderFormat::Csv: return render_report_csv(report);
    case RenderFormat::Json: return render_report_json(report);
    }
    throw_invalid("render_report: unknown format");
}

} // namespace chaincx
