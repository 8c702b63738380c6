// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

// Command-line front end. Deliberately built against the C API alone,
// exercising the same surface other embedders use.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chaincx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGoldenMismatch = 1;
constexpr int kExitInputError = 2;

chaincx_format parse_format(const std::string& name) {
    if (name == "csv") return CHAINCX_FORMAT_CSV;
    if (name == "json") return CHAINCX_FORMAT_JSON;
    return CHAINCX_FORMAT_TEXT;
}

int fail(chaincx_status status) {
    std::cerr << "error: " << chaincx_status_name(status) << ": " << chaincx_last_error()
              << "\n";
    return kExitInputError;
}

bool write_output(const std::string& path, const char* document) {
    if (path.empty()) {
        std::cout << document;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    file << document;
    return true;
}

int run_analysis(chaincx_dataset* dataset, const std::string& format, bool golden,
                 const std::string& output_path) {
    chaincx_analysis* analysis = nullptr;
    chaincx_status status = chaincx_dataset_analyze(dataset, &analysis);
    chaincx_dataset_free(dataset);
    if (status != CHAINCX_OK)
        return fail(status);

    char* document = nullptr;
    status = chaincx_analysis_render(analysis, parse_format(format), &document);
    if (status != CHAINCX_OK) {
        chaincx_analysis_free(analysis);
        return fail(status);
    }
    const bool written = write_output(output_path, document);
    chaincx_string_free(document);

    int exit_code = kExitOk;
    if (!written) {
        exit_code = kExitInputError;
    } else if (!chaincx_analysis_all_pass(analysis)) {
        // Any golden mismatch (or analysis error) is a reportable failure.
        exit_code = kExitGoldenMismatch;
    } else if (golden) {
        // Strict golden mode additionally demands an expectation per row.
        const size_t rows = chaincx_analysis_row_count(analysis);
        for (size_t i = 0; i < rows; ++i) {
            chaincx_analysis_row_view view;
            if (chaincx_analysis_row(analysis, i, &view) != CHAINCX_OK || !view.has_expected) {
                std::cerr << "golden: row " << i << " carries no expected value\n";
                exit_code = kExitGoldenMismatch;
            }
        }
    }
    chaincx_analysis_free(analysis);
    return exit_code;
}

std::string read_file_or_exit(const std::string& path, int& error_out) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "'\n";
        error_out = kExitInputError;
        return "";
    }
    std::ostringstream content;
    content << file.rdbuf();
    error_out = kExitOk;
    return content.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaincx — statistical complexity of PoW, PoS, and hybrid consensus"};
    app.require_subcommand(1);

    std::string dataset_path;
    std::string format = "text";
    std::string output_path;
    bool golden = false;

    CLI::App* analyze = app.add_subcommand("analyze", "compute C_mu for a currency dataset");
    analyze->add_option("dataset", dataset_path, "dataset CSV file")->required();
    analyze->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    analyze->add_flag("--golden", golden, "require a printed expectation on every row");
    analyze->add_option("--output", output_path, "write the document here instead of stdout");

    CLI::App* table1 = app.add_subcommand("table1", "run the bundled PoW golden dataset");
    table1->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table1->add_option("--output", output_path, "write the document here instead of stdout");

    CLI::App* table2 = app.add_subcommand("table2", "run the bundled PoS/hybrid golden dataset");
    table2->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table2->add_option("--output", output_path, "write the document here instead of stdout");

    CLI::App* simulate = app.add_subcommand("simulate", "run a seeded consensus simulation");
    simulate->require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    double duration = 0.0;
    std::string report_path;

    for (const char* kind : {"pow", "nxt", "coinage"}) {
        CLI::App* sub = simulate->add_subcommand(kind);
        sub->add_option("--config", config_path, "scenario JSON file")->required();
        sub->add_option("--seed", seed, "run seed")->required();
        sub->add_option("--duration", duration, "simulated seconds")->required();
        sub->add_option("--report", report_path, "write the report here instead of stdout");
        sub->add_option("--format", format, "text, csv, or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (analyze->parsed()) {
        chaincx_dataset* dataset = nullptr;
        const chaincx_status status = chaincx_dataset_load(dataset_path.c_str(), &dataset);
        if (status != CHAINCX_OK)
            return fail(status);
        return run_analysis(dataset, format, golden, output_path);
    }

    if (table1->parsed() || table2->parsed()) {
        chaincx_dataset* dataset = nullptr;
        const chaincx_status status = chaincx_dataset_bundled(table1->parsed() ? 1 : 2, &dataset);
        if (status != CHAINCX_OK)
            return fail(status);
        // The bundled tables are golden suites: every row carries the
        // printed value and must reproduce it.
        return run_analysis(dataset, format, true, output_path);
    }

    if (simulate->parsed()) {
        int read_error = kExitOk;
        const std::string config = read_file_or_exit(config_path, read_error);
        if (read_error != kExitOk)
            return read_error;

        chaincx_report* report = nullptr;
        chaincx_status status = CHAINCX_ERR_INTERNAL;
        if (simulate->get_subcommand("pow")->parsed())
            status = chaincx_simulate_pow(config.c_str(), seed, duration, &report);
        else if (simulate->get_subcommand("nxt")->parsed())
            status = chaincx_simulate_nxt(config.c_str(), seed, duration, &report);
        else if (simulate->get_subcommand("coinage")->parsed())
            status = chaincx_simulate_coinage(config.c_str(), seed, duration, &report);
        if (status != CHAINCX_OK)
            return fail(status);

        char* document = nullptr;
        status = chaincx_report_render(report, parse_format(format), &document);
        if (status != CHAINCX_OK) {
            chaincx_report_free(report);
            return fail(status);
        }
        const bool written = write_output(report_path, document);
        chaincx_string_free(document);
        chaincx_report_free(report);
        return written ? kExitOk : kExitInputError;
    }

    return kExitInputError;
}
