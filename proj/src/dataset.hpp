// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_DATASET_HPP
#define CHAINCX_DATASET_HPP

#include <string>
#include <vector>

#include "pow.hpp"

namespace chaincx {

// Computed values must match a printed expectation to 3 significant
// figures; 0.5% relative tolerance absorbs the printing round-off.
inline constexpr double kGoldenRelativeTolerance = 5e-3;

/// A currency row as shipped in a dataset file. Block times are stored in
/// seconds (sources quoting minutes are converted when the file is
/// authored); hash rates are carried verbatim from the source snapshot.
struct CurrencyRow {
    CurrencyParams params;
    bool has_expected = false;
    double expected_c_mu = 0.0;
    std::string note;
};

struct CurrencyDataset {
    std::vector<CurrencyRow> rows;
    std::string source_date;
    std::string source_note;
};

/// One analyzed currency. `error` is non-empty when the row failed
/// validation or analysis; such rows count as golden failures.
struct ComplexityRow {
    std::string name;
    Protocol protocol = Protocol::PoW;
    double block_time_s = 0.0;
    double hashrate_hs = 0.0;
    double c_mu_bits = 0.0;
    bool has_expected = false;
    double expected_c_mu = 0.0;
    bool golden_pass = true;
    std::string note;
    std::string error;
};

enum struct RenderFormat { Text, Csv, Json };

RenderFormat render_format_from_string(const std::string& text);

/// Parses dataset text: `# key: value` metadata lines, then a CSV header
/// (name, protocol, block_time_s, hashrate_hs, expected_c_mu, note; extra
/// columns are ignored), then one row per currency. Errors carry the
/// offending line and column name.
CurrencyDataset parse_currency_dataset(const std::string& text);

/// Reads and parses a dataset file.
CurrencyDataset load_currency_dataset(const std::string& path);

/// Computes C_mu for every row through the path matching its protocol
/// kind, keeping input order. Per-row failures are reported in the row
/// rather than aborting the batch.
std::vector<ComplexityRow> analyze_dataset(const CurrencyDataset& dataset);

/// True when every row analyzed cleanly and every printed expectation
/// matched.
bool all_rows_pass(const std::vector<ComplexityRow>& rows);

/// Text renders 3-significant-figure scientific notation (4.51e-21); CSV
/// and JSON carry full precision plus the golden pass flag. All numeric
/// output uses '.' decimals regardless of locale.
std::string render_table(const std::vector<ComplexityRow>& rows, RenderFormat format);

/// The PoW table shipped with the library (15 rows, 2018-05-12 snapshot).
const std::string& bundled_table1_text();
/// The PoS/hybrid table (5 rows, same snapshot).
const std::string& bundled_table2_text();

CurrencyDataset bundled_table1();
CurrencyDataset bundled_table2();

/// Locale-independent float formatting helpers shared with report export.
std::string format_full(double v);
std::string format_sci3(double v);

} // namespace chaincx

#endif // CHAINCX_DATASET_HPP
