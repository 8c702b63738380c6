// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coinage.hpp"
#include "errors.hpp"

namespace chaincx {

namespace {

// 2018-05-12 bitinfocharts.com snapshot; block times converted from the
// source's minutes to seconds, hash rates and printed C_mu carried
// verbatim.
const char* const kTable1Csv =
    "# source_date: 2018-05-12\n"
    "# source_note: PoW network statistics snapshot from bitinfocharts.com\n"
    "name,protocol,block_time_s,hashrate_hs,expected_c_mu,note\n"
    "Bitcoin,pow,600,2.78e19,4.51e-21,\n"
    "Ether,pow,15,2.77e14,1.28e-14,\n"
    "Bit. Cash,pow,600,4.62e18,2.62e-20,\n"
    "BTC Gold,pow,600,3.50e7,1.70e-9,\n"
    "Litecoin,pow,150,2.98e14,1.27e-15,\n"
    "Dash,pow,150,1.80e15,2.19e-16,\n"
    "Monero,pow,120,4.32e8,7.15e-10,\n"
    "Eth. Classic,pow,15,7.70e12,4.17e-13,\n"
    "Zcash,pow,150,4.23e8,5.88e-10,\n"
    "Vertcoin,pow,150,1.02e12,3.18e-13,\n"
    "Dogecoin,pow,60,2.21e14,4.14e-15,\n"
    "Feathercoin,pow,60,5.45e9,1.21e-10,\n"
    "BlackCoin,pow,60,9.61e13,9.33e-15,also listed in the PoS/hybrid table with different figures\n"
    "Namecoin,pow,600,2.20e19,5.68e-21,\n"
    "Auroracoin,pow,60,1.37e15,7.00e-16,\n";

const char* const kTable2Csv =
    "# source_date: 2018-05-12\n"
    "# source_note: PoS/hybrid network statistics snapshot from bitinfocharts.com\n"
    "name,protocol,block_time_s,hashrate_hs,expected_c_mu,note\n"
    "NXT,pos,60,1.0,0.122,hashrate is the one-target-evaluation-per-second convention; not a measured hash rate\n"
    "Reddcoin,pos,60,1.30e10,5.26e-11,PoSV; represented at parameter level only\n"
    "Peercoin,hybrid,600,3.32e16,3.29e-18,\n"
    "BlackCoin,pos,60,1.06e14,8.52e-15,also listed in the PoW table with different figures\n"
    "NovaCoin,hybrid,600,4.42e11,1.86e-13,\n";

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_double(const std::string& text, std::size_t line_no, const std::string& column) {
    const std::string t = trim(text);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw_parse("line " + std::to_string(line_no) + ", column '" + column +
                    "': cannot parse number '" + text + "'");
    return value;
}

} // namespace

RenderFormat render_format_from_string(const std::string& text) {
    if (text == "text") return RenderFormat::Text;
    if (text == "csv") return RenderFormat::Csv;
    if (text == "json") return RenderFormat::Json;
    throw_parse("unknown format '" + text + "' (expected text, csv, or json)");
}

std::string format_full(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, ptr);
}

std::string format_sci3(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 2);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, ptr);
}

CurrencyDataset parse_currency_dataset(const std::string& text) {
    CurrencyDataset dataset;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;

    std::map<std::string, std::size_t> columns;
    std::set<std::string> seen_names;
    bool have_header = false;

    while (std::getline(stream, line)) {
        ++line_no;
        const std::string trimmed = trim(line);
        if (trimmed.empty())
            continue;
        if (trimmed.front() == '#') {
            const std::string body = trim(trimmed.substr(1));
            const auto colon = body.find(':');
            if (colon != std::string::npos) {
                const std::string key = trim(body.substr(0, colon));
                const std::string value = trim(body.substr(colon + 1));
                if (key == "source_date")
                    dataset.source_date = value;
                else if (key == "source_note")
                    dataset.source_note = value;
            }
            continue;
        }
        if (!have_header) {
            const std::vector<std::string> names = split_fields(trimmed);
            for (std::size_t i = 0; i < names.size(); ++i)
                columns[names[i]] = i;
            for (const char* required : {"name", "protocol", "block_time_s", "hashrate_hs"}) {
                if (columns.find(required) == columns.end())
                    throw_parse("line " + std::to_string(line_no) + ": header misses column '" +
                                std::string(required) + "'");
            }
            have_header = true;
            continue;
        }

        const std::vector<std::string> fields = split_fields(trimmed);
        auto field = [&](const char* column) -> std::string {
            const auto it = columns.find(column);
            if (it == columns.end() || it->second >= fields.size())
                return "";
            return fields[it->second];
        };

        CurrencyRow row;
        row.params.name = field("name");
        if (row.params.name.empty())
            throw_parse("line " + std::to_string(line_no) + ", column 'name': empty currency name");
        if (!seen_names.insert(row.params.name).second)
            throw_validation("line " + std::to_string(line_no) + ": duplicate currency '" +
                             row.params.name + "' within one dataset");
        row.params.protocol = protocol_from_string(field("protocol"));
        row.params.block_time_s = parse_double(field("block_time_s"), line_no, "block_time_s");
        row.params.hashrate_hs = parse_double(field("hashrate_hs"), line_no, "hashrate_hs");
        try {
            validate(row.params);
        } catch (const Error& e) {
            throw_validation("line " + std::to_string(line_no) + ": " + e.what());
        }

        const std::string expected = field("expected_c_mu");
        if (!expected.empty()) {
            row.has_expected = true;
            row.expected_c_mu = parse_double(expected, line_no, "expected_c_mu");
        }
        row.note = field("note");
        dataset.rows.push_back(std::move(row));
    }

    if (!have_header)
        throw_parse("dataset is empty: no header line found");
    return dataset;
}

CurrencyDataset load_currency_dataset(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorCode::Io, "cannot open dataset file '" + path + "'");
    std::ostringstream content;
    content << file.rdbuf();
    return parse_currency_dataset(content.str());
}

std::vector<ComplexityRow> analyze_dataset(const CurrencyDataset& dataset) {
    std::vector<ComplexityRow> rows;
    rows.reserve(dataset.rows.size());
    for (const CurrencyRow& input : dataset.rows) {
        ComplexityRow row;
        row.name = input.params.name;
        row.protocol = input.params.protocol;
        row.block_time_s = input.params.block_time_s;
        row.hashrate_hs = input.params.hashrate_hs;
        row.has_expected = input.has_expected;
        row.expected_c_mu = input.expected_c_mu;
        row.note = input.note;
        try {
            row.c_mu_bits = input.params.protocol == Protocol::PoW
                                ? pow_complexity(input.params).bits
                                : hybrid_complexity(input.params).bits;
            if (row.has_expected) {
                const double rel = std::abs(row.c_mu_bits - row.expected_c_mu) /
                                   std::abs(row.expected_c_mu);
                row.golden_pass = rel <= kGoldenRelativeTolerance;
            }
        } catch (const Error& e) {
            row.c_mu_bits = std::nan("");
            row.golden_pass = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool all_rows_pass(const std::vector<ComplexityRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ComplexityRow& row) {
        return row.error.empty() && row.golden_pass;
    });
}

namespace {

std::string render_text(const std::vector<ComplexityRow>& rows) {
    std::ostringstream out;
    out << "currency            protocol  block_time_s  hashrate_hs   c_mu_bits  expected    match\n";
    for (const ComplexityRow& row : rows) {
        std::string name = row.name;
        if (name.size() < 19)
            name.append(19 - name.size(), ' ');
        std::string protocol = protocol_name(row.protocol);
        if (protocol.size() < 9)
            protocol.append(9 - protocol.size(), ' ');
        std::string block_time = format_full(row.block_time_s);
        if (block_time.size() < 13)
            block_time.append(13 - block_time.size(), ' ');
        std::string hashrate = format_sci3(row.hashrate_hs);
        if (hashrate.size() < 13)
            hashrate.append(13 - hashrate.size(), ' ');
        std::string c_mu = row.error.empty() ? format_sci3(row.c_mu_bits) : "error";
        if (c_mu.size() < 10)
            c_mu.append(10 - c_mu.size(), ' ');
        std::string expected = row.has_expected ? format_sci3(row.expected_c_mu) : "-";
        if (expected.size() < 11)
            expected.append(11 - expected.size(), ' ');
        std::string match = !row.error.empty() ? "ERROR"
                            : !row.has_expected ? "-"
                            : row.golden_pass   ? "ok"
                                                : "MISMATCH";
        out << name << ' ' << protocol << ' ' << block_time << ' ' << hashrate << ' ' << c_mu
            << ' ' << expected << ' ' << match;
        if (!row.note.empty())
            out << "  # " << row.note;
        if (!row.error.empty())
            out << "  # " << row.error;
        out << '\n';
    }
    return out.str();
}

std::string render_csv(const std::vector<ComplexityRow>& rows) {
    std::ostringstream out;
    out << "name,protocol,block_time_s,hashrate_hs,expected_c_mu,note,c_mu_bits,golden_pass,error\n";
    for (const ComplexityRow& row : rows) {
        out << row.name << ',' << protocol_name(row.protocol) << ','
            << format_full(row.block_time_s) << ',' << format_full(row.hashrate_hs) << ','
            << (row.has_expected ? format_full(row.expected_c_mu) : "") << ',' << row.note << ','
            << (row.error.empty() ? format_full(row.c_mu_bits) : "") << ','
            << (row.golden_pass && row.error.empty() ? "1" : "0") << ',' << row.error << '\n';
    }
    return out.str();
}

std::string render_json(const std::vector<ComplexityRow>& rows) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    std::size_t golden_rows = 0;
    std::size_t golden_failures = 0;
    for (const ComplexityRow& row : rows) {
        nlohmann::json j;
        j["name"] = row.name;
        j["protocol"] = protocol_name(row.protocol);
        j["block_time_s"] = row.block_time_s;
        j["hashrate_hs"] = row.hashrate_hs;
        if (row.error.empty())
            j["c_mu_bits"] = row.c_mu_bits;
        else
            j["error"] = row.error;
        if (row.has_expected) {
            ++golden_rows;
            j["expected_c_mu"] = row.expected_c_mu;
            j["golden_pass"] = row.golden_pass && row.error.empty();
            if (!(row.golden_pass && row.error.empty()))
                ++golden_failures;
        }
        if (!row.note.empty())
            j["note"] = row.note;
        doc["rows"].push_back(std::move(j));
    }
    doc["summary"] = {{"rows", rows.size()},
                      {"golden_rows", golden_rows},
                      {"golden_failures", golden_failures},
                      {"all_pass", all_rows_pass(rows)}};
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_table(const std::vector<ComplexityRow>& rows, RenderFormat format) {
    if (rows.empty())
        throw_validation("render_table: no rows to render");
    switch (format) {
    case RenderFormat::Text: return render_text(rows);
    case RenderFormat::Csv: return render_csv(rows);
    case RenderFormat::Json: return render_json(rows);
    }
    throw_invalid("render_table: unknown format");
}

const std::string& bundled_table1_text() {
    static const std::string text(kTable1Csv);
    return text;
}

const std::string& bundled_table2_text() {
    static const std::string text(kTable2Csv);
    return text;
}

CurrencyDataset bundled_table1() { return parse_currency_dataset(bundled_table1_text()); }

CurrencyDataset bundled_table2() { return parse_currency_dataset(bundled_table2_text()); }

} // namespace chaincx
