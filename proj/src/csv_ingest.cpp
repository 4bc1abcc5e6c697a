#include "assort/csv_ingest.hpp"

#include "assort/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace assort {

namespace {

std::string trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return std::string(text);
}

std::string lower(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return text;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

CoupleRecord::Type parse_type(const std::string& cell, const std::optional<Rational>& threshold,
                              std::string_view source, std::size_t line_no) {
    const std::string folded = lower(cell);
    if (folded == "h") {
        return CoupleRecord::Type::high;
    }
    if (folded == "l") {
        return CoupleRecord::Type::low;
    }
    Rational value;
    try {
        value = parse_rational(cell);
    } catch (const ParseError&) {
        throw ParseError(std::string(source) + ":" + std::to_string(line_no) +
                         ": type value '" + cell + "' is neither H/L nor numeric");
    }
    if (!threshold) {
        throw MissingThresholdError(std::string(source) + ":" + std::to_string(line_no) +
                                    ": numeric type value '" + cell +
                                    "' needs --threshold to bin into H/L");
    }
    return value > *threshold ? CoupleRecord::Type::high : CoupleRecord::Type::low;
}

} // namespace

MatchingMatrix ingest_csv_stream(std::istream& input, const std::optional<Rational>& threshold,
                                 std::string_view source_name) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(input, line)) {
        throw ParseError(std::string(source_name) + ": empty input, expected a header row");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }

    std::size_t man_col = SIZE_MAX;
    std::size_t woman_col = SIZE_MAX;
    std::size_t weight_col = SIZE_MAX;
    const std::vector<std::string> header = split_row(line);
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = lower(header[i]);
        if (name == "man_type") {
            man_col = i;
        } else if (name == "woman_type") {
            woman_col = i;
        } else if (name == "weight") {
            weight_col = i;
        }
    }
    if (man_col == SIZE_MAX || woman_col == SIZE_MAX) {
        throw ParseError(std::string(source_name) +
                         ":1: header must name man_type and woman_type columns");
    }

    Rational a = 0, b = 0, c = 0, d = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        const std::vector<std::string> cells = split_row(line);
        const std::size_t needed =
            std::max({man_col, woman_col, weight_col == SIZE_MAX ? 0 : weight_col});
        if (cells.size() <= needed) {
            throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) +
                             ": expected at least " + std::to_string(needed + 1) +
                             " columns, got " + std::to_string(cells.size()));
        }

        CoupleRecord record{parse_type(cells[man_col], threshold, source_name, line_no),
                            parse_type(cells[woman_col], threshold, source_name, line_no),
                            Rational(1)};
        if (weight_col != SIZE_MAX) {
            try {
                record.weight = parse_rational(cells[weight_col]);
            } catch (const ParseError&) {
                throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) +
                                 ": cannot parse weight '" + cells[weight_col] + "'");
            }
            if (record.weight < 0) {
                throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) +
                                 ": weight must be nonnegative, got '" + cells[weight_col] + "'");
            }
        }

        const bool man_high = record.man == CoupleRecord::Type::high;
        const bool woman_high = record.woman == CoupleRecord::Type::high;
        if (man_high && woman_high) {
            a += record.weight;
        } else if (man_high) {
            b += record.weight;
        } else if (woman_high) {
            c += record.weight;
        } else {
            d += record.weight;
        }
    }

    if (a == 0 && b == 0 && c == 0 && d == 0) {
        throw AllZeroError(std::string(source_name) + ": no mass accumulated from any row");
    }
    return {a, b, c, d};
}

MatchingMatrix ingest_csv(const std::string& path, const std::optional<Rational>& threshold) {
    std::ifstream file(path);
    if (!file) {
        throw ParseError("cannot open '" + path + "'");
    }
    return ingest_csv_stream(file, threshold, path);
}

} // namespace assort
