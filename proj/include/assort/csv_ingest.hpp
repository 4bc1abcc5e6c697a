#pragma once

#include "assort/matrix.hpp"
#include "assort/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace assort {

/// One couple-level observation. Types come either from categorical H/L
/// labels (case-insensitive) or from numeric values binned against a
/// threshold (high iff value > threshold).
struct CoupleRecord {
    enum class Type { high, low };
    Type man;
    Type woman;
    Rational weight;  // nonnegative; defaults to 1 when the column is absent
};

/// Accumulates couple records from a CSV file with header columns
/// man_type, woman_type and optional weight into a matching matrix:
/// a += weight for (H,H) rows, b for (H,L), c for (L,H), d for (L,L).
///
/// Throws ParseError (with line number) on malformed rows,
/// MissingThresholdError when a numeric type column is used without a
/// threshold, and AllZeroError when no mass accumulates.
MatchingMatrix ingest_csv(const std::string& path, const std::optional<Rational>& threshold = {});

MatchingMatrix ingest_csv_stream(std::istream& input, const std::optional<Rational>& threshold,
                                 std::string_view source_name = "<stream>");

} // namespace assort
