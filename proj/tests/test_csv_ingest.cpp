#include "assort/csv_ingest.hpp"

#include "assort/errors.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

#include "test_util.hpp"

using namespace assort;
using testutil::mm;
using testutil::R;

namespace {

MatchingMatrix ingest(const std::string& text, std::optional<Rational> threshold = {}) {
    std::istringstream in(text);
    return ingest_csv_stream(in, threshold, "test.csv");
}

} // namespace

TEST_CASE("one row per cell accumulates unit weights") {
    CHECK(ingest("man_type,woman_type\nH,H\nH,L\nL,H\nL,L\n") == mm(1, 1, 1, 1));
}

TEST_CASE("weights accumulate into the cells") {
    CHECK(ingest("man_type,woman_type,weight\n"
                 "H,H,1\n"
                 "H,L,1\n"
                 "L,H,3\n"
                 "L,L,2\n") == mm(1, 1, 3, 2));
}

TEST_CASE("decimal weights are parsed exactly and rows may repeat") {
    CHECK(ingest("man_type,woman_type,weight\n"
                 "H,H,1\n"
                 "H,L,1\n"
                 "L,H,1\n"
                 "L,H,1.5\n"
                 "L,H,0.5\n"
                 "L,L,1\n"
                 "L,L,1\n") == mm(1, 1, 3, 2));
    CHECK(ingest("man_type,woman_type,weight\nH,H,0.1\nL,L,0.2\n") ==
          MatchingMatrix(R("1/10"), 0, 0, R("1/5")));
}

TEST_CASE("labels are case-insensitive and padding is ignored") {
    CHECK(ingest("man_type,woman_type\n h , H \nl,L\n") == mm(1, 0, 0, 1));
    CHECK(ingest("MAN_TYPE,Woman_Type\nH,h\nL,l\n") == mm(1, 0, 0, 1));
}

TEST_CASE("column order does not matter and extra columns are ignored") {
    CHECK(ingest("id,woman_type,weight,man_type\n1,L,2,H\n2,H,3,L\n") == mm(0, 2, 3, 0));
}

TEST_CASE("row permutation yields the identical matrix") {
    const MatchingMatrix forward = ingest("man_type,woman_type,weight\nH,H,1\nH,L,2\nL,L,0.5\n");
    const MatchingMatrix shuffled = ingest("man_type,woman_type,weight\nL,L,0.5\nH,L,2\nH,H,1\n");
    CHECK(forward == shuffled);
}

TEST_CASE("numeric type columns are binned against the threshold") {
    // High iff value > threshold.
    const MatchingMatrix m = ingest("man_type,woman_type\n60000,45000\n30000,52000\n", R("50000"));
    CHECK(m == mm(0, 1, 1, 0));

    // Boundary value is low, not high.
    CHECK(ingest("man_type,woman_type\n50000,50001\n", R("50000")) == mm(0, 0, 1, 0));

    // Mixed categorical and numeric cells.
    CHECK(ingest("man_type,woman_type\nH,70000\nL,10000\n", R("50000")) == mm(1, 0, 0, 1));
}

TEST_CASE("numeric values without a threshold are rejected") {
    CHECK_THROWS_AS(ingest("man_type,woman_type\n60000,45000\n"), MissingThresholdError);
}

TEST_CASE("parse errors carry the line number") {
    CHECK_THROWS_WITH_AS(ingest("man_type,woman_type\nH,H\nX,L\n"),
                         doctest::Contains("test.csv:3"), ParseError);
    CHECK_THROWS_WITH_AS(ingest("man_type,woman_type,weight\nH,H,heavy\n"),
                         doctest::Contains("test.csv:2"), ParseError);
    CHECK_THROWS_WITH_AS(ingest("man_type,woman_type,weight\nH,H,-1\n"),
                         doctest::Contains("test.csv:2"), ParseError);
    CHECK_THROWS_WITH_AS(ingest("man_type,woman_type\nH\n"), doctest::Contains("test.csv:2"),
                         ParseError);
}

TEST_CASE("structural errors") {
    CHECK_THROWS_AS(ingest(""), ParseError);
    CHECK_THROWS_AS(ingest("man,woman\nH,H\n"), ParseError);
    CHECK_THROWS_AS(ingest("man_type,woman_type,weight\nH,H,0\nL,L,0\n"), AllZeroError);
    CHECK_THROWS_AS(ingest_csv("/nonexistent/input.csv"), ParseError);
}

TEST_CASE("blank lines and trailing carriage returns are tolerated") {
    CHECK(ingest("man_type,woman_type\r\nH,H\r\n\r\nL,L\r\n") == mm(1, 0, 0, 1));
}
