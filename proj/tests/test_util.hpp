#pragma once

#include "assort/matrix.hpp"
#include "assort/rational.hpp"

#include <string_view>

namespace testutil {

inline assort::Rational R(std::string_view text) {
    return assort::parse_rational(text);
}

inline assort::MatchingMatrix mm(int a, int b, int c, int d) {
    return {assort::Rational(a), assort::Rational(b), assort::Rational(c), assort::Rational(d)};
}

inline assort::MatchingMatrix mm(std::string_view a, std::string_view b, std::string_view c,
                                 std::string_view d) {
    return {R(a), R(b), R(c), R(d)};
}

} // namespace testutil
