#include "assort/rational.hpp"

#include "assort/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>

namespace assort {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

bool all_digits(std::string_view text) {
    return !text.empty() &&
           std::all_of(text.begin(), text.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

BigInt parse_integer(std::string_view text, std::string_view original) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!all_digits(text)) {
        throw ParseError("not a rational number: '" + std::string(original) + "'");
    }
    BigInt value{std::string(text)};
    if (negative) {
        value = -value;
    }
    return value;
}

BigInt pow10(std::size_t exponent) {
    BigInt result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (text.find('/', slash + 1) != std::string_view::npos) {
            throw ParseError("not a rational number: '" + std::string(original) + "'");
        }
        const BigInt num = parse_integer(trim(text.substr(0, slash)), original);
        const std::string_view den_text = trim(text.substr(slash + 1));
        if (!all_digits(den_text)) {
            throw ParseError("denominator must be a positive integer: '" + std::string(original) +
                             "'");
        }
        const BigInt den{std::string(den_text)};
        if (den == 0) {
            throw ParseError("zero denominator: '" + std::string(original) + "'");
        }
        return Rational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        bool negative = false;
        std::string_view digits = text;
        if (digits.front() == '+' || digits.front() == '-') {
            negative = digits.front() == '-';
            digits.remove_prefix(1);
            dot -= 1;
        }
        const std::string_view int_part = digits.substr(0, dot);
        const std::string_view frac_part = digits.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty()) ||
            (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw ParseError("not a rational number: '" + std::string(original) + "'");
        }
        BigInt scaled = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
        for (char ch : frac_part) {
            scaled = scaled * 10 + (ch - '0');
        }
        Rational value(scaled, pow10(frac_part.size()));
        if (negative) {
            value = -value;
        }
        return value;
    }

    return Rational(parse_integer(text, original));
}

std::string to_fraction_string(const Rational& value) {
    std::string result = numerator(value).str();
    if (denominator(value) != 1) {
        result += "/" + denominator(value).str();
    }
    return result;
}

std::string to_decimal_string(const Rational& value, unsigned significant) {
    using Float = boost::multiprecision::cpp_bin_float_50;
    return Float(value).str(static_cast<std::streamsize>(significant));
}

} // namespace assort
