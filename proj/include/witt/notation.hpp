#pragma once

/**
 * Products written in the compact index notation used for spectral tables:
 *
 *   "-a2 ud1"   ->  -a_2 (u_1)^dagger
 *   "b13 u2"    ->  b_1 b_3 u_2
 *   "a21"       ->  a_2 a_1
 *   "ud123"     ->  u_1^dagger u_2^dagger u_3^dagger
 *
 * A factor is a, b, u or ud followed by its digits (one index per digit),
 * multiplied in the written order. An optional leading sign applies to the
 * whole product; "1" is the identity.
 */

#include <cctype>
#include <string>
#include <string_view>

#include "witt/error.hpp"
#include "witt/multivector.hpp"

namespace witt {

inline Multivector parse_product(std::string_view text, int n) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    Scalar sign = 1;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    Multivector acc = Multivector::scalar(n, sign);
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '1' && (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
            ++pos;
            any = true;
            continue;
        }
        std::string kind;
        if (text.substr(pos, 2) == "ud") kind = "ud";
        else if (text[pos] == 'a' || text[pos] == 'b' || text[pos] == 'u') kind = std::string(1, text[pos]);
        else throw parse_error("unexpected '" + std::string(1, text[pos]) + "' in product '" + std::string(text) + "'");
        pos += kind.size();
        const std::size_t digits_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const int i = text[pos] - '0';
            Multivector factor;
            if (kind == "a") factor = Multivector::a(i, n);
            else if (kind == "b") factor = Multivector::b(i, n);
            else if (kind == "u") factor = Multivector::u(i, n);
            else factor = Multivector::u_dagger(i, n);
            acc = acc * factor;
            ++pos;
        }
        if (pos == digits_begin) throw parse_error("factor without index in '" + std::string(text) + "'");
        any = true;
    }
    if (!any) throw parse_error("empty product");
    return acc;
}

} // namespace witt
