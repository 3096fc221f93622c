#pragma once

/**
 * JSON and plain-text renderings.
 *
 * Multivector JSON:
 *   {"n":2,"complex":false,"terms":[{"a":[1],"b":[1,2],"coeff":"3/2"}]}
 * with ascending index lists and terms ordered by (a-mask, b-mask).
 * Matrices are arrays of rows of scalar strings.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "witt/error.hpp"
#include "witt/gaussian_rational.hpp"
#include "witt/matrix.hpp"
#include "witt/multivector.hpp"
#include "witt/polynomial.hpp"

namespace witt::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& s) { return s.to_string(); }

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw parse_error("scalar must be a string like \"3/2\" or an integer");
}

inline Json to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) throw parse_error("matrix rows must be non-empty arrays");
    const std::size_t cols = j[0].size();
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw parse_error("matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j[i][c]);
    }
    return m;
}

inline Json index_list(Mask mask) {
    Json out = Json::array();
    for (int i = 1; i <= max_rank; ++i)
        if (mask & bit_of(i)) out.push_back(i);
    return out;
}

inline Json to_json(const Multivector& g) {
    Json terms = Json::array();
    for (const auto& [m, c] : g.terms()) {
        Json t;
        t["a"] = index_list(m.a);
        t["b"] = index_list(m.b);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json out;
    out["n"] = g.rank();
    out["complex"] = g.complexified();
    out["terms"] = std::move(terms);
    return out;
}

inline Mask mask_from_json(const Json& j, int n, const char* what) {
    if (!j.is_array()) throw parse_error(std::string("term field '") + what + "' must be an index array");
    Mask mask = 0;
    int last = 0;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw parse_error("indices must be integers");
        const int i = v.get<int>();
        if (i <= last) throw parse_error(std::string("indices in '") + what + "' must be strictly ascending");
        if (i > n) throw dimension_error("index " + std::to_string(i) + " exceeds rank " + std::to_string(n));
        last = i;
        mask |= bit_of(i);
    }
    return mask;
}

inline Multivector multivector_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("multivector must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw parse_error("multivector needs integer field 'n'");
    const int n = j["n"].get<int>();
    if (n < 0 || n > max_rank) throw dimension_error("rank " + std::to_string(n) + " out of range");
    bool complexified = false;
    if (j.contains("complex")) {
        if (!j["complex"].is_boolean()) throw parse_error("'complex' must be a boolean");
        complexified = j["complex"].get<bool>();
    }
    Multivector g(n, complexified);
    if (!j.contains("terms")) return g;
    if (!j["terms"].is_array()) throw parse_error("'terms' must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff")) throw parse_error("each term needs 'coeff'");
        const Mask a = t.contains("a") ? mask_from_json(t["a"], n, "a") : 0;
        const Mask b = t.contains("b") ? mask_from_json(t["b"], n, "b") : 0;
        const Scalar c = scalar_from_json(t["coeff"]);
        if (!complexified && !c.is_real()) throw parse_error("non-real coefficient in a real multivector");
        g.add_term({a, b}, c);
    }
    return g;
}

inline Json to_json(const RationalPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
    Json out;
    out["coefficients"] = std::move(coeffs);
    out["text"] = p.to_string();
    if (!p.is_zero()) out["factored"] = factored_string(factor_rational_roots(p));
    return out;
}

// ---------------------------------------------------------------------------
// Text

/// "1/2 - a1b1 + 3 a2", "(1+2i) b1"; "0" for the zero element.
inline std::string pretty(const Multivector& g) {
    if (g.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : g.terms()) {
        bool negative = false;
        std::string coef;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            coef = negative ? Rational(-c.re()).get_str() : c.re().get_str();
        } else {
            coef = "(" + c.to_string() + ")";
        }
        if (out.empty()) out = negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (m.is_identity()) out += coef;
        else {
            if (coef != "1") out += coef + " ";
            out += to_string(m);
        }
    }
    return out;
}

inline std::string align_grid(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size(), ' ');
        }
        out += line + "\n";
    }
    return out;
}

inline std::string pretty(const ExactMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(m(i, j).to_string());
    return align_grid(cells);
}

} // namespace witt::io
