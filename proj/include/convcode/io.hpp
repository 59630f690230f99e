/// \file io.hpp
/// Text formats.  Matrix files carry a field header line
///     field GF(q) [modulus <poly in a>]
/// followed by one row per line, entries separated by commas.  Entries are
/// sums of terms c, c*z, c*z^e, z, z^e with coefficients in the field
/// element grammar.  Whitespace is insignificant, '#' starts a comment.

#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polymat.hpp"

namespace convcode {

namespace detail {

inline std::string strip_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r') out += c;
    return out;
}

/// split on '+' at paren depth 0
inline std::vector<std::string> split_terms(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline int parse_exponent(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("missing exponent");
    long long e = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad exponent: " + std::string(s));
        e = e * 10 + (c - '0');
        if (e > 1000000) throw std::invalid_argument("exponent too large");
    }
    return static_cast<int>(e);
}

}  // namespace detail

/// Parse a polynomial in the given variable over f, e.g. "1+a^2*z+z^3".
inline Poly parse_poly(const Field& f, std::string_view text, char var = 'z') {
    const std::string s = detail::strip_ws(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    Poly acc(f);
    for (const auto& term : detail::split_terms(s)) {
        if (term.empty()) throw std::invalid_argument("empty term in: " + s);
        const size_t vpos = term.find(var);
        Field::Value c = 1;
        int e = 0;
        if (vpos == std::string::npos) {
            c = f.parse(term);
        } else {
            if (vpos > 0) {
                if (term[vpos - 1] != '*')
                    throw std::invalid_argument("missing '*' before variable in: " + term);
                c = f.parse(std::string_view(term).substr(0, vpos - 1));
            }
            std::string_view rest = std::string_view(term).substr(vpos + 1);
            if (rest.empty()) {
                e = 1;
            } else {
                if (rest[0] != '^') throw std::invalid_argument("bad term: " + term);
                e = detail::parse_exponent(rest.substr(1));
            }
        }
        acc = acc + Poly::monomial(f, c, e);
    }
    return acc;
}

/// Rows only; the field is known.  Lines starting with '#' are comments.
inline PolyMatrix parse_matrix_body(const Field& f, std::string_view text) {
    std::vector<std::vector<Poly>> rows;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        const std::string s = detail::strip_ws(line);
        if (s.empty() || s[0] == '#') continue;
        std::vector<Poly> row;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                row.push_back(parse_poly(f, cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        row.push_back(parse_poly(f, cur));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix body has no rows");
    return PolyMatrix::from_rows(f, rows);
}

struct MatrixFile {
    FieldPtr field;
    PolyMatrix matrix;
};

/// Full matrix file: field header line, then the matrix body.
inline MatrixFile parse_matrix_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    FieldPtr field;
    std::string body;
    bool have_header = false;
    while (std::getline(in, line)) {
        const std::string s = detail::strip_ws(line);
        if (s.empty() || s[0] == '#') continue;
        if (!have_header) {
            if (s.rfind("fieldGF(", 0) != 0) throw std::invalid_argument("expected 'field GF(q)' header");
            const size_t close = s.find(')');
            if (close == std::string::npos) throw std::invalid_argument("bad field header");
            const int q = detail::parse_exponent(std::string_view(s).substr(8, close - 8));
            long long p;
            int m;
            if (!is_prime_power(q, &p, &m) || q > 256)
                throw std::invalid_argument("field size must be a prime power <= 256");
            std::string_view rest = std::string_view(s).substr(close + 1);
            if (rest.empty()) {
                field = Field::get(static_cast<int>(p), m);
            } else {
                if (rest.rfind("modulus", 0) != 0) throw std::invalid_argument("bad field header");
                Poly mod = parse_poly(*Field::get(static_cast<int>(p), 1), rest.substr(7), 'a');
                std::vector<int> coeffs(mod.degree() + 1);
                for (int i = 0; i <= mod.degree(); ++i) coeffs[i] = mod.coeff(i);
                field = Field::get(static_cast<int>(p), m, coeffs);
            }
            have_header = true;
        } else {
            body += line;
            body += '\n';
        }
    }
    if (!have_header) throw std::invalid_argument("missing field header");
    PolyMatrix matrix = parse_matrix_body(*field, body);
    return {std::move(field), std::move(matrix)};
}

inline std::string field_header(const Field& f) {
    std::string out = "field GF(" + std::to_string(f.size()) + ")";
    if (!f.is_prime_field()) {
        std::vector<Field::Value> coeffs(f.modulus().begin(), f.modulus().end());
        out += " modulus " + Poly(*Field::get(f.characteristic(), 1), coeffs).str('a');
    }
    return out;
}

inline std::string write_matrix_body(const PolyMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

inline std::string write_matrix_file(const PolyMatrix& m) {
    return field_header(m.field()) + '\n' + write_matrix_body(m);
}

/// "1,2,4-7,10" -> {1,2,4,5,6,7,10}
inline std::vector<int> parse_column_list(std::string_view text) {
    const std::string s = detail::strip_ws(text);
    std::vector<int> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw std::invalid_argument("bad column list");
        const size_t dash = cur.find('-');
        if (dash == std::string::npos) {
            out.push_back(detail::parse_exponent(cur));
        } else {
            const int lo = detail::parse_exponent(std::string_view(cur).substr(0, dash));
            const int hi = detail::parse_exponent(std::string_view(cur).substr(dash + 1));
            if (hi < lo) throw std::invalid_argument("bad column range");
            for (int c = lo; c <= hi; ++c) out.push_back(c);
        }
        cur.clear();
    };
    for (char c : s) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return out;
}

}  // namespace convcode
