#pragma once

// Compact text grammar for monomial ideals:
//   ideal     := '0' | generator ('+' generator)*
//   generator := '1' | factor ('*' factor)*
//   factor    := 'x' INDEX ('^' EXPONENT)?
// Indices are 1-based. Example: "x1^2*x3 + x2*x4". Whitespace is free.

#include <cctype>
#include <string>
#include <vector>

#include "symtopo/errors.hpp"
#include "symtopo/ints.hpp"
#include "symtopo/monomial_ideal.hpp"

namespace symtopo {

namespace detail {

struct IdealLexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_ws();
        require(pos < text.size(), errc::syntax_error, "unexpected end of ideal text");
        return text[pos++];
    }
    Int number() {
        skip_ws();
        require(pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])),
                errc::syntax_error,
                "expected a number at offset " + std::to_string(pos) + " in ideal text");
        Int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = checked_add(checked_mul(v, 10), text[pos] - '0');
            ++pos;
        }
        return v;
    }
};

}  // namespace detail

/// Parse the grammar above. When num_vars is 0 the arity is inferred from
/// the highest variable index that occurs (at least 1).
inline PolyMonomialIdeal parse_ideal(const std::string& text, int num_vars = 0) {
    detail::IdealLexer lx{text};
    std::vector<std::vector<std::pair<Int, Int>>> gens;  // (index, exponent) lists
    bool zero = false;

    if (lx.eof()) {
        zero = true;  // empty text: the zero ideal
    } else if (lx.peek() == '0') {
        lx.take();
        require(lx.eof(), errc::syntax_error, "tokens after '0' in ideal text");
        zero = true;
    } else {
        while (true) {
            std::vector<std::pair<Int, Int>> factors;
            if (lx.peek() == '1') {
                lx.take();
            } else {
                while (true) {
                    char c = lx.take();
                    require(c == 'x', errc::syntax_error,
                            std::string("expected 'x', got '") + c + "' at offset " +
                                std::to_string(lx.pos - 1));
                    Int idx = lx.number();
                    require(idx >= 1, errc::syntax_error, "variable indices are 1-based");
                    Int exp = 1;
                    if (lx.peek() == '^') {
                        lx.take();
                        exp = lx.number();
                    }
                    factors.emplace_back(idx, exp);
                    if (lx.peek() == '*')
                        lx.take();
                    else
                        break;
                }
            }
            gens.push_back(std::move(factors));
            if (lx.peek() == '+')
                lx.take();
            else
                break;
        }
        require(lx.eof(), errc::syntax_error,
                "trailing characters at offset " + std::to_string(lx.pos) + " in ideal text");
    }

    Int max_idx = 0;
    for (const auto& g : gens)
        for (const auto& [idx, exp] : g) max_idx = std::max(max_idx, idx);
    int m = num_vars > 0 ? num_vars : static_cast<int>(std::max<Int>(max_idx, 1));
    require(max_idx <= m, errc::invalid_parameter,
            "variable index " + std::to_string(max_idx) + " exceeds declared arity " +
                std::to_string(m));

    if (zero) return zero_ideal(m);
    std::vector<Vec> exps;
    for (const auto& g : gens) {
        Vec e(m, 0);
        for (const auto& [idx, exp] : g) e[idx - 1] = checked_add(e[idx - 1], exp);
        exps.push_back(std::move(e));
    }
    return minimalize(m, std::move(exps));
}

inline std::string format_monomial(const Vec& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i + 1);
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string format_ideal(const PolyMonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < I.min_gens.size(); ++i) {
        if (i) s += " + ";
        s += format_monomial(I.min_gens[i]);
    }
    return s;
}

}  // namespace symtopo
