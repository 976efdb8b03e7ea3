#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cstar/errors.hpp"
#include "cstar/exactmath/poly2.hpp"

namespace cstar {

// Grammar shared by polynomials and derivations:
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := factor (['*'] factor)*
//   factor  := number | var ['^' ['-'] int] | '(' expr ')' ['^' int] | dvar
//   number  := digits ['/' digits]
//   var     := 'x' | 'y' | 't' | 'u'
//   dvar    := 'dx' | 'dy' | 'dt' | 'du'
//
// Juxtaposition multiplies ("3x^2y" is 3*x^2*y). x,y select Q[x,y];
// t,u select Q[t,u,u^-1]; mixing them is an error.

namespace detail {

enum class TokKind { Number, Var, DVar, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    Rational value;  // Number
    int index = 0;   // Var / DVar
    char name = 0;   // Var / DVar letter
    std::size_t pos = 0;
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto var_index = [](char c) -> int {
        switch (c) {
            case 'x': case 't': return 0;
            case 'y': case 'u': return 1;
            default: return -1;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j + 1 < text.size() && text[j] == '/' &&
                std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                    ++j;
            }
            out.push_back({TokKind::Number, parse_rational(text.substr(i, j - i)), 0, 0, start});
            i = j;
            continue;
        }
        if (c == 'd' && i + 1 < text.size() && var_index(text[i + 1]) >= 0) {
            out.push_back({TokKind::DVar, 0, var_index(text[i + 1]), text[i + 1], start});
            i += 2;
            continue;
        }
        if (var_index(c) >= 0) {
            out.push_back({TokKind::Var, 0, var_index(c), c, start});
            ++i;
            continue;
        }
        TokKind k;
        switch (c) {
            case '+': k = TokKind::Plus; break;
            case '-': k = TokKind::Minus; break;
            case '*': k = TokKind::Star; break;
            case '^': k = TokKind::Caret; break;
            case '(': k = TokKind::LParen; break;
            case ')': k = TokKind::RParen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                                 std::to_string(i));
        }
        out.push_back({k, 0, 0, c, start});
        ++i;
    }
    out.push_back({TokKind::End, 0, 0, 0, text.size()});
    return out;
}

/// Deduces the ring from the letters used; defaults to Q[x,y].
inline RingKind ring_of(const std::vector<Token>& toks) {
    std::optional<RingKind> kind;
    for (const auto& t : toks) {
        if (t.kind != TokKind::Var && t.kind != TokKind::DVar)
            continue;
        RingKind k = (t.name == 'x' || t.name == 'y') ? RingKind::Polynomial : RingKind::Laurent;
        if (kind && *kind != k)
            throw ParseError("mixes variables of Q[x,y] and Q[t,u,u^-1]");
        kind = k;
    }
    return kind.value_or(RingKind::Polynomial);
}

/// One summand of a derivation: coefficient polynomial times an optional dvar.
struct Summand {
    Poly2 coeff;
    std::optional<int> dvar;
};

class ExprParser {
public:
    ExprParser(std::vector<Token> toks, RingKind kind) : toks_(std::move(toks)), kind_(kind) {}

    /// Parses a full sum; each top-level summand may carry one dvar.
    std::vector<Summand> parse_summands() {
        std::vector<Summand> out;
        bool negate = false;
        if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus)
            negate = next().kind == TokKind::Minus;
        for (;;) {
            Summand s = parse_product(true);
            if (negate)
                s.coeff = -s.coeff;
            out.push_back(std::move(s));
            if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
                negate = next().kind == TokKind::Minus;
                continue;
            }
            break;
        }
        if (peek().kind != TokKind::End)
            fail("unexpected token");
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(peek().pos));
    }

    bool starts_factor() const {
        switch (peek().kind) {
            case TokKind::Number:
            case TokKind::Var:
            case TokKind::DVar:
            case TokKind::LParen:
                return true;
            default:
                return false;
        }
    }

    long parse_int_exponent(bool allow_negative) {
        bool neg = false;
        if (peek().kind == TokKind::Minus && allow_negative) {
            next();
            neg = true;
        }
        bool paren = false;
        if (peek().kind == TokKind::LParen) {
            next();
            paren = true;
            if (peek().kind == TokKind::Minus && allow_negative) {
                next();
                neg = !neg;
            }
        }
        if (peek().kind != TokKind::Number || !is_integral(peek().value))
            fail("expected integer exponent");
        long v = to_long(next().value.get_num());
        if (paren) {
            if (peek().kind != TokKind::RParen)
                fail("expected ')'");
            next();
        }
        return neg ? -v : v;
    }

    Poly2 parse_sum() {
        Poly2 acc(kind_);
        bool negate = false;
        if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus)
            negate = next().kind == TokKind::Minus;
        for (;;) {
            Summand s = parse_product(false);
            acc += negate ? -s.coeff : s.coeff;
            if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
                negate = next().kind == TokKind::Minus;
                continue;
            }
            return acc;
        }
    }

    Summand parse_product(bool allow_dvar) {
        Summand s{Poly2::constant(kind_, 1), std::nullopt};
        bool any = false;
        for (;;) {
            if (any && peek().kind == TokKind::Star) {
                next();
                if (!starts_factor())
                    fail("expected factor after '*'");
            }
            if (!starts_factor())
                break;
            any = true;
            const Token& t = next();
            switch (t.kind) {
                case TokKind::Number:
                    s.coeff *= t.value;
                    break;
                case TokKind::Var: {
                    long power = 1;
                    if (peek().kind == TokKind::Caret) {
                        next();
                        power = parse_int_exponent(true);
                    }
                    if (power > 100000 || power < -100000)
                        fail("exponent too large");
                    Exponent e = t.index == 0 ? Exponent{static_cast<int>(power), 0}
                                              : Exponent{0, static_cast<int>(power)};
                    try {
                        s.coeff *= Poly2::monomial(kind_, 1, e.a, e.b);
                    } catch (const PreconditionError& err) {
                        throw ParseError(err.what());
                    }
                    break;
                }
                case TokKind::DVar:
                    if (!allow_dvar)
                        throw ParseError("differential inside parentheses at offset " +
                                         std::to_string(t.pos));
                    if (s.dvar)
                        throw ParseError("two differentials in one term at offset " +
                                         std::to_string(t.pos));
                    s.dvar = t.index;
                    break;
                case TokKind::LParen: {
                    Poly2 inner = parse_sum();
                    if (peek().kind != TokKind::RParen)
                        fail("expected ')'");
                    next();
                    if (peek().kind == TokKind::Caret) {
                        next();
                        long power = parse_int_exponent(false);
                        if (power > 64)
                            fail("exponent too large");
                        inner = inner.pow(static_cast<unsigned>(power));
                    }
                    s.coeff *= inner;
                    break;
                }
                default:
                    fail("unexpected token");
            }
        }
        if (!any)
            fail("expected term");
        return s;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    RingKind kind_;
};

}  // namespace detail

/// Parses a polynomial. The ring is deduced from the variables unless given.
inline Poly2 parse_poly(std::string_view text, std::optional<RingKind> kind = std::nullopt) {
    auto toks = detail::tokenize(text);
    RingKind k = kind.value_or(detail::ring_of(toks));
    if (kind && detail::ring_of(toks) != *kind) {
        bool has_vars = false;
        for (const auto& t : toks)
            has_vars = has_vars || t.kind == detail::TokKind::Var;
        if (has_vars)
            throw ParseError("variables do not belong to the requested ring");
    }
    detail::ExprParser parser(std::move(toks), k);
    Poly2 acc(k);
    for (auto& s : parser.parse_summands()) {
        if (s.dvar)
            throw ParseError("unexpected differential in polynomial");
        acc += s.coeff;
    }
    return acc;
}

}  // namespace cstar
