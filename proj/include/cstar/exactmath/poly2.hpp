#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cstar/errors.hpp"
#include "cstar/exactmath/rational.hpp"

namespace cstar {

/// Polynomial: Q[x,y]. Laurent: Q[t,u,u^-1] (only the u exponent may be negative).
enum class RingKind { Polynomial, Laurent };

inline const char* variable_name(RingKind kind, int index) {
    if (kind == RingKind::Polynomial)
        return index == 0 ? "x" : "y";
    return index == 0 ? "t" : "u";
}

struct Exponent {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse bivariate polynomial with exact rational coefficients.
class Poly2 {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit Poly2(RingKind kind = RingKind::Polynomial) : kind_(kind) {}

    static Poly2 constant(RingKind kind, const Rational& c) { return monomial(kind, c, 0, 0); }

    static Poly2 monomial(RingKind kind, const Rational& c, int a, int b) {
        Poly2 p(kind);
        p.add_term({a, b}, c);
        return p;
    }

    /// The generator x (or t) for index 0, y (or u) for index 1.
    static Poly2 generator(RingKind kind, int index) {
        return index == 0 ? monomial(kind, 1, 1, 0) : monomial(kind, 1, 0, 1);
    }

    RingKind kind() const { return kind_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Exponent e, const Rational& c) {
        check_exponent(e);
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Largest a+b over the support; -1 for the zero polynomial.
    int total_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_)
            deg = std::max(deg, e.a + e.b);
        return deg;
    }

    Poly2 operator-() const {
        Poly2 r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    Poly2& operator+=(const Poly2& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    Poly2& operator-=(const Poly2& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    Poly2& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend Poly2 operator+(Poly2 l, const Poly2& r) { return l += r; }
    friend Poly2 operator-(Poly2 l, const Poly2& r) { return l -= r; }
    friend Poly2 operator*(Poly2 p, const Rational& s) { return p *= s; }
    friend Poly2 operator*(const Rational& s, Poly2 p) { return p *= s; }

    friend Poly2 operator*(const Poly2& l, const Poly2& r) {
        l.check_same_ring(r);
        Poly2 out(l.kind_);
        for (const auto& [el, cl] : l.terms_)
            for (const auto& [er, cr] : r.terms_)
                out.add_term({el.a + er.a, el.b + er.b}, cl * cr);
        return out;
    }

    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    friend bool operator==(const Poly2& l, const Poly2& r) {
        return l.kind_ == r.kind_ && l.terms_ == r.terms_;
    }

    Poly2 pow(unsigned n) const {
        Poly2 acc = constant(kind_, 1);
        Poly2 base = *this;
        while (n > 0) {
            if (n & 1U)
                acc *= base;
            n >>= 1U;
            if (n > 0)
                base *= base;
        }
        return acc;
    }

    /// Partial derivative with respect to generator 0 or 1.
    Poly2 partial(int index) const {
        Poly2 out(kind_);
        for (const auto& [e, c] : terms_) {
            if (index == 0 && e.a != 0)
                out.add_term({e.a - 1, e.b}, c * e.a);
            else if (index == 1 && e.b != 0)
                out.add_term({e.a, e.b - 1}, c * e.b);
        }
        return out;
    }

private:
    void check_exponent(Exponent e) const {
        if (e.a < 0 || (kind_ == RingKind::Polynomial && e.b < 0))
            throw PreconditionError(std::string("negative exponent not allowed in ") +
                                    (kind_ == RingKind::Polynomial ? "Q[x,y]" : "Q[t,u,u^-1] (t)"));
    }

    void check_same_ring(const Poly2& o) const {
        if (kind_ != o.kind_)
            throw PreconditionError("polynomials from different rings");
    }

    RingKind kind_;
    TermMap terms_;
};

namespace detail {

inline std::string monomial_string(RingKind kind, Exponent e) {
    std::string out;
    auto put = [&](int index, int power) {
        if (power == 0)
            return;
        out += variable_name(kind, index);
        if (power != 1)
            out += "^" + std::to_string(power);
    };
    put(0, e.a);
    put(1, e.b);
    return out;
}

inline std::string term_string(RingKind kind, Exponent e, const Rational& c) {
    std::string mono = monomial_string(kind, e);
    if (mono.empty())
        return to_string(c);
    if (c == 1)
        return mono;
    if (c == -1)
        return "-" + mono;
    return to_string(c) + mono;
}

/// Display order: ascending total degree, then descending first exponent.
inline std::vector<std::pair<Exponent, Rational>> display_order(const Poly2& p) {
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        int dl = l.first.a + l.first.b;
        int dr = r.first.a + r.first.b;
        if (dl != dr)
            return dl < dr;
        return l.first.a > r.first.a;
    });
    return terms;
}

}  // namespace detail

/// Human-readable form, e.g. "-y + 3x^2". Re-parses with parse_poly.
inline std::string to_string(const Poly2& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : detail::display_order(p)) {
        if (first) {
            out += detail::term_string(p.kind(), e, c);
            first = false;
        } else if (c < 0) {
            out += " - " + detail::term_string(p.kind(), e, -c);
        } else {
            out += " + " + detail::term_string(p.kind(), e, c);
        }
    }
    return out;
}

}  // namespace cstar
