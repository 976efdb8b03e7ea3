#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cstar/errors.hpp"
#include "cstar/exactmath/factored_rational.hpp"
#include "cstar/exactmath/rational.hpp"

namespace cstar {

/// AffineLine: A0 = C[t]. ProjectiveLine: C = Proj A in the elliptic case.
/// PuncturedLine: A0 = C[t, t^-1].
enum class CurveKind { AffineLine, ProjectiveLine, PuncturedLine };

inline const char* to_string(CurveKind c) {
    switch (c) {
        case CurveKind::AffineLine: return "affine_line";
        case CurveKind::ProjectiveLine: return "projective_line";
        case CurveKind::PuncturedLine: return "punctured_line";
    }
    return "?";
}

/// A rational point of the line, or infinity (projective line only).
struct Point {
    bool infinite = false;
    Rational value;

    static Point at(const Rational& v) { return Point{false, v}; }
    static Point at(long v) { return Point{false, Rational(v)}; }
    static Point infinity() { return Point{true, 0}; }

    friend bool operator==(const Point& l, const Point& r) {
        return l.infinite == r.infinite && (l.infinite || l.value == r.value);
    }
    friend bool operator<(const Point& l, const Point& r) {
        if (l.infinite != r.infinite)
            return r.infinite;
        return !l.infinite && l.value < r.value;
    }
};

inline std::string to_string(const Point& p) { return p.infinite ? "inf" : to_string(p.value); }

/// Finite formal sum of points with rational coefficients on a fixed curve.
class QDivisor {
public:
    using EntryMap = std::map<Point, Rational>;

    explicit QDivisor(CurveKind curve = CurveKind::AffineLine) : curve_(curve) {}

    QDivisor(CurveKind curve, std::initializer_list<std::pair<Rational, Rational>> entries)
        : curve_(curve) {
        for (const auto& [p, c] : entries)
            add(Point::at(p), c);
    }

    static QDivisor single(CurveKind curve, const Point& p, const Rational& coeff) {
        QDivisor d(curve);
        d.add(p, coeff);
        return d;
    }

    CurveKind curve() const { return curve_; }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Rational operator[](const Point& p) const {
        auto it = entries_.find(p);
        return it == entries_.end() ? Rational(0) : it->second;
    }
    Rational at(const Rational& p) const { return (*this)[Point::at(p)]; }

    void add(const Point& p, const Rational& coeff) {
        check_point(p);
        if (coeff == 0)
            return;
        auto [it, inserted] = entries_.try_emplace(p, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                entries_.erase(it);
        }
    }

    std::vector<Point> support() const {
        std::vector<Point> s;
        for (const auto& [p, c] : entries_)
            s.push_back(p);
        return s;
    }

    Rational degree() const {
        Rational d = 0;
        for (const auto& [p, c] : entries_)
            d += c;
        return d;
    }

    bool is_integral() const {
        for (const auto& [p, c] : entries_)
            if (!cstar::is_integral(c))
                return false;
        return true;
    }

    /// Every coefficient <= 0.
    bool is_nonpositive() const {
        for (const auto& [p, c] : entries_)
            if (c > 0)
                return false;
        return true;
    }

    QDivisor& operator+=(const QDivisor& o) {
        check_curve(o);
        for (const auto& [p, c] : o.entries_)
            add(p, c);
        return *this;
    }
    QDivisor& operator-=(const QDivisor& o) {
        check_curve(o);
        for (const auto& [p, c] : o.entries_)
            add(p, -c);
        return *this;
    }
    QDivisor& operator*=(const Rational& s) {
        if (s == 0)
            entries_.clear();
        for (auto& [p, c] : entries_)
            c *= s;
        return *this;
    }

    friend QDivisor operator+(QDivisor l, const QDivisor& r) { return l += r; }
    friend QDivisor operator-(QDivisor l, const QDivisor& r) { return l -= r; }
    friend QDivisor operator*(const Rational& s, QDivisor d) { return d *= s; }
    QDivisor operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const QDivisor& l, const QDivisor& r) {
        return l.curve_ == r.curve_ && l.entries_ == r.entries_;
    }

private:
    void check_point(const Point& p) const {
        if (p.infinite && curve_ != CurveKind::ProjectiveLine)
            throw PreconditionError("the point at infinity lies only on the projective line");
        if (!p.infinite && p.value == 0 && curve_ == CurveKind::PuncturedLine)
            throw PreconditionError("the point 0 is not on the punctured line");
    }
    void check_curve(const QDivisor& o) const {
        if (curve_ != o.curve_)
            throw PreconditionError("divisors on different curves");
    }

    CurveKind curve_;
    EntryMap entries_;
};

/// Pointwise floor: coefficient floor(D(p)) at each p.
inline QDivisor floor_div(const QDivisor& d) {
    QDivisor out(d.curve());
    for (const auto& [p, c] : d.entries())
        out.add(p, Rational(floor_of(c)));
    return out;
}

/// D - floor(D); every coefficient lies in [0, 1).
inline QDivisor fractional_part(const QDivisor& d) {
    QDivisor out(d.curve());
    for (const auto& [p, c] : d.entries())
        out.add(p, frac_of(c));
    return out;
}

/// Principal divisor of f on the given curve. On the projective line the
/// point at infinity receives minus the degree of f; on the punctured line
/// the factor t is a unit and contributes nothing.
inline QDivisor divisor_of(const FactoredRational& f, CurveKind curve = CurveKind::AffineLine) {
    QDivisor out(curve);
    for (const auto& [root, mult] : f.factors()) {
        if (curve == CurveKind::PuncturedLine && root == 0)
            continue;
        out.add(Point::at(root), mult);
    }
    if (curve == CurveKind::ProjectiveLine)
        out.add(Point::infinity(), Rational(-f.degree()));
    return out;
}

/// e.g. "1/2[0] - [1]"; the zero divisor prints as "0".
inline std::string to_string(const QDivisor& d) {
    if (d.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : d.entries()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string coeff = mag == 1 ? "" : to_string(mag);
        std::string term = coeff + "[" + to_string(p) + "]";
        if (first)
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

}  // namespace cstar
