#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cstar/divisor/pair.hpp"

namespace cstar {

enum class GradingCase { Elliptic, Parabolic, Hyperbolic };

inline const char* to_string(GradingCase g) {
    switch (g) {
        case GradingCase::Elliptic: return "elliptic";
        case GradingCase::Parabolic: return "parabolic";
        case GradingCase::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

/// A0[D] (elliptic, parabolic) or A0[D+, D-] (hyperbolic). Construction does
/// not check the structural conditions; see validate().
class DpdPresentation {
public:
    static DpdPresentation elliptic(QDivisor d) { return {GradingCase::Elliptic, std::move(d)}; }
    static DpdPresentation parabolic(QDivisor d) { return {GradingCase::Parabolic, std::move(d)}; }
    static DpdPresentation hyperbolic(DivisorPair p) { return {GradingCase::Hyperbolic, std::move(p)}; }
    static DpdPresentation hyperbolic(QDivisor plus, QDivisor minus) {
        return hyperbolic(DivisorPair(std::move(plus), std::move(minus)));
    }

    GradingCase grading() const { return grading_; }

    CurveKind curve() const {
        if (const auto* d = std::get_if<QDivisor>(&data_))
            return d->curve();
        return std::get<DivisorPair>(data_).curve();
    }

    bool is_hyperbolic() const { return grading_ == GradingCase::Hyperbolic; }

    const QDivisor& divisor() const {
        if (const auto* d = std::get_if<QDivisor>(&data_))
            return *d;
        throw PreconditionError("hyperbolic presentation has a pair, not a single divisor");
    }

    const DivisorPair& pair() const {
        if (const auto* p = std::get_if<DivisorPair>(&data_))
            return *p;
        throw PreconditionError("presentation is not hyperbolic");
    }

    friend bool operator==(const DpdPresentation& l, const DpdPresentation& r) {
        return l.grading_ == r.grading_ && l.data_ == r.data_;
    }

private:
    DpdPresentation(GradingCase g, std::variant<QDivisor, DivisorPair> data)
        : grading_(g), data_(std::move(data)) {}

    GradingCase grading_;
    std::variant<QDivisor, DivisorPair> data_;
};

inline std::string to_string(const DpdPresentation& p) {
    std::string body = p.is_hyperbolic() ? to_string(p.pair()) : to_string(p.divisor());
    return std::string(to_string(p.grading())) + " on " + to_string(p.curve()) + ": " + body;
}

/// Outcome of validate(): the detected case plus every violated condition.
struct ValidationReport {
    GradingCase grading;
    CurveKind curve;
    std::vector<std::string> violations;

    bool valid() const { return violations.empty(); }
};

inline ValidationReport validate(const DpdPresentation& p) {
    ValidationReport r{p.grading(), p.curve(), {}};
    switch (p.grading()) {
        case GradingCase::Elliptic:
            if (p.curve() != CurveKind::ProjectiveLine)
                r.violations.push_back("elliptic presentations live on the projective line");
            if (p.divisor().degree() <= 0)
                r.violations.push_back("positive degree required (deg D = " +
                                       to_string(p.divisor().degree()) + ")");
            break;
        case GradingCase::Parabolic:
            if (p.curve() == CurveKind::ProjectiveLine)
                r.violations.push_back("parabolic presentations live on the affine or punctured line");
            break;
        case GradingCase::Hyperbolic: {
            if (p.curve() == CurveKind::ProjectiveLine)
                r.violations.push_back("hyperbolic presentations live on the affine or punctured line");
            const QDivisor sum = p.pair().sum();
            for (const auto& [pt, c] : sum.entries())
                if (c > 0)
                    r.violations.push_back("D_++D_-≤ 0 violated at [" + to_string(pt) + "] (value " +
                                           to_string(c) + ")");
            break;
        }
    }
    return r;
}

/// Throws PreconditionError listing the violations when p is invalid.
inline void require_valid(const DpdPresentation& p) {
    auto r = validate(p);
    if (r.valid())
        return;
    std::string msg = "invalid presentation:";
    for (const auto& v : r.violations)
        msg += " " + v + ";";
    throw PreconditionError(msg);
}

}  // namespace cstar
