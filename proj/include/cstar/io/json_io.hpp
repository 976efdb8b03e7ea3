#pragma once

#include <string>

#include <json.hpp>

#include "cstar/classify/recognize.hpp"
#include "cstar/deriv/derivation.hpp"
#include "cstar/deriv/normalize.hpp"
#include "cstar/dpd/presentation.hpp"

namespace cstar {

using Json = nlohmann::ordered_json;

// Presentation files:
//   {"case": "hyperbolic", "curve": "affine_line",
//    "dplus":  [{"point": "0", "coeff": "1/2"}],
//    "dminus": [{"point": "0", "coeff": "-1/2"}, {"point": "1", "coeff": "-1"}]}
// One-sided cases use "d" instead of the pair. "curve" defaults to the
// projective line for elliptic input and the affine line otherwise; points
// are rationals or "inf". Rationals are always strings.

namespace detail {

inline const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::string require_string(const Json& j, const char* what) {
    if (!j.is_string())
        throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline CurveKind parse_curve(const std::string& s) {
    if (s == "affine_line")
        return CurveKind::AffineLine;
    if (s == "projective_line")
        return CurveKind::ProjectiveLine;
    if (s == "punctured_line")
        return CurveKind::PuncturedLine;
    throw ParseError("unknown curve \"" + s + "\"");
}

inline GradingCase parse_case(const std::string& s) {
    if (s == "elliptic")
        return GradingCase::Elliptic;
    if (s == "parabolic")
        return GradingCase::Parabolic;
    if (s == "hyperbolic")
        return GradingCase::Hyperbolic;
    throw ParseError("unknown case \"" + s + "\"");
}

}  // namespace detail

inline QDivisor divisor_from_json(const Json& j, CurveKind curve) {
    if (!j.is_array())
        throw ParseError("divisor must be an array of {point, coeff} entries");
    QDivisor d(curve);
    for (const auto& entry : j) {
        std::string pt = detail::require_string(detail::require_field(entry, "point"), "point");
        Rational c = parse_rational(detail::require_string(detail::require_field(entry, "coeff"), "coeff"));
        Point p = pt == "inf" ? Point::infinity() : Point::at(parse_rational(pt));
        try {
            d.add(p, c);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    return d;
}

inline Json to_json(const QDivisor& d) {
    Json arr = Json::array();
    for (const auto& [p, c] : d.entries())
        arr.push_back({{"point", to_string(p)}, {"coeff", to_string(c)}});
    return arr;
}

inline DpdPresentation presentation_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("presentation must be a JSON object");
    GradingCase g = detail::parse_case(detail::require_string(detail::require_field(j, "case"), "case"));
    CurveKind curve = g == GradingCase::Elliptic ? CurveKind::ProjectiveLine : CurveKind::AffineLine;
    if (j.contains("curve"))
        curve = detail::parse_curve(detail::require_string(j.at("curve"), "curve"));
    switch (g) {
        case GradingCase::Elliptic: return DpdPresentation::elliptic(divisor_from_json(detail::require_field(j, "d"), curve));
        case GradingCase::Parabolic:
            return DpdPresentation::parabolic(divisor_from_json(detail::require_field(j, "d"), curve));
        case GradingCase::Hyperbolic:
            return DpdPresentation::hyperbolic(divisor_from_json(detail::require_field(j, "dplus"), curve),
                                               divisor_from_json(detail::require_field(j, "dminus"), curve));
    }
    throw ParseError("unreachable case");
}

inline DpdPresentation parse_presentation(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return presentation_from_json(j);
}

inline Json to_json(const DpdPresentation& p) {
    Json j{{"case", to_string(p.grading())}, {"curve", to_string(p.curve())}};
    if (p.is_hyperbolic()) {
        j["dplus"] = to_json(p.pair().dplus);
        j["dminus"] = to_json(p.pair().dminus);
    } else {
        j["d"] = to_json(p.divisor());
    }
    return j;
}

inline Json to_json(const EquivalenceWitness& w) {
    return {{"map", {{"a", to_string(w.map.a)}, {"b", to_string(w.map.b)}}},
            {"f", to_string(w.f)},
            {"swapped", w.swapped}};
}

inline Json to_json(const AbelianGroup& g) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion)
        torsion.push_back(to_string(t));
    return {{"description", to_string(g)}, {"free_rank", g.free_rank}, {"torsion", torsion}};
}

inline Json to_json(const SurfaceReport& r) {
    auto strings = [](const std::vector<Integer>& v) {
        Json a = Json::array();
        for (const auto& x : v)
            a.push_back(to_string(x));
        return a;
    };
    Json j;
    j["case"] = to_string(r.grading);
    j["curve"] = to_string(r.curve);
    j["verdict"] = to_string(r.verdict);
    j["toric"] = r.toric ? Json(to_string(*r.toric)) : Json(nullptr);
    j["ml_class"] = r.ml ? Json(to_string(*r.ml)) : Json(r.ml_note);
    j["l"] = r.l ? Json(*r.l) : Json(nullptr);
    Json neg = Json::array();
    for (const auto& np : r.negative)
        neg.push_back({{"point", to_string(np.point)},
                       {"e_plus", to_string(np.e_plus)},
                       {"m_plus", to_string(np.m_plus)},
                       {"e_minus", to_string(np.e_minus)},
                       {"m_minus", to_string(np.m_minus)},
                       {"determinant", to_string(np.determinant())}});
    j["negative_points"] = neg;
    Json fibers = Json::array();
    for (const auto& f : r.multiple_fibers)
        fibers.push_back({{"point", to_string(f.point)}, {"multiplicity", to_string(f.multiplicity)}});
    j["multiple_fibers"] = fibers;
    j["smooth"] = r.smooth ? Json(*r.smooth) : Json(nullptr);
    j["class_group"] = r.class_group ? to_json(*r.class_group) : Json(r.class_group_note);
    if (r.canonical)
        j["canonical_class"] = {{"vector", strings(r.canonical->vector)},
                                {"trivial", r.canonical->trivial},
                                {"extrapolated", r.canonical->extrapolated}};
    else
        j["canonical_class"] = r.canonical_note;
    j["canonical_form"] = r.canonical_form ? to_json(*r.canonical_form) : Json(nullptr);
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    j["bundle_consistent"] = r.bundle_consistent;
    j["bundle_violations"] = r.bundle_violations;
    return j;
}

inline Json to_json(const ValidationReport& v) {
    return {{"case", to_string(v.grading)},
            {"curve", to_string(v.curve)},
            {"valid", v.valid()},
            {"violations", v.violations}};
}

inline Json to_json(const UniquenessReport& u) {
    Json j{{"mode", to_string(u.mode)}, {"equivalent", u.equivalent}};
    j["witness"] = u.witness ? to_json(*u.witness) : Json(nullptr);
    if (u.mode == UniquenessReport::Mode::Toric) {
        j["first"] = to_string(*u.first_toric);
        j["second"] = to_string(*u.second_toric);
    }
    j["guarantee_applies"] = u.guarantee_applies;
    j["counterexample_candidate"] = u.counterexample_candidate;
    j["differing_invariants"] = u.differing_invariants;
    return j;
}

inline Json to_json(const NormalizationResult& n) {
    Json chain = Json::array();
    for (const auto& d : n.chain)
        chain.push_back(to_string(d));
    return {{"c", n.c ? Json(to_string(*n.c)) : Json(nullptr)},
            {"chain", chain},
            {"residual", to_string(n.residual)},
            {"iterations", n.iterations}};
}

}  // namespace cstar
