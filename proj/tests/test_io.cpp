#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace cstar;
using namespace testing_support;

namespace {

std::vector<std::string> keys(const Json& j) {
    std::vector<std::string> out;
    for (const auto& [k, v] : j.items())
        out.push_back(k);
    return out;
}

const char* kQuadric = R"({"case": "hyperbolic",
  "dplus":  [{"point": "0", "coeff": "1/2"}],
  "dminus": [{"point": "0", "coeff": "-1/2"}, {"point": "1", "coeff": "-1"}]})";

}  // namespace

TEST_CASE("presentation parsing") {
    auto p = parse_presentation(kQuadric);
    CHECK(p.curve() == CurveKind::AffineLine);
    CHECK(p.pair() == p2_quadric_pair());

    auto e = parse_presentation(R"({"case": "elliptic", "d": [{"point": "inf", "coeff": "1/3"}]})");
    CHECK(e.curve() == CurveKind::ProjectiveLine);
    CHECK(e.divisor()[Point::infinity()] == q(1, 3));

    auto c = parse_presentation(R"({"case": "parabolic", "curve": "punctured_line", "d": []})");
    CHECK(c.curve() == CurveKind::PuncturedLine);

    // repeated points add up
    auto r = parse_presentation(
        R"({"case": "parabolic", "d": [{"point": "2", "coeff": "1/2"}, {"point": "2", "coeff": "1/2"}]})");
    CHECK(r.divisor().at(q(2)) == 1);
}

TEST_CASE("presentation parse errors") {
    const char* bad[] = {
        "{",
        "[]",
        R"({"dplus": [], "dminus": []})",
        R"({"case": "spherical", "d": []})",
        R"({"case": "hyperbolic", "dplus": []})",
        R"({"case": "hyperbolic", "curve": "circle", "dplus": [], "dminus": []})",
        R"({"case": "parabolic", "d": [{"point": "0"}]})",
        R"({"case": "parabolic", "d": [{"point": "0", "coeff": 1}]})",
        R"({"case": "parabolic", "d": [{"point": "0", "coeff": "1/0"}]})",
        R"({"case": "parabolic", "d": [{"point": "x", "coeff": "1"}]})",
        R"({"case": "parabolic", "d": [{"point": "inf", "coeff": "1"}]})",
        R"({"case": "parabolic", "curve": "punctured_line", "d": [{"point": "0", "coeff": "1"}]})",
        R"({"case": "parabolic", "d": {"point": "0", "coeff": "1"}})",
    };
    for (const char* text : bad) {
        INFO(text);
        CHECK_THROWS_AS(parse_presentation(text), ParseError);
    }
}

TEST_CASE("presentation round trip") {
    Gen g(71);
    for (int n = 0; n < 100; ++n) {
        CurveKind curve = g.coin() ? CurveKind::AffineLine : CurveKind::PuncturedLine;
        auto p = DpdPresentation::hyperbolic(random_pair(g, curve));
        auto back = parse_presentation(to_json(p).dump());
        CHECK(back.pair() == p.pair());
        CHECK(back.curve() == p.curve());
    }
    auto e = DpdPresentation::elliptic(div({{q(0), q(1, 2)}}, CurveKind::ProjectiveLine));
    CHECK(parse_presentation(to_json(e).dump(2)).divisor() == e.divisor());
}

TEST_CASE("report schema") {
    Json j = to_json(recognize(parse_presentation(kQuadric)));
    CHECK(keys(j) == std::vector<std::string>{"case", "curve", "verdict", "toric", "ml_class", "l",
                                              "negative_points", "multiple_fibers", "smooth", "class_group",
                                              "canonical_class", "canonical_form", "witness",
                                              "bundle_consistent", "bundle_violations"});
    CHECK(j["verdict"] == "P2MinusQuadric");
    CHECK(j["toric"].is_null());
    CHECK(j["ml_class"] == "trivial");
    CHECK(j["l"] == 1);
    CHECK(j["negative_points"][0]["determinant"] == "-1");
    CHECK(j["multiple_fibers"][0]["multiplicity"] == "2");
    CHECK(j["class_group"] == "unavailable: multiple fibers");
    CHECK(keys(j["witness"]) == std::vector<std::string>{"map", "f", "swapped"});

    Json p1 = to_json(recognize(DpdPresentation::hyperbolic(p1xp1_pair())));
    CHECK(p1["class_group"]["description"] == "Z");
    CHECK(p1["class_group"]["free_rank"] == 1);
    CHECK(p1["canonical_class"]["trivial"] == true);
    CHECK(p1["canonical_class"]["extrapolated"] == false);

    Json tor = to_json(recognize(hyp(QDivisor(), div({{q(0), q(-2)}}))));
    CHECK(tor["toric"] == "V2,1");
    CHECK(tor["class_group"]["torsion"] == Json::array({"2"}));
}

TEST_CASE("validation, uniqueness and normalization schemas") {
    Json v = to_json(validate(hyp(div({{q(0), q(1, 4)}}), div({{q(0), q(1, 4)}}))));
    CHECK(v["valid"] == false);
    CHECK(v["violations"].size() == 1);

    Json u = to_json(uniqueness_check(hyp(QDivisor(), div({{q(0), q(-2)}})), hyp(QDivisor(), div({{q(0), q(-3)}}))));
    CHECK(u["mode"] == "toric");
    CHECK(u["equivalent"] == false);
    CHECK(u["first"] == "V2,1");
    CHECK(u["second"] == "V3,2");

    PolyDerivation delta = parse_derivation("x dx - y dy");
    Json n = to_json(normalize_semisimple(conjugate(delta, parse_derivation("x^2 dy")), WeightGrading()));
    CHECK(n["c"] == "1");
    CHECK(n["chain"] == Json::array({"-x^2 dy"}));
    CHECK(n["residual"] == "x dx - y dy");
    CHECK(n["iterations"] == 1);
    CHECK(to_json(normalize_semisimple(parse_derivation("x dx + y dy"), WeightGrading()))["c"].is_null());
}
