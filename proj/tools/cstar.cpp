// Command-line front end. Exit codes: 0 ok, 1 parse/usage error,
// 2 validation or precondition failure, 3 normalization guard failure.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cstar/cstar.hpp"

namespace fs = std::filesystem;
using namespace cstar;

namespace {

enum Exit { kOk = 0, kParse = 1, kInvalid = 2, kGuard = 3 };

int log_level() {
    const char* v = std::getenv("CSTAR_LOG");
    if (!v)
        return 0;
    std::string s(v);
    if (s == "debug")
        return 2;
    if (s == "info" || s == "1")
        return 1;
    return 0;
}

void log(int level, const std::string& msg) {
    if (log_level() >= level)
        std::cerr << "[cstar] " << msg << "\n";
}

struct Options {
    std::string out;
    int degree_cap = kDefaultDegreeCap;
    int lnd_bound = kDefaultLndBound;
    std::string weights = "1,-1";
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw ParseError("cannot write " + o.out);
    f << text << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

WeightGrading parse_weights(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ParseError("weights must look like \"1,-1\"");
    auto whole = [&](const std::string& part) {
        Rational q = parse_rational(part);
        if (!is_integral(q))
            throw ParseError("weights must be integers");
        return to_long(q.get_num());
    };
    try {
        return WeightGrading(whole(s.substr(0, comma)), whole(s.substr(comma + 1)));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

// ---------------------------------------------------------------------------
// classify

struct FileOutcome {
    int code = kOk;
    Json body;
};

FileOutcome classify_text(const std::string& text, const Options& o, bool pieces) {
    DpdPresentation p = parse_presentation(text);
    ValidationReport v = validate(p);
    if (!v.valid())
        return {kInvalid, to_json(v)};
    SurfaceReport r = recognize(p);
    Json j = to_json(r);
    if (pieces) {
        Json arr = Json::array();
        try {
            for (const auto& c : graded_components(p, o.degree_cap)) {
                Json gens = Json::array();
                for (const auto& g : c.generators)
                    gens.push_back(to_string(g));
                arr.push_back({{"degree", c.degree}, {"over_base", c.over_base}, {"generators", gens}});
            }
            j["graded_pieces"] = arr;
        } catch (const UnsupportedError& e) {
            j["graded_pieces"] = std::string("unavailable: ") + e.what();
        }
    }
    return {kOk, j};
}

FileOutcome classify_file(const std::string& path, const Options& o, bool pieces) {
    try {
        log(1, "classify " + path);
        return classify_text(read_file(path), o, pieces);
    } catch (const ParseError& e) {
        return {kParse, {{"error", "parse"}, {"message", e.what()}}};
    } catch (const PreconditionError& e) {
        return {kInvalid, {{"error", "invalid"}, {"message", e.what()}}};
    }
}

int cmd_classify(const std::string& input, const Options& o, bool pieces) {
    if (fs::is_directory(input)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(input))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        Json results = Json::array();
        int worst = kOk;
        for (const auto& f : files) {
            FileOutcome r = classify_file(f.string(), o, pieces);
            worst = std::max(worst, r.code);
            const char* status = r.code == kOk ? "ok" : r.code == kParse ? "parse_error" : "invalid";
            results.push_back({{"file", f.filename().string()}, {"status", status}, {"result", r.body}});
        }
        emit(o, Json{{"results", results}}.dump(2));
        return worst;
    }
    FileOutcome r = classify_file(input, o, pieces);
    if (r.code != kOk)
        std::cerr << "classify: " << (r.body.contains("message") ? r.body["message"].get<std::string>()
                                                                   : std::string("validation failed"))
                  << "\n";
    emit(o, r.body.dump(2));
    return r.code;
}

// ---------------------------------------------------------------------------
// toric

ToricData toric_arg(const std::string& s) {
    try {
        return parse_toric(s);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw PreconditionError(e.what());
    }
}

int cmd_toric_isom(const std::string& a, const std::string& b, const Options& o) {
    emit(o, vde_isomorphic(toric_arg(a), toric_arg(b)) ? "true" : "false");
    return kOk;
}

int cmd_toric_basis(const std::string& a, const Options& o) {
    std::string line;
    for (const auto& m : invariant_basis(toric_arg(a)))
        line += (line.empty() ? "" : ", ") + monomial_name(m);
    emit(o, line);
    return kOk;
}

int cmd_toric_extract(const std::string& a, const Options& o) {
    WeightGrading w = parse_weights(o.weights);
    auto ex = extract_dpd(toric_arg(a), w.w0, w.w1, o.degree_cap);
    Json j = to_json(ex.presentation);
    j["t"] = monomial_name(ex.t);
    j["u"] = monomial_name(ex.u);
    j["degree_gcd"] = ex.degree_gcd;
    emit(o, j.dump(2));
    return kOk;
}

int cmd_toric_recognize(const std::string& path, const Options& o) {
    DpdPresentation p = parse_presentation(read_file(path));
    require_valid(p);
    if (!p.is_hyperbolic() || p.curve() != CurveKind::AffineLine || p.pair().sum().is_zero()) {
        emit(o, Json{{"toric", nullptr}}.dump(2));
        return kOk;
    }
    auto t = recognize_toric(p);
    Json j{{"toric", t ? Json(to_string(t->data)) : Json(nullptr)}};
    if (t) {
        j["invariant"] = {{"d", to_string(t->invariant.d)}, {"c", to_string(t->invariant.c)}};
        j["normalized"] = to_json(DpdPresentation::hyperbolic(t->normalized));
        j["witness"] = to_json(t->witness);
    }
    emit(o, j.dump(2));
    return kOk;
}

// ---------------------------------------------------------------------------
// deriv

int cmd_deriv(const std::string& op, const std::vector<std::string>& args, const Options& o) {
    const std::size_t need = (op == "bracket" || op == "conj") ? 2 : 1;
    if (args.size() != need)
        throw ParseError("deriv " + op + " takes " + std::to_string(need) + " derivation argument(s)");
    std::vector<PolyDerivation> ds;
    for (const auto& a : args)
        ds.push_back(parse_derivation(a));
    log(2, "deriv " + op + " on " + to_string(ds.front()));
    if (op == "bracket") {
        emit(o, to_string(bracket(ds[0], ds[1])));
    } else if (op == "conj") {
        emit(o, to_string(conjugate(ds[0], ds[1], o.lnd_bound)));
    } else if (op == "lnd") {
        emit(o, to_string(is_lnd(ds[0], o.lnd_bound)));
    } else if (op == "exp") {
        emit(o, to_string(exp_auto(ds[0], o.lnd_bound)));
    } else if (op == "jordan") {
        JordanParts j = jordan_chevalley(ds[0]);
        emit(o, "semisimple: " + to_string(j.semisimple) + "\nnilpotent: " + to_string(j.nilpotent));
    } else if (op == "normalize") {
        NormalizationResult n = normalize_semisimple(ds[0], parse_weights(o.weights), kDefaultIterationCap,
                                                     o.lnd_bound);
        std::string chain;
        for (const auto& d : n.chain)
            chain += (chain.empty() ? "" : "; ") + to_string(d);
        emit(o, "c = " + (n.c ? to_string(*n.c) : std::string("none")) + "\nchain: " +
                    (chain.empty() ? "(empty)" : chain) + "\nresidual: " + to_string(n.residual) +
                    "\niterations: " + std::to_string(n.iterations));
    } else {
        throw ParseError("unknown deriv operation " + op);
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// equiv

int cmd_equiv(const std::string& a, const std::string& b, const Options& o) {
    DpdPresentation pa = parse_presentation(read_file(a));
    DpdPresentation pb = parse_presentation(read_file(b));
    emit(o, to_json(uniqueness_check(pa, pb)).dump(2));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with graded surface presentations and derivations"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Write the result to this file");
        sub->add_option("--degree-cap", o.degree_cap, "Largest |degree| of graded pieces")->check(CLI::PositiveNumber);
        sub->add_option("--lnd-bound", o.lnd_bound, "Iteration bound for nilpotence tests")->check(CLI::PositiveNumber);
        sub->add_option("--weights", o.weights, "Weights of the two generators, e.g. 1,-1");
    };

    std::string input;
    bool pieces = false;
    auto* classify = app.add_subcommand("classify", "Classify a presentation file or a directory of them");
    classify->add_option("input", input, "Presentation JSON file or directory")->required();
    classify->add_flag("--pieces", pieces, "Include graded pieces up to the degree cap");
    common(classify);

    auto* toric = app.add_subcommand("toric", "Queries about V_{d,e}");
    toric->require_subcommand(1);
    std::string ta, tb;
    auto* isom = toric->add_subcommand("isom", "Isomorphism test");
    isom->add_option("first", ta)->required();
    isom->add_option("second", tb)->required();
    common(isom);
    auto* basis = toric->add_subcommand("basis", "Minimal invariant monomials");
    basis->add_option("vde", ta)->required();
    common(basis);
    auto* extract = toric->add_subcommand("extract", "Presentation from a weight vector");
    extract->add_option("vde", ta)->required();
    common(extract);
    auto* trecog = toric->add_subcommand("recognize", "Recognize a presentation file as V_{d,e}");
    trecog->add_option("input", ta)->required();
    common(trecog);

    auto* deriv = app.add_subcommand("deriv", "Derivation calculus");
    deriv->require_subcommand(1);
    std::vector<std::string> dargs;
    const char* ops[] = {"bracket", "lnd", "exp", "conj", "jordan", "normalize"};
    for (const char* op : ops) {
        auto* sub = deriv->add_subcommand(op);
        sub->add_option("derivations", dargs, "Derivations like \"x dx - y dy\"")->required();
        common(sub);
    }

    auto* equiv = app.add_subcommand("equiv", "Compare two hyperbolic presentations");
    equiv->add_option("first", ta)->required();
    equiv->add_option("second", tb)->required();
    common(equiv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*classify)
            return cmd_classify(input, o, pieces);
        if (*isom)
            return cmd_toric_isom(ta, tb, o);
        if (*basis)
            return cmd_toric_basis(ta, o);
        if (*extract)
            return cmd_toric_extract(ta, o);
        if (*trecog)
            return cmd_toric_recognize(ta, o);
        for (auto* sub : deriv->get_subcommands())
            if (*sub)
                return cmd_deriv(sub->get_name(), dargs, o);
        if (*equiv)
            return cmd_equiv(ta, tb, o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const NormalizationError& e) {
        std::cerr << "normalization guard failed: " << e.what() << "\n";
        return kGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kParse;
}
