#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstar/deriv/derivation.hpp"
#include "cstar/deriv/ring_map.hpp"

namespace cstar {

enum class NormalizationFailure {
    NegativeComponent,
    TopNotLnd,
    BracketCondition,
    DegreeNotDecreasing,
    IterationCap,
    Resonance,
};

inline const char* to_string(NormalizationFailure f) {
    switch (f) {
        case NormalizationFailure::NegativeComponent: return "negative_component";
        case NormalizationFailure::TopNotLnd: return "top_not_lnd";
        case NormalizationFailure::BracketCondition: return "bracket_condition";
        case NormalizationFailure::DegreeNotDecreasing: return "degree_not_decreasing";
        case NormalizationFailure::IterationCap: return "iteration_cap";
        case NormalizationFailure::Resonance: return "resonance";
    }
    return "?";
}

class NormalizationError : public std::runtime_error {
public:
    NormalizationError(NormalizationFailure kind, int iteration, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + " at step " + std::to_string(iteration) + ": " + detail),
          kind_(kind),
          iteration_(iteration) {}

    NormalizationFailure kind() const { return kind_; }
    int iteration() const { return iteration_; }

private:
    NormalizationFailure kind_;
    int iteration_;
};

/// residual = exp(-chain[n-1]) ... exp(-chain[0]) input exp(chain[0]) ... exp(chain[n-1]).
/// c is set when the residual is c times the reference grading derivation.
struct NormalizationResult {
    std::optional<Rational> c;
    std::vector<PolyDerivation> chain;
    PolyDerivation residual;
    int iterations = 0;
};

inline constexpr int kDefaultIterationCap = 64;

namespace detail {

/// Diagonal weights (l0, l1) when d = l0 g0 d/dg0 + l1 g1 d/dg1.
inline std::optional<std::array<Rational, 2>> diagonal_weights(const PolyDerivation& d) {
    std::array<Rational, 2> w;
    for (int i = 0; i < 2; ++i) {
        const Poly2& img = d.image(i);
        Exponent e = i == 0 ? Exponent{1, 0} : Exponent{0, 1};
        if (img.size() > 1 || (img.size() == 1 && img.terms().begin()->first != e))
            return std::nullopt;
        w[i] = img.coeff(e);
    }
    return w;
}

/// Solves [d0, p] = top termwise for diagonal d0; the eigenvalue of a term
/// m d/dg_i is (weight of m) - l_i. Without a diagonal d0, falls back to top / l.
inline PolyDerivation solve_homological(const std::optional<PolyDerivation>& d0, const PolyDerivation& top,
                                        long l, int iteration) {
    auto w = d0 ? diagonal_weights(*d0) : std::optional<std::array<Rational, 2>>(std::array<Rational, 2>{});
    if (!w)
        return top * Rational(1, l);
    Poly2 images[2] = {Poly2(top.kind()), Poly2(top.kind())};
    for (int i = 0; i < 2; ++i) {
        for (const auto& [e, c] : top.image(i).terms()) {
            Rational ev = (*w)[0] * e.a + (*w)[1] * e.b - (*w)[i];
            if (ev == 0)
                throw NormalizationError(NormalizationFailure::Resonance, iteration,
                                         "degree-0 part does not act invertibly on " + to_string(top));
            images[i].add_term(e, c / ev);
        }
    }
    return {images[0], images[1]};
}

}  // namespace detail

/// Lowers the top homogeneous component step by step until only degree 0 is
/// left. Every hypothesis used by the argument is checked at each step.
inline NormalizationResult normalize_semisimple(const PolyDerivation& input, const WeightGrading& reference,
                                                int iteration_cap = kDefaultIterationCap,
                                                int lnd_bound = kDefaultLndBound) {
    NormalizationResult out;
    PolyDerivation current = input;
    std::optional<long> previous_top;
    for (;;) {
        auto comps = homogeneous_components(current, reference);
        if (!comps.empty() && comps.begin()->first < 0)
            throw NormalizationError(NormalizationFailure::NegativeComponent, out.iterations,
                                     "component of degree " + std::to_string(comps.begin()->first) + ": " +
                                         to_string(comps.begin()->second));
        if (comps.empty() || comps.rbegin()->first == 0)
            break;
        const long l = comps.rbegin()->first;
        if (previous_top && l >= *previous_top)
            throw NormalizationError(NormalizationFailure::DegreeNotDecreasing, out.iterations,
                                     "top degree " + std::to_string(l) + " after " + std::to_string(*previous_top));
        if (out.iterations >= iteration_cap)
            throw NormalizationError(NormalizationFailure::IterationCap, out.iterations,
                                     "top degree still " + std::to_string(l));
        const PolyDerivation& top = comps.rbegin()->second;
        if (!is_lnd(top, lnd_bound).nilpotent)
            throw NormalizationError(NormalizationFailure::TopNotLnd, out.iterations,
                                     "top component " + to_string(top) + " not nilpotent within " +
                                         std::to_string(lnd_bound));
        std::optional<PolyDerivation> d0;
        if (auto it = comps.find(0); it != comps.end())
            d0 = it->second;
        PolyDerivation step = detail::solve_homological(d0, top, l, out.iterations);
        if (!is_lnd(step, lnd_bound).nilpotent)
            throw NormalizationError(NormalizationFailure::TopNotLnd, out.iterations,
                                     "conjugator " + to_string(step) + " not nilpotent");
        if (!bracket(bracket(current, step), step).is_zero())
            throw NormalizationError(NormalizationFailure::BracketCondition, out.iterations,
                                     "[[d, p], p] != 0 for p = " + to_string(step));
        PolyDerivation conjugator = -step;
        current = conjugate(current, conjugator, lnd_bound);
        out.chain.push_back(std::move(conjugator));
        previous_top = l;
        ++out.iterations;
    }
    out.residual = current;
    PolyDerivation ref = grading_derivation(reference, current.kind());
    int pivot = reference.w0 != 0 ? 0 : 1;
    Exponent e = pivot == 0 ? Exponent{1, 0} : Exponent{0, 1};
    Rational c = current.image(pivot).coeff(e) / Rational(reference.weight(pivot));
    if (current == ref * c)
        out.c = c;
    return out;
}

/// The automorphism exp(chain[0]) o ... o exp(chain[n-1]) and its inverse,
/// so that residual = phi^-1 o input o phi.
inline std::pair<RingMap, RingMap> chain_automorphism(const std::vector<PolyDerivation>& chain, RingKind kind,
                                                      int lnd_bound = kDefaultLndBound) {
    RingMap phi = RingMap::identity(kind);
    RingMap phi_inv = RingMap::identity(kind);
    for (const auto& d : chain) {
        phi = RingMap::compose(phi, exp_auto(d, lnd_bound));
        phi_inv = RingMap::compose(exp_auto(-d, lnd_bound), phi_inv);
    }
    return {phi, phi_inv};
}

}  // namespace cstar
