#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cstar/errors.hpp"
#include "cstar/exactmath/rational.hpp"

namespace cstar {

struct RootFactor {
    Rational root;
    int multiplicity = 0;

    friend bool operator==(const RootFactor& l, const RootFactor& r) {
        return l.root == r.root && l.multiplicity == r.multiplicity;
    }
};

/// A nonzero rational function in one variable t, stored as
/// scalar * prod (t - root)^multiplicity with distinct roots.
class FactoredRational {
public:
    FactoredRational() = default;

    explicit FactoredRational(Rational scalar, std::vector<RootFactor> factors = {})
        : scalar_(std::move(scalar)) {
        if (scalar_ == 0)
            throw PreconditionError("factored rational with zero scalar");
        for (auto& f : factors)
            multiply_factor(f.root, f.multiplicity);
    }

    /// t - root
    static FactoredRational linear(const Rational& root, int multiplicity = 1) {
        return FactoredRational(1, {{root, multiplicity}});
    }

    const Rational& scalar() const { return scalar_; }
    const std::vector<RootFactor>& factors() const { return factors_; }

    int multiplicity_at(const Rational& root) const {
        auto it = find(root);
        return (it != factors_.end() && it->root == root) ? it->multiplicity : 0;
    }

    bool is_constant() const { return factors_.empty(); }

    /// True when every multiplicity is non-negative.
    bool is_polynomial() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const RootFactor& f) { return f.multiplicity >= 0; });
    }

    /// Degree as a rational function: sum of multiplicities.
    long degree() const {
        long d = 0;
        for (const auto& f : factors_)
            d += f.multiplicity;
        return d;
    }

    FactoredRational& operator*=(const FactoredRational& o) {
        scalar_ *= o.scalar_;
        for (const auto& f : o.factors_)
            multiply_factor(f.root, f.multiplicity);
        return *this;
    }

    friend FactoredRational operator*(FactoredRational l, const FactoredRational& r) { return l *= r; }

    FactoredRational inverse() const { return pow(-1); }

    FactoredRational pow(int n) const {
        FactoredRational out;
        out.scalar_ = pow_of(scalar_, n);
        for (const auto& f : factors_)
            out.factors_.push_back({f.root, f.multiplicity * n});
        if (n == 0)
            out.factors_.clear();
        return out;
    }

    friend FactoredRational operator/(const FactoredRational& l, const FactoredRational& r) {
        return l * r.inverse();
    }

    friend bool operator==(const FactoredRational& l, const FactoredRational& r) {
        return l.scalar_ == r.scalar_ && l.factors_ == r.factors_;
    }

    /// Exact value at a point that is neither a root nor a pole.
    Rational evaluate(const Rational& t) const {
        Rational v = scalar_;
        for (const auto& f : factors_) {
            if (f.root == t)
                throw PreconditionError("evaluation at a root or pole");
            v *= pow_of(t - f.root, f.multiplicity);
        }
        return v;
    }

private:
    std::vector<RootFactor>::const_iterator find(const Rational& root) const {
        return std::lower_bound(factors_.begin(), factors_.end(), root,
                                [](const RootFactor& f, const Rational& r) { return f.root < r; });
    }

    void multiply_factor(const Rational& root, int multiplicity) {
        if (multiplicity == 0)
            return;
        auto it = std::lower_bound(factors_.begin(), factors_.end(), root,
                                   [](const RootFactor& f, const Rational& r) { return f.root < r; });
        if (it != factors_.end() && it->root == root) {
            it->multiplicity += multiplicity;
            if (it->multiplicity == 0)
                factors_.erase(it);
        } else {
            factors_.insert(it, {root, multiplicity});
        }
    }

    Rational scalar_ = 1;
    std::vector<RootFactor> factors_;  // sorted by root
};

/// e.g. "(t - 1)(t + 1)", "1/2 t^-1", "5".
inline std::string to_string(const FactoredRational& f) {
    std::string out;
    bool unit_scalar = f.scalar() == 1 && !f.is_constant();
    if (!unit_scalar)
        out = to_string(f.scalar());
    for (const auto& [root, mult] : f.factors()) {
        std::string base;
        if (root == 0)
            base = "t";
        else if (root > 0)
            base = "(t - " + to_string(root) + ")";
        else
            base = "(t + " + to_string(Rational(-root)) + ")";
        if (!out.empty() && root == 0)
            out += " ";
        out += base;
        if (mult != 1)
            out += "^" + std::to_string(mult);
    }
    return out;
}

}  // namespace cstar
