#pragma once

#include <map>
#include <optional>
#include <string>

#include "cstar/deriv/derivation.hpp"

namespace cstar {

/// Ring endomorphism given by the images of the generators. On the Laurent
/// ring the image of u^-1 is carried explicitly.
class RingMap {
public:
    RingMap(Poly2 first, Poly2 second, std::optional<Poly2> inverse_second = std::nullopt)
        : kind_(first.kind()), images_{std::move(first), std::move(second)}, inv_(std::move(inverse_second)) {
        if (images_[1].kind() != kind_)
            throw PreconditionError("ring map images from different rings");
        if (kind_ == RingKind::Laurent && !inv_)
            throw PreconditionError("Laurent ring map needs the image of u^-1");
    }

    static RingMap identity(RingKind kind) {
        std::optional<Poly2> inv;
        if (kind == RingKind::Laurent)
            inv = Poly2::monomial(kind, 1, 0, -1);
        return {Poly2::generator(kind, 0), Poly2::generator(kind, 1), inv};
    }

    RingKind kind() const { return kind_; }
    const Poly2& image(int index) const { return images_[index]; }
    const std::optional<Poly2>& inverse_image() const { return inv_; }

    Poly2 operator()(const Poly2& f) const {
        if (f.kind() != kind_)
            throw PreconditionError("ring map applied to a foreign polynomial");
        std::map<int, Poly2> pow0, pow1;
        auto power = [&](std::map<int, Poly2>& cache, int n) -> const Poly2& {
            auto it = cache.find(n);
            if (it != cache.end())
                return it->second;
            const Poly2& base = (&cache == &pow0) ? images_[0] : (n >= 0 ? images_[1] : *inv_);
            return cache.emplace(n, base.pow(static_cast<unsigned>(n >= 0 ? n : -n))).first->second;
        };
        Poly2 out(kind_);
        for (const auto& [e, c] : f.terms()) {
            if (e.b < 0 && !inv_)
                throw PreconditionError("negative power without an inverse image");
            out += (power(pow0, e.a) * power(pow1, e.b)) * c;
        }
        return out;
    }

    /// (outer o inner)(g) = outer(inner(g)).
    static RingMap compose(const RingMap& outer, const RingMap& inner) {
        std::optional<Poly2> inv;
        if (inner.inv_)
            inv = outer(*inner.inv_);
        return {outer(inner.images_[0]), outer(inner.images_[1]), inv};
    }

    friend bool operator==(const RingMap& l, const RingMap& r) {
        return l.kind_ == r.kind_ && l.images_[0] == r.images_[0] && l.images_[1] == r.images_[1] &&
               l.inv_ == r.inv_;
    }

private:
    RingKind kind_;
    Poly2 images_[2];
    std::optional<Poly2> inv_;
};

inline std::string to_string(const RingMap& m) {
    std::string out;
    for (int i = 0; i < 2; ++i) {
        out += std::string(variable_name(m.kind(), i)) + " -> " + to_string(m.image(i));
        if (i == 0)
            out += "\n";
    }
    if (m.inverse_image())
        out += "\nu^-1 -> " + to_string(*m.inverse_image());
    return out;
}

namespace detail {

/// sum_k d^k(g) / k!, which terminates for locally nilpotent d.
inline Poly2 exp_series(const PolyDerivation& d, const Poly2& g, int bound) {
    Poly2 sum = g;
    Poly2 term = g;
    for (int k = 1; k <= bound; ++k) {
        term = d(term) * Rational(1, k);
        if (term.is_zero())
            return sum;
        sum += term;
    }
    throw PreconditionError("exponential series did not terminate within the bound");
}

inline void require_lnd(const PolyDerivation& d, int bound, const char* what) {
    if (!is_lnd(d, bound).nilpotent)
        throw PreconditionError(std::string(what) + " requires a locally nilpotent derivation (bound " +
                                std::to_string(bound) + ")");
}

}  // namespace detail

/// exp(d) as a ring automorphism; its inverse is exp(-d).
inline RingMap exp_auto(const PolyDerivation& d, int bound = kDefaultLndBound) {
    detail::require_lnd(d, bound, "exp_auto");
    auto gens = d.generators();
    std::optional<Poly2> inv;
    if (d.kind() == RingKind::Laurent)
        inv = detail::exp_series(d, gens[2], bound);
    return {detail::exp_series(d, gens[0], bound), detail::exp_series(d, gens[1], bound), inv};
}

/// The derivation phi_inv o delta o phi for an automorphism phi with inverse phi_inv.
inline PolyDerivation conjugate_by(const PolyDerivation& delta, const RingMap& phi, const RingMap& phi_inv) {
    return {phi_inv(delta(phi.image(0))), phi_inv(delta(phi.image(1)))};
}

/// exp(-d) o delta o exp(d), computed exactly on generators.
inline PolyDerivation conjugate(const PolyDerivation& delta, const PolyDerivation& d,
                                int bound = kDefaultLndBound) {
    if (delta.kind() != d.kind())
        throw PreconditionError("conjugation across different rings");
    if (d.is_zero())
        return delta;
    return conjugate_by(delta, exp_auto(d, bound), exp_auto(-d, bound));
}

}  // namespace cstar
