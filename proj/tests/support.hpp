#pragma once

#include "ppv/parser.hpp"
#include "ppv/rat.hpp"

#include <random>
#include <string>
#include <vector>

namespace ppv::test {

inline Rat R(const std::string& s, const RingPtr& ring) { return parse_expr(s, ring); }

/// Random small rational function over `ring`, built from random integer
/// polynomials of bounded degree in every variable.
class RatGen {
public:
    RatGen(RingPtr ring, unsigned seed, int max_deg = 2, int coeff = 4)
        : ring_(std::move(ring)), rng_(seed), max_deg_(max_deg), coeff_(coeff) {}

    Poly poly(bool allow_x = true) {
        Poly p;
        std::uniform_int_distribution<int> terms(1, 3), c(-coeff_, coeff_), d(0, max_deg_);
        int n = terms(rng_);
        for (int i = 0; i < n; ++i) {
            Exponents e{};
            for (std::size_t v = allow_x ? 0 : 1; v < ring_->size(); ++v) e[v] = static_cast<std::uint16_t>(d(rng_));
            p += Poly::monomial(mpq_class(c(rng_)), e);
        }
        return p;
    }

    Rat rat(bool allow_x = true) {
        Poly den;
        do den = poly(allow_x);
        while (den.is_zero());
        return Rat(ring_, poly(allow_x), den);
    }

    Rat nonzero(bool allow_x = true) {
        Rat r;
        do r = rat(allow_x);
        while (r.is_zero());
        return r;
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937& engine() { return rng_; }

private:
    RingPtr ring_;
    std::mt19937 rng_;
    int max_deg_, coeff_;
};

} // namespace ppv::test
