#pragma once

#include "ppv/rat.hpp"
#include "ppv/upoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppv {

/// Raised when an x-denominator has an irreducible factor of degree >= 2 over
/// Q(t1..tm), i.e. no root in the parameter field.
class UnsupportedDenominator : public std::domain_error {
public:
    explicit UnsupportedDenominator(std::string factor)
        : std::domain_error("unsupported denominator factor: " + factor), factor_(std::move(factor)) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

/// coeff / (x - root)^order
struct PoleTerm {
    Rat root;
    int order = 1;
    Rat coeff;
};

/// f = polynomial(x) + sum of pole terms + unsplit, with the unsplit part's
/// x-denominator free of roots in Q(t1..tm).
struct PartialFractionForm {
    RingPtr ring;
    UPoly polynomial;
    std::vector<PoleTerm> poles;
    std::optional<Rat> unsplit;

    Rat recombine() const;
    /// Distinct pole locations, in the order they first appear.
    std::vector<Rat> pole_locations() const;
    /// Highest order among terms at `root` (0 if absent).
    int pole_order(const Rat& root) const;
};

PartialFractionForm partial_fractions_x(const Rat& f);

struct HermiteReduction {
    Rat integrated;  // R
    Rat residual;    // f - dR/dx, simple poles only
    std::vector<PoleTerm> residues;  // the order-1 terms of residual
};

/// Strip the polynomial part and every pole of order >= 2 by subtracting an
/// exact x-derivative. Throws UnsupportedDenominator if f has an unsplit part.
HermiteReduction hermite_reduce_x(const Rat& f);

} // namespace ppv
