#pragma once

#include "ppv/groups.hpp"
#include "ppv/partial_fractions.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ppv {

enum class Caveat { UpperBoundOnly, MixedConstantNonconstantResidues, RationalRelationDetected };
std::string to_string(Caveat c);

/// Galois group of a rank-1 equation dy/dx = a (additive) or dy/dx = a y
/// (multiplicative) over Q(t)(x), with the data it was read from.
struct Rank1Answer {
    std::variant<GaSubgroup, GmSubgroup> group;
    /// a = dR/dx + residual; residual has simple poles only.
    Rat integrated;
    std::vector<PoleTerm> residues;
    /// True when the polynomial part or a higher-order pole was present.
    bool exponential_part = false;
    std::vector<Caveat> caveats;

    bool has(Caveat c) const;
    std::string render_group() const;
};

/// dy/dx = a. Requires exactly one parameter.
Rank1Answer additive_group(const Rat& a);
/// dy/dx = a y. Requires exactly one parameter.
Rank1Answer multiplicative_group(const Rat& a);

/// Zariski closure of the answer's group.
ClosureTag classical_pv_group(const Rank1Answer& answer);

} // namespace ppv
