#pragma once

#include "ppv/integrability.hpp"

#include <string>
#include <vector>

namespace ppv {

/// Outcome of the partial classification of a traceless 2x2 system
/// dY/dx = A Y with one parameter.
struct TrichotomyVerdict {
    enum class Kind { CompletelyIntegrable, ReducibleSolvable, GenericSL2Candidate, Unknown };
    Kind kind = Kind::Unknown;
    /// CompletelyIntegrable: (parameter index, B).
    std::vector<std::pair<std::size_t, RatMatrix>> witnesses;
    /// ReducibleSolvable: polynomial v and rational lambda with
    /// dv/dx = A v - lambda v, so exp(int lambda) v solves the system.
    std::vector<Rat> eigen_line;
    Rat exponent;
    /// Subsearches that were skipped.
    std::vector<std::string> reasons;
};

std::string to_string(TrichotomyVerdict::Kind k);

/// Pipeline: integrability completion search, then a search for a rational
/// eigen-line with exponents taken from the residue matrices at simple poles
/// and the constant part at infinity. When A does not involve the parameter,
/// a completion (B = 0) always exists and carries no information, so the
/// eigen-line search runs first.
TrichotomyVerdict classify_2x2(const RingPtr& ring, const RatMatrix& a, const AnsatzBounds& bounds = {},
                               int degree_cap = 5);

/// Re-check a verdict's witness by exact substitution.
bool verify_verdict(const RingPtr& ring, const RatMatrix& a, const TrichotomyVerdict& v);

std::string interpret_verdict(const TrichotomyVerdict& v);

} // namespace ppv
