#pragma once

#include "ppv/matrix.hpp"
#include "ppv/parser.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ppv {

/// dY/dv = A_v Y for the main variable and any subset of the parameters.
/// Matrices are keyed by variable index in the ring (0 is x).
struct ParamLinearSystem {
    RingPtr ring;
    std::size_t n = 0;
    std::map<std::size_t, RatMatrix> matrices;

    static ParamLinearSystem from_spec(const SystemSpec& spec);
    const RatMatrix& main_matrix() const;
    /// Parameter indices 1..m.
    std::vector<std::size_t> param_indices() const;
};

/// Search space for completions B_h of a system: poles at the x-poles of A
/// (order raised by `pole_headroom`) and at `extra_poles` (order
/// `pole_headroom`), plus a polynomial part of degree <= `poly_degree`.
struct AnsatzBounds {
    int pole_headroom = 1;
    /// Unset means one more than the x-degree of A's polynomial part.
    std::optional<int> poly_degree;
    std::vector<Rat> extra_poles;
};

/// Polynomial degree used when bounds leave it open.
int default_poly_degree(const RatMatrix& a);

struct Violation {
    std::size_t i, j;
    RatMatrix residual;
};

struct IntegrabilityReport {
    enum class Verdict { Integrable, ViolationsFound, NotFoundWithinAnsatz };
    Verdict verdict = Verdict::Integrable;
    /// (parameter index, B_h) when the solver succeeded.
    std::vector<std::pair<std::size_t, RatMatrix>> witnesses;
    std::vector<Violation> violations;
    std::string note;
};

std::string to_string(IntegrabilityReport::Verdict v);

/// d_i A_j - d_j A_i - (A_i A_j - A_j A_i) for each pair i < j of the
/// system's derivations, or of `pairs` when given.
RatMatrix integrability_residual(const ParamLinearSystem& sys, std::size_t i, std::size_t j);
IntegrabilityReport check_integrability(const ParamLinearSystem& sys);
IntegrabilityReport check_integrability(const ParamLinearSystem& sys,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Look for rational B_h with dB_h/dx - dA/dt_h = A B_h - B_h A for every
/// listed parameter, inside the ansatz. A NotFoundWithinAnsatz outcome only
/// says the bounded search failed. Throws UnsupportedDenominator when an
/// entry of A has a denominator that does not split over Q(t1..tm).
IntegrabilityReport solve_complete_integrability(const RingPtr& ring, const RatMatrix& a,
                                                 const std::vector<std::size_t>& params,
                                                 const AnsatzBounds& bounds = {});

/// Relabels the solver outcome. The rational ansatz is complete only when
/// the system has regular singular points.
struct IsomonodromyVerdict {
    enum class Kind { IsomonodromicWithinAnsatz, NotFoundWithinAnsatz };
    Kind kind;
    IntegrabilityReport report;
};
IsomonodromyVerdict isomonodromy_verdict(const RingPtr& ring, const RatMatrix& a, const AnsatzBounds& bounds = {});
std::string to_string(IsomonodromyVerdict::Kind k);

} // namespace ppv
