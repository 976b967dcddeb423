#pragma once

#include "ppv/integrability.hpp"

#include <Eigen/Dense>
#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppv {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Integration path too close to a pole (clearance violated or step size
/// collapsed).
struct PathTooClose : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// The matrix cannot be evaluated at the given parameter values.
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed loop in the x-plane: a circle split into `segments` arcs, or a
/// polygon through `points` (closed back to the first point).
struct LoopSpec {
    enum class Kind { Circle, Polyline };
    Kind kind = Kind::Circle;
    cd center{0.0, 0.0};
    double radius = 1.0;
    int segments = 64;
    std::vector<cd> points;
    /// +1 counterclockwise (for circles) or in the listed order; -1 reversed.
    int orientation = 1;
    double clearance = 1e-3;

    cd base_point() const;
    static LoopSpec circle(cd center, double radius, int segments = 64);
    static LoopSpec polyline(std::vector<cd> points);
};

/// Parameter values, one exact rational per parameter t1..tm.
using ParamPoint = std::vector<mpq_class>;

/// A with the parameters fixed, as complex rational functions of x.
class NumericMatrix {
public:
    NumericMatrix(const RingPtr& ring, const RatMatrix& a, const ParamPoint& tau);
    std::size_t size() const { return n_; }
    CMatrix operator()(cd x) const;
    /// Finite x-poles of any entry.
    const std::vector<cd>& poles() const { return poles_; }

private:
    struct Entry {
        std::vector<double> num, den;  // lowest degree first
    };
    std::size_t n_;
    std::vector<Entry> entries_;
    std::vector<cd> poles_;
};

/// Transfer matrix of dW/dx = A W once around the loop, starting from the
/// identity at the base point.
CMatrix integrate_transfer(const NumericMatrix& a, const LoopSpec& loop, double tol = 1e-9);
CMatrix integrate_transfer(const RingPtr& ring, const RatMatrix& a, const ParamPoint& tau, const LoopSpec& loop,
                           double tol = 1e-9);

/// Coefficients c_0..c_{n-1} of det(z I - M) = z^n + c_{n-1} z^{n-1} + ... + c_0.
std::vector<cd> charpoly_coefficients(const CMatrix& m);

struct GridResult {
    ParamPoint tau;
    std::optional<CMatrix> monodromy;
    std::vector<cd> invariants;
    std::string error;
};

struct MonodromyReport {
    enum class Verdict { ConsistentWithIsomonodromy, VariesWithParameter };
    std::vector<GridResult> grid;
    double spread = 0.0;
    double eps = 1e-6;
    Verdict verdict = Verdict::ConsistentWithIsomonodromy;
};

std::string to_string(MonodromyReport::Verdict v);

/// Each parameter in {3/10, 3/5, 9/10}, all combinations.
std::vector<ParamPoint> default_grid(std::size_t param_count);

/// Monodromy at every grid point (evaluated concurrently, reported in grid
/// order). Spread is the largest distance between invariant vectors; the
/// verdict compares it with eps * max(1, largest invariant norm). Grid points
/// that fail are recorded; throws only when all fail.
MonodromyReport monodromy_scan(const RingPtr& ring, const RatMatrix& a, const LoopSpec& loop,
                               const std::vector<ParamPoint>& grid, double tol = 1e-9, double eps = 1e-6);

struct CrossCheck {
    enum class Agreement { Agree, Defect, Inconclusive };
    IsomonodromyVerdict symbolic;
    MonodromyReport numeric;
    Agreement agreement;
};

std::string to_string(CrossCheck::Agreement a);

CrossCheck cross_check(const RingPtr& ring, const RatMatrix& a, const AnsatzBounds& bounds, const LoopSpec& loop,
                       const std::vector<ParamPoint>& grid, double tol = 1e-9, double eps = 1e-6);

} // namespace ppv
