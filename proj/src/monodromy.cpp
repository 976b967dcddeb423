#include "ppv/monodromy.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

namespace ppv {

cd LoopSpec::base_point() const {
    if (kind == Kind::Circle) return center + radius;
    if (points.empty()) throw std::invalid_argument("polyline loop without points");
    return points.front();
}

LoopSpec LoopSpec::circle(cd center, double radius, int segments) {
    LoopSpec l;
    l.center = center;
    l.radius = radius;
    l.segments = segments;
    return l;
}

LoopSpec LoopSpec::polyline(std::vector<cd> points) {
    LoopSpec l;
    l.kind = Kind::Polyline;
    l.points = std::move(points);
    return l;
}

namespace {

std::vector<double> to_doubles(const Poly& p) {
    std::vector<double> out(static_cast<std::size_t>(std::max(p.degree(0), 0)) + 1, 0.0);
    for (const auto& [e, c] : p.terms()) out[e[0]] += c.get_d();
    return out;
}

cd horner(const std::vector<double>& c, cd x) {
    cd acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

std::vector<cd> polynomial_roots(const std::vector<double>& c) {
    std::size_t deg = c.size() - 1;
    while (deg > 0 && c[deg] == 0.0) --deg;
    if (deg == 0) return {};
    CMatrix comp = CMatrix::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
    for (std::size_t i = 1; i < deg; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < deg; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
    std::vector<cd> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

double distance_to_segment(cd p, cd a, cd b) {
    cd d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double s = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + s * d));
}

double loop_distance(const LoopSpec& loop, cd p) {
    if (loop.kind == LoopSpec::Kind::Circle) return std::abs(std::abs(p - loop.center) - loop.radius);
    double best = INFINITY;
    for (std::size_t i = 0; i < loop.points.size(); ++i)
        best = std::min(best, distance_to_segment(p, loop.points[i], loop.points[(i + 1) % loop.points.size()]));
    return best;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// One Dormand-Prince 5(4) integration of dW/ds = F(s) W over [0, 1].
template <class F>
CMatrix dopri(const F& rhs, CMatrix w, double tol) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                        e6 = 22.0 / 525, e7 = -1.0 / 40;

    double s = 0.0, h = 0.05;
    const double h_min = 1e-13;
    CMatrix k1 = rhs(0.0) * w;
    for (long steps = 0; s < 1.0; ++steps) {
        if (steps > 2000000) throw PathTooClose("integration did not finish; the path passes too close to a pole");
        if (s + h > 1.0) h = 1.0 - s;
        CMatrix k2 = rhs(s + c2 * h) * (w + h * (a21 * k1));
        CMatrix k3 = rhs(s + c3 * h) * (w + h * (a31 * k1 + a32 * k2));
        CMatrix k4 = rhs(s + c4 * h) * (w + h * (a41 * k1 + a42 * k2 + a43 * k3));
        CMatrix k5 = rhs(s + c5 * h) * (w + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        CMatrix k6 = rhs(s + h) * (w + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        CMatrix next = w + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        CMatrix k7 = rhs(s + h) * next;
        CMatrix err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double scale = tol * (1.0 + std::max(max_abs(w), max_abs(next)));
        double ratio = max_abs(err) / scale;
        if (!std::isfinite(ratio)) ratio = 1e10;
        if (ratio <= 1.0) {
            s += h;
            w = std::move(next);
            k1 = std::move(k7);
        }
        double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
        h *= factor;
        if (h < h_min && s < 1.0) throw PathTooClose("step size collapsed; the path passes too close to a pole");
    }
    return w;
}

} // namespace

NumericMatrix::NumericMatrix(const RingPtr& ring, const RatMatrix& a, const ParamPoint& tau) : n_(a.rows()) {
    if (tau.size() != ring->param_count())
        throw EvalError("expected " + std::to_string(ring->param_count()) + " parameter values");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rat v = a(i, j);
            try {
                for (std::size_t p = 0; p < tau.size(); ++p) v = v.substitute(p + 1, Rat(tau[p]));
            } catch (const DivisionByZero&) {
                throw EvalError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is undefined at these parameter values");
            }
            Entry e{to_doubles(v.num()), to_doubles(v.den())};
            for (auto r : polynomial_roots(e.den)) poles_.push_back(r);
            entries_.push_back(std::move(e));
        }
}

CMatrix NumericMatrix::operator()(cd x) const {
    const auto n = static_cast<Eigen::Index>(n_);
    CMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const Entry& e = entries_[static_cast<std::size_t>(i * n + j)];
            cd den = horner(e.den, x);
            if (den == 0.0) throw EvalError("matrix evaluated at a pole");
            m(i, j) = horner(e.num, x) / den;
        }
    return m;
}

CMatrix integrate_transfer(const NumericMatrix& a, const LoopSpec& loop, double tol) {
    if (loop.orientation != 1 && loop.orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    for (const auto& p : a.poles())
        if (loop_distance(loop, p) < loop.clearance)
            throw PathTooClose("loop passes within " + std::to_string(loop.clearance) + " of a pole");
    const auto n = static_cast<Eigen::Index>(a.size());
    CMatrix w = CMatrix::Identity(n, n);
    if (loop.kind == LoopSpec::Kind::Circle) {
        if (loop.segments < 1) throw std::invalid_argument("segment count must be positive");
        if (!(loop.radius > 0.0)) throw std::invalid_argument("radius must be positive");
        const double span = 2.0 * std::numbers::pi / loop.segments * loop.orientation;
        for (int k = 0; k < loop.segments; ++k) {
            double theta0 = span * k;
            auto rhs = [&](double s) {
                cd e = std::polar(1.0, theta0 + span * s);
                cd x = loop.center + loop.radius * e;
                cd dx = cd(0.0, span) * loop.radius * e;
                return CMatrix(a(x) * dx);
            };
            w = dopri(rhs, w, tol);
        }
    } else {
        std::vector<cd> pts = loop.points;
        if (pts.size() < 2) throw std::invalid_argument("polyline loop needs at least two points");
        if (loop.orientation < 0) std::reverse(pts.begin() + 1, pts.end());
        for (std::size_t k = 0; k < pts.size(); ++k) {
            cd from = pts[k], to = pts[(k + 1) % pts.size()];
            cd d = to - from;
            auto rhs = [&](double s) { return CMatrix(a(from + s * d) * d); };
            w = dopri(rhs, w, tol);
        }
    }
    return w;
}

CMatrix integrate_transfer(const RingPtr& ring, const RatMatrix& a, const ParamPoint& tau, const LoopSpec& loop,
                           double tol) {
    return integrate_transfer(NumericMatrix(ring, a, tau), loop, tol);
}

std::vector<cd> charpoly_coefficients(const CMatrix& m) {
    // Faddeev-LeVerrier
    const auto n = m.rows();
    std::vector<cd> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1.0;
    CMatrix mk = CMatrix::Zero(n, n);
    const CMatrix id = CMatrix::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk = m * mk + c[static_cast<std::size_t>(n - k + 1)] * id;
        c[static_cast<std::size_t>(n - k)] = -(m * mk).trace() / static_cast<double>(k);
    }
    c.pop_back();
    return c;
}

std::string to_string(MonodromyReport::Verdict v) {
    return v == MonodromyReport::Verdict::ConsistentWithIsomonodromy ? "ConsistentWithIsomonodromy"
                                                                     : "VariesWithParameter";
}

std::string to_string(CrossCheck::Agreement a) {
    switch (a) {
    case CrossCheck::Agreement::Agree: return "agree";
    case CrossCheck::Agreement::Defect: return "defect";
    case CrossCheck::Agreement::Inconclusive: return "inconclusive";
    }
    return "";
}

std::vector<ParamPoint> default_grid(std::size_t param_count) {
    const std::vector<mpq_class> values = {mpq_class(3, 10), mpq_class(3, 5), mpq_class(9, 10)};
    std::vector<ParamPoint> grid{ParamPoint{}};
    for (std::size_t p = 0; p < param_count; ++p) {
        std::vector<ParamPoint> next;
        for (const auto& g : grid)
            for (const auto& v : values) {
                ParamPoint q = g;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        grid = std::move(next);
    }
    return grid;
}

MonodromyReport monodromy_scan(const RingPtr& ring, const RatMatrix& a, const LoopSpec& loop,
                               const std::vector<ParamPoint>& grid, double tol, double eps) {
    if (grid.empty()) throw std::invalid_argument("empty parameter grid");
    std::vector<std::future<GridResult>> jobs;
    for (const auto& tau : grid)
        jobs.push_back(std::async(std::launch::async, [&, tau] {
            GridResult r;
            r.tau = tau;
            try {
                CMatrix m = integrate_transfer(ring, a, tau, loop, tol);
                r.invariants = charpoly_coefficients(m);
                r.monodromy = std::move(m);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
            return r;
        }));
    MonodromyReport rep;
    rep.eps = eps;
    for (auto& j : jobs) rep.grid.push_back(j.get());

    std::vector<const GridResult*> ok;
    for (const auto& r : rep.grid)
        if (r.monodromy) ok.push_back(&r);
    if (ok.empty()) throw std::runtime_error("monodromy failed at every grid point: " + rep.grid.front().error);
    double norm = 1.0;
    for (const auto* r : ok) {
        double s = 0.0;
        for (const auto& c : r->invariants) s += std::norm(c);
        norm = std::max(norm, std::sqrt(s));
    }
    for (std::size_t i = 0; i < ok.size(); ++i)
        for (std::size_t j = i + 1; j < ok.size(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < ok[i]->invariants.size(); ++k)
                s += std::norm(ok[i]->invariants[k] - ok[j]->invariants[k]);
            rep.spread = std::max(rep.spread, std::sqrt(s));
        }
    rep.verdict = rep.spread <= eps * norm ? MonodromyReport::Verdict::ConsistentWithIsomonodromy
                                           : MonodromyReport::Verdict::VariesWithParameter;
    return rep;
}

CrossCheck cross_check(const RingPtr& ring, const RatMatrix& a, const AnsatzBounds& bounds, const LoopSpec& loop,
                       const std::vector<ParamPoint>& grid, double tol, double eps) {
    auto symbolic = isomonodromy_verdict(ring, a, bounds);
    auto numeric = monodromy_scan(ring, a, loop, grid, tol, eps);
    bool iso = symbolic.kind == IsomonodromyVerdict::Kind::IsomonodromicWithinAnsatz;
    bool constant = numeric.verdict == MonodromyReport::Verdict::ConsistentWithIsomonodromy;
    CrossCheck::Agreement agreement = iso == constant ? CrossCheck::Agreement::Agree
                                      : iso           ? CrossCheck::Agreement::Defect
                                                      : CrossCheck::Agreement::Inconclusive;
    return {std::move(symbolic), std::move(numeric), agreement};
}

} // namespace ppv
