#include "ppv/integrability.hpp"

#include "ppv/partial_fractions.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace ppv {

ParamLinearSystem ParamLinearSystem::from_spec(const SystemSpec& spec) {
    ParamLinearSystem sys;
    sys.ring = spec.ring();
    sys.n = spec.n;
    for (const auto& [name, rows] : spec.matrices) sys.matrices.emplace(sys.ring->require(name), from_strings(rows, sys.ring));
    return sys;
}

const RatMatrix& ParamLinearSystem::main_matrix() const {
    auto it = matrices.find(0);
    if (it == matrices.end()) throw std::invalid_argument("system has no matrix for the main variable");
    return it->second;
}

std::vector<std::size_t> ParamLinearSystem::param_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < ring->size(); ++i) out.push_back(i);
    return out;
}

std::string to_string(IntegrabilityReport::Verdict v) {
    switch (v) {
    case IntegrabilityReport::Verdict::Integrable: return "Integrable";
    case IntegrabilityReport::Verdict::ViolationsFound: return "ViolationsFound";
    case IntegrabilityReport::Verdict::NotFoundWithinAnsatz: return "NotFoundWithinAnsatz";
    }
    return "";
}

std::string to_string(IsomonodromyVerdict::Kind k) {
    return k == IsomonodromyVerdict::Kind::IsomonodromicWithinAnsatz ? "IsomonodromicWithinAnsatz"
                                                                     : "NotFoundWithinAnsatz";
}

RatMatrix integrability_residual(const ParamLinearSystem& sys, std::size_t i, std::size_t j) {
    auto ai = sys.matrices.find(i), aj = sys.matrices.find(j);
    if (ai == sys.matrices.end() || aj == sys.matrices.end())
    {
        std::size_t missing = ai == sys.matrices.end() ? i : j;
        throw std::invalid_argument("no matrix for derivation " + (missing < sys.ring->size()
                                                                       ? "'" + sys.ring->name(missing) + "'"
                                                                       : "#" + std::to_string(missing)));
    }
    return derive(aj->second, i) - derive(ai->second, j) - commutator(ai->second, aj->second);
}

IntegrabilityReport check_integrability(const ParamLinearSystem& sys,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    IntegrabilityReport rep;
    for (const auto& [i, j] : pairs) {
        RatMatrix r = integrability_residual(sys, i, j);
        if (!is_zero(r)) rep.violations.push_back({i, j, std::move(r)});
    }
    rep.verdict = rep.violations.empty() ? IntegrabilityReport::Verdict::Integrable
                                         : IntegrabilityReport::Verdict::ViolationsFound;
    return rep;
}

IntegrabilityReport check_integrability(const ParamLinearSystem& sys) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto a = sys.matrices.begin(); a != sys.matrices.end(); ++a)
        for (auto b = std::next(a); b != sys.matrices.end(); ++b) pairs.emplace_back(a->first, b->first);
    return check_integrability(sys, pairs);
}

namespace {

struct PoleSpec {
    Rat root;
    int order;
};

struct AnsatzShape {
    std::vector<PoleSpec> poles;
    int degree;
};

int polynomial_degree(const RatMatrix& a) {
    int deg = -1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            deg = std::max(deg, partial_fractions_x(a(i, j)).polynomial.degree());
        }
    return deg;
}

AnsatzShape ansatz_shape(const RatMatrix& a, const AnsatzBounds& bounds) {
    AnsatzShape shape;
    auto add_pole = [&](const Rat& root, int order) {
        for (auto& p : shape.poles)
            if (p.root == root) {
                p.order = std::max(p.order, order);
                return;
            }
        shape.poles.push_back({root, order});
    };
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            auto pf = partial_fractions_x(a(i, j));
            if (pf.unsplit) throw UnsupportedDenominator(Rat(pf.ring, pf.unsplit->den()).to_string());
            for (const auto& root : pf.pole_locations()) add_pole(root, pf.pole_order(root) + bounds.pole_headroom);
        }
    for (const auto& p : bounds.extra_poles) {
        if (!p.is_param()) throw std::invalid_argument("extra pole locations must be free of x");
        if (bounds.pole_headroom > 0) add_pole(p, bounds.pole_headroom);
    }
    shape.degree = bounds.poly_degree ? *bounds.poly_degree : default_poly_degree(a);
    if (shape.degree < 0) throw std::invalid_argument("polynomial degree bound must be nonnegative");
    return shape;
}

// Solve dB/dx - (A B - B A) = rhs for B in the ansatz; nullopt if no solution.
std::optional<RatMatrix> solve_one(const RingPtr& ring, const RatMatrix& a, const RatMatrix& rhs,
                                   const AnsatzShape& shape) {
    const std::size_t n = a.rows();
    Rat x = Rat::variable(ring, ring->main_var());
    std::vector<Rat> basis;
    for (const auto& p : shape.poles)
        for (int j = 1; j <= p.order; ++j) basis.push_back((x - p.root).pow(-j));
    for (int d = 0; d <= shape.degree; ++d) basis.push_back(x.pow(d));

    // images[k] for unknown k = (basis function, row, col)
    struct Unknown {
        std::size_t fn, r, c;
    };
    std::vector<Unknown> unknowns;
    std::vector<RatMatrix> images;
    for (std::size_t f = 0; f < basis.size(); ++f)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                RatMatrix e(n, n);
                e(r, c) = basis[f];
                images.push_back(derive(e, 0) - commutator(a, e));
                unknowns.push_back({f, r, c});
            }

    // Clear x-denominators entrywise and equate coefficients of powers of x.
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs_rows;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Poly common = rhs(r, c).den();
            for (const auto& img : images)
                if (!img(r, c).is_zero()) common = lcm(common, img(r, c).den());
            auto split = [&](const Rat& v) {
                Poly p = v.num() * divide_exact(common, v.den());
                auto cs = p.coefficients_in(0);
                std::vector<Rat> out;
                for (auto& q : cs) out.emplace_back(ring, q);
                return out;
            };
            std::vector<std::vector<Rat>> cols;
            std::size_t height = 0;
            for (const auto& img : images) {
                cols.push_back(img(r, c).is_zero() ? std::vector<Rat>{} : split(img(r, c)));
                height = std::max(height, cols.back().size());
            }
            std::vector<Rat> target = rhs(r, c).is_zero() ? std::vector<Rat>{} : split(rhs(r, c));
            height = std::max(height, target.size());
            for (std::size_t k = 0; k < height; ++k) {
                std::vector<Rat> row(images.size(), Rat(0));
                bool any = false;
                for (std::size_t u = 0; u < images.size(); ++u)
                    if (k < cols[u].size() && !cols[u][k].is_zero()) {
                        row[u] = cols[u][k];
                        any = true;
                    }
                Rat t = k < target.size() ? target[k] : Rat(0);
                if (!any && t.is_zero()) continue;
                rows.push_back(std::move(row));
                rhs_rows.push_back(t);
            }
        }

    RatMatrix b(n, n);
    if (rows.empty()) return b;
    DenseMatrix<Rat> sys(rows.size(), images.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t u = 0; u < images.size(); ++u) sys(i, u) = rows[i][u];
    auto sol = solve(sys, rhs_rows);
    if (!sol) return std::nullopt;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!(*sol)[u].is_zero()) b(unknowns[u].r, unknowns[u].c) += (*sol)[u] * basis[unknowns[u].fn];
    return b;
}

} // namespace

int default_poly_degree(const RatMatrix& a) { return std::max(0, polynomial_degree(a) + 1); }

IntegrabilityReport solve_complete_integrability(const RingPtr& ring, const RatMatrix& a,
                                                 const std::vector<std::size_t>& params,
                                                 const AnsatzBounds& bounds) {
    if (bounds.pole_headroom < 0) throw std::invalid_argument("pole headroom must be nonnegative");
    for (auto h : params)
        if (h == 0 || h >= ring->size()) throw std::invalid_argument("not a parameter index");
    AnsatzShape shape = ansatz_shape(a, bounds);

    std::vector<std::future<std::optional<RatMatrix>>> jobs;
    for (auto h : params)
        jobs.push_back(std::async(params.size() > 1 ? std::launch::async : std::launch::deferred,
                                  [&, h] { return solve_one(ring, a, derive(a, h), shape); }));

    IntegrabilityReport rep;
    ParamLinearSystem completed{ring, a.rows(), {{0, a}}};
    for (std::size_t k = 0; k < params.size(); ++k) {
        auto b = jobs[k].get();
        if (!b) {
            rep.verdict = IntegrabilityReport::Verdict::NotFoundWithinAnsatz;
            rep.witnesses.clear();
            rep.note = "no completion for '" + ring->name(params[k]) +
                       "' within the ansatz; this is not a proof of non-integrability";
            for (std::size_t rest = k + 1; rest < params.size(); ++rest) jobs[rest].wait();
            return rep;
        }
        rep.witnesses.emplace_back(params[k], *b);
        completed.matrices.emplace(params[k], std::move(*b));
    }

    auto check = check_integrability(completed);
    if (check.verdict != IntegrabilityReport::Verdict::Integrable) {
        rep.verdict = IntegrabilityReport::Verdict::NotFoundWithinAnsatz;
        rep.violations = std::move(check.violations);
        rep.witnesses.clear();
        rep.note = "completions exist for each parameter separately but the chosen ones are not pairwise "
                   "compatible; this is not a proof of non-integrability";
        return rep;
    }
    rep.verdict = IntegrabilityReport::Verdict::Integrable;
    return rep;
}

IsomonodromyVerdict isomonodromy_verdict(const RingPtr& ring, const RatMatrix& a, const AnsatzBounds& bounds) {
    std::vector<std::size_t> params;
    for (std::size_t i = 1; i < ring->size(); ++i) params.push_back(i);
    auto rep = solve_complete_integrability(ring, a, params, bounds);
    auto kind = rep.verdict == IntegrabilityReport::Verdict::Integrable
                    ? IsomonodromyVerdict::Kind::IsomonodromicWithinAnsatz
                    : IsomonodromyVerdict::Kind::NotFoundWithinAnsatz;
    return {kind, std::move(rep)};
}

} // namespace ppv
