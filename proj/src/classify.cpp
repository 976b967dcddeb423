#include "ppv/classify.hpp"

#include "ppv/partial_fractions.hpp"
#include "ppv/roots.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace ppv {

namespace {

struct Candidates {
    std::vector<std::pair<Rat, std::vector<Rat>>> poles;  // location, exponent choices
    std::vector<Rat> at_infinity;
    std::vector<std::string> reasons;
};

std::vector<Rat> eigenvalues(const RingPtr& ring, const RatMatrix& m) {
    Rat tr = trace(m), det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return param_roots(UPoly({det, -tr, Rat(1)}), ring);
}

// Larger rational exponents first, so the search order does not depend on
// how the roots were found.
void order_exponents(std::vector<Rat>& ev) {
    std::stable_sort(ev.begin(), ev.end(), [](const Rat& a, const Rat& b) {
        if (a.is_constant() && b.is_constant()) return a.constant_value() > b.constant_value();
        return a.is_constant() && !b.is_constant();
    });
}

Candidates exponent_candidates(const RingPtr& ring, const RatMatrix& a) {
    Candidates out;
    std::vector<Rat> locations;
    RatMatrix poly_part(2, 2);
    int poly_degree = -1, max_order = 0;
    std::vector<PartialFractionForm> forms;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            auto pf = partial_fractions_x(a(i, j));
            if (pf.unsplit) throw UnsupportedDenominator(Rat(pf.ring, pf.unsplit->den()).to_string());
            poly_part(i, j) = pf.polynomial.to_rat(ring);
            poly_degree = std::max(poly_degree, pf.polynomial.degree());
            for (const auto& t : pf.poles) {
                max_order = std::max(max_order, t.order);
                if (std::find(locations.begin(), locations.end(), t.root) == locations.end()) locations.push_back(t.root);
            }
            forms.push_back(std::move(pf));
        }
    if (max_order >= 2) {
        out.reasons.push_back("pole of order >= 2; exponent candidates need simple poles");
        return out;
    }
    for (const auto& p : locations) {
        RatMatrix res(2, 2);
        for (std::size_t k = 0; k < 4; ++k)
            for (const auto& t : forms[k].poles)
                if (t.root == p && t.order == 1) res(k / 2, k % 2) = t.coeff;
        auto ev = eigenvalues(ring, res);
        if (ev.empty()) {
            out.reasons.push_back("residue eigenvalues at x = " + p.to_string() + " are not in Q(t)");
            continue;
        }
        order_exponents(ev);
        out.poles.emplace_back(p, ev);
    }
    if (poly_degree >= 1) out.reasons.push_back("polynomial part of degree >= 1 at infinity");
    else if (poly_degree < 0) out.at_infinity.push_back(Rat(ring, Poly()));
    else {
        auto ev = eigenvalues(ring, poly_part);
        if (ev.empty()) out.reasons.push_back("eigenvalues of the constant part are not in Q(t)");
        order_exponents(ev);
        out.at_infinity = ev;
    }
    return out;
}

// Polynomial v of degree <= cap with dv/dx = (A - lambda) v, or nullopt.
std::optional<std::vector<Rat>> eigen_line_for(const RingPtr& ring, const RatMatrix& a, const Rat& lambda, int cap) {
    Rat x = Rat::variable(ring, ring->main_var());
    // unknown u = (component c, power d); image of e_c x^d under v -> v' - (A - lambda) v
    RatMatrix shifted = a - lambda * identity_matrix(2);
    std::vector<std::array<Rat, 2>> images;
    for (std::size_t c = 0; c < 2; ++c)
        for (int d = 0; d <= cap; ++d) {
            Rat mono = x.pow(d), dmono = d == 0 ? Rat(ring, Poly()) : Rat(d) * x.pow(d - 1);
            std::array<Rat, 2> img;
            for (std::size_t r = 0; r < 2; ++r) img[r] = (r == c ? dmono : Rat(0)) - shifted(r, c) * mono;
            images.push_back(img);
        }
    std::vector<std::vector<Rat>> rows;
    for (std::size_t r = 0; r < 2; ++r) {
        Poly common(1);
        for (const auto& img : images)
            if (!img[r].is_zero()) common = lcm(common, img[r].den());
        std::vector<std::vector<Rat>> cols;
        std::size_t height = 0;
        for (const auto& img : images) {
            std::vector<Rat> col;
            if (!img[r].is_zero())
                for (auto& q : (img[r].num() * divide_exact(common, img[r].den())).coefficients_in(0)) col.emplace_back(ring, q);
            height = std::max(height, col.size());
            cols.push_back(std::move(col));
        }
        for (std::size_t k = 0; k < height; ++k) {
            std::vector<Rat> row(images.size(), Rat(0));
            bool any = false;
            for (std::size_t u = 0; u < images.size(); ++u)
                if (k < cols[u].size() && !cols[u][k].is_zero()) {
                    row[u] = cols[u][k];
                    any = true;
                }
            if (any) rows.push_back(std::move(row));
        }
    }
    DenseMatrix<Rat> sys(std::max<std::size_t>(rows.size(), 1), images.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t u = 0; u < images.size(); ++u) sys(i, u) = rows[i][u];
    auto kernel = nullspace(sys);
    if (kernel.empty()) return std::nullopt;
    const auto& sol = kernel.front();
    std::vector<Rat> v(2, Rat(ring, Poly()));
    std::size_t u = 0;
    for (std::size_t c = 0; c < 2; ++c)
        for (int d = 0; d <= cap; ++d, ++u)
            if (!sol[u].is_zero()) v[c] += sol[u] * x.pow(d);
    return v;
}

bool eigen_line_holds(const RatMatrix& a, const std::vector<Rat>& v, const Rat& lambda) {
    if (v.size() != 2 || (v[0].is_zero() && v[1].is_zero())) return false;
    for (std::size_t r = 0; r < 2; ++r) {
        Rat rhs = a(r, 0) * v[0] + a(r, 1) * v[1] - lambda * v[r];
        if (!(v[r].derive(0) == rhs)) return false;
    }
    return true;
}

bool search_eigen_line(const RingPtr& ring, const RatMatrix& a, int cap, TrichotomyVerdict& out,
                       std::vector<std::string>& reasons) {
    Candidates cand = exponent_candidates(ring, a);
    reasons.insert(reasons.end(), cand.reasons.begin(), cand.reasons.end());
    if (!cand.reasons.empty() && cand.at_infinity.empty() && cand.poles.empty()) return false;
    Rat x = Rat::variable(ring, ring->main_var());
    std::vector<std::size_t> choice(cand.poles.size(), 0);
    bool found = false;
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t k, Rat partial) {
        if (found) return;
        if (k == cand.poles.size()) {
            for (const auto& inf : cand.at_infinity) {
                Rat lambda = partial + inf;
                if (auto v = eigen_line_for(ring, a, lambda, cap); v && eigen_line_holds(a, *v, lambda)) {
                    out.kind = TrichotomyVerdict::Kind::ReducibleSolvable;
                    out.eigen_line = *v;
                    out.exponent = lambda;
                    found = true;
                    return;
                }
            }
            return;
        }
        const auto& [p, exps] = cand.poles[k];
        for (const auto& e : exps) rec(k + 1, partial + e / (x - p));
    };
    rec(0, Rat(ring, Poly()));
    return found;
}

} // namespace

std::string to_string(TrichotomyVerdict::Kind k) {
    switch (k) {
    case TrichotomyVerdict::Kind::CompletelyIntegrable: return "CompletelyIntegrable";
    case TrichotomyVerdict::Kind::ReducibleSolvable: return "ReducibleSolvable";
    case TrichotomyVerdict::Kind::GenericSL2Candidate: return "GenericSL2Candidate";
    case TrichotomyVerdict::Kind::Unknown: return "Unknown";
    }
    return "";
}

TrichotomyVerdict classify_2x2(const RingPtr& ring, const RatMatrix& a, const AnsatzBounds& bounds, int degree_cap) {
    if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("classification needs a 2x2 matrix");
    if (ring->param_count() != 1) throw std::invalid_argument("classification needs exactly one parameter");
    if (!trace(a).is_zero()) throw std::invalid_argument("matrix is not traceless");
    if (degree_cap < 0) throw std::invalid_argument("degree cap must be nonnegative");

    TrichotomyVerdict out;
    std::vector<std::string> reasons;
    bool parameter_free = is_zero(derive(a, 1));

    auto integrable = [&]() {
        auto rep = solve_complete_integrability(ring, a, {1}, bounds);
        if (rep.verdict != IntegrabilityReport::Verdict::Integrable) return false;
        out.kind = TrichotomyVerdict::Kind::CompletelyIntegrable;
        out.witnesses = rep.witnesses;
        return true;
    };

    if (parameter_free) {
        if (search_eigen_line(ring, a, degree_cap, out, reasons)) return out;
        if (integrable()) return out;
    } else {
        if (integrable()) return out;
        if (search_eigen_line(ring, a, degree_cap, out, reasons)) return out;
    }
    out.reasons = reasons;
    out.kind = reasons.empty() ? TrichotomyVerdict::Kind::GenericSL2Candidate : TrichotomyVerdict::Kind::Unknown;
    return out;
}

bool verify_verdict(const RingPtr& ring, const RatMatrix& a, const TrichotomyVerdict& v) {
    switch (v.kind) {
    case TrichotomyVerdict::Kind::CompletelyIntegrable: {
        ParamLinearSystem sys{ring, 2, {{0, a}}};
        for (const auto& [h, b] : v.witnesses) sys.matrices.emplace(h, b);
        return check_integrability(sys).verdict == IntegrabilityReport::Verdict::Integrable;
    }
    case TrichotomyVerdict::Kind::ReducibleSolvable: return eigen_line_holds(a, v.eigen_line, v.exponent);
    default: return true;
    }
}

std::string interpret_verdict(const TrichotomyVerdict& v) {
    switch (v.kind) {
    case TrichotomyVerdict::Kind::CompletelyIntegrable:
        return "PPV-group conjugate to SL2(C); isomonodromic family (regular-singular reading)";
    case TrichotomyVerdict::Kind::ReducibleSolvable:
        return "PPV-group in a Borel; solutions parameterized liouvillian";
    case TrichotomyVerdict::Kind::GenericSL2Candidate:
        return "candidate PPV-group SL2(k0) or proper Zariski-dense subgroup - not decided";
    case TrichotomyVerdict::Kind::Unknown: {
        std::string s = "not decided; skipped searches:";
        for (const auto& r : v.reasons) s += "\n  - " + r;
        return s;
    }
    }
    return "";
}

} // namespace ppv
