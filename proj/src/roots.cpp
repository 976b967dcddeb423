#include "ppv/roots.hpp"

#include "ppv/linalg.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace ppv {

namespace {

using QPoly = std::vector<mpq_class>;  // lowest degree first

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

QPoly remainder(QPoly a, const QPoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly to_poly(const QPoly& p) {
    Poly r;
    for (std::size_t k = 0; k < p.size(); ++k) r += Poly::power_of(0, static_cast<int>(k)) * p[k];
    return r;
}

QPoly from_poly(const Poly& p) {
    QPoly out(static_cast<std::size_t>(p.degree(0)) + 1);
    for (const auto& [e, c] : p.terms()) out[e[0]] += c;
    trim(out);
    return out;
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
    int count = 0, last = 0;
    for (const auto& s : chain) {
        int v = sgn(eval(s, x));
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

// Integer points used to specialize the parameters.
std::vector<mpq_class> specialization_point(int attempt, std::size_t nparams) {
    static const int kValues[] = {2, -3, 5, 7, -2, 3, 11, -5, 13, 4, -7, 17, 6, -11, 19, 9};
    std::vector<mpq_class> pt(kMaxVars, mpq_class(0));
    for (std::size_t i = 1; i <= nparams; ++i)
        pt[i] = kValues[(static_cast<std::size_t>(attempt) * 3 + i * 5) % 16] + attempt / 4;
    return pt;
}

void for_each_monomial(std::size_t nparams, int max_degree, const std::function<void(const Exponents&)>& fn) {
    Exponents e{};
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
        if (var > nparams) {
            fn(e);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            e[var] = static_cast<std::uint16_t>(d);
            rec(var + 1, left - d);
        }
        e[var] = 0;
    };
    rec(1, max_degree);
}

// Try to recover a root in Q(t) whose value at the specialization point is r0.
std::optional<Rat> lift_root(const RingPtr& ring, const Poly& s, const std::vector<mpq_class>& point,
                             const mpq_class& r0, int num_bound, int den_bound) {
    const std::size_t m = ring->param_count();
    std::vector<mpq_class> offsets(point.begin(), point.end());
    offsets[0] = 0;
    Poly shifted = s.shifted(offsets);
    auto fx = shifted.coefficients_in(0);

    mpq_class slope = 0;
    for (std::size_t j = fx.size(); j-- > 1;) slope = slope * r0 + fx[j].constant_term() * static_cast<long>(j);
    if (sgn(slope) == 0) return std::nullopt;
    mpq_class inv_slope = 1 / slope;

    const int order = num_bound + den_bound + 1;
    Poly c(r0);
    for (int k = 1; k <= order; ++k) {
        Poly val;
        for (std::size_t j = fx.size(); j-- > 0;) val = ((val * c).truncated(k) + fx[j]).truncated(k);
        Poly h = val.homogeneous_part(k);
        if (!h.is_zero()) c -= h * inv_slope;
    }

    std::vector<Exponents> den_monos, num_monos, rows;
    for_each_monomial(m, den_bound, [&](const Exponents& e) { den_monos.push_back(e); });
    for_each_monomial(m, num_bound, [&](const Exponents& e) { num_monos.push_back(e); });
    for_each_monomial(m, order, [&](const Exponents& e) { rows.push_back(e); });
    std::map<Exponents, std::size_t, GrlexGreater> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

    DenseMatrix<mpq_class> sys(rows.size(), den_monos.size() + num_monos.size());
    for (std::size_t j = 0; j < den_monos.size(); ++j) {
        Poly prod = (Poly::monomial(1, den_monos[j]) * c).truncated(order);
        for (const auto& [e, coef] : prod.terms()) sys(row_of.at(e), j) = coef;
    }
    for (std::size_t j = 0; j < num_monos.size(); ++j) sys(row_of.at(num_monos[j]), den_monos.size() + j) = -1;

    auto kernel = nullspace(sys);
    if (kernel.empty()) return std::nullopt;
    const auto& v = kernel.front();
    Poly a, b;
    for (std::size_t j = 0; j < den_monos.size(); ++j) a += Poly::monomial(v[j], den_monos[j]);
    for (std::size_t j = 0; j < num_monos.size(); ++j) b += Poly::monomial(v[den_monos.size() + j], num_monos[j]);
    if (a.is_zero()) return std::nullopt;

    std::vector<mpq_class> back(kMaxVars, mpq_class(0));
    for (std::size_t i = 1; i <= m; ++i) back[i] = -point[i];
    Rat candidate(ring, b.shifted(back), a.shifted(back));
    if (!UPoly::from_poly(ring, s).evaluate(candidate).is_zero()) return std::nullopt;
    return candidate;
}

} // namespace

std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs) {
    QPoly p = coeffs;
    trim(p);
    std::vector<mpq_class> roots;
    if (p.size() <= 1) return roots;
    if (sgn(p.front()) == 0) {
        roots.emplace_back(0);
        std::size_t k = 0;
        while (sgn(p[k]) == 0) ++k;
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    }
    if (p.size() > 1) {
        Poly full = to_poly(p);
        QPoly f = from_poly(squarefree_part(full, 0));
        // integer primitive form so that lc * root is an integer
        mpz_class den = 1;
        for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        for (auto& c : f) c *= den;
        mpz_class lc = abs(f.back().get_num());

        std::vector<QPoly> chain{f, derivative(f)};
        while (chain.back().size() > 1) {
            QPoly r = remainder(chain[chain.size() - 2], chain.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            chain.push_back(std::move(r));
        }

        mpq_class bound = 0;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max<mpq_class>(bound, abs(f[i] / f.back()));
        bound += 1;

        struct Interval {
            mpq_class lo, hi;
            int count;
        };
        std::vector<Interval> work{{-bound, bound, sign_variations(chain, -bound) - sign_variations(chain, bound)}};
        while (!work.empty()) {
            Interval iv = work.back();
            work.pop_back();
            if (iv.count <= 0) continue;
            if (iv.count == 1 && (iv.hi - iv.lo) * lc < 1) {
                mpq_class a = iv.lo * lc;
                mpz_class n = a.get_num() / a.get_den();
                for (mpz_class k = n - 1; k <= n + 2; ++k) {
                    mpq_class r(k, lc);
                    r.canonicalize();
                    if (r > iv.lo && r <= iv.hi && sgn(eval(f, r)) == 0) {
                        roots.push_back(r);
                        break;
                    }
                }
                continue;
            }
            mpq_class mid = (iv.lo + iv.hi) / 2;
            int left = sign_variations(chain, iv.lo) - sign_variations(chain, mid);
            work.push_back({iv.lo, mid, left});
            work.push_back({mid, iv.hi, iv.count - left});
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Rat> param_roots(const RingPtr& ring, const Poly& p) {
    std::vector<Rat> roots;
    if (p.is_zero() || !p.involves(0)) return roots;
    Poly s = squarefree_part(p, 0);
    s = divide_exact(s, content_in(s, 0));
    if (s.min_degree(0) > 0) {
        roots.emplace_back(ring, Poly());
        s = divide_exact(s, Poly::variable(0));
    }
    if (s.degree(0) == 0) return roots;

    const std::size_t m = ring->param_count();
    auto univariate_at = [&](const std::vector<mpq_class>& pt) {
        std::vector<mpq_class> out(static_cast<std::size_t>(s.degree(0)) + 1, mpq_class(0));
        for (const auto& [e, c] : s.terms()) {
            mpq_class term = c;
            for (std::size_t i = 1; i <= m; ++i)
                for (int k = 0; k < e[i]; ++k) term *= pt[i];
            out[e[0]] += term;
        }
        return out;
    };

    if (m == 0) {
        for (const auto& r : rational_roots(univariate_at(std::vector<mpq_class>(kMaxVars, mpq_class(0)))))
            roots.emplace_back(ring, Poly(r));
        return roots;
    }

    const int deg = s.degree(0);
    const int den_bound = s.coefficient(0, deg).total_degree();
    const int num_bound = s.coefficient(0, 0).total_degree();

    for (int attempt = 0; attempt < 64; ++attempt) {
        auto pt = specialization_point(attempt, m);
        auto spec = univariate_at(pt);
        if (sgn(spec.back()) == 0) continue;
        Poly sq = to_poly(spec);
        if (!gcd(sq, sq.derivative(0)).is_constant()) continue;
        for (const auto& r0 : rational_roots(spec))
            if (auto c = lift_root(ring, s, pt, r0, num_bound, den_bound)) roots.push_back(*c);
        return roots;
    }
    throw std::runtime_error("no usable specialization point for root finding");
}

std::vector<Rat> param_roots(const UPoly& p, const RingPtr& ring) {
    if (p.degree() <= 0) return {};
    Poly common(1);
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) common = lcm(common, c.den());
    Poly flat;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        flat += (c.num() * divide_exact(common, c.den())).shift_var(0, k);
    }
    return param_roots(ring, flat);
}

} // namespace ppv
