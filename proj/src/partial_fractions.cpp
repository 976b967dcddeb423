#include "ppv/partial_fractions.hpp"

#include "ppv/roots.hpp"

#include <algorithm>

namespace ppv {

namespace {

Rat pole_rat(const RingPtr& ring, const PoleTerm& t) {
    Rat base = Rat(ring, Poly::variable(0)) - t.root;
    return t.coeff / base.pow(t.order);
}

} // namespace

Rat PartialFractionForm::recombine() const {
    Rat sum = polynomial.to_rat(ring);
    for (const auto& t : poles) sum += pole_rat(ring, t);
    if (unsplit) sum += *unsplit;
    return sum;
}

std::vector<Rat> PartialFractionForm::pole_locations() const {
    std::vector<Rat> out;
    for (const auto& t : poles)
        if (std::find(out.begin(), out.end(), t.root) == out.end()) out.push_back(t.root);
    return out;
}

int PartialFractionForm::pole_order(const Rat& root) const {
    int best = 0;
    for (const auto& t : poles)
        if (t.root == root) best = std::max(best, t.order);
    return best;
}

PartialFractionForm partial_fractions_x(const Rat& f) {
    PartialFractionForm out;
    out.ring = f.ring();
    if (!out.ring) out.ring = make_ring({});
    const RingPtr& ring = out.ring;

    UPoly num = UPoly::from_poly(ring, f.num());
    UPoly den = UPoly::from_poly(ring, f.den());
    auto [quot, rem] = divmod(num, den);
    out.polynomial = quot;
    if (rem.is_zero()) return out;

    UPoly unsplit_den = den;
    struct Root {
        Rat c;
        int mult;
    };
    std::vector<Root> roots;
    for (const auto& c : param_roots(ring, f.den())) {
        UPoly lin = UPoly::x_minus(c);
        int mult = 0;
        while (true) {
            auto [q, r] = divmod(unsplit_den, lin);
            if (!r.is_zero()) break;
            unsplit_den = q;
            ++mult;
        }
        roots.push_back({c, mult});
    }

    for (const auto& [c, mult] : roots) {
        UPoly cofactor = den;
        UPoly lin = UPoly::x_minus(c);
        for (int i = 0; i < mult; ++i) cofactor = divmod(cofactor, lin).first;
        // Laurent expansion of rem/den around c: rem(c+y) / cofactor(c+y) = sum q_k y^k
        UPoly rs = rem.taylor_shift(c);
        UPoly es = cofactor.taylor_shift(c);
        Rat e0inv = es.coeff(0).inverse();
        std::vector<Rat> q;
        for (int k = 0; k < mult; ++k) {
            Rat acc = rs.coeff(k);
            for (int i = 1; i <= k; ++i) acc -= es.coeff(i) * q[static_cast<std::size_t>(k - i)];
            q.push_back(acc * e0inv);
        }
        for (int order = 1; order <= mult; ++order) {
            const Rat& b = q[static_cast<std::size_t>(mult - order)];
            if (!b.is_zero()) out.poles.push_back({c, order, b});
        }
    }

    if (unsplit_den.degree() > 0) {
        Rat rest = f - out.recombine();
        if (!rest.is_zero()) out.unsplit = rest;
    }
    return out;
}

HermiteReduction hermite_reduce_x(const Rat& f) {
    auto pf = partial_fractions_x(f);
    if (pf.unsplit) {
        Rat d(pf.ring, pf.unsplit->den());
        throw UnsupportedDenominator(d.to_string());
    }
    const RingPtr& ring = pf.ring;
    HermiteReduction out;
    out.integrated = Rat(ring, Poly());
    out.residual = Rat(ring, Poly());

    std::vector<Rat> antideriv(static_cast<std::size_t>(pf.polynomial.degree() + 2));
    for (int k = 0; k <= pf.polynomial.degree(); ++k)
        antideriv[static_cast<std::size_t>(k + 1)] = pf.polynomial.coeff(k) / Rat(static_cast<long>(k + 1));
    out.integrated = UPoly(std::move(antideriv)).to_rat(ring);

    for (const auto& t : pf.poles) {
        if (t.order == 1) {
            out.residues.push_back(t);
            out.residual += pole_rat(ring, t);
        } else {
            PoleTerm lower{t.root, t.order - 1, -t.coeff / Rat(static_cast<long>(t.order - 1))};
            out.integrated += pole_rat(ring, lower);
        }
    }
    return out;
}

} // namespace ppv
