#include "ppv/rank1.hpp"

#include "ppv/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ppv {

namespace {

const RingPtr& require_one_param(const Rat& a) {
    if (!a.ring() || a.ring()->param_count() != 1)
        throw std::invalid_argument("rank-1 group computation needs exactly one parameter");
    return a.ring();
}

Rank1Answer reduce(const Rat& a) {
    auto h = hermite_reduce_x(a);
    Rank1Answer out;
    out.integrated = h.integrated;
    out.residues = h.residues;
    out.exponential_part = !h.integrated.is_zero();
    return out;
}

// True when the elements are linearly dependent over Q.
bool rationally_dependent(const std::vector<Rat>& v) {
    if (v.size() < 2) return false;
    Poly common(1);
    for (const auto& r : v) common = lcm(common, r.den());
    std::vector<Poly> nums;
    for (const auto& r : v) nums.push_back(r.num() * divide_exact(common, r.den()));
    std::vector<Exponents> monos;
    for (const auto& p : nums)
        for (const auto& [e, c] : p.terms())
            if (std::find(monos.begin(), monos.end(), e) == monos.end()) monos.push_back(e);
    DenseMatrix<mpq_class> m(monos.size(), v.size());
    for (std::size_t j = 0; j < nums.size(); ++j)
        for (const auto& [e, c] : nums[j].terms())
            m(static_cast<std::size_t>(std::find(monos.begin(), monos.end(), e) - monos.begin()), j) = c;
    return rank(m) < v.size();
}

} // namespace

std::string to_string(Caveat c) {
    switch (c) {
    case Caveat::UpperBoundOnly: return "UpperBoundOnly";
    case Caveat::MixedConstantNonconstantResidues: return "MixedConstantNonconstantResidues";
    case Caveat::RationalRelationDetected: return "RationalRelationDetected";
    }
    return "";
}

bool Rank1Answer::has(Caveat c) const { return std::find(caveats.begin(), caveats.end(), c) != caveats.end(); }

std::string Rank1Answer::render_group() const {
    return std::visit([](const auto& g) { return g.render(); }, group);
}

Rank1Answer additive_group(const Rat& a) {
    const RingPtr& ring = require_one_param(a);
    Rank1Answer out = reduce(a);
    std::vector<Rat> gens;
    for (const auto& r : out.residues) gens.push_back(r.coeff);
    if (gens.empty()) {
        out.group = GaSubgroup::kernel(OreOperator::identity(ring, 1));
        return out;
    }
    out.group = GaSubgroup::kernel(annihilator_of_span(ring, 1, gens).op);
    return out;
}

Rank1Answer multiplicative_group(const Rat& a) {
    const RingPtr& ring = require_one_param(a);
    Rank1Answer out = reduce(a);

    std::vector<Rat> distinct;
    for (const auto& r : out.residues)
        if (std::find(distinct.begin(), distinct.end(), r.coeff) == distinct.end()) distinct.push_back(r.coeff);
    std::vector<Rat> constant, moving;
    for (const auto& b : distinct) (b.is_constant() ? constant : moving).push_back(b);

    if (moving.empty()) {
        if (out.exponential_part) {
            GmSubgroup g = GmSubgroup::log_kernel(OreOperator::identity(ring, 1));
            g.upper_bound_only = true;
            out.group = g;
            out.caveats.push_back(Caveat::UpperBoundOnly);
            return out;
        }
        long n = 1;
        for (const auto& b : constant) {
            mpz_class den = b.constant_value().get_den();
            if (!den.fits_slong_p()) throw std::overflow_error("residue denominator too large");
            n = std::lcm(n, den.get_si());
        }
        out.group = GmSubgroup::finite_cyclic(n);
        return out;
    }

    std::vector<Rat> derivs;
    for (const auto& b : moving) derivs.push_back(b.derive(1));
    GmSubgroup g = GmSubgroup::log_kernel(annihilator_of_span(ring, 1, derivs).op);
    if (rationally_dependent(derivs)) out.caveats.push_back(Caveat::RationalRelationDetected);
    if (!constant.empty()) out.caveats.push_back(Caveat::MixedConstantNonconstantResidues);
    if (!out.caveats.empty()) {
        out.caveats.push_back(Caveat::UpperBoundOnly);
        g.upper_bound_only = true;
    }
    out.group = g;
    return out;
}

ClosureTag classical_pv_group(const Rank1Answer& answer) {
    return std::visit([](const auto& g) { return zariski_closure(g); }, answer.group);
}

} // namespace ppv
