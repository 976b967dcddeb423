#include "ppv/groups.hpp"

#include <numeric>
#include <stdexcept>

namespace ppv {

GaSubgroup GaSubgroup::kernel(const OreOperator& l) {
    if (l.is_zero()) throw std::invalid_argument("kernel of the zero operator");
    GaSubgroup g;
    g.op_ = l.monic();
    return g;
}

std::string GaSubgroup::render() const {
    if (is_full()) return "Full";
    return "Ga[L = " + op_->to_string() + "]";
}

GmSubgroup GmSubgroup::finite_cyclic(long n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    GmSubgroup g;
    g.kind_ = Kind::FiniteCyclic;
    g.n_ = n;
    return g;
}

GmSubgroup GmSubgroup::log_kernel(const OreOperator& l) {
    if (l.is_zero()) throw std::invalid_argument("kernel of the zero operator");
    GmSubgroup g;
    g.kind_ = Kind::LogKernel;
    g.op_ = l.monic();
    return g;
}

std::string GmSubgroup::render() const {
    switch (kind_) {
    case Kind::Full: return "Full";
    case Kind::FiniteCyclic: return "mu_n[n = " + std::to_string(n_) + "]";
    case Kind::LogKernel:
        if (op_->order() == 0) return "Gm(C)";
        return "Gm[L(∂a/a)=0, L = " + op_->to_string() + "]";
    }
    return "";
}

bool ga_contains(const GaSubgroup& g, const GaSubgroup& h) {
    if (g.is_full()) return true;
    if (h.is_full()) return false;
    return right_divides(h.op(), g.op());
}

bool gm_contains(const GmSubgroup& g, const GmSubgroup& h) {
    using K = GmSubgroup::Kind;
    if (g.kind() == K::Full) return true;
    if (h.kind() == K::Full) return false;
    if (h.kind() == K::FiniteCyclic) {
        if (g.kind() == K::LogKernel) return true;
        return g.n() % h.n() == 0;
    }
    if (g.kind() == K::FiniteCyclic) return false;
    return right_divides(h.op(), g.op());
}

GaSubgroup ga_intersect(const GaSubgroup& a, const GaSubgroup& b) {
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    return GaSubgroup::kernel(gcrd(a.op(), b.op()));
}

GmSubgroup gm_intersect(const GmSubgroup& a, const GmSubgroup& b) {
    using K = GmSubgroup::Kind;
    if (a.kind() == K::Full) return b;
    if (b.kind() == K::Full) return a;
    if (a.kind() == K::FiniteCyclic && b.kind() == K::FiniteCyclic) return GmSubgroup::finite_cyclic(std::gcd(a.n(), b.n()));
    if (a.kind() == K::FiniteCyclic) return a;
    if (b.kind() == K::FiniteCyclic) return b;
    return GmSubgroup::log_kernel(gcrd(a.op(), b.op()));
}

std::string ClosureTag::render() const {
    switch (kind) {
    case Kind::TrivialGroup: return "trivial";
    case Kind::FiniteCyclic: return "Z/" + std::to_string(n) + "Z";
    case Kind::FullGa: return "Ga";
    case Kind::FullGm: return "Gm";
    }
    return "";
}

ClosureTag zariski_closure(const GaSubgroup& g) {
    if (g.is_trivial()) return {ClosureTag::Kind::TrivialGroup};
    return {ClosureTag::Kind::FullGa};
}

ClosureTag zariski_closure(const GmSubgroup& g) {
    if (g.kind() == GmSubgroup::Kind::FiniteCyclic) {
        if (g.n() == 1) return {ClosureTag::Kind::TrivialGroup};
        return {ClosureTag::Kind::FiniteCyclic, g.n()};
    }
    return {ClosureTag::Kind::FullGm};
}

bool closure_contains(const ClosureTag& big, const ClosureTag& small) {
    using K = ClosureTag::Kind;
    if (small.kind == K::TrivialGroup) return true;
    switch (big.kind) {
    case K::TrivialGroup: return false;
    case K::FiniteCyclic: return small.kind == K::FiniteCyclic && big.n % small.n == 0;
    case K::FullGa: return small.kind == K::FullGa;
    case K::FullGm: return small.kind == K::FullGm || small.kind == K::FiniteCyclic;
    }
    return false;
}

Rat log_derivative(const Rat& f, std::size_t derivation) {
    if (f.is_zero()) throw std::domain_error("logarithmic derivative of zero");
    return f.derive(derivation) / f;
}

std::vector<SubgroupTableRow> gm_del_subgroup_table(const RingPtr& ring, std::size_t derivation, long n) {
    return {
        {GmSubgroup::finite_cyclic(n), "k((x^t)^n, log x)"},
        {GmSubgroup::log_kernel(OreOperator::identity(ring, derivation)), "k(log x)"},
        {GmSubgroup::log_kernel(OreOperator::d(ring, derivation)), "k"},
    };
}

} // namespace ppv
