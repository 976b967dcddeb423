#include "ppv/ore.hpp"

#include "ppv/linalg.hpp"

#include <algorithm>

namespace ppv {

namespace {

void check_param(const Rat& c) {
    if (!c.is_param()) throw std::invalid_argument("operator coefficient involves the main variable: " + c.to_string());
}

void check_same(const OreOperator& a, const OreOperator& b) {
    if (a.derivation() != b.derivation())
        throw MixedDerivations("operators use different derivations");
}

// Shift every coefficient up by k powers of D.
OreOperator times_d_power(const OreOperator& l, const Rat& c, int k) {
    std::vector<Rat> out(static_cast<std::size_t>(k), Rat(0));
    for (const auto& a : l.coeffs()) out.push_back(a * c);
    return OreOperator(l.ring(), l.derivation(), std::move(out));
}

} // namespace

OreOperator::OreOperator(RingPtr ring, std::size_t derivation, std::vector<Rat> coeffs)
    : ring_(std::move(ring)), derivation_(derivation), c_(std::move(coeffs)) {
    if (!ring_) throw std::invalid_argument("operator needs a ring");
    if (derivation_ == 0 || derivation_ >= ring_->size())
        throw std::invalid_argument("operator derivation must be a parameter");
    for (auto& c : c_) {
        check_param(c);
        if (!c.ring()) c = Rat(ring_, c.num(), c.den());
    }
    trim();
}

OreOperator OreOperator::scalar(const RingPtr& ring, std::size_t derivation, const Rat& c) {
    return OreOperator(ring, derivation, {c});
}

OreOperator OreOperator::d(const RingPtr& ring, std::size_t derivation) {
    return OreOperator(ring, derivation, {Rat(0), Rat(1)});
}

void OreOperator::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat OreOperator::coeff(int k) const {
    if (k < 0 || k > order()) return Rat(ring_, Poly());
    return c_[static_cast<std::size_t>(k)];
}

OreOperator OreOperator::monic() const {
    if (is_zero()) return *this;
    Rat inv = leading().inverse();
    std::vector<Rat> out;
    for (const auto& c : c_) out.push_back(c * inv);
    return OreOperator(ring_, derivation_, std::move(out));
}

OreOperator OreOperator::operator-() const {
    std::vector<Rat> out;
    for (const auto& c : c_) out.push_back(-c);
    return OreOperator(ring_, derivation_, std::move(out));
}

OreOperator operator+(const OreOperator& a, const OreOperator& b) {
    check_same(a, b);
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return OreOperator(a.ring_ ? a.ring_ : b.ring_, a.derivation_, std::move(out));
}

OreOperator operator-(const OreOperator& a, const OreOperator& b) { return a + (-b); }

OreOperator operator*(const OreOperator& a, const OreOperator& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return OreOperator(a.ring_, a.derivation_, {});
    // power holds D^k * b, built with D * (c D^j) = c D^{j+1} + c' D^j
    std::vector<Rat> power = b.c_;
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
        if (k > 0) {
            std::vector<Rat> next(power.size() + 1, Rat(0));
            for (std::size_t j = 0; j < power.size(); ++j) {
                next[j + 1] += power[j];
                next[j] += power[j].derive(a.derivation_);
            }
            power = std::move(next);
        }
        if (a.c_[k].is_zero()) continue;
        for (std::size_t j = 0; j < power.size(); ++j)
            if (!power[j].is_zero()) out[j] += a.c_[k] * power[j];
    }
    return OreOperator(a.ring_, a.derivation_, std::move(out));
}

Rat OreOperator::apply(const Rat& f) const {
    Rat acc(ring_, Poly());
    Rat g = f;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k > 0) g = g.derive(derivation_);
        if (!c_[k].is_zero()) acc += c_[k] * g;
    }
    return acc;
}

namespace {

bool top_level_sum(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
    }
    return false;
}

} // namespace

std::string OreOperator::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rat& c = c_[k];
        if (c.is_zero()) continue;
        std::string d = k == 1 ? "D" : "D^" + std::to_string(k);
        std::string body;
        if (k == 0) body = c.to_string();
        else if (c.is_one()) body = d;
        else if ((-c).is_one()) body = "-" + d;
        else {
            std::string s = c.to_string();
            body = (top_level_sum(s) ? "(" + s + ")" : s) + "*" + d;
        }
        if (out.empty()) out = body;
        else if (body.front() == '-') out += " - " + body.substr(1);
        else out += " + " + body;
    }
    return out;
}

OreOperator ore_mul(const OreOperator& l, const OreOperator& m) { return l * m; }

RightDivision right_divide(const OreOperator& l, const OreOperator& d) {
    check_same(l, d);
    if (d.is_zero()) throw std::domain_error("right division by the zero operator");
    OreOperator q(l.ring(), l.derivation(), {});
    OreOperator r = l;
    Rat lc_inv = d.leading().inverse();
    while (!r.is_zero() && r.order() >= d.order()) {
        int k = r.order() - d.order();
        Rat c = r.leading() * lc_inv;
        OreOperator term = times_d_power(OreOperator::identity(l.ring(), l.derivation()), c, k);
        q = q + term;
        OreOperator sub = term * d;
        r = r - sub;
        // exact cancellation of the leading term is guaranteed; trim handles it
    }
    return {q, r};
}

bool right_divides(const OreOperator& d, const OreOperator& l) {
    return right_divide(l, d).remainder.is_zero();
}

OreOperator gcrd(const OreOperator& l, const OreOperator& m) {
    check_same(l, m);
    if (l.is_zero() && m.is_zero()) throw std::domain_error("gcrd of two zero operators");
    OreOperator a = l, b = m;
    while (!b.is_zero()) {
        OreOperator r = right_divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

OreOperator lclm(const OreOperator& l, const OreOperator& m) {
    check_same(l, m);
    if (l.is_zero() && m.is_zero()) throw std::domain_error("lclm of two zero operators");
    if (l.is_zero() || m.is_zero()) return OreOperator(l.ring(), l.derivation(), {});
    // Extended Euclid: r_i = s_i l + u_i m. At termination s_{n+1} l = -u_{n+1} m.
    OreOperator r0 = l, r1 = m;
    OreOperator s0 = OreOperator::identity(l.ring(), l.derivation());
    OreOperator s1(l.ring(), l.derivation(), {});
    while (!r1.is_zero()) {
        auto [q, r] = right_divide(r0, r1);
        OreOperator s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return (s1 * l).monic();
}

Rat apply(const OreOperator& l, const Rat& f) { return l.apply(f); }

namespace {

DenseMatrix<Rat> wronskian(const std::vector<Rat>& gens, std::size_t rows, std::size_t derivation) {
    DenseMatrix<Rat> w(rows, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Rat g = gens[j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i > 0) g = g.derive(derivation);
            w(i, j) = g;
        }
    }
    return w;
}

} // namespace

std::size_t wronskian_rank(const std::vector<Rat>& gens, std::size_t derivation) {
    if (gens.empty()) return 0;
    return rank(wronskian(gens, gens.size(), derivation));
}

Annihilator annihilator_of_span(const RingPtr& ring, std::size_t derivation, const std::vector<Rat>& gens) {
    if (gens.empty()) throw std::invalid_argument("annihilator of an empty generator list");
    for (const auto& g : gens) check_param(g);
    Annihilator out;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        std::vector<Rat> trial = out.basis;
        trial.push_back(g);
        if (rank(wronskian(trial, trial.size(), derivation)) == trial.size()) out.basis = std::move(trial);
    }
    if (out.basis.empty()) {
        out.op = OreOperator::identity(ring, derivation);
        out.all_zero = true;
        return out;
    }
    // L = D^r + sum_{k<r} c_k D^k with L(b_j) = 0:  sum_k c_k D^k b_j = -D^r b_j
    const std::size_t r = out.basis.size();
    DenseMatrix<Rat> w = wronskian(out.basis, r + 1, derivation);
    DenseMatrix<Rat> sys(r, r);
    std::vector<Rat> rhs(r);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) sys(j, k) = w(k, j);
        rhs[j] = -w(r, j);
    }
    auto sol = solve(sys, rhs);
    if (!sol) throw std::logic_error("Wronskian system is singular");
    std::vector<Rat> coeffs = std::move(*sol);
    coeffs.emplace_back(1);
    out.op = OreOperator(ring, derivation, std::move(coeffs));
    return out;
}

namespace {

struct OperatorAlgebra {
    using Value = OreOperator;
    RingPtr ring;
    std::size_t derivation;

    OreOperator scalar(const Rat& c) const { return OreOperator::scalar(ring, derivation, c); }
    OreOperator integer(const mpz_class& z) const { return scalar(Rat(mpq_class(z))); }
    OreOperator identifier(const std::string& name, std::size_t pos) const {
        if (name == "D") return OreOperator::d(ring, derivation);
        auto idx = ring->index_of(name);
        if (!idx) throw ParseError(pos, "unknown identifier '" + name + "'");
        if (*idx == 0) throw ParseError(pos, "operator coefficients cannot involve '" + name + "'");
        return scalar(Rat::variable(ring, name));
    }
    OreOperator add(const OreOperator& a, const OreOperator& b) const { return a + b; }
    OreOperator sub(const OreOperator& a, const OreOperator& b) const { return a - b; }
    OreOperator mul(const OreOperator& a, const OreOperator& b) const { return a * b; }
    OreOperator neg(const OreOperator& a) const { return -a; }
    OreOperator div(const OreOperator& a, const OreOperator& b, std::size_t pos) const {
        if (b.order() != 0) throw ParseError(pos, "can only divide by a coefficient");
        const Rat& c = b.leading();
        // a / c means a * (1/c) as a scalar on the right; only defined
        // unambiguously when a is a scalar or c is a constant
        if (a.order() > 0 && !c.is_constant()) throw ParseError(pos, "ambiguous division of an operator by a non-constant");
        return a * scalar(c.inverse());
    }
    OreOperator pow(const OreOperator& a, long e, std::size_t pos) const {
        if (a.order() <= 0) {
            if (a.is_zero() && e < 0) throw ParseError(pos, "division by zero");
            return scalar(a.is_zero() ? Rat(e == 0 ? 1 : 0) : a.leading().pow(static_cast<int>(e)));
        }
        if (e < 0) throw ParseError(pos, "negative power of an operator");
        OreOperator out = OreOperator::identity(ring, derivation);
        for (long k = 0; k < e; ++k) out = out * a;
        return out;
    }
};

} // namespace

OreOperator parse_operator(std::string_view src, const RingPtr& ring, std::size_t derivation) {
    OperatorAlgebra alg{ring, derivation};
    return detail::Parser<OperatorAlgebra>(src, alg).parse();
}

} // namespace ppv
