#include "ppv/poly.hpp"

#include "ppv/ring.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace ppv {

int total_degree(const Exponents& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

const Exponents kZeroExp{};

Exponents add_exp(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents sub_exp(const Exponents& b, const Exponents& a) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(b[i] - a[i]);
    return r;
}

} // namespace

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(kZeroExp, mpq_class(c));
}

Poly::Poly(const mpq_class& c) {
    if (sgn(c) != 0) terms_.emplace(kZeroExp, c);
}

Poly Poly::variable(std::size_t var) { return power_of(var, 1); }

Poly Poly::monomial(const mpq_class& c, const Exponents& e) {
    Poly p;
    if (sgn(c) != 0) p.terms_.emplace(e, c);
    return p;
}

Poly Poly::power_of(std::size_t var, int exp) {
    if (var >= kMaxVars) throw std::out_of_range("variable index out of range");
    Exponents e{};
    e[var] = static_cast<std::uint16_t>(exp);
    return monomial(mpq_class(1), e);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == kZeroExp && terms_.begin()->second == 1;
}

const mpq_class& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

const Exponents& Poly::leading_exponents() const {
    if (terms_.empty()) throw std::domain_error("leading exponents of zero polynomial");
    return terms_.begin()->first;
}

mpq_class Poly::constant_term() const {
    auto it = terms_.find(kZeroExp);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int Poly::degree(std::size_t var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
    return d;
}

int Poly::total_degree() const {
    // grlex: the first term has the largest total degree
    return terms_.empty() ? 0 : ppv::total_degree(terms_.begin()->first);
}

int Poly::min_degree(std::size_t var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min<int>(d, e[var]);
    return d;
}

std::uint32_t Poly::variable_mask() const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i]) m |= (1u << i);
    return m;
}

void Poly::add_term(const Exponents& e, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpq_class& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * e[var]);
    }
    return r;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
    auto coeffs = coefficients_in(var);
    Poly r;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        r *= value;
        r += coeffs[k];
    }
    return r;
}

Poly Poly::shifted(std::span<const mpq_class> offsets) const {
    Poly r = *this;
    for (std::size_t i = 0; i < offsets.size() && i < kMaxVars; ++i) {
        if (sgn(offsets[i]) == 0 || !r.involves(i)) continue;
        r = r.substitute(i, variable(i) + Poly(offsets[i]));
    }
    return r;
}

Poly Poly::coefficient(std::size_t var, int deg) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        if (e[var] != deg) continue;
        Exponents d = e;
        d[var] = 0;
        r.terms_.emplace(d, c);
    }
    return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
    std::vector<Poly> out(static_cast<std::size_t>(degree(var)) + 1);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[var] = 0;
        out[e[var]].terms_.emplace(d, c);
    }
    return out;
}

Poly Poly::shift_var(std::size_t var, int k) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        int nd = d[var] + k;
        if (nd < 0) throw std::domain_error("negative exponent in shift_var");
        d[var] = static_cast<std::uint16_t>(nd);
        r.terms_.emplace(d, c);
    }
    return r;
}

Poly Poly::truncated(int max_total_degree) const {
    Poly r;
    for (const auto& [e, c] : terms_)
        if (ppv::total_degree(e) <= max_total_degree) r.terms_.emplace(e, c);
    return r;
}

Poly Poly::homogeneous_part(int degree) const {
    Poly r;
    for (const auto& [e, c] : terms_)
        if (ppv::total_degree(e) == degree) r.terms_.emplace(e, c);
    return r;
}

mpq_class Poly::evaluate(std::span<const mpq_class> point) const {
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (!e[i]) continue;
            if (i >= point.size()) throw std::out_of_range("evaluation point too short");
            mpq_class p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
            term *= p;
        }
        sum += term;
    }
    return sum;
}

Poly Poly::partial_evaluate(std::size_t var, const mpq_class& value) const {
    return substitute(var, Poly(value));
}

mpz_class Poly::coefficient_denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

std::string Poly::to_string(const Ring& ring) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpq_class a = abs(c);
        bool negative = sgn(c) < 0;
        std::string mono;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring.name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty()) term = a.get_str();
        else if (a == 1) term = mono;
        else term = a.get_str() + "*" + mono;
        if (first) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    const mpq_class& lc = p.leading_coeff();
    if (lc == 1) return p;
    return p * mpq_class(1 / lc);
}

namespace {

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_constant()) return a * mpq_class(1 / b.leading_coeff());
    Poly q, r = a;
    const Exponents& lb = b.leading_exponents();
    const mpq_class lcb = b.leading_coeff();
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        if (!exp_divides(lb, lr)) return std::nullopt;
        Poly t = Poly::monomial(r.leading_coeff() / lcb, sub_exp(lr, lb));
        q += t;
        r -= t * b;
    }
    return q;
}

} // namespace

Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    auto q = try_divide(a, b);
    if (!q) throw std::domain_error("inexact polynomial division");
    return std::move(*q);
}

bool divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    return try_divide(a, b).has_value();
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
    int db = b.degree(var);
    Poly lcb = b.coefficient(var, db);
    Poly r = a;
    int e = std::max(a.degree(var) - db + 1, 0);
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        Poly lcr = r.coefficient(var, dr);
        r = lcb * r - (lcr * b).shift_var(var, dr - db);
        --e;
    }
    if (e > 0) r *= lcb.pow(static_cast<unsigned>(e));
    return r;
}

namespace {

// Euclid over Q for polynomials in one variable.
Poly univariate_gcd(Poly a, Poly b, std::size_t var) {
    while (!b.is_zero()) {
        int db = b.degree(var);
        mpq_class inv = 1 / b.coefficient(var, db).constant_term();
        while (!a.is_zero() && a.degree(var) >= db) {
            int da = a.degree(var);
            mpq_class f = a.coefficient(var, da).constant_term() * inv;
            a -= (b * f).shift_var(var, da - db);
        }
        std::swap(a, b);
    }
    return monic(a);
}

int lowest_var(std::uint32_t mask) { return std::countr_zero(mask); }

} // namespace

Poly content_in(const Poly& p, std::size_t var) {
    Poly g;
    for (const auto& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

namespace {

mpz_class integer_content(const Poly& p) {
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    return g;
}

mpz_class max_norm(const Poly& p) {
    mpz_class m = 0;
    for (const auto& [e, c] : p.terms())
        if (abs(c.get_num()) > m) m = abs(c.get_num());
    return m;
}

// Heuristic gcd of integer polynomials: evaluate one variable at a large
// integer, recurse, and read the answer back off in balanced base xi.
// Returns nullopt when no evaluation point gave a verified divisor.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b, int depth) {
    std::uint32_t mask = a.variable_mask() | b.variable_mask();
    mpz_class ca = integer_content(a), cb = integer_content(b), gc;
    mpz_gcd(gc.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (mask == 0 || a.is_constant() || b.is_constant()) return Poly(mpq_class(gc));
    Poly pa = a * mpq_class(1, ca), pb = b * mpq_class(1, cb);

    std::size_t var = static_cast<std::size_t>(31 - std::countl_zero(mask));
    int deg = std::max(pa.degree(var), pb.degree(var));
    mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > 20000) return std::nullopt;
        auto h = heuristic_gcd(pa.partial_evaluate(var, mpq_class(xi)), pb.partial_evaluate(var, mpq_class(xi)), depth + 1);
        if (!h) return std::nullopt;
        Poly g;
        mpz_class half = xi / 2;
        for (const auto& [e, c] : h->terms()) {
            mpz_class v = c.get_num();
            for (int k = 0; sgn(v) != 0; ++k) {
                mpz_class d = v % xi;
                if (d > half) d -= xi;
                else if (d < -half) d += xi;
                if (sgn(d) != 0) {
                    Exponents f = e;
                    f[var] = static_cast<std::uint16_t>(k);
                    g += Poly::monomial(mpq_class(d), f);
                }
                v = (v - d) / xi;
            }
        }
        if (!g.is_zero()) {
            g *= mpq_class(1, integer_content(g));
            if (divides(g, pa) && divides(g, pb)) return g * mpq_class(gc);
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

Poly integral(const Poly& p) {
    return p * mpq_class(p.coefficient_denominator_lcm());
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    if (a == b) return monic(a);

    std::uint32_t ma = a.variable_mask(), mb = b.variable_mask();
    if (auto h = heuristic_gcd(integral(a), integral(b), 0)) return monic(*h);

    if (std::uint32_t only_a = ma & ~mb) return gcd(content_in(a, lowest_var(only_a)), b);
    if (std::uint32_t only_b = mb & ~ma) return gcd(a, content_in(b, lowest_var(only_b)));
    if (std::popcount(ma) == 1) return univariate_gcd(a, b, lowest_var(ma));

    // main variable: the one of smallest degree keeps the remainder sequence short
    std::size_t var = 0;
    int best = -1;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (!(ma & (1u << i))) continue;
        int d = std::max(a.degree(i), b.degree(i));
        if (best < 0 || d < best) {
            best = d;
            var = i;
        }
    }

    Poly ca = content_in(a, var), cb = content_in(b, var);
    Poly gc = gcd(ca, cb);
    Poly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    while (true) {
        Poly r = pseudo_remainder(pa, pb, var);
        if (r.is_zero()) break;
        if (r.degree(var) == 0) {
            pb = Poly(1);
            break;
        }
        pa = std::move(pb);
        pb = divide_exact(r, content_in(r, var));
    }
    if (!pb.is_constant()) pb = divide_exact(pb, content_in(pb, var));
    return monic(gc * pb);
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return monic(divide_exact(a, gcd(a, b)) * b);
}

Poly squarefree_part(const Poly& p, std::size_t var) {
    if (p.is_zero()) return p;
    Poly g = gcd(p, p.derivative(var));
    return monic(divide_exact(p, g));
}

} // namespace ppv
