#include "ppv/rat.hpp"

namespace ppv {

namespace {

RingPtr pick_ring(const RingPtr& a, const RingPtr& b) {
    if (!a) return b;
    if (!b || a == b || *a == *b) return a;
    throw std::invalid_argument("rational functions from different rings");
}

} // namespace

RingPtr common_ring(const Rat& a, const Rat& b) {
    if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) {
        // constants combine freely
        if (a.is_constant()) return b.ring_;
        if (b.is_constant()) return a.ring_;
    }
    return pick_ring(a.ring_, b.ring_);
}

Rat::Rat(RingPtr ring, Poly num, Poly den) : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    canonicalize();
}

Rat Rat::variable(const RingPtr& ring, std::string_view name) {
    return Rat(ring, Poly::variable(ring->require(name)));
}

Rat Rat::constant(const RingPtr& ring, const mpq_class& c) { return Rat(ring, Poly(c)); }

mpq_class Rat::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a rational constant: " + to_string());
    if (num_.is_zero()) return 0;
    return num_.leading_coeff() / den_.leading_coeff();
}

void Rat::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    mpq_class lc = den_.leading_coeff();
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    ring_ = common_ring(*this, o);
    if (o.is_zero()) return *this;
    if (is_zero()) {
        num_ = o.num_;
        den_ = o.den_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        Poly g = gcd(den_, o.den_);
        Poly a = divide_exact(o.den_, g);
        Poly b = divide_exact(den_, g);
        num_ = num_ * a + o.num_ * b;
        den_ = den_ * a;
    }
    canonicalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
    ring_ = common_ring(*this, o);
    if (is_zero() || o.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return *this;
    }
    // cross-cancel first so the product needs no further gcd
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n = divide_exact(num_, g1) * divide_exact(o.num_, g2);
    Poly d = divide_exact(den_, g2) * divide_exact(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    mpq_class lc = den_.leading_coeff();
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return *this *= o.inverse();
}

Rat Rat::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rat(ring_, den_, num_);
}

Rat Rat::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Rat r(ring_, num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    return r;
}

Rat Rat::derive(std::string_view var) const {
    if (!ring_) {
        if (is_constant()) return Rat();
        throw std::invalid_argument("derivative of a ring-less value");
    }
    return derive(ring_->require(var));
}

Rat Rat::derive(std::size_t var) const {
    if (is_zero()) return Rat(ring_, Poly());
    Poly dn = num_.derivative(var);
    if (den_.is_constant()) return Rat(ring_, dn, den_);
    Poly dd = den_.derivative(var);
    if (dd.is_zero()) return Rat(ring_, dn, den_);
    return Rat(ring_, dn * den_ - num_ * dd, den_ * den_);
}

Rat Rat::substitute(std::size_t var, const Rat& value) const {
    RingPtr ring = ring_ ? ring_ : value.ring_;
    auto eval = [&](const Poly& p) {
        auto coeffs = p.coefficients_in(var);
        Rat acc(ring, Poly());
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * value + Rat(ring, coeffs[k]);
        return acc;
    };
    return eval(num_) / eval(den_);
}

std::string Rat::to_string() const {
    static const Ring anonymous("x", {"t1", "t2", "t3", "t4", "t5", "t6", "t7"});
    const Ring& names = ring_ ? *ring_ : anonymous;
    if (den_.is_one()) return num_.to_string(names);
    // print with integer coefficients: (2*x + 1)/(2*t) rather than (x + 1/2)/t
    mpz_class scale = 1;
    for (const Poly* p : {&num_, &den_}) {
        mpz_class l = p->coefficient_denominator_lcm();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), l.get_mpz_t());
    }
    Poly num = num_ * mpq_class(scale), den = den_ * mpq_class(scale);
    std::string n = num.to_string(names);
    std::string d = den.to_string(names);
    bool simple_num = num.term_count() == 1;
    bool simple_den = den.term_count() == 1 && d.find_first_of("*/") == std::string::npos;
    if (!simple_num) n = "(" + n + ")";
    if (!simple_den) d = "(" + d + ")";
    return n + "/" + d;
}

bool is_zero(const Rat& r) { return r.is_zero(); }
std::string to_string(const Rat& r) { return r.to_string(); }

} // namespace ppv
