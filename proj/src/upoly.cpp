#include "ppv/upoly.hpp"

#include <stdexcept>

namespace ppv {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_poly(const RingPtr& ring, const Poly& p) {
    std::vector<Rat> out;
    for (auto& c : p.coefficients_in(0)) out.emplace_back(ring, c);
    return UPoly(std::move(out));
}

UPoly UPoly::x_minus(const Rat& c) { return UPoly({-c, Rat(1)}); }

Rat UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat();
    return c_[static_cast<std::size_t>(k)];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.c_.size()) out[i] += a.c_[i];
        if (i < b.c_.size()) out[i] += b.c_[i];
    }
    return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const Rat& s) {
    std::vector<Rat> out = a.c_;
    for (auto& c : out) c *= s;
    return UPoly(std::move(out));
}

UPoly UPoly::derivative() const {
    std::vector<Rat> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UPoly(std::move(out));
}

Rat UPoly::evaluate(const Rat& at) const {
    Rat acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
    return acc;
}

UPoly UPoly::taylor_shift(const Rat& c) const {
    // Horner with the linear polynomial (x + c)
    UPoly xc({c, Rat(1)});
    UPoly acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * xc + UPoly({c_[k]});
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Rat UPoly::to_rat(const RingPtr& ring) const {
    Rat acc(ring, Poly());
    Rat x(ring, Poly::variable(0));
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
    Rat inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        const Rat& top = r[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        Rat f = top * inv;
        q[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

} // namespace ppv
