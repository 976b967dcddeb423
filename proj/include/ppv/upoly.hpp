#pragma once

#include "ppv/rat.hpp"

#include <utility>
#include <vector>

namespace ppv {

/// Dense polynomial in the main variable x with coefficients in Q(t1..tm)
/// (x-free Rat values), lowest degree first. Never has trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs);
    /// Split a polynomial in x, t1..tm by powers of x.
    static UPoly from_poly(const RingPtr& ring, const Poly& p);
    static UPoly x_minus(const Rat& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    const Rat& leading() const { return c_.back(); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const Rat& s);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly derivative() const;
    Rat evaluate(const Rat& at) const;
    /// p(x + c).
    UPoly taylor_shift(const Rat& c) const;
    UPoly monic() const;

    /// As a rational function of the ring (x is variable 0).
    Rat to_rat(const RingPtr& ring) const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);

} // namespace ppv
