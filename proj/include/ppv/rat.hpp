#pragma once

#include "ppv/poly.hpp"
#include "ppv/ring.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppv {

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact element of Q(t1..tm)(x) in canonical form: gcd(num, den) = 1 and the
/// grlex leading coefficient of den is 1.
///
/// Elements free of x play the role of the parameter field Q(t1..tm); use
/// is_param() to test for that. A Rat carries its ring only for naming
/// variables. Ring-less values are rational constants and mix with any ring.
class Rat {
public:
    Rat() : den_(1) {}
    Rat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const mpq_class& c) : num_(c), den_(1) {}
    Rat(RingPtr ring, Poly num, Poly den = Poly(1));

    static Rat variable(const RingPtr& ring, std::string_view name);
    static Rat constant(const RingPtr& ring, const mpq_class& c);

    const RingPtr& ring() const { return ring_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True for elements of Q.
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// True when x does not occur (an element of Q(t1..tm)).
    bool is_param() const { return !num_.involves(0) && !den_.involves(0); }
    /// Value of a constant element; throws otherwise.
    mpq_class constant_value() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rat inverse() const;
    Rat pow(int e) const;

    /// Partial derivative with respect to a named variable of the ring.
    Rat derive(std::string_view var) const;
    Rat derive(std::size_t var) const;

    /// Replace variable var by a rational function.
    Rat substitute(std::size_t var, const Rat& value) const;

    /// Degree of numerator minus degree of denominator in x is not meaningful
    /// for every caller; these expose the raw x-degrees.
    int num_degree(std::size_t var) const { return num_.degree(var); }
    int den_degree(std::size_t var) const { return den_.degree(var); }

    /// Size measure used for pivot selection.
    std::size_t complexity() const { return num_.term_count() + den_.term_count(); }

    std::string to_string() const;

private:
    friend RingPtr common_ring(const Rat& a, const Rat& b);
    void canonicalize();
    RingPtr ring_;
    Poly num_, den_;
};

/// The ring shared by a and b; throws std::invalid_argument on a mismatch.
RingPtr common_ring(const Rat& a, const Rat& b);

bool is_zero(const Rat& r);
std::string to_string(const Rat& r);

} // namespace ppv
