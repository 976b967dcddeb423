#pragma once

#include "ppv/parser_core.hpp"
#include "ppv/rat.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppv {

/// Linear differential operator sum a_k D^k over Q(t1..tm), where D is the
/// derivation with respect to one parameter. Coefficients are x-free.
class OreOperator {
public:
    OreOperator() = default;
    /// coeffs[k] multiplies D^k. Trailing zeros are dropped.
    OreOperator(RingPtr ring, std::size_t derivation, std::vector<Rat> coeffs);

    static OreOperator scalar(const RingPtr& ring, std::size_t derivation, const Rat& c);
    static OreOperator identity(const RingPtr& ring, std::size_t derivation) { return scalar(ring, derivation, Rat(1)); }
    static OreOperator d(const RingPtr& ring, std::size_t derivation);

    const RingPtr& ring() const { return ring_; }
    std::size_t derivation() const { return derivation_; }
    const std::string& derivation_name() const { return ring_->name(derivation_); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero operator.
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    const Rat& leading() const { return c_.back(); }

    OreOperator monic() const;

    OreOperator operator-() const;
    friend OreOperator operator+(const OreOperator& a, const OreOperator& b);
    friend OreOperator operator-(const OreOperator& a, const OreOperator& b);
    /// Composition: (a * b)(f) = a(b(f)).
    friend OreOperator operator*(const OreOperator& a, const OreOperator& b);
    friend bool operator==(const OreOperator& a, const OreOperator& b) {
        return a.derivation_ == b.derivation_ && a.c_ == b.c_;
    }

    /// sum a_k D^k(f). f may involve x; D only acts on the designated parameter.
    Rat apply(const Rat& f) const;

    /// e.g. "D^2 - 1/t*D"
    std::string to_string() const;

private:
    void trim();
    RingPtr ring_;
    std::size_t derivation_ = 1;
    std::vector<Rat> c_;
};

struct MixedDerivations : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

OreOperator ore_mul(const OreOperator& l, const OreOperator& m);

struct RightDivision {
    OreOperator quotient, remainder;
};
/// l = quotient * d + remainder with ord remainder < ord d.
RightDivision right_divide(const OreOperator& l, const OreOperator& d);
bool right_divides(const OreOperator& d, const OreOperator& l);

/// Monic greatest common right divisor.
OreOperator gcrd(const OreOperator& l, const OreOperator& m);
/// Monic least common left multiple; zero if either argument is zero.
OreOperator lclm(const OreOperator& l, const OreOperator& m);

Rat apply(const OreOperator& l, const Rat& f);

/// Rank over Q(t1..tm) of the Wronskian matrix (D^i g_j).
std::size_t wronskian_rank(const std::vector<Rat>& gens, std::size_t derivation);

struct Annihilator {
    OreOperator op;
    /// True when every generator was zero and the identity was returned.
    bool all_zero = false;
    /// Generators kept as a Wronskian-independent basis.
    std::vector<Rat> basis;
};

/// Monic operator of minimal order killing every generator. Its kernel over
/// a differentially closed extension is the constant span of gens.
Annihilator annihilator_of_span(const RingPtr& ring, std::size_t derivation, const std::vector<Rat>& gens);

/// Parse a polynomial in "D" with coefficients in the ring's parameters,
/// e.g. "D^2 - (1/t)*D". Coefficients are written to the left of D.
OreOperator parse_operator(std::string_view src, const RingPtr& ring, std::size_t derivation);

} // namespace ppv
