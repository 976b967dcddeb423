#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ppv {

class Ring;

inline constexpr std::size_t kMaxVars = 8;
using Exponents = std::array<std::uint16_t, kMaxVars>;

int total_degree(const Exponents& e);

/// Graded lexicographic order, variable 0 most significant. Sorting a map with
/// this comparator puts the leading term first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q. Variables are positions 0..kMaxVars-1;
/// names live in a Ring and only matter for printing.
class Poly {
public:
    using TermMap = std::map<Exponents, mpq_class, GrlexGreater>;

    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    explicit Poly(const mpq_class& c);

    static Poly variable(std::size_t var);
    static Poly monomial(const mpq_class& c, const Exponents& e);
    static Poly power_of(std::size_t var, int exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const mpq_class& leading_coeff() const;
    const Exponents& leading_exponents() const;
    /// Constant term (zero if absent).
    mpq_class constant_term() const;

    int degree(std::size_t var) const;
    int total_degree() const;
    /// Lowest power of var dividing every term.
    int min_degree(std::size_t var) const;
    bool involves(std::size_t var) const { return degree(var) > 0; }
    std::uint32_t variable_mask() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const mpq_class& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned e) const;
    Poly derivative(std::size_t var) const;
    /// Replace var by `value` everywhere.
    Poly substitute(std::size_t var, const Poly& value) const;
    /// Replace every variable i by variable i + offsets[i].
    Poly shifted(std::span<const mpq_class> offsets) const;
    /// Coefficient of var^deg, as a polynomial free of var.
    Poly coefficient(std::size_t var, int deg) const;
    /// Coefficients indexed by the power of var.
    std::vector<Poly> coefficients_in(std::size_t var) const;
    /// Multiply by var^k.
    Poly shift_var(std::size_t var, int k) const;
    Poly truncated(int max_total_degree) const;
    Poly homogeneous_part(int degree) const;
    mpq_class evaluate(std::span<const mpq_class> point) const;
    /// Substitute a value for one variable.
    Poly partial_evaluate(std::size_t var, const mpq_class& value) const;
    /// Denominator lcm of the coefficients (positive integer).
    mpz_class coefficient_denominator_lcm() const;

    std::string to_string(const Ring& ring) const;

private:
    void add_term(const Exponents& e, const mpq_class& c);
    TermMap terms_;
};

/// Scale so the grlex leading coefficient is 1. Zero stays zero.
Poly monic(const Poly& p);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);

/// Monic greatest common divisor (grlex leading coefficient 1). gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

/// Pseudo-remainder of a by b viewed as polynomials in var.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

/// Content of p as a polynomial in var (monic gcd of its coefficients).
Poly content_in(const Poly& p, std::size_t var);

/// Square-free part with respect to var: p / gcd(p, dp/dvar), monic.
Poly squarefree_part(const Poly& p, std::size_t var);

} // namespace ppv
