#pragma once

#include "ppv/rat.hpp"
#include "ppv/upoly.hpp"

#include <gmpxx.h>

#include <vector>

namespace ppv {

/// Distinct rational roots, in increasing order, of a univariate polynomial
/// with rational coefficients given lowest degree first.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs);

/// Distinct roots in Q(t1..tm) of p, read as a polynomial in x (variable 0)
/// over the parameters. Found by specializing the parameters at an integer
/// point, lifting each rational root to a power series and recovering the
/// rational function from degree bounds; every reported root is verified
/// exactly.
std::vector<Rat> param_roots(const RingPtr& ring, const Poly& p);
std::vector<Rat> param_roots(const UPoly& p, const RingPtr& ring);

} // namespace ppv
