#pragma once

#include "ppv/linalg.hpp"
#include "ppv/rat.hpp"

#include <string>
#include <vector>

namespace ppv {

using RatMatrix = DenseMatrix<Rat>;

RatMatrix zero_matrix(std::size_t n);
RatMatrix identity_matrix(std::size_t n);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& c, const RatMatrix& a);
bool operator==(const RatMatrix& a, const RatMatrix& b);
/// a b - b a
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);
RatMatrix derive(const RatMatrix& a, std::size_t var);
RatMatrix substitute(const RatMatrix& a, std::size_t var, const Rat& value);
bool is_zero(const RatMatrix& a);
Rat trace(const RatMatrix& a);
/// Inverse of a square matrix; throws DivisionByZero when singular.
RatMatrix inverse(const RatMatrix& a);
std::vector<std::vector<std::string>> to_strings(const RatMatrix& a);
RatMatrix from_strings(const std::vector<std::vector<std::string>>& rows, const RingPtr& ring);

} // namespace ppv
