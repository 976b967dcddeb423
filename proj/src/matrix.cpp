#include "ppv/matrix.hpp"

#include "ppv/parser.hpp"

#include <stdexcept>

namespace ppv {

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

template <class F>
RatMatrix map(const RatMatrix& a, F f) {
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j));
    return out;
}

} // namespace

RatMatrix zero_matrix(std::size_t n) { return RatMatrix(n, n); }

RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    require_same_shape(a, b);
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    require_same_shape(a, b);
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMatrix operator*(const Rat& c, const RatMatrix& a) {
    return map(a, [&](const Rat& v) { return c * v; });
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

RatMatrix derive(const RatMatrix& a, std::size_t var) {
    return map(a, [&](const Rat& v) { return v.derive(var); });
}

RatMatrix substitute(const RatMatrix& a, std::size_t var, const Rat& value) {
    return map(a, [&](const Rat& v) { return v.substitute(var, value); });
}

bool is_zero(const RatMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

Rat trace(const RatMatrix& a) {
    Rat t(0);
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

RatMatrix inverse(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Rat(1);
    }
    auto e = row_reduce(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DivisionByZero("singular matrix");
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
    return out;
}

std::vector<std::vector<std::string>> to_strings(const RatMatrix& a) {
    std::vector<std::vector<std::string>> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i].push_back(a(i, j).to_string());
    return out;
}

RatMatrix from_strings(const std::vector<std::vector<std::string>>& rows, const RingPtr& ring) {
    const std::size_t n = rows.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_expr(rows[i][j], ring);
    }
    return m;
}

} // namespace ppv
