#include "qdice/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qdice {

namespace {

void require_same_size(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
}

}  // namespace

RatVector operator+(const RatVector& a, const RatVector& b) {
    require_same_size(a, b);
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
    require_same_size(a, b);
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector operator*(const Rational& c, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
    require_same_size(a, b);
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, RatVector(cols)), cols_(cols) {}

RatMatrix::RatMatrix(std::vector<RatVector> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        cols_ = rows_[0].size();
        for (const auto& r : rows_)
            if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<RatVector> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));

    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < a.size(); ++c) {
        std::size_t piv = rk;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[rk], a[piv]);
        for (std::size_t r = rk + 1; r < a.size(); ++r) {
            if (a[r][c].is_zero()) continue;
            const Rational f = a[r][c] / a[rk][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[r][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return rk;
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear each row to integers; det(m) = det(int rows) / prod(scales).
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale_prod = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c).num() * (l / m.at(r, c).den());
        scale_prod *= l;
    }

    // Bareiss: every division below is exact.
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(a[piv][k]) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det, scale_prod);
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& rhs) {
    if (m.rows() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
    const std::size_t R = m.rows(), C = m.cols();

    std::vector<RatVector> a(R, RatVector(C + 1));
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) a[r][c] = m.at(r, c);
        a[r][C] = rhs[r];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < C && row < R; ++c) {
        std::size_t piv = row;
        while (piv < R && a[piv][c].is_zero()) ++piv;
        if (piv == R) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row || a[r][c].is_zero()) continue;
            const Rational f = a[r][c] / a[row][c];
            for (std::size_t j = c; j <= C; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < R; ++r)
        if (!a[r][C].is_zero()) return std::nullopt;

    RatVector x(C);  // free variables stay zero
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a[k][C] / a[k][pivot_col[k]];
    return x;
}

}  // namespace qdice
