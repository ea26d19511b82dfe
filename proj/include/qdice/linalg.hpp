#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "qdice/rational.hpp"

namespace qdice {

/// Fixed-length vector of rationals.
class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t n) : e_(n) {}
    RatVector(std::initializer_list<Rational> xs) : e_(xs) {}
    explicit RatVector(std::vector<Rational> xs) : e_(std::move(xs)) {}

    std::size_t size() const { return e_.size(); }
    Rational& operator[](std::size_t i) { return e_[i]; }
    const Rational& operator[](std::size_t i) const { return e_[i]; }

    auto begin() { return e_.begin(); }
    auto end() { return e_.end(); }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool operator==(const RatVector&) const = default;

private:
    std::vector<Rational> e_;
};

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& c, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

/// Rectangular matrix of rationals, stored by rows.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    /// All rows must share one length.
    explicit RatMatrix(std::vector<RatVector> rows);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    const RatVector& row(std::size_t r) const { return rows_[r]; }

    bool operator==(const RatMatrix&) const = default;

private:
    std::vector<RatVector> rows_;
    std::size_t cols_ = 0;
};

/// Row rank by Gaussian elimination, first nonzero pivot in column order.
std::size_t rank(const RatMatrix& m);

/// Exact determinant of a square matrix (fraction-free Bareiss on
/// denominator-cleared rows). Throws std::invalid_argument if not square.
Rational determinant(const RatMatrix& m);

/// One exact solution of m x = rhs with free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& rhs);

}  // namespace qdice
