#pragma once

#include "cytkit/numeric.hpp"

#include <optional>
#include <vector>

namespace cytkit {

/// Dense row-major rational matrix. Small sizes only (at most a few dozen).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& other) const;
    RatVector operator*(const RatVector& v) const;
    RatMatrix operator-() const;
    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix operator*(const Rat& s) const;
    bool operator==(const RatMatrix& other) const = default;

    bool is_symmetric() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

Rat determinant(RatMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Solves A x = b for square nonsingular A; nullopt when A is singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Solves the (possibly overdetermined) system A x = b; nullopt if inconsistent.
/// Requires full column rank when a solution exists.
std::optional<RatVector> solve_least(const RatMatrix& a, const RatVector& b);

/// True iff every leading principal minor is positive.
bool is_positive_definite(const RatMatrix& m);

Rat dot(const RatVector& a, const RatVector& b);

}  // namespace cytkit
