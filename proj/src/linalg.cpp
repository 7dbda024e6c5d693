#include "cytkit/linalg.hpp"

#include "cytkit/errors.hpp"

namespace cytkit {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DomainError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const
{
    if (cols_ != other.rows_)
        throw DomainError("matrix product dimension mismatch");
    RatMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p(i, j) += a * other(k, j);
        }
    return p;
}

RatVector RatMatrix::operator*(const RatVector& v) const
{
    if (cols_ != v.size())
        throw DomainError("matrix-vector dimension mismatch");
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

RatMatrix RatMatrix::operator-() const
{
    RatMatrix m = *this;
    for (auto& x : m.data_)
        x = -x;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DomainError("matrix sum dimension mismatch");
    RatMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] += other.data_[i];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const { return *this + (-other); }

RatMatrix RatMatrix::operator*(const Rat& s) const
{
    RatMatrix m = *this;
    for (auto& x : m.data_)
        x *= s;
    return m;
}

bool RatMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

Rat determinant(RatMatrix m)
{
    if (m.rows() != m.cols())
        throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0)
                continue;
            Rat f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rat piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            Rat f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b)
{
    auto inv = inverse(a);
    if (!inv)
        return std::nullopt;
    return (*inv) * b;
}

std::optional<RatVector> solve_least(const RatMatrix& a, const RatVector& b)
{
    // Row-reduce [A | b]; the system must be consistent and have a unique solution.
    const std::size_t m = a.rows(), n = a.cols();
    RatMatrix aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && row < m; ++c) {
        std::size_t p = row;
        while (p < m && aug(p, c) == 0)
            ++p;
        if (p == m)
            continue;
        for (std::size_t j = 0; j <= n; ++j)
            std::swap(aug(p, j), aug(row, j));
        Rat piv = aug(row, c);
        for (std::size_t j = 0; j <= n; ++j)
            aug(row, j) /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || aug(r, c) == 0)
                continue;
            Rat f = aug(r, c);
            for (std::size_t j = 0; j <= n; ++j)
                aug(r, j) -= f * aug(row, j);
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (aug(r, n) != 0)
            return std::nullopt;
    if (pivot_col.size() != n)
        throw DomainError("solve_least: system is rank deficient");
    RatVector x(n);
    for (std::size_t r = 0; r < row; ++r)
        x[pivot_col[r]] = aug(r, n);
    return x;
}

bool is_positive_definite(const RatMatrix& m)
{
    if (!m.is_symmetric())
        return false;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        RatMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor(i, j) = m(i, j);
        if (determinant(minor) <= 0)
            return false;
    }
    return true;
}

Rat dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size())
        throw DomainError("dot product dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

}  // namespace cytkit
