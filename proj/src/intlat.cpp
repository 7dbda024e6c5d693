#include "cytkit/intlat.hpp"

#include "cytkit/errors.hpp"
#include "cytkit/linalg.hpp"

#include <algorithm>

namespace cytkit::intlat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DomainError("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DomainError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const
{
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

std::vector<IntVector> IntMatrix::row_list() const
{
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
    if (cols_ != other.rows_)
        throw DomainError("matrix product dimension mismatch");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p(i, j) += a * other(k, j);
        }
    return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const
{
    if (cols_ != v.size())
        throw DomainError("matrix-vector dimension mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& f)
{
    if (f == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(a, j) += f * (*this)(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& f)
{
    if (f == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, a) += f * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t a)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(a, j) = -(*this)(a, j);
}

BezoutResult extended_gcd(const Int& a, const Int& b)
{
    if (a == 0 && b == 0)
        throw DomainError("extended_gcd(0, 0) is undefined");
    // Invariant: old_r = a*old_s + b*old_t, r = a*s + b*t.
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Int determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix complete_to_sl(const IntVector& v)
{
    const std::size_t k = v.size();
    if (k == 0)
        throw DomainError("complete_to_sl: empty vector");
    Int g = gcd_of(v);
    if (g != 1)
        throw DomainError("complete_to_sl: vector is not primitive (gcd " + g.get_str() + ")");
    if (k == 1) {
        if (v[0] != 1)
            throw DomainError("complete_to_sl: (-1) has no completion in SL(1, Z)");
        return IntMatrix::identity(1);
    }

    // Rows are basis vectors in standard coordinates. Row 0 always equals
    // (a_1, ..., a_j, 0, ..., 0) / running, where running is the (signed) gcd of
    // the prefix; each step is a 2 x 2 move of determinant one on rows 0 and j.
    IntMatrix basis = IntMatrix::identity(k);
    Int running = v[0];
    for (std::size_t j = 1; j < k; ++j) {
        if (running == 0 && v[j] == 0)
            continue;
        auto [next, s, t] = extended_gcd(running, v[j]);
        // running * s + a_j * t = next, so the move [[running/next, a_j/next], [-t, s]]
        // has determinant (running * s + a_j * t) / next = 1.
        Int p = running / next, q = v[j] / next;
        IntVector r0 = basis.row(0), rj = basis.row(j);
        for (std::size_t c = 0; c < k; ++c) {
            basis(0, c) = p * r0[c] + q * rj[c];
            basis(j, c) = -t * r0[c] + s * rj[c];
        }
        running = next;
    }
    if (running == -1) {
        basis.negate_row(0);
        basis.negate_row(1);
    }
    return basis;
}

IntVector SmithDecomposition::invariant_factors() const
{
    IntVector out;
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(d(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m, u = IntMatrix::identity(rows), v = IntMatrix::identity(cols);
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest-magnitude nonzero entry of the trailing block.
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < best)) {
                    best = abs(a(i, j));
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found)
            break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a(i, t) != 0) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Divisibility: fold a row holding a non-multiple into the pivot row.
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        a.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        clean = false;
                        break;
                    }
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    return {u, a, v, t};
}

IntMatrix hermite_normal_form(const IntMatrix& m)
{
    IntMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c among rows r..end until a single nonzero remains.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c))))
                    best = i;
            if (best == rows)
                break;
            a.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                a.add_row(i, r, -q);
                if (a(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a(r, c) == 0)
            continue;
        if (a(r, c) < 0)
            a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            a.add_row(i, r, -q);
        }
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = a(i, j);
    return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m)
{
    const std::size_t n = m.cols();
    if (n == 0)
        return {};
    auto snf = smith_normal_form(m);
    std::vector<IntVector> cols;
    for (std::size_t j = snf.rank; j < n; ++j)
        cols.push_back(snf.v.col(j));
    if (cols.empty())
        return {};
    auto hnf = hermite_normal_form(IntMatrix::from_rows(cols, n));
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
        IntVector row = hnf.row(i);
        Int g = gcd_of(row);
        if (g > 1)
            for (auto& x : row)
                x /= g;
        basis.push_back(std::move(row));
    }
    return basis;
}

Int rank(const IntMatrix& m) { return Int(static_cast<unsigned long>(smith_normal_form(m).rank)); }

ClassBasis normalize_class_basis(const IntVector& d)
{
    Int m = gcd_of(d);
    if (m == 0)
        throw DomainError("normalize_class_basis: zero class vector");
    IntVector primitive = d;
    for (auto& x : primitive)
        x /= m;
    return {m, complete_to_sl(primitive)};
}

std::optional<IntVector> coordinates_in_basis(const std::vector<IntVector>& basis, const IntVector& v)
{
    if (basis.empty()) {
        for (const auto& x : v)
            if (x != 0)
                return std::nullopt;
        return IntVector{};
    }
    const std::size_t n = v.size(), k = basis.size();
    RatMatrix a(n, k);
    RatVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = v[i];
        for (std::size_t j = 0; j < k; ++j)
            a(i, j) = basis[j][i];
    }
    auto x = solve_least(a, b);
    if (!x)
        return std::nullopt;
    IntVector out;
    for (const auto& r : *x) {
        if (!is_integer(r))
            return std::nullopt;
        out.push_back(r.get_num());
    }
    return out;
}

AbelianInvariants quotient_invariants(const IntMatrix& relations, std::size_t generators)
{
    AbelianInvariants inv;
    if (relations.rows() == 0) {
        inv.free_rank = generators;
        return inv;
    }
    if (relations.cols() != generators)
        throw DomainError("relation matrix width does not match generator count");
    auto snf = smith_normal_form(relations);
    inv.free_rank = generators - snf.rank;
    for (const auto& f : snf.invariant_factors())
        if (f > 1)
            inv.torsion.push_back(f);
    return inv;
}

}  // namespace cytkit::intlat
