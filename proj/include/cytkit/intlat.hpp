#pragma once

// Exact integer linear algebra: Bezout chains, SL(k, Z) completion,
// Smith and Hermite normal forms, integer kernels.

#include "cytkit/numeric.hpp"

#include <optional>
#include <vector>

namespace cytkit::intlat {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    std::vector<IntVector> row_list() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntVector operator*(const IntVector& v) const;
    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row a += f * row b
    void add_row(std::size_t a, std::size_t b, const Int& f);
    /// col a += f * col b
    void add_col(std::size_t a, std::size_t b, const Int& f);
    void negate_row(std::size_t a);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct BezoutResult {
    Int g, x, y;
};

/// g = gcd(a, b) > 0 with a x + b y = g. Throws DomainError on (0, 0).
BezoutResult extended_gcd(const Int& a, const Int& b);

/// Exact determinant (fraction-free elimination).
Int determinant(const IntMatrix& m);

/// k x k matrix with first row v and determinant +1, built by chaining
/// 2 x 2 Bezout basis changes e_1' = (g_j/g_{j+1}) e_1' + (a_{j+1}/g_{j+1}) e_{j+1}.
IntMatrix complete_to_sl(const IntVector& v);

struct SmithDecomposition {
    IntMatrix u, d, v;  ///< u * m * v == d
    std::size_t rank = 0;
    IntVector invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m;
/// zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Z-basis of {x : m x = 0}, Hermite-reduced, each vector primitive.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

Int rank(const IntMatrix& m);

struct ClassBasis {
    Int m;        ///< gcd of the input
    IntMatrix a;  ///< SL(2k, Z) with first row d / m
};

ClassBasis normalize_class_basis(const IntVector& d);

/// Integer coordinates c with sum c_i basis_i == v, if they exist.
/// The basis rows must be linearly independent.
std::optional<IntVector> coordinates_in_basis(const std::vector<IntVector>& basis, const IntVector& v);

/// Abelian group Z^generators / (row span of relations): free rank and
/// invariant factors greater than one.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    IntVector torsion;
};

AbelianInvariants quotient_invariants(const IntMatrix& relations, std::size_t generators);

}  // namespace cytkit::intlat
