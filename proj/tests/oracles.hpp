#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the algorithms under test beyond plain data types.

#include "cytkit/intlat.hpp"
#include "cytkit/kform.hpp"
#include "cytkit/rootsys.hpp"

#include <random>
#include <vector>

namespace oracle {

using cytkit::Int;
using cytkit::IntVector;
using cytkit::Rat;
using cytkit::RatVector;

/// All roots of the classical system written down from the textbook lists
/// (e_i - e_j, +-e_i +- e_j, +-e_i, +-2e_i), positive = first nonzero entry > 0.
std::vector<RatVector> positive_roots_from_lists(cytkit::rootsys::Series s, int rank);

/// Cofactor expansion along the first row.
Int laplace_determinant(const std::vector<IntVector>& m);

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors.
IntVector determinantal_invariants(const std::vector<IntVector>& m);

/// Small-box scan: all integer x with |x_i| <= bound and m x = 0.
std::vector<IntVector> kernel_scan(const std::vector<IntVector>& m, int bound);

Rat dot(const RatVector& a, const RatVector& b);

IntVector random_primitive(std::mt19937& rng, std::size_t len, int bound);

/// Value of a form on basis vectors X_{idx[0]}, X_{idx[1]}, ... (any order).
Rat evaluate(const cytkit::KForm& f, const std::vector<std::size_t>& idx);

/// Chevalley-Eilenberg differential from brackets c[i][j][k] ([X_i, X_j] = c_ij^k X_k):
/// dw(X_0..X_k) = sum_{i<j} (-1)^{i+j} w([X_i, X_j], X_0, ..^i..^j.., X_k).
cytkit::KForm ce_differential(const std::vector<std::vector<RatVector>>& c, const cytkit::KForm& w);

/// Random form with small integer coefficients.
cytkit::KForm random_form(std::mt19937& rng, std::size_t dim, int degree, int terms = 4);

/// Cohomology of Z[s] (x) Lambda(u3, u5, u7), D u3 = m4 s^2, D u5 = n6 s^3,
/// D u7 = k8 s^4, in degrees 0..top: (free rank, torsion > 1) from the ranks
/// and determinantal invariants of the differentials.
std::vector<std::pair<std::size_t, IntVector>> koszul_cohomology(const Int& m4, const Int& n6, const Int& k8, int top);

}  // namespace oracle
