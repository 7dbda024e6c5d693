#pragma once

// Classical root systems A/B/C/D in the orthonormal e-basis.
//
// A series of rank r is realized in n = r + 1 coordinates (zero coordinate sum),
// B/C/D of rank n in n coordinates. The pairing is the Euclidean one on
// e-coordinates, i.e. the Killing form up to an overall scale.

#include "cytkit/linalg.hpp"
#include "cytkit/numeric.hpp"

#include <string>
#include <vector>

namespace cytkit::rootsys {

enum class Series { A, B, C, D };

char series_letter(Series s);
Series parse_series(const std::string& text);

/// Smallest admissible rank: A 1, B 2, C 2, D 3.
int min_rank(Series s);
void check_rank(Series s, int rank);

/// Number of e-coordinates used by the series at this rank.
std::size_t ambient_dim(Series s, int rank);

using Weight = RatVector;

struct CartanMatrix {
    std::vector<std::vector<Int>> entries;
    std::size_t size() const { return entries.size(); }
};

std::vector<Weight> simple_roots(Series s, int rank);
std::vector<Weight> positive_roots(Series s, int rank);
Weight sum_positive_roots(Series s, int rank);

/// Coefficients c with w = sum c_i alpha_i. Throws DomainError if w is not
/// in the span of the simple roots.
RatVector simple_root_coefficients(const Weight& w, Series s, int rank);

/// Inverse of simple_root_coefficients.
Weight from_simple_root_coefficients(const RatVector& c, Series s, int rank);

/// Weight w with 2(w, alpha_j)/(alpha_j, alpha_j) = delta_kj, k is 1-based.
/// For A this is e_1 + ... + e_k - k/n (e_1 + ... + e_n).
Weight fundamental_weight(Series s, int rank, int k);

/// a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
CartanMatrix cartan_matrix(Series s, int rank);

/// 2 (w, alpha) / (alpha, alpha).
Rat coroot_pairing(const Weight& w, const Weight& alpha);

// Variants without the public rank bounds, used for white sub-diagrams
// (B1, C1 and friends appear there).
namespace detail {
std::vector<Weight> simple_roots_unchecked(Series s, int rank);
std::vector<Weight> positive_roots_unchecked(Series s, int rank);
RatVector sum_coefficients_unchecked(Series s, int rank);
}  // namespace detail

}  // namespace cytkit::rootsys
