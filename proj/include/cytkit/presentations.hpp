#pragma once

// Lie algebra presentations used throughout: the 6-dimensional nilmanifold
// with its Strominger data, SU(2) x SU(2), su(3) and the 3-dimensional
// complex Lie algebras viewed as real 6-dimensional algebras.

#include "cytkit/exforms.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace cytkit::presentations {

using exforms::FormMatrix;
using exforms::LiePresentation;

/// c[i][j][k]: [X_i, X_j] = sum_k c[i][j][k] X_k. Must be antisymmetric in i, j.
using StructureConstants = std::vector<std::vector<RatVector>>;

LiePresentation from_structure_constants(const std::vector<std::string>& names, const StructureConstants& c);

/// Nonzero brackets [X_i, X_j] = sum_k coeff_k X_k of a complex Lie algebra
/// (0-based indices, real coefficients).
using ComplexBracket = std::tuple<std::size_t, std::size_t, RatVector>;

/// Real form of a complex Lie algebra: basis x1, y1, ..., with zeta^k = x^k + i y^k
/// the holomorphic dual forms, J(x^k) = y^k and the standard metric.
LiePresentation complex_lie_algebra(std::size_t n, const std::vector<ComplexBracket>& brackets);

/// e1, Je1, e2, Je2, e3, Je3 with d(Je3) = e1^Je1 - e2^Je2, J, the standard
/// metric and F = 2 sum e^j ^ Je^j.
LiePresentation nil6();

/// 6 x 6 connection with w_12 = a Je3 = -w_21.
FormMatrix nil6_connection(const Rat& a);

/// alpha1, alpha2, e1p, e1m, e2p, e2m with the compact Maurer-Cartan equations
/// d alpha = e- ^ e+, d e+ = alpha ^ e-, d e- = -alpha ^ e+ on each factor and the
/// complex structure J(alpha1) = a alpha1 + b alpha2, J(alpha2) = c alpha1 - a alpha2,
/// J(e+) = e-, J(e-) = -e+, c = -(a^2 + 1)/b.
LiePresentation su2su2(const Rat& a, const Rat& b);

/// su(3) in the basis h1, h2, x12, y12, x13, y13, x23, y23 dual to
/// i diag(1,-1,0), i diag(1,1,-2), E_jk - E_kj, i(E_jk + E_kj), with the
/// complex structure making the positive root vectors holomorphic.
LiePresentation su3();

/// Gram matrix on su(3) 1-forms: lambda_alpha / 2 on the root-space forms of
/// alpha = e1-e2, beta = e2-e3, alpha + beta (the dual of -trace scaled by
/// lambda), 1/2 on h1, h2.
exforms::InvariantMetric su3_metric(const Rat& l_alpha, const Rat& l_beta, const Rat& l_alpha_beta);

LiePresentation abelian_c3();
LiePresentation heisenberg_c();
LiePresentation s2c_plus_c();
LiePresentation s3c();
LiePresentation s3c_lambda(const Rat& lambda);
LiePresentation sl2c();
/// u(2) + R^2: Hopf surface times a 2-torus, J(alpha) = t on the u(2) part,
/// J(e+) = e-, J(x) = y; identity metric.
LiePresentation hopf_torus();

/// Names accepted by by_name: nil6, su2su2, su3, c3, heisenberg, s2c, s3, s3_lambda, sl2c,
/// hopf_t2 (su2su2 at a = 0, b = 1; s3_lambda at lambda = -1).
std::vector<std::string> shipped_names();
LiePresentation by_name(const std::string& name);

}  // namespace cytkit::presentations
