#pragma once

// Invariant exterior calculus on Lie algebra presentations: Maurer-Cartan
// data, complex structures acting on 1-forms, invariant metrics, the weak
// codifferential, connection curvature and the CYT / Strominger verifiers.

#include "cytkit/kform.hpp"
#include "cytkit/linalg.hpp"
#include "cytkit/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cytkit::exforms {

/// Action on 1-forms: J(xi^i) = sum_j m(i, j) xi^j. Requires m^2 = -1.
class ComplexStructureOp {
public:
    explicit ComplexStructureOp(RatMatrix m);
    const RatMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

private:
    RatMatrix m_;
};

/// Gram matrix of an invariant metric on the 1-form basis.
class InvariantMetric {
public:
    explicit InvariantMetric(RatMatrix gram);
    const RatMatrix& gram() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }

private:
    RatMatrix gram_;
};

/// Basis 1-form names with their differentials (2-forms). Optional complex
/// structure, metric and explicit Kahler form travel with the presentation.
class LiePresentation {
public:
    /// Throws DomainError unless d(d xi) == 0 for every basis 1-form.
    LiePresentation(std::vector<std::string> names, std::vector<KForm> differentials);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<KForm>& differentials() const { return d_; }
    std::size_t index_of(const std::string& name) const;
    KForm form(const std::string& name) const;

    /// Structure constants c^k_ij of [X_i, X_j] = c^k_ij X_k for the dual basis,
    /// using d xi^k = -sum_{i<j} c^k_ij xi^i ^ xi^j.
    Rat structure_constant(std::size_t k, std::size_t i, std::size_t j) const;

    std::optional<ComplexStructureOp> complex_structure;
    std::optional<InvariantMetric> metric;
    std::optional<KForm> kahler;

private:
    std::vector<std::string> names_;
    std::vector<KForm> d_;
};

/// Same algebra in the basis xi'^i = sum_j p(i, j) xi^j; J, metric and
/// Kahler form are carried along.
LiePresentation change_basis(const LiePresentation& p, const RatMatrix& basis_change);

/// Leibniz extension of the presentation differentials.
KForm ext_d(const LiePresentation& p, const KForm& u);

/// Slotwise action of J.
KForm apply_J(const ComplexStructureOp& j, const KForm& u);

/// d J d J F.
KForm ddc(const LiePresentation& p, const ComplexStructureOp& j, const KForm& f);

bool is_compatible(const InvariantMetric& g, const ComplexStructureOp& j);

/// Induced pairing on k-forms (determinants of 1-form Gram entries).
Rat pairing(const InvariantMetric& g, const KForm& u, const KForm& v);

/// The 2-form with g(F, xi ^ eta) = g(xi, J eta).
KForm kahler_form(const InvariantMetric& g, const ComplexStructureOp& j);

/// Unique 1-form with g(dF, xi) = g(F, d xi) for every basis 1-form xi.
KForm weak_codifferential(const LiePresentation& p, const InvariantMetric& g, const KForm& f);

/// weak_codifferential(g, F_g) == sigma.
bool cyt_equation_check(const LiePresentation& p, const InvariantMetric& g, const ComplexStructureOp& j,
                        const KForm& sigma);

/// Nijenhuis tensor of J on the Lie algebra vanishes.
bool is_integrable(const LiePresentation& p, const ComplexStructureOp& j);

/// d of every (1,0)-form is of type (1,1).
bool is_abelian(const LiePresentation& p, const ComplexStructureOp& j);

/// Wedge of (xi + i J xi) over the listed basis indices.
ComplexForm holomorphic_volume_form(const ComplexStructureOp& j, const std::vector<std::size_t>& indices);
ComplexForm ext_d(const LiePresentation& p, const ComplexForm& u);

// --- SU(2) x SU(2) -------------------------------------------------------

/// b(b - a) > 0 and a^2 + 1 - ab > 0. Throws DomainError when b == 0.
bool su2su2_cyt_region(const Rat& a, const Rat& b);

/// CYT metric for the structure (a, b); DomainError naming the failed inequality.
InvariantMetric su2su2_cyt_metric(const Rat& a, const Rat& b);

/// Fiber factors (G1, G2) used by su2su2_cyt_metric.
std::pair<Rat, Rat> su2su2_fiber_factors(const Rat& a, const Rat& b);

/// sigma = alpha1 + alpha2 on the SU(2) x SU(2) presentation.
KForm su2su2_sigma(const LiePresentation& p);

// --- compact groups with root-scaled metrics ------------------------------

struct RootResidual {
    bool cyt = false;
    RatVector residual;  ///< simple-root coordinates of sum (1 - lambda_alpha) alpha
};

/// lambda is indexed like rootsys::positive_roots(s, rank); all entries positive.
RootResidual bismut_residual(rootsys::Series s, int rank, const RatVector& lambda);

/// SU(3): lambda for alpha, beta and alpha + beta.
RootResidual su3_cyt_family(const Rat& l_alpha, const Rat& l_beta, const Rat& l_alpha_beta);

// --- complex parallelizable -----------------------------------------------

/// ad_X commutes with J for every X (the algebra is complex and J its i).
bool is_complex_parallelizable(const LiePresentation& p, const ComplexStructureOp& j);
/// X -> tr(ad_{JX}) as a 1-form. Requires an integrable J and a compatible g.
KForm parallelizable_balanced_check(const LiePresentation& p, const ComplexStructureOp& j, const InvariantMetric& g);

// --- Ricci forms ----------------------------------------------------------
/// psi(X) = 1/2 tr(ad_{JX}) - 1/2 tr(J ad_X), J the vector action; the
/// Chern-Ricci form of any invariant Hermitian metric is d psi. On a compact
/// semisimple group this is the Koszul form (alpha1 + alpha2 on SU(2) x SU(2)).
KForm chern_ricci_potential(const LiePresentation& p, const ComplexStructureOp& j);
/// rho^B = d(psi - dF) with dF the weak codifferential of the Kahler form.
KForm bismut_ricci_form(const LiePresentation& p, const InvariantMetric& g, const ComplexStructureOp& j);

// --- connections ----------------------------------------------------------

using FormMatrix = std::vector<std::vector<KForm>>;

/// R_ij = d w_ij + sum_k w_ik ^ w_kj.
FormMatrix connection_curvature(const LiePresentation& p, const FormMatrix& w);

/// sum_ij A_ij ^ B_ji
KForm tr_wedge(const FormMatrix& a, const FormMatrix& b);
KForm tr_wedge_square(const FormMatrix& r);

/// For the connection a * w with a symbolic: the coefficients of a^0 .. a^4
/// in tr(R ^ R).
std::vector<KForm> tr_wedge_square_in_scale(const LiePresentation& p, const FormMatrix& w);

struct AnomalyReport {
    bool solvable = false;
    std::optional<Rat> mu;           ///< tr(R^R) - tr(F_A^F_A) = mu * dd^c F
    std::optional<Rat> alpha_prime;  ///< 4 / mu
    KForm ddc_f, tr_rr, tr_fa;
    std::string reason;
};

/// dd^c F = alpha'/4 (tr R^R - tr F_A^F_A). tr_fa must be zero or a single monomial.
AnomalyReport strominger_anomaly_report(const LiePresentation& p, const ComplexStructureOp& j, const KForm& f,
                                        const FormMatrix& w, const KForm& tr_fa);

}  // namespace cytkit::exforms
