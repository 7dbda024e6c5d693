#pragma once
// Integral cohomology of SU(4)/U(1) through the spectral sequence of
// M -> BU(1) with E_2 = Z[s] (x) Lambda(u3, u5, u7).

#include "cytkit/intlat.hpp"
#include "cytkit/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace cytkit::ssq {

/// U(1) weights (k, l, m, t4) with m = -3k - 2l and t4 = 2k + l.
struct WeightChoice {
    Int k, l;

    WeightChoice(const Int& k, const Int& l);
    Int m() const { return -3 * k - 2 * l; }
    Int t4() const { return 2 * k + l; }
    std::array<Int, 4> weights() const { return {k, l, m(), t4()}; }
};

/// Images of u4, u6, u8 under the restriction to BU(1), as multiples of
/// s^2, s^3, s^4. Signs are those of the symmetric polynomials in (k, l, m).
struct RestrictionPolys {
    Int m4, n6, k8;

    Int abs_m4() const { return abs(m4); }
    Int abs_n6() const { return abs(n6); }
    Int abs_k8() const { return abs(k8); }
};

/// Symmetric polynomials at (k, l, m); no primitivity check.
RestrictionPolys restriction_polys_unchecked(const Int& k, const Int& l);
/// Checks primitivity and agreement (up to sign) with the closed forms in (k, l).
RestrictionPolys restriction_polys(const Int& k, const Int& l);

struct GcdConditions {
    Int l;  ///< gcd(|M4|, |N6|)
    bool eligible = false;
    Int order;  ///< |M4| / L
};

GcdConditions gcd_conditions(const RestrictionPolys& p);

struct GradedAbelianGroup {
    static constexpr int top_degree = 14;
    std::array<intlat::AbelianInvariants, top_degree + 1> groups;

    std::vector<std::size_t> betti() const;
    bool operator==(const GradedAbelianGroup& other) const;
};

/// "0", "Z", "Z^2", "Z_13", "Z + Z_4 + Z_12", ...
std::string to_string(const intlat::AbelianInvariants& g);

/// A cell E_r^{p,q} presented as Z^generators / relations, generators being
/// the basis of the cycle lattice Z_r inside E_2^{p,q}.
struct Cell {
    int p = 0, q = 0;
    std::size_t generators = 0;
    intlat::IntMatrix relations;
    intlat::AbelianInvariants group;

    bool is_zero() const { return group.free_rank == 0 && group.torsion.empty(); }
};

/// d_r : E_r^{p,q} -> E_r^{p+r,q-r+1} in generator coordinates (rows are images).
struct Differential {
    int p = 0, q = 0;
    intlat::IntMatrix matrix;
    bool nonzero = false;
};

struct SpectralPage {
    int r = 0;
    std::vector<Cell> cells;
    std::vector<Differential> differentials;

    const Cell* cell(int p, int q) const;
    bool has_nonzero_differential() const;
};

struct SpectralSequence {
    RestrictionPolys polys;
    std::vector<SpectralPage> pages;  ///< E_2 .. E_9
    SpectralPage infinity;
    GradedAbelianGroup cohomology;
};

/// Runs the spectral sequence for arbitrary restriction data, checking the
/// page law on every page. Throws InvariantViolation if it fails, if E_10
/// differs from E_infinity, or if assembling E_infinity would need a
/// non-split extension.
SpectralSequence run_spectral_sequence(const RestrictionPolys& p);

/// Domain error unless (k, l) is primitive and gcd(M4, N6, K8) = 1.
SpectralSequence spectral_sequence(const Int& k, const Int& l);
GradedAbelianGroup spectral_cohomology(const Int& k, const Int& l);

struct RingPresentation {
    struct Generator {
        std::string name;
        int degree;
    };
    std::vector<Generator> generators;
    Int order;  ///< |M4 / L|
    std::vector<std::string> relations;

    std::string relations_text() const;
    /// Additive groups of Z[w, v5, v7] / (v5^2, v7^2, order w^2, w^3, w^2 v5, w^2 v7).
    GradedAbelianGroup additive_groups() const;
};

RingPresentation ring_relations(const Int& k, const Int& l);

struct ScanRow {
    Int k, l;
    RestrictionPolys polys;
    Int L, order;
    bool eligible = false;
};

/// l = 1 and k = 1..k_max. Throws InvariantViolation if a prime 5k + 16 not
/// dividing M4 comes with an ineligible row, or if |M4/L| is constant.
std::vector<ScanRow> family_scan(int k_max);

}  // namespace cytkit::ssq
