#pragma once

// Painted Dynkin diagrams, Koszul forms of flag manifolds and the linear
// conditions for a vanishing first Chern class on the torus-bundle quotients.

#include "cytkit/intlat.hpp"
#include "cytkit/rootsys.hpp"

#include <string>
#include <vector>

namespace cytkit::painted {

using rootsys::Series;
using rootsys::Weight;

/// Classical diagram with a set of black (1-based) nodes.
/// Text form: "<series><rank>:<comma-separated black nodes>", e.g. "A10:1,2,6,9".
struct PaintedDiagram {
    Series series = Series::A;
    int rank = 1;
    std::vector<int> black;  ///< sorted, unique

    static PaintedDiagram parse(const std::string& text);
    PaintedDiagram(Series s, int r, std::vector<int> black_nodes);
    PaintedDiagram() = default;

    bool is_black(int node) const;
    std::string to_string() const;
};

/// A connected white sub-diagram. nodes[i] is the ambient node playing the
/// role of the (i+1)-th simple root of the sub-series.
struct WhiteComponent {
    Series series;
    int rank;
    std::vector<int> nodes;
};

std::vector<WhiteComponent> white_components(const PaintedDiagram& d);

/// sigma = (sum of positive roots of G) - (sum of positive roots of the white
/// subalgebra), in e-coordinates, via the diagram-difference of simple-root
/// coefficient rows.
Weight koszul_form(const PaintedDiagram& d);

/// Simple-root coefficient row of koszul_form.
RatVector koszul_coefficients(const PaintedDiagram& d);

/// A series only: sigma = sum over black nodes i of (2 + b_i) omega_i, b_i the
/// number of white nodes joined to i through white paths.
Weight koszul_form_a_chain(const PaintedDiagram& d);

/// The (2 + b_i) multiplicities used by koszul_form_a_chain, one per black node.
std::vector<int> a_chain_multiplicities(const PaintedDiagram& d);

/// 2 (sigma, alpha_j) / (alpha_j, alpha_j) for every node j.
RatVector fundamental_weight_coefficients(const Weight& sigma, Series s, int rank);

enum class BlockKind { Scalar, SpecialUnitary, Orthogonal, Symplectic };

struct Block {
    BlockKind kind = BlockKind::Scalar;
    int label = 1;  ///< n of su(n) / so(n) / sp(n); 1 for scalar blocks
    int slots = 1;  ///< diagonal e-coordinates covered
    bool has_variable() const { return kind == BlockKind::Scalar || kind == BlockKind::SpecialUnitary; }
    bool operator==(const Block&) const = default;
};

/// Diagonal block pattern of the isotropy algebra, e.g. "1,1,su4,su3,su2".
struct BlockStructure {
    std::vector<Block> blocks;
    int total_slots = 0;

    static BlockStructure parse(const std::string& text, Series ambient);
    std::string to_string() const;
    std::size_t variable_count() const;
    bool operator==(const BlockStructure&) const = default;
};

/// Block pattern induced by the white components of d.
BlockStructure induced_blocks(const PaintedDiagram& d);

/// Rows: the trace condition (A series only; coefficients are block sizes)
/// followed by the Koszul condition (sum of sigma over each block's slots).
/// One column per block carrying a torus variable.
intlat::IntMatrix c1_condition_matrix(const PaintedDiagram& d, const BlockStructure& blocks);

/// Koszul row alone.
IntVector koszul_row(const PaintedDiagram& d, const BlockStructure& blocks);

/// sigma restricted to span(a_basis) vanishes. Each vector must satisfy the
/// trace condition.
bool c1_vanishes(const PaintedDiagram& d, const BlockStructure& blocks, const std::vector<IntVector>& a_basis);

struct EmbeddingLattice {
    std::vector<IntVector> basis;         ///< first torus_dim kernel vectors
    std::vector<IntVector> kernel_basis;  ///< full Hermite-reduced kernel basis
    std::size_t kernel_rank = 0;
    BlockStructure blocks;
};

EmbeddingLattice enumerate_embeddings(const PaintedDiagram& d, const BlockStructure& blocks, std::size_t torus_dim);

/// SU(n)/U(1) with weights theta (n even, zero sum): sum (n - 2k + 1) theta_k == 0.
bool su_n_u1_check(const IntVector& theta);

/// Linear forms in theta_1..theta_{n-1} after substituting theta_n = -sum:
/// first the substituted sum (n - 2k + 1) theta_k, then 2 (n - k) theta_k.
std::pair<IntVector, IntVector> su_n_u1_linear_forms(int n);

/// Real dimensions used for parity checks of G/H, H = H_ss x T^torus_dim.
int group_dimension(Series s, int rank);
int homogeneous_space_dimension(const PaintedDiagram& d, int torus_dim);

}  // namespace cytkit::painted
