#include "cytkit/painted.hpp"

#include "cytkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cytkit::painted {

using rootsys::check_rank;

PaintedDiagram::PaintedDiagram(Series s, int r, std::vector<int> black_nodes)
    : series(s), rank(r), black(std::move(black_nodes))
{
    check_rank(series, rank);
    std::sort(black.begin(), black.end());
    black.erase(std::unique(black.begin(), black.end()), black.end());
    for (int b : black)
        if (b < 1 || b > rank)
            throw DomainError("black node " + std::to_string(b) + " outside 1.." + std::to_string(rank));
}

PaintedDiagram PaintedDiagram::parse(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos || colon < 2)
        throw DomainError("diagram '" + text + "' must look like A10:1,2,6,9");
    Series s = rootsys::parse_series(text.substr(0, 1));
    int r = 0;
    try {
        std::size_t used = 0;
        r = std::stoi(text.substr(1, colon - 1), &used);
        if (used != colon - 1)
            throw DomainError("bad rank");
    } catch (const std::exception&) {
        throw DomainError("diagram '" + text + "' has an invalid rank");
    }
    std::vector<int> nodes;
    std::stringstream rest(text.substr(colon + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) {
        if (tok.empty())
            continue;
        try {
            std::size_t used = 0;
            nodes.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw DomainError("bad node");
        } catch (const std::exception&) {
            throw DomainError("diagram '" + text + "' has an invalid node '" + tok + "'");
        }
    }
    return PaintedDiagram(s, r, nodes);
}

bool PaintedDiagram::is_black(int node) const { return std::binary_search(black.begin(), black.end(), node); }

std::string PaintedDiagram::to_string() const
{
    std::ostringstream os;
    os << rootsys::series_letter(series) << rank << ':';
    for (std::size_t i = 0; i < black.size(); ++i)
        os << (i ? "," : "") << black[i];
    return os.str();
}

namespace {

std::vector<std::vector<int>> adjacency(Series s, int rank)
{
    auto cm = rootsys::cartan_matrix(s, rank);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(rank) + 1);
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            if (i != j && cm.entries[i - 1][j - 1] != 0)
                adj[i].push_back(j);
    return adj;
}

int sub_dimension(Series s, int m)
{
    switch (s) {
    case Series::A: return (m + 1) * (m + 1) - 1;
    case Series::B:
    case Series::C: return m * (2 * m + 1);
    case Series::D: return m * (2 * m - 1);
    }
    return 0;
}

}  // namespace

std::vector<WhiteComponent> white_components(const PaintedDiagram& d)
{
    const int n = d.rank;
    auto adj = adjacency(d.series, n);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<WhiteComponent> out;
    for (int start = 1; start <= n; ++start) {
        if (seen[start] || d.is_black(start))
            continue;
        std::vector<int> nodes, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            nodes.push_back(x);
            for (int y : adj[x])
                if (!seen[y] && !d.is_black(y)) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        auto has = [&](int v) { return std::binary_search(nodes.begin(), nodes.end(), v); };
        Series sub = Series::A;
        if ((d.series == Series::B || d.series == Series::C) && has(n))
            sub = d.series;
        if (d.series == Series::D && has(n) && has(n - 1))
            sub = Series::D;
        out.push_back({sub, static_cast<int>(nodes.size()), nodes});
    }
    return out;
}

RatVector koszul_coefficients(const PaintedDiagram& d)
{
    RatVector c = rootsys::detail::sum_coefficients_unchecked(d.series, d.rank);
    for (const auto& comp : white_components(d)) {
        RatVector sub = rootsys::detail::sum_coefficients_unchecked(comp.series, comp.rank);
        for (std::size_t i = 0; i < comp.nodes.size(); ++i)
            c[static_cast<std::size_t>(comp.nodes[i] - 1)] -= sub[i];
    }
    return c;
}

Weight koszul_form(const PaintedDiagram& d)
{
    return rootsys::from_simple_root_coefficients(koszul_coefficients(d), d.series, d.rank);
}

std::vector<int> a_chain_multiplicities(const PaintedDiagram& d)
{
    if (d.series != Series::A)
        throw DomainError("koszul_form_a_chain applies to the A series only");
    std::vector<int> out;
    for (int b : d.black) {
        int white = 0;
        for (int j = b - 1; j >= 1 && !d.is_black(j); --j)
            ++white;
        for (int j = b + 1; j <= d.rank && !d.is_black(j); ++j)
            ++white;
        out.push_back(2 + white);
    }
    return out;
}

Weight koszul_form_a_chain(const PaintedDiagram& d)
{
    auto mult = a_chain_multiplicities(d);
    Weight sigma(rootsys::ambient_dim(d.series, d.rank));
    for (std::size_t i = 0; i < d.black.size(); ++i) {
        auto omega = rootsys::fundamental_weight(d.series, d.rank, d.black[i]);
        for (std::size_t j = 0; j < sigma.size(); ++j)
            sigma[j] += mult[i] * omega[j];
    }
    return sigma;
}

RatVector fundamental_weight_coefficients(const Weight& sigma, Series s, int rank)
{
    RatVector out;
    for (const auto& alpha : rootsys::simple_roots(s, rank))
        out.push_back(rootsys::coroot_pairing(sigma, alpha));
    return out;
}

BlockStructure BlockStructure::parse(const std::string& text, Series ambient)
{
    (void)ambient;
    std::string body = text;
    if (body.rfind("blocks=", 0) == 0)
        body = body.substr(7);
    BlockStructure bs;
    std::stringstream ss(body);
    std::string tok;
    auto number = [&](const std::string& t, std::size_t from) {
        try {
            std::size_t used = 0;
            int v = std::stoi(t.substr(from), &used);
            if (used != t.size() - from)
                throw DomainError("");
            return v;
        } catch (const std::exception&) {
            throw DomainError("invalid block '" + t + "'");
        }
    };
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        Block b;
        if (tok == "1") {
            b = {BlockKind::Scalar, 1, 1};
        } else if (tok.rfind("su", 0) == 0) {
            int k = number(tok, 2);
            if (k < 2)
                throw DomainError("su block needs size at least 2: '" + tok + "'");
            b = {BlockKind::SpecialUnitary, k, k};
        } else if (tok.rfind("sp", 0) == 0) {
            int k = number(tok, 2);
            if (k < 1)
                throw DomainError("sp block needs rank at least 1: '" + tok + "'");
            b = {BlockKind::Symplectic, k, k};
        } else if (tok.rfind("so", 0) == 0) {
            int k = number(tok, 2);
            if (k < 3)
                throw DomainError("so block needs size at least 3: '" + tok + "'");
            b = {BlockKind::Orthogonal, k, k / 2};
        } else {
            throw DomainError("invalid block '" + tok + "' (use 1, suN, soN or spN)");
        }
        bs.blocks.push_back(b);
        bs.total_slots += b.slots;
    }
    if (bs.blocks.empty())
        throw DomainError("empty block structure");
    return bs;
}

std::string BlockStructure::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i)
            os << ',';
        const auto& b = blocks[i];
        switch (b.kind) {
        case BlockKind::Scalar: os << '1'; break;
        case BlockKind::SpecialUnitary: os << "su" << b.label; break;
        case BlockKind::Orthogonal: os << "so" << b.label; break;
        case BlockKind::Symplectic: os << "sp" << b.label; break;
        }
    }
    return os.str();
}

std::size_t BlockStructure::variable_count() const
{
    return static_cast<std::size_t>(
        std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.has_variable(); }));
}

BlockStructure induced_blocks(const PaintedDiagram& d)
{
    const int n = d.rank;
    const int slots = static_cast<int>(rootsys::ambient_dim(d.series, n));
    // first slot (1-based) -> block
    std::vector<std::pair<int, Block>> placed;
    std::vector<bool> covered(static_cast<std::size_t>(slots) + 1, false);
    for (const auto& comp : white_components(d)) {
        int lo = comp.nodes.front(), hi = comp.nodes.back();
        int m = comp.rank;
        Block b;
        int first = lo, last = 0;
        if (comp.series == Series::A) {
            if (d.series == Series::D && std::find(comp.nodes.begin(), comp.nodes.end(), n) != comp.nodes.end())
                throw DomainError("white chain through the spin node " + std::to_string(n) + " of " + d.to_string() +
                                  " is not a diagonal unitary block");
            b = {BlockKind::SpecialUnitary, m + 1, m + 1};
            last = hi + 1;
        } else if (comp.series == Series::B) {
            b = {BlockKind::Orthogonal, 2 * m + 1, m};
            last = n;
        } else if (comp.series == Series::C) {
            b = {BlockKind::Symplectic, m, m};
            last = n;
        } else {
            b = {BlockKind::Orthogonal, 2 * m, m};
            last = n;
        }
        for (int s = first; s <= last; ++s) {
            if (covered[s])
                throw InvariantViolation("overlapping white blocks");
            covered[s] = true;
        }
        placed.push_back({first, b});
    }
    for (int s = 1; s <= slots; ++s)
        if (!covered[s])
            placed.push_back({s, Block{BlockKind::Scalar, 1, 1}});
    std::sort(placed.begin(), placed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    BlockStructure bs;
    for (const auto& p : placed) {
        bs.blocks.push_back(p.second);
        bs.total_slots += p.second.slots;
    }
    return bs;
}

namespace {

void require_consistent(const PaintedDiagram& d, const BlockStructure& blocks)
{
    auto expected = induced_blocks(d);
    if (!(expected == blocks))
        throw DomainError("block structure '" + blocks.to_string() + "' is inconsistent with " + d.to_string() +
                          " (expected '" + expected.to_string() + "')");
}

Int to_int(const Rat& r)
{
    if (!is_integer(r))
        throw InvariantViolation("non-integral Koszul coordinate");
    return r.get_num();
}

}  // namespace

IntVector koszul_row(const PaintedDiagram& d, const BlockStructure& blocks)
{
    require_consistent(d, blocks);
    Weight sigma = koszul_form(d);
    IntVector row;
    std::size_t slot = 0;
    for (const auto& b : blocks.blocks) {
        Rat sum = 0;
        for (int k = 0; k < b.slots; ++k)
            sum += sigma[slot + static_cast<std::size_t>(k)];
        slot += static_cast<std::size_t>(b.slots);
        if (b.has_variable())
            row.push_back(to_int(sum));
    }
    return row;
}

intlat::IntMatrix c1_condition_matrix(const PaintedDiagram& d, const BlockStructure& blocks)
{
    IntVector k = koszul_row(d, blocks);
    std::vector<IntVector> rows;
    if (d.series == Series::A) {
        IntVector trace;
        for (const auto& b : blocks.blocks)
            if (b.has_variable())
                trace.push_back(b.slots);
        rows.push_back(trace);
    }
    rows.push_back(k);
    return intlat::IntMatrix::from_rows(rows, k.size());
}

bool c1_vanishes(const PaintedDiagram& d, const BlockStructure& blocks, const std::vector<IntVector>& a_basis)
{
    auto m = c1_condition_matrix(d, blocks);
    const std::size_t vars = m.cols();
    const std::size_t koszul = m.rows() - 1;
    bool vanishes = true;
    for (const auto& v : a_basis) {
        if (v.size() != vars)
            throw PreconditionError("torus direction (" + join(v) + ") has " + std::to_string(v.size()) +
                                    " entries, expected " + std::to_string(vars));
        auto image = m * v;
        if (d.series == Series::A && image[0] != 0)
            throw PreconditionError("torus direction (" + join(v) + ") is not trace-free");
        if (image[koszul] != 0)
            vanishes = false;
    }
    return vanishes;
}

EmbeddingLattice enumerate_embeddings(const PaintedDiagram& d, const BlockStructure& blocks, std::size_t torus_dim)
{
    auto m = c1_condition_matrix(d, blocks);
    EmbeddingLattice lat;
    lat.blocks = blocks;
    lat.kernel_basis = intlat::integer_kernel(m);
    lat.kernel_rank = lat.kernel_basis.size();
    if (torus_dim > lat.kernel_rank)
        throw DomainError("torus dimension " + std::to_string(torus_dim) + " exceeds the kernel rank " +
                          std::to_string(lat.kernel_rank));
    lat.basis.assign(lat.kernel_basis.begin(), lat.kernel_basis.begin() + static_cast<std::ptrdiff_t>(torus_dim));
    return lat;
}

std::pair<IntVector, IntVector> su_n_u1_linear_forms(int n)
{
    if (n < 2)
        throw DomainError("su_n_u1_linear_forms needs n >= 2");
    IntVector substituted(static_cast<std::size_t>(n - 1)), doubled(static_cast<std::size_t>(n - 1));
    const int last = n - 2 * n + 1;  // coefficient of theta_n
    for (int k = 1; k < n; ++k) {
        substituted[static_cast<std::size_t>(k - 1)] = (n - 2 * k + 1) - last;
        doubled[static_cast<std::size_t>(k - 1)] = 2 * (n - k);
    }
    return {substituted, doubled};
}

bool su_n_u1_check(const IntVector& theta)
{
    const int n = static_cast<int>(theta.size());
    if (n < 2 || n % 2 != 0)
        throw PreconditionError("SU(n)/U(1) criterion needs an even n >= 2, got " + std::to_string(n));
    Int sum = 0;
    for (const auto& t : theta)
        sum += t;
    if (sum != 0)
        throw PreconditionError("weights (" + join(theta) + ") do not sum to zero");
    Int lhs = 0, rhs = 0;
    for (int k = 1; k <= n; ++k)
        lhs += (n - 2 * k + 1) * theta[static_cast<std::size_t>(k - 1)];
    for (int k = 1; k < n; ++k)
        rhs += 2 * (n - k) * theta[static_cast<std::size_t>(k - 1)];
    if (lhs != rhs)
        throw InvariantViolation("sum (n-2k+1) theta_k differs from 2 sum (n-k) theta_k");
    return lhs == 0;
}

int group_dimension(Series s, int rank)
{
    check_rank(s, rank);
    return sub_dimension(s, rank);
}

int homogeneous_space_dimension(const PaintedDiagram& d, int torus_dim)
{
    int dim = group_dimension(d.series, d.rank);
    for (const auto& c : white_components(d))
        dim -= sub_dimension(c.series, c.rank);
    return dim - torus_dim;
}

}  // namespace cytkit::painted
