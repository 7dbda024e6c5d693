#include "cytkit/ssq.hpp"

#include "cytkit/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cytkit::ssq {

using intlat::AbelianInvariants;
using intlat::IntMatrix;
using cytkit::to_string;

WeightChoice::WeightChoice(const Int& k_, const Int& l_) : k(k_), l(l_)
{
    Int g = gcd_of({k, l, m(), t4()});
    if (g != 1)
        throw DomainError("weights (" + to_string(k) + ", " + to_string(l) + ") are not primitive: gcd = " +
                          to_string(g));
}

RestrictionPolys restriction_polys_unchecked(const Int& k, const Int& l)
{
    Int m = -3 * k - 2 * l;
    RestrictionPolys p;
    p.m4 = -(k * k + l * l + m * m) + k * l + l * m + k * m;
    p.n6 = -2 * k * l * m + k * l * (k + l) + l * m * (l + m) + k * m * (k + m);
    p.k8 = -k * l * m * (k + l + m);
    return p;
}

RestrictionPolys restriction_polys(const Int& k, const Int& l)
{
    WeightChoice w(k, l);
    auto p = restriction_polys_unchecked(k, l);
    Int m4 = 13 * k * k + 7 * l * l + 16 * k * l;
    Int n6 = 6 * k * k * k + 2 * l * l * l + 26 * k * k * l + 18 * k * l * l;
    Int k8 = 6 * k * k * k * l + 2 * k * l * l * l + 7 * k * k * l * l;
    if (abs(m4) != p.abs_m4() || abs(n6) != p.abs_n6() || abs(k8) != p.abs_k8())
        throw InvariantViolation("restriction polynomials disagree with their closed forms at (" + to_string(k) +
                                 ", " + to_string(l) + ")");
    return p;
}

GcdConditions gcd_conditions(const RestrictionPolys& p)
{
    GcdConditions c;
    c.l = gcd(p.abs_m4(), p.abs_n6());
    c.eligible = gcd(c.l, p.abs_k8()) == 1;
    c.order = c.l == 0 ? Int(0) : Int(p.abs_m4() / c.l);
    return c;
}

std::vector<std::size_t> GradedAbelianGroup::betti() const
{
    std::vector<std::size_t> out;
    for (const auto& g : groups)
        out.push_back(g.free_rank);
    return out;
}

bool GradedAbelianGroup::operator==(const GradedAbelianGroup& other) const
{
    for (int n = 0; n <= top_degree; ++n)
        if (groups[n].free_rank != other.groups[n].free_rank || groups[n].torsion != other.groups[n].torsion)
            return false;
    return true;
}

std::string to_string(const AbelianInvariants& g)
{
    std::vector<std::string> parts;
    if (g.free_rank == 1)
        parts.push_back("Z");
    else if (g.free_rank > 1)
        parts.push_back("Z^" + std::to_string(g.free_rank));
    for (const auto& t : g.torsion)
        parts.push_back("Z_" + cytkit::to_string(t));
    if (parts.empty())
        return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

const Cell* SpectralPage::cell(int p, int q) const
{
    for (const auto& c : cells)
        if (c.p == p && c.q == q)
            return &c;
    return nullptr;
}

bool SpectralPage::has_nonzero_differential() const
{
    return std::any_of(differentials.begin(), differentials.end(), [](const auto& d) { return d.nonzero; });
}

namespace {

constexpr int max_total_degree = 16;
constexpr int odd_degrees[3] = {3, 5, 7};

/// s^a u_S with S a subset of {u3, u5, u7} as a bitmask.
struct Monomial {
    int a;
    unsigned mask;

    int filtration() const { return 2 * a; }
    int fiber_degree() const
    {
        int q = 0;
        for (int i = 0; i < 3; ++i)
            if (mask & (1u << i))
                q += odd_degrees[i];
        return q;
    }
    int degree() const { return filtration() + fiber_degree(); }
};

/// Lattice in Z^dim, stored as Hermite-reduced basis rows.
struct Lattice {
    std::size_t dim = 0;
    IntMatrix rows;

    std::size_t rank() const { return rows.rows(); }
    std::vector<IntVector> basis() const { return rows.row_list(); }
};

IntMatrix stack(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, j) = b(i, j);
    return out;
}

Lattice span(const IntMatrix& rows, std::size_t dim)
{
    if (rows.rows() == 0 || dim == 0)
        return {dim, IntMatrix(0, dim)};
    return {dim, intlat::hermite_normal_form(rows)};
}

Lattice sum(const Lattice& a, const Lattice& b) { return span(stack(a.rows, b.rows), a.dim); }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() == 0 || a.cols() == 0 || b.cols() == 0)
        return IntMatrix(a.rows(), b.cols());
    return a * b;
}

/// {x in source : x * map in target}.
Lattice preimage(const Lattice& source, const IntMatrix& map, const Lattice& target)
{
    if (source.rank() == 0)
        return source;
    IntMatrix image = multiply(source.rows, map);
    IntMatrix m = stack(image, target.rows);
    if (m.cols() == 0)
        return source;
    IntMatrix coeffs(0, source.rank());
    std::vector<IntVector> picked;
    for (const auto& y : intlat::integer_kernel(m.transpose()))
        picked.emplace_back(y.begin(), y.begin() + static_cast<long>(source.rank()));
    if (picked.empty())
        return {source.dim, IntMatrix(0, source.dim)};
    return span(multiply(IntMatrix::from_rows(picked, source.rank()), source.rows), source.dim);
}

Lattice intersect(const Lattice& a, const Lattice& b) { return preimage(a, IntMatrix::identity(a.dim), b); }

/// Coordinates of each row of sub in the basis of lattice; throws if sub is not contained.
IntMatrix coordinates(const IntMatrix& sub, const Lattice& lattice, const char* what)
{
    auto basis = lattice.basis();
    IntMatrix out(sub.rows(), lattice.rank());
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        auto c = intlat::coordinates_in_basis(basis, sub.row(i));
        if (!c)
            throw InvariantViolation(std::string("spectral sequence: ") + what);
        for (std::size_t j = 0; j < c->size(); ++j)
            out(i, j) = (*c)[j];
    }
    return out;
}

bool contained(const IntMatrix& rows, const IntMatrix& lattice_rows)
{
    auto basis = lattice_rows.row_list();
    for (std::size_t i = 0; i < rows.rows(); ++i)
        if (!intlat::coordinates_in_basis(basis, rows.row(i)))
            return false;
    return true;
}

AbelianInvariants direct_sum(const std::vector<AbelianInvariants>& parts)
{
    std::size_t free = 0;
    IntVector torsion;
    for (const auto& g : parts) {
        free += g.free_rank;
        torsion.insert(torsion.end(), g.torsion.begin(), g.torsion.end());
    }
    IntMatrix diag(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i)
        diag(i, i) = torsion[i];
    auto inv = intlat::quotient_invariants(diag, torsion.size());
    inv.free_rank += free;
    return inv;
}

/// The Koszul-type total complex Z[s] (x) Lambda(u3, u5, u7) with
/// D u3 = M4 s^2, D u5 = N6 s^3, D u7 = K8 s^4, filtered by powers of s.
class FilteredComplex {
public:
    explicit FilteredComplex(const RestrictionPolys& p)
    {
        const Int images[3] = {p.m4, p.n6, p.k8};
        const int shifts[3] = {2, 3, 4};
        basis_.resize(max_total_degree + 2);
        for (int a = 0; 2 * a <= max_total_degree + 1; ++a)
            for (unsigned mask = 0; mask < 8; ++mask) {
                Monomial m{a, mask};
                if (m.degree() <= max_total_degree + 1)
                    basis_[m.degree()].push_back(m);
            }
        for (auto& b : basis_)
            std::sort(b.begin(), b.end(),
                      [](const Monomial& x, const Monomial& y) { return std::pair(x.a, x.mask) < std::pair(y.a, y.mask); });
        for (int n = 0; n <= max_total_degree; ++n) {
            IntMatrix d(basis_[n].size(), basis_[n + 1].size());
            for (std::size_t i = 0; i < basis_[n].size(); ++i) {
                const auto& m = basis_[n][i];
                int sign = 1;
                for (int g = 0; g < 3; ++g) {
                    if (!(m.mask & (1u << g)))
                        continue;
                    Monomial target{m.a + shifts[g], m.mask & ~(1u << g)};
                    d(i, index_of(n + 1, target)) += sign * images[g];
                    sign = -sign;
                }
            }
            d_.push_back(d);
        }
    }

    std::size_t dim(int n) const { return n < 0 ? 0 : basis_[n].size(); }
    const IntMatrix& d(int n) const { return d_[n]; }

    /// F^p in degree n.
    Lattice filtration(int n, int p) const
    {
        if (n < 0)
            return {0, IntMatrix(0, 0)};
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < basis_[n].size(); ++i)
            if (basis_[n][i].filtration() >= p) {
                IntVector e(dim(n));
                e[i] = 1;
                rows.push_back(e);
            }
        return span(IntMatrix::from_rows(rows, dim(n)), dim(n));
    }

    bool has_cell(int n, int p) const
    {
        return n >= 0 && n <= max_total_degree &&
               std::any_of(basis_[n].begin(), basis_[n].end(), [p](const auto& m) { return m.filtration() == p; });
    }

    /// Z_r^p = F^p n D^{-1}(F^{p+r}) in degree n.
    Lattice cycles(int r, int p, int n) const { return preimage(filtration(n, p), d(n), filtration(n + 1, p + r)); }

    /// B_r^p = F^p n D(F^{p-r}) in degree n.
    Lattice boundaries(int r, int p, int n) const
    {
        if (n == 0)
            return {dim(0), IntMatrix(0, dim(0))};
        Lattice src = filtration(n - 1, p - r);
        return intersect(filtration(n, p), span(multiply(src.rows, d(n - 1)), dim(n)));
    }

private:
    std::size_t index_of(int n, const Monomial& m) const
    {
        for (std::size_t i = 0; i < basis_[n].size(); ++i)
            if (basis_[n][i].a == m.a && basis_[n][i].mask == m.mask)
                return i;
        throw InvariantViolation("spectral sequence: monomial outside the truncated complex");
    }

    std::vector<std::vector<Monomial>> basis_;
    std::vector<IntMatrix> d_;
};

struct CellData {
    Cell cell;
    int n = 0;
    Lattice z;
};

/// E_r^{p} in degree n = Z_r^p / (Z_{r-1}^{p+1} + B_{r-1}^p).
CellData make_cell(const FilteredComplex& c, int r, int p, int n)
{
    CellData out;
    out.n = n;
    out.z = c.cycles(r, p, n);
    Lattice den = sum(c.cycles(r - 1, p + 1, n), c.boundaries(r - 1, p, n));
    out.cell.p = p;
    out.cell.q = n - p;
    out.cell.generators = out.z.rank();
    out.cell.relations = coordinates(den.rows, out.z, "denominator not contained in cycles");
    out.cell.group = intlat::quotient_invariants(out.cell.relations, out.cell.generators);
    return out;
}

struct PageData {
    SpectralPage page;
    std::map<std::pair<int, int>, CellData> cells;  ///< keyed by (n, p)
    std::map<std::pair<int, int>, IntMatrix> maps;  ///< d_r out of (n, p)
};

PageData make_page(const FilteredComplex& c, int r)
{
    PageData out;
    out.page.r = r;
    for (int n = 0; n <= max_total_degree; ++n)
        for (int p = 0; p <= n; ++p)
            if (c.has_cell(n, p))
                out.cells.emplace(std::pair(n, p), make_cell(c, r, p, n));
    for (auto& [key, src] : out.cells) {
        auto [n, p] = key;
        auto it = out.cells.find({n + 1, p + r});
        if (it == out.cells.end())
            continue;
        const auto& dst = it->second;
        IntMatrix images = multiply(src.z.rows, c.d(n));
        IntMatrix f = coordinates(images, dst.z, "differential leaves the target cycles");
        if (!contained(multiply(src.cell.relations, f), span(dst.cell.relations, dst.cell.generators).rows))
            throw InvariantViolation("spectral sequence: d_" + std::to_string(r) + " is not well defined on E^{" +
                                     std::to_string(p) + "," + std::to_string(n - p) + "}");
        Differential d;
        d.p = p;
        d.q = n - p;
        d.matrix = f;
        d.nonzero = !contained(f, span(dst.cell.relations, dst.cell.generators).rows);
        out.maps.emplace(key, f);
        if (n < max_total_degree)
            out.page.differentials.push_back(std::move(d));
    }
    for (const auto& [key, cd] : out.cells)
        if (key.first < max_total_degree)
            out.page.cells.push_back(cd.cell);
    return out;
}

/// Homology of (E_r, d_r) at the cell (n, p), computed from the presentations alone.
AbelianInvariants page_homology(const PageData& page, int r, int n, int p)
{
    const auto& cell = page.cells.at({n, p}).cell;
    const std::size_t a = cell.generators;
    Lattice all = span(IntMatrix::identity(a), a);
    Lattice ker = all;
    if (auto out = page.maps.find({n, p}); out != page.maps.end()) {
        const auto& dst = page.cells.at({n + 1, p + r}).cell;
        ker = preimage(all, out->second, span(dst.relations, dst.generators));
    }
    IntMatrix im = cell.relations;
    if (auto in = page.maps.find({n - 1, p - r}); in != page.maps.end())
        im = stack(im, in->second);
    Lattice image = span(im, a);
    IntMatrix rel = coordinates(image.rows, ker, "d_r o d_r is not zero");
    return intlat::quotient_invariants(rel, ker.rank());
}

/// Ext(b, a) = 0: every torsion coefficient of b is prime to |a|, and a is finite if b has torsion.
bool ext_vanishes(const AbelianInvariants& b, const AbelianInvariants& a)
{
    for (const auto& t : b.torsion) {
        if (a.free_rank > 0)
            return false;
        for (const auto& s : a.torsion)
            if (gcd(t, s) != 1)
                return false;
    }
    return true;
}

bool same(const AbelianInvariants& x, const AbelianInvariants& y)
{
    return x.free_rank == y.free_rank && x.torsion == y.torsion;
}

}  // namespace

SpectralSequence run_spectral_sequence(const RestrictionPolys& polys)
{
    FilteredComplex complex(polys);
    SpectralSequence out;
    out.polys = polys;

    constexpr int first_page = 2, last_page = 9, stable = 100;
    PageData current = make_page(complex, first_page);
    for (int r = first_page; r <= last_page; ++r) {
        PageData next = make_page(complex, r + 1);
        for (const auto& [key, cd] : current.cells) {
            auto [n, p] = key;
            if (n >= max_total_degree)
                continue;
            if (!same(page_homology(current, r, n, p), next.cells.at(key).cell.group))
                throw InvariantViolation("spectral sequence: E_" + std::to_string(r + 1) + "^{" + std::to_string(p) +
                                         "," + std::to_string(n - p) + "} is not the homology of E_" +
                                         std::to_string(r));
        }
        out.pages.push_back(std::move(current.page));
        current = std::move(next);
    }

    PageData inf = make_page(complex, stable);
    for (const auto& [key, cd] : inf.cells)
        if (key.first < max_total_degree && !same(cd.cell.group, current.cells.at(key).cell.group))
            throw InvariantViolation("spectral sequence: nonzero differential beyond E_9 at E^{" +
                                     std::to_string(key.second) + "," + std::to_string(key.first - key.second) + "}");
    out.infinity = inf.page;
    out.infinity.r = 0;
    out.infinity.differentials.clear();

    for (int n = 0; n < max_total_degree; ++n) {
        std::vector<const Cell*> nonzero;
        for (const auto& c : out.infinity.cells)
            if (c.p + c.q == n && !c.is_zero())
                nonzero.push_back(&c);
        // Walk from the deepest filtration step outwards; each step is an extension
        // of the next E_inf cell by what has been assembled so far, and it is
        // forced to split when Ext(cell, assembled) = 0.
        std::sort(nonzero.begin(), nonzero.end(), [](const Cell* x, const Cell* y) { return x->p > y->p; });
        std::vector<AbelianInvariants> parts;
        for (const auto* c : nonzero) {
            if (!parts.empty() && !ext_vanishes(c->group, direct_sum(parts)))
                throw InvariantViolation("extension problem in total degree " + std::to_string(n) + " at E_inf^{" +
                                         std::to_string(c->p) + "," + std::to_string(c->q) + "}");
            parts.push_back(c->group);
        }
        auto h = direct_sum(parts);
        if (n <= GradedAbelianGroup::top_degree)
            out.cohomology.groups[n] = h;
        else if (h.free_rank != 0 || !h.torsion.empty())
            throw InvariantViolation("nonzero cohomology in degree " + std::to_string(n) + " above the dimension");
    }
    return out;
}

namespace {

RestrictionPolys eligible_polys(const Int& k, const Int& l)
{
    auto p = restriction_polys(k, l);
    auto g = gcd_conditions(p);
    if (!g.eligible)
        throw DomainError("weights (" + to_string(k) + ", " + to_string(l) + ") are not eligible: gcd(M4, N6, K8) = " +
                          to_string(gcd(g.l, p.abs_k8())));
    return p;
}

}  // namespace

SpectralSequence spectral_sequence(const Int& k, const Int& l) { return run_spectral_sequence(eligible_polys(k, l)); }

GradedAbelianGroup spectral_cohomology(const Int& k, const Int& l) { return spectral_sequence(k, l).cohomology; }

std::string RingPresentation::relations_text() const
{
    std::string out;
    for (const auto& r : relations)
        out += r + " = ";
    return out + "0";
}

GradedAbelianGroup RingPresentation::additive_groups() const
{
    GradedAbelianGroup g;
    std::vector<std::vector<AbelianInvariants>> parts(GradedAbelianGroup::top_degree + 1);
    for (int a = 0; a <= 2; ++a)
        for (unsigned mask = 0; mask < 4; ++mask) {
            int degree = 2 * a + ((mask & 1u) ? 5 : 0) + ((mask & 2u) ? 7 : 0);
            if (degree > GradedAbelianGroup::top_degree)
                continue;
            AbelianInvariants summand;
            if (a < 2)
                summand.free_rank = 1;
            else if (mask == 0 && order != 1)
                summand.torsion.push_back(order);
            parts[degree].push_back(summand);
        }
    for (int n = 0; n <= GradedAbelianGroup::top_degree; ++n)
        g.groups[n] = direct_sum(parts[n]);
    return g;
}

RingPresentation ring_relations(const Int& k, const Int& l)
{
    auto p = eligible_polys(k, l);
    RingPresentation r;
    r.generators = {{"w", 2}, {"v5", 5}, {"v7", 7}};
    r.order = gcd_conditions(p).order;
    r.relations = {(r.order == 1 ? std::string() : to_string(r.order)) + "w^2", "w^3", "w^2v5", "w^2v7"};
    return r;
}

namespace {

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

}  // namespace

std::vector<ScanRow> family_scan(int k_max)
{
    if (k_max < 1)
        throw DomainError("family_scan: k_max must be at least 1");
    std::vector<ScanRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        ScanRow row;
        row.k = k;
        row.l = 1;
        row.polys = restriction_polys(row.k, row.l);
        auto g = gcd_conditions(row.polys);
        row.L = g.l;
        row.order = g.order;
        row.eligible = g.eligible;
        Int q = 5 * row.k + 16;
        if (is_prime(q) && row.polys.abs_m4() % q != 0 && !row.eligible)
            throw InvariantViolation("family_scan: 5k+16 = " + to_string(q) + " is prime but k = " +
                                     std::to_string(k) + " is not eligible");
        rows.push_back(row);
    }
    if (rows.size() > 1 &&
        std::all_of(rows.begin(), rows.end(), [&](const ScanRow& r) { return r.order == rows.front().order; }))
        throw InvariantViolation("family_scan: |M4/L| is constant over the scan");
    return rows;
}

}  // namespace cytkit::ssq
