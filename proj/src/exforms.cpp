#include "cytkit/exforms.hpp"

#include "cytkit/errors.hpp"

#include <algorithm>
#include <set>

namespace cytkit::exforms {

ComplexStructureOp::ComplexStructureOp(RatMatrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols())
        throw DomainError("complex structure matrix must be square");
    if (!(m_ * m_ == -RatMatrix::identity(m_.rows())))
        throw DomainError("complex structure does not square to -1");
}

InvariantMetric::InvariantMetric(RatMatrix gram) : gram_(std::move(gram))
{
    if (gram_.rows() != gram_.cols() || !gram_.is_symmetric())
        throw DomainError("metric Gram matrix must be square and symmetric");
    if (!is_positive_definite(gram_))
        throw DomainError("metric Gram matrix is not positive definite");
}

namespace {

KForm d_with(const std::vector<KForm>& d, const KForm& u)
{
    const std::size_t n = d.size();
    KForm r(n, u.degree() + 1);
    for (const auto& [mask, c] : u.terms()) {
        auto idx = mask_indices(mask);
        for (std::size_t s = 0; s < idx.size(); ++s) {
            std::vector<std::size_t> left(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(s));
            std::vector<std::size_t> right(idx.begin() + static_cast<std::ptrdiff_t>(s) + 1, idx.end());
            KForm term = wedge(wedge(KForm::monomial(n, left, c), d[idx[s]]), KForm::monomial(n, right));
            r += (s % 2 == 0) ? term : -term;
        }
    }
    return r;
}

RatVector bracket(const LiePresentation& p, const RatVector& u, const RatVector& v)
{
    const std::size_t n = p.dim();
    RatVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0 || i == j)
                continue;
            for (std::size_t k = 0; k < n; ++k)
                out[k] += u[i] * v[j] * p.structure_constant(k, i, j);
        }
    }
    return out;
}

// Vector action dual to J on forms: (J xi)(X) = -xi(I X), so that
// xi + i J xi is complex linear for I.
RatVector act_on_vector(const ComplexStructureOp& j, const RatVector& x)
{
    const auto& m = j.matrix();
    RatVector out(x.size());
    for (std::size_t l = 0; l < x.size(); ++l)
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] -= m(i, l) * x[l];
    return out;
}

void require_dim(std::size_t expected, std::size_t got, const char* what)
{
    if (expected != got)
        throw DomainError(std::string(what) + " has size " + std::to_string(got) + ", presentation has " +
                          std::to_string(expected));
}

}  // namespace

LiePresentation::LiePresentation(std::vector<std::string> names, std::vector<KForm> differentials)
    : names_(std::move(names)), d_(std::move(differentials))
{
    const std::size_t n = names_.size();
    if (d_.size() != n)
        throw DomainError("presentation needs one differential per basis 1-form");
    if (std::set<std::string>(names_.begin(), names_.end()).size() != n)
        throw DomainError("duplicate basis names");
    for (std::size_t i = 0; i < n; ++i) {
        if (d_[i].is_zero())
            d_[i] = KForm(n, 2);
        if (d_[i].dim() != n || d_[i].degree() != 2)
            throw DomainError("d(" + names_[i] + ") must be a 2-form on the basis");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!d_with(d_, d_[i]).is_zero())
            throw DomainError("d(d " + names_[i] + ") != 0: structure equations violate the Jacobi identity");
}

std::size_t LiePresentation::index_of(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw DomainError("unknown basis form '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

KForm LiePresentation::form(const std::string& name) const { return KForm::basis(dim(), index_of(name)); }

Rat LiePresentation::structure_constant(std::size_t k, std::size_t i, std::size_t j) const
{
    if (i == j)
        return 0;
    if (i > j)
        return -structure_constant(k, j, i);
    return -d_[k].coeff((KForm::Mask{1} << i) | (KForm::Mask{1} << j));
}

LiePresentation change_basis(const LiePresentation& p, const RatMatrix& basis_change)
{
    require_dim(p.dim(), basis_change.rows(), "basis change");
    auto inv = inverse(basis_change);
    if (!inv)
        throw DomainError("basis change is singular");
    const std::size_t n = p.dim();
    std::vector<KForm> d;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        KForm di(n, 2);
        for (std::size_t j = 0; j < n; ++j)
            di += p.differentials()[j] * basis_change(i, j);
        d.push_back(substitute(di, *inv));
        names.push_back(p.names()[i] + "'");
    }
    LiePresentation q(names, d);
    if (p.complex_structure)
        q.complex_structure = ComplexStructureOp(basis_change * p.complex_structure->matrix() * *inv);
    if (p.metric)
        q.metric = InvariantMetric(basis_change * p.metric->gram() * basis_change.transpose());
    if (p.kahler)
        q.kahler = substitute(*p.kahler, *inv);
    return q;
}

KForm ext_d(const LiePresentation& p, const KForm& u)
{
    require_dim(p.dim(), u.dim(), "form");
    return d_with(p.differentials(), u);
}

KForm apply_J(const ComplexStructureOp& j, const KForm& u) { return substitute(u, j.matrix()); }

KForm ddc(const LiePresentation& p, const ComplexStructureOp& j, const KForm& f)
{
    if (f.degree() != 2 && !f.is_zero())
        throw DomainError("dd^c expects a 2-form");
    return ext_d(p, apply_J(j, ext_d(p, apply_J(j, f))));
}

bool is_compatible(const InvariantMetric& g, const ComplexStructureOp& j)
{
    require_dim(g.dim(), j.dim(), "complex structure");
    const auto& m = j.matrix();
    return m * g.gram() * m.transpose() == g.gram();
}

Rat pairing(const InvariantMetric& g, const KForm& u, const KForm& v)
{
    require_dim(g.dim(), u.dim(), "form");
    require_dim(g.dim(), v.dim(), "form");
    if (u.is_zero() || v.is_zero())
        return 0;
    if (u.degree() != v.degree())
        throw DomainError("pairing of forms of different degree");
    const auto& gram = g.gram();
    const std::size_t k = static_cast<std::size_t>(u.degree());
    Rat total = 0;
    for (const auto& [a, ca] : u.terms()) {
        auto ia = mask_indices(a);
        for (const auto& [b, cb] : v.terms()) {
            auto ib = mask_indices(b);
            RatMatrix sub(k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    sub(r, c) = gram(ia[r], ib[c]);
            total += ca * cb * determinant(sub);
        }
    }
    return total;
}

KForm kahler_form(const InvariantMetric& g, const ComplexStructureOp& j)
{
    if (!is_compatible(g, j))
        throw DomainError("metric is not compatible with the complex structure");
    const std::size_t n = g.dim();
    // F = G^{-1} A G^{-1} as an antisymmetric matrix, A_kl = g(xi^k, J xi^l) = (G J^T)_kl
    auto ginv = *inverse(g.gram());
    RatMatrix a = g.gram() * j.matrix().transpose();
    RatMatrix fm = ginv * a * ginv;
    KForm f(n, 2);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            f.add_term((KForm::Mask{1} << r) | (KForm::Mask{1} << c), fm(r, c));
    return f;
}

KForm weak_codifferential(const LiePresentation& p, const InvariantMetric& g, const KForm& f)
{
    require_dim(p.dim(), g.dim(), "metric");
    if (f.degree() != 2 && !f.is_zero())
        throw DomainError("weak codifferential expects a 2-form");
    const std::size_t n = p.dim();
    RatVector rhs(n);
    for (std::size_t k = 0; k < n; ++k)
        rhs[k] = pairing(g, f, p.differentials()[k]);
    auto y = solve(g.gram(), rhs);
    if (!y)
        throw DomainError("singular Gram matrix");
    KForm out(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        out.add_term(KForm::Mask{1} << i, (*y)[i]);
    return out;
}

bool cyt_equation_check(const LiePresentation& p, const InvariantMetric& g, const ComplexStructureOp& j,
                        const KForm& sigma)
{
    return weak_codifferential(p, g, kahler_form(g, j)) == sigma;
}

bool is_integrable(const LiePresentation& p, const ComplexStructureOp& j)
{
    require_dim(p.dim(), j.dim(), "complex structure");
    const std::size_t n = p.dim();
    auto unit = [n](std::size_t i) {
        RatVector v(n);
        v[i] = 1;
        return v;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            RatVector x = unit(a), y = unit(b);
            RatVector jx = act_on_vector(j, x), jy = act_on_vector(j, y);
            RatVector t1 = bracket(p, jx, jy);
            RatVector t2 = act_on_vector(j, bracket(p, jx, y));
            RatVector t3 = act_on_vector(j, bracket(p, x, jy));
            RatVector t4 = bracket(p, x, y);
            for (std::size_t k = 0; k < n; ++k)
                if (t1[k] - t2[k] - t3[k] - t4[k] != 0)
                    return false;
        }
    return true;
}

bool is_abelian(const LiePresentation& p, const ComplexStructureOp& j)
{
    require_dim(p.dim(), j.dim(), "complex structure");
    for (const auto& d : p.differentials())
        if (!(apply_J(j, d) == d))
            return false;
    return true;
}

ComplexForm holomorphic_volume_form(const ComplexStructureOp& j, const std::vector<std::size_t>& indices)
{
    const std::size_t n = j.dim();
    ComplexForm omega{KForm::monomial(n, {}), KForm(n, 0)};
    for (auto i : indices) {
        KForm xi = KForm::basis(n, i);
        omega = wedge(omega, ComplexForm{xi, apply_J(j, xi)});
    }
    return omega;
}

ComplexForm ext_d(const LiePresentation& p, const ComplexForm& u) { return {ext_d(p, u.re), ext_d(p, u.im)}; }

bool su2su2_cyt_region(const Rat& a, const Rat& b)
{
    if (b == 0)
        throw DomainError("b = 0 does not define a complex structure");
    return b * (b - a) > 0 && a * a + 1 - a * b > 0;
}

std::pair<Rat, Rat> su2su2_fiber_factors(const Rat& a, const Rat& b)
{
    if (b == 0)
        throw DomainError("b = 0 does not define a complex structure");
    Rat c = -(a * a + 1) / b;
    Rat g22 = (a * a + 1) / (b * b);
    return {(b - a) / b, (a + c) / c * g22};
}

InvariantMetric su2su2_cyt_metric(const Rat& a, const Rat& b)
{
    if (b == 0)
        throw DomainError("b = 0 does not define a complex structure");
    Rat first = b * (b - a);
    Rat second = a * a + 1 - a * b;
    if (first <= 0)
        throw DomainError("no CYT metric: b(b-a) = " + to_string(first) + " is not positive");
    if (second <= 0)
        throw DomainError("no CYT metric: a^2+1-ab = " + to_string(second) + " is not positive");
    auto [g1, g2] = su2su2_fiber_factors(a, b);
    RatMatrix gram(6, 6);
    gram(0, 0) = 1;
    gram(0, 1) = gram(1, 0) = -a / b;
    gram(1, 1) = (a * a + 1) / (b * b);
    gram(2, 2) = gram(3, 3) = g1;
    gram(4, 4) = gram(5, 5) = g2;
    return InvariantMetric(gram);
}

KForm su2su2_sigma(const LiePresentation& p) { return p.form("alpha1") + p.form("alpha2"); }

RootResidual bismut_residual(rootsys::Series s, int rank, const RatVector& lambda)
{
    auto roots = rootsys::positive_roots(s, rank);
    if (lambda.size() != roots.size())
        throw DomainError("expected " + std::to_string(roots.size()) + " lambda values, got " +
                          std::to_string(lambda.size()));
    RootResidual out;
    out.residual.assign(static_cast<std::size_t>(rank), Rat(0));
    for (std::size_t r = 0; r < roots.size(); ++r) {
        if (lambda[r] <= 0)
            throw DomainError("lambda values must be positive, got " + to_string(lambda[r]));
        auto c = rootsys::simple_root_coefficients(roots[r], s, rank);
        for (std::size_t i = 0; i < c.size(); ++i)
            out.residual[i] += (1 - lambda[r]) * c[i];
    }
    out.cyt = std::all_of(out.residual.begin(), out.residual.end(), [](const Rat& x) { return x == 0; });
    return out;
}

RootResidual su3_cyt_family(const Rat& l_alpha, const Rat& l_beta, const Rat& l_alpha_beta)
{
    using rootsys::Series;
    auto roots = rootsys::positive_roots(Series::A, 2);
    RatVector lambda;
    for (const auto& r : roots) {
        auto c = rootsys::simple_root_coefficients(r, Series::A, 2);
        if (c[0] == 1 && c[1] == 1)
            lambda.push_back(l_alpha_beta);
        else if (c[0] == 1)
            lambda.push_back(l_alpha);
        else
            lambda.push_back(l_beta);
    }
    return bismut_residual(Series::A, 2, lambda);
}

KForm parallelizable_balanced_check(const LiePresentation& p, const ComplexStructureOp& j, const InvariantMetric& g)
{
    require_dim(p.dim(), j.dim(), "complex structure");
    if (!is_integrable(p, j))
        throw DomainError("complex structure is not integrable");
    if (!is_compatible(g, j))
        throw DomainError("metric is not compatible with the complex structure");
    const std::size_t n = p.dim();
    RatVector trace(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            trace[i] += p.structure_constant(k, i, k);
    KForm out(n, 1);
    for (std::size_t l = 0; l < n; ++l) {
        Rat v = 0;
        for (std::size_t i = 0; i < n; ++i)
            v -= j.matrix()(i, l) * trace[i];
        out.add_term(KForm::Mask{1} << l, v);
    }
    return out;
}

bool is_complex_parallelizable(const LiePresentation& p, const ComplexStructureOp& j)
{
    require_dim(p.dim(), j.dim(), "complex structure");
    const std::size_t n = p.dim();
    // [X_a, I X_b] = I [X_a, X_b] with I X_l = -sum_i m(i, l) X_i
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                Rat lhs = 0, rhs = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    lhs -= j.matrix()(i, b) * p.structure_constant(k, a, i);
                    rhs -= j.matrix()(k, i) * p.structure_constant(i, a, b);
                }
                if (lhs != rhs)
                    return false;
            }
    return true;
}

KForm chern_ricci_potential(const LiePresentation& p, const ComplexStructureOp& j)
{
    require_dim(p.dim(), j.dim(), "complex structure");
    const std::size_t n = p.dim();
    // vector action: I X_l = -sum_i m(i, l) X_i
    RatMatrix vec(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            vec(i, l) = -j.matrix()(i, l);
    RatVector trace(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            trace[i] += p.structure_constant(k, i, k);
    KForm out(n, 1);
    for (std::size_t l = 0; l < n; ++l) {
        Rat v = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                v += vec(i, k) * p.structure_constant(k, l, i);
        for (std::size_t i = 0; i < n; ++i)
            v -= vec(i, l) * trace[i];
        out.add_term(KForm::Mask{1} << l, -v / 2);
    }
    return out;
}

KForm bismut_ricci_form(const LiePresentation& p, const InvariantMetric& g, const ComplexStructureOp& j)
{
    KForm df = weak_codifferential(p, g, kahler_form(g, j));
    return ext_d(p, chern_ricci_potential(p, j) - df);
}

namespace {

void require_square(const FormMatrix& m)
{
    for (const auto& row : m)
        if (row.size() != m.size())
            throw DomainError("form matrix must be square");
}

FormMatrix wedge_matrix(const FormMatrix& a, const FormMatrix& b, std::size_t dim, int degree)
{
    const std::size_t n = a.size();
    FormMatrix out(n, std::vector<KForm>(n, KForm(dim, degree)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out[i][j] += wedge(a[i][k], b[k][j]);
    return out;
}

}  // namespace

FormMatrix connection_curvature(const LiePresentation& p, const FormMatrix& w)
{
    require_square(w);
    const std::size_t n = w.size();
    FormMatrix r = wedge_matrix(w, w, p.dim(), 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (w[i][j].degree() != 1 && !w[i][j].is_zero())
                throw DomainError("connection entries must be 1-forms");
            r[i][j] += ext_d(p, w[i][j]);
        }
    return r;
}

KForm tr_wedge(const FormMatrix& a, const FormMatrix& b)
{
    require_square(a);
    require_square(b);
    if (a.size() != b.size() || a.empty())
        throw DomainError("trace of a product of mismatched form matrices");
    KForm out(a[0][0].dim(), a[0][0].degree() + b[0][0].degree());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            out += wedge(a[i][j], b[j][i]);
    return out;
}

KForm tr_wedge_square(const FormMatrix& r) { return tr_wedge(r, r); }

std::vector<KForm> tr_wedge_square_in_scale(const LiePresentation& p, const FormMatrix& w)
{
    require_square(w);
    const std::size_t n = w.size();
    FormMatrix x(n, std::vector<KForm>(n, KForm(p.dim(), 2)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x[i][j] = ext_d(p, w[i][j]);
    FormMatrix y = wedge_matrix(w, w, p.dim(), 2);
    std::vector<KForm> out(5, KForm(p.dim(), 4));
    out[2] = tr_wedge(x, x);
    out[3] = tr_wedge(x, y) + tr_wedge(y, x);
    out[4] = tr_wedge(y, y);
    return out;
}

AnomalyReport strominger_anomaly_report(const LiePresentation& p, const ComplexStructureOp& j, const KForm& f,
                                        const FormMatrix& w, const KForm& tr_fa)
{
    if (!tr_fa.is_zero() && (tr_fa.degree() != 4 || tr_fa.terms().size() != 1))
        throw PreconditionError("tr(F_A ^ F_A) must be a multiple of a single basis 4-form");
    AnomalyReport rep;
    rep.ddc_f = ddc(p, j, f);
    rep.tr_rr = tr_wedge_square(connection_curvature(p, w));
    rep.tr_fa = tr_fa.is_zero() ? KForm(p.dim(), 4) : tr_fa;
    KForm lhs = rep.tr_rr - rep.tr_fa;
    if (rep.ddc_f.is_zero()) {
        rep.reason = "dd^c F vanishes";
        return rep;
    }
    rep.mu = lhs.ratio_to(rep.ddc_f);
    if (!rep.mu) {
        rep.reason = "tr(R^R) - tr(F_A^F_A) is not proportional to dd^c F";
        return rep;
    }
    if (*rep.mu <= 0) {
        rep.reason = "alpha' would not be positive (mu = " + to_string(*rep.mu) + ")";
        return rep;
    }
    rep.solvable = true;
    rep.alpha_prime = Rat(4) / *rep.mu;
    return rep;
}

}  // namespace cytkit::exforms
