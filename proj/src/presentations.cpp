#include "cytkit/presentations.hpp"

#include "cytkit/errors.hpp"

namespace cytkit::presentations {

using exforms::ComplexStructureOp;
using exforms::InvariantMetric;

namespace {

KForm::Mask pair_mask(std::size_t i, std::size_t j) { return (KForm::Mask{1} << i) | (KForm::Mask{1} << j); }

RatMatrix pair_rotation(std::size_t n)
{
    // xi^{2k} -> xi^{2k+1}, xi^{2k+1} -> -xi^{2k}
    RatMatrix j(n, n);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        j(k, k + 1) = 1;
        j(k + 1, k) = -1;
    }
    return j;
}

RatVector rv(std::initializer_list<long> xs)
{
    RatVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

struct CMat {
    RatMatrix re, im;
};

CMat cmul(const CMat& a, const CMat& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

CMat cbracket(const CMat& a, const CMat& b)
{
    CMat ab = cmul(a, b), ba = cmul(b, a);
    return {ab.re - ba.re, ab.im - ba.im};
}

RatVector flatten(const CMat& m)
{
    RatVector v;
    for (const auto* part : {&m.re, &m.im})
        for (std::size_t i = 0; i < part->rows(); ++i)
            for (std::size_t j = 0; j < part->cols(); ++j)
                v.push_back((*part)(i, j));
    return v;
}

std::vector<CMat> su3_basis()
{
    auto zero = [] { return RatMatrix(3, 3); };
    std::vector<CMat> basis;
    CMat h1{zero(), zero()}, h2{zero(), zero()};
    h1.im(0, 0) = 1;
    h1.im(1, 1) = -1;
    h2.im(0, 0) = 1;
    h2.im(1, 1) = 1;
    h2.im(2, 2) = -2;
    basis.push_back(h1);
    basis.push_back(h2);
    for (auto [j, k] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        CMat a{zero(), zero()}, b{zero(), zero()};
        a.re(j, k) = 1;
        a.re(k, j) = -1;
        b.im(j, k) = 1;
        b.im(k, j) = 1;
        basis.push_back(a);
        basis.push_back(b);
    }
    return basis;
}

}  // namespace

LiePresentation from_structure_constants(const std::vector<std::string>& names, const StructureConstants& c)
{
    const std::size_t n = names.size();
    if (c.size() != n)
        throw DomainError("structure constants do not match the basis size");
    std::vector<KForm> d(n, KForm(n, 2));
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].size() != n)
            throw DomainError("structure constants do not match the basis size");
        for (std::size_t j = 0; j < n; ++j) {
            if (c[i][j].size() != n)
                throw DomainError("structure constants do not match the basis size");
            for (std::size_t k = 0; k < n; ++k) {
                if (c[i][j][k] != -c[j][i][k])
                    throw DomainError("structure constants are not antisymmetric");
                if (i < j)
                    d[k].add_term(pair_mask(i, j), -c[i][j][k]);
            }
        }
    }
    return LiePresentation(names, d);
}

LiePresentation complex_lie_algebra(std::size_t n, const std::vector<ComplexBracket>& brackets)
{
    const std::size_t dim = 2 * n;
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) {
        names.push_back("x" + std::to_string(k));
        names.push_back("y" + std::to_string(k));
    }
    auto x = [](std::size_t k) { return 2 * k; };
    auto y = [](std::size_t k) { return 2 * k + 1; };
    std::vector<KForm> d(dim, KForm(dim, 2));
    for (const auto& [i, j, coeff] : brackets) {
        if (i >= n || j >= n || i == j || coeff.size() != n)
            throw DomainError("malformed complex bracket");
        for (std::size_t k = 0; k < n; ++k) {
            // d zeta^k = -c^k_ij zeta^i ^ zeta^j for the bracket [X_i, X_j]
            Rat c = -coeff[k];
            d[x(k)] += KForm::monomial(dim, {x(i), x(j)}, c) - KForm::monomial(dim, {y(i), y(j)}, c);
            d[y(k)] += KForm::monomial(dim, {x(i), y(j)}, c) + KForm::monomial(dim, {y(i), x(j)}, c);
        }
    }
    LiePresentation p(names, d);
    p.complex_structure = ComplexStructureOp(pair_rotation(dim));
    p.metric = InvariantMetric(RatMatrix::identity(dim));
    return p;
}

LiePresentation nil6()
{
    const std::size_t n = 6;
    std::vector<KForm> d(n, KForm(n, 2));
    d[5] = KForm::monomial(n, {0, 1}) - KForm::monomial(n, {2, 3});
    LiePresentation p({"e1", "Je1", "e2", "Je2", "e3", "Je3"}, d);
    p.complex_structure = ComplexStructureOp(pair_rotation(n));
    p.metric = InvariantMetric(RatMatrix::identity(n));
    p.kahler = KForm::monomial(n, {0, 1}, 2) + KForm::monomial(n, {2, 3}, 2) + KForm::monomial(n, {4, 5}, 2);
    return p;
}

FormMatrix nil6_connection(const Rat& a)
{
    const std::size_t n = 6;
    FormMatrix w(n, std::vector<KForm>(n, KForm(n, 1)));
    w[0][1] = KForm::basis(n, 5) * a;
    w[1][0] = KForm::basis(n, 5) * (-a);
    return w;
}

LiePresentation su2su2(const Rat& a, const Rat& b)
{
    if (b == 0)
        throw DomainError("b = 0 does not define a complex structure");
    const std::size_t n = 6;
    // alpha1, alpha2, e1p, e1m, e2p, e2m
    std::vector<KForm> d(n, KForm(n, 2));
    for (std::size_t i = 0; i < 2; ++i) {
        std::size_t al = i, ep = 2 + 2 * i, em = 3 + 2 * i;
        d[al] = KForm::monomial(n, {em, ep});
        d[ep] = KForm::monomial(n, {al, em});
        d[em] = KForm::monomial(n, {al, ep}, -1);
    }
    LiePresentation p({"alpha1", "alpha2", "e1p", "e1m", "e2p", "e2m"}, d);
    Rat c = -(a * a + 1) / b;
    RatMatrix j(n, n);
    j(0, 0) = a;
    j(0, 1) = b;
    j(1, 0) = c;
    j(1, 1) = -a;
    j(2, 3) = 1;
    j(3, 2) = -1;
    j(4, 5) = 1;
    j(5, 4) = -1;
    p.complex_structure = ComplexStructureOp(j);
    if (a == 0 && b * b == 1)
        p.metric = InvariantMetric(RatMatrix::identity(n));
    return p;
}

LiePresentation su3()
{
    auto basis = su3_basis();
    const std::size_t n = basis.size();
    RatMatrix span(18, n);
    for (std::size_t k = 0; k < n; ++k) {
        auto v = flatten(basis[k]);
        for (std::size_t r = 0; r < 18; ++r)
            span(r, k) = v[r];
    }
    StructureConstants c(n, std::vector<RatVector>(n, RatVector(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto coords = solve_least(span, flatten(cbracket(basis[i], basis[j])));
            if (!coords)
                throw InvariantViolation("su(3) bracket left the span of the basis");
            c[i][j] = *coords;
        }
    auto p = from_structure_constants({"h1", "h2", "x12", "y12", "x13", "y13", "x23", "y23"}, c);
    p.complex_structure = ComplexStructureOp(pair_rotation(n));
    p.metric = su3_metric(1, 1, 1);
    return p;
}

InvariantMetric su3_metric(const Rat& l_alpha, const Rat& l_beta, const Rat& l_alpha_beta)
{
    for (const auto* l : {&l_alpha, &l_beta, &l_alpha_beta})
        if (*l <= 0)
            throw DomainError("lambda values must be positive");
    RatMatrix gram(8, 8);
    gram(0, 0) = gram(1, 1) = Rat(1, 2);
    // root spaces in basis order: (1,2) = alpha, (1,3) = alpha + beta, (2,3) = beta
    const Rat* lambdas[] = {&l_alpha, &l_alpha_beta, &l_beta};
    for (std::size_t r = 0; r < 3; ++r) {
        Rat g = *lambdas[r] / 2;
        gram(2 + 2 * r, 2 + 2 * r) = g;
        gram(3 + 2 * r, 3 + 2 * r) = g;
    }
    return InvariantMetric(gram);
}

LiePresentation abelian_c3() { return complex_lie_algebra(3, {}); }

LiePresentation heisenberg_c() { return complex_lie_algebra(3, {{0, 1, rv({0, 0, 1})}}); }

LiePresentation s2c_plus_c() { return complex_lie_algebra(3, {{0, 1, rv({0, 1, 0})}}); }

LiePresentation s3c() { return complex_lie_algebra(3, {{0, 1, rv({0, 1, 0})}, {0, 2, rv({0, 1, 1})}}); }

LiePresentation s3c_lambda(const Rat& lambda)
{
    return complex_lie_algebra(3, {{0, 1, rv({0, 1, 0})}, {0, 2, RatVector{0, 0, lambda}}});
}

LiePresentation sl2c()
{
    // X1 = H, X2 = E, X3 = F
    return complex_lie_algebra(3, {{0, 1, rv({0, 2, 0})}, {0, 2, rv({0, 0, -2})}, {1, 2, rv({1, 0, 0})}});
}

LiePresentation hopf_torus()
{
    const std::size_t n = 6;
    // alpha, t, ep, em, x, y
    std::vector<KForm> d(n, KForm(n, 2));
    d[0] = KForm::monomial(n, {3, 2});
    d[2] = KForm::monomial(n, {0, 3});
    d[3] = KForm::monomial(n, {0, 2}, -1);
    LiePresentation p({"alpha", "t", "ep", "em", "x", "y"}, d);
    p.complex_structure = ComplexStructureOp(pair_rotation(n));
    p.metric = InvariantMetric(RatMatrix::identity(n));
    return p;
}

std::vector<std::string> shipped_names()
{
    return {"nil6", "su2su2", "su3", "c3", "heisenberg", "s2c", "s3", "s3_lambda", "sl2c", "hopf_t2"};
}

LiePresentation by_name(const std::string& name)
{
    if (name == "nil6")
        return nil6();
    if (name == "su2su2")
        return su2su2(0, 1);
    if (name == "su3")
        return su3();
    if (name == "c3")
        return abelian_c3();
    if (name == "heisenberg")
        return heisenberg_c();
    if (name == "s2c")
        return s2c_plus_c();
    if (name == "s3")
        return s3c();
    if (name == "s3_lambda")
        return s3c_lambda(-1);
    if (name == "sl2c")
        return sl2c();
    if (name == "hopf_t2")
        return hopf_torus();
    throw DomainError("unknown presentation '" + name + "'");
}

}  // namespace cytkit::presentations
