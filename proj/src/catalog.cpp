#include "cytkit/catalog.hpp"

#include "cytkit/errors.hpp"
#include "cytkit/exforms.hpp"
#include "cytkit/painted.hpp"
#include "cytkit/presentations.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cytkit::catalog {

namespace {

namespace P = cytkit::presentations;
using namespace cytkit::exforms;
using painted::BlockStructure;
using painted::PaintedDiagram;

std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

CatalogEntry quotient(std::string name, std::string description, std::string construction,
                      std::vector<std::string> tags)
{
    return {std::move(name), Kind::Quotient, std::move(description), std::move(construction), sorted(std::move(tags))};
}

CatalogEntry algebra(std::string name, std::string description, std::vector<std::string> tags)
{
    std::string c = name;
    return {std::move(name), Kind::Parallelizable, std::move(description), std::move(c), sorted(std::move(tags))};
}

CatalogEntry classification(std::string name, std::string description, std::string label,
                            std::vector<std::string> tags)
{
    return {std::move(name), Kind::Classification, std::move(description), std::move(label), sorted(std::move(tags))};
}

std::vector<CatalogEntry> build()
{
    return {
        quotient("su6-su2x3", "SU(6)/SU(2)xSU(2)xSU(2), an odd number of blocks filling SU(n)",
                 "A5:2,4 blocks=su2,su2,su2 torus=none",
                 {"c1-zero", "semisimple-isotropy", "even-dimensional", "real-dim=26"}),
        quotient("su5-su2x2", "SU(5)/SU(2)xSU(2), blocks leaving one free slot, n - sum n_i + k odd",
                 "A4:2,4 blocks=su2,su2,1 torus=none",
                 {"c1-zero", "semisimple-isotropy", "even-dimensional", "real-dim=18"}),
        quotient("so14-su2x2-so6", "SO(14)/SU(2)xSU(2)xSO(6)", "D7:2,4 blocks=su2,su2,so6 torus=none",
                 {"c1-zero", "semisimple-isotropy", "even-dimensional", "real-dim=70"}),
        quotient("so12-su2x3", "SO(12)/SU(2)xSU(2)xSU(2), an odd number of unitary blocks filling SO(2n)",
                 "D6:2,4,6 blocks=su2,su2,su2 torus=none",
                 {"c1-zero", "semisimple-isotropy", "odd-dimensional", "real-dim=57"}),
        quotient("so13-su2x2-so5", "SO(13)/SU(2)xSU(2)xSO(5)", "B6:2,4 blocks=su2,su2,so5 torus=none",
                 {"c1-zero", "semisimple-isotropy", "even-dimensional", "real-dim=62"}),
        quotient("sp6-su2x2-sp2", "Sp(6)/SU(2)xSU(2)xSp(2)", "C6:2,4 blocks=su2,su2,sp2 torus=none",
                 {"c1-zero", "semisimple-isotropy", "even-dimensional", "real-dim=62"}),
        quotient("su4-u1-k1-l1", "SU(4)/U(1) with weights (1,1,-5,3)", "A3:1,2,3 blocks=1,1,1,1 torus=1,1,-5,3",
                 {"c1-zero", "even-dimensional", "real-dim=14"}),
        quotient("su4-u1-k1-l0", "SU(4)/U(1) with weights (1,0,-3,2)", "A3:1,2,3 blocks=1,1,1,1 torus=1,0,-3,2",
                 {"c1-zero", "even-dimensional", "real-dim=14"}),
        quotient("su4-u1-unbalanced", "SU(4)/U(1) with weights (1,-1,0,0)", "A3:1,2,3 blocks=1,1,1,1 torus=1,-1,0,0",
                 {"c1-nonzero", "even-dimensional", "real-dim=14"}),
        quotient("su11-t2", "SU(11)/SU(4)xSU(3)xSU(2)xT^2 over the flag manifold A10:1,2,6,9",
                 "A10:1,2,6,9 blocks=1,1,su4,su3,su2 torus=enumerate:2",
                 {"c1-zero", "even-dimensional", "real-dim=92"}),
        quotient("sp7-t2", "Sp(7)/SU(2)xSp(2)xT^2 over the flag manifold C7:1,3,4,5",
                 "C7:1,3,4,5 blocks=1,su2,1,1,sp2 torus=enumerate:2",
                 {"c1-zero", "even-dimensional", "real-dim=90"}),
        quotient("cp3", "CP^3 = SU(4)/S(U(1)xU(3)), a flag manifold", "A3:1 blocks=1,su3 torus=3,-1",
                 {"c1-nonzero", "even-dimensional", "real-dim=6"}),

        algebra("c3", "abelian C^3", {"parallelizable", "unimodular", "balanced", "cyt"}),
        algebra("heisenberg", "complex Heisenberg algebra", {"parallelizable", "unimodular", "balanced", "cyt"}),
        algebra("s2c", "s2(C) + C, [X1,X2] = X2", {"parallelizable", "not-unimodular"}),
        algebra("s3", "s3(C), [X1,X2] = X2, [X1,X3] = X2 + X3", {"parallelizable", "not-unimodular"}),
        algebra("s3_lambda", "s3,lambda(C) at lambda = -1", {"parallelizable", "unimodular", "balanced", "cyt"}),
        algebra("s3_lambda_2", "s3,lambda(C) at lambda = 2", {"parallelizable", "not-unimodular"}),
        algebra("sl2c", "sl(2,C)", {"parallelizable", "unimodular", "balanced", "cyt"}),

        classification("dim3-parallelizable", "compact complex parallelizable manifolds", "i",
                       {"case-i", "c1-zero", "cyt:every-invariant-metric"}),
        classification("dim3-torus-bundle", "torus bundles over CP^2, CP^1 x CP^1 or CP^1", "ii",
                       {"case-ii", "c1-zero", "cyt:except-some-su2xsu2-structures"}),
        classification("dim3-flag", "generalized flag manifolds", "iii", {"case-iii", "c1-nonzero", "cyt:no"}),
        classification("dim3-reducible", "products of a 2-torus with a homogeneous surface", "iv",
                       {"case-iv", "c1-zero", "cyt:yes"}),
        classification("dim3-torus", "complex torus", "v", {"case-v", "c1-zero", "cyt:yes"}),
        classification("dim3-hopf", "Hopf surface (times a 2-torus)", "vi", {"case-vi", "c1-zero", "cyt:yes"}),
    };
}

struct QuotientData {
    PaintedDiagram diagram;
    BlockStructure blocks;
    std::vector<IntVector> torus;
};

QuotientData parse_quotient(const std::string& construction)
{
    std::stringstream ss(construction);
    std::string diagram, blocks, torus;
    ss >> diagram >> blocks >> torus;
    if (blocks.rfind("blocks=", 0) != 0 || torus.rfind("torus=", 0) != 0)
        throw DomainError("malformed quotient construction '" + construction + "'");
    QuotientData q;
    q.diagram = PaintedDiagram::parse(diagram);
    q.blocks = BlockStructure::parse(blocks, q.diagram.series);
    std::string t = torus.substr(6);
    if (t == "none")
        return q;
    if (t.rfind("enumerate:", 0) == 0) {
        q.torus = painted::enumerate_embeddings(q.diagram, q.blocks, std::stoul(t.substr(10))).basis;
        return q;
    }
    std::stringstream vs(t);
    std::string vec;
    while (std::getline(vs, vec, ';')) {
        IntVector v;
        std::stringstream es(vec);
        std::string x;
        while (std::getline(es, x, ','))
            v.emplace_back(x);
        q.torus.push_back(v);
    }
    return q;
}

std::vector<std::string> quotient_tags(const CatalogEntry& e, std::vector<std::string>& notes)
{
    auto q = parse_quotient(e.construction);
    std::vector<std::string> tags;
    bool c1 = painted::c1_vanishes(q.diagram, q.blocks, q.torus);
    tags.push_back(c1 ? "c1-zero" : "c1-nonzero");
    if (q.torus.empty())
        tags.push_back("semisimple-isotropy");
    int dim = painted::homogeneous_space_dimension(q.diagram, static_cast<int>(q.torus.size()));
    tags.push_back(dim % 2 ? "odd-dimensional" : "even-dimensional");
    tags.push_back("real-dim=" + std::to_string(dim));
    notes.push_back("Koszul row " + join(painted::koszul_row(q.diagram, q.blocks)));
    for (const auto& v : q.torus)
        notes.push_back("torus vector " + join(v));
    return tags;
}

/// A couple of invariant metrics compatible with a pair-rotation J.
std::vector<InvariantMetric> sample_metrics(const ComplexStructureOp& j)
{
    std::vector<InvariantMetric> out;
    const std::size_t n = j.dim();
    out.emplace_back(RatMatrix::identity(n));
    // g = M^T M + I with M complex-linear for the pair rotation
    RatMatrix m(n, n);
    for (std::size_t k = 0; k < n / 2; ++k)
        for (std::size_t l = 0; l < n / 2; ++l) {
            Rat p = static_cast<long>((k + 2 * l) % 3) - 1, q = static_cast<long>((2 * k + l) % 3) - 1;
            m(2 * k, 2 * l) = p;
            m(2 * k, 2 * l + 1) = q;
            m(2 * k + 1, 2 * l) = -q;
            m(2 * k + 1, 2 * l + 1) = p;
        }
    InvariantMetric g(m.transpose() * m + RatMatrix::identity(n));
    if (!is_compatible(g, j))
        throw InvariantViolation("sample metric is not compatible with J");
    out.push_back(g);
    return out;
}

LiePresentation algebra_presentation(const std::string& name)
{
    if (name == "s3_lambda_2")
        return P::s3c_lambda(2);
    return P::by_name(name);
}

bool cyt_for_all(const LiePresentation& p, const std::vector<InvariantMetric>& metrics)
{
    return std::all_of(metrics.begin(), metrics.end(), [&](const InvariantMetric& g) {
        return bismut_ricci_form(p, g, *p.complex_structure).is_zero();
    });
}

std::vector<std::string> algebra_tags(const std::string& name, std::vector<std::string>& notes)
{
    auto p = algebra_presentation(name);
    const auto& j = *p.complex_structure;
    auto metrics = sample_metrics(j);
    std::vector<std::string> tags;
    if (is_complex_parallelizable(p, j))
        tags.push_back("parallelizable");
    KForm trace = parallelizable_balanced_check(p, j, metrics.front());
    tags.push_back(trace.is_zero() ? "unimodular" : "not-unimodular");
    notes.push_back("trace form " + trace.to_string(p.names()));
    if (!trace.is_zero()) {
        notes.push_back("no cocompact lattice, so no compact quotient to test");
        return tags;
    }
    bool balanced = std::all_of(metrics.begin(), metrics.end(), [&](const InvariantMetric& g) {
        return weak_codifferential(p, g, kahler_form(g, j)).is_zero();
    });
    if (balanced)
        tags.push_back("balanced");
    if (cyt_for_all(p, metrics))
        tags.push_back("cyt");
    return tags;
}

std::vector<std::string> classification_tags(const std::string& label, std::vector<std::string>& notes)
{
    std::vector<std::string> tags{"case-" + label};
    auto invariant_cyt = [&](const LiePresentation& p) {
        return cyt_for_all(p, sample_metrics(*p.complex_structure));
    };
    if (label == "i") {
        bool all = true;
        for (const char* name : {"heisenberg", "s3_lambda", "sl2c"}) {
            auto p = P::by_name(name);
            bool ok = is_complex_parallelizable(p, *p.complex_structure) &&
                      chern_ricci_potential(p, *p.complex_structure).is_zero() && invariant_cyt(p);
            notes.push_back(std::string(name) + (ok ? ": every sampled invariant metric is CYT" : ": not CYT"));
            all = all && ok;
        }
        tags.push_back("c1-zero");
        if (all)
            tags.push_back("cyt:every-invariant-metric");
    } else if (label == "ii") {
        int admissible = 0, excluded = 0;
        bool agree = true;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b) {
                if (b == 0)
                    continue;
                bool region = su2su2_cyt_region(a, b);
                bool cyt = false;
                if (region) {
                    auto p = P::su2su2(a, b);
                    cyt = bismut_ricci_form(p, su2su2_cyt_metric(a, b), *p.complex_structure).is_zero();
                }
                agree = agree && region == cyt;
                (region ? admissible : excluded) += 1;
            }
        notes.push_back("SU(2)xSU(2) grid |a|,|b| <= 3: " + std::to_string(admissible) + " admissible, " +
                        std::to_string(excluded) + " excluded");
        tags.push_back("c1-zero");
        if (agree && admissible > 0 && excluded > 0)
            tags.push_back("cyt:except-some-su2xsu2-structures");
    } else if (label == "iii") {
        std::vector<std::string> ignored;
        auto t = quotient_tags(find("cp3"), ignored);
        bool c1_zero = std::find(t.begin(), t.end(), "c1-zero") != t.end();
        tags.push_back(c1_zero ? "c1-zero" : "c1-nonzero");
        // rho^B represents 2 pi c1, so a nonzero c1 rules out CYT
        if (!c1_zero)
            tags.push_back("cyt:no");
        notes.push_back("CP^3: Koszul form does not vanish on the centre of the isotropy");
    } else if (label == "iv" || label == "v" || label == "vi") {
        std::vector<std::string> names;
        if (label != "vi")
            names.push_back("c3");
        if (label != "v")
            names.push_back("hopf_t2");
        bool all = true;
        for (const auto& name : names) {
            auto p = P::by_name(name);
            bool ok = bismut_ricci_form(p, *p.metric, *p.complex_structure).is_zero();
            notes.push_back(name + (ok ? ": CYT" : ": not CYT"));
            all = all && ok;
        }
        tags.push_back("c1-zero");
        if (all)
            tags.push_back("cyt:yes");
    } else {
        throw DomainError("unknown classification case '" + label + "'");
    }
    return tags;
}

}  // namespace

const std::vector<CatalogEntry>& entries()
{
    static const std::vector<CatalogEntry> all = build();
    return all;
}

const CatalogEntry& find(const std::string& name)
{
    for (const auto& e : entries())
        if (e.name == name)
            return e;
    throw DomainError("unknown catalog entry '" + name + "'");
}

std::string to_string(Kind k)
{
    switch (k) {
    case Kind::Quotient:
        return "quotient";
    case Kind::Parallelizable:
        return "parallelizable";
    case Kind::Classification:
        return "classification";
    }
    return "";
}

CheckResult check(const CatalogEntry& e)
{
    CheckResult r;
    switch (e.kind) {
    case Kind::Quotient:
        r.computed_tags = quotient_tags(e, r.notes);
        break;
    case Kind::Parallelizable:
        r.computed_tags = algebra_tags(e.construction, r.notes);
        break;
    case Kind::Classification:
        r.computed_tags = classification_tags(e.construction, r.notes);
        break;
    }
    r.computed_tags = sorted(r.computed_tags);
    r.ok = r.computed_tags == e.tags;
    return r;
}

}  // namespace cytkit::catalog
