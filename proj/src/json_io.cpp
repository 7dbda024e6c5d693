#include "cytkit/json_io.hpp"

#include "cytkit/errors.hpp"

#include <fstream>

namespace cytkit::json_io {

using exforms::ComplexStructureOp;
using exforms::InvariantMetric;
using exforms::LiePresentation;

json rational(const Rat& r) { return cytkit::to_string(r); }

Rat parse_rational_json(const json& j)
{
    if (j.is_number_integer())
        return Rat(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw DomainError("expected an exact number (integer or \"p/q\" string), got " + j.dump());
}

namespace {

Int parse_integer_json(const json& j)
{
    Rat r = parse_rational_json(j);
    if (!is_integer(r))
        throw DomainError("expected an integer, got " + j.dump());
    return r.get_num();
}

std::size_t parse_index(const json& j, std::size_t dim)
{
    if (!j.is_number_integer() || j.get<long>() < 0 || static_cast<std::size_t>(j.get<long>()) >= dim)
        throw DomainError("basis index out of range: " + j.dump());
    return j.get<std::size_t>();
}

const json& member(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw DomainError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json matrix(const RatMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(rational(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

RatMatrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw DomainError("expected a non-empty matrix");
    const std::size_t rows = j.size(), cols = j[0].is_array() ? j[0].size() : 0;
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw DomainError("matrix rows must be arrays of equal length");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = parse_rational_json(j[i][k]);
    }
    return m;
}

json form(const KForm& f)
{
    json terms = json::array();
    for (const auto& [mask, c] : f.terms()) {
        json t = json::array({rational(c)});
        for (auto i : mask_indices(mask))
            t.push_back(i);
        terms.push_back(t);
    }
    return terms;
}

KForm form_from_json(const json& j, std::size_t dim, int degree)
{
    if (!j.is_array())
        throw DomainError("a form is a list of [coeff, i, j, ...] terms");
    KForm out(dim, degree);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != static_cast<std::size_t>(degree) + 1)
            throw DomainError("form term of the wrong length: " + t.dump());
        std::vector<std::size_t> idx;
        for (std::size_t k = 1; k < t.size(); ++k)
            idx.push_back(parse_index(t[k], dim));
        out += KForm::monomial(dim, idx, parse_rational_json(t[0]));
    }
    return out;
}

json to_json(const LiePresentation& p)
{
    json j;
    j["basis"] = p.names();
    json d = json::object();
    for (std::size_t i = 0; i < p.dim(); ++i)
        d[p.names()[i]] = form(p.differentials()[i]);
    j["d"] = d;
    if (p.complex_structure)
        j["J"] = matrix(p.complex_structure->matrix());
    if (p.metric)
        j["metric"] = matrix(p.metric->gram());
    if (p.kahler)
        j["kahler"] = form(*p.kahler);
    return j;
}

LiePresentation presentation_from_json(const json& j)
{
    try {
        const json& basis = member(j, "basis");
        if (!basis.is_array() || basis.empty())
            throw DomainError("basis must be a non-empty list of names");
        std::vector<std::string> names;
        for (const auto& n : basis) {
            if (!n.is_string())
                throw DomainError("basis names must be strings");
            names.push_back(n.get<std::string>());
        }
        const std::size_t dim = names.size();
        if (dim > KForm::max_dim)
            throw DomainError("presentation dimension exceeds " + std::to_string(KForm::max_dim));
        const json& d = member(j, "d");
        if (!d.is_object())
            throw DomainError("d must map basis names to 2-forms");
        std::vector<KForm> diffs(dim, KForm(dim, 2));
        for (const auto& [name, value] : d.items()) {
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end())
                throw DomainError("d lists unknown basis element '" + name + "'");
            diffs[static_cast<std::size_t>(it - names.begin())] = form_from_json(value, dim, 2);
        }
        LiePresentation p(names, diffs);
        auto square = [&](const RatMatrix& m, const char* what) {
            if (m.rows() != dim || m.cols() != dim)
                throw DomainError(std::string(what) + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
            return m;
        };
        if (j.contains("J"))
            p.complex_structure = ComplexStructureOp(square(matrix_from_json(j.at("J")), "J"));
        if (j.contains("metric"))
            p.metric = InvariantMetric(square(matrix_from_json(j.at("metric")), "metric"));
        if (j.contains("kahler"))
            p.kahler = form_from_json(j.at("kahler"), dim, 2);
        return p;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed presentation: ") + e.what());
    }
}

LiePresentation load_presentation(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open presentation file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError("'" + path + "' is not valid JSON: " + e.what());
    }
    return presentation_from_json(j);
}

void save_presentation(const std::string& path, const LiePresentation& p)
{
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot write '" + path + "'");
    // one matrix row or one differential per line
    const json j = to_json(p);
    out << "{";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        out << (first ? "\n" : ",\n") << "  " << json(key).dump() << ": ";
        first = false;
        if (key == "J" || key == "metric" || key == "d") {
            const bool object = value.is_object();
            out << (object ? "{" : "[");
            bool first_row = true;
            for (const auto& [k, row] : value.items()) {
                out << (first_row ? "\n" : ",\n") << "    ";
                if (object)
                    out << json(k).dump() << ": ";
                out << row.dump();
                first_row = false;
            }
            out << "\n  " << (object ? "}" : "]");
        } else {
            out << value.dump();
        }
    }
    out << "\n}\n";
}

bool same_presentation(const LiePresentation& a, const LiePresentation& b)
{
    if (a.names() != b.names())
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!(a.differentials()[i] == b.differentials()[i]))
            return false;
    auto same_opt = [](const auto& x, const auto& y, auto eq) {
        return x.has_value() == y.has_value() && (!x || eq(*x, *y));
    };
    return same_opt(a.complex_structure, b.complex_structure,
                    [](const auto& x, const auto& y) { return x.matrix() == y.matrix(); }) &&
           same_opt(a.metric, b.metric, [](const auto& x, const auto& y) { return x.gram() == y.gram(); }) &&
           same_opt(a.kahler, b.kahler, [](const auto& x, const auto& y) { return x == y; });
}

bool CohomologyReport::operator==(const CohomologyReport& o) const
{
    return weights == o.weights && polys.m4 == o.polys.m4 && polys.n6 == o.polys.n6 && polys.k8 == o.polys.k8 &&
           L == o.L && eligible == o.eligible && cohomology == o.cohomology && relations == o.relations;
}

CohomologyReport cohomology_report(const Int& k, const Int& l)
{
    CohomologyReport r;
    r.weights = ssq::WeightChoice(k, l).weights();
    r.polys = ssq::restriction_polys(k, l);
    auto g = ssq::gcd_conditions(r.polys);
    r.L = g.l;
    r.eligible = g.eligible;
    r.cohomology = ssq::spectral_cohomology(k, l);
    r.relations = ssq::ring_relations(k, l).relations;
    return r;
}

json to_json(const CohomologyReport& r)
{
    json j;
    j["weights"] = json::array();
    for (const auto& w : r.weights)
        j["weights"].push_back(cytkit::to_string(w));
    j["M4"] = cytkit::to_string(r.polys.m4);
    j["N6"] = cytkit::to_string(r.polys.n6);
    j["K8"] = cytkit::to_string(r.polys.k8);
    j["L"] = cytkit::to_string(r.L);
    j["eligible"] = r.eligible;
    json h = json::object();
    for (int n = 0; n <= ssq::GradedAbelianGroup::top_degree; ++n) {
        const auto& g = r.cohomology.groups[n];
        json torsion = json::array();
        for (const auto& t : g.torsion)
            torsion.push_back(cytkit::to_string(t));
        h[std::to_string(n)] = {{"rank", g.free_rank}, {"torsion", torsion}};
    }
    j["cohomology"] = h;
    j["relations"] = r.relations;
    return j;
}

CohomologyReport cohomology_report_from_json(const json& j)
{
    try {
        CohomologyReport r;
        const json& w = member(j, "weights");
        if (!w.is_array() || w.size() != 4)
            throw DomainError("weights must list four integers");
        for (std::size_t i = 0; i < 4; ++i)
            r.weights[i] = parse_integer_json(w[i]);
        r.polys.m4 = parse_integer_json(member(j, "M4"));
        r.polys.n6 = parse_integer_json(member(j, "N6"));
        r.polys.k8 = parse_integer_json(member(j, "K8"));
        r.L = parse_integer_json(member(j, "L"));
        r.eligible = member(j, "eligible").get<bool>();
        const json& h = member(j, "cohomology");
        for (int n = 0; n <= ssq::GradedAbelianGroup::top_degree; ++n) {
            if (!h.contains(std::to_string(n)))
                continue;
            const json& g = h.at(std::to_string(n));
            r.cohomology.groups[n].free_rank = member(g, "rank").get<std::size_t>();
            for (const auto& t : member(g, "torsion"))
                r.cohomology.groups[n].torsion.push_back(parse_integer_json(t));
        }
        r.relations = member(j, "relations").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed cohomology report: ") + e.what());
    }
}

json to_json(const catalog::CatalogEntry& e)
{
    return {{"name", e.name},
            {"kind", catalog::to_string(e.kind)},
            {"description", e.description},
            {"construction", e.construction},
            {"tags", e.tags}};
}

catalog::CatalogEntry catalog_entry_from_json(const json& j)
{
    try {
        catalog::CatalogEntry e;
        e.name = member(j, "name").get<std::string>();
        std::string kind = member(j, "kind").get<std::string>();
        if (kind == "quotient")
            e.kind = catalog::Kind::Quotient;
        else if (kind == "parallelizable")
            e.kind = catalog::Kind::Parallelizable;
        else if (kind == "classification")
            e.kind = catalog::Kind::Classification;
        else
            throw DomainError("unknown catalog kind '" + kind + "'");
        e.description = member(j, "description").get<std::string>();
        e.construction = member(j, "construction").get<std::string>();
        e.tags = member(j, "tags").get<std::vector<std::string>>();
        return e;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed catalog entry: ") + e.what());
    }
}

}  // namespace cytkit::json_io
