#include "cytkit/catalog.hpp"
#include "cytkit/errors.hpp"
#include "cytkit/exforms.hpp"
#include "cytkit/json_io.hpp"
#include "cytkit/painted.hpp"
#include "cytkit/presentations.hpp"
#include "cytkit/rootsys.hpp"
#include "cytkit/ssq.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace cytkit;
using json = nlohmann::json;
namespace ex = cytkit::exforms;

namespace {

bool as_json = false;

std::string text(const std::string& s) { return s; }
std::string text(const Int& n) { return cytkit::to_string(n); }
std::string text(const Rat& r) { return cytkit::to_string(r); }

template <class V>
std::string join(const V& v, const char* sep = ",")
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? sep : "") << text(v[i]);
    return out.str();
}

template <class V>
json exact_array(const V& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(cytkit::to_string(x));
    return a;
}

json int_rows(const std::vector<IntVector>& rows)
{
    json a = json::array();
    for (const auto& r : rows)
        a.push_back(exact_array(r));
    return a;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Rat rat(const std::string& s) { return parse_rational(s); }

Int integer(const std::string& s)
{
    Rat r = parse_rational(s);
    if (!is_integer(r))
        throw DomainError("expected an integer, got '" + s + "'");
    return r.get_num();
}

// --- roots -------------------------------------------------------------------

struct RootsArgs {
    std::string series;
    int rank = 1;
    bool sum = false, coeffs = false;
};

void cmd_roots(const RootsArgs& a)
{
    auto s = rootsys::parse_series(a.series);
    rootsys::check_rank(s, a.rank);
    if (a.sum) {
        auto w = rootsys::sum_positive_roots(s, a.rank);
        auto c = rootsys::simple_root_coefficients(w, s, a.rank);
        if (as_json)
            emit({{"e", exact_array(w)}, {"simple_root_coefficients", exact_array(c)}});
        else
            std::cout << (a.coeffs ? join(c, " ") : join(w)) << "\n";
        return;
    }
    auto roots = rootsys::positive_roots(s, a.rank);
    json out = json::array();
    for (const auto& r : roots) {
        if (as_json)
            out.push_back(a.coeffs ? exact_array(rootsys::simple_root_coefficients(r, s, a.rank)) : exact_array(r));
        else
            std::cout << (a.coeffs ? join(rootsys::simple_root_coefficients(r, s, a.rank), " ") : join(r)) << "\n";
    }
    if (as_json)
        emit(out);
}

// --- koszul, c1 --------------------------------------------------------------

void cmd_koszul(const std::string& diagram)
{
    auto d = painted::PaintedDiagram::parse(diagram);
    auto sigma = painted::koszul_form(d);
    if (as_json)
        emit({{"diagram", d.to_string()},
              {"sigma", exact_array(sigma)},
              {"simple_root_coefficients", exact_array(painted::koszul_coefficients(d))}});
    else
        std::cout << join(sigma) << "\n";
}

void cmd_c1(const std::string& diagram, const std::string& blocks_text, std::optional<std::size_t> enumerate)
{
    auto d = painted::PaintedDiagram::parse(diagram);
    auto blocks = painted::BlockStructure::parse(blocks_text, d.series);
    auto m = painted::c1_condition_matrix(d, blocks);
    auto kernel = intlat::integer_kernel(m);
    json j = {{"diagram", d.to_string()},
              {"blocks", blocks.to_string()},
              {"matrix", int_rows(m.row_list())},
              {"koszul_row", exact_array(painted::koszul_row(d, blocks))},
              {"kernel_basis", int_rows(kernel)},
              {"kernel_rank", kernel.size()}};
    if (enumerate) {
        auto e = painted::enumerate_embeddings(d, blocks, *enumerate);
        j["torus_basis"] = int_rows(e.basis);
        j["c1_zero"] = painted::c1_vanishes(d, blocks, e.basis);
        j["real_dimension"] = painted::homogeneous_space_dimension(d, static_cast<int>(*enumerate));
    }
    if (as_json) {
        emit(j);
        return;
    }
    std::cout << "diagram: " << d.to_string() << "\nblocks: " << blocks.to_string() << "\nmatrix:\n";
    for (const auto& r : m.row_list())
        std::cout << "  [" << join(r) << "]\n";
    std::cout << "kernel basis (rank " << kernel.size() << "):\n";
    for (const auto& v : kernel)
        std::cout << "  [" << join(v) << "]\n";
    if (enumerate) {
        std::cout << "torus basis:\n";
        for (const auto& v : painted::enumerate_embeddings(d, blocks, *enumerate).basis)
            std::cout << "  [" << join(v) << "]\n";
        std::cout << "c1 = 0: " << yes_no(j["c1_zero"].get<bool>()) << "\nreal dimension: " << j["real_dimension"]
                  << "\n";
    }
}

// --- spectral sequence -------------------------------------------------------

void cmd_cohomology(const std::string& k, const std::string& l)
{
    auto r = json_io::cohomology_report(integer(k), integer(l));
    if (as_json) {
        emit(json_io::to_json(r));
        return;
    }
    std::cout << "weights: " << join(r.weights) << "\nM4 = " << r.polys.m4 << ", N6 = " << r.polys.n6
              << ", K8 = " << r.polys.k8 << ", L = " << r.L << "\n";
    for (int n = 0; n <= ssq::GradedAbelianGroup::top_degree; ++n)
        std::cout << "H^" << n << " = " << ssq::to_string(r.cohomology.groups[n]) << "\n";
    std::cout << "relations: ";
    for (std::size_t i = 0; i < r.relations.size(); ++i)
        std::cout << (i ? ", " : "") << r.relations[i];
    std::cout << "\n";
}

void cmd_scan(int k_max)
{
    auto rows = ssq::family_scan(k_max);
    json out = json::array();
    if (!as_json)
        std::cout << "k l M4 N6 K8 L |M4/L| eligible\n";
    for (const auto& r : rows) {
        if (as_json)
            out.push_back({{"k", cytkit::to_string(r.k)},
                           {"l", cytkit::to_string(r.l)},
                           {"M4", cytkit::to_string(r.polys.m4)},
                           {"N6", cytkit::to_string(r.polys.n6)},
                           {"K8", cytkit::to_string(r.polys.k8)},
                           {"L", cytkit::to_string(r.L)},
                           {"order", cytkit::to_string(r.order)},
                           {"eligible", r.eligible}});
        else
            std::cout << r.k << " " << r.l << " " << r.polys.m4 << " " << r.polys.n6 << " " << r.polys.k8 << " "
                      << r.L << " " << r.order << " " << yes_no(r.eligible) << "\n";
    }
    if (as_json)
        emit(out);
}

// --- Hermitian geometry ------------------------------------------------------

void cmd_cyt_su2su2(const std::string& a_text, const std::string& b_text)
{
    Rat a = rat(a_text), b = rat(b_text);
    bool region = ex::su2su2_cyt_region(a, b);
    json j = {{"a", cytkit::to_string(a)}, {"b", cytkit::to_string(b)}, {"admissible", region}};
    std::string reason;
    if (region) {
        auto g = ex::su2su2_cyt_metric(a, b);
        auto p = presentations::su2su2(a, b);
        bool checked = ex::cyt_equation_check(p, g, *p.complex_structure, ex::su2su2_sigma(p));
        if (!checked)
            throw InvariantViolation("constructed metric fails the CYT equation");
        j["metric"] = json_io::matrix(g.gram());
        j["cyt_check"] = checked;
    } else {
        try {
            ex::su2su2_cyt_metric(a, b);
        } catch (const DomainError& e) {
            reason = e.what();
        }
        j["reason"] = reason;
    }
    if (as_json) {
        emit(j);
        return;
    }
    std::cout << "admissible: " << (region ? "true" : "false");
    if (region) {
        std::cout << ", metric:\n";
        for (const auto& row : j["metric"])
            std::cout << "  [" << join(row.get<std::vector<std::string>>()) << "]\n";
        std::cout << "cyt check: passed\n";
    } else {
        std::cout << " (" << reason << ")\n";
    }
}

void cmd_cyt_su3(const std::string& la, const std::string& lb, const std::string& lab)
{
    auto r = ex::su3_cyt_family(rat(la), rat(lb), rat(lab));
    if (as_json)
        emit({{"cyt", r.cyt}, {"residual", exact_array(r.residual)}});
    else
        std::cout << "cyt: " << (r.cyt ? "true" : "false") << ", residual: " << join(r.residual) << "\n";
}

void cmd_verify_strominger(const std::string& path, const std::string& a_text, const std::string& b_text)
{
    auto p = json_io::load_presentation(path);
    if (p.dim() != 6)
        throw DomainError("verify-strominger needs a 6-dimensional presentation");
    if (!p.complex_structure || !p.metric)
        throw DomainError("presentation must carry J and a metric");
    const auto& j = *p.complex_structure;
    const auto& g = *p.metric;
    if (!ex::is_integrable(p, j))
        throw DomainError("J is not integrable");
    if (!ex::is_compatible(g, j))
        throw DomainError("metric is not compatible with J");
    Rat a = rat(a_text), b = rat(b_text);
    KForm f = p.kahler ? *p.kahler : ex::kahler_form(g, j);
    KForm f2 = wedge(f, f);
    bool balanced = ex::weak_codifferential(p, g, f).is_zero();
    bool df2 = ex::ext_d(p, f2).is_zero();
    bool omega_closed = ex::ext_d(p, ex::holomorphic_volume_form(j, {0, 2, 4})).is_zero();
    // connection a Je3 in the (e1, Je1) plane, instanton b e1^Je1^e2^Je2
    KForm tr_fa = b == 0 ? KForm(6, 4) : KForm::monomial(6, {0, 1, 2, 3}, b);
    auto rep = ex::strominger_anomaly_report(p, j, f, presentations::nil6_connection(a), tr_fa);
    const auto& names = p.names();
    json out = {{"a", cytkit::to_string(a)},
                {"b", cytkit::to_string(b)},
                {"d_squared_zero", true},
                {"balanced", balanced},
                {"F2", f2.to_string(names)},
                {"dF2_zero", df2},
                {"holomorphic_volume_closed", omega_closed},
                {"ddcF", rep.ddc_f.to_string(names)},
                {"trRR", rep.tr_rr.to_string(names)},
                {"trFA", rep.tr_fa.to_string(names)},
                {"solvable", rep.solvable}};
    if (rep.mu)
        out["mu"] = cytkit::to_string(*rep.mu);
    if (rep.alpha_prime)
        out["alpha_prime"] = cytkit::to_string(*rep.alpha_prime);
    if (!rep.reason.empty())
        out["reason"] = rep.reason;
    if (as_json) {
        emit(out);
        return;
    }
    std::cout << "d^2 = 0: yes\nbalanced: " << yes_no(balanced) << "\nF^2 = " << out["F2"].get<std::string>()
              << "\nd(F^2) = 0: " << yes_no(df2) << "\nholomorphic volume form closed: " << yes_no(omega_closed)
              << "\nddcF = " << out["ddcF"].get<std::string>() << "\ntrRR = " << out["trRR"].get<std::string>()
              << "\ntrFA = " << out["trFA"].get<std::string>() << "\n";
    if (rep.solvable)
        std::cout << "anomaly solvable: alpha' = " << *rep.alpha_prime << "\n";
    else
        std::cout << "anomaly not solvable: " << rep.reason << "\n";
}

// --- catalog -----------------------------------------------------------------

int cmd_catalog(const std::string& action, const std::string& name)
{
    if (action == "list") {
        json out = json::array();
        for (const auto& e : catalog::entries()) {
            if (as_json)
                out.push_back(json_io::to_json(e));
            else
                std::cout << e.name << " [" << catalog::to_string(e.kind) << "] " << e.description << " {"
                          << join(e.tags) << "}\n";
        }
        if (as_json)
            emit(out);
        return 0;
    }
    if (action != "check")
        throw DomainError("catalog action must be 'list' or 'check'");
    std::vector<const catalog::CatalogEntry*> targets;
    if (name.empty() || name == "all")
        for (const auto& e : catalog::entries())
            targets.push_back(&e);
    else
        targets.push_back(&catalog::find(name));
    bool all_ok = true;
    json out = json::array();
    for (const auto* e : targets) {
        auto r = catalog::check(*e);
        all_ok = all_ok && r.ok;
        if (as_json)
            out.push_back({{"name", e->name}, {"ok", r.ok}, {"tags", e->tags}, {"computed_tags", r.computed_tags},
                           {"notes", r.notes}});
        else {
            std::cout << (r.ok ? "ok   " : "FAIL ") << e->name << " {" << join(r.computed_tags) << "}\n";
            for (const auto& n : r.notes)
                std::cout << "     " << n << "\n";
        }
    }
    if (as_json)
        emit(targets.size() == 1 ? out[0] : out);
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cytkit: complex homogeneous spaces, CYT structures and SU(4)/U(1) cohomology"};
    app.require_subcommand(1);
    app.add_flag("--json", as_json, "Machine-readable output");

    RootsArgs roots;
    auto* roots_cmd = app.add_subcommand("roots", "Positive roots of a classical series");
    roots_cmd->add_option("series", roots.series, "A, B, C or D")->required();
    roots_cmd->add_option("rank", roots.rank, "Rank")->required();
    roots_cmd->add_flag("--sum", roots.sum, "Sum of the positive roots");
    roots_cmd->add_flag("--coeffs", roots.coeffs, "Simple-root coefficients instead of e-coordinates");

    std::string diagram, blocks;
    auto* koszul_cmd = app.add_subcommand("koszul", "Koszul form of a painted diagram, e.g. A10:1,2,6,9");
    koszul_cmd->add_option("diagram", diagram)->required();

    std::optional<std::size_t> enumerate;
    auto* c1_cmd = app.add_subcommand("c1", "First Chern class system for a diagram and block structure");
    c1_cmd->add_option("diagram", diagram)->required();
    c1_cmd->add_option("blocks", blocks, "e.g. 1,1,su4,su3,su2")->required();
    c1_cmd->add_option("--enumerate", enumerate, "Torus dimension to enumerate embeddings for");

    std::string k, l;
    auto* coh_cmd = app.add_subcommand("cohomology", "Integral cohomology of SU(4)/U(1) with weights (k, l)");
    coh_cmd->add_option("k", k)->required();
    coh_cmd->add_option("l", l)->required();

    int k_max = 30;
    auto* scan_cmd = app.add_subcommand("scan", "Scan l = 1, k = 1..k_max");
    scan_cmd->add_option("k_max", k_max)->required()->check(CLI::PositiveNumber);

    std::string a, b, c;
    auto* su2_cmd = app.add_subcommand("cyt-su2su2", "CYT admissibility of the SU(2) x SU(2) structure (a, b)");
    su2_cmd->add_option("a", a)->required();
    su2_cmd->add_option("b", b)->required();

    auto* su3_cmd = app.add_subcommand("cyt-su3", "Bismut-Ricci residual of the SU(3) metric family");
    su3_cmd->add_option("l_alpha", a)->required();
    su3_cmd->add_option("l_beta", b)->required();
    su3_cmd->add_option("l_alpha_beta", c)->required();

    std::string file, conn_a = "1", inst_b = "0";
    auto* strom_cmd = app.add_subcommand("verify-strominger", "Balanced, holomorphic volume and anomaly checks");
    strom_cmd->add_option("presentation", file, "Presentation JSON file")->required();
    strom_cmd->add_option("--a", conn_a, "Connection scale");
    strom_cmd->add_option("--b", inst_b, "Instanton term coefficient");

    std::string action, name;
    auto* cat_cmd = app.add_subcommand("catalog", "List or check catalog entries");
    cat_cmd->add_option("action", action, "list or check")->required();
    cat_cmd->add_option("name", name, "Entry name (check; default all)");

    for (auto* sub : app.get_subcommands({}))
        sub->add_flag("--json", as_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*roots_cmd)
            cmd_roots(roots);
        else if (*koszul_cmd)
            cmd_koszul(diagram);
        else if (*c1_cmd)
            cmd_c1(diagram, blocks, enumerate);
        else if (*coh_cmd)
            cmd_cohomology(k, l);
        else if (*scan_cmd)
            cmd_scan(k_max);
        else if (*su2_cmd)
            cmd_cyt_su2su2(a, b);
        else if (*su3_cmd)
            cmd_cyt_su3(a, b, c);
        else if (*strom_cmd)
            cmd_verify_strominger(file, conn_a, inst_b);
        else if (*cat_cmd)
            return cmd_catalog(action, name);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
