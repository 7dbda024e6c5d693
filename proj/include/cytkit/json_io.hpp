#pragma once
// JSON forms of presentations, spectral-sequence reports and catalog entries.
// Rationals and integers are written as exact strings ("p" or "p/q").

#include "cytkit/catalog.hpp"
#include "cytkit/exforms.hpp"
#include "cytkit/ssq.hpp"

#include <json.hpp>

#include <array>
#include <string>

namespace cytkit::json_io {

using json = nlohmann::json;

/// {basis: [names], d: {name: [[coeff, i, j], ...]}, J?: matrix, metric?: matrix,
///  kahler?: [[coeff, i, j], ...]}; indices are 0-based positions in basis.
json to_json(const exforms::LiePresentation& p);
/// DomainError on malformed input or if d does not square to zero.
exforms::LiePresentation presentation_from_json(const json& j);
exforms::LiePresentation load_presentation(const std::string& path);
void save_presentation(const std::string& path, const exforms::LiePresentation& p);
bool same_presentation(const exforms::LiePresentation& a, const exforms::LiePresentation& b);

json rational(const Rat& r);
Rat parse_rational_json(const json& j);
json matrix(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);
json form(const KForm& f);
KForm form_from_json(const json& j, std::size_t dim, int degree);

/// Report for the SU(4)/U(1) family member (k, l):
/// {weights, M4, N6, K8, L, eligible, cohomology: {deg: {rank, torsion}}, relations}.
struct CohomologyReport {
    std::array<Int, 4> weights;
    ssq::RestrictionPolys polys;
    Int L;
    bool eligible = false;
    ssq::GradedAbelianGroup cohomology;
    std::vector<std::string> relations;

    bool operator==(const CohomologyReport& o) const;
};

CohomologyReport cohomology_report(const Int& k, const Int& l);
json to_json(const CohomologyReport& r);
CohomologyReport cohomology_report_from_json(const json& j);

json to_json(const catalog::CatalogEntry& e);
catalog::CatalogEntry catalog_entry_from_json(const json& j);

}  // namespace cytkit::json_io
