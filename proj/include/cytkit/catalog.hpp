#pragma once
// Example catalog: torus-bundle quotients of classical groups, complex
// parallelizable algebras and the dimension-3 classification cases, each with
// tags that check() recomputes from scratch.

#include <string>
#include <vector>

namespace cytkit::catalog {

enum class Kind { Quotient, Parallelizable, Classification };

struct CatalogEntry {
    std::string name;
    Kind kind = Kind::Quotient;
    std::string description;
    /// Quotient: "<diagram> blocks=<blocks> torus=<none|v;v|enumerate:k>".
    /// Parallelizable: presentation name. Classification: case label.
    std::string construction;
    std::vector<std::string> tags;  ///< sorted
};

const std::vector<CatalogEntry>& entries();
/// DomainError for an unknown name.
const CatalogEntry& find(const std::string& name);
std::string to_string(Kind k);

struct CheckResult {
    bool ok = false;
    std::vector<std::string> computed_tags;  ///< sorted
    std::vector<std::string> notes;
};

/// Recomputes the entry's tags from its construction data.
CheckResult check(const CatalogEntry& e);

}  // namespace cytkit::catalog
