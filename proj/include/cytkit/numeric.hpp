#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cytkit {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rat parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int gcd(const Int& a, const Int& b);
Int gcd_of(const IntVector& v);

std::string join(const RatVector& v, const std::string& sep = ",");
std::string join(const IntVector& v, const std::string& sep = ",");

}  // namespace cytkit
