#include "cytkit/numeric.hpp"

#include "cytkit/errors.hpp"

#include <cctype>
#include <sstream>

namespace cytkit {

Rat parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw DomainError("empty rational literal");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+')
            t.erase(0, 1);
        return t;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s))
            throw DomainError("not a rational: '" + text + "'");
        return Rat(Int(strip_plus(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw DomainError("not a rational: '" + text + "'");
    Int d(strip_plus(den));
    if (d == 0)
        throw DomainError("zero denominator in '" + text + "'");
    Rat r(Int(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int gcd_of(const IntVector& v)
{
    Int g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return g;
}

template <class V>
static std::string join_impl(const V& v, const std::string& sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << to_string(v[i]);
    }
    return os.str();
}

std::string join(const RatVector& v, const std::string& sep) { return join_impl(v, sep); }
std::string join(const IntVector& v, const std::string& sep) { return join_impl(v, sep); }

}  // namespace cytkit
