#include "cytkit/rootsys.hpp"

#include "cytkit/errors.hpp"

namespace cytkit::rootsys {

char series_letter(Series s)
{
    switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    }
    return '?';
}

Series parse_series(const std::string& text)
{
    if (text == "A" || text == "a") return Series::A;
    if (text == "B" || text == "b") return Series::B;
    if (text == "C" || text == "c") return Series::C;
    if (text == "D" || text == "d") return Series::D;
    throw DomainError("unknown series '" + text + "' (expected A, B, C or D)");
}

int min_rank(Series s)
{
    switch (s) {
    case Series::A: return 1;
    case Series::B: return 2;
    case Series::C: return 2;
    case Series::D: return 3;
    }
    return 1;
}

void check_rank(Series s, int rank)
{
    if (rank < min_rank(s))
        throw DomainError(std::string("rank ") + std::to_string(rank) + " out of bounds for series " +
                          series_letter(s) + " (minimum " + std::to_string(min_rank(s)) + ")");
}

std::size_t ambient_dim(Series s, int rank)
{
    return s == Series::A ? static_cast<std::size_t>(rank + 1) : static_cast<std::size_t>(rank);
}

namespace {

Weight unit(std::size_t n, std::size_t i, int c = 1)
{
    Weight w(n);
    w[i] = c;
    return w;
}

Weight e_diff(std::size_t n, std::size_t i, std::size_t j)
{
    Weight w(n);
    w[i] = 1;
    w[j] = -1;
    return w;
}

Weight e_sum(std::size_t n, std::size_t i, std::size_t j)
{
    Weight w(n);
    w[i] = 1;
    w[j] = 1;
    return w;
}

}  // namespace

namespace detail {

std::vector<Weight> simple_roots_unchecked(Series s, int rank)
{
    const std::size_t n = ambient_dim(s, rank);
    std::vector<Weight> roots;
    if (s == Series::A) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            roots.push_back(e_diff(n, i, i + 1));
        return roots;
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        roots.push_back(e_diff(n, i, i + 1));
    switch (s) {
    case Series::B: roots.push_back(unit(n, n - 1)); break;
    case Series::C: roots.push_back(unit(n, n - 1, 2)); break;
    case Series::D:
        if (n < 2)
            throw DomainError("D series needs rank at least 2");
        roots.push_back(e_sum(n, n - 2, n - 1));
        break;
    default: break;
    }
    return roots;
}

std::vector<Weight> positive_roots_unchecked(Series s, int rank)
{
    const std::size_t n = ambient_dim(s, rank);
    std::vector<Weight> roots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            roots.push_back(e_diff(n, i, j));
            if (s != Series::A)
                roots.push_back(e_sum(n, i, j));
        }
    if (s == Series::B)
        for (std::size_t i = 0; i < n; ++i)
            roots.push_back(unit(n, i));
    if (s == Series::C)
        for (std::size_t i = 0; i < n; ++i)
            roots.push_back(unit(n, i, 2));
    return roots;
}

RatVector sum_coefficients_unchecked(Series s, int rank)
{
    const std::size_t n = ambient_dim(s, rank);
    Weight sum(n);
    for (const auto& r : positive_roots_unchecked(s, rank))
        for (std::size_t i = 0; i < n; ++i)
            sum[i] += r[i];
    auto simple = simple_roots_unchecked(s, rank);
    RatMatrix basis(n, simple.size());
    for (std::size_t j = 0; j < simple.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            basis(i, j) = simple[j][i];
    auto c = solve_least(basis, sum);
    if (!c)
        throw InvariantViolation("sum of positive roots outside the root span");
    return *c;
}

}  // namespace detail

std::vector<Weight> simple_roots(Series s, int rank)
{
    check_rank(s, rank);
    return detail::simple_roots_unchecked(s, rank);
}

std::vector<Weight> positive_roots(Series s, int rank)
{
    check_rank(s, rank);
    return detail::positive_roots_unchecked(s, rank);
}

Weight sum_positive_roots(Series s, int rank)
{
    check_rank(s, rank);
    Weight sum(ambient_dim(s, rank));
    for (const auto& r : detail::positive_roots_unchecked(s, rank))
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += r[i];
    return sum;
}

RatVector simple_root_coefficients(const Weight& w, Series s, int rank)
{
    check_rank(s, rank);
    const std::size_t n = ambient_dim(s, rank);
    if (w.size() != n)
        throw DomainError("weight has " + std::to_string(w.size()) + " coordinates, expected " +
                          std::to_string(n));
    auto simple = detail::simple_roots_unchecked(s, rank);
    RatMatrix basis(n, simple.size());
    for (std::size_t j = 0; j < simple.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            basis(i, j) = simple[j][i];
    auto c = solve_least(basis, w);
    if (!c)
        throw DomainError("weight (" + join(w) + ") is not in the span of the simple roots");
    return *c;
}

Weight from_simple_root_coefficients(const RatVector& c, Series s, int rank)
{
    check_rank(s, rank);
    auto simple = detail::simple_roots_unchecked(s, rank);
    if (c.size() != simple.size())
        throw DomainError("coefficient vector length does not match rank");
    Weight w(ambient_dim(s, rank));
    for (std::size_t j = 0; j < simple.size(); ++j)
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] += c[j] * simple[j][i];
    return w;
}

Rat coroot_pairing(const Weight& w, const Weight& alpha)
{
    return 2 * dot(w, alpha) / dot(alpha, alpha);
}

CartanMatrix cartan_matrix(Series s, int rank)
{
    auto simple = simple_roots(s, rank);
    CartanMatrix m;
    m.entries.assign(simple.size(), std::vector<Int>(simple.size()));
    for (std::size_t i = 0; i < simple.size(); ++i)
        for (std::size_t j = 0; j < simple.size(); ++j) {
            Rat a = coroot_pairing(simple[i], simple[j]);
            if (!is_integer(a))
                throw InvariantViolation("non-integral Cartan entry");
            m.entries[i][j] = a.get_num();
        }
    return m;
}

Weight fundamental_weight(Series s, int rank, int k)
{
    check_rank(s, rank);
    if (k < 1 || k > rank)
        throw DomainError("fundamental weight index " + std::to_string(k) + " out of range 1.." +
                          std::to_string(rank));
    // With M_mj = <alpha_m, alpha_j^vee>, omega_k = sum_m (M^{-1})_{km} alpha_m.
    auto cm = cartan_matrix(s, rank);
    RatMatrix m(cm.size(), cm.size());
    for (std::size_t i = 0; i < cm.size(); ++i)
        for (std::size_t j = 0; j < cm.size(); ++j)
            m(i, j) = cm.entries[i][j];
    auto inv = inverse(m);
    if (!inv)
        throw InvariantViolation("singular Cartan matrix");
    RatVector c(cm.size());
    for (std::size_t j = 0; j < cm.size(); ++j)
        c[j] = (*inv)(static_cast<std::size_t>(k - 1), j);
    return from_simple_root_coefficients(c, s, rank);
}

}  // namespace cytkit::rootsys
