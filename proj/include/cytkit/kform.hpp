#pragma once

// Exterior forms with exact rational coefficients over a fixed basis of
// 1-forms xi^0 .. xi^{n-1}. A monomial xi^{i1} ^ ... ^ xi^{ik} (i1 < ... < ik)
// is stored as the bitmask of its indices.

#include "cytkit/linalg.hpp"
#include "cytkit/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cytkit {

class KForm {
public:
    using Mask = std::uint32_t;
    static constexpr std::size_t max_dim = 31;

    KForm() = default;
    KForm(std::size_t dim, int degree);

    /// xi^i
    static KForm basis(std::size_t dim, std::size_t i);
    /// c * xi^{idx[0]} ^ xi^{idx[1]} ^ ...; indices in any order, repeated indices give 0.
    static KForm monomial(std::size_t dim, std::vector<std::size_t> idx, const Rat& c = 1);
    static KForm from_terms(std::size_t dim, int degree, const std::map<Mask, Rat>& terms);

    std::size_t dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<Mask, Rat>& terms() const { return terms_; }
    Rat coeff(Mask m) const;
    Rat coeff(std::vector<std::size_t> idx) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(Mask m, const Rat& c);

    KForm operator+(const KForm& o) const;
    KForm operator-(const KForm& o) const;
    KForm operator-() const;
    KForm operator*(const Rat& s) const;
    KForm& operator+=(const KForm& o);
    bool operator==(const KForm& o) const;

    /// Rational mu with *this == mu * o, if one exists (o must be nonzero).
    std::optional<Rat> ratio_to(const KForm& o) const;

    /// Text such as "4*e1^Je1^e2^Je2 - 2*e3^Je3"; "0" for the zero form.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check_compatible(const KForm& o) const;

    std::size_t dim_ = 0;
    int degree_ = 0;
    std::map<Mask, Rat> terms_;
};

inline KForm operator*(const Rat& s, const KForm& f) { return f * s; }

/// Graded-commutative product.
KForm wedge(const KForm& u, const KForm& v);

/// Linear substitution xi^i -> sum_j m(i, j) xi^j applied to every slot.
KForm substitute(const KForm& u, const RatMatrix& m);

std::vector<std::size_t> mask_indices(KForm::Mask m);

/// Complex-valued form re + i im.
struct ComplexForm {
    KForm re, im;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

ComplexForm wedge(const ComplexForm& u, const ComplexForm& v);

}  // namespace cytkit
