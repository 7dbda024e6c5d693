#include "cytkit/kform.hpp"

#include "cytkit/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cytkit {

namespace {

// Sign of moving the monomial b past a: (-1)^{#(i in a, j in b, i > j)}.
int merge_sign(KForm::Mask a, KForm::Mask b)
{
    int swaps = 0;
    while (b) {
        int j = std::countr_zero(b);
        b &= b - 1;
        swaps += std::popcount(a >> (j + 1));
    }
    return swaps % 2 ? -1 : 1;
}

}  // namespace

std::vector<std::size_t> mask_indices(KForm::Mask m)
{
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

KForm::KForm(std::size_t dim, int degree) : dim_(dim), degree_(degree)
{
    if (dim > max_dim)
        throw DomainError("forms support at most " + std::to_string(max_dim) + " basis 1-forms");
    if (degree < 0)
        throw DomainError("negative form degree");
}

KForm KForm::basis(std::size_t dim, std::size_t i) { return monomial(dim, {i}); }

KForm KForm::monomial(std::size_t dim, std::vector<std::size_t> idx, const Rat& c)
{
    KForm f(dim, static_cast<int>(idx.size()));
    Mask m = 0;
    int sign = 1;
    for (auto i : idx) {
        if (i >= dim)
            throw DomainError("basis index " + std::to_string(i) + " out of range");
        Mask bit = Mask{1} << i;
        if (m & bit)
            return f;
        sign *= merge_sign(m, bit);
        m |= bit;
    }
    f.add_term(m, sign * c);
    return f;
}

KForm KForm::from_terms(std::size_t dim, int degree, const std::map<Mask, Rat>& terms)
{
    KForm f(dim, degree);
    for (const auto& [m, c] : terms) {
        if (std::popcount(m) != degree)
            throw DomainError("monomial degree does not match form degree");
        f.add_term(m, c);
    }
    return f;
}

Rat KForm::coeff(Mask m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat KForm::coeff(std::vector<std::size_t> idx) const
{
    auto mono = monomial(dim_, std::move(idx));
    if (mono.is_zero())
        return 0;
    const auto& [m, sign] = *mono.terms_.begin();
    return sign * coeff(m);
}

void KForm::add_term(Mask m, const Rat& c)
{
    if (c == 0)
        return;
    if (m >> dim_)
        throw DomainError("monomial index out of range");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void KForm::check_compatible(const KForm& o) const
{
    if (dim_ != o.dim_)
        throw DomainError("forms belong to different presentations");
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw DomainError("adding forms of degree " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
}

KForm& KForm::operator+=(const KForm& o)
{
    check_compatible(o);
    if (is_zero())
        degree_ = o.degree_;
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

KForm KForm::operator+(const KForm& o) const
{
    KForm r = *this;
    r += o;
    return r;
}

KForm KForm::operator-() const { return *this * Rat(-1); }

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::operator*(const Rat& s) const
{
    KForm r(dim_, degree_);
    if (s == 0)
        return r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, c * s);
    return r;
}

bool KForm::operator==(const KForm& o) const
{
    if (dim_ != o.dim_)
        return false;
    if (is_zero() || o.is_zero())
        return is_zero() && o.is_zero();
    return degree_ == o.degree_ && terms_ == o.terms_;
}

std::optional<Rat> KForm::ratio_to(const KForm& o) const
{
    if (o.is_zero())
        throw DomainError("ratio to the zero form");
    if (is_zero())
        return Rat(0);
    if (degree_ != o.degree_ || terms_.size() != o.terms_.size())
        return std::nullopt;
    const auto& [m0, c0] = *o.terms_.begin();
    Rat mu = coeff(m0) / c0;
    if (!(*this == o * mu))
        return std::nullopt;
    return mu;
}

std::string KForm::to_string(const std::vector<std::string>& names) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || m == 0)
            os << cytkit::to_string(mag) << (m == 0 ? "" : "*");
        auto idx = mask_indices(m);
        for (std::size_t k = 0; k < idx.size(); ++k)
            os << (k ? "^" : "") << (idx[k] < names.size() ? names[idx[k]] : "x" + std::to_string(idx[k]));
    }
    return os.str();
}

KForm wedge(const KForm& u, const KForm& v)
{
    if (u.dim() != v.dim())
        throw DomainError("wedge of forms from different presentations");
    KForm r(u.dim(), u.degree() + v.degree());
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            if (a & b)
                continue;
            r.add_term(a | b, merge_sign(a, b) * ca * cb);
        }
    return r;
}

KForm substitute(const KForm& u, const RatMatrix& m)
{
    if (m.rows() != u.dim() || m.cols() != u.dim())
        throw DomainError("substitution matrix does not match the basis size");
    std::vector<KForm> images;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        KForm img(u.dim(), 1);
        for (std::size_t j = 0; j < u.dim(); ++j)
            img.add_term(KForm::Mask{1} << j, m(i, j));
        images.push_back(img);
    }
    KForm r(u.dim(), u.degree());
    for (const auto& [mask, c] : u.terms()) {
        KForm prod = KForm::monomial(u.dim(), {}, c);
        for (auto i : mask_indices(mask))
            prod = wedge(prod, images[i]);
        r += prod;
    }
    return r;
}

ComplexForm wedge(const ComplexForm& u, const ComplexForm& v)
{
    return {wedge(u.re, v.re) - wedge(u.im, v.im), wedge(u.re, v.im) + wedge(u.im, v.re)};
}

}  // namespace cytkit
