#pragma once

#include <stdexcept>
#include <string>

#include "grade3/poly.hpp"

namespace grade3 {

/// Homogeneous element of the graded dual (divided-power) algebra, written in
/// the dual monomial basis X, Y, Z. Contraction by the polynomial ring acts by
/// exponent subtraction, which keeps every computation characteristic-free.
class DualForm {
public:
    DualForm(u32 p, int degree) : p_(p), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("DualForm: negative degree");
    }

    static DualForm zero(u32 p, int degree) { return DualForm(p, degree); }
    static DualForm term(u32 p, const Monomial& m, u32 c) {
        DualForm f(p, m.degree());
        if (c % p != 0) f.terms_.emplace(m, c % p);
        return f;
    }
    static DualForm parse(u32 p, std::string_view s) {
        auto [t, prime] = detail::parse_terms(s, p);
        if (t.empty()) throw std::invalid_argument("DualForm::parse: zero form has no degree");
        int deg = t.begin()->first.degree();
        DualForm f(prime, deg);
        for (const auto& [m, c] : t)
            if (m.degree() != deg)
                throw std::invalid_argument("DualForm::parse: non-homogeneous input");
        f.terms_ = std::move(t);
        return f;
    }

    u32 prime() const { return p_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const detail::TermMap& terms() const { return terms_; }
    u32 coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    DualForm operator+(const DualForm& o) const {
        require_same_prime(p_, o.p_, "DualForm::+");
        if (degree_ != o.degree_) throw std::invalid_argument("DualForm::+: degree mismatch");
        DualForm r = *this;
        for (const auto& [m, c] : o.terms_) detail::term_add(r.terms_, m, c, p_);
        return r;
    }
    DualForm operator-() const {
        DualForm r(p_, degree_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, fp_neg(c, p_));
        return r;
    }
    DualForm operator-(const DualForm& o) const { return *this + (-o); }
    DualForm scaled(u32 c) const {
        DualForm r(p_, degree_);
        if (c % p_ == 0) return r;
        for (const auto& [m, cc] : terms_) r.terms_.emplace(m, fp_mul(cc, c % p_, p_));
        return r;
    }

    void add_term(const Monomial& m, u32 c) {
        if (m.degree() != degree_) throw std::invalid_argument("DualForm::add_term: wrong degree");
        detail::term_add(terms_, m, c, p_);
    }

    bool operator==(const DualForm& o) const {
        return p_ == o.p_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const DualForm& o) const { return !(*this == o); }

    std::string str() const { return detail::terms_str(terms_, p_, true); }

private:
    u32 p_;
    int degree_;
    detail::TermMap terms_;
};

/// Contraction action of a homogeneous polynomial on a dual form: on basis
/// elements, x^a acts on X^b as X^(b-a) when b >= a componentwise and kills it
/// otherwise. Bilinear in both arguments.
inline DualForm contract(const Poly& f, const DualForm& phi) {
    require_same_prime(f.prime(), phi.prime(), "contract");
    if (!f.is_homogeneous()) throw std::invalid_argument("contract: polynomial not homogeneous");
    int i = f.is_zero() ? 0 : f.degree();
    if (i > phi.degree()) throw std::invalid_argument("contract: degree of f exceeds degree of form");
    u32 p = f.prime();
    DualForm out(p, phi.degree() - i);
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mp, cp] : phi.terms()) {
            if (mf.divides(mp)) out.add_term(mf.quotient_of(mp), fp_mul(cf, cp, p));
        }
    }
    return out;
}

}  // namespace grade3
