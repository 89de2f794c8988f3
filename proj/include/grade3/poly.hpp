#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "grade3/gf.hpp"
#include "grade3/monomial.hpp"

namespace grade3 {

namespace detail {

/// Shared sparse-term container for polynomials and dual forms. Terms are kept
/// in decreasing grevlex order and never store a zero coefficient.
using TermMap = std::map<Monomial, u32, GrevlexDesc>;

inline void term_add(TermMap& t, const Monomial& m, u32 c, u32 p) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(m, c);
    if (!fresh) {
        it->second = fp_add(it->second, c, p);
        if (it->second == 0) t.erase(it);
    }
}

std::pair<TermMap, u32> parse_terms(std::string_view s, u32 p);
std::string terms_str(const TermMap& t, u32 p, bool dual);

}  // namespace detail

/// Sparse polynomial over GF(p) in x, y, z. Values are immutable after
/// construction; all operations return new polynomials.
class Poly {
public:
    explicit Poly(u32 p) : p_(p) {}

    static Poly zero(u32 p) { return Poly(p); }
    static Poly constant(u32 p, long long v) { return term(p, Monomial::one(), fp_from_ll(v, p)); }
    static Poly term(u32 p, const Monomial& m, u32 c) {
        Poly f(p);
        if (c % p != 0) f.terms_.emplace(m, c % p);
        return f;
    }
    static Poly variable(u32 p, int i) { return term(p, Monomial::var(i), 1); }
    static Poly parse(u32 p, std::string_view s) {
        auto [t, prime] = detail::parse_terms(s, p);
        Poly f(prime);
        f.terms_ = std::move(t);
        return f;
    }

    u32 prime() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const detail::TermMap& terms() const { return terms_; }

    u32 coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }
    u32 constant_coeff() const { return coeff(Monomial::one()); }

    /// Maximal total degree of a term; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : degree_span().second; }

    bool is_homogeneous() const {
        auto [lo, hi] = degree_span();
        return terms_.empty() || lo == hi;
    }

    /// Leading monomial in grevlex order; throws on zero.
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("leading_monomial of zero polynomial");
        return terms_.begin()->first;
    }

    Poly operator+(const Poly& o) const {
        require_same_prime(p_, o.p_, "Poly::+");
        Poly r = *this;
        for (const auto& [m, c] : o.terms_) detail::term_add(r.terms_, m, c, p_);
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator-() const {
        Poly r(p_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, fp_neg(c, p_));
        return r;
    }
    Poly operator*(const Poly& o) const {
        require_same_prime(p_, o.p_, "Poly::*");
        Poly r(p_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                detail::term_add(r.terms_, ma * mb, fp_mul(ca, cb, p_), p_);
        return r;
    }
    Poly scaled(u32 c) const {
        Poly r(p_);
        if (c % p_ == 0) return r;
        for (const auto& [m, cc] : terms_) r.terms_.emplace(m, fp_mul(cc, c % p_, p_));
        return r;
    }
    Poly shifted(const Monomial& m) const {
        Poly r(p_);
        for (const auto& [mm, c] : terms_) r.terms_.emplace(m * mm, c);
        return r;
    }

    bool operator==(const Poly& o) const { return p_ == o.p_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const { return detail::terms_str(terms_, p_, false); }

private:
    std::pair<int, int> degree_span() const {
        int lo = 1 << 30, hi = -1;
        for (const auto& [m, c] : terms_) {
            int d = m.degree();
            lo = d < lo ? d : lo;
            hi = d > hi ? d : hi;
        }
        return {lo, hi};
    }

    u32 p_;
    detail::TermMap terms_;
};

inline Poly operator*(u32 c, const Poly& f) { return f.scaled(c); }

namespace detail {

inline std::string fp_coeff_str(u32 c, u32 p, bool& negative) {
    // Symmetric representative: residues above p/2 print as negatives.
    negative = c > p / 2;
    return std::to_string(negative ? p - c : c);
}

inline std::string terms_str(const TermMap& t, u32 p, bool dual) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : t) {
        bool neg = false;
        std::string cs = fp_coeff_str(c, p, neg);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (m == Monomial::one()) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += monomial_str(m, dual);
        }
    }
    return out;
}

/// Grammar: sum of signed terms `c*x^a*y^b*z^c`; `*` and `^1` optional, any
/// term order, upper- or lowercase variables. Round-trips with terms_str.
inline std::pair<TermMap, u32> parse_terms(std::string_view s, u32 p) {
    TermMap t;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    };
    auto var_index = [](char c) -> int {
        switch (c) {
            case 'x': case 'X': return 0;
            case 'y': case 'Y': return 1;
            case 'z': case 'Z': return 2;
            default: return -1;
        }
    };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("parse: empty polynomial string");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == s.size()) break;
        long long sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        if (i == s.size()) throw std::invalid_argument("parse: dangling sign");
        long long coeff = 1;
        bool saw_number = false, saw_var = false;
        Monomial m;
        while (i < s.size()) {
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i == s.size()) break;
            char c = s[i];
            if (std::isdigit((unsigned char)c)) {
                if (saw_number && !saw_var)
                    throw std::invalid_argument("parse: two coefficients in one term");
                long long v = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                    v = v * 10 + (s[i] - '0');
                    if (v > (1LL << 55)) v %= p;
                    ++i;
                }
                coeff = (coeff % p) * (v % p);
                saw_number = true;
            } else if (int vi = var_index(c); vi >= 0) {
                ++i;
                long long e = 1;
                skip_ws();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    skip_ws();
                    if (i == s.size() || !std::isdigit((unsigned char)s[i]))
                        throw std::invalid_argument("parse: missing exponent");
                    e = 0;
                    while (i < s.size() && std::isdigit((unsigned char)s[i]))
                        e = e * 10 + (s[i++] - '0');
                    if (e > 10000) throw std::invalid_argument("parse: exponent too large");
                }
                m.e[vi] += int(e);
                saw_var = true;
            } else if (c == '+' || c == '-') {
                break;
            } else {
                throw std::invalid_argument(std::string("parse: unexpected character '") + c +
                                            "'");
            }
        }
        if (!saw_number && !saw_var) throw std::invalid_argument("parse: empty term");
        term_add(t, m, fp_from_ll(sign * (coeff % p), p), p);
        any = true;
    }
    if (!any) throw std::invalid_argument("parse: no terms");
    return {std::move(t), p};
}

}  // namespace detail

}  // namespace grade3
