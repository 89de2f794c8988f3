#pragma once

#include <string>

#include <json.hpp>

#include "grade3/graded_ideal.hpp"
#include "grade3/koszul.hpp"
#include "grade3/tor_algebra.hpp"
#include "grade3/trim_resolution.hpp"

namespace grade3 {

using ordered_json = nlohmann::ordered_json;

inline ordered_json alt_matrix_to_json(const AltMatrix& m) {
    ordered_json j;
    j["prime"] = m.prime();
    j["size"] = m.size();
    ordered_json entries = ordered_json::array();
    for (int a = 0; a < m.size(); ++a)
        for (int b = a + 1; b < m.size(); ++b) {
            Poly e = m.entry(a, b);
            if (e.is_zero()) continue;
            entries.push_back({{"i", a + 1}, {"j", b + 1}, {"poly", e.str()}});
        }
    j["entries"] = std::move(entries);
    return j;
}

/// Reads the matrix dump format. Entries may appear on either side of the
/// diagonal; the reader enforces the alternating structure: zero diagonal and
/// consistency of any redundant (j, i) entries with -(i, j).
inline AltMatrix alt_matrix_from_json(const ordered_json& j) {
    if (!j.contains("size") || !j.contains("entries"))
        throw std::invalid_argument("alt matrix json: missing size/entries");
    u32 p = j.value("prime", kDefaultPrime);
    int n = j.at("size").get<int>();
    AltMatrix m(PrimeField(p).p, n);
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const auto& e : j.at("entries")) {
        int a = e.at("i").get<int>() - 1;
        int b = e.at("j").get<int>() - 1;
        Poly f = Poly::parse(p, e.at("poly").get<std::string>());
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("alt matrix json: index out of range");
        if (a == b) {
            if (!f.is_zero())
                throw std::invalid_argument("alt matrix json: nonzero diagonal entry");
            continue;
        }
        int lo = std::min(a, b), hi = std::max(a, b);
        Poly upper = a < b ? f : -f;
        if (seen[lo][hi]) {
            if (m.entry(lo, hi) != upper)
                throw std::invalid_argument("alt matrix json: entries violate skew symmetry");
        } else {
            m.set_upper(lo, hi, upper);
            seen[lo][hi] = true;
        }
    }
    return m;
}

inline ordered_json ideal_to_json(const GradedIdeal& I) {
    ordered_json j;
    j["prime"] = I.prime();
    ordered_json gens = ordered_json::array();
    for (const auto& g : I.gens()) gens.push_back(g.str());
    j["gens"] = std::move(gens);
    return j;
}

/// Accepts either a bare list of polynomial strings (prime taken from the
/// caller's context) or the object form {"prime": p, "gens": [...]}.
inline GradedIdeal ideal_from_json(const ordered_json& j, u32 default_prime = kDefaultPrime) {
    const ordered_json& gens_json = j.is_array() ? j : j.at("gens");
    u32 p = j.is_array() ? default_prime : j.value("prime", default_prime);
    std::vector<Poly> gens;
    for (const auto& g : gens_json) gens.push_back(Poly::parse(p, g.get<std::string>()));
    return GradedIdeal(PrimeField(p).p, std::move(gens));
}

inline ordered_json hilbert_to_json(const HilbertData& h) {
    ordered_json j;
    j["hf"] = h.hf;
    j["socle"] = h.socle;
    j["artinian"] = h.artinian;
    j["top_degree"] = h.top_degree;
    return j;
}

inline ordered_json betti_to_json(const BettiTable& b) {
    ordered_json entries = ordered_json::array();
    for (const auto& [ij, v] : b.entries)
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
    ordered_json j;
    j["entries"] = std::move(entries);
    return j;
}

inline BettiTable betti_from_json(const ordered_json& j) {
    BettiTable b;
    for (const auto& e : j.at("entries"))
        b.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<long long>());
    return b;
}

inline ordered_json tor_invariants_to_json(const TorInvariants& inv) {
    ordered_json j;
    j["mu"] = inv.mu;
    j["type"] = inv.type;
    j["p"] = inv.p;
    j["q"] = inv.q;
    j["r"] = inv.r;
    j["class"] = inv.label();
    return j;
}

inline ordered_json poly_matrix_to_json(const PolyMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json trim_complex_to_json(const TrimComplex& C, const ExactnessReport* rep) {
    ordered_json j;
    j["prime"] = C.prime();
    j["size"] = C.n_size;
    j["trim_index"] = C.input.v0_index;
    j["socle_degree"] = C.socle_degree;
    j["matrix"] = alt_matrix_to_json(C.input.M);
    j["shifts"] = {{"F0", C.F0.shifts}, {"F1", C.F1.shifts}, {"F2", C.F2.shifts},
                   {"F3", C.F3.shifts}};
    j["d1"] = poly_matrix_to_json(C.d1);
    j["d2"] = poly_matrix_to_json(C.d2);
    j["d3"] = poly_matrix_to_json(C.d3);
    j["q"] = poly_matrix_to_json(C.q);
    j["B"] = {C.B[0].str(), C.B[1].str(), C.B[2].str()};
    j["minimal"] = is_minimal(C);
    j["predicted_mu"] = predicted_mu(C);
    if (rep) {
        j["verification"] = {{"dmax", rep->dmax},
                             {"complex", rep->complex_ok},
                             {"exact", rep->exact},
                             {"hilbert_match", rep->hilbert_ok},
                             {"failures", rep->failures}};
    }
    return j;
}

}  // namespace grade3
