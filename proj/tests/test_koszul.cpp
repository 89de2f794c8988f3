#include "grade3/koszul.hpp"
#include "grade3/rng.hpp"
#include "test_util.hpp"

using namespace grade3;
using g3test::D;
using g3test::P;

namespace {

GradedIdeal ideal(std::initializer_list<const char*> gens, u32 p = kDefaultPrime) {
    std::vector<Poly> gs;
    for (const char* g : gens) gs.push_back(P(g, p));
    return GradedIdeal(p, std::move(gs));
}

BettiTable table(std::initializer_list<std::array<long long, 3>> entries) {
    BettiTable b;
    for (auto [i, j, v] : entries) b.set(int(i), int(j), v);
    return b;
}

/// Expected generic Gorenstein table with top socle degree 2s-1 and first
/// syzygy defect b.
BettiTable generic_gor_table(int s, int b) {
    BettiTable t;
    t.set(0, 0, 1);
    t.set(1, s, s + 1);
    t.set(1, s + 1, b);
    t.set(2, s + 1, b);
    t.set(2, s + 2, s + 1);
    t.set(3, 2 * s + 2, 1);
    return t;
}

long long euler_coeff(const HilbertData& h, int j) {
    // coefficient of t^j in HS(R/I) * (1-t)^3
    static const long long binom3[4] = {1, 3, 3, 1};
    long long c = 0;
    for (int k = 0; k <= 3; ++k) {
        int d = j - k;
        if (d >= 0 && d < int(h.hf.size())) c += (k % 2 ? -1 : 1) * binom3[k] * h.hf[d];
    }
    return c;
}

}  // namespace

TEST_CASE("betti table of the residue field and a complete intersection", "[koszul]") {
    REQUIRE(betti(ideal({"x", "y", "z"}), 4) ==
            table({{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}}));
    REQUIRE(betti(ideal({"x^2", "y^2", "z^2"}), 5) ==
            table({{0, 0, 1}, {1, 2, 3}, {2, 4, 3}, {3, 6, 1}}));
}

TEST_CASE("explicit alternating families attain the generic tables", "[koszul]") {
    for (int s : {2, 4}) {
        GradedIdeal I(kDefaultPrime, sub_pfaffians(family_alt(FamilyKind::Hev, s)).pf);
        REQUIRE(betti(I, 2 * s + 1) == generic_gor_table(s, 0));
    }
    for (int s : {3, 5}) {
        GradedIdeal I(kDefaultPrime, sub_pfaffians(family_alt(FamilyKind::Hodd, s)).pf);
        REQUIRE(betti(I, 2 * s + 1) == generic_gor_table(s, 1));
    }
}

TEST_CASE("non-artinian quotients are rejected", "[koszul]") {
    REQUIRE_THROWS_AS(betti(ideal({"x^2", "y^2"}), 6), std::domain_error);
}

TEST_CASE("euler characteristic matches the hilbert series", "[koszul]") {
    auto check = [](const GradedIdeal& I, int dmax) {
        BettiTable b = betti(I, dmax);
        HilbertData h = I.hilbert(dmax);
        for (int j = 0; j <= dmax; ++j) {
            long long alt = 0;
            for (int i = 0; i <= 3; ++i) alt += (i % 2 ? -1 : 1) * b.get(i, j);
            REQUIRE(alt == euler_coeff(h, j));
        }
    };
    check(ideal({"x^2", "x*y", "y^3", "z^3"}), 8);
    check(GradedIdeal(kDefaultPrime, sub_pfaffians(family_alt(FamilyKind::Vodd, 2)).pf), 9);
    Rng r(505, 0);
    check(InverseSystem(kDefaultPrime, {r.random_dual(kDefaultPrime, 5)}).ann(6), 8);
}

TEST_CASE("gorenstein symmetry of pfaffian quotients", "[koszul]") {
    auto check = [](const AltMatrix& m) {
        GradedIdeal I(kDefaultPrime, sub_pfaffians(m).pf);
        HilbertData h = I.hilbert(3 * m.size());
        REQUIRE(h.artinian);
        REQUIRE(h.socle_dim() == 1);
        int c = h.top_degree;
        BettiTable b = betti(I, c + 2);
        for (const auto& [ij, v] : b.entries)
            REQUIRE(v == b.get(3 - ij.first, c + 3 - ij.second));
    };
    check(family_alt(FamilyKind::Hev, 4));
    check(family_alt(FamilyKind::Hodd, 3));
    check(family_alt(FamilyKind::Vev, 2));
    check(family_alt(FamilyKind::Vodd, 3));
    check(family_alt(FamilyKind::Vj, 3, 2));
}

TEST_CASE("theta matrices carry the coefficients of the form", "[koszul]") {
    // for i = 3 the composite's matrix entries are (up to sign) coefficients
    // of the form, so scaling cannot change the rank
    Rng r(8080, 0);
    DualForm phi = r.random_dual(kDefaultPrime, 5);
    int t = initial_degree_of_ann(phi);
    REQUIRE(theta_rank(phi, 3, t) == theta_rank(phi.scaled(17), 3, t));
    REQUIRE(theta_rank(phi, 2, t) == theta_rank(phi.scaled(23), 2, t));
}

TEST_CASE("theta rank reproduces betti numbers of annihilators", "[koszul]") {
    auto crosscheck = [](const DualForm& phi) {
        int t = initial_degree_of_ann(phi);
        GradedIdeal I = InverseSystem(phi.prime(), {phi}).ann(phi.degree() + 1);
        BettiTable b = betti(I, phi.degree() + 2);
        for (int i : {2, 3})
            REQUIRE(tor_dim_via_theta(phi, i, t) == b.get(i, i + t - 1));
    };
    for (int deg : {3, 4, 5, 6, 7}) {
        for (int trial = 0; trial < 4; ++trial) {
            Rng r(900 + deg, trial);
            crosscheck(r.random_dual(kDefaultPrime, deg));
        }
    }
    crosscheck(D("X*Y*Z"));
    crosscheck(D("X^2*Y^2*Z"));
    crosscheck(D("X^5"));
}

TEST_CASE("generic theta values by parity", "[koszul]") {
    // the defect beta_{2,s+1} is 0 for even s and 1 for odd s on generic forms
    for (int s : {2, 3, 4}) {
        Rng r(1111 + s, 0);
        DualForm phi = r.random_dual(kDefaultPrime, 2 * s - 1);
        int t = initial_degree_of_ann(phi);
        REQUIRE(t == s);
        REQUIRE(tor_dim_via_theta(phi, 2, t) == (s % 2 == 0 ? 0 : 1));
    }
}

TEST_CASE("compressed level strand formula", "[koszul]") {
    for (long long s = 2; s <= 9; ++s) {
        REQUIRE(compressed_level_strand(3, 2 * s - 1, 1, s, 1) == s + 1);
        REQUIRE(compressed_level_strand(3, 2 * s - 2, 1, s, 1) == 2 * s + 1);
        REQUIRE(compressed_level_strand(3, 2 * s - 1, 1, s, 2) == 0);
    }
    // the first syzygy count of a compressed Gorenstein quotient matches
    AltMatrix m = family_alt(FamilyKind::Hev, 4);
    GradedIdeal I(kDefaultPrime, sub_pfaffians(m).pf);
    BettiTable b = betti(I, 10);
    REQUIRE(b.get(1, 4) == compressed_level_strand(3, 7, 1, 4, 1));
}

TEST_CASE("pure-diagram coefficients", "[koszul]") {
    auto c0 = bs_coefficients(5, 0);
    REQUIRE(c0[0] == Rational(0, 1));
    REQUIRE(c0[1] == Rational(1, 1));
    REQUIRE(c0[2] == Rational(0, 1));

    REQUIRE(bs_coefficients(3, 4)[1] == Rational(-1, 15));
    REQUIRE(bs_coefficients(3, 3)[1] == Rational(3, 15));
    REQUIRE_FALSE(bs_coefficients(3, 3)[1].negative());
    REQUIRE(bs_coefficients(3, 4)[1].negative());

    for (long long s = 2; s <= 8; ++s) {
        for (long long b = 0; b <= s; ++b) REQUIRE_FALSE(bs_coefficients(s, b)[1].negative());
        REQUIRE(bs_coefficients(s, s + 1)[1].negative());
    }
}

TEST_CASE("betti table text layout", "[koszul]") {
    BettiTable b = betti(ideal({"x^2", "y^2", "z^2"}), 5);
    std::string text = b.to_text();
    REQUIRE(text.find("0  1  .  .  .") != std::string::npos);
    REQUIRE(text.find("1  .  3  .  .") != std::string::npos);
    REQUIRE(text.find("3  .  .  .  1") != std::string::npos);
}
