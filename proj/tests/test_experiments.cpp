#include "grade3/claims.hpp"
#include "grade3/experiments.hpp"
#include "test_util.hpp"

using namespace grade3;

TEST_CASE("generic sampling matches the parity tables", "[experiments]") {
    for (int s : {2, 3}) {
        ExperimentReport rep = generic_betti(s, 6, 12345);
        REQUIRE(rep.passed >= 5);
        REQUIRE(rep.rows.size() == 6);
    }
}

TEST_CASE("the odd quadratic family's dual form has defect one", "[experiments]") {
    // an explicit (non-sampled) witness for the odd table: the dual socle
    // generator of the s = 3 odd family
    AltMatrix M = family_alt(FamilyKind::Hodd, 3);
    GradedIdeal K(kDefaultPrime, sub_pfaffians(M).pf);
    DualForm phi = dual_socle_generator(K, 5);
    GradedIdeal I = InverseSystem(kDefaultPrime, {phi}).ann(6);
    REQUIRE(betti(I, 6) == generic_gor_table(3, 1));
}

TEST_CASE("reports are byte-reproducible for a fixed seed", "[experiments]") {
    auto a = generic_betti(3, 5, 777);
    auto b = generic_betti(3, 5, 777);
    REQUIRE(a.to_json().dump() == b.to_json().dump());
    REQUIRE(a.to_csv() == b.to_csv());
    auto c = generic_betti(3, 5, 778);
    REQUIRE(a.to_json().dump() != c.to_json().dump());

    auto e1 = even_socle_study(3, 4, 42);
    auto e2 = even_socle_study(3, 4, 42);
    REQUIRE(e1.to_json().dump() == e2.to_json().dump());
}

TEST_CASE("realizability sweep certifies every rank in range", "[experiments]") {
    ExperimentReport rep = realizability_sweep(3);
    REQUIRE(rep.ok());
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) {
        REQUIRE(row.at("pass").get<bool>());
        REQUIRE(row.at("class").get<std::string>() ==
                "G(" + std::to_string(row.at("r").get<int>()) + ")");
    }
    REQUIRE_THROWS_AS(realize_instances(2), std::invalid_argument);
}

TEST_CASE("even-socle study retains generic samples and certifies trims", "[experiments]") {
    ExperimentReport rep = even_socle_study(3, 6, 2026);
    REQUIRE(rep.ok());
    int retained = rep.summary.at("retained").get<int>();
    REQUIRE(retained >= 4);  // degenerate samples are rare over a large field
    for (const auto& row : rep.rows) {
        if (!row.at("retained").get<bool>()) continue;
        long long mu = row.at("mu").get<long long>();
        REQUIRE((mu == 6 || mu == 7));
    }
}

TEST_CASE("theta crosscheck experiment", "[experiments]") {
    ExperimentReport rep = theta_crosscheck({3, 5}, 3, 99);
    REQUIRE(rep.ok());
    // rows: per degree, 3 random + 3 monomial + 3 oracle rows
    REQUIRE(rep.rows.size() == 2 * 9);
}

TEST_CASE("csv serialization is aligned with the declared columns", "[experiments]") {
    ExperimentReport rep = realizability_sweep(3);
    std::string csv = rep.to_csv();
    REQUIRE(csv.find("r,construction,mu,socle_ok,compressed,class,pass") == 0);
    REQUIRE(csv.find("G(5)") != std::string::npos);
}

TEST_CASE("claim registry smoke runs", "[experiments]") {
    ClaimOptions opt;
    opt.trials = 4;
    opt.seed = 5;

    ClaimResult r1 = run_claim("maxideal", opt);
    REQUIRE(r1.pass);
    ClaimResult r2 = run_claim("evens2", opt);
    REQUIRE(r2.pass);
    ClaimResult r3 = run_claim("btab3-odd", opt);
    REQUIRE(r3.pass);
    REQUIRE_THROWS_AS(run_claim("nope", opt), std::invalid_argument);

    ClaimOptions bad = opt;
    bad.s = 3;
    REQUIRE_THROWS_AS(run_claim("btab3-even", bad), std::invalid_argument);
}
