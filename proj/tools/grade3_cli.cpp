// Command-line surface: construct the matrix families, trim and resolve their
// Pfaffian ideals, compute Betti tables and Tor classes, and rerun the named
// reproducibility checks and experiments.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "grade3/claims.hpp"

using namespace grade3;

namespace {

struct GlobalOpts {
    u32 prime = kDefaultPrime;
    u64 seed = 1;
    std::string format = "text";
    int dmax = -1;
    std::string out;
};

struct TargetOpts {
    std::string family;
    int m = -1;
    int j = -1;
    std::string ideal_file;
    std::string form;
};

void write_output(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + g.out + "'");
    f << text;
}

void emit_json(const GlobalOpts& g, const ordered_json& j) {
    write_output(g, j.dump(2) + "\n");
}

bool is_alt_family(FamilyKind k) {
    return k == FamilyKind::Hev || k == FamilyKind::Hodd || k == FamilyKind::Vev ||
           k == FamilyKind::Vodd || k == FamilyKind::Vj;
}

AltMatrix target_matrix(const TargetOpts& t, const GlobalOpts& g) {
    if (t.family.empty()) throw CLI::ValidationError("--family is required here");
    FamilyKind kind = family_from_name(t.family);
    if (!is_alt_family(kind))
        throw CLI::ValidationError("family '" + t.family + "' is not alternating");
    if (t.m < 0) throw CLI::ValidationError("--m is required");
    return family_alt(kind, t.m, t.j, g.prime);
}

GradedIdeal target_ideal(const TargetOpts& t, const GlobalOpts& g) {
    if (!t.ideal_file.empty()) {
        std::ifstream f(t.ideal_file);
        if (!f) throw CLI::ValidationError("cannot open ideal file '" + t.ideal_file + "'");
        ordered_json j = ordered_json::parse(f);
        return ideal_from_json(j, g.prime);
    }
    return GradedIdeal(g.prime, sub_pfaffians(target_matrix(t, g)).pf);
}

int default_dmax(const GradedIdeal& I, const GlobalOpts& g) {
    if (g.dmax >= 0) return g.dmax;
    // grow until the quotient dies, then leave room for the last syzygies
    int d = 1;
    while (d < 64 && I.quotient_dim(d) != 0) ++d;
    if (I.quotient_dim(d) != 0)
        throw std::domain_error("quotient not Artinian within degree 64; pass --dmax");
    return d + 2;
}

void add_target_flags(CLI::App* cmd, TargetOpts& t, bool with_ideal = true) {
    cmd->add_option("--family", t.family, "family name: Hev Hodd Uev Uodd Uj Vev Vodd Vj");
    cmd->add_option("--m,--s", t.m, "family parameter (m, or s for the H families)");
    cmd->add_option("--j", t.j, "secondary index for the Uj/Vj families");
    if (with_ideal)
        cmd->add_option("--ideal", t.ideal_file, "JSON file with {prime, gens:[...]} instead");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with trimmed Pfaffian ideals over GF(p)"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    TargetOpts t;
    app.add_option("--prime", g.prime, "prime modulus, > 2")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized runs")->capture_default_str();
    app.add_option("--format", g.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--dmax", g.dmax, "degree bound override");
    app.add_option("--out", g.out, "write output to this file");

    int trim_index = 0;
    int trials = 20;
    std::string claim_id, experiment_name;
    bool check_flag = false;

    auto* cmd_pf = app.add_subcommand("pfaffians", "signed submaximal Pfaffians of a family matrix");
    add_target_flags(cmd_pf, t, false);
    auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert function and socle of R/I");
    add_target_flags(cmd_hilbert, t);
    auto* cmd_betti = app.add_subcommand("betti", "graded Betti table of R/I");
    add_target_flags(cmd_betti, t);
    auto* cmd_trim = app.add_subcommand("trim", "trim one generator of the Pfaffian ideal");
    add_target_flags(cmd_trim, t);
    cmd_trim->add_option("--index", trim_index, "1-based generator index")->required();
    auto* cmd_tor = app.add_subcommand("tor-class", "Tor-algebra invariants of R/I");
    add_target_flags(cmd_tor, t);
    cmd_tor->add_option("--trim-index", trim_index, "trim this generator first (0 = none)");
    auto* cmd_resolve = app.add_subcommand("resolve-trim", "explicit complex for a trimmed ideal");
    add_target_flags(cmd_resolve, t, false);
    cmd_resolve->add_option("--index", trim_index, "1-based generator index")->required();
    cmd_resolve->add_flag("--check", check_flag, "verify strand exactness");
    std::string form_file;
    auto* cmd_ann = app.add_subcommand("ann", "annihilator ideal of a dual form");
    cmd_ann->add_option("--form", t.form, "dual form, e.g. \"X^2*Y + Z^3\"");
    cmd_ann->add_option("--form-file", form_file, "file containing the dual form");
    auto* cmd_repro = app.add_subcommand("reproduce", "run a named claim check");
    cmd_repro->add_option("claim", claim_id, "claim id (see `reproduce list`)")->required();
    cmd_repro->add_option("--s", t.m, "socle parameter");
    cmd_repro->add_option("--trials", trials, "trial count for sampled claims");
    auto* cmd_exp = app.add_subcommand("experiment", "run a randomized or sweep experiment");
    cmd_exp->add_option("name", experiment_name,
                        "generic-betti | realizability | even-socle | theta")
        ->required();
    cmd_exp->add_option("--s", t.m, "socle parameter");
    cmd_exp->add_option("--trials", trials, "trial count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        PrimeField field(g.prime);  // validates the modulus for every verb
        bool pass = true;
        if (cmd_pf->parsed()) {
            AltMatrix M = target_matrix(t, g);
            auto sys = sub_pfaffians(M);
            if (g.format == "json") {
                ordered_json j = alt_matrix_to_json(M);
                ordered_json pf = ordered_json::array();
                for (const auto& f : sys.pf) pf.push_back(f.str());
                j["pfaffians"] = pf;
                emit_json(g, j);
            } else {
                std::ostringstream os;
                for (std::size_t i = 0; i < sys.pf.size(); ++i)
                    os << "pf[" << i + 1 << "] = " << sys.pf[i].str() << "\n";
                write_output(g, os.str());
            }
        } else if (cmd_hilbert->parsed()) {
            GradedIdeal I = target_ideal(t, g);
            HilbertData h = I.hilbert(default_dmax(I, g));
            if (g.format == "json")
                emit_json(g, hilbert_to_json(h));
            else
                write_output(g, h.to_text());
        } else if (cmd_betti->parsed()) {
            GradedIdeal I = target_ideal(t, g);
            BettiTable b = betti(I, default_dmax(I, g));
            if (g.format == "json") {
                emit_json(g, betti_to_json(b));
            } else if (g.format == "csv") {
                std::ostringstream os;
                os << "i,j,beta\n";
                for (const auto& [ij, v] : b.entries)
                    os << ij.first << "," << ij.second << "," << v << "\n";
                write_output(g, os.str());
            } else {
                write_output(g, b.to_text());
            }
        } else if (cmd_trim->parsed()) {
            GradedIdeal I = target_ideal(t, g).trim(trim_index);
            MinimalGenerators mg = I.min_gens();
            if (g.format == "json") {
                ordered_json j = ideal_to_json(I);
                j["mu"] = mg.total;
                ordered_json md = ordered_json::object();
                for (auto [d, c] : mg.by_degree) md[std::to_string(d)] = c;
                j["mu_by_degree"] = md;
                emit_json(g, j);
            } else {
                std::ostringstream os;
                for (const auto& gen : I.gens()) os << gen.str() << "\n";
                os << "mu = " << mg.total << "\n";
                write_output(g, os.str());
            }
        } else if (cmd_tor->parsed()) {
            GradedIdeal I = target_ideal(t, g);
            if (trim_index > 0) I = I.trim(trim_index);
            TorInvariants inv = tor_invariants(I, default_dmax(I, g));
            if (g.format == "json") {
                emit_json(g, tor_invariants_to_json(inv));
            } else {
                std::ostringstream os;
                os << "mu = " << inv.mu << "\ntype = " << inv.type << "\np = " << inv.p
                   << "\nq = " << inv.q << "\nr = " << inv.r << "\nclass = " << inv.label()
                   << "\n";
                write_output(g, os.str());
            }
        } else if (cmd_resolve->parsed()) {
            TrimComplex C = build_complex(TrimInput{target_matrix(t, g), trim_index});
            std::optional<ExactnessReport> rep;
            if (check_flag) {
                GradedIdeal I = C.trimmed_ideal();
                rep = verify_exactness(C, default_dmax(I, g));
                pass = rep->exact;
            }
            if (g.format == "json") {
                emit_json(g, trim_complex_to_json(C, rep ? &*rep : nullptr));
            } else {
                std::ostringstream os;
                os << "free modules: 1 <- " << C.F1.rank() << " <- " << C.F2.rank() << " <- "
                   << C.F3.rank() << "\n";
                os << "minimal = " << (is_minimal(C) ? "yes" : "no")
                   << ", predicted mu = " << predicted_mu(C) << "\n";
                if (rep)
                    os << "exact up to degree " << rep->dmax << ": "
                       << (rep->exact ? "yes" : "NO") << "\n";
                write_output(g, os.str());
            }
        } else if (cmd_ann->parsed()) {
            if (!form_file.empty()) {
                std::ifstream f(form_file);
                if (!f) throw CLI::ValidationError("cannot open form file '" + form_file + "'");
                std::ostringstream buf;
                buf << f.rdbuf();
                t.form = buf.str();
            }
            if (t.form.empty()) throw CLI::ValidationError("ann needs --form or --form-file");
            DualForm phi = DualForm::parse(g.prime, t.form);
            int dmax = g.dmax >= 0 ? g.dmax : phi.degree() + 1;
            GradedIdeal I = InverseSystem(g.prime, {phi}).ann(dmax);
            MinimalGenerators mg = I.min_gens();
            GradedIdeal minimal(g.prime, mg.gens);
            if (g.format == "json")
                emit_json(g, ideal_to_json(minimal));
            else {
                std::ostringstream os;
                for (const auto& gen : mg.gens) os << gen.str() << "\n";
                write_output(g, os.str());
            }
        } else if (cmd_repro->parsed()) {
            if (claim_id == "list") {
                std::ostringstream os;
                for (const auto& [id, info] : claim_registry())
                    os << id << ": " << info.description << "\n";
                write_output(g, os.str());
            } else {
                ClaimOptions opt{t.m, trials, g.seed, g.prime};
                ClaimResult res = run_claim(claim_id, opt);
                pass = res.pass;
                if (g.format == "json") {
                    ordered_json j{{"claim", res.claim}, {"pass", res.pass},
                                   {"details", res.details}};
                    emit_json(g, j);
                } else {
                    write_output(g, res.claim + ": " + (res.pass ? "PASS" : "FAIL") + "\n" +
                                        res.details.dump(2) + "\n");
                }
            }
        } else if (cmd_exp->parsed()) {
            int s = t.m > 0 ? t.m : 3;
            ExperimentReport rep;
            if (experiment_name == "generic-betti")
                rep = generic_betti(s, trials, g.seed, g.prime);
            else if (experiment_name == "realizability")
                rep = realizability_sweep(s, g.prime);
            else if (experiment_name == "even-socle")
                rep = even_socle_study(s, trials, g.seed, g.prime);
            else if (experiment_name == "theta")
                rep = theta_crosscheck({3, 5, 7}, trials, g.seed, g.prime);
            else
                throw CLI::ValidationError("unknown experiment '" + experiment_name + "'");
            pass = rep.ok();
            if (g.format == "csv")
                write_output(g, rep.to_csv());
            else if (g.format == "json")
                emit_json(g, rep.to_json());
            else
                write_output(g, rep.to_json().dump(2) + "\n");
        }
        return pass ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
