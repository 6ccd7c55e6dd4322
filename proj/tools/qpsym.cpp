// Command-line front end: validate flow files, search for multipliers,
// verify candidate symmetries, certify group structure on torsion models,
// and report density statistics.
//
// Machine-readable lines (tab-separated, uppercase keyword first) go to
// stdout; prose and diagnostics go to stderr. Exit codes: 0 success,
// 1 parse/usage error, 2 invalid flow or failed checks, 3 not a symmetry,
// 4 resource limit (model too large / not closed).

#include <qpsym/qpsym.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace qpsym;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotSymmetry = 3;
constexpr int kExitResource = 4;

FrequencyVector load_flow_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open flow file '" + path + "'");
    return load_flow(in);
}

std::string coords_text(const AlgebraicNumber& x) { return x.to_string(); }

int run_check(const std::string& path) {
    try {
        load_flow_file(path);
    } catch (const InvalidFlow& e) {
        std::cout << "INDEPENDENT\tno\n";
        std::cerr << "invalid flow: " << e.what() << "\n";
        return kExitInvalid;
    }
    std::cout << "INDEPENDENT\tyes\n";
    return kExitOk;
}

int run_search(const std::string& path, long height, const std::string& out_path) {
    FrequencyVector flow = load_flow_file(path);
    std::vector<Multiplier> found = search_multipliers(flow, height);
    save_results(std::cout, found);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open results file '" + out_path + "'");
        save_results(out, found);
    }
    std::cerr << found.size() << " multiplier(s) at height " << height << "\n";
    return kExitOk;
}

int run_verify(const std::string& path, const std::string& matrix_text,
               const std::string& translation_text) {
    FrequencyVector flow = load_flow_file(path);
    IntMatrix b = IntMatrix::parse(matrix_text);
    std::vector<AlgebraicNumber> c;
    if (translation_text.empty())
        c.assign(flow.size(), AlgebraicNumber::zero(flow.field()));
    else
        c = parse_translation(translation_text, flow.field(), flow.size());

    std::optional<AffineLift> lift;
    std::optional<Classification> cls;
    try {
        lift.emplace(b, std::move(c));
        cls = classify(*lift, flow);
    } catch (const NotAnEigenvector&) {
        std::cout << "NOT_A_SYMMETRY\n";
        return kExitNotSymmetry;
    } catch (const NotUnimodular&) {
        std::cout << "NOT_A_SYMMETRY\n";
        return kExitNotSymmetry;
    }

    std::cout << "ALPHA\t" << coords_text(cls->multiplier.value) << "\n";
    std::cout << "CLASS\t" << to_string(cls->kind) << "\n";

    // evaluate the characteristic polynomial of B at alpha, exactly
    std::vector<BigInt> cp = b.char_poly();
    AlgebraicNumber value = AlgebraicNumber::zero(flow.field());
    for (auto it = cp.rbegin(); it != cp.rend(); ++it)
        value = value * cls->multiplier.value +
                AlgebraicNumber::from_rational(flow.field(), Rational(*it));
    bool root = value.is_zero();
    std::cout << "CHARPOLY_ROOT\t" << (root ? "yes" : "no") << "\n";

    bool zero = residual_is_zero(pde_residual(*lift, cls->multiplier.value, flow));
    std::cout << "PDE_RESIDUAL\t" << (zero ? "zero" : "nonzero") << "\n";
    return (root && zero) ? kExitOk : kExitNotSymmetry;
}

int run_group(const std::string& path, const std::vector<std::string>& gen_texts, long q,
              int words, std::size_t cap, bool require_nonabelian) {
    FrequencyVector flow = load_flow_file(path);
    const FieldPtr& field = flow.field();
    std::size_t d = field->degree();

    std::vector<Multiplier> gens;
    for (const std::string& text : gen_texts) {
        std::vector<std::string> toks{""};
        for (char ch : text) {
            if (ch == ',')
                toks.emplace_back();
            else if (ch != ' ')
                toks.back() += ch;
        }
        if (toks.size() > d) throw ParseError("generator '" + text + "' has too many entries");
        std::vector<Rational> coords(d);
        for (std::size_t k = 0; k < toks.size(); ++k) coords[k] = Rational::parse(toks[k]);
        AlgebraicNumber alpha(field, std::move(coords));
        try {
            IntMatrix witness = matrix_from_multiplier(alpha, flow);
            gens.push_back(Multiplier{std::move(alpha), std::move(witness)});
        } catch (const NoIntegerSolution&) {
            std::cout << "NOT_A_MULTIPLIER\t" << text << "\n";
            return kExitNotSymmetry;
        } catch (const NotUnimodular&) {
            std::cout << "NOT_A_MULTIPLIER\t" << text << "\n";
            return kExitNotSymmetry;
        }
    }
    MultiplierSubgroup subgroup(flow, std::move(gens));

    bool splitting = verify_splitting(subgroup, words);
    StructureCertificate cert;
    std::size_t size = 0;
    try {
        TorsionModel model = build_torsion_model(subgroup, q, words, cap);
        size = model.elements.size();
        cert = certify_structure(model);
    } catch (const ModelTooLarge& e) {
        std::cout << "ERROR\tModelTooLarge\n";
        std::cerr << e.what() << "\n";
        return kExitResource;
    } catch (const NotClosed& e) {
        std::cout << "ERROR\tNotClosed\n";
        std::cerr << e.what() << "\n";
        return kExitResource;
    }

    auto line = [](const char* name, bool ok) {
        std::cout << "CHECK\t" << name << "\t" << (ok ? "PASS" : "FAIL") << "\n";
    };
    std::cout << "SIZE\t" << size << "\n";
    line("splitting", splitting);
    line("split_verified", cert.split_verified);
    line("kernel_normal", cert.kernel_normal);
    line("trivial_intersection", cert.trivial_intersection);
    line("factorization_unique", cert.factorization_unique);
    line("nonabelian", cert.nonabelian);
    if (cert.noncommuting)
        std::cout << "WITNESS\tnoncommute\t" << cert.noncommuting->first.to_string() << "\t"
                  << cert.noncommuting->second.to_string() << "\n";

    bool ok = splitting && cert.structure_ok() && (!require_nonabelian || cert.nonabelian);
    return ok ? kExitOk : kExitInvalid;
}

int run_density(const std::string& path, long max_m, long grid, const std::string& eps_text) {
    FrequencyVector flow = load_flow_file(path);
    Rational eps = Rational::parse(eps_text);
    std::set<long> ms{std::max(1L, max_m / 100), std::max(1L, max_m / 10), std::max(1L, max_m)};
    for (long m : ms) {
        if (flow.size() == 2) {
            std::cout << "DENSITY\tM=" << m << "\tGAP=" << density_gap(flow, m, eps).to_string()
                      << "\n";
        } else {
            std::cout << "DENSITY\tM=" << m
                      << "\tRADIUS=" << density_covering_radius(flow, m, grid, eps).to_string()
                      << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetry computations for quasiperiodic torus flows"};
    app.require_subcommand(1);

    std::string flow_path, out_path, matrix_text, translation_text, eps_text = "1/1000000000";
    long height = 1, q = 1, max_m = 1000, grid = 20;
    int words = 2;
    std::size_t cap = 1000000;
    bool require_nonabelian = false;
    std::vector<std::string> gen_texts;

    CLI::App* check = app.add_subcommand("check", "validate a flow file");
    check->add_option("flow", flow_path, "flow spec file")->required();

    CLI::App* search = app.add_subcommand("search", "enumerate multipliers up to a height bound");
    search->add_option("flow", flow_path)->required();
    search->add_option("--height", height, "max |coefficient| of candidates")->required();
    search->add_option("--out", out_path, "also write results to this file");

    CLI::App* verify = app.add_subcommand("verify", "verify one candidate symmetry lift");
    verify->add_option("flow", flow_path)->required();
    verify->add_option("--matrix", matrix_text, "rows 'a,b;c,d'")->required();
    verify->add_option("--translation", translation_text, "coords 'q0,q1|q0,q1'");

    CLI::App* group = app.add_subcommand("group", "certify semidirect structure on a torsion model");
    group->add_option("flow", flow_path)->required();
    group->add_option("--gen", gen_texts, "generator multiplier, power-basis coords 'e0,e1'");
    group->add_option("--q", q, "torsion denominator")->required();
    group->add_option("--words", words, "word length bound")->required();
    group->add_option("--cap", cap, "element cap");
    group->add_flag("--require-nonabelian", require_nonabelian,
                    "fail unless a noncommuting pair is found");

    CLI::App* density = app.add_subcommand("density", "gap / covering-radius statistics");
    density->add_option("flow", flow_path)->required();
    density->add_option("--max-m", max_m, "largest M; reports M/100, M/10, M")->required();
    density->add_option("--grid", grid, "probe grid per axis (n >= 3)");
    density->add_option("--eps", eps_text, "approximation precision (rational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (app.got_subcommand(check)) return run_check(flow_path);
        if (app.got_subcommand(search)) return run_search(flow_path, height, out_path);
        if (app.got_subcommand(verify)) return run_verify(flow_path, matrix_text, translation_text);
        if (app.got_subcommand(group))
            return run_group(flow_path, gen_texts, q, words, cap, require_nonabelian);
        if (app.got_subcommand(density)) return run_density(flow_path, max_m, grid, eps_text);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidField& e) {
        std::cerr << "invalid field: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InvalidFlow& e) {
        std::cerr << "invalid flow: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ModelTooLarge& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const NotClosed& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
