// witt: command-line front end for the exact Witt-basis algebra.
//
// exit codes: 0 ok, 1 malformed input, 2 dimension/rank mismatch,
// 3 domain error, 4 failed verification or internal error.

#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "witt/golden.hpp"
#include "witt/io.hpp"
#include "witt/witt.hpp"

namespace {

using witt::io::Json;

enum class Format { json, pretty };

struct Config {
    Format format = Format::json;
    int rank_cap = 6;
};

struct verification_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_rank(int n, const Config& cfg) {
    if (n < 1) throw witt::dimension_error("rank must be at least 1, got " + std::to_string(n));
    if (n > cfg.rank_cap)
        throw witt::dimension_error("rank " + std::to_string(n) + " exceeds the rank cap " +
                                    std::to_string(cfg.rank_cap) + " (raise it with --rank-cap)");
}

// A JSON argument is inline text when it starts with '{' or '[', stdin for "-",
// and a file path otherwise.
Json load_json(const std::string& arg) {
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
    } else if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(arg);
        if (!in) throw witt::parse_error("cannot read '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw witt::parse_error("invalid JSON in '" + arg + "': " + e.what());
    }
}

witt::Multivector load_multivector(const std::string& arg, const Config& cfg) {
    witt::Multivector g = witt::io::multivector_from_json(load_json(arg));
    check_rank(g.rank(), cfg);
    return g;
}

witt::ExactMatrix load_matrix(const std::string& arg) { return witt::io::matrix_from_json(load_json(arg)); }

// A multiplier is a JSON multivector, or a compact product such as "ud2" or "b1 u2".
witt::Multivector load_factor(const std::string& arg, int n, const Config& cfg) {
    const auto first = arg.find_first_not_of(" \t");
    const bool json_like = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
    if (json_like || arg == "-" || std::filesystem::exists(arg)) {
        witt::Multivector m = load_multivector(arg, cfg);
        if (m.rank() != n)
            throw witt::dimension_error("rank " + std::to_string(m.rank()) + " does not match rank " +
                                        std::to_string(n));
        return m;
    }
    return witt::parse_product(arg, n);
}

std::string pretty_table(const witt::SpectralTable& t) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : t) {
        std::vector<std::string> line;
        for (const auto& e : row) line.push_back(witt::io::pretty(e));
        cells.push_back(std::move(line));
    }
    return witt::io::align_grid(cells);
}

void emit(const Config& cfg, const Json& j, const std::string& text) {
    if (cfg.format == Format::json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

void emit_multivector(const Config& cfg, const witt::Multivector& g) {
    emit(cfg, witt::io::to_json(g), witt::io::pretty(g) + "\n");
}

void emit_matrix(const Config& cfg, const witt::ExactMatrix& m) {
    emit(cfg, witt::io::to_json(m), witt::io::pretty(m));
}

std::string section(const std::string& title, const std::string& body) {
    std::string out = title + ":\n" + body;
    if (!body.empty() && body.back() != '\n') out += "\n";
    return out;
}

std::vector<witt::Scalar> parse_scalar_list(const std::string& text) {
    std::vector<witt::Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(witt::Scalar::parse(item));
    return out;
}

// ---------------------------------------------------------------------------

void cmd_spectral_table(const Config& cfg, int n) {
    check_rank(n, cfg);
    const witt::SpectralTable t = witt::spectral_table(n);
    Json rows = Json::array();
    for (const auto& row : t) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(witt::io::to_json(e));
        rows.push_back(std::move(r));
    }
    emit(cfg, rows, pretty_table(t));
}

void cmd_mul(const Config& cfg, const std::string& lhs, const std::string& rhs) {
    const witt::Multivector x = load_multivector(lhs, cfg);
    const witt::Multivector y = load_multivector(rhs, cfg);
    emit_multivector(cfg, x * y);
}

void cmd_to_matrix(const Config& cfg, const std::string& arg) {
    emit_matrix(cfg, witt::to_matrix(load_multivector(arg, cfg)));
}

void cmd_from_matrix(const Config& cfg, const std::string& arg, std::optional<int> n) {
    const witt::ExactMatrix m = load_matrix(arg);
    const int rank = n ? *n : witt::rank_for_size(m.rows(), m.cols());
    check_rank(rank, cfg);
    emit_multivector(cfg, witt::from_matrix(m, rank));
}

void cmd_involutions(const Config& cfg, const std::string& arg) {
    const witt::Multivector g = load_multivector(arg, cfg);
    const witt::Multivector rev = witt::reverse(g);
    const witt::Multivector inv = witt::grade_involution(g);
    const witt::Multivector conj = witt::clifford_conj(g);
    Json j;
    j["reverse"] = witt::io::to_json(rev);
    j["grade_involution"] = witt::io::to_json(inv);
    j["clifford_conjugate"] = witt::io::to_json(conj);
    emit(cfg, j,
         "reverse: " + witt::io::pretty(rev) + "\ngrade involution: " + witt::io::pretty(inv) +
             "\nclifford conjugate: " + witt::io::pretty(conj) + "\n");
}

void cmd_det2(const Config& cfg, const std::string& arg) {
    const witt::Scalar d = witt::det2(load_multivector(arg, cfg));
    emit(cfg, witt::io::to_json(d), d.to_string() + "\n");
}

void cmd_embed(const Config& cfg, int p, int q, std::optional<int> n_opt) {
    int n = 1;
    if (n_opt) n = *n_opt;
    else
        while (p + q > 2 * n + 1) ++n;
    check_rank(n, cfg);
    const witt::GeneratorSet gs = witt::generators({p, q, n});
    const witt::SignatureReport rep = witt::verify_signature(gs);

    Json j;
    j["p"] = p;
    j["q"] = q;
    j["n"] = n;
    Json gens = Json::array();
    std::string text = "G(" + std::to_string(p) + "," + std::to_string(q) + ") in complexified G(" +
                       std::to_string(n) + "," + std::to_string(n) + ")\n";
    auto add = [&](const std::vector<witt::Multivector>& side, const std::vector<std::string>& labels, int square) {
        for (std::size_t k = 0; k < side.size(); ++k) {
            Json g;
            g["label"] = labels[k];
            g["square"] = square;
            g["element"] = witt::io::to_json(side[k]);
            gens.push_back(std::move(g));
            text += "  " + labels[k] + " (square " + std::to_string(square) + "): " + witt::io::pretty(side[k]) + "\n";
        }
    };
    add(gs.plus, gs.plus_labels, 1);
    add(gs.minus, gs.minus_labels, -1);
    j["generators"] = std::move(gens);
    Json report;
    report["pass"] = rep.pass;
    report["failures"] = rep.failures;
    j["report"] = std::move(report);
    text += std::string("verification: ") + (rep.pass ? "pass" : "FAIL") + "\n";
    for (const auto& f : rep.failures) text += "  " + f + "\n";
    emit(cfg, j, text);
    if (!rep.pass) throw verification_failed("signature verification failed");
}

void cmd_perm(const Config& cfg, const std::string& cycles, int n, const std::string& rep, bool irrep) {
    check_rank(n, cfg);
    const witt::Permutation s = witt::Permutation::from_cycles(cycles);
    witt::Multivector g;
    witt::ExactMatrix m;
    std::string kind;
    if (irrep) {
        g = witt::standard_irrep(s, n);
        m = witt::to_matrix(g);
        kind = "standard-irrep";
    } else {
        const witt::RepKind k = rep == "std" ? witt::RepKind::standard : witt::RepKind::permutation;
        const witt::GroupElementImage img = witt::group_image(s, n, k);
        g = img.geometric;
        m = img.matrix;
        kind = rep;
    }
    Json j;
    j["cycles"] = s.to_cycle_string();
    j["representation"] = kind;
    j["matrix"] = witt::io::to_json(m);
    j["element"] = witt::io::to_json(g);
    j["character"] = witt::io::to_json(witt::character(g));
    emit(cfg, j,
         s.to_cycle_string() + " (" + kind + ")\n" + witt::io::pretty(m) + "= " + witt::io::pretty(g) +
             "\ncharacter: " + witt::character(g).to_string() + "\n");
}

void cmd_casimir(const Config& cfg, int n) {
    check_rank(n, cfg);
    const witt::Multivector a = witt::all_ones_mv(n);
    const witt::Multivector c = witt::casimir_mv(n);
    const auto [s1, s2] = witt::casimir_idempotents(n);
    const witt::Multivector gc = witt::surgery_gc(n);
    const witt::ExactMatrix diag = witt::to_matrix(witt::surgery_gc_inverse(n) * c * gc);
    const witt::RationalPolynomial mp = witt::min_poly(witt::to_matrix(c));
    Json j;
    j["n"] = n;
    j["all_ones"] = witt::io::to_json(a);
    j["casimir"] = witt::io::to_json(c);
    j["casimir_min_poly"] = witt::io::to_json(mp);
    j["s1"] = witt::io::to_json(s1);
    j["s2"] = witt::io::to_json(s2);
    j["g_c"] = witt::io::to_json(gc);
    j["g_c_matrix"] = witt::io::to_json(witt::to_matrix(gc));
    j["diagonalized"] = witt::io::to_json(diag);
    std::string text = section("A", witt::io::pretty(a)) + section("C", witt::io::pretty(c)) +
                       section("min(C)", witt::factored_string(witt::factor_rational_roots(mp))) +
                       section("s1", witt::io::pretty(s1)) + section("s2", witt::io::pretty(s2)) +
                       section("g_c", witt::io::pretty(gc)) + section("[g_c]", witt::io::pretty(witt::to_matrix(gc))) +
                       section("[g_c^-1 C g_c]", witt::io::pretty(diag));
    emit(cfg, j, text);
}

void cmd_surgery(const Config& cfg, const std::string& arg, const std::optional<std::string>& u,
                 const std::optional<std::string>& column) {
    const witt::Multivector g = load_multivector(arg, cfg);
    if (u.has_value() == column.has_value()) throw witt::parse_error("surgery needs exactly one of --u or --column");
    const witt::Multivector out = u ? witt::surgery_cut(g, load_factor(*u, g.rank(), cfg))
                                    : witt::extract_column(g, load_factor(*column, g.rank(), cfg));
    const witt::ExactMatrix m = witt::to_matrix(out);
    Json j;
    j["element"] = witt::io::to_json(out);
    j["matrix"] = witt::io::to_json(m);
    emit(cfg, j, witt::io::pretty(out) + "\n" + witt::io::pretty(m));
}

void cmd_commutant(const Config& cfg, const std::string& group) {
    std::vector<witt::ExactMatrix> gens;
    if (group == "s4") {
        for (const char* c : {"(12)", "(13)", "(14)"})
            gens.push_back(witt::perm_matrix(witt::Permutation::from_cycles(c), 4));
    } else if (group == "klein") {
        for (const char* c : {"(12)(34)", "(13)(24)"})
            gens.push_back(witt::perm_matrix(witt::Permutation::from_cycles(c), 4));
    } else {
        const Json j = load_json(group);
        const Json& list = j.is_object() && j.contains("generators") ? j["generators"] : j;
        if (!list.is_array() || list.empty()) throw witt::parse_error("expected an array of generator matrices");
        for (const auto& m : list) gens.push_back(witt::io::matrix_from_json(m));
    }
    const witt::CommutantBasis cb = witt::commutant(gens);
    Json j;
    j["dimension"] = cb.dimension;
    Json basis = Json::array();
    std::string text = "dimension " + std::to_string(cb.dimension) + "\n";
    for (std::size_t k = 0; k < cb.basis.size(); ++k) {
        basis.push_back(witt::io::to_json(cb.basis[k]));
        text += section("basis " + std::to_string(k + 1), witt::io::pretty(cb.basis[k]));
    }
    j["basis"] = std::move(basis);
    emit(cfg, j, text);
}

void cmd_minpoly(const Config& cfg, const std::string& arg) {
    const witt::ExactMatrix m = load_matrix(arg);
    const witt::RationalPolynomial p = witt::min_poly(m);
    emit(cfg, witt::io::to_json(p),
         p.to_string() + "\n" + witt::factored_string(witt::factor_rational_roots(p)) + "\n");
}

void cmd_regrep(const Config& cfg, const std::string& xs) {
    const std::vector<witt::Scalar> v = parse_scalar_list(xs);
    if (v.size() != 6) throw witt::dimension_error("--x needs six coefficients x0..x5, got " + std::to_string(v.size()));
    check_rank(3, cfg);
    std::array<witt::Scalar, 6> x;
    for (std::size_t k = 0; k < 6; ++k) x[k] = v[k];
    const witt::RegRepElement el = witt::regrep_element(x);
    const witt::ExactMatrix xm = witt::to_matrix(el.element);
    const auto [p, d] = witt::regrep_decompose(el);
    Json j;
    j["x"] = witt::io::to_json(xm);
    j["P"] = witt::io::to_json(p);
    j["D"] = witt::io::to_json(d);
    emit(cfg, j, section("[X]", witt::io::pretty(xm)) + section("P", witt::io::pretty(p)) + section("D", witt::io::pretty(d)));
}

void cmd_verify_reference(const Config& cfg) {
    const std::vector<witt::GoldenResult> results = witt::run_golden_checks();
    std::size_t failed = 0;
    Json arr = Json::array();
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        Json e;
        e["check"] = r.name;
        e["pass"] = r.pass;
        if (!r.detail.empty()) e["detail"] = r.detail;
        arr.push_back(std::move(e));
        cells.push_back({r.pass ? "PASS" : "FAIL", r.name, r.detail});
    }
    Json j;
    j["checks"] = std::move(arr);
    j["passed"] = results.size() - failed;
    j["failed"] = failed;
    emit(cfg, j,
         witt::io::align_grid(cells) + std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
             " checks passed\n");
    if (failed) throw verification_failed(std::to_string(failed) + " golden checks failed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Witt-basis geometric algebra and symmetric group representations"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--rank-cap", cfg.rank_cap, "Largest accepted rank n")->check(CLI::Range(1, witt::max_rank));

    int table_n = 2;
    auto* spectral = app.add_subcommand("spectral-table", "Spectral basis E_rc of G(n,n)");
    spectral->add_option("n", table_n, "Rank n")->required();

    std::string lhs, rhs;
    auto* mul = app.add_subcommand("mul", "Geometric product of two multivectors");
    mul->add_option("lhs", lhs, "Left factor (JSON file, inline JSON or -)")->required();
    mul->add_option("rhs", rhs, "Right factor")->required();

    std::string input;
    auto* to_matrix = app.add_subcommand("to-matrix", "Spectral matrix [g]");
    to_matrix->add_option("g", input, "Multivector JSON")->required();

    std::optional<int> fm_n;
    auto* from_matrix = app.add_subcommand("from-matrix", "Multivector with the given spectral matrix");
    from_matrix->add_option("m", input, "Matrix JSON")->required();
    from_matrix->add_option("--n", fm_n, "Rank (defaults to log2 of the size)");

    auto* involutions = app.add_subcommand("involutions", "Reverse, grade involution and Clifford conjugate");
    involutions->add_option("g", input, "Multivector JSON")->required();

    auto* det2 = app.add_subcommand("det2", "Determinant g g* of a rank 1 element");
    det2->add_option("g", input, "Multivector JSON")->required();

    int p = 0, q = 0;
    std::optional<int> embed_n;
    auto* embed = app.add_subcommand("embed", "Generators of G(p,q) in complexified G(n,n)");
    embed->add_option("--p", p, "Number of generators squaring to +1")->required()->check(CLI::NonNegativeNumber);
    embed->add_option("--q", q, "Number of generators squaring to -1")->required()->check(CLI::NonNegativeNumber);
    embed->add_option("--n", embed_n, "Ambient rank (defaults to the smallest that fits)");

    std::string cycles;
    int perm_n = 2;
    std::string rep = "perm";
    bool irrep = false;
    auto* perm = app.add_subcommand("perm", "Matrix and geometric image of a permutation");
    perm->add_option("--cycles", cycles, "Cycle notation, e.g. \"(1 4)\"")->required();
    perm->add_option("--n", perm_n, "Rank n");
    perm->add_option("--rep", rep, "Representation")->check(CLI::IsMember({"std", "perm"}));
    perm->add_flag("--standard-irrep", irrep, "Conjugate by g_c to the standard irreducible representation");

    int casimir_n = 2;
    auto* casimir = app.add_subcommand("casimir", "All-ones and Casimir elements, idempotents and g_c");
    casimir->add_option("--n", casimir_n, "Rank n");

    std::optional<std::string> cut_u, cut_column;
    auto* surgery = app.add_subcommand("surgery", "g - g u - u g, or g m for column extraction");
    surgery->add_option("g", input, "Multivector JSON")->required();
    auto* u_opt = surgery->add_option("--u", cut_u, "Idempotent u (JSON or product such as ud2)");
    auto* col_opt = surgery->add_option("--column", cut_column, "Single-term multiplier m (JSON or product such as b1u2)");
    u_opt->excludes(col_opt);

    std::string group = "s4";
    auto* commutant = app.add_subcommand("commutant", "Matrices commuting with a set of generators");
    commutant->add_option("--group", group, "s4, klein or a JSON file of generator matrices");

    auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of a matrix");
    minpoly->add_option("m", input, "Matrix JSON")->required();

    std::string xs = "1,2,3,4,5,6";
    auto* regrep = app.add_subcommand("regrep", "Block decomposition of the regular representation of S3");
    regrep->add_option("--x", xs, "Coefficients x0..x5, comma separated");

    auto* verify = app.add_subcommand("verify-paper", "Run every reference check and print a pass/fail table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "witt: error: " << e.what() << "\n";
        return 1;
    }
    cfg.format = format == "pretty" ? Format::pretty : Format::json;

    try {
        if (*spectral) cmd_spectral_table(cfg, table_n);
        else if (*mul) cmd_mul(cfg, lhs, rhs);
        else if (*to_matrix) cmd_to_matrix(cfg, input);
        else if (*from_matrix) cmd_from_matrix(cfg, input, fm_n);
        else if (*involutions) cmd_involutions(cfg, input);
        else if (*det2) cmd_det2(cfg, input);
        else if (*embed) cmd_embed(cfg, p, q, embed_n);
        else if (*perm) cmd_perm(cfg, cycles, perm_n, rep, irrep);
        else if (*casimir) cmd_casimir(cfg, casimir_n);
        else if (*surgery) cmd_surgery(cfg, input, cut_u, cut_column);
        else if (*commutant) cmd_commutant(cfg, group);
        else if (*minpoly) cmd_minpoly(cfg, input);
        else if (*regrep) cmd_regrep(cfg, xs);
        else if (*verify) cmd_verify_reference(cfg);
    } catch (const witt::dimension_error& e) {
        std::cerr << "witt: dimension error: " << e.what() << "\n";
        return 2;
    } catch (const witt::domain_error& e) {
        std::cerr << "witt: domain error: " << e.what() << "\n";
        return 3;
    } catch (const witt::parse_error& e) {
        std::cerr << "witt: malformed input: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "witt: malformed input: " << e.what() << "\n";
        return 1;
    } catch (const verification_failed& e) {
        std::cerr << "witt: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "witt: internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
