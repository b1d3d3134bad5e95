// pw: command-line frontend over the verification library. Every `verify`
// subcommand exits 0 when the claim holds on the requested cells, 1 with a
// localized counterexample when it does not, and 2 on usage or resource
// errors.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pw/filtration.hpp"
#include "pw/hodge.hpp"
#include "pw/lefschetz.hpp"
#include "pw/local_homology.hpp"
#include "pw/nah.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::optional<int> g, r;
    std::optional<int> g_max, r_max;
    std::string format = "text";
    std::uint64_t seed = 0;
    int samples = 500;
    double tolerance = 1e-9;
    int max_word_bits = 24;
    bool debug_perturb = false;
    double radius = 3.0;
    int random_lattices = 0;
    std::string lattice_file;
    std::string input_file;
    bool random_input = false;

    pw::ResourceGuard guard() const
    {
        pw::ResourceGuard guard;
        guard.max_word_bits = max_word_bits;
        return guard;
    }

    std::vector<std::pair<int, int>> grid() const
    {
        std::vector<std::pair<int, int>> cells;
        if (g && r) {
            cells.emplace_back(*g, *r);
        } else if (g_max || r_max) {
            const int gm = g ? *g : g_max.value_or(1);
            const int rm = r ? *r : r_max.value_or(1);
            const int g_lo = g ? *g : 1;
            const int r_lo = r ? *r : 1;
            for (int gg = g_lo; gg <= gm; ++gg)
                for (int rr = r_lo; rr <= rm; ++rr)
                    cells.emplace_back(gg, rr);
        } else if (g || r) {
            throw CLI::ValidationError("give both --g and --r, or grid bounds");
        } else {
            throw CLI::ValidationError("give --g/--r or --g-max/--r-max");
        }
        for (auto [gg, rr] : cells)
            guard().check_word_bits(gg, rr); // grid must respect the bound
        return cells;
    }
};

void add_shape_flags(CLI::App* cmd, RunConfig& cfg, bool with_grid)
{
    cmd->add_option("--g", cfg.g, "abelian variety dimension g");
    cmd->add_option("--r", cfg.r, "rank r");
    if (with_grid) {
        cmd->add_option("--g-max", cfg.g_max, "sweep g = 1..g-max");
        cmd->add_option("--r-max", cfg.r_max, "sweep r = 1..r-max");
    }
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--max-word-bits", cfg.max_word_bits,
                    "resource bound on 2*g*r (env PW_MAX_WORD_BITS)");
}

void add_perturb_flag(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_flag("--debug-perturb", cfg.debug_perturb,
                  "damage the computed data to demonstrate failure detection");
}

// ------------------------------------------------------------------
// serialization helpers
// ------------------------------------------------------------------

json table_to_json(const pw::BigradedTable& t)
{
    json entries = json::array();
    for (const auto& [kj, d] : t.dims)
        entries.push_back({{"k", kj.first}, {"j", kj.second}, {"dim", d}});
    return json{{"g", t.g}, {"r", t.r}, {"side", pw::to_string(t.side)}, {"entries", entries}};
}

json laurent_to_json(const pw::ZLaurent& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"q", m.first}, {"t", m.second}, {"c", pw::to_longlong_checked(c)}});
    return out;
}

json group_to_json(int degree, const pw::FGAbGroup& grp)
{
    return json{{"i", degree}, {"rank", grp.free_rank}, {"torsion", grp.invariant_factors}};
}

json pair_table_to_json(const pw::PairHomologyTable& t)
{
    json out = json::array();
    for (const auto& [i, grp] : t.groups)
        out.push_back(group_to_json(i, grp));
    return out;
}

json multiset_to_json(const pw::SpectralData& sd)
{
    json points = json::array();
    for (const auto& v : sd) {
        json point = json::array();
        for (Eigen::Index j = 0; j < v.size(); ++j)
            point.push_back({v[j].real(), v[j].imag()});
        points.push_back(point);
    }
    return points;
}

void emit(const json& payload, const RunConfig& cfg)
{
    if (cfg.format == "json")
        std::cout << payload.dump(2) << "\n";
}

// ------------------------------------------------------------------
// input files
// ------------------------------------------------------------------

json parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("cannot open " + path);
    return json::parse(in);
}

pw::Lattice load_lattice(const RunConfig& cfg, int g)
{
    if (cfg.lattice_file.empty())
        return pw::Lattice::standard(g);
    const json doc = parse_file(cfg.lattice_file);
    const int file_g = doc.at("g").get<int>();
    const auto& rows = doc.at("basis");
    if (static_cast<int>(rows.size()) != 2 * file_g)
        throw CLI::ValidationError("lattice file needs 2g basis vectors");
    Eigen::MatrixXcd basis(file_g, 2 * file_g);
    for (int i = 0; i < 2 * file_g; ++i) {
        const auto& vec = rows[i];
        if (static_cast<int>(vec.size()) != file_g)
            throw CLI::ValidationError("each lattice vector must have g entries");
        for (int j = 0; j < file_g; ++j)
            basis(j, i) = std::complex<double>(vec[j][0].get<double>(), vec[j][1].get<double>());
    }
    return pw::Lattice::from_basis(basis);
}

pw::SpectralData load_multiset(const RunConfig& cfg)
{
    if (cfg.random_input) {
        if (!cfg.g || !cfg.r)
            throw CLI::ValidationError("--random needs --g and --r");
        pw::SampleRng rng(cfg.seed, 0);
        pw::SpectralData sd;
        for (int a = 0; a < *cfg.r; ++a) {
            Eigen::VectorXcd v(*cfg.g);
            for (int j = 0; j < *cfg.g; ++j)
                v[j] = std::complex<double>(rng.uniform(-1, 1), rng.uniform(-1, 1));
            sd.push_back(v);
        }
        return sd;
    }
    if (cfg.input_file.empty())
        throw CLI::ValidationError("give --input FILE or --random");
    const json doc = parse_file(cfg.input_file);
    const int g = doc.at("g").get<int>();
    pw::SpectralData sd;
    for (const auto& point : doc.at("points")) {
        if (static_cast<int>(point.size()) != g)
            throw CLI::ValidationError("each point must have g complex entries");
        Eigen::VectorXcd v(g);
        for (int j = 0; j < g; ++j)
            v[j] = std::complex<double>(point[j][0].get<double>(), point[j][1].get<double>());
        sd.push_back(v);
    }
    if (sd.empty())
        throw CLI::ValidationError("empty multiset");
    return sd;
}

// ------------------------------------------------------------------
// subcommand bodies
// ------------------------------------------------------------------

int run_table(const RunConfig& cfg, const std::string& side, const std::string& route)
{
    json all = json::array();
    bool csv_header_done = false;
    for (auto [g, r] : cfg.grid()) {
        pw::BigradedTable t;
        const pw::Side side_enum = side == "betti" ? pw::Side::betti : pw::Side::dolbeault;
        std::string chosen = route;
        if (chosen == "auto")
            chosen = side == "betti" ? "multiset" : "orbit";
        if (chosen == "orbit")
            t = pw::perverse_table(g, r, cfg.guard());
        else if (chosen == "multiset")
            t = pw::weight_table(g, r, cfg.guard());
        else
            t = pw::closed_form_table(g, r, side_enum);
        t.side = side_enum;

        if (cfg.format == "text") {
            std::cout << t.to_text();
        } else if (cfg.format == "csv") {
            std::string block = t.to_csv();
            if (csv_header_done)
                block.erase(0, block.find('\n') + 1);
            csv_header_done = true;
            std::cout << block;
        } else {
            all.push_back(table_to_json(t));
        }
    }
    if (cfg.format == "json")
        std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return kExitPass;
}

int run_hodge_poly(const RunConfig& cfg)
{
    json all = json::array();
    for (auto [g, r] : cfg.grid()) {
        const pw::ZLaurent h = pw::mixed_hodge_polynomial(g, r);
        if (cfg.format == "text")
            std::cout << "H(g=" << g << ", r=" << r << "; q, t) = " << h.to_string() << "\n";
        else
            all.push_back({{"g", g}, {"r", r}, {"coefficients", laurent_to_json(h)}});
    }
    if (cfg.format == "json")
        std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return kExitPass;
}

int run_verify_pw(const RunConfig& cfg)
{
    const std::string claim = "Theorem A: P=W for abelian varieties";
    bool all_pass = true;
    json cells = json::array();
    for (auto [g, r] : cfg.grid()) {
        const pw::PWReport report = pw::verify_p_equals_w(g, r, cfg.guard(), cfg.debug_perturb);
        // the closed form must agree as well; fold it into the same cell
        std::optional<pw::TableMismatch> closed_mismatch;
        if (report.pass)
            closed_mismatch = pw::first_mismatch(report.perverse, pw::closed_form_table(g, r));
        const bool pass = report.pass && !closed_mismatch.has_value();
        all_pass = all_pass && pass;

        json cell{{"g", g}, {"r", r}, {"pass", pass}};
        if (report.mismatch)
            cell["mismatch"] = {{"k", report.mismatch->k},
                                {"j", report.mismatch->j},
                                {"perverse", report.mismatch->lhs},
                                {"weight", report.mismatch->rhs}};
        else if (closed_mismatch)
            cell["mismatch"] = {{"k", closed_mismatch->k},
                                {"j", closed_mismatch->j},
                                {"perverse", closed_mismatch->lhs},
                                {"closed_form", closed_mismatch->rhs}};
        cells.push_back(cell);

        if (cfg.format == "text") {
            std::cout << "g=" << g << " r=" << r << " " << (pass ? "PASS" : "FAIL");
            if (report.mismatch)
                std::cout << "  first mismatch at (k=" << report.mismatch->k
                          << ", j=" << report.mismatch->j << "): perverse "
                          << report.mismatch->lhs << " != weight " << report.mismatch->rhs;
            std::cout << "\n";
        }
    }
    emit(json{{"claim", claim}, {"pass", all_pass}, {"cells", cells}}, cfg);
    if (cfg.format == "text")
        std::cout << claim << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int run_verify_duality(const RunConfig& cfg)
{
    const std::string claim = "Theorem B(i): curious Poincare duality";
    bool all_pass = true;
    json cells = json::array();
    for (auto [g, r] : cfg.grid()) {
        const pw::DualityReport report = pw::verify_curious_duality(g, r, cfg.debug_perturb);
        all_pass = all_pass && report.pass;
        json cell{{"g", g}, {"r", r}, {"pass", report.pass}};
        if (report.offending)
            cell["offending"] = {{"q", report.offending->first.first},
                                 {"t", report.offending->first.second},
                                 {"c", pw::to_longlong_checked(report.offending->second)}};
        cells.push_back(cell);
        if (cfg.format == "text") {
            std::cout << "g=" << g << " r=" << r << " " << (report.pass ? "PASS" : "FAIL");
            if (report.offending)
                std::cout << "  H(q,t) - (qt)^{2gr} H(1/(qt^2),t) has monomial q^"
                          << report.offending->first.first << " t^"
                          << report.offending->first.second << " with coefficient "
                          << report.offending->second.get_str();
            std::cout << "\n";
        }
    }
    emit(json{{"claim", claim}, {"pass", all_pass}, {"cells", cells}}, cfg);
    if (cfg.format == "text")
        std::cout << claim << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int run_verify_hodge_tate(const RunConfig& cfg)
{
    const std::string claim = "Theorem B(i): the character variety is of Hodge-Tate type";
    bool all_pass = true;
    json cells = json::array();
    for (auto [g, r] : cfg.grid()) {
        const pw::HodgeTateReport report =
            pw::hodge_tate_check(g, r, cfg.guard(), cfg.debug_perturb);
        all_pass = all_pass && report.pass;
        cells.push_back({{"g", g},
                         {"r", r},
                         {"pass", report.pass},
                         {"classes", report.classes},
                         {"odd_weight_classes", report.odd_weight_classes}});
        if (cfg.format == "text")
            std::cout << "g=" << g << " r=" << r << " " << (report.pass ? "PASS" : "FAIL")
                      << "  classes=" << report.classes
                      << " odd-weight=" << report.odd_weight_classes << "\n";
    }
    emit(json{{"claim", claim}, {"pass", all_pass}, {"cells", cells}}, cfg);
    if (cfg.format == "text")
        std::cout << claim << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int run_verify_lefschetz(const RunConfig& cfg)
{
    const std::string claim = "Theorem B(ii): curious hard Lefschetz";
    bool all_pass = true;
    json cells = json::array();
    for (auto [g, r] : cfg.grid()) {
        const pw::HardLefschetzReport report =
            pw::verify_hard_lefschetz(g, r, cfg.guard(), cfg.debug_perturb);
        all_pass = all_pass && report.pass;
        json levels = json::array();
        for (const auto& level : report.levels)
            levels.push_back({{"k", level.k},
                              {"source_dim", level.source_dim},
                              {"target_dim", level.target_dim},
                              {"rank", level.rank},
                              {"pass", level.pass}});
        cells.push_back({{"g", g}, {"r", r}, {"pass", report.pass}, {"levels", levels}});
        if (cfg.format == "text") {
            std::cout << "g=" << g << " r=" << r << " " << (report.pass ? "PASS" : "FAIL") << "\n";
            for (const auto& level : report.levels)
                std::cout << "  L^" << level.k << ": H^" << (g * r - level.k) << " -> H^"
                          << (g * r + level.k) << "  rank " << level.rank << " of "
                          << level.source_dim << " -> " << level.target_dim << "  "
                          << (level.pass ? "ok" : "FAIL") << "\n";
        }
    }
    emit(json{{"claim", claim}, {"pass", all_pass}, {"cells", cells}}, cfg);
    if (cfg.format == "text")
        std::cout << claim << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int run_verify_manifold(const RunConfig& cfg)
{
    const std::string claim =
        "Remark: the sphere quotient is not a topological manifold once g, r >= 2";
    bool all_pass = true;
    json cells = json::array();
    for (auto [g, r] : cfg.grid()) {
        const pw::ManifoldReport report = pw::manifold_obstruction(g, r, cfg.debug_perturb);
        all_pass = all_pass && report.pass;
        json cell{{"g", g},
                  {"r", r},
                  {"pass", report.pass},
                  {"vacuous", report.vacuous},
                  {"is_obstructed", report.is_obstructed}};
        if (!report.vacuous) {
            cell["local_homology"] = pair_table_to_json(report.local_homology);
            cell["manifold_model"] = pair_table_to_json(report.manifold_model);
        }
        cells.push_back(cell);
        if (cfg.format == "text") {
            std::cout << "g=" << g << " r=" << r << " " << (report.pass ? "PASS" : "FAIL");
            if (report.vacuous) {
                std::cout << "  r=1: no stabilizer point, test vacuous\n";
            } else {
                std::cout << (report.is_obstructed ? "  not a manifold" : "  manifold point")
                          << "\n";
                std::cout << "  local homology H_i(Z, Z - p):\n";
                for (const auto& [i, grp] : report.local_homology.groups)
                    std::cout << "    " << i << ": " << grp.to_string() << "\n";
            }
        }
    }
    emit(json{{"claim", claim}, {"pass", all_pass}, {"cells", cells}}, cfg);
    if (cfg.format == "text")
        std::cout << claim << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int run_verify_sphere(const RunConfig& cfg)
{
    const std::string claim = "Remark: the sphere quotient is a rational homology sphere";
    bool all_pass = true;
    json cells = json::array();
    for (auto [g, r] : cfg.grid()) {
        const pw::RationalSphereReport report = pw::rational_sphere_check(g, r, cfg.debug_perturb);
        all_pass = all_pass && report.pass;
        json dims = json::array();
        for (const auto& [i, d] : report.rational_dims)
            dims.push_back({{"i", i}, {"dim", d}});
        cells.push_back({{"g", g},
                         {"r", r},
                         {"pass", report.pass},
                         {"determinant_one", report.determinant_one},
                         {"dims", dims}});
        if (cfg.format == "text") {
            std::cout << "g=" << g << " r=" << r << " " << (report.pass ? "PASS" : "FAIL")
                      << "  H_*(S^" << 2 * g * r - 1 << "/S_" << r << "; Q):";
            for (const auto& [i, d] : report.rational_dims)
                std::cout << " Q@" << i;
            std::cout << "\n";
        }
    }
    emit(json{{"claim", claim}, {"pass", all_pass}, {"cells", cells}}, cfg);
    if (cfg.format == "text")
        std::cout << claim << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int run_nah(const RunConfig& cfg, bool diagram)
{
    const std::string claim = diagram
        ? "NAH correspondence: the spectral-data square commutes"
        : "NAH correspondence: polar decomposition roundtrip";
    if (!cfg.g)
        throw CLI::ValidationError("--g is required");
    const int g = *cfg.g;
    bool all_pass = true;
    json runs = json::array();

    std::vector<std::pair<std::string, pw::Lattice>> lattices;
    lattices.emplace_back(cfg.lattice_file.empty() ? "standard" : cfg.lattice_file,
                          load_lattice(cfg, g));
    pw::SampleRng lattice_rng(cfg.seed, 0xA77);
    for (int i = 0; i < cfg.random_lattices; ++i)
        lattices.emplace_back("random#" + std::to_string(i), pw::random_lattice(g, lattice_rng));

    for (const auto& [name, lat] : lattices) {
        double max_residual = 0.0;
        bool pass = true;
        int samples = 0;
        if (diagram) {
            pw::DiagramOptions opt;
            opt.r = cfg.r.value_or(1);
            opt.samples = cfg.samples;
            opt.seed = cfg.seed;
            opt.tolerance = cfg.tolerance;
            opt.log_radius_max = cfg.radius;
            opt.debug_perturb = cfg.debug_perturb;
            const pw::DiagramReport report = pw::verify_nah_diagram(lat, opt);
            max_residual = report.max_residual;
            pass = report.pass;
            samples = report.samples;
        } else {
            pw::RoundtripOptions opt;
            opt.samples = cfg.samples;
            opt.seed = cfg.seed;
            opt.tolerance = cfg.tolerance;
            opt.log_radius_max = cfg.radius;
            opt.debug_perturb = cfg.debug_perturb;
            const pw::RoundtripReport report = pw::verify_nah_roundtrip(lat, opt);
            max_residual = report.max_residual;
            pass = report.pass;
            samples = report.samples;
        }
        all_pass = all_pass && pass;
        runs.push_back({{"lattice", name},
                        {"g", g},
                        {"r", cfg.r.value_or(1)},
                        {"samples", samples},
                        {"max_residual", max_residual},
                        {"pass", pass}});
        if (cfg.format == "text")
            std::cout << "lattice " << name << ": max residual " << max_residual << " over "
                      << samples << " samples  " << (pass ? "PASS" : "FAIL") << "\n";
    }
    emit(json{{"claim", claim}, {"pass", all_pass}, {"runs", runs}}, cfg);
    if (cfg.format == "text")
        std::cout << claim << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int run_sd_embed(const RunConfig& cfg)
{
    const pw::SpectralData sd = load_multiset(cfg);
    const pw::HitchinImage image = pw::hitchin_embedding(sd);
    if (cfg.format == "text") {
        for (const auto& tensor : image.sigma) {
            std::cout << "sigma_" << tensor.degree << ":";
            for (const auto& [mono, c] : tensor.coefficients) {
                std::cout << "  [";
                for (std::size_t j = 0; j < mono.size(); ++j)
                    std::cout << (j ? "," : "") << mono[j];
                std::cout << "] = " << c.real() << (c.imag() < 0 ? " - " : " + ")
                          << std::abs(c.imag()) << "i";
            }
            std::cout << "\n";
        }
    } else {
        json sigma = json::array();
        for (const auto& tensor : image.sigma) {
            json coeffs = json::array();
            for (const auto& [mono, c] : tensor.coefficients)
                coeffs.push_back({{"exponents", mono}, {"re", c.real()}, {"im", c.imag()}});
            sigma.push_back({{"degree", tensor.degree}, {"coefficients", coeffs}});
        }
        std::cout << json{{"g", image.g}, {"r", image.r}, {"sigma", sigma}}.dump(2) << "\n";
    }
    return kExitPass;
}

int run_sd_retract(const RunConfig& cfg)
{
    const pw::SpectralData sd = load_multiset(cfg);
    const pw::SpectralData out = pw::retract_to_sphere_quotient(sd);
    if (cfg.format == "text") {
        for (const auto& v : out) {
            for (Eigen::Index j = 0; j < v.size(); ++j)
                std::cout << (j ? "  " : "") << v[j].real() << (v[j].imag() < 0 ? " - " : " + ")
                          << std::abs(v[j].imag()) << "i";
            std::cout << "\n";
        }
    } else {
        std::cout << json{{"points", multiset_to_json(out)}}.dump(2) << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    if (const char* env = std::getenv("PW_MAX_WORD_BITS"))
        cfg.max_word_bits = std::atoi(env);

    CLI::App app{"verification engine for the moduli cohomology of abelian varieties"};
    app.require_subcommand(1);

    std::string table_side = "dolbeault";
    std::string table_route = "auto";
    CLI::App* table = app.add_subcommand("table", "print a filtration dimension table");
    add_shape_flags(table, cfg, true);
    add_common_flags(table, cfg);
    table->add_option("--side", table_side, "which filtration to tabulate")
        ->check(CLI::IsMember({"dolbeault", "betti"}));
    table->add_option("--route", table_route, "computation route")
        ->check(CLI::IsMember({"auto", "orbit", "multiset", "closed-form"}));

    CLI::App* hodge = app.add_subcommand("hodge-poly", "print the mixed Hodge polynomial");
    add_shape_flags(hodge, cfg, true);
    add_common_flags(hodge, cfg);

    CLI::App* verify = app.add_subcommand("verify", "machine-check one of the statements");
    verify->require_subcommand(1);
    CLI::App* v_pw = verify->add_subcommand("p-equals-w", "perverse = weight filtration");
    CLI::App* v_cd = verify->add_subcommand("curious-duality", "curious Poincare duality");
    CLI::App* v_ht = verify->add_subcommand("hodge-tate", "Hodge-Tate support");
    CLI::App* v_hl = verify->add_subcommand("hard-lefschetz", "curious hard Lefschetz");
    CLI::App* v_mf = verify->add_subcommand("manifold", "sphere-quotient manifold obstruction");
    CLI::App* v_rs = verify->add_subcommand("rational-sphere", "rational homology sphere");
    for (CLI::App* cmd : {v_pw, v_cd, v_ht, v_hl, v_mf, v_rs}) {
        add_shape_flags(cmd, cfg, true);
        add_common_flags(cmd, cfg);
        add_perturb_flag(cmd, cfg);
    }

    CLI::App* nah = app.add_subcommand("nah", "the explicit correspondence");
    nah->require_subcommand(1);
    CLI::App* n_rt = nah->add_subcommand("roundtrip", "polar decomposition roundtrip residuals");
    CLI::App* n_dg = nah->add_subcommand("diagram", "commutativity of the spectral-data square");
    for (CLI::App* cmd : {n_rt, n_dg}) {
        add_shape_flags(cmd, cfg, false);
        add_common_flags(cmd, cfg);
        add_perturb_flag(cmd, cfg);
        cmd->add_option("--samples", cfg.samples, "number of random samples");
        cmd->add_option("--seed", cfg.seed, "PRNG seed");
        cmd->add_option("--tolerance", cfg.tolerance, "pass threshold");
        cmd->add_option("--radius", cfg.radius, "log-magnitude sampling radius");
        cmd->add_option("--lattice", cfg.lattice_file, "lattice JSON file");
        cmd->add_option("--lattices", cfg.random_lattices, "extra random lattices");
    }

    CLI::App* sd = app.add_subcommand("sd", "spectral data utilities");
    sd->require_subcommand(1);
    CLI::App* s_em = sd->add_subcommand("embed", "elementary-symmetric embedding of a multiset");
    CLI::App* s_rt = sd->add_subcommand("retract", "ray retraction onto the sphere quotient");
    for (CLI::App* cmd : {s_em, s_rt}) {
        add_shape_flags(cmd, cfg, false);
        add_common_flags(cmd, cfg);
        cmd->add_option("--input", cfg.input_file, "multiset JSON file");
        cmd->add_flag("--random", cfg.random_input, "draw a random multiset instead");
        cmd->add_option("--seed", cfg.seed, "PRNG seed for --random");
    }

    try {
        app.parse(argc, argv);

        if (*table)
            return run_table(cfg, table_side, table_route);
        if (*hodge)
            return run_hodge_poly(cfg);
        if (*v_pw)
            return run_verify_pw(cfg);
        if (*v_cd)
            return run_verify_duality(cfg);
        if (*v_ht)
            return run_verify_hodge_tate(cfg);
        if (*v_hl)
            return run_verify_lefschetz(cfg);
        if (*v_mf)
            return run_verify_manifold(cfg);
        if (*v_rs)
            return run_verify_sphere(cfg);
        if (*n_rt)
            return run_nah(cfg, false);
        if (*n_dg)
            return run_nah(cfg, true);
        if (*s_em)
            return run_sd_embed(cfg);
        if (*s_rt)
            return run_sd_retract(cfg);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const pw::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
