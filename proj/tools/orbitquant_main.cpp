// orbitquant: batch front end for the orbit-quantization library.
//
// Subcommands:
//   catalog list | catalog show <id>      built-in group definitions
//   orbits <group> --point a,b,...        coadjoint-orbit report at a functional
//   rep <group> --sigma --tau             representation chart diagnostics
//   quantize --group --scheme --symbol    quantize a symbol, export the result
//   symclass <group>                      Taylor polynomials / Rockland data
//   verify --group --suite                identity-check suites, JSON report
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 internal error.

#include "CLI11.hpp"
#include "json.hpp"

#include "orbitquant/catalog.hpp"
#include "orbitquant/orbits.hpp"
#include "orbitquant/quantize.hpp"
#include "orbitquant/symclasses.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace orbitquant;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Group references
// ---------------------------------------------------------------------------

// Accepted forms: "<id>", "<id>:<value>", "<id>:<name>=<value>". Aliases:
// g4delta -> center2 (parameter delta), n5_1 -> dim5a, n5_2 -> dim5b.
std::optional<LieAlgebraSpec> parse_group_ref(const std::string& ref) {
    std::string id = ref, param;
    if (auto colon = ref.find(':'); colon != std::string::npos) {
        id = ref.substr(0, colon);
        param = ref.substr(colon + 1);
        if (auto eq = param.rfind('='); eq != std::string::npos)
            param = param.substr(eq + 1);
    }
    if (id == "g4delta") id = "center2";
    if (id == "n5_1") id = "dim5a";
    if (id == "n5_2") id = "dim5b";
    return catalog_make(id, param);
}

std::string poly_to_string(const PolyQ& p, const std::vector<std::string>& labels) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            os << "*" << (k < labels.size() ? labels[k] : "x" + std::to_string(k));
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        out << j.dump(2) << "\n";
    }
}

std::vector<Rat> parse_point(const std::string& s, int dim) {
    std::vector<Rat> p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(parse_rational(tok));
    if (int(p.size()) != dim)
        throw CLI::ValidationError("--point needs " + std::to_string(dim) +
                                   " comma-separated rationals");
    return p;
}

// Symbol spec "gauss:a,b,c;a,b,c;..." — one (a,b,c) triple per axis, meaning
// the factor exp(-a (x - c)^2 + i b x).
GaussPoly parse_symbol(const std::string& s, int expected_dim) {
    auto colon = s.find(':');
    if (colon == std::string::npos || s.substr(0, colon) != "gauss")
        throw CLI::ValidationError("--symbol must look like gauss:a,b,c;a,b,c");
    std::vector<GaussAxis> axes;
    std::stringstream ss(s.substr(colon + 1));
    std::string axis;
    while (std::getline(ss, axis, ';')) {
        double v[3] = {0, 0, 0};
        std::stringstream as(axis);
        std::string tok;
        for (int k = 0; k < 3 && std::getline(as, tok, ','); ++k) v[k] = std::stod(tok);
        axes.push_back({v[0], v[1], v[2]});
    }
    if (int(axes.size()) != expected_dim)
        throw CLI::ValidationError("--symbol needs " + std::to_string(expected_dim) +
                                   " axes for this scheme");
    return gauss_nd(axes);
}

int parse_threads() {
    const char* env = std::getenv("ORBITQUANT_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n < 1) throw CLI::ValidationError("ORBITQUANT_THREADS must be >= 1");
    return n; // computations are deterministic single-pass; the cap is honored
}

// ---------------------------------------------------------------------------
// verify: named identity checks
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    double max_rel_error = 0;
    double tolerance = 0;
    bool pass = false;
};

struct VerifyContext {
    LieAlgebraSpec g;
    double delta = 1.0;
    unsigned seed = 1;
    int m = 128;
    double l = 10.0;
    std::vector<CheckResult> results;

    void record(const std::string& name, double err, double tol) {
        results.push_back({name, err, tol, err < tol});
    }
    // for negative controls: the measured value must stay ABOVE the threshold
    void record_at_least(const std::string& name, double val, double thr) {
        results.push_back({name, val, thr, val > thr});
    }
};

GaussPoly random_symbol(std::mt19937& rng, int dim, double bc_range, double amin) {
    std::uniform_real_distribution<double> ua(amin, amin + 0.9), ubc(-bc_range, bc_range);
    std::vector<GaussAxis> axes;
    for (int k = 0; k < dim; ++k) axes.push_back({ua(rng), ubc(rng), ubc(rng)});
    return gauss_nd(axes);
}

Symbol2 as_symbol2(const GaussPoly& f) {
    return [f](double r, double t) { return f.eval({r, t}); };
}

GaussPoly conj_gp(const GaussPoly& f) {
    GaussPoly g = f;
    PolyC p;
    for (const auto& [e, c] : f.poly.terms) p.add_term(e, std::conj(c));
    g.poly = p;
    for (auto& ax : g.ax) ax.b = -ax.b;
    return g;
}

void suite_fourier(VerifyContext& vc) {
    std::mt19937 rng(vc.seed);
    Grid1D g{vc.m, vc.l};
    RepChart rc{RepGroupKind::Center2, vc.delta, 0.9, 0.4, g};
    double err = 0;
    for (int rep = 0; rep < 3; ++rep) {
        GaussPoly u = random_symbol(rng, 4, 0.5, 0.5);
        GridOperator direct = group_fourier(rc, u);
        GaussPoly uhat = u.fourier_all(false);
        GridOperator weyl = weyl_lambda(g, rc.lambda(), [&](double eta, double v) {
            return uhat.eval({eta, v, rc.sigma, rc.tau});
        });
        double scale = std::max(direct.a.cwiseAbs().maxCoeff(), 1e-12);
        err = std::max(err, (direct.a - weyl.a).cwiseAbs().maxCoeff() / scale);
    }
    vc.record("group-fourier-matches-weyl-route", err, 1e-6);

    GaussPoly usym = gauss_nd({{0.8, 0, 0}, {1.0, 0, 0}, {0.7, 0, 0}, {1.2, 0, 0}});
    GridOperator op = group_fourier(rc, usym);
    vc.record("group-fourier-symmetric-function-self-adjoint",
              (op.a - op.a.adjoint()).norm() / op.a.norm(), 1e-8);

    GridOperator idop = weyl_lambda(g, 1.0, [](double, double) { return cd(1); });
    vc.record("weyl-constant-symbol-is-identity",
              (idop.a - CMat::Identity(g.m, g.m)).norm(), 1e-10);
}

void suite_pedersen(VerifyContext& vc) {
    std::mt19937 rng(vc.seed + 1);
    Grid1D g{vc.m, vc.l};
    double err = 0;
    for (double lam : {0.5, -0.5, 1.0, 2.0}) {
        RepChart rc{RepGroupKind::Center2, vc.delta, lam / 2,
                    lam / (2 * vc.delta), g};
        for (int rep = 0; rep < 3; ++rep) {
            GaussPoly psi = random_symbol(rng, 2, 0.4, 0.9);
            GridOperator op = pedersen_quantize(rc, as_symbol2(psi));
            cd expect = psi.integral() / (2 * M_PI * std::abs(lam));
            err = std::max(err, std::abs(op.trace() - expect) /
                                    (1 + std::abs(expect)));
        }
    }
    vc.record("pedersen-trace-formula", err, 1e-6);

    {
        Grid1D gp{64, vc.l}, grho{24, 3.0}, gtheta{24, 3.0};
        RepChart rc{RepGroupKind::Center2, vc.delta, 1.0, 0.0, g};
        GaussPoly psi = random_symbol(rng, 2, 0.5, 0.5);
        CMat s = pedersen_quantize(rc, as_symbol2(psi)).a;
        CMat back = pedersen_dequantize(rc, s, gp, grho, gtheta);
        double e = 0, scale = 0;
        for (int ir = 0; ir < grho.m; ++ir)
            for (int it = 0; it < gtheta.m; ++it) {
                cd ref = psi.eval({grho.point(ir), gtheta.point(it)});
                e = std::max(e, std::abs(back(ir, it) - ref));
                scale = std::max(scale, std::abs(ref));
            }
        vc.record("pedersen-quantize-dequantize-round-trip", e / scale, 1e-6);
    }

    {
        RepChart rc{RepGroupKind::Center2, vc.delta, 0.5, 0.5 / vc.delta, g};
        double e = 0;
        for (int rep = 0; rep < 4; ++rep) {
            GaussPoly a = random_symbol(rng, 2, 0.6, 0.5);
            GaussPoly b = random_symbol(rng, 2, 0.6, 0.5);
            CMat pa = principal_band(pedersen_quantize(rc, as_symbol2(a)).a);
            CMat pb = principal_band(pedersen_quantize(rc, as_symbol2(b)).a);
            cd lhs = (pa * pb).trace();
            cd rhs = (a * b).integral() / (2 * M_PI * std::abs(rc.lambda()));
            e = std::max(e, std::abs(lhs - rhs) / (1 + std::abs(rhs)));
        }
        vc.record("pedersen-trace-duality", e, 1e-6);
    }

    {
        RepChart rc{RepGroupKind::Center2, vc.delta, 0.5, 0.5 / vc.delta, g};
        Grid1D gp{vc.m, M_PI / (g.h() * std::abs(rc.lambda()))};
        CMat id = CMat::Identity(g.m, g.m);
        double hl = g.h() * rc.lambda(), e = 0;
        for (double rho : {-2.0, 0.0, 1.5})
            for (double theta : {-8 * hl, 0.0, 3 * hl})
                e = std::max(e, std::abs(pedersen_dequantize_at(rc, id, gp, rho,
                                                                theta) -
                                         cd(1)));
        vc.record("identity-dequantizes-to-constant-one", e, 1e-9);
    }
}

void suite_wtransform(VerifyContext& vc) {
    // central frequencies reach |lambda| ~ 5 under the b2 profile; the
    // representation grid needs h < 0.2 to resolve the kernel midpoints
    Grid1D g{128, vc.l};
    GaussPoly b1 = gauss_nd({{1.0, 0, 0.2}, {0.9, 0, -0.1}});
    GaussPoly b2 = gauss_nd({{2.5, 0, 3.0}, {2.5, 0, 0}});
    GaussPoly b4 =
        gauss_nd({{1.0, 0, 0.2}, {0.9, 0, -0.1}, {2.5, 0, 3.0}, {2.5, 0, 0}});
    SeparableSection sec(as_symbol2(b1), as_symbol2(b2), vc.delta, g);
    ZGrid zg{Grid1D{64, 8.0}, Grid1D{64, 8.0}, 0.25};

    GaussPoly binv = b4.fourier_all(true);
    std::mt19937 rng(vc.seed + 2);
    std::uniform_real_distribution<double> ux(-0.8, 0.8);
    double scale = std::abs(binv.eval({0, 0, 0, 0})), err = 0;
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> x = {ux(rng), ux(rng), ux(rng), ux(rng)};
        cd got = inverse_group_fourier(zg, vc.delta, g, std::ref(sec), x);
        err = std::max(err, std::abs(got - binv.eval(x)) / scale);
    }
    vc.record("quantized-section-inverts-to-euclidean-transform", err, 1e-3);

    // difference-operator intertwining: quantizing Gamma_q B equals the group
    // Fourier transform of q times the inverse transform of B
    double ierr = 0;
    for (auto [s, t] : {std::pair<double, double>{3.4, 0.3}, {2.6, -0.4}}) {
        RepChart rc{RepGroupKind::Center2, vc.delta, s, t, g};
        for (unsigned j : {0u, 2u}) {
            PolyQ q = PolyQ::variable(j);
            GaussPoly gb = gamma_diff_closed(q, b4);
            GaussPoly orbit = fix_trailing_axes(gb, {s, t});
            CMat lhs = weyl_lambda(g, rc.lambda(), [&](double r, double th) {
                           return orbit.eval({r, th});
                       }).a;
            CMat rhs = group_fourier(rc, binv.mul_poly(to_polyc(q))).a;
            ierr = std::max(ierr, (lhs - rhs).cwiseAbs().maxCoeff() /
                                      rhs.cwiseAbs().maxCoeff());
        }
    }
    vc.record("difference-operator-intertwining", ierr, 1e-4);
}

void suite_kernels(VerifyContext& vc) {
    Grid1D g{vc.m, vc.l};
    GaussPoly b1 = gauss_nd({{1.0, 0, 0.1}, {0.9, 0, -0.2}});
    GaussPoly b2 = gauss_nd({{2.5, 0, 3.0}, {2.5, 0, 0}});
    GaussPoly b4 =
        gauss_nd({{1.0, 0, 0.1}, {0.9, 0, -0.2}, {2.5, 0, 3.0}, {2.5, 0, 0}});
    auto amp = [](const std::vector<double>& x) {
        double n2 = 0;
        for (double v : x) n2 += v * v;
        return std::exp(-0.3 * n2);
    };
    GStarSymbol f = [&](const std::vector<double>& x) { return b4.scaled(amp(x)); };
    SeparableSection sec(as_symbol2(b1), as_symbol2(b2), vc.delta, g);
    OperatorSymbol sig = [&](const std::vector<double>& x, double s, double t) {
        return CMat(amp(x) * sec(s, t));
    };
    ZGrid zg{Grid1D{48, 8.0}, Grid1D{48, 8.0}, 0.25};
    std::mt19937 rng(vc.seed + 3);
    std::uniform_real_distribution<double> ux(-0.6, 0.6);
    double scale = 0, err = 0;
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<double> x = {ux(rng), ux(rng), ux(rng), ux(rng)};
        std::vector<double> y = {ux(rng), ux(rng), ux(rng), ux(rng)};
        cd ref = op_g_gstar_kernel(vc.g, f, x, y);
        err = std::max(err, std::abs(op_group_kernel(zg, vc.delta, g, vc.g, sig,
                                                     x, y) -
                                     ref));
        scale = std::max(scale, std::abs(ref));
    }
    vc.record("scalar-vs-operator-symbol-kernels", err / scale, 1e-3);

    // x-independent scalar symbol acts by right convolution
    GaussPoly bconv =
        gauss_nd({{1.0, 0, 0.1}, {0.9, 0, 0}, {1.2, 0, 1.0}, {1.1, 0, 0}});
    GStarSymbol fc = [&](const std::vector<double>&) { return bconv; };
    GaussPoly w = bconv.fourier_all(true);
    GridND ygrid{{Grid1D{10, 4.0}, Grid1D{10, 4.0}, Grid1D{10, 4.0}, Grid1D{10, 4.0}}};
    std::vector<cd> u(ygrid.total());
    GaussPoly uf = gauss_nd({{1.0, 0, 0}, {1.1, 0, 0.1}, {0.9, 0, 0}, {1.2, 0, 0}});
    for (long i = 0; i < ygrid.total(); ++i) u[i] = uf.eval(ygrid.point(i));
    std::vector<double> x = {0.3, -0.2, 0.1, 0.4};
    cd via_op = op_g_gstar_apply(vc.g, fc, x, ygrid, u);
    cd via_conv = conv_right(vc.g, ygrid, u,
                             [&](const std::vector<double>& z) { return w.eval(z); },
                             x);
    vc.record("invariant-symbol-acts-by-convolution",
              std::abs(via_op - via_conv) / (1 + std::abs(via_conv)), 1e-8);
}

void suite_plancherel(VerifyContext& vc) {
    Grid1D g{64, vc.l};
    GaussPoly u = gauss_nd({{1.0, 0, 0.1}, {0.9, 0, -0.1}, {0.15, 3.0, 0}, {0.15, 0, 0}});
    double norm2 = std::abs((u * conj_gp(u)).integral());
    ZGrid zg{Grid1D{48, 8.0}, Grid1D{48, 8.0}, 0.25};
    std::map<std::pair<int, int>, CMat> field;
    auto b = [&](double sigma, double tau) -> CMat {
        auto key = std::make_pair(int(std::lround((sigma + 8.0) / zg.gs.h())),
                                  int(std::lround((tau + 8.0) / zg.gt.h())));
        auto it = field.find(key);
        if (it == field.end()) {
            RepChart rc{RepGroupKind::Center2, vc.delta, sigma, tau, g};
            it = field.emplace(key, group_fourier(rc, u).a).first;
        }
        return it->second;
    };
    double got = plancherel_norm2(zg, vc.delta, b);
    vc.record("plancherel-identity", std::abs(got - norm2) / norm2, 1e-3);

    std::mt19937 rng(vc.seed + 4);
    std::uniform_real_distribution<double> ux(-0.7, 0.7);
    double err = 0, scale = std::abs(u.eval({0.1, -0.1, 0, 0}));
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> x = {ux(rng), ux(rng), ux(rng), ux(rng)};
        err = std::max(err, std::abs(inverse_group_fourier(zg, vc.delta, g, b, x) -
                                     u.eval(x)));
    }
    vc.record("plancherel-inversion", err / scale, 1e-3);

    // function whose Euclidean transform vanishes on one orbit family has a
    // vanishing group Fourier transform there (and not elsewhere)
    double sig0 = 3.0, tau0 = 0.0;
    PolyC factor;
    factor.add_term({0, 0, 1, 0}, cd(1));
    factor.add_term({}, cd(-sig0, 0));
    GaussPoly b4 =
        gauss_nd({{1.0, 0, 0.2}, {0.9, 0, -0.1}, {2.5, 0, 3.0}, {2.5, 0, 0}});
    GaussPoly v = b4.mul_poly(factor).fourier_all(true);
    RepChart rc0{RepGroupKind::Center2, vc.delta, sig0, tau0, g};
    RepChart rc1{RepGroupKind::Center2, vc.delta, sig0 + 0.4, tau0, g};
    double hs0 = group_fourier(rc0, v).a.norm();
    double hs1 = group_fourier(rc1, v).a.norm();
    vc.record("vanishing-restriction-kills-group-fourier", hs0 / hs1, 1e-5);
    GaussPoly vbad = b4.fourier_all(true); // negative control: no vanishing
    double hsb = group_fourier(rc0, vbad).a.norm();
    vc.record_at_least("negative-control-ratio-stays-large",
                       hsb / group_fourier(rc1, vbad).a.norm(), 1e-3);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit quantization toolkit"};
    app.require_subcommand(1);
    std::string json_path;

    // ---- catalog ----
    auto* cat = app.add_subcommand("catalog", "built-in group definitions");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list catalog ids");
    std::string show_id;
    auto* cat_show = cat->add_subcommand("show", "export one definition");
    cat_show->add_option("id", show_id, "catalog id or group ref")->required();
    cat_show->add_option("--json", json_path, "write JSON to file");

    // ---- orbits ----
    std::string orb_group, orb_point;
    auto* orb = app.add_subcommand("orbits", "coadjoint-orbit report");
    orb->add_option("group", orb_group)->required();
    orb->add_option("--point", orb_point, "functional, comma-separated rationals")
        ->required();
    orb->add_option("--json", json_path);

    // ---- rep ----
    std::string rep_group;
    double rep_sigma = 1.0, rep_tau = 0.0, rep_l = 10.0;
    int rep_m = 128, rep_count = 8;
    auto* repc = app.add_subcommand("rep", "representation chart diagnostics");
    repc->add_option("group", rep_group)->required();
    repc->add_option("--sigma", rep_sigma);
    repc->add_option("--tau", rep_tau);
    repc->add_option("-M,--grid-points", rep_m);
    repc->add_option("-L,--half-width", rep_l);
    repc->add_option("--levels", rep_count);
    repc->add_option("--json", json_path);

    // ---- quantize ----
    std::string qz_group, qz_scheme = "pedersen", qz_symbol, qz_csv;
    double qz_sigma = 1.0, qz_tau = 0.0, qz_l = 10.0;
    int qz_m = 128;
    auto* qz = app.add_subcommand("quantize", "quantize a Gaussian symbol");
    qz->add_option("--group", qz_group)->required();
    qz->add_option("--scheme", qz_scheme)
        ->check(CLI::IsMember({"weyl", "pedersen", "kn"}));
    qz->add_option("--symbol", qz_symbol, "gauss:a,b,c;a,b,c;...")->required();
    qz->add_option("--sigma", qz_sigma);
    qz->add_option("--tau", qz_tau);
    qz->add_option("-M,--grid-points", qz_m);
    qz->add_option("-L,--half-width", qz_l);
    qz->add_option("--csv", qz_csv, "write matrix / kernel samples as CSV");
    qz->add_option("--json", json_path);

    // ---- symclass ----
    std::string sc_group;
    int sc_maxdeg = 4;
    auto* sc = app.add_subcommand("symclass", "Taylor polynomials / Rockland data");
    sc->add_option("group", sc_group)->required();
    sc->add_option("--max-degree", sc_maxdeg)->check(CLI::Range(0, 8));
    sc->add_option("--json", json_path);

    // ---- verify ----
    std::string vf_group = "g4delta:delta=1", vf_suite = "all";
    unsigned vf_seed = 1;
    int vf_m = 128;
    double vf_l = 10.0;
    auto* vf = app.add_subcommand("verify", "run identity-check suites");
    vf->add_option("--group", vf_group);
    vf->add_option("--suite", vf_suite)
        ->check(CLI::IsMember(
            {"fourier", "pedersen", "wtransform", "kernels", "plancherel", "all"}));
    vf->add_option("--seed", vf_seed);
    vf->add_option("-M,--grid-points", vf_m);
    vf->add_option("-L,--half-width", vf_l);
    vf->add_option("--json", json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        parse_threads();

        if (cat_list->parsed()) {
            json j = {{"schema", 1}, {"entries", json::array()}};
            for (const auto& e : catalog_entries())
                j["entries"].push_back({{"id", e.id},
                                        {"description", e.description},
                                        {"parameter", e.has_param ? e.param_name : ""}});
            emit(j, json_path);
            return 0;
        }

        if (cat_show->parsed()) {
            auto g = parse_group_ref(show_id);
            if (!g) {
                std::cerr << "unknown catalog id: " << show_id << "\n";
                return 2;
            }
            json br = json::array();
            for (int i = 0; i < g->dim; ++i)
                for (int j = i + 1; j < g->dim; ++j)
                    for (int k = 0; k < g->dim; ++k)
                        if (g->c[i][j][k] != Rat(0))
                            br.push_back({{"i", i},
                                          {"j", j},
                                          {"k", k},
                                          {"c", rat_to_string(g->c[i][j][k])}});
            json j = {{"schema", 1},     {"name", g->name},
                      {"dim", g->dim},   {"step", g->step},
                      {"weights", g->weights}, {"labels", g->labels},
                      {"jh_order", g->jh_order}, {"brackets", br}};
            emit(j, json_path);
            return 0;
        }

        if (orb->parsed()) {
            auto g = parse_group_ref(orb_group);
            if (!g) {
                std::cerr << "unknown group: " << orb_group << "\n";
                return 2;
            }
            auto u = parse_point(orb_point, g->dim);
            OrbitReport r = orbit_report(*g, u);
            json j = {{"schema", 1},
                      {"group", g->name},
                      {"point", json::array()},
                      {"is_flat", r.flat},
                      {"orbit_dim", 2 * r.d},
                      {"jump_indices", r.jump_indices}};
            for (const auto& c : r.point) j["point"].push_back(rat_to_string(c));
            if (r.pf) {
                j["Pf"] = rat_to_string(*r.pf);
                j["Pf_value"] = to_double(*r.pf);
            }
            emit(j, json_path);
            return 0;
        }

        if (repc->parsed()) {
            auto g = parse_group_ref(rep_group);
            if (!g || (g->name != "heis1" && g->name.substr(0, 7) != "center2")) {
                std::cerr << "rep: group must carry a catalog representation\n";
                return 2;
            }
            bool heis = g->name == "heis1";
            double delta = heis ? 0.0 : to_double(g->c[0][1][3]);
            RepChart rc{heis ? RepGroupKind::Heis : RepGroupKind::Center2, delta,
                        rep_sigma, rep_tau, Grid1D{rep_m, rep_l}};
            json j = {{"schema", 1},
                      {"group", g->name},
                      {"sigma", rep_sigma},
                      {"tau", rep_tau},
                      {"lambda", rc.lambda()},
                      {"oscillator_spectrum", harmonic_spectrum(rc, rep_count)}};
            emit(j, json_path);
            return 0;
        }

        if (qz->parsed()) {
            auto g = parse_group_ref(qz_group);
            if (!g) {
                std::cerr << "unknown group: " << qz_group << "\n";
                return 2;
            }
            Grid1D grid{qz_m, qz_l};
            json j = {{"schema", 1}, {"group", g->name}, {"scheme", qz_scheme}};
            if (qz_scheme == "kn") {
                // scalar calculus on the dual of the algebra: kernel samples
                GaussPoly b = parse_symbol(qz_symbol, g->dim);
                GStarSymbol f = [&](const std::vector<double>&) { return b; };
                std::ofstream csv;
                if (!qz_csv.empty()) {
                    csv.open(qz_csv);
                    csv << "x0,y0,re,im\n";
                }
                std::mt19937 rng(2);
                std::uniform_real_distribution<double> ux(-0.5, 0.5);
                json samples = json::array();
                for (int rep = 0; rep < 10; ++rep) {
                    std::vector<double> x(g->dim), y(g->dim);
                    for (auto& v : x) v = ux(rng);
                    for (auto& v : y) v = ux(rng);
                    cd k = op_g_gstar_kernel(*g, f, x, y);
                    samples.push_back({{"x", x}, {"y", y}, {"re", k.real()}, {"im", k.imag()}});
                    if (csv.is_open())
                        csv << x[0] << "," << y[0] << "," << k.real() << ","
                            << k.imag() << "\n";
                }
                j["kernel_samples"] = samples;
            } else {
                if (g->name.substr(0, 7) != "center2" && g->name != "heis1") {
                    std::cerr << "scheme " << qz_scheme
                              << " needs a representation-bearing group\n";
                    return 2;
                }
                bool heis = g->name == "heis1";
                double delta = heis ? 0.0 : to_double(g->c[0][1][3]);
                RepChart rc{heis ? RepGroupKind::Heis : RepGroupKind::Center2,
                            delta, qz_sigma, qz_tau, grid};
                GaussPoly psi = parse_symbol(qz_symbol, 2);
                GridOperator op = qz_scheme == "pedersen"
                                      ? pedersen_quantize(rc, as_symbol2(psi))
                                      : weyl_lambda(grid, rc.lambda(),
                                                    as_symbol2(psi));
                j["lambda"] = rc.lambda();
                j["trace"] = {op.trace().real(), op.trace().imag()};
                j["hs_norm"] = op.hs_norm();
                j["op_norm"] = op.op_norm();
                if (!qz_csv.empty()) {
                    std::ofstream csv(qz_csv);
                    csv << "row,col,re,im\n";
                    for (int k = 0; k < grid.m; ++k)
                        for (int l = 0; l < grid.m; ++l)
                            csv << k << "," << l << "," << op.a(k, l).real()
                                << "," << op.a(k, l).imag() << "\n";
                }
            }
            emit(j, json_path);
            return 0;
        }

        if (sc->parsed()) {
            auto g = parse_group_ref(sc_group);
            if (!g) {
                std::cerr << "unknown group: " << sc_group << "\n";
                return 2;
            }
            json j = {{"schema", 1}, {"group", g->name}};
            json tp = json::array();
            for (const auto& [alpha, q] : taylor_polynomials(*g, sc_maxdeg))
                tp.push_back({{"alpha", alpha},
                              {"length", hom_length(*g, alpha)},
                              {"q", poly_to_string(q, g->labels)}});
            j["taylor_polynomials"] = tp;
            try {
                RocklandSpec rs = rockland_build(*g);
                json terms = json::array();
                for (const auto& t : rs.terms)
                    terms.push_back({{"index", t.index},
                                     {"power", t.power},
                                     {"sign", t.sign}});
                long probe = std::min<long>(rs.order + 2, 10);
                bool hom = !homogeneity_violation(*g, rs, Rat(2), rs.order, probe)
                                .has_value();
                j["rockland"] = {{"order", rs.order},
                                 {"terms", terms},
                                 {"homogeneous_up_to_degree", probe},
                                 {"homogeneity_exact", hom}};
            } catch (const std::exception& e) {
                j["rockland"] = {{"error", e.what()}};
            }
            emit(j, json_path);
            return 0;
        }

        if (vf->parsed()) {
            auto g = parse_group_ref(vf_group);
            if (!g || g->name.substr(0, 7) != "center2") {
                std::cerr << "verify: needs the 4D two-parameter-center group\n";
                return 2;
            }
            VerifyContext vc{*g, to_double(g->c[0][1][3]), vf_seed, vf_m, vf_l};
            if (vc.delta == 0) {
                std::cerr << "verify: needs delta != 0 (flat orbits)\n";
                return 2;
            }
            if (vf_suite == "fourier" || vf_suite == "all") suite_fourier(vc);
            if (vf_suite == "pedersen" || vf_suite == "all") suite_pedersen(vc);
            if (vf_suite == "wtransform" || vf_suite == "all") suite_wtransform(vc);
            if (vf_suite == "kernels" || vf_suite == "all") suite_kernels(vc);
            if (vf_suite == "plancherel" || vf_suite == "all") suite_plancherel(vc);

            bool all_pass = true;
            json checks = json::array();
            for (const auto& r : vc.results) {
                checks.push_back({{"name", r.name},
                                  {"max_rel_error", r.max_rel_error},
                                  {"tolerance", r.tolerance},
                                  {"pass", r.pass}});
                all_pass = all_pass && r.pass;
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                          << "  err=" << r.max_rel_error << " tol=" << r.tolerance
                          << "\n";
            }
            json j = {{"schema", 1},        {"command", "verify"},
                      {"group", g->name},   {"suite", vf_suite},
                      {"seed", vf_seed},
                      {"grid", {{"M", vf_m}, {"L", vf_l}}},
                      {"checks", checks},   {"pass", all_pass}};
            emit(j, json_path);
            return all_pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
