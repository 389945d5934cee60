#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riesz/centers.hpp"
#include "riesz/constants.hpp"
#include "riesz/json_io.hpp"
#include "riesz/potential.hpp"
#include "riesz/unfolded.hpp"
#include "riesz/verify.hpp"

namespace {

using namespace riesz;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitInconclusive = 3;

Vec parse_point(const std::string& text, int n) {
    std::vector<double> xs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) xs.push_back(std::stod(tok));
    if (static_cast<int>(xs.size()) != n)
        throw std::invalid_argument("point has wrong dimension: " + text);
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = xs[i];
    return v;
}

struct CommonConfig {
    int sphere_res = 0;
    int section_res = 0;
    double quad_tol = 1e-8;
};

void apply_config_file(const std::string& path, CommonConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    for (const auto& [key, value] : j.items()) {
        if (key == "sphere_res")
            cfg.sphere_res = value.get<int>();
        else if (key == "section_res")
            cfg.section_res = value.get<int>();
        else if (key == "quad_tol")
            cfg.quad_tol = value.get<double>();
        else
            throw std::invalid_argument("config: unknown key \"" + key + "\"");
    }
}

int emit_report(const LemmaReport& report, const std::string& csv_path) {
    std::cout << to_json(report).dump(2) << "\n";
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "lemma_id,case,params,value,error,verdict\n";
        for (const auto& c : report.cases) {
            csv << report.lemma_id << ',' << c.name << ',';
            bool first = true;
            for (const auto& [k, v] : c.params) {
                if (!first) csv << ';';
                csv << k << '=' << format_double(v);
                first = false;
            }
            csv << ',' << format_double(c.value) << ',' << format_double(c.error) << ','
                << to_string(c.verdict) << "\n";
        }
    }
    switch (report.overall()) {
        case Verdict::Pass: return kExitOk;
        case Verdict::Fail: return kExitFail;
        default: return kExitInconclusive;
    }
}

int cmd_potential(const std::string& body_path, const std::string& point, double alpha,
                  bool log_mode, const CommonConfig& cc) {
    ConvexBody body = build_body(load_body_spec(body_path));
    PotentialParams params{alpha, log_mode, cc.sphere_res, cc.section_res, cc.quad_tol};
    Vec x = parse_point(point, body.dim());
    JsonValue out = JsonValue::object();
    out.set("value", potential(body, x, params));
    JsonValue grad = JsonValue::array(), hess = JsonValue::array();
    JsonValue gerr = JsonValue::array(), herr = JsonValue::array();
    for (int j = 0; j < body.dim(); ++j) {
        ValueErr g = gradient_component(body, x, j, params);
        ValueErr h = hessian_diag(body, x, j, params);
        grad.push(g.value);
        gerr.push(g.error);
        hess.push(h.value);
        herr.push(h.error);
    }
    out.set("grad", std::move(grad));
    out.set("hessian_diag", std::move(hess));
    JsonValue errs = JsonValue::object();
    errs.set("grad", std::move(gerr));
    errs.set("hessian_diag", std::move(herr));
    out.set("error_estimates", std::move(errs));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_center(const std::string& body_path, double alpha, bool log_mode, int starts,
               const CommonConfig& cc) {
    ConvexBody body = build_body(load_body_spec(body_path));
    PotentialParams params{alpha, log_mode, cc.sphere_res, cc.section_res, cc.quad_tol};
    CenterConfig cfg;
    cfg.starts = starts;
    CenterResult r = find_center(body, params, cfg);
    JsonValue out = JsonValue::object();
    out.set("point", to_json(r.point));
    out.set("value", r.value);
    out.set("grad_norm", r.grad_norm);
    out.set("starts", r.starts);
    out.set("agreement_radius", r.agreement_radius);
    out.set("mode", r.minimizing ? "min" : "max");
    out.set("on_domain_boundary", r.on_domain_boundary);
    out.set("all_converged", r.all_converged);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_unfolded(const std::string& body_path, int dirs) {
    ConvexBody body = build_body(load_body_spec(body_path));
    UnfoldedRegion region = unfolded_region(body, dirs);
    JsonValue out = JsonValue::object();
    JsonValue jd = JsonValue::array(), jo = JsonValue::array(), jh = JsonValue::array();
    for (size_t i = 0; i < region.directions.size(); ++i) {
        jd.push(to_json(region.directions[i]));
        jo.push(region.offsets[i]);
    }
    for (const Vec& p : region.hull_points) jh.push(to_json(p));
    out.set("directions", std::move(jd));
    out.set("offsets", std::move(jo));
    out.set("hull_points", std::move(jh));
    out.set("diameter", region.diameter());
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_constants(int n, const std::string& what, double alpha, double c, double xi0,
                  double beta, double b) {
    JsonValue out = JsonValue::object();
    if (what == "psi") {
        out.set("value", psi(n, alpha, c));
    } else if (what == "a0") {
        out.set("value", a0(n, alpha, xi0));
    } else if (what == "f") {
        out.set("value", f_const(n, alpha));
    } else if (what == "g") {
        out.set("value", g_integral(n, alpha, beta));
    } else if (what == "alpha0") {
        out.set("value", alpha0(n, b));
    } else if (what == "phi") {
        PhiResult r = phi(n);
        out.set("value", r.value);
        JsonValue aux = JsonValue::object();
        aux.set("computed_sup", r.computed_sup);
        aux.set("alpha0", r.alpha_cap);
        aux.set("grid", 1024);
        out.set("aux", std::move(aux));
    } else {
        throw std::invalid_argument("constants: unknown --what " + what);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

LemmaReport merged(std::vector<LemmaReport> parts, const std::string& id) {
    LemmaReport out;
    out.lemma_id = id;
    out.worst_margin = std::numeric_limits<double>::infinity();
    for (auto& p : parts) {
        for (auto& c : p.cases) {
            for (const auto& [k, v] : p.params) c.params.emplace(k, v);
            out.cases.push_back(std::move(c));
        }
        out.worst_margin = std::min(out.worst_margin, p.worst_margin);
    }
    return out;
}

int cmd_verify(const std::string& lemma, double alpha_opt, double delta_opt,
               const std::string& csv_path) {
    if (lemma == "3.2") return emit_report(verify_lemma32(), csv_path);

    if (lemma == "3.3") {
        LemmaReport report;
        report.lemma_id = "transformed_sign";
        report.worst_margin = std::numeric_limits<double>::infinity();
        for (int n : {3, 4})
            for (double alpha : {n + 0.25, n + 0.5, n + 0.9, 1.5, 2.5})
                for (double c : {0.5, 1.0, 2.0}) {
                    double a = psi(n, alpha, c) * c;
                    ValueErr t = transformed_integral(n, alpha, a, c);
                    CaseResult cr;
                    cr.name = "transformed";
                    cr.params = {{"n", double(n)}, {"alpha", alpha}, {"c", c}, {"a", a}};
                    cr.value = t.value;
                    cr.error = t.error;
                    cr.verdict = t.error < std::abs(t.value)
                                     ? (t.value < 0 ? Verdict::Pass : Verdict::Fail)
                                     : Verdict::Inconclusive;
                    report.worst_margin =
                        std::min(report.worst_margin, std::abs(t.value) - 10.0 * t.error);
                    report.cases.push_back(cr);
                }
        return emit_report(report, csv_path);
    }

    if (lemma == "3.4") {
        std::vector<LemmaReport> parts;
        LemmaReport fpart;
        fpart.lemma_id = "segment_sign_highdim";
        fpart.worst_margin = std::numeric_limits<double>::infinity();
        for (int n : {3, 4})
            for (double alpha : {1.5, n - 0.5, n + 0.5})
                for (double xi : {0.0, 0.5, 1.0}) {
                    double a = a0(n, alpha, 1.0);
                    ValueErr f = F_integral(n, alpha, a, xi);
                    CaseResult cr;
                    cr.name = "F_at_a0";
                    cr.params = {{"n", double(n)}, {"alpha", alpha}, {"a", a}, {"xi", xi}};
                    cr.value = f.value;
                    cr.error = f.error;
                    cr.verdict = f.error < std::abs(f.value)
                                     ? (f.value < 0 ? Verdict::Pass : Verdict::Fail)
                                     : Verdict::Inconclusive;
                    fpart.worst_margin =
                        std::min(fpart.worst_margin, std::abs(f.value) - 10.0 * f.error);
                    fpart.cases.push_back(cr);
                }
        parts.push_back(fpart);
        for (int k = 0; k < 20; ++k) {
            int n = 3 + k % 2;
            double alpha = 1.2 + 0.18 * k;
            if (alpha >= n + 1) alpha = n + 0.5;
            double a = 3.0 + 0.7 * k;
            double xi = 0.05 * k * a / 1.0;
            if (xi >= a) xi = 0.9 * a;
            parts.push_back(change_of_variables_check(n, alpha, a, xi));
        }
        return emit_report(merged(std::move(parts), "substitution_and_sign"), csv_path);
    }

    if (lemma == "3.5") {
        BodySpec core;
        core.dimension = 2;
        core.core_vertices = {Vec{-0.5, 0.0}, Vec{0.5, 0.0}};
        double alpha = alpha_opt > 0 ? alpha_opt : 2.0;
        double delta = delta_opt > 0 ? delta_opt : f_const(2, alpha) * 1.0 + 1.0;
        LemmaReport r2 = verify_keylemma2(core, delta, alpha, 2, {0.0, -0.25, 0.25});
        double alpha3 = 3.5;
        LemmaReport r3 =
            verify_keylemma2(core, f_const(3, alpha3) * 1.0 + 1.0, alpha3, 3, {0.0, 0.25});
        return emit_report(merged({r2, r3}, "section_sign"), csv_path);
    }

    if (lemma == "main") {
        BodySpec core;
        core.dimension = 2;
        core.core_vertices = {Vec{-0.5, 0.0}, Vec{0.5, 0.0}};
        double delta = delta_opt > 0 ? delta_opt : 2.0;
        ConvexBody body = build_body([&] {
            BodySpec s = core;
            s.delta = delta;
            return s;
        }());
        std::vector<Vec> pts = sample_core_points(body, 9);
        std::vector<LemmaReport> parts;
        for (double alpha : {1.5, 2.5}) {
            PotentialParams p{alpha, false, 0, 0, 1e-8};
            parts.push_back(verify_hessian_signs(core, delta, p, pts));
        }
        PotentialParams plog{2.0, true, 0, 0, 1e-8};
        parts.push_back(verify_hessian_signs(core, delta, plog, pts));
        return emit_report(merged(std::move(parts), "hessian_sign"), csv_path);
    }

    throw std::invalid_argument("verify: unknown lemma id \"" + lemma + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz potentials, radial centers, and unfolded regions of convex parallel bodies"};
    app.require_subcommand(1);

    CommonConfig cc;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (sphere_res, section_res, quad_tol)");

    std::string body_path, point = "0,0";
    double alpha = 2.0;
    bool log_mode = false;
    int starts = 20, dirs = 720;

    auto* pot = app.add_subcommand("potential", "potential, gradient, and diagonal Hessian at a point");
    pot->add_option("--body", body_path, "body spec JSON")->required();
    pot->add_option("--point", point, "comma-separated coordinates");
    pot->add_option("--alpha", alpha, "Riesz exponent");
    pot->add_flag("--log", log_mode, "log potential mode");
    pot->add_option("--sphere-res", cc.sphere_res, "sphere grid resolution");
    pot->add_option("--section-res", cc.section_res, "section grid resolution");
    pot->add_option("--quad-tol", cc.quad_tol, "adaptive quadrature tolerance");

    auto* cen = app.add_subcommand("center", "locate the potential extremizer");
    cen->add_option("--body", body_path)->required();
    cen->add_option("--alpha", alpha);
    cen->add_flag("--log", log_mode);
    cen->add_option("--starts", starts);
    cen->add_option("--sphere-res", cc.sphere_res);

    auto* unf = app.add_subcommand("unfolded", "minimal unfolded region");
    unf->add_option("--body", body_path)->required();
    unf->add_option("--dirs", dirs, "direction grid resolution");

    int cn = 3;
    std::string what = "phi";
    double cc_c = 1.0, xi0 = 1.0, beta = 1.0, cb = 10.0;
    auto* con = app.add_subcommand("constants", "explicit constants");
    con->add_option("--n", cn)->required();
    con->add_option("--what", what, "psi|a0|f|g|alpha0|phi")->required();
    con->add_option("--alpha", alpha);
    con->add_option("--c", cc_c);
    con->add_option("--xi0", xi0);
    con->add_option("--beta", beta);
    con->add_option("--b", cb);

    std::string lemma, csv_path;
    double v_alpha = -1.0, v_delta = -1.0;
    auto* ver = app.add_subcommand("verify", "numerical inequality verification");
    ver->add_option("--lemma", lemma, "3.2|3.3|3.4|3.5|main")->required();
    ver->add_option("--alpha", v_alpha);
    ver->add_option("--delta", v_delta);
    ver->add_option("--csv", csv_path, "also emit CSV rows");

    auto* swp = app.add_subcommand("sweep", "CSV sweep of the planar segment integral");
    std::string sweep_csv = "sweep.csv";
    swp->add_option("--csv", sweep_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!config_path.empty()) apply_config_file(config_path, cc);
        if (pot->parsed()) return cmd_potential(body_path, point, alpha, log_mode, cc);
        if (cen->parsed()) return cmd_center(body_path, alpha, log_mode, starts, cc);
        if (unf->parsed()) return cmd_unfolded(body_path, dirs);
        if (con->parsed()) return cmd_constants(cn, what, alpha, cc_c, xi0, beta, cb);
        if (ver->parsed()) return cmd_verify(lemma, v_alpha, v_delta, csv_path);
        if (swp->parsed()) {
            LemmaReport r = verify_lemma32();
            return emit_report(r, sweep_csv);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
