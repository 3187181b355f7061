// vqf: evaluation, expansion and verification of the V_q function calculus
// from the command line. All results are JSON on stdout; validation problems
// exit with code 2 and {"error": ...}.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "vqf/fueter.hpp"
#include "vqf/json_io.hpp"
#include "vqf/operators.hpp"
#include "vqf/rkhs.hpp"
#include "vqf/schur.hpp"
#include "vqf/verify.hpp"

namespace {

using vqf::Json;

std::vector<double> parse_csv_doubles(const std::string& s, size_t expect, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.size() != expect)
        throw vqf::Error(std::string(what) + ": expected " + std::to_string(expect) +
                         " comma-separated values");
    return out;
}

vqf::PointH parse_point(const std::string& s) {
    const auto v = parse_csv_doubles(s, 4, "point");
    return {v[0], v[1], v[2], v[3]};
}

vqf::MultiIndex parse_alpha(const std::string& s) {
    const auto v = parse_csv_doubles(s, 3, "alpha");
    const vqf::MultiIndex a{static_cast<int>(v[0]), static_cast<int>(v[1]),
                            static_cast<int>(v[2])};
    if (a.a1 < 0 || a.a2 < 0 || a.a3 < 0) throw vqf::Error("alpha: entries must be >= 0");
    return a;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vqf::Error("cannot open " + path);
    return Json::parse(in);
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump() << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw vqf::Error("cannot write " + out_path);
        out << j.dump() << "\n";
    }
}

std::string rational_str(const vqf::Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

vqf::CoefficientFamily family_from_option(const std::string& family, const std::string& path) {
    if (!path.empty()) {
        std::map<vqf::MultiIndex, vqf::Rational> values;
        const Json j = load_json(path);
        for (const auto& entry : j.at("coefficients"))
            values[vqf::multiindex_from_json(entry.at("alpha"))] =
                vqf::Rational(entry.at("c").get<std::string>());
        return vqf::CoefficientFamily::custom(std::move(values));
    }
    if (family != "arveson") throw vqf::Error("unknown coefficient family: " + family);
    return vqf::CoefficientFamily::arveson();
}

double default_fd_step() {
    if (const char* env = std::getenv("VQ_FD_STEP")) return std::stod(env);
    return 1e-5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"V_q Fueter-variable calculus"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    app.add_option("--out", out_path, "write JSON result to a file instead of stdout");

    // eval-mu
    auto* cmd_eval = app.add_subcommand("eval-mu", "evaluate mu^alpha at a point of H*");
    std::string opt_point, opt_alpha;
    cmd_eval->add_option("--point", opt_point, "x0,x1,x2,x3")->required();
    cmd_eval->add_option("--alpha", opt_alpha, "a1,a2,a3")->required();

    // expand-qn
    auto* cmd_expand = app.add_subcommand("expand-qn", "q^n in the monomial basis");
    int opt_n = 0;
    std::string opt_expand_point;
    cmd_expand->add_option("--n", opt_n, "power, 0..8")->required();
    cmd_expand->add_option("--point", opt_expand_point, "also evaluate at this point");

    // apply-vq
    auto* cmd_apply = app.add_subcommand("apply-vq", "apply a differential operator at a point");
    std::string opt_apply_point, opt_apply_alpha, opt_apply_in, opt_op = "vq";
    double opt_h = default_fd_step();
    int opt_order = 2;
    cmd_apply->add_option("--point", opt_apply_point, "x0,x1,x2,x3")->required();
    cmd_apply->add_option("--alpha", opt_apply_alpha, "field = mu^alpha");
    cmd_apply->add_option("--in", opt_apply_in, "field = entry (0,0) of a series file");
    cmd_apply->add_option("--op", opt_op, "vq | vq-bar | vq-bar-euler | gq | euler");
    cmd_apply->add_option("--step", opt_h, "finite-difference step");
    cmd_apply->add_option("--order", opt_order, "2 or 4");

    // gleason
    auto* cmd_gleason = app.add_subcommand("gleason", "Gleason decomposition residual for mu^gamma");
    std::string opt_ga, opt_gb, opt_gamma;
    int opt_quad = 1001;
    cmd_gleason->add_option("--a", opt_ga, "segment start")->required();
    cmd_gleason->add_option("--b", opt_gb, "segment end")->required();
    cmd_gleason->add_option("--gamma", opt_gamma, "monomial index")->required();
    cmd_gleason->add_option("--quad", opt_quad, "Simpson nodes (odd)");

    // kernel
    auto* cmd_kernel = app.add_subcommand("kernel", "evaluate the kernel K_c(x, y)");
    std::string opt_kx, opt_ky, opt_family = "arveson", opt_family_in;
    int opt_trunc = 12;
    cmd_kernel->add_option("--x", opt_kx)->required();
    cmd_kernel->add_option("--y", opt_ky)->required();
    cmd_kernel->add_option("--trunc", opt_trunc, "truncation degree (default 12)");
    cmd_kernel->add_option("--family", opt_family, "arveson (default)");
    cmd_kernel->add_option("--in", opt_family_in, "custom family file");

    // gram
    auto* cmd_gram = app.add_subcommand("gram", "Gram matrix of K_c over a point list");
    std::string opt_gram_in, opt_gram_family = "arveson", opt_gram_family_in;
    int opt_gram_trunc = 12;
    double opt_tol = 1e-8;
    cmd_gram->add_option("--in", opt_gram_in, "JSON array of points")->required();
    cmd_gram->add_option("--trunc", opt_gram_trunc);
    cmd_gram->add_option("--family", opt_gram_family);
    cmd_gram->add_option("--family-in", opt_gram_family_in, "custom family file");
    cmd_gram->add_option("--tol", opt_tol, "PSD tolerance");

    // structural
    auto* cmd_struct = app.add_subcommand("structural", "structural-identity defect, exact");
    std::string opt_salpha, opt_sfamily_in;
    cmd_struct->add_option("--alpha", opt_salpha)->required();
    cmd_struct->add_option("--in", opt_sfamily_in, "custom family file");

    // blaschke
    auto* cmd_blaschke = app.add_subcommand("blaschke", "Blaschke factor series at a");
    std::string opt_ba;
    int opt_btrunc = 12;
    cmd_blaschke->add_option("--a", opt_ba, "base point in Omega_1")->required();
    cmd_blaschke->add_option("--trunc", opt_btrunc);

    // realize
    auto* cmd_realize = app.add_subcommand(
        "realize", "state-space data of B_a, or restriction of a realization file");
    std::string opt_ra, opt_rin, opt_rx;
    cmd_realize->add_option("--a", opt_ra, "base point: emit the Blaschke realization");
    cmd_realize->add_option("--in", opt_rin, "realization file");
    cmd_realize->add_option("--x", opt_rx, "x1,x2,x3: evaluate the x0=0 restriction");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the identity suite");
    std::string opt_suite = "all";
    std::uint64_t opt_seed = 0;
    cmd_verify->add_option("--suite", opt_suite,
                           "fueter | operators | ck | kernel | blaschke | rational | all");
    cmd_verify->add_option("--seed", opt_seed, "random seed (default 0)");

    try {
        app.parse(argc, argv);

        if (*cmd_eval) {
            emit(vqf::to_json(vqf::mu_alpha(parse_point(opt_point), parse_alpha(opt_alpha))),
                 out_path);
        } else if (*cmd_expand) {
            const vqf::FueterSeries s = vqf::expand_qn(opt_n);
            if (opt_expand_point.empty()) {
                emit(vqf::to_json(s), out_path);
            } else {
                const vqf::PointH p = parse_point(opt_expand_point);
                emit(Json{{"series", vqf::to_json(s)},
                          {"value", vqf::to_json(vqf::eval(s, p).at(0, 0))},
                          {"direct", vqf::to_json(p.quaternion().pow(opt_n))}},
                     out_path);
            }
        } else if (*cmd_apply) {
            const vqf::PointH x = parse_point(opt_apply_point);
            vqf::Field f;
            if (!opt_apply_in.empty()) {
                f = vqf::field_series_entry(vqf::series_from_json(load_json(opt_apply_in)));
            } else if (!opt_apply_alpha.empty()) {
                f = vqf::field_mu_alpha(parse_alpha(opt_apply_alpha));
            } else {
                throw vqf::Error("apply-vq: need --alpha or --in");
            }
            const vqf::FDScheme scheme{opt_h, opt_order};
            vqf::Quaternion r;
            if (opt_op == "vq") r = vqf::apply_vq(f, x, scheme);
            else if (opt_op == "vq-bar") r = vqf::apply_vq_bar(f, x, scheme);
            else if (opt_op == "vq-bar-euler") r = vqf::apply_vq_bar_euler(f, x, scheme);
            else if (opt_op == "gq") r = vqf::apply_gq(f, x, scheme);
            else if (opt_op == "euler") r = vqf::euler(f, x, scheme);
            else throw vqf::Error("apply-vq: unknown --op " + opt_op);
            emit(vqf::to_json(r), out_path);
        } else if (*cmd_gleason) {
            const vqf::PointH a = parse_point(opt_ga);
            const vqf::PointH b = parse_point(opt_gb);
            const vqf::MultiIndex gamma = parse_alpha(opt_gamma);
            const vqf::Field f = vqf::field_mu_alpha(gamma);
            vqf::Quaternion rhs;
            for (int u = 1; u <= 3; ++u)
                rhs += vqf::mu_u(b - a, u) * vqf::gleason_remainder(f, a, b, u, opt_quad);
            const vqf::Quaternion lhs = f.eval(b) - f.eval(a);
            emit(Json{{"lhs", vqf::to_json(lhs)},
                      {"rhs", vqf::to_json(rhs)},
                      {"residual", (lhs - rhs).norm()}},
                 out_path);
        } else if (*cmd_kernel) {
            const auto family = family_from_option(opt_family, opt_family_in);
            const vqf::KernelValue kv =
                vqf::kernel_eval(family, parse_point(opt_kx), parse_point(opt_ky), opt_trunc);
            Json j{{"value", vqf::to_json(kv.value)}};
            if (kv.tail_valid) j["tail_bound"] = kv.tail_bound;
            else j["tail_bound"] = nullptr;
            emit(j, out_path);
        } else if (*cmd_gram) {
            const auto family = family_from_option(opt_gram_family, opt_gram_family_in);
            std::vector<vqf::PointH> pts;
            for (const auto& pj : load_json(opt_gram_in)) pts.push_back(vqf::point_from_json(pj));
            const vqf::QMatrix g = vqf::gram_matrix(family, pts, opt_gram_trunc);
            const auto eig = vqf::hermitian_eigenvalues(g);
            emit(Json{{"gram", vqf::to_json(g)},
                      {"min_eigenvalue", eig.empty() ? 0.0 : eig.front()},
                      {"psd", vqf::is_psd(g, opt_tol)}},
                 out_path);
        } else if (*cmd_struct) {
            const auto family = family_from_option("arveson", opt_sfamily_in);
            const vqf::Rational defect =
                vqf::structural_defect(family, parse_alpha(opt_salpha));
            emit(Json{{"defect", rational_str(defect)}}, out_path);
        } else if (*cmd_blaschke) {
            const vqf::BlaschkePoint a(parse_point(opt_ba));
            const vqf::FueterSeries s = vqf::blaschke_series(a, opt_btrunc);
            emit(Json{{"series", vqf::to_json(s)},
                      {"s", a.s()},
                      {"tail_estimate", vqf::blaschke_tail_estimate(a.s(), opt_btrunc)}},
                 out_path);
        } else if (*cmd_realize) {
            if (!opt_ra.empty()) {
                const vqf::BlaschkePoint a(parse_point(opt_ra));
                emit(vqf::to_json(vqf::blaschke_realization(a)), out_path);
            } else if (!opt_rin.empty() && !opt_rx.empty()) {
                const vqf::Realization r =
                    vqf::realization_from_json(load_json(opt_rin));
                const auto v = parse_csv_doubles(opt_rx, 3, "x");
                emit(vqf::to_json(vqf::rational_restrict(r, {v[0], v[1], v[2]})), out_path);
            } else {
                throw vqf::Error("realize: need --a, or --in together with --x");
            }
        } else if (*cmd_verify) {
            const auto results = vqf::run_verify_suite(opt_suite, opt_seed);
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
                          << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
