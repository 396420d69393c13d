#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modulift/certifier.hpp"

namespace {

using namespace modulift;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Tour parse_tour_arg(const std::string& arg, int n) {
    Tour tour;
    std::istringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) tour.order.push_back(std::stoi(tok) - 1);
    if (tour.n() != n || !tour.is_permutation())
        throw std::runtime_error("tour must be a comma-separated permutation of 1.." +
                                 std::to_string(n));
    return tour;
}

std::string text_summary(const CertificateReport& r) {
    std::ostringstream out;
    out << "instance: " << r.instance_name << " (n=" << r.n
        << ", |A|=" << r.num_arcs << ")\n";
    out << "tour cost: " << r.tour_cost_value << "  r_ref: " << r.r_ref
        << "  mode: " << to_string(r.mode) << "\n";
    out << "t = " << r.t.str() << (r.t_is_one ? " (= 1)" : " (!= 1)") << "\n";
    out << "weight: " << r.weight << "  budget: dim_cusp=" << r.budget.dim_cusp
        << " interior_max=" << r.budget.interior_max
        << " valence_rhs=" << r.budget.valence_rhs
        << " required=" << r.budget.required_zeros << "\n";
    if (r.stage_residual.ran)
        out << "equilibrium residual: |" << std::abs(r.equilibrium_residual_value)
            << "|\n";
    if (r.stage_membership.ran)
        out << "membership: member=" << r.membership.member
            << " non-member=" << r.membership.non_member
            << " indeterminate=" << r.membership.indeterminate << "\n";
    if (r.stage_fourier.ran)
        out << "fourier: M=" << r.fourier_M << " rank=" << r.vandermonde_rank
            << " kernel_dim=" << r.vandermonde_kernel_dim
            << " residual=" << r.fourier_residual
            << " max|a_n|=" << r.max_abs_coeff << "\n";
    if (r.stage_hecke.ran)
        out << "hecke: normalizable=" << (r.hecke_normalizable ? "yes" : "no")
            << " max_residual=" << r.hecke_max_residual << "\n";
    if (r.stage_lambda.ran)
        out << "lambda: |scalar|=" << std::abs(r.lambda.chosen_scalar)
            << " s0=" << r.lambda.s0 << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    if (!r.discrepancy_notes.empty()) {
        out << "notes:\n";
        for (const auto& note : r.discrepancy_notes) out << "  - " << note << "\n";
    }
    return out.str();
}

int run_selftest() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };

    const auto inst = random_instance(6, 1, 50, 99);
    const auto hk = exact_optimum(inst, OracleMethod::held_karp);
    const auto bf = exact_optimum(inst, OracleMethod::brute_force);
    check(hk.optimal_cost == bf.optimal_cost, "oracle cross-check");

    const auto zeros = seed_zeros(0.5, 0, 0);
    check(std::abs(seed_eval(zeros[0].z, 0.5)) < 1e-13, "seed zero vanishes");

    const auto reps = coset_reps(8);
    bool ok = true;
    for (const auto& g : reps)
        ok = ok && g.a * g.d - g.b * g.c == 1 && ((g.a % 4 + 4) % 4) == 1 &&
             ((g.d % 4 + 4) % 4) == 1 && g.b % 4 == 0 && g.c % 4 == 0;
    check(ok, "coset representative congruences");

    const auto w = select_weight(12, 4, WeightPolicy::min);
    check(w && *w == 4, "weight selection");

    const Complex s(0.1, 0.3), tau(-0.2, 0.4);
    check(std::abs(e_series(s, tau, 60) - e_series_closed_form(s, tau)) < 1e-10,
          "series closed form");

    std::cout << (failures == 0 ? "selftest: all checks passed\n"
                                : "selftest: FAILURES\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modulift: exact ATSP solving and modular-lift optimality certificates"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random ATSP instance");
    int gen_n = 5;
    std::uint64_t gen_seed = 1;
    std::int64_t gen_lo = 1, gen_hi = 100;
    std::string gen_out;
    gen->add_option("--n", gen_n, "city count (>= 3)")->required();
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--lo", gen_lo, "minimum arc cost");
    gen->add_option("--hi", gen_hi, "maximum arc cost");
    gen->add_option("--out", gen_out, "output TSPLIB file")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance exactly");
    std::string solve_file, solve_method = "held_karp";
    solve->add_option("file", solve_file, "TSPLIB instance")->required();
    solve->add_option("--method", solve_method, "held_karp | brute_force");

    // encode
    auto* enc_cmd = app.add_subcommand("encode", "print the complex encoding of a tour");
    std::string enc_file, enc_tour, enc_dump;
    std::int64_t enc_rref = 0;
    enc_cmd->add_option("file", enc_file, "TSPLIB instance")->required();
    enc_cmd->add_option("--tour", enc_tour, "comma-separated 1-indexed order")->required();
    enc_cmd->add_option("--r-ref", enc_rref, "normalizer (default: oracle optimum)");
    enc_cmd->add_option("--dump-points", enc_dump, "write (Re, Im) CSV of s and tau");

    // certify
    auto* cert = app.add_subcommand("certify", "run the optimality certificate");
    std::string cert_file, cert_tour, cert_mode = "oracle", cert_format = "text",
                cert_out;
    std::string cert_policy = "min";
    int cert_height = 0, cert_m = 0, cert_weight = 0;
    double cert_zero_tol = 0.0;
    cert->add_option("file", cert_file, "TSPLIB instance")->required();
    cert->add_option("--tour", cert_tour, "comma-separated 1-indexed order")->required();
    cert->add_option("--mode", cert_mode, "oracle | self");
    cert->add_option("--format", cert_format, "json | text");
    cert->add_option("--out", cert_out, "write the report to a file");
    cert->add_option("--weight-policy", cert_policy, "min | max_budget");
    cert->add_option("--weight", cert_weight, "pin the lift weight");
    cert->add_option("--height", cert_height, "coset enumeration bound");
    cert->add_option("--M", cert_m, "Fourier truncation (must be >= 2|A|)");
    cert->add_option("--zero-tol", cert_zero_tol, "membership zero tolerance");

    // selftest
    app.add_subcommand("selftest", "run the built-in invariant checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const auto inst = modulift::random_instance(gen_n, gen_lo, gen_hi, gen_seed);
            write_file(gen_out, modulift::write_tsplib(inst));
            std::cout << "wrote " << gen_out << " (n=" << gen_n << ")\n";
            return 0;
        }
        if (solve->parsed()) {
            const auto inst = modulift::parse_tsplib(read_file(solve_file));
            const auto method = solve_method == "brute_force"
                                    ? modulift::OracleMethod::brute_force
                                    : modulift::OracleMethod::held_karp;
            const auto res = modulift::exact_optimum(inst, method);
            std::cout << "optimal cost: " << res.optimal_cost << "\ntour:";
            for (int v : res.optimal_tour.order) std::cout << ' ' << v + 1;
            std::cout << "\n";
            return 0;
        }
        if (enc_cmd->parsed()) {
            const auto inst = modulift::parse_tsplib(read_file(enc_file));
            const auto tour = parse_tour_arg(enc_tour, inst.n);
            const modulift::Cost rref =
                enc_rref > 0 ? enc_rref
                             : modulift::exact_optimum(inst).optimal_cost;
            const auto enc = modulift::encode(inst, tour, rref);
            std::cout << "t = " << enc.t.str()
                      << (enc.self_normalized ? " (self-normalized)" : "") << "\n";
            std::cout << "arc  in  Re(s)      Im(s)      Re(tau)    Im(tau)\n";
            for (const auto& a : enc.arcs)
                std::cout << a.from + 1 << "->" << a.to + 1 << "  "
                          << (a.in_tour ? "1" : "0") << "  " << a.s.real() << " "
                          << a.s.imag() << " " << a.tau.real() << " "
                          << a.tau.imag() << "\n";
            if (!enc_dump.empty()) {
                std::ostringstream csv;
                csv << "re,im\n";
                for (const auto& a : enc.arcs) {
                    csv << a.s.real() << ',' << a.s.imag() << "\n";
                    csv << a.tau.real() << ',' << a.tau.imag() << "\n";
                }
                write_file(enc_dump, csv.str());
            }
            return 0;
        }
        if (cert->parsed()) {
            const auto inst = modulift::parse_tsplib(read_file(cert_file));
            const auto tour = parse_tour_arg(cert_tour, inst.n);
            modulift::CertifyConfig cfg;
            if (cert_policy == "max_budget")
                cfg.weight_policy = modulift::WeightPolicy::max_budget;
            if (cert_weight > 0) cfg.weight_override = cert_weight;
            if (cert_height > 0) cfg.height_override = cert_height;
            if (cert_zero_tol > 0) cfg.zero_tol_override = cert_zero_tol;
            if (cert_m > 0) {
                if (cert_m < 2 * inst.num_arcs()) {
                    std::cerr << "error: M must satisfy M >= 2|A| = "
                              << 2 * inst.num_arcs() << "\n";
                    return 1;
                }
                cfg.m_override = cert_m;
            }
            const auto mode = cert_mode == "self"
                                  ? modulift::CertifyMode::self_normalized
                                  : modulift::CertifyMode::oracle;
            const auto report = modulift::certify(inst, tour, cfg, mode);
            const std::string text = cert_format == "json"
                                         ? modulift::serialize_report(report)
                                         : text_summary(report);
            if (cert_out.empty()) std::cout << text;
            else write_file(cert_out, text);
            return modulift::verdict_exit_code(report.verdict);
        }
        return run_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
