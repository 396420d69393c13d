#include "modulift/certifier.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modulift {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::certified_optimal: return "certified-optimal";
        case Verdict::rejected_t: return "rejected-t";
        case Verdict::rejected_fourier: return "rejected-fourier";
        case Verdict::rejected_hecke: return "rejected-hecke";
        case Verdict::rejected_lambda: return "rejected-lambda";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

std::string to_string(CertifyMode m) {
    return m == CertifyMode::oracle ? "oracle" : "self-normalized";
}

namespace {

Verdict verdict_from_string(const std::string& s) {
    if (s == "certified-optimal") return Verdict::certified_optimal;
    if (s == "rejected-t") return Verdict::rejected_t;
    if (s == "rejected-fourier") return Verdict::rejected_fourier;
    if (s == "rejected-hecke") return Verdict::rejected_hecke;
    if (s == "rejected-lambda") return Verdict::rejected_lambda;
    return Verdict::indeterminate;
}

Complex q0_of(Complex z) {
    // q0 = e^{pi i z / 2}
    return std::exp(Complex(0.0, std::numbers::pi / 2.0) * z);
}

}  // namespace

CertificateReport certify(const AtspInstance& inst, const Tour& candidate,
                          const CertifyConfig& cfg, CertifyMode mode) {
    inst.check_valid();
    const auto validation = validate_tour(inst, candidate);
    if (!validation.ok()) throw std::invalid_argument("invalid candidate tour");

    CertificateReport rep;
    rep.instance_name = inst.name;
    rep.n = inst.n;
    rep.num_arcs = inst.num_arcs();
    for (int v : candidate.order) rep.tour_order.push_back(v + 1);
    rep.mode = mode;
    rep.tour_cost_value = tour_cost(inst, candidate);

    const auto weight =
        cfg.weight_override
            ? cfg.weight_override
            : select_weight(rep.num_arcs, inst.n, cfg.weight_policy);
    if (!weight) throw std::invalid_argument("no admissible weight for |A| = " +
                                             std::to_string(rep.num_arcs));
    rep.weight = *weight;
    rep.budget = zero_budget(rep.weight, inst.n);

    LiftConfig lift = LiftConfig::defaults_for_weight(rep.weight);
    if (cfg.height_override) lift.height = *cfg.height_override;
    if (cfg.zero_tol_override) lift.zero_tol = *cfg.zero_tol_override;
    lift.check();

    // Stage 1: exact t gate, before any floating point.
    rep.stage_t.ran = true;
    if (mode == CertifyMode::oracle) {
        const OracleResult oracle = exact_optimum(inst);
        rep.r_ref = oracle.optimal_cost;
    } else {
        rep.r_ref = rep.tour_cost_value;
        rep.discrepancy_notes.push_back(
            "self-normalized: t = 1 by construction, optimality not decidable");
    }
    rep.t = Rational(rep.r_ref, rep.tour_cost_value);
    rep.t_is_one = rep.t.is_one();
    if (!rep.t_is_one) {
        rep.verdict = Verdict::rejected_t;
        return rep;
    }
    rep.stage_t.passed = true;

    const double t = rep.t.to_double();

    // Stage 2: encoding and equilibrium residual.
    rep.stage_residual.ran = true;
    const EncodingSet enc = encode(inst, candidate, rep.r_ref);
    rep.equilibrium_residual_value = equilibrium_residual(enc, cfg.series_order);
    rep.stage_residual.passed = true;
    rep.discrepancy_notes.push_back(
        "equilibrium residual follows the closed form 2(sum_in r/r_ref - t); the "
        "two stated conventions agree only at t = 1");
    int lower_half = 0;
    for (const auto& e : enc.arcs)
        if (!e.in_upper_half()) ++lower_half;
    if (lower_half > 0)
        rep.discrepancy_notes.push_back(
            std::to_string(lower_half) +
            " out-of-tour arc(s) cost >= r_ref; their points leave the upper "
            "half-plane and are counted as non-members");

    // Stage 3: per-arc lift membership. Indeterminate points never reject;
    // they downgrade the final verdict.
    rep.stage_membership.ran = true;
    for (const auto& e : enc.arcs) {
        for (const Complex& p : {e.s, e.tau}) {
            if (p.imag() <= 0.0) {
                ++rep.membership.non_member;
                rep.membership_margins.push_back(-1.0);
                continue;
            }
            const MembershipResult m = lift_membership(p, t, lift);
            rep.membership_margins.push_back(m.margin);
            switch (m.status) {
                case Membership::member: ++rep.membership.member; break;
                case Membership::non_member: ++rep.membership.non_member; break;
                case Membership::indeterminate: ++rep.membership.indeterminate; break;
            }
        }
    }
    rep.stage_membership.passed = true;
    if (rep.membership.indeterminate > 0) {
        rep.stage_membership.indeterminate = true;
        rep.discrepancy_notes.push_back(
            "lift membership empirical: the seed-zero orbit claim is tested by "
            "tolerance, not proven; indeterminate points downgrade the verdict");
    }

    // Stage 4: Fourier / Vandermonde with M >= 2|A|.
    rep.stage_fourier.ran = true;
    const int M = cfg.m_override ? *cfg.m_override : 2 * rep.num_arcs;
    if (M < 2 * rep.num_arcs)
        throw std::invalid_argument("Fourier truncation must satisfy M >= 2|A|");
    rep.fourier_M = M;

    const LiftConfig lift_for_q = lift;
    const auto periodic_lift = [&](Complex z) {
        double x = std::fmod(z.real(), 4.0);
        if (x < 0.0) x += 4.0;
        return poincare_eval(Complex(x, z.imag()), t, lift_for_q).value;
    };
    const QExpansion qe = q_coefficients(periodic_lift, M, cfg.y0, 4 * M, rep.weight);
    for (const auto& c : qe.coeffs)
        rep.max_abs_coeff = std::max(rep.max_abs_coeff, std::abs(c));

    std::vector<Complex> points;
    int skipped_points = 0;
    for (const auto& e : enc.arcs) {
        for (const Complex& p : {e.s, e.tau}) {
            const Complex q0 = q0_of(p);
            if (std::abs(q0) < 1.0) points.push_back(q0);
            else ++skipped_points;
        }
    }
    if (skipped_points > 0)
        rep.discrepancy_notes.push_back(
            std::to_string(skipped_points) +
            " lifted point(s) with |q0| >= 1 excluded from the Vandermonde system");
    const int van_M = std::max(M, static_cast<int>(points.size()));
    const VandermondeSystem sys = vandermonde_system(points, van_M);
    rep.vandermonde_rank = sys.rank;
    rep.vandermonde_kernel_dim = sys.kernel_dim;
    std::vector<Complex> padded = qe.coeffs;
    padded.resize(van_M, Complex(0.0));
    rep.fourier_residual = sys.apply_residual(padded);
    const double fourier_scale = std::max(1.0, rep.max_abs_coeff);
    if (rep.fourier_residual > cfg.fourier_tol * fourier_scale) {
        rep.verdict = Verdict::rejected_fourier;
        return rep;
    }
    rep.stage_fourier.passed = true;

    // Stage 5: Hecke residuals. Needs a_1-normalization; a near-null form
    // cannot be normalized and leaves the stage indeterminate.
    rep.stage_hecke.ran = true;
    const Complex a1 = qe.coeffs.front();
    rep.hecke_normalizable = std::abs(a1) > 1e-8 * std::max(1.0, rep.max_abs_coeff);
    if (rep.hecke_normalizable) {
        std::vector<Complex> normalized = qe.coeffs;
        for (auto& c : normalized) c /= a1;
        std::vector<int> primes;
        for (int p = 3; p * p <= M; p += 2) {
            bool prime = true;
            for (int d = 3; d * d <= p; d += 2)
                if (p % d == 0) { prime = false; break; }
            if (prime) primes.push_back(p);
        }
        const HeckeReport hecke = hecke_residuals(normalized, rep.weight, primes);
        rep.hecke_max_residual = hecke.max_residual;
        if (rep.hecke_max_residual > cfg.hecke_tol) {
            rep.verdict = Verdict::rejected_hecke;
            return rep;
        }
        rep.stage_hecke.passed = true;
    } else {
        rep.stage_hecke.indeterminate = true;
        rep.discrepancy_notes.push_back(
            "form is numerically null (a_1 ~ 0): Hecke relations unverifiable, "
            "no eigenspace projection attempted");
    }

    // Stage 6: central-value parity test.
    rep.stage_lambda.ran = true;
    try {
        rep.lambda = central_test(qe.coeffs, rep.weight);
        rep.discrepancy_notes.push_back(
            "parity pairing: eps = -1 forces Lambda(s0) = 0 and reports "
            "Lambda'(s0); eps = +1 the other way around");
        if (std::abs(rep.lambda.chosen_scalar) > cfg.lambda_tol &&
            !rep.stage_hecke.indeterminate) {
            rep.verdict = Verdict::rejected_lambda;
            return rep;
        }
        rep.stage_lambda.passed = std::abs(rep.lambda.chosen_scalar) <= cfg.lambda_tol;
        if (!rep.stage_lambda.passed) rep.stage_lambda.indeterminate = true;
    } catch (const std::invalid_argument&) {
        rep.stage_lambda.indeterminate = true;
        rep.discrepancy_notes.push_back(
            "epsilon sign undetermined: central-value test inconclusive");
    }

    const bool all_passed = rep.stage_t.passed && rep.stage_residual.passed &&
                            rep.stage_membership.passed && rep.stage_fourier.passed &&
                            rep.stage_hecke.passed && rep.stage_lambda.passed;
    const bool any_indeterminate = rep.stage_membership.indeterminate ||
                                   rep.stage_hecke.indeterminate ||
                                   rep.stage_lambda.indeterminate;
    if (all_passed && !any_indeterminate && mode == CertifyMode::oracle &&
        rep.t_is_one)
        rep.verdict = Verdict::certified_optimal;
    else
        rep.verdict = Verdict::indeterminate;
    return rep;
}

namespace {

ordered_json complex_to_json(const Complex& c) {
    return ordered_json{{"re", c.real()}, {"im", c.imag()}};
}

Complex complex_from_json(const ordered_json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

ordered_json stage_to_json(const StageStatus& s) {
    return ordered_json{{"ran", s.ran},
                        {"passed", s.passed},
                        {"indeterminate", s.indeterminate}};
}

StageStatus stage_from_json(const ordered_json& j) {
    return {j.at("ran").get<bool>(), j.at("passed").get<bool>(),
            j.at("indeterminate").get<bool>()};
}

std::string eps_to_string(EpsilonSign e) {
    switch (e) {
        case EpsilonSign::plus: return "+1";
        case EpsilonSign::minus: return "-1";
        default: return "undetermined";
    }
}

EpsilonSign eps_from_string(const std::string& s) {
    if (s == "+1") return EpsilonSign::plus;
    if (s == "-1") return EpsilonSign::minus;
    return EpsilonSign::undetermined;
}

}  // namespace

std::string serialize_report(const CertificateReport& r) {
    ordered_json j;
    j["version"] = r.version;
    j["instance"] = r.instance_name;
    j["n"] = r.n;
    j["num_arcs"] = r.num_arcs;
    j["tour"] = r.tour_order;
    j["tour_cost"] = r.tour_cost_value;
    j["r_ref"] = r.r_ref;
    j["mode"] = to_string(r.mode);
    j["t"] = r.t.str();
    j["t_is_one"] = r.t_is_one;
    j["weight"] = r.weight;
    j["zero_budget"] = ordered_json{{"dim_cusp", r.budget.dim_cusp},
                                    {"interior_max", r.budget.interior_max},
                                    {"valence_rhs", r.budget.valence_rhs},
                                    {"required_zeros", r.budget.required_zeros}};
    j["fourier_M"] = r.fourier_M;
    j["stages"] = ordered_json{{"t_gate", stage_to_json(r.stage_t)},
                               {"residual", stage_to_json(r.stage_residual)},
                               {"membership", stage_to_json(r.stage_membership)},
                               {"fourier", stage_to_json(r.stage_fourier)},
                               {"hecke", stage_to_json(r.stage_hecke)},
                               {"lambda", stage_to_json(r.stage_lambda)}};
    j["equilibrium_residual"] = complex_to_json(r.equilibrium_residual_value);
    j["membership"] = ordered_json{{"member", r.membership.member},
                                   {"non_member", r.membership.non_member},
                                   {"indeterminate", r.membership.indeterminate}};
    j["membership_margins"] = r.membership_margins;
    j["vandermonde"] = ordered_json{{"rank", r.vandermonde_rank},
                                    {"kernel_dim", r.vandermonde_kernel_dim}};
    j["fourier_residual"] = r.fourier_residual;
    j["max_abs_coeff"] = r.max_abs_coeff;
    j["hecke"] = ordered_json{{"normalizable", r.hecke_normalizable},
                              {"max_residual", r.hecke_max_residual}};
    j["lambda"] = ordered_json{
        {"epsilon", eps_to_string(r.lambda.epsilon)},
        {"s0", r.lambda.s0},
        {"lambda_s0", complex_to_json(r.lambda.lambda_s0)},
        {"lambda_prime_s0", complex_to_json(r.lambda.lambda_prime_s0)},
        {"chosen_scalar", complex_to_json(r.lambda.chosen_scalar)},
        {"forced_scalar", complex_to_json(r.lambda.forced_scalar)},
        {"tail_estimate", r.lambda.tail_estimate},
        {"derivative_step", r.lambda.derivative_step}};
    j["verdict"] = to_string(r.verdict);
    j["discrepancy_notes"] = r.discrepancy_notes;
    return j.dump(2);
}

CertificateReport parse_report(const std::string& json_text) {
    const ordered_json j = ordered_json::parse(json_text);
    CertificateReport r;
    r.version = j.at("version").get<int>();
    r.instance_name = j.at("instance").get<std::string>();
    r.n = j.at("n").get<int>();
    r.num_arcs = j.at("num_arcs").get<int>();
    r.tour_order = j.at("tour").get<std::vector<int>>();
    r.tour_cost_value = j.at("tour_cost").get<Cost>();
    r.r_ref = j.at("r_ref").get<Cost>();
    r.mode = j.at("mode").get<std::string>() == "oracle" ? CertifyMode::oracle
                                                         : CertifyMode::self_normalized;
    {
        const std::string ts = j.at("t").get<std::string>();
        const auto slash = ts.find('/');
        r.t = Rational(std::stoll(ts.substr(0, slash)), std::stoll(ts.substr(slash + 1)));
    }
    r.t_is_one = j.at("t_is_one").get<bool>();
    r.weight = j.at("weight").get<int>();
    const auto& zb = j.at("zero_budget");
    r.budget = {zb.at("dim_cusp").get<int>(), zb.at("interior_max").get<int>(),
                zb.at("valence_rhs").get<int>(), zb.at("required_zeros").get<int>()};
    r.fourier_M = j.at("fourier_M").get<int>();
    const auto& st = j.at("stages");
    r.stage_t = stage_from_json(st.at("t_gate"));
    r.stage_residual = stage_from_json(st.at("residual"));
    r.stage_membership = stage_from_json(st.at("membership"));
    r.stage_fourier = stage_from_json(st.at("fourier"));
    r.stage_hecke = stage_from_json(st.at("hecke"));
    r.stage_lambda = stage_from_json(st.at("lambda"));
    r.equilibrium_residual_value = complex_from_json(j.at("equilibrium_residual"));
    const auto& mb = j.at("membership");
    r.membership = {mb.at("member").get<int>(), mb.at("non_member").get<int>(),
                    mb.at("indeterminate").get<int>()};
    r.membership_margins = j.at("membership_margins").get<std::vector<double>>();
    r.vandermonde_rank = j.at("vandermonde").at("rank").get<int>();
    r.vandermonde_kernel_dim = j.at("vandermonde").at("kernel_dim").get<int>();
    r.fourier_residual = j.at("fourier_residual").get<double>();
    r.max_abs_coeff = j.at("max_abs_coeff").get<double>();
    r.hecke_normalizable = j.at("hecke").at("normalizable").get<bool>();
    r.hecke_max_residual = j.at("hecke").at("max_residual").get<double>();
    const auto& lj = j.at("lambda");
    r.lambda.epsilon = eps_from_string(lj.at("epsilon").get<std::string>());
    r.lambda.s0 = lj.at("s0").get<double>();
    r.lambda.lambda_s0 = complex_from_json(lj.at("lambda_s0"));
    r.lambda.lambda_prime_s0 = complex_from_json(lj.at("lambda_prime_s0"));
    r.lambda.chosen_scalar = complex_from_json(lj.at("chosen_scalar"));
    r.lambda.forced_scalar = complex_from_json(lj.at("forced_scalar"));
    r.lambda.tail_estimate = lj.at("tail_estimate").get<double>();
    r.lambda.derivative_step = lj.at("derivative_step").get<double>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.discrepancy_notes = j.at("discrepancy_notes").get<std::vector<std::string>>();
    return r;
}

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::certified_optimal: return 0;
        case Verdict::indeterminate: return 3;
        default: return 2;
    }
}

}  // namespace modulift
