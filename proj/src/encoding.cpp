#include "modulift/encoding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modulift {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

EncodingSet encode(const AtspInstance& inst, const Tour& candidate, Cost r_ref) {
    inst.check_valid();
    const auto validation = validate_tour(inst, candidate);
    if (!validation.ok()) throw std::invalid_argument("invalid candidate tour");
    if (r_ref <= 0) throw std::invalid_argument("normalizer must be positive");

    const auto succ = candidate.successor();
    EncodingSet enc;
    enc.r_ref = r_ref;
    enc.r_act = tour_cost(inst, candidate);
    enc.t = Rational(r_ref, enc.r_act);
    enc.self_normalized = (r_ref == enc.r_act);
    enc.n = inst.n;

    for (auto [a, b] : inst.arcs()) {
        const bool in_tour = succ[a] == b;
        const Cost r = inst.cost(a, b);
        if (in_tour && r >= r_ref)
            throw std::invalid_argument("normalizer too small: in-tour arc cost " +
                                        std::to_string(r) + " >= r_ref " +
                                        std::to_string(r_ref));
        ArcEncoding e;
        e.from = a;
        e.to = b;
        e.in_tour = in_tour;
        // Out-of-tour arcs may cost more than r_ref; they then carry
        // alpha <= 0 and their points leave the upper half-plane. The
        // certifier counts and reports them instead of failing here.
        e.alpha = -std::log(static_cast<double>(r) / static_cast<double>(r_ref));
        e.theta = in_tour ? 0.0 : std::numbers::pi / 2.0;
        const double y = e.alpha / two_pi;
        const double x = e.theta / two_pi;  // 0 or 1/4
        e.s = Complex(x, y);
        e.tau = Complex(-x, y);
        enc.arcs.push_back(e);
    }
    return enc;
}

Complex e_series(Complex s, Complex tau, int Q) {
    if (Q < 1) throw std::invalid_argument("e_series: Q must be >= 1");
    // Intermediate terms can exceed the limit by several orders of magnitude
    // before cancelling, so the sum runs in extended precision.
    using CL = std::complex<long double>;
    const CL w(0.0L, 2.0L * std::numbers::pi_v<long double>);
    const CL sl(s.real(), s.imag()), tl(tau.real(), tau.imag());
    CL term_s = 1.0L, term_tau = 1.0L, sum = 0.0L;
    for (int q = 1; q <= Q; ++q) {
        term_s *= w * sl / static_cast<long double>(q);
        term_tau *= w * tl / static_cast<long double>(q);
        sum += term_s + term_tau;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

Complex e_series_closed_form(Complex s, Complex tau) {
    using CL = std::complex<long double>;
    const CL w(0.0L, 2.0L * std::numbers::pi_v<long double>);
    const CL v = std::exp(w * CL(s.real(), s.imag())) +
                 std::exp(w * CL(tau.real(), tau.imag())) - 2.0L;
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double e_series_tail_bound(Complex s, Complex tau, int Q) {
    const double r = two_pi * std::max({std::abs(s), std::abs(tau), 1.0});
    // sum_{q>Q} r^q / q! * 2, bounded by the geometric tail once r/q < 1/2
    double term = 1.0;
    for (int q = 1; q <= Q; ++q) term *= r / q;
    double bound = 0.0;
    double factor = r / (Q + 1);
    if (factor < 1.0) bound = 2.0 * term * factor / (1.0 - factor);
    else {
        // walk forward until the ratio drops below 1/2, then geometric tail
        double t = term;
        int q = Q;
        while (r / (q + 1) >= 0.5) { ++q; t *= r / q; bound += 2.0 * t; }
        bound += 2.0 * t;
    }
    return bound;
}

Complex equilibrium_residual(const EncodingSet& enc, int Q) {
    const double tol = 1e-9;
    for (const auto& e : enc.arcs) {
        if (e_series_tail_bound(e.s, e.tau, Q) > tol)
            throw std::invalid_argument("equilibrium_residual: Q too small for tolerance");
    }
    Complex sum = 0.0;
    for (const auto& e : enc.arcs) sum += e_series(e.s, e.tau, Q);
    const double t = enc.t.to_double();
    return sum - 2.0 * (t - static_cast<double>(enc.num_arcs()));
}

SubtourBoundResult subtour_bound_check(const EncodingSet& enc,
                                       const std::vector<int>& S, double eps) {
    const int size = static_cast<int>(S.size());
    if (size < 2 || size > enc.n - 1)
        throw std::invalid_argument("subtour_bound_check: need 2 <= |S| <= n-1");
    std::vector<char> in_s(enc.n, 0);
    for (int v : S) in_s[v] = 1;
    double lhs = 0.0;
    for (const auto& e : enc.arcs)
        if (in_s[e.from] && in_s[e.to]) lhs += std::cos(e.theta);
    // n * exp(2 m pi i + ln((|S|-1)/n)) collapses to |S| - 1 for every m, k
    const double rhs = static_cast<double>(size - 1);
    return {lhs, rhs, lhs <= rhs + eps};
}

}  // namespace modulift
