#include "modulift/modular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace modulift {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// x*u + y*v = gcd(u, v)
void ext_gcd(std::int64_t u, std::int64_t v, std::int64_t& x, std::int64_t& y) {
    if (v == 0) { x = u >= 0 ? 1 : -1; y = 0; return; }
    std::int64_t x1, y1;
    ext_gcd(v, u % v, x1, y1);
    x = y1;
    y = x1 - (u / v) * y1;
}

std::int64_t mod4(std::int64_t v) { return ((v % 4) + 4) % 4; }

// MODULIFT_THREADS caps the coset-term workers; default 1.
int worker_count() {
    const char* env = std::getenv("MODULIFT_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(v, 1, hw > 0 ? hw : 1);
}

}  // namespace

LiftConfig LiftConfig::defaults_for_weight(int ell) {
    LiftConfig cfg;
    cfg.weight = ell;
    if (ell == 4) {
        cfg.height = 128;     // H^-2 tail decay needs the extra height
        cfg.zero_tol = 1e-4;
    } else {
        cfg.height = 64;
        cfg.zero_tol = 1e-6;
    }
    cfg.tail_tol = 1e-8;
    cfg.sep_margin = 10.0;
    return cfg;
}

void LiftConfig::check() const {
    if (weight <= 2 || weight % 2 != 0)
        throw std::invalid_argument("lift weight must be even and > 2");
    if (height < 1) throw std::invalid_argument("height bound must be >= 1");
    if (tail_tol <= 0 || zero_tol <= 0 || sep_margin <= 0)
        throw std::invalid_argument("tolerances must be positive");
}

Complex seed_eval(Complex z, double t) {
    if (t <= 0.0 || t > 1.0)
        throw std::invalid_argument("seed_eval: t must lie in (0, 1]");
    return std::exp(Complex(0.0, two_pi) * z) - t;
}

Complex seed_derivative(Complex z, double t) {
    (void)t;
    return Complex(0.0, two_pi) * std::exp(Complex(0.0, two_pi) * z);
}

std::vector<SeedZero> seed_zeros(double t, int k_min, int k_max) {
    if (t <= 0.0) throw std::invalid_argument("seed_zeros: t must be positive");
    const double y = -std::log(t) / two_pi;
    ZeroKind kind = ZeroKind::interior;
    if (t == 1.0) kind = ZeroKind::cuspidal;
    else if (t > 1.0) kind = ZeroKind::exterior;
    std::vector<SeedZero> zeros;
    for (int k = k_min; k <= k_max; ++k)
        zeros.push_back({Complex(static_cast<double>(k), y), kind});
    return zeros;
}

std::vector<CosetRep> coset_reps(int height) {
    if (height < 1) throw std::invalid_argument("coset_reps: height must be >= 1");
    std::vector<CosetRep> reps;
    for (std::int64_t c = -(height / 4) * 4; c <= height; c += 4) {
        for (std::int64_t d = -height; d <= height; ++d) {
            if (mod4(d) != 1) continue;
            if (std::gcd(std::abs(c), std::abs(d)) != 1) continue;
            // Complete (c,d) to a determinant-1 matrix, then shift b into
            // b == 0 (mod 4); a == 1 (mod 4) is forced by a*d == 1 + b*c.
            std::int64_t x, y;
            ext_gcd(d, c, x, y);       // x*d + y*c = 1
            std::int64_t a = x, b = -y;  // a*d - b*c = 1
            const std::int64_t k = mod4(-b * d);  // d == 1 (mod 4), so d^-1 == 1
            a += k * c;
            b += k * d;
            reps.push_back({a, b, c, d});
        }
    }
    std::sort(reps.begin(), reps.end(), [](const CosetRep& l, const CosetRep& r) {
        const auto lk = std::max(std::abs(l.c), std::abs(l.d));
        const auto rk = std::max(std::abs(r.c), std::abs(r.d));
        return std::tie(lk, l.c, l.d) < std::tie(rk, r.c, r.d);
    });
    return reps;
}

PoincareResult poincare_eval(Complex z, double t, const LiftConfig& cfg) {
    cfg.check();
    if (z.imag() <= 0.0)
        throw std::invalid_argument("poincare_eval: Im(z) must be positive");

    const auto reps = coset_reps(cfg.height);
    std::vector<Complex> terms(reps.size());
    const auto eval_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& g = reps[i];
            terms[i] = std::pow(g.denom(z), -cfg.weight) * seed_eval(g.apply(z), t);
        }
    };
    const int workers = worker_count();
    if (workers > 1 && reps.size() > 1024) {
        std::vector<std::thread> pool;
        const std::size_t chunk = (reps.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(reps.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(eval_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    } else {
        eval_range(0, reps.size());
    }

    // Kahan-compensated reduction in the sorted rep order; the result is
    // independent of how terms were scheduled above.
    Complex sum = 0.0, comp = 0.0;
    for (const Complex& term : terms) {
        const Complex y_ = term - comp;
        const Complex s_ = sum + y_;
        comp = (s_ - sum) - y_;
        sum = s_;
    }

    // |cz+d|^2 >= delta * (c^2+d^2) with delta the smallest eigenvalue bound
    // y^2 / (1+|z|^2) of the quadratic form; at most 8k lattice pairs have
    // max(|c|,|d|) = k, giving tail <= (1+t) * delta^{-l/2} * 8 H^{2-l}/(l-2).
    const double yz = z.imag();
    const double delta = yz * yz / (1.0 + std::norm(z));
    const double tail = (1.0 + t) * std::pow(delta, -cfg.weight / 2.0) * 8.0 *
                        std::pow(static_cast<double>(cfg.height), 2.0 - cfg.weight) /
                        (cfg.weight - 2.0);
    return {sum, tail};
}

std::optional<int> select_weight(int num_arcs, int n, WeightPolicy policy) {
    if (num_arcs < 1) throw std::invalid_argument("select_weight: need |A| >= 1");
    std::vector<int> admissible;
    for (int ell = 4; 4 * ell - 7 < 2 * num_arcs; ell += 2) admissible.push_back(ell);
    if (admissible.empty()) return std::nullopt;
    if (policy == WeightPolicy::min) return admissible.front();
    // max_budget additionally needs the interior-zero count 2n to exceed
    // the valence bound 4*ell - 2.
    std::optional<int> best;
    for (int ell : admissible)
        if (2 * n > 4 * ell - 2) best = ell;
    return best;
}

ZeroBudget zero_budget(int ell, int n) {
    if (ell <= 2 || ell % 2 != 0)
        throw std::invalid_argument("zero_budget: weight must be even and > 2");
    return {4 * ell - 7, 4 * ell - 2, 4 * ell, 2 * n};
}

MembershipResult lift_membership(Complex p, double t, const LiftConfig& cfg) {
    if (p.imag() <= 0.0)
        throw std::invalid_argument("lift_membership: Im(p) must be positive");
    const PoincareResult pr = poincare_eval(p, t, cfg);
    MembershipResult res;
    res.magnitude = std::abs(pr.value);
    res.tail_bound = pr.tail_bound;
    res.margin = res.magnitude / cfg.zero_tol;
    if (res.magnitude < cfg.zero_tol && pr.tail_bound < cfg.zero_tol)
        res.status = Membership::member;
    else if (res.magnitude > cfg.sep_margin * cfg.zero_tol)
        res.status = Membership::non_member;
    else
        res.status = Membership::indeterminate;
    return res;
}

}  // namespace modulift
