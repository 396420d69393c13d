#include "modulift/filters.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace modulift {

namespace {

constexpr double pi = std::numbers::pi;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Eigen::MatrixXcd build_vandermonde(const std::vector<Complex>& points, int M) {
    Eigen::MatrixXcd V(points.size(), M);
    for (std::size_t j = 0; j < points.size(); ++j) {
        Complex pw = 1.0;
        for (int n = 0; n < M; ++n) {
            pw *= points[j];
            V(static_cast<Eigen::Index>(j), n) = pw;
        }
    }
    return V;
}

}  // namespace

QExpansion q_coefficients(const HalfPlaneFn& f, int M, double y0, int samples,
                          int weight) {
    if (M < 1) throw std::invalid_argument("q_coefficients: M must be >= 1");
    if (y0 <= 0.0) throw std::invalid_argument("q_coefficients: y0 must be positive");
    if (samples < 4 * M)
        throw std::invalid_argument("q_coefficients: need samples >= 4M");

    // Probe 4-periodicity in the real direction at two points.
    for (double x : {0.3, 1.7}) {
        const Complex z(x, y0);
        const Complex a = f(z), b = f(z + 4.0);
        const double scale = std::max(1.0, std::abs(a));
        if (std::abs(a - b) > 1e-6 * scale)
            throw std::invalid_argument("q_coefficients: function is not 4-periodic");
    }

    std::vector<Complex> values(samples);
    for (int j = 0; j < samples; ++j)
        values[j] = f(Complex(4.0 * j / samples, y0));

    QExpansion out;
    out.weight = weight;
    out.M = M;
    out.coeffs.resize(M);
    for (int n = 1; n <= M; ++n) {
        Complex acc = 0.0;
        for (int j = 0; j < samples; ++j) {
            const double x = 4.0 * j / samples;
            acc += values[j] * std::exp(Complex(0.0, -pi * n * x / 2.0));
        }
        // a_n = e^{pi n y0 / 2} * mean_j f(x_j + i y0) e^{-pi i n x_j / 2}
        out.coeffs[n - 1] = acc / static_cast<double>(samples) *
                            std::exp(pi * n * y0 / 2.0);
    }
    out.aliasing_note = std::abs(out.coeffs.back());
    return out;
}

double VandermondeSystem::apply_residual(const std::vector<Complex>& a) const {
    if (static_cast<int>(a.size()) != M)
        throw std::invalid_argument("apply_residual: coefficient size != M");
    double worst = 0.0;
    for (const Complex& q : points) {
        Complex acc = 0.0, pw = 1.0;
        for (int n = 0; n < M; ++n) { pw *= q; acc += a[n] * pw; }
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

VandermondeSystem vandermonde_system(const std::vector<Complex>& points, int M,
                                     double rel_tol) {
    if (points.empty()) throw std::invalid_argument("vandermonde_system: no points");
    if (M < static_cast<int>(points.size()))
        throw std::invalid_argument("vandermonde_system: M must be >= |points|");
    for (const Complex& q : points)
        if (std::abs(q) >= 1.0)
            throw std::invalid_argument("vandermonde_system: |q0| must be < 1");

    VandermondeSystem sys;
    sys.points = points;
    sys.M = M;
    const Eigen::MatrixXcd V = build_vandermonde(points, M);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double thresh = rel_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rank;
    sys.rank = rank;
    sys.kernel_dim = M - rank;
    for (int k = rank; k < M; ++k) {
        std::vector<Complex> vec(M);
        for (int i = 0; i < M; ++i) vec[i] = svd.matrixV()(i, k);
        sys.kernel.push_back(std::move(vec));
    }
    return sys;
}

HeckeReport hecke_residuals(const std::vector<Complex>& coeffs, int ell,
                            const std::vector<int>& odd_primes) {
    const int M = static_cast<int>(coeffs.size());
    auto a = [&](int n) { return coeffs[static_cast<std::size_t>(n) - 1]; };
    HeckeReport rep;
    for (int p : odd_primes) {
        if (p % 2 == 0) throw std::invalid_argument("even prime excluded");
        if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
        if (p * p > M)
            throw std::invalid_argument("p^2 exceeds coefficient range for p = " +
                                        std::to_string(p));
        const Complex res = a(p * p) - (a(p) * a(p) - std::pow(static_cast<double>(p),
                                                               ell - 1));
        rep.primes.push_back(p);
        rep.prime_residuals.push_back(res);
        rep.max_residual = std::max(rep.max_residual, std::abs(res));
    }
    // d = 1 specialization of the divisor relation under a_1-normalization:
    // odd coprime (m, n) with mn <= M must satisfy a_{mn} = a_m a_n.
    for (int m = 3; m <= M; m += 2)
        for (int n = m + 2; static_cast<long long>(m) * n <= M; n += 2) {
            if (std::gcd(m, n) != 1) continue;
            const Complex res = a(m * n) - a(m) * a(n);
            rep.pairs.emplace_back(m, n);
            rep.pair_residuals.push_back(res);
            rep.max_residual = std::max(rep.max_residual, std::abs(res));
        }
    return rep;
}

Complex complex_gamma(Complex s) {
    // Lanczos, g = 7, 9 terms.
    static const double coef[] = {
        0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,  12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (s.real() < 0.5) {
        if (s.imag() == 0.0 && s.real() == std::floor(s.real()))
            throw std::invalid_argument("complex_gamma: pole at a non-positive integer");
        // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return pi / (std::sin(pi * s) * complex_gamma(1.0 - s));
    }
    const Complex z = s - 1.0;
    Complex x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
    const Complex t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

LambdaValue lambda_complete(const std::vector<Complex>& coeffs, int ell, Complex s) {
    const int M = static_cast<int>(coeffs.size());
    if (M < 1) throw std::invalid_argument("lambda_complete: empty coefficients");
    Complex dirichlet = 0.0;
    double max_abs = 0.0;
    for (int n = 1; n <= M; ++n) {
        const Complex an = coeffs[static_cast<std::size_t>(n) - 1];
        max_abs = std::max(max_abs, std::abs(an));
        dirichlet += an * std::exp(-s * std::log(static_cast<double>(n)));
    }
    const Complex gamma_factor =
        complex_gamma(s + (static_cast<double>(ell) - 1.0) / 2.0);
    const Complex prefactor = std::pow(2.0 * pi, -s);
    LambdaValue out;
    out.value = prefactor * gamma_factor * dirichlet;
    // tail <= max|a_n| * integral_M^inf u^{-Re s} du for Re s > 1
    const double sigma = s.real();
    if (sigma > 1.0)
        out.tail_estimate = std::abs(prefactor * gamma_factor) * max_abs *
                            std::pow(static_cast<double>(M), 1.0 - sigma) /
                            (sigma - 1.0);
    else
        out.tail_estimate = std::numeric_limits<double>::infinity();
    return out;
}

EpsilonSign epsilon_from_evaluator(const LambdaFn& lambda, int ell,
                                   const std::vector<double>& probe_offsets,
                                   double tol) {
    if (probe_offsets.size() < 3)
        throw std::invalid_argument("epsilon: need at least 3 probe offsets");
    const double s0 = (ell + 1.0) / 2.0;
    bool all_plus = true, all_minus = true;
    bool any = false;
    for (double h : probe_offsets) {
        if (h == 0.0) continue;  // the center probes nothing
        const Complex num = lambda(Complex(s0 + h, 0.0));
        const Complex den = lambda(Complex(s0 - h, 0.0));
        if (std::abs(den) < 1e-300) continue;
        const Complex rho = num / den;
        any = true;
        if (std::abs(rho - 1.0) > tol) all_plus = false;
        if (std::abs(rho + 1.0) > tol) all_minus = false;
    }
    if (!any) throw std::invalid_argument("epsilon: all mirror values below noise floor");
    if (all_plus && !all_minus) return EpsilonSign::plus;
    if (all_minus && !all_plus) return EpsilonSign::minus;
    return EpsilonSign::undetermined;
}

EpsilonSign epsilon_sign(const std::vector<Complex>& coeffs, int ell,
                         const std::vector<double>& probe_offsets, double tol) {
    return epsilon_from_evaluator(
        [&](Complex s) { return lambda_complete(coeffs, ell, s).value; }, ell,
        probe_offsets, tol);
}

LambdaReport central_test_from_evaluator(const LambdaFn& lambda, int ell,
                                         double step, double eps_tol) {
    LambdaReport rep;
    rep.s0 = (ell + 1.0) / 2.0;
    rep.derivative_step = step;
    rep.epsilon = epsilon_from_evaluator(lambda, ell, {0.5, 1.0, 1.5}, eps_tol);
    rep.lambda_s0 = lambda(Complex(rep.s0, 0.0));
    rep.lambda_prime_s0 = (lambda(Complex(rep.s0 + step, 0.0)) -
                           lambda(Complex(rep.s0 - step, 0.0))) /
                          (2.0 * step);
    if (rep.epsilon == EpsilonSign::undetermined)
        throw std::invalid_argument("central_test: undetermined epsilon");
    // Parity pairing: eps = -1 forces Lambda(s0) = 0 and the reported
    // scalar is the derivative; eps = +1 the other way around.
    if (rep.epsilon == EpsilonSign::plus) {
        rep.chosen_scalar = rep.lambda_s0;
        rep.forced_scalar = rep.lambda_prime_s0;
    } else {
        rep.chosen_scalar = rep.lambda_prime_s0;
        rep.forced_scalar = rep.lambda_s0;
    }
    return rep;
}

LambdaReport central_test(const std::vector<Complex>& coeffs, int ell, double step) {
    auto rep = central_test_from_evaluator(
        [&](Complex s) { return lambda_complete(coeffs, ell, s).value; }, ell, step);
    rep.tail_estimate =
        lambda_complete(coeffs, ell, Complex(rep.s0, 0.0)).tail_estimate;
    return rep;
}

std::vector<Complex> synthesize_eigen_sequence(
    const std::vector<std::pair<int, Complex>>& prime_eigenvalues, int ell, int M) {
    std::vector<Complex> a(M, Complex(0.0));
    a[0] = 1.0;
    // prime powers first, via a_{p^{k+1}} = a_p a_{p^k} - p^{l-1} a_{p^{k-1}}
    for (auto [p, lam] : prime_eigenvalues) {
        if (p % 2 == 0 || !is_prime(p))
            throw std::invalid_argument("synthesize: odd primes only");
        const double pw = std::pow(static_cast<double>(p), ell - 1);
        Complex prev = 1.0, cur = lam;
        long long pk = p;
        while (pk <= M) {
            a[static_cast<std::size_t>(pk) - 1] = cur;
            const Complex next = lam * cur - pw * prev;
            prev = cur;
            cur = next;
            pk *= p;
        }
    }
    // multiplicative fill-in over odd composites
    for (int n = 3; n <= M; n += 2) {
        int p = 3;
        while (p * p <= n && n % p != 0) p += 2;
        if (n % p != 0) continue;  // prime, already set
        int pk = 1;
        int rest = n;
        while (rest % p == 0) { pk *= p; rest /= p; }
        if (rest > 1) a[n - 1] = a[pk - 1] * a[rest - 1];
    }
    return a;
}

}  // namespace modulift
