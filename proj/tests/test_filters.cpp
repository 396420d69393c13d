#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "modulift/filters.hpp"

using namespace modulift;

namespace {

constexpr double pi = std::numbers::pi;

// f(z) = sum a_n e^{pi i n z / 2} for a finitely supported sequence
HalfPlaneFn tone_sum(std::vector<std::pair<int, Complex>> tones) {
    return [tones = std::move(tones)](Complex z) {
        Complex acc = 0.0;
        for (const auto& [n, c] : tones)
            acc += c * std::exp(Complex(0.0, pi * n / 2.0) * z);
        return acc;
    };
}

}  // namespace

TEST_CASE("pure tones are recovered exactly") {
    const auto qe = q_coefficients(tone_sum({{3, 1.0}}), 8, 0.8, 64);
    CHECK(std::abs(qe.a(3) - 1.0) < 1e-10);
    for (int n = 1; n <= 8; ++n)
        if (n != 3) CHECK(std::abs(qe.a(n)) < 1e-10);
    // the width-4 convention: e^{2 pi i z} is the n = 4 tone
    const auto qe4 = q_coefficients(
        [](Complex z) { return std::exp(Complex(0.0, 2.0 * pi) * z); }, 8, 0.8, 64);
    CHECK(std::abs(qe4.a(4) - 1.0) < 1e-10);
}

TEST_CASE("coefficient extraction is linear") {
    const Complex c(2.5, -1.0);
    const auto f = tone_sum({{2, 1.0}, {5, Complex(0, 1)}});
    const auto g = tone_sum({{2, c}, {5, c * Complex(0, 1)}});
    const auto qf = q_coefficients(f, 6, 0.6, 32);
    const auto qg = q_coefficients(g, 6, 0.6, 32);
    for (int n = 1; n <= 6; ++n) CHECK(std::abs(qg.a(n) - c * qf.a(n)) < 1e-9);
}

TEST_CASE("extraction demands enough samples and 4-periodicity") {
    CHECK_THROWS_WITH_AS(q_coefficients(tone_sum({{1, 1.0}}), 8, 0.8, 16),
                         doctest::Contains("samples"), std::invalid_argument);
    const auto aperiodic = [](Complex z) { return z; };
    CHECK_THROWS_WITH_AS(q_coefficients(aperiodic, 4, 0.8, 16),
                         doctest::Contains("periodic"), std::invalid_argument);
}

TEST_CASE("round trip: synthesis then extraction is the identity") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<std::pair<int, Complex>> tones;
    std::vector<Complex> want(32, Complex(0.0));
    for (int n : {1, 4, 7, 15, 31}) {
        const Complex c(dist(rng), dist(rng));
        tones.emplace_back(n, c);
        want[n - 1] = c;
    }
    const auto qe = q_coefficients(tone_sum(tones), 32, 0.1, 128);
    for (int n = 1; n <= 32; ++n) CHECK(std::abs(qe.a(n) - want[n - 1]) < 1e-9);
}

TEST_CASE("vandermonde 2x2 arithmetic") {
    const auto sys = vandermonde_system({Complex(0.1), Complex(0.2)}, 2);
    CHECK(sys.rank == 2);
    CHECK(sys.kernel_dim == 0);
    CHECK(sys.kernel.empty());
}

TEST_CASE("duplicated point drops the rank") {
    const auto sys = vandermonde_system({Complex(0.1), Complex(0.1)}, 2);
    CHECK(sys.rank == 1);
    CHECK(sys.kernel_dim == 1);
    REQUIRE(sys.kernel.size() == 1);
    // the kernel vector really annihilates both rows
    CHECK(sys.apply_residual(sys.kernel[0]) < 1e-12);
}

TEST_CASE("rank equals the number of distinct points") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> rad(0.2, 0.85), ang(0.0, 2.0 * pi);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> pts;
        for (int i = 0; i < 5; ++i)
            pts.push_back(std::polar(rad(rng), ang(rng)));
        const auto sys = vandermonde_system(pts, 7);
        CHECK(sys.rank == 5);
        CHECK(sys.kernel_dim == 2);
    }
}

TEST_CASE("vandermonde input validation") {
    CHECK_THROWS_AS(vandermonde_system({}, 2), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_system({Complex(1.0)}, 2), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_system({Complex(0.1), Complex(0.2)}, 1),
                    std::invalid_argument);
}

TEST_CASE("synthetic eigen-sequences satisfy every tested relation") {
    const int ell = 4, M = 120;
    std::vector<std::pair<int, Complex>> eigen;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        eigen.emplace_back(p, Complex(dist(rng), 0.0));
    const auto a = synthesize_eigen_sequence(eigen, ell, M);
    const auto rep = hecke_residuals(a, ell, {3, 5, 7});
    CHECK(rep.max_residual < 1e-10);
    CHECK(rep.primes.size() == 3);
    CHECK(!rep.pairs.empty());
}

TEST_CASE("a single perturbation is detected at the right prime") {
    const int ell = 4, M = 30;
    auto a = synthesize_eigen_sequence({{3, Complex(2.0)}, {5, Complex(-1.0)}}, ell, M);
    a[8] += 1e-3;  // a_9 = a_{3^2}
    const auto rep = hecke_residuals(a, ell, {3, 5});
    REQUIRE(rep.primes[0] == 3);
    CHECK(std::abs(rep.prime_residuals[0]) == doctest::Approx(1e-3).epsilon(1e-6));
    CHECK(std::abs(rep.prime_residuals[1]) < 1e-12);
}

TEST_CASE("hecke argument validation") {
    const auto a = synthesize_eigen_sequence({{3, Complex(1.0)}}, 4, 20);
    CHECK_THROWS_WITH_AS(hecke_residuals(a, 4, {2}),
                         doctest::Contains("even prime excluded"),
                         std::invalid_argument);
    CHECK_THROWS_AS(hecke_residuals(a, 4, {5}), std::invalid_argument);  // 25 > 20
    CHECK_THROWS_AS(hecke_residuals(a, 4, {9}), std::invalid_argument);  // not prime
}

TEST_CASE("gamma special values and functional identity") {
    CHECK(std::abs(complex_gamma(Complex(0.5)) - std::sqrt(pi)) < 1e-12);
    CHECK(std::abs(complex_gamma(Complex(5.0)) - 24.0) < 1e-10);
    const Complex s(2.5, 1.0);
    CHECK(std::abs(complex_gamma(s + 1.0) - s * complex_gamma(s)) <
          1e-10 * std::abs(complex_gamma(s + 1.0)));
    CHECK_THROWS_AS(complex_gamma(Complex(-2.0)), std::invalid_argument);
}

TEST_CASE("gamma accuracy across the working strip") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> re(0.5, 29.0), im(-29.0, 29.0);
    for (int i = 0; i < 40; ++i) {
        const Complex s(re(rng), im(rng));
        const Complex lhs = complex_gamma(s + 1.0);
        const Complex rhs = s * complex_gamma(s);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
    }
}

TEST_CASE("lambda reduces to the gamma factor for L == 1") {
    const int ell = 4;
    std::vector<Complex> coeffs(10, Complex(0.0));
    coeffs[0] = 1.0;
    const Complex s(3.0, 0.0);
    const auto lam = lambda_complete(coeffs, ell, s);
    const Complex expect =
        std::pow(Complex(2.0 * pi), -s) * complex_gamma(s + 1.5);
    CHECK(std::abs(lam.value - expect) < 1e-12 * std::abs(expect));
    // s0 = 2.5 at ell = 4 puts the gamma argument at 4
    CHECK((ell + 1.0) / 2.0 + (ell - 1.0) / 2.0 == doctest::Approx(4.0));
}

TEST_CASE("lambda is linear in the coefficients") {
    std::vector<Complex> a{1.0, Complex(0, 2), 0.5};
    std::vector<Complex> b = a;
    const Complex c(3.0, -1.0);
    for (auto& v : b) v *= c;
    const Complex s(4.0, 0.5);
    const auto la = lambda_complete(a, 4, s);
    const auto lb = lambda_complete(b, 4, s);
    CHECK(std::abs(lb.value - c * la.value) < 1e-12 * std::abs(lb.value));
}

TEST_CASE("parity detection on synthetic even and odd functions") {
    const int ell = 4;
    const double s0 = 2.5;
    const LambdaFn even = [&](Complex s) { return std::exp(-(s - s0) * (s - s0)); };
    const LambdaFn odd = [&](Complex s) {
        return (s - s0) * std::exp(-(s - s0) * (s - s0));
    };
    CHECK(epsilon_from_evaluator(even, ell, {0.5, 1.0, 1.5}) == EpsilonSign::plus);
    CHECK(epsilon_from_evaluator(odd, ell, {0.5, 1.0, 1.5}) == EpsilonSign::minus);

    const auto even_rep = central_test_from_evaluator(even, ell);
    CHECK(even_rep.epsilon == EpsilonSign::plus);
    CHECK(std::abs(even_rep.forced_scalar) < 1e-8);   // Lambda'(s0)
    CHECK(std::abs(even_rep.chosen_scalar - 1.0) < 1e-8);

    const auto odd_rep = central_test_from_evaluator(odd, ell);
    CHECK(odd_rep.epsilon == EpsilonSign::minus);
    CHECK(std::abs(odd_rep.forced_scalar) < 1e-10);   // Lambda(s0)
    CHECK(std::abs(odd_rep.chosen_scalar - 1.0) < 1e-6);
}

TEST_CASE("mixed parity is undetermined") {
    const int ell = 4;
    const double s0 = 2.5;
    // even in one probe pair, odd in another
    const LambdaFn mixed = [&](Complex s) {
        const Complex d = s - s0;
        return 1.0 + d * d * d;
    };
    CHECK(epsilon_from_evaluator(mixed, ell, {0.5, 1.0, 1.5}) ==
          EpsilonSign::undetermined);
    CHECK_THROWS_AS(central_test_from_evaluator(mixed, ell), std::invalid_argument);
}

TEST_CASE("derivative step halving agrees at second order") {
    const int ell = 4;
    const double s0 = 2.5;
    const LambdaFn f = [&](Complex s) { return std::exp(-(s - s0) * (s - s0)); };
    const auto h1 = central_test_from_evaluator(f, ell, 1e-3);
    const auto h2 = central_test_from_evaluator(f, ell, 5e-4);
    CHECK(std::abs(h1.lambda_prime_s0 - h2.lambda_prime_s0) < 1e-6);
}
