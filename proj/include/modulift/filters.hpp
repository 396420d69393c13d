#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace modulift {

using Complex = std::complex<double>;

// Fourier coefficients a_1..a_M in the width-4 convention q = e^{pi i z / 2}.
struct QExpansion {
    int weight = 0;
    int M = 0;
    std::vector<Complex> coeffs;  // coeffs[k] = a_{k+1}
    double aliasing_note = 0.0;   // magnitude of the largest recovered index

    Complex a(int n) const { return coeffs[static_cast<std::size_t>(n - 1)]; }
};

struct VandermondeSystem {
    std::vector<Complex> points;              // q0 values, |q0| < 1
    int M = 0;
    int rank = 0;
    int kernel_dim = 0;                       // M - rank
    std::vector<std::vector<Complex>> kernel; // basis of ker V (columns)

    // Residual of V a for a given coefficient vector (size M), max norm.
    double apply_residual(const std::vector<Complex>& a) const;
};

struct HeckeReport {
    std::vector<int> primes;                   // odd primes tested
    std::vector<Complex> prime_residuals;      // a_{p^2} - (a_p^2 - p^{ell-1})
    std::vector<std::pair<int, int>> pairs;    // odd coprime (m, n), mn <= M
    std::vector<Complex> pair_residuals;       // a_{mn} - a_m * a_n
    double max_residual = 0.0;
};

struct LambdaValue {
    Complex value;
    double tail_estimate = 0.0;
};

enum class EpsilonSign { plus, minus, undetermined };

struct LambdaReport {
    EpsilonSign epsilon = EpsilonSign::undetermined;
    double s0 = 0.0;                 // (ell + 1) / 2
    Complex lambda_s0;               // Lambda(s0)
    Complex lambda_prime_s0;         // Lambda'(s0), central difference
    Complex chosen_scalar;           // Lambda(s0) for eps=+1, Lambda'(s0) for eps=-1
    Complex forced_scalar;           // the quantity the parity forces to zero
    double tail_estimate = 0.0;
    double derivative_step = 1e-4;
};

using HalfPlaneFn = std::function<Complex(Complex)>;
using LambdaFn = std::function<Complex(Complex)>;

QExpansion q_coefficients(const HalfPlaneFn& f, int M, double y0, int samples,
                          int weight = 0);

VandermondeSystem vandermonde_system(const std::vector<Complex>& points, int M,
                                     double rel_tol = 1e-10);

HeckeReport hecke_residuals(const std::vector<Complex>& coeffs, int ell,
                            const std::vector<int>& odd_primes);

Complex complex_gamma(Complex s);

LambdaValue lambda_complete(const std::vector<Complex>& coeffs, int ell, Complex s);

// Sign of the functional equation Lambda(s) = eps * Lambda(ell+1-s), probed
// at points symmetric about s0. The evaluator form is the primitive; the
// coefficient form wraps lambda_complete.
EpsilonSign epsilon_from_evaluator(const LambdaFn& lambda, int ell,
                                   const std::vector<double>& probe_offsets,
                                   double tol = 1e-6);

EpsilonSign epsilon_sign(const std::vector<Complex>& coeffs, int ell,
                         const std::vector<double>& probe_offsets,
                         double tol = 1e-6);

LambdaReport central_test(const std::vector<Complex>& coeffs, int ell,
                          double step = 1e-4);

LambdaReport central_test_from_evaluator(const LambdaFn& lambda, int ell,
                                         double step = 1e-4,
                                         double eps_tol = 1e-6);

// Test-side oracle: multiplicative coefficient sequence generated from
// freely chosen odd-prime eigenvalues via the Hecke recursion.
std::vector<Complex> synthesize_eigen_sequence(
    const std::vector<std::pair<int, Complex>>& prime_eigenvalues, int ell, int M);

}  // namespace modulift
