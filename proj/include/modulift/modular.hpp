#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace modulift {

using Complex = std::complex<double>;

// One representative of a Gamma_inf \ Gamma(4) coset:
// det = 1, a == d == 1 (mod 4), b == c == 0 (mod 4), d == 1 (mod 4)
// picks the representative, (c,d) coprime.
struct CosetRep {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    Complex apply(Complex z) const {
        return (static_cast<double>(a) * z + static_cast<double>(b)) /
               (static_cast<double>(c) * z + static_cast<double>(d));
    }
    Complex denom(Complex z) const {
        return static_cast<double>(c) * z + static_cast<double>(d);
    }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

struct LiftConfig {
    int weight = 4;          // even, > 2
    int height = 64;         // |c|, |d| enumeration bound
    double tail_tol = 1e-8;
    double zero_tol = 1e-6;
    double sep_margin = 10.0;

    // Weight-dependent defaults: ell = 4 converges like H^-2, so it gets
    // a doubled height and a relaxed zero tolerance.
    static LiftConfig defaults_for_weight(int ell);
    void check() const;  // throws on invalid weight/height/tolerances
};

struct ZeroBudget {
    int dim_cusp = 0;        // 4*ell - 7
    int interior_max = 0;    // 4*ell - 2
    int valence_rhs = 0;     // 4*ell
    int required_zeros = 0;  // 2*n
};

enum class ZeroKind { interior, cuspidal, exterior };

struct SeedZero {
    Complex z;
    ZeroKind kind = ZeroKind::interior;
};

struct PoincareResult {
    Complex value;
    double tail_bound = 0.0;
};

enum class Membership { member, non_member, indeterminate };

struct MembershipResult {
    Membership status = Membership::indeterminate;
    double magnitude = 0.0;
    double margin = 0.0;       // magnitude / zero_tol
    double tail_bound = 0.0;
};

enum class WeightPolicy { min, max_budget };

Complex seed_eval(Complex z, double t);
Complex seed_derivative(Complex z, double t);

std::vector<SeedZero> seed_zeros(double t, int k_min, int k_max);

std::vector<CosetRep> coset_reps(int height);

PoincareResult poincare_eval(Complex z, double t, const LiftConfig& cfg);

std::optional<int> select_weight(int num_arcs, int n, WeightPolicy policy);

ZeroBudget zero_budget(int ell, int n);

MembershipResult lift_membership(Complex p, double t, const LiftConfig& cfg);

}  // namespace modulift
