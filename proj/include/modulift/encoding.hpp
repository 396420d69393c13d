#pragma once

#include <complex>
#include <vector>

#include "modulift/atsp.hpp"
#include "modulift/rational.hpp"

namespace modulift {

using Complex = std::complex<double>;

// Complex-plane image of one arc. theta is 0 (in-tour) or pi/2
// (out-of-tour); alpha = -ln(r / r_ref) > 0.
struct ArcEncoding {
    int from = 0, to = 0;
    bool in_tour = false;
    double alpha = 0.0;
    double theta = 0.0;
    Complex s;    // (i*alpha + theta) / (2*pi)
    Complex tau;  // (i*alpha - theta) / (2*pi)

    // False for out-of-tour arcs whose cost reaches the normalizer.
    bool in_upper_half() const { return alpha > 0.0; }
};

struct EncodingSet {
    Cost r_ref = 0;
    Cost r_act = 0;
    Rational t;                 // r_ref / r_act, exact
    bool self_normalized = false;
    int n = 0;
    std::vector<ArcEncoding> arcs;  // row-major arc order

    int num_arcs() const { return static_cast<int>(arcs.size()); }
};

struct SubtourBoundResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
};

EncodingSet encode(const AtspInstance& inst, const Tour& candidate, Cost r_ref);

// Truncated series sum_{q=1..Q} (2*pi*i)^q (s^q + tau^q) / q!.
// Full series equals exp(2*pi*i*s) + exp(2*pi*i*tau) - 2.
Complex e_series(Complex s, Complex tau, int Q);
Complex e_series_closed_form(Complex s, Complex tau);

// Factorial tail bound for the truncation above.
double e_series_tail_bound(Complex s, Complex tau, int Q);

// sum_A E_{a,b} - 2*(t - |A|), evaluated with the truncated series.
Complex equilibrium_residual(const EncodingSet& enc, int Q = 60);

SubtourBoundResult subtour_bound_check(const EncodingSet& enc,
                                       const std::vector<int>& S,
                                       double eps = 1e-9);

}  // namespace modulift
