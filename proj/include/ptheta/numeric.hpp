#pragma once

#include "ptheta/bigfloat.hpp"

#include <optional>
#include <vector>

namespace ptheta {

/* f_b(t) = 2 sum_{n>=0} (-1)^n q^{n^2+bn} with q = (1-t)/(1+t), summed
 * until the next term drops below 2^{-P-8}; the alternating tail then
 * bounds the truncation error by that term. Accepts real b (the series
 * converges for any real b once 0 < q < 1). Requires 0 < t < 1, P >= 64. */
BigFloat eval_f(const BigFloat& b, const BigFloat& t, long prec_bits);
BigFloat eval_f(int b, const BigFloat& t, long prec_bits);

struct ExtractionResult {
	std::vector<BigFloat> coeffs;           // a-hat_0 .. a-hat_count
	std::vector<BigFloat> error_estimates;  // heuristic, per coefficient
};

/* Leading expansion coefficients of f_b at t -> 0+ by iterated subtraction:
 * h_n(t) = (f(t) - sum_{k<n} a-hat_k t^k) / t^n on the geometric grid
 * t0 r^j, j < grid_depth, extrapolated to t = 0 by Neville's scheme. The
 * error estimate per coefficient is the spread between the three deepest
 * extrapolants; if a tolerance is supplied, exceeding it throws (raise the
 * precision or shrink t0). */
ExtractionResult extract_coeffs(const BigFloat& b, int count,
                                const BigFloat& t0, const BigFloat& ratio,
                                long prec_bits, int grid_depth = 24,
                                std::optional<BigFloat> tolerance = {});

/* Dedekind eta, eta(tau) = e^{2 pi i tau / 24} prod_{n>=1} (1 - e^{2 pi i n tau}),
 * truncated once |e^{2 pi i n tau}| < 2^{-P-8}. Im(tau) > 0 required. */
BigComplex eta_eval(const BigComplex& tau, long prec_bits);

/* |eta(-1/tau) - sqrt(-i tau) eta(tau)| with the principal square root.
 * Re(-i tau) = Im(tau) > 0 keeps the argument off the branch cut. */
BigFloat modular_check(const BigComplex& tau, long prec_bits);

/* g(i theta / 2 pi) where g(tau) = eta(tau)^2 / eta(2 tau), evaluated
 * through the modular transformation (the direct product loses all
 * precision as theta -> 0+). Returns the magnitude, which decays like
 * sqrt(8 pi / theta) e^{-pi^2/(4 theta)}. */
BigFloat g_smallness_check(const BigFloat& theta, long prec_bits);

/* the same value by the defining sum 1 + 2 sum_{n>=1} (-1)^n e^{-theta n^2};
 * the independent route for consistency checks (fine for theta not small) */
BigFloat theta_sum_eval(const BigFloat& theta, long prec_bits);

/* the fixed five-point panel for the modular transformation check,
 * including tau = i (the fixed point of tau -> -1/tau) and tau = i/4 */
std::vector<std::pair<std::string, BigComplex>>
modular_sample_panel(long prec_bits);

}  // namespace ptheta
