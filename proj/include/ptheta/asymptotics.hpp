#pragma once

#include "ptheta/series.hpp"

#include <vector>

namespace ptheta {

/* E_k(0), the Euler-polynomial values at zero, from the generating
 * function 2/(e^u + 1) = sum_k E_k(0) u^k / k!. Exact rationals; zero for
 * every even k >= 2. */
Rational euler_at_zero(int k);
std::vector<Rational> euler_at_zero_table(int kmax);

/* x-series whose coefficient of x^k is a polynomial in theta: the Taylor
 * expansion of exp(-theta (x^2 + bx)) around x = 0. Entry k stores the
 * dense theta-coefficient vector of c_k, degree exactly k, with everything
 * below theta^{ceil(k/2)} vanishing (each power of x carries at least one
 * theta). check_structure() verifies all of that and c_0 = 1. */
class ThetaPolySeries {
public:
	explicit ThetaPolySeries(std::vector<std::vector<Rational>> entries);

	int x_order() const { return static_cast<int>(entries_.size()) - 1; }
	// [theta^j] c_k; zero beyond the stored degree
	const Rational& theta_coeff(int k, int j) const;
	int theta_degree(int k) const;  // highest nonzero power, -1 for the zero poly

	void check_structure() const;  // throws std::logic_error on violation

private:
	std::vector<std::vector<Rational>> entries_;
};

// c_k = (1/k!) d^k/dx^k exp(-theta (x^2 + bx)) at x = 0, for k <= x_order
ThetaPolySeries gauss_coeffs(int b, int x_order);

/* The expansion of f_b regrouped by powers of theta:
 * d_j = sum_{k<=2j} E_k(0) [theta^j] c_k (a finite sum; [theta^j] c_k = 0
 * for k > 2j, which is asserted against rows up to 2J+2, not assumed).
 * Returns sum_j d_j theta^j as a Theta-tagged series of order J. */
TruncatedSeries boole_theta_series(int b, int theta_order);

/* Sign scan of a coefficient list from the top: cutoff is the least M with
 * one common sign on [M, N]. The run is trusted only when it is at least
 * kMinStableRun long and a_N != 0; otherwise determined = false and the
 * order was too small to observe stabilization. */
inline constexpr int kMinStableRun = 3;

struct SignReport {
	int cutoff = 0;      // meaningful only when determined
	int sign = 0;        // +1 / -1, 0 when undetermined
	bool determined = false;
};

SignReport sign_scan(const std::vector<Rational>& a);

struct ExpansionResult {
	int b = 0;
	int order = 0;
	std::vector<Rational> a;  // a_0 .. a_order, exact
	SignReport sign;
};

/* Exact a_0..a_N of f_b(t) ~ sum a_n t^n: boole_theta_series composed with
 * theta(t) = log((1+t)/(1-t)). b >= 1, N >= 0. */
ExpansionResult asymptotic_coeffs(int b, int order);

SignReport sign_report(int b, int order);

// +1 for b = 1,2 (mod 4), -1 for b = 0,3 (mod 4): the sign the tail takes
int expected_stable_sign(int b);

bool all_integers(const std::vector<Rational>& a);

}  // namespace ptheta
