#include "ptheta/qseries.hpp"

#include <stdexcept>

namespace ptheta {

PartialTheta partial_theta_q(int b, int order)
{
	if (b < 1)
		throw std::invalid_argument("partial_theta_q: b must be >= 1");
	if (order < 0)
		throw std::invalid_argument("partial_theta_q: order must be >= 0");
	std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
	/* exponents n^2 + bn are strictly increasing in n */
	for (long long n = 0;; ++n) {
		long long e = n * n + static_cast<long long>(b) * n;
		if (e > order) break;
		c[static_cast<size_t>(e)] = (n % 2 == 0) ? Rational(2) : Rational(-2);
	}
	return PartialTheta{b, TruncatedSeries(Var::Q, std::move(c))};
}

IdentityReport compare_series(const std::string& name,
                              const TruncatedSeries& lhs,
                              const TruncatedSeries& rhs)
{
	IdentityReport rep;
	rep.identity = name;
	rep.order = std::min(lhs.order(), rhs.order());
	for (int e = 0; e <= rep.order; ++e) {
		if (lhs.coeff(e) != rhs.coeff(e)) {
			rep.ok = false;
			rep.first_mismatch_exponent = e;
			rep.lhs_coeff = rational_to_string(lhs.coeff(e));
			rep.rhs_coeff = rational_to_string(rhs.coeff(e));
			return rep;
		}
	}
	rep.ok = true;
	return rep;
}

namespace {

/* exact division by q^m: shift coefficients down, demanding that all of
 * c_0..c_{m-1} vanish */
TruncatedSeries shift_down(const TruncatedSeries& s, int m)
{
	if (m < 0 || m > s.order())
		throw std::invalid_argument("shift_down: bad shift");
	for (int k = 0; k < m; ++k)
		if (s.coeff(k) != 0)
			throw std::logic_error(
			    "shift_down: nonzero coefficient below the shift; "
			    "division by q^" + std::to_string(m) + " impossible");
	std::vector<Rational> c(s.coeffs().begin() + m, s.coeffs().end());
	return TruncatedSeries(s.var(), std::move(c));
}

// in place: poly *= (1 + sign * q^m), truncated at the stored order
void mul_one_plus_qm(std::vector<Rational>& c, int m, int sign)
{
	for (int k = static_cast<int>(c.size()) - 1; k >= m; --k) {
		if (c[static_cast<size_t>(k - m)] == 0) continue;
		if (sign > 0)
			c[static_cast<size_t>(k)] += c[static_cast<size_t>(k - m)];
		else
			c[static_cast<size_t>(k)] -= c[static_cast<size_t>(k - m)];
	}
}

}  // namespace

IdentityReport recursion_check(int b, int order)
{
	if (b < 2)
		throw std::invalid_argument("recursion_check: b must be >= 2");
	if (order <= b)
		throw std::invalid_argument("recursion_check: order must exceed b");

	TruncatedSeries lower = partial_theta_q(b - 1, order).series;
	TruncatedSeries tail =
	    sub(lower, TruncatedSeries::constant(Var::Q, Rational(2), order));
	// f_{b-1} - 2 = -2q^b + ... ; divide out q^b and negate
	TruncatedSeries rhs = negate(shift_down(tail, b));
	TruncatedSeries lhs = partial_theta_q(b + 1, order - b).series;
	return compare_series("recursion-b" + std::to_string(b), lhs, rhs);
}

TruncatedSeries eta_quotient_series(int order)
{
	if (order < 0)
		throw std::invalid_argument("eta_quotient_series: order must be >= 0");
	/* The eta quotient eta(tau)^2/eta(2tau) carries prefactor
	 * q^{2/24}/q^{2/24} = 1, so only the products remain:
	 * prod (1-q^n)^2 / (1-q^{2n}). */
	std::vector<Rational> num(static_cast<size_t>(order) + 1, Rational(0));
	std::vector<Rational> den(num);
	num[0] = 1;
	den[0] = 1;
	for (int n = 1; n <= order; ++n) {
		mul_one_plus_qm(num, n, -1);
		mul_one_plus_qm(num, n, -1);
	}
	for (int n = 1; 2 * n <= order; ++n)
		mul_one_plus_qm(den, 2 * n, -1);
	TruncatedSeries numerator(Var::Q, std::move(num));
	TruncatedSeries denominator(Var::Q, std::move(den));
	return mul(numerator, invert_unit(denominator));
}

TruncatedSeries theta_sum_series(int order)
{
	if (order < 0)
		throw std::invalid_argument("theta_sum_series: order must be >= 0");
	std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
	c[0] = 1;  // n = 0
	for (long long n = 1; n * n <= order; ++n)
		c[static_cast<size_t>(n * n)] =
		    (n % 2 == 0) ? Rational(2) : Rational(-2);
	return TruncatedSeries(Var::Q, std::move(c));
}

IdentityReport eta_identity_check(int order)
{
	return compare_series("eta-quotient-vs-theta-sum",
	                      theta_sum_series(order),
	                      eta_quotient_series(order));
}

}  // namespace ptheta
