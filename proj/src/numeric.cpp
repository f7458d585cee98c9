#include "ptheta/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptheta {

namespace {

BigFloat one_at(long prec)
{
	return BigFloat::from_long(1, prec);
}

}  // namespace

BigFloat eval_f(const BigFloat& b, const BigFloat& t, long prec_bits)
{
	if (prec_bits < 64)
		throw std::invalid_argument("eval_f: precision must be >= 64 bits");
	BigFloat one = one_at(prec_bits);
	if (!(t > BigFloat(prec_bits) && t < one))
		throw std::invalid_argument("eval_f: t must lie in (0, 1)");

	BigFloat tp = t.at_precision(prec_bits);
	BigFloat q = (one - tp) / (one + tp);
	BigFloat threshold = BigFloat::pow2(-(prec_bits + 8), prec_bits);

	/* q^{n^2+bn} advances by two multiplications per term:
	 * p_{n+1} = p_n r_n with r_n = q^{2n+1+b}, r_{n+1} = r_n q^2 */
	BigFloat p = one;
	BigFloat r = pow(q, b.at_precision(prec_bits) + one);
	BigFloat q2 = q * q;
	BigFloat sum(prec_bits);
	int sgn = 1;
	while (p >= threshold) {
		sum = (sgn > 0) ? sum + p : sum - p;
		p = p * r;
		r = r * q2;
		sgn = -sgn;
	}
	return BigFloat::from_long(2, prec_bits) * sum;
}

BigFloat eval_f(int b, const BigFloat& t, long prec_bits)
{
	return eval_f(BigFloat::from_long(b, prec_bits), t, prec_bits);
}

ExtractionResult extract_coeffs(const BigFloat& b, int count,
                                const BigFloat& t0, const BigFloat& ratio,
                                long prec_bits, int grid_depth,
                                std::optional<BigFloat> tolerance)
{
	if (count < 0)
		throw std::invalid_argument("extract_coeffs: count must be >= 0");
	if (grid_depth < 4)
		throw std::invalid_argument("extract_coeffs: grid depth must be >= 4");
	BigFloat zero(prec_bits), one = one_at(prec_bits);
	if (!(t0 > zero && t0 < one))
		throw std::invalid_argument("extract_coeffs: t0 must lie in (0, 1)");
	if (!(ratio > zero && ratio < one))
		throw std::invalid_argument("extract_coeffs: ratio must lie in (0, 1)");

	size_t depth = static_cast<size_t>(grid_depth);
	std::vector<BigFloat> t(depth, BigFloat(prec_bits));
	std::vector<BigFloat> residual(depth, BigFloat(prec_bits));
	std::vector<BigFloat> tpow(depth, BigFloat(prec_bits));
	std::vector<BigFloat> fscale(depth, BigFloat(prec_bits));
	for (size_t j = 0; j < depth; ++j) {
		t[j] = (j == 0) ? t0.at_precision(prec_bits) : t[j - 1] * ratio;
		residual[j] = eval_f(b, t[j], prec_bits);
		fscale[j] = abs(residual[j]) + one;
		tpow[j] = one;
	}

	ExtractionResult out;
	for (int n = 0; n <= count; ++n) {
		std::vector<BigFloat> tab(depth, BigFloat(prec_bits));
		for (size_t j = 0; j < depth; ++j)
			tab[j] = residual[j] / tpow[j];
		/* Neville to 0: after column m, tab[i] interpolates nodes
		 * t_i..t_{i+m}. Track the two previous diagonal heads for the
		 * error estimate. */
		BigFloat prev0(prec_bits), prev1(prec_bits);
		for (size_t m = 1; m < depth; ++m) {
			if (m + 1 == depth) {
				prev0 = tab[0];
				prev1 = tab[1];
			}
			for (size_t i = 0; i + m < depth; ++i)
				tab[i] = (t[i] * tab[i + 1] - t[i + m] * tab[i])
				         / (t[i] - t[i + m]);
		}
		BigFloat value = tab[0];
		BigFloat est = abs(value - prev0);
		BigFloat est1 = abs(value - prev1);
		if (est1 > est)
			est = est1;
		/* the spread can undershoot when the data noise dominates the
		 * model error: the h_j carry the f rounding error amplified by
		 * 1/t_j^n, so the estimate gets that floor */
		BigFloat noise(prec_bits);
		for (size_t j = 0; j < depth; ++j) {
			BigFloat cand = fscale[j] / tpow[j];
			if (cand > noise)
				noise = cand;
		}
		noise = noise * BigFloat::from_long(grid_depth, prec_bits)
		        * BigFloat::pow2(-(prec_bits - 6), prec_bits);
		if (noise > est)
			est = noise;
		if (tolerance && est > *tolerance)
			throw std::runtime_error(
			    "extract_coeffs: extrapolation for coefficient "
			    + std::to_string(n) + " did not converge (estimate "
			    + est.to_string(3) + "); raise the precision or shrink t0");
		for (size_t j = 0; j < depth; ++j) {
			residual[j] = residual[j] - value * tpow[j];
			tpow[j] = tpow[j] * t[j];
		}
		out.coeffs.push_back(value);
		out.error_estimates.push_back(est);
	}
	return out;
}

namespace {

// terms needed so that e^{-2 pi n y} stays above 2^{-P-8}
long product_terms(double y, long prec_bits)
{
	if (!(y > 0))
		throw std::invalid_argument("eta: Im(tau) must be positive");
	double n = (static_cast<double>(prec_bits) + 8.0) * 0.6931471805599453
	           / (2.0 * 3.141592653589793 * y);
	if (n > 5e8)
		throw std::runtime_error(
		    "eta: Im(tau) too small for this precision; "
		    "apply the modular transformation first");
	return static_cast<long>(n) + 2;
}

// eta(i s) for real s > 0: e^{-pi s/12} prod (1 - e^{-2 pi n s})
BigFloat eta_real(const BigFloat& s, long prec_bits)
{
	BigFloat pi = BigFloat::pi(prec_bits);
	BigFloat u = exp(-(BigFloat::from_long(2, prec_bits) * pi * s));
	BigFloat acc = exp(-(pi * s) / BigFloat::from_long(12, prec_bits));
	long terms = product_terms(s.to_double(), prec_bits);
	BigFloat un = u;
	BigFloat one = one_at(prec_bits);
	BigFloat threshold = BigFloat::pow2(-(prec_bits + 8), prec_bits);
	for (long n = 1; n <= terms && un >= threshold; ++n) {
		acc = acc * (one - un);
		un = un * u;
	}
	return acc;
}

}  // namespace

BigComplex eta_eval(const BigComplex& tau, long prec_bits)
{
	if (tau.im.sign() <= 0)
		throw std::invalid_argument("eta_eval: Im(tau) must be positive");
	BigComplex tp{tau.re.at_precision(prec_bits),
	              tau.im.at_precision(prec_bits)};
	BigFloat two_pi = BigFloat::from_long(2, prec_bits) * BigFloat::pi(prec_bits);
	// 2 pi i tau = (-2 pi Im, 2 pi Re)
	BigComplex z{-(two_pi * tp.im), two_pi * tp.re};
	BigComplex u = exp(z);
	BigComplex prefactor =
	    exp(BigComplex{z.re / BigFloat::from_long(24, prec_bits),
	                   z.im / BigFloat::from_long(24, prec_bits)});
	long terms = product_terms(tp.im.to_double(), prec_bits);
	BigComplex acc{one_at(prec_bits), BigFloat(prec_bits)};
	BigComplex un = u;
	BigFloat one = one_at(prec_bits);
	for (long n = 1; n <= terms; ++n) {
		acc = acc * BigComplex{one - un.re, -un.im};
		un = un * u;
	}
	return prefactor * acc;
}

BigFloat modular_check(const BigComplex& tau, long prec_bits)
{
	if (tau.im.sign() <= 0)
		throw std::invalid_argument("modular_check: Im(tau) must be positive");
	BigComplex tp{tau.re.at_precision(prec_bits),
	              tau.im.at_precision(prec_bits)};
	BigComplex minus_one{BigFloat::from_long(-1, prec_bits),
	                     BigFloat(prec_bits)};
	BigComplex lhs = eta_eval(minus_one / tp, prec_bits);
	// -i tau = (Im tau, -Re tau); sqrt_principal rejects the branch cut
	BigComplex root = sqrt_principal(BigComplex{tp.im, -tp.re});
	BigComplex rhs = root * eta_eval(tp, prec_bits);
	return abs(lhs - rhs);
}

BigFloat g_smallness_check(const BigFloat& theta, long prec_bits)
{
	if (theta.sign() <= 0)
		throw std::invalid_argument("g_smallness_check: theta must be positive");
	/* g(iy) with y = theta/2pi, pushed to the cusp-friendly side:
	 * eta(iy) = eta(i/y)/sqrt(y) and eta(2iy) = eta(i/(2y))/sqrt(2y), so
	 * g(iy) = sqrt(2/y) eta(i/y)^2 / eta(i/(2y)). */
	BigFloat two_pi =
	    BigFloat::from_long(2, prec_bits) * BigFloat::pi(prec_bits);
	BigFloat y = theta.at_precision(prec_bits) / two_pi;
	BigFloat one = one_at(prec_bits), two = BigFloat::from_long(2, prec_bits);
	/* leading magnitude is e^{-pi^2/(4 theta)}; refuse thetas whose result
	 * underflows the MPFR exponent range */
	double exponent_scale = 9.8696 / (4.0 * theta.to_double()) / 0.6931;
	if (theta.to_double() <= 0 ||
	    exponent_scale > static_cast<double>(mpfr_get_emax()) / 2.0)
		throw std::runtime_error(
		    "g_smallness_check: theta too small; the value underflows at "
		    "any precision (exponent ~ 2^-" + std::to_string(exponent_scale)
		    + ")");
	BigFloat e1 = eta_real(one / y, prec_bits);
	BigFloat e2 = eta_real(one / (two * y), prec_bits);
	return sqrt(two / y) * e1 * e1 / e2;
}

std::vector<std::pair<std::string, BigComplex>>
modular_sample_panel(long prec_bits)
{
	auto fr = [prec_bits](const std::string& s) {
		return BigFloat::from_string(s, prec_bits);
	};
	std::vector<std::pair<std::string, BigComplex>> panel;
	panel.emplace_back("i", BigComplex{fr("0"), fr("1")});
	panel.emplace_back("i/4", BigComplex{fr("0"), fr("1/4")});
	panel.emplace_back("2i", BigComplex{fr("0"), fr("2")});
	panel.emplace_back("1/3+i/2", BigComplex{fr("1/3"), fr("1/2")});
	panel.emplace_back("-2/7+3i/5", BigComplex{fr("-2/7"), fr("3/5")});
	return panel;
}

BigFloat theta_sum_eval(const BigFloat& theta, long prec_bits)
{
	if (theta.sign() <= 0)
		throw std::invalid_argument("theta_sum_eval: theta must be positive");
	BigFloat x = exp(-theta.at_precision(prec_bits));
	BigFloat threshold = BigFloat::pow2(-(prec_bits + 8), prec_bits);
	/* x^{n^2}: p_{n+1} = p_n r_n, r_n = x^{2n+1} */
	BigFloat p = x, r = x * x * x, x2 = x * x;
	BigFloat sum(prec_bits);
	int sgn = -1;
	while (p >= threshold) {
		sum = (sgn > 0) ? sum + p : sum - p;
		p = p * r;
		r = r * x2;
		sgn = -sgn;
	}
	return one_at(prec_bits) + BigFloat::from_long(2, prec_bits) * sum;
}

}  // namespace ptheta
