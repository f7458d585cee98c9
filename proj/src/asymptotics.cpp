#include "ptheta/asymptotics.hpp"

#include <stdexcept>

namespace ptheta {

std::vector<Rational> euler_at_zero_table(int kmax)
{
	if (kmax < 0)
		throw std::invalid_argument("euler_at_zero_table: kmax must be >= 0");
	/* e^u + 1 = 2 + u + u^2/2! + ...; E_k(0) = 2 k! [u^k] 1/(e^u + 1) */
	std::vector<Rational> h(static_cast<size_t>(kmax) + 1);
	h[0] = 2;
	Rational inv_fact(1);
	for (int k = 1; k <= kmax; ++k) {
		inv_fact /= k;
		h[static_cast<size_t>(k)] = inv_fact;
	}
	TruncatedSeries r = invert_unit(TruncatedSeries(Var::X, std::move(h)));
	std::vector<Rational> e(static_cast<size_t>(kmax) + 1);
	Rational fact(1);
	for (int k = 0; k <= kmax; ++k) {
		if (k > 0) fact *= k;
		e[static_cast<size_t>(k)] = 2 * fact * r.coeff(k);
	}
	return e;
}

Rational euler_at_zero(int k)
{
	return euler_at_zero_table(k).back();
}

ThetaPolySeries::ThetaPolySeries(std::vector<std::vector<Rational>> entries)
    : entries_(std::move(entries))
{
	if (entries_.empty())
		throw std::invalid_argument("ThetaPolySeries: empty entry list");
	check_structure();
}

const Rational& ThetaPolySeries::theta_coeff(int k, int j) const
{
	static const Rational zero(0);
	if (k < 0 || k > x_order())
		throw std::out_of_range("ThetaPolySeries: x index out of range");
	const auto& p = entries_[static_cast<size_t>(k)];
	if (j < 0 || j >= static_cast<int>(p.size()))
		return zero;
	return p[static_cast<size_t>(j)];
}

int ThetaPolySeries::theta_degree(int k) const
{
	const auto& p = entries_[static_cast<size_t>(k)];
	for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j)
		if (p[static_cast<size_t>(j)] != 0) return j;
	return -1;
}

void ThetaPolySeries::check_structure() const
{
	if (entries_[0].size() != 1 || entries_[0][0] != 1)
		throw std::logic_error("ThetaPolySeries: c_0 != 1");
	for (int k = 1; k <= x_order(); ++k) {
		if (theta_degree(k) != k)
			throw std::logic_error("ThetaPolySeries: c_" + std::to_string(k)
			                       + " does not have theta-degree " + std::to_string(k));
		int low = (k + 1) / 2;
		for (int j = 0; j < low; ++j)
			if (theta_coeff(k, j) != 0)
				throw std::logic_error(
				    "ThetaPolySeries: c_" + std::to_string(k)
				    + " has a term below theta^ceil(k/2)");
	}
}

ThetaPolySeries gauss_coeffs(int b, int x_order)
{
	if (b < 1)
		throw std::invalid_argument("gauss_coeffs: b must be >= 1");
	if (x_order < 0)
		throw std::invalid_argument("gauss_coeffs: x_order must be >= 0");
	/* E = exp(A) with A = -theta x^2 - b theta x satisfies E' = A'E, so
	 * k c_k = -b theta c_{k-1} - 2 theta c_{k-2}. Multiplying by theta is a
	 * shift of the coefficient vector. */
	std::vector<std::vector<Rational>> c(static_cast<size_t>(x_order) + 1);
	c[0] = {Rational(1)};
	for (int k = 1; k <= x_order; ++k) {
		auto& row = c[static_cast<size_t>(k)];
		row.assign(static_cast<size_t>(k) + 1, Rational(0));
		const auto& prev = c[static_cast<size_t>(k - 1)];
		for (size_t j = 0; j < prev.size(); ++j)
			row[j + 1] -= b * prev[j];
		if (k >= 2) {
			const auto& prev2 = c[static_cast<size_t>(k - 2)];
			for (size_t j = 0; j < prev2.size(); ++j)
				row[j + 1] -= 2 * prev2[j];
		}
		for (auto& x : row)
			x /= k;
	}
	return ThetaPolySeries(std::move(c));
}

TruncatedSeries boole_theta_series(int b, int theta_order)
{
	if (theta_order < 0)
		throw std::invalid_argument("boole_theta_series: order must be >= 0");
	/* c_k rows up to 2J are enough for d_0..d_J; two rows of margin are
	 * computed and checked to contribute nothing. */
	int kmax = 2 * theta_order + 2;
	ThetaPolySeries g = gauss_coeffs(b, kmax);
	for (int j = 0; j <= theta_order; ++j)
		for (int k = 2 * j + 1; k <= kmax; ++k)
			if (g.theta_coeff(k, j) != 0)
				throw std::logic_error(
				    "boole_theta_series: c_k leaks below theta^ceil(k/2)");
	std::vector<Rational> euler = euler_at_zero_table(kmax);
	std::vector<Rational> d(static_cast<size_t>(theta_order) + 1, Rational(0));
	for (int j = 0; j <= theta_order; ++j) {
		Rational s = (j == 0) ? euler[0] : Rational(0);  // k = 0 row is 1
		// E_k(0) = 0 for even k >= 2 (property-tested), so odd k only
		for (int k = 1; k <= 2 * j; k += 2)
			s += euler[static_cast<size_t>(k)] * g.theta_coeff(k, j);
		d[static_cast<size_t>(j)] = s;
	}
	return TruncatedSeries(Var::Theta, std::move(d));
}

SignReport sign_scan(const std::vector<Rational>& a)
{
	if (a.empty())
		throw std::invalid_argument("sign_scan: empty coefficient list");
	SignReport rep;
	int n = static_cast<int>(a.size()) - 1;
	int s = a[static_cast<size_t>(n)].sign();
	if (s == 0)
		return rep;  // undetermined
	int m = n;
	while (m > 0 && a[static_cast<size_t>(m - 1)].sign() == s)
		--m;
	rep.cutoff = m;
	rep.sign = s;
	rep.determined = (n - m + 1) >= kMinStableRun;
	return rep;
}

ExpansionResult asymptotic_coeffs(int b, int order)
{
	if (b < 1)
		throw std::invalid_argument("asymptotic_coeffs: b must be >= 1");
	if (order < 0)
		throw std::invalid_argument("asymptotic_coeffs: order must be >= 0");
	/* theta(t) has valuation 1, so theta-order N captures a_0..a_N */
	TruncatedSeries in_theta = boole_theta_series(b, order);
	TruncatedSeries a = compose(in_theta, theta_of_t(order));
	ExpansionResult out;
	out.b = b;
	out.order = order;
	out.a = a.coeffs();
	out.sign = sign_scan(out.a);
	return out;
}

SignReport sign_report(int b, int order)
{
	return asymptotic_coeffs(b, order).sign;
}

int expected_stable_sign(int b)
{
	int r = b % 4;
	return (r == 1 || r == 2) ? 1 : -1;
}

bool all_integers(const std::vector<Rational>& a)
{
	for (const auto& x : a)
		if (!is_integer(x)) return false;
	return true;
}

}  // namespace ptheta
