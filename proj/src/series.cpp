#include "ptheta/series.hpp"

#include <sstream>
#include <stdexcept>

namespace ptheta {

const char* var_name(Var v)
{
	switch (v) {
	case Var::T: return "t";
	case Var::Q: return "q";
	case Var::X: return "x";
	case Var::Theta: return "theta";
	}
	throw std::logic_error("var_name: bad tag");
}

Var var_from_name(const std::string& name)
{
	if (name == "t") return Var::T;
	if (name == "q") return Var::Q;
	if (name == "x") return Var::X;
	if (name == "theta") return Var::Theta;
	throw std::invalid_argument("unknown series variable '" + name + "'");
}

TruncatedSeries::TruncatedSeries(Var var, int order) : var_(var)
{
	if (order < 0)
		throw std::invalid_argument("series order must be >= 0");
	coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(Var var, std::vector<Rational> coeffs)
    : var_(var), coeffs_(std::move(coeffs))
{
	if (coeffs_.empty())
		throw std::invalid_argument("series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::constant(Var var, const Rational& c, int order)
{
	TruncatedSeries s(var, order);
	s.coeffs_[0] = c;
	return s;
}

TruncatedSeries TruncatedSeries::monomial(Var var, const Rational& coeff,
                                          int exponent, int order)
{
	if (exponent < 0 || exponent > order)
		throw std::invalid_argument("monomial exponent outside [0, order]");
	TruncatedSeries s(var, order);
	s.coeffs_[static_cast<size_t>(exponent)] = coeff;
	return s;
}

TruncatedSeries TruncatedSeries::identity(Var var, int order)
{
	return monomial(var, Rational(1), 1, order);
}

const Rational& TruncatedSeries::coeff(int k) const
{
	if (k < 0 || k > order())
		throw std::out_of_range("series coefficient index out of range");
	return coeffs_[static_cast<size_t>(k)];
}

bool TruncatedSeries::is_zero() const
{
	for (const auto& c : coeffs_)
		if (c != 0) return false;
	return true;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const
{
	if (new_order < 0 || new_order > order())
		throw std::invalid_argument("truncated: new order outside [0, order]");
	std::vector<Rational> c(coeffs_.begin(),
	                        coeffs_.begin() + new_order + 1);
	return TruncatedSeries(var_, std::move(c));
}

TruncatedSeries TruncatedSeries::retagged(Var var) const
{
	return TruncatedSeries(var, coeffs_);
}

std::string TruncatedSeries::str() const
{
	std::ostringstream os;
	bool first = true;
	for (int k = 0; k <= order(); ++k) {
		const Rational& c = coeffs_[static_cast<size_t>(k)];
		if (c == 0) continue;
		if (!first)
			os << (c > 0 ? " + " : " - ");
		else if (c < 0)
			os << "-";
		first = false;
		Rational a = abs(c);
		if (k == 0) {
			os << rational_to_string(a);
			continue;
		}
		if (a != 1)
			os << rational_to_string(a) << "*";
		os << var_name(var_);
		if (k > 1)
			os << "^" << k;
	}
	if (first)
		os << "0";
	os << " (mod " << var_name(var_) << "^" << order() + 1 << ")";
	return os.str();
}

namespace {

void require_same_var(const TruncatedSeries& a, const TruncatedSeries& b,
                      const char* op)
{
	if (a.var() != b.var())
		throw std::invalid_argument(std::string(op) + ": variable tags differ ("
		                            + var_name(a.var()) + " vs "
		                            + var_name(b.var()) + ")");
}

// plain convolution of the first n+1 coefficients
std::vector<Rational> convolve(const std::vector<Rational>& a,
                               const std::vector<Rational>& b, int n)
{
	std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
	for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i) {
		if (a[static_cast<size_t>(i)] == 0) continue;
		int jmax = std::min(n - i, static_cast<int>(b.size()) - 1);
		for (int j = 0; j <= jmax; ++j)
			out[static_cast<size_t>(i + j)] +=
			    a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
	}
	return out;
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
	require_same_var(a, b, "add");
	int n = std::min(a.order(), b.order());
	std::vector<Rational> c(static_cast<size_t>(n) + 1);
	for (int k = 0; k <= n; ++k)
		c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
	return TruncatedSeries(a.var(), std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
	require_same_var(a, b, "sub");
	int n = std::min(a.order(), b.order());
	std::vector<Rational> c(static_cast<size_t>(n) + 1);
	for (int k = 0; k <= n; ++k)
		c[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
	return TruncatedSeries(a.var(), std::move(c));
}

TruncatedSeries negate(const TruncatedSeries& a)
{
	std::vector<Rational> c(a.coeffs());
	for (auto& x : c)
		x = -x;
	return TruncatedSeries(a.var(), std::move(c));
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& a)
{
	std::vector<Rational> out(a.coeffs());
	for (auto& x : out)
		x *= c;
	return TruncatedSeries(a.var(), std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
	require_same_var(a, b, "mul");
	int n = std::min(a.order(), b.order());
	return TruncatedSeries(a.var(), convolve(a.coeffs(), b.coeffs(), n));
}

TruncatedSeries invert_unit(const TruncatedSeries& a)
{
	if (!a.is_unit())
		throw std::invalid_argument("invert_unit: constant term is zero");
	int n = a.order();
	std::vector<Rational> r(static_cast<size_t>(n) + 1);
	Rational c0_inv = Rational(1) / a.coeff(0);
	r[0] = c0_inv;
	/* r_m = -(1/c_0) sum_{k=1}^{m} c_k r_{m-k} */
	for (int m = 1; m <= n; ++m) {
		Rational s(0);
		for (int k = 1; k <= m; ++k)
			s += a.coeff(k) * r[static_cast<size_t>(m - k)];
		r[static_cast<size_t>(m)] = -c0_inv * s;
	}
	return TruncatedSeries(a.var(), std::move(r));
}

TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner)
{
	if (!inner.has_positive_valuation())
		throw std::invalid_argument(
		    "compose: inner series must have zero constant term");
	int n = std::min(outer.order(), inner.order());
	/* Horner over the inner ring: outer coefficients past n cannot reach
	 * order n because the inner series has valuation >= 1. */
	std::vector<Rational> acc(static_cast<size_t>(n) + 1, Rational(0));
	acc[0] = outer.coeff(n);
	for (int k = n - 1; k >= 0; --k) {
		acc = convolve(acc, inner.coeffs(), n);
		acc[0] += outer.coeff(k);
	}
	return TruncatedSeries(inner.var(), std::move(acc));
}

TruncatedSeries series_exp(const TruncatedSeries& a)
{
	if (!a.has_positive_valuation())
		throw std::invalid_argument(
		    "series_exp: constant term must be zero");
	int n = a.order();
	std::vector<Rational> e(static_cast<size_t>(n) + 1);
	e[0] = 1;
	/* E' = a'E termwise: m e_m = sum_{k=1}^{m} k a_k e_{m-k} */
	for (int m = 1; m <= n; ++m) {
		Rational s(0);
		for (int k = 1; k <= m; ++k)
			s += Rational(k) * a.coeff(k) * e[static_cast<size_t>(m - k)];
		e[static_cast<size_t>(m)] = s / m;
	}
	return TruncatedSeries(a.var(), std::move(e));
}

TruncatedSeries binomial_series(int b, int order)
{
	if (b < 1)
		throw std::invalid_argument("binomial_series: b must be >= 1");
	std::vector<Rational> c(static_cast<size_t>(order) + 1);
	for (int j = 0; j <= order; ++j)
		c[static_cast<size_t>(j)] =
		    Rational(binomial(static_cast<unsigned long>(b - 1 + j),
		                      static_cast<unsigned long>(b - 1)));
	return TruncatedSeries(Var::T, std::move(c));
}

TruncatedSeries mobius_q(int order)
{
	std::vector<Rational> c(static_cast<size_t>(order) + 1);
	c[0] = 1;
	for (int k = 1; k <= order; ++k)
		c[static_cast<size_t>(k)] = (k % 2 == 0) ? Rational(2) : Rational(-2);
	return TruncatedSeries(Var::T, std::move(c));
}

TruncatedSeries theta_of_t(int order)
{
	std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
	for (int k = 1; k <= order; k += 2)
		c[static_cast<size_t>(k)] = Rational(2) / k;
	return TruncatedSeries(Var::T, std::move(c));
}

TruncatedSeries convolve_with_binomial(const TruncatedSeries& alpha, int b)
{
	if (alpha.var() != Var::T)
		throw std::invalid_argument(
		    "convolve_with_binomial: alpha must be a t-series");
	return mul(alpha, binomial_series(b, alpha.order()));
}

}  // namespace ptheta
