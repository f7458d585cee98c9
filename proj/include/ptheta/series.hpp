#pragma once

#include "ptheta/rational.hpp"

#include <string>
#include <vector>

namespace ptheta {

/* Variable tags. Series in different variables never mix silently: every
 * binary operation checks the tags and throws on mismatch. Moving between
 * worlds (t <-> q) takes an explicit retag or a composition. */
enum class Var { T, Q, X, Theta };

const char* var_name(Var v);
Var var_from_name(const std::string& name);

/* Truncated formal power series c_0 + c_1 v + ... + c_N v^N over the exact
 * rationals, known modulo v^{N+1}. Immutable after construction; all
 * operations are pure functions returning fresh values. Binary operations
 * truncate to the smaller of the two orders and never pad with zeros. */
class TruncatedSeries {
public:
	// zero series of the given order
	TruncatedSeries(Var var, int order);
	// order = coeffs.size() - 1; coeffs must be nonempty
	TruncatedSeries(Var var, std::vector<Rational> coeffs);

	static TruncatedSeries constant(Var var, const Rational& c, int order);
	// coeff * v^exponent
	static TruncatedSeries monomial(Var var, const Rational& coeff,
	                                int exponent, int order);
	// the series "v" itself
	static TruncatedSeries identity(Var var, int order);

	Var var() const { return var_; }
	int order() const { return static_cast<int>(coeffs_.size()) - 1; }
	const Rational& coeff(int k) const;
	const std::vector<Rational>& coeffs() const { return coeffs_; }

	bool is_unit() const { return coeffs_[0] != 0; }
	bool has_positive_valuation() const { return coeffs_[0] == 0; }
	bool is_zero() const;

	// drop information above new_order; extension is deliberately impossible
	TruncatedSeries truncated(int new_order) const;
	// same coefficients under another variable tag (explicit world switch)
	TruncatedSeries retagged(Var var) const;

	bool operator==(const TruncatedSeries&) const = default;

	std::string str() const;  // e.g. "1 - 2*t + 2*t^2 (mod t^4)"

private:
	Var var_;
	std::vector<Rational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& a);

// Cauchy product truncated at min(order a, order b)
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// reciprocal of a unit series (c_0 != 0), same order
TruncatedSeries invert_unit(const TruncatedSeries& a);

/* outer(inner): inner must have zero constant term. Horner evaluation in
 * the inner variable's ring; result carries the inner tag and order
 * min(order outer, order inner). */
TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner);

// exp of a series with zero constant term, same order
TruncatedSeries series_exp(const TruncatedSeries& a);

// (1-t)^{-b} = sum_j C(b-1+j, b-1) t^j, b >= 1
TruncatedSeries binomial_series(int b, int order);

// t-expansion of the nome q = (1-t)/(1+t): 1 - 2t + 2t^2 - 2t^3 + ...
TruncatedSeries mobius_q(int order);

// theta(t) = log((1+t)/(1-t)) = 2(t + t^3/3 + t^5/5 + ...)
TruncatedSeries theta_of_t(int order);

// alpha * (1-t)^{-b}, the mixed sum sum_{n<=m} alpha_n C(b-1+m-n, b-1)
TruncatedSeries convolve_with_binomial(const TruncatedSeries& alpha, int b);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const Rational& c,
                                 const TruncatedSeries& a) { return scale(c, a); }

}  // namespace ptheta
