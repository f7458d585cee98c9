#include "ptheta/series.hpp"

#include "series_testlib.hpp"

#include <doctest.h>

#include <random>

using namespace ptheta;
using testlib::mobius_self_composed;
using testlib::random_series;
using testlib::random_unit_series;
using testlib::random_valuation1_series;

namespace {

TruncatedSeries make(Var v, std::vector<std::string> strs)
{
	std::vector<Rational> c;
	c.reserve(strs.size());
	for (const auto& s : strs)
		c.push_back(rational_from_string(s));
	return TruncatedSeries(v, std::move(c));
}

}  // namespace

TEST_CASE("mul: difference of squares and identity factor")
{
	TruncatedSeries one_plus = make(Var::T, {"1", "1", "0"});
	TruncatedSeries one_minus = make(Var::T, {"1", "-1", "0"});
	CHECK(mul(one_plus, one_minus) == make(Var::T, {"1", "0", "-1"}));

	std::mt19937 rng(7);
	TruncatedSeries s = random_series(rng, Var::Q, 12);
	TruncatedSeries one = TruncatedSeries::constant(Var::Q, Rational(1), 12);
	CHECK(mul(s, one) == s);
}

TEST_CASE("mul: inverse square binomial against brute-force convolution")
{
	const int N = 20;
	TruncatedSeries inv_sq = binomial_series(2, N);
	TruncatedSeries one_minus =
	    sub(TruncatedSeries::constant(Var::T, Rational(1), N),
	        TruncatedSeries::identity(Var::T, N));
	TruncatedSeries prod = mul(inv_sq, one_minus);
	// independent convolution of the same coefficient lists
	for (int m = 0; m <= N; ++m) {
		Rational s(0);
		for (int i = 0; i <= m; ++i)
			s += inv_sq.coeff(i) * one_minus.coeff(m - i);
		CHECK(prod.coeff(m) == s);
		CHECK(prod.coeff(m) == 1);  // the geometric series
	}
}

TEST_CASE("mul: variable tags are enforced and orders take the minimum")
{
	TruncatedSeries t = TruncatedSeries::identity(Var::T, 5);
	TruncatedSeries q = TruncatedSeries::identity(Var::Q, 5);
	CHECK_THROWS_AS(mul(t, q), std::invalid_argument);
	CHECK_THROWS_AS(add(t, q), std::invalid_argument);
	CHECK_THROWS_AS(sub(t, q), std::invalid_argument);
	CHECK(mul(t, q.retagged(Var::T)).order() == 5);

	TruncatedSeries a = make(Var::T, {"1", "1", "1", "1", "1", "1"});
	TruncatedSeries b = make(Var::T, {"1", "1", "1"});
	CHECK(mul(a, b).order() == 2);
	CHECK(add(a, b).order() == 2);
}

TEST_CASE("invert_unit: geometric series, identity, zero constant rejected")
{
	const int N = 10;
	TruncatedSeries one_minus =
	    sub(TruncatedSeries::constant(Var::T, Rational(1), N),
	        TruncatedSeries::identity(Var::T, N));
	TruncatedSeries inv = invert_unit(one_minus);
	for (int k = 0; k <= N; ++k)
		CHECK(inv.coeff(k) == 1);

	TruncatedSeries one = TruncatedSeries::constant(Var::T, Rational(1), N);
	CHECK(invert_unit(one) == one);

	CHECK_THROWS_AS(invert_unit(TruncatedSeries::identity(Var::T, 4)),
	                std::invalid_argument);
}

TEST_CASE("invert_unit: double inversion returns the series")
{
	std::mt19937 rng(11);
	for (int trial = 0; trial < 25; ++trial) {
		TruncatedSeries s = random_unit_series(rng, Var::T, 24);
		CHECK(invert_unit(invert_unit(s)) == s);
		CHECK(mul(s, invert_unit(s))
		      == TruncatedSeries::constant(Var::T, Rational(1), 24));
	}
}

TEST_CASE("compose: direct substitution and identity inner")
{
	TruncatedSeries outer = make(Var::X, {"1", "1", "1"});
	TruncatedSeries inner = make(Var::T, {"0", "2", "0"});
	CHECK(compose(outer, inner) == make(Var::T, {"1", "2", "4"}));

	std::mt19937 rng(13);
	TruncatedSeries s = random_series(rng, Var::T, 9);
	CHECK(compose(s, TruncatedSeries::identity(Var::T, 9)) == s);

	CHECK_THROWS_AS(
	    compose(outer, TruncatedSeries::constant(Var::T, Rational(1), 2)),
	    std::invalid_argument);
}

TEST_CASE("compose: the nome substitution is an involution")
{
	// q((1-t)/(1+t)) recovers t exactly
	const int N = 60;
	CHECK(mobius_self_composed(N) == TruncatedSeries::identity(Var::T, N));
}

TEST_CASE("binomial_series: b = 1, 2 and the repeated-multiplication route")
{
	const int N = 12;
	TruncatedSeries geo = binomial_series(1, N);
	TruncatedSeries sq = binomial_series(2, N);
	for (int j = 0; j <= N; ++j) {
		CHECK(geo.coeff(j) == 1);
		CHECK(sq.coeff(j) == j + 1);
	}

	// (1-t)^{-4} as the fourth power of the geometric series
	TruncatedSeries quad = mul(mul(geo, geo), mul(geo, geo));
	CHECK(binomial_series(4, N) == quad);
	CHECK(binomial_series(4, N).coeff(3) == 20);  // C(6,3)

	CHECK_THROWS_AS(binomial_series(0, 4), std::invalid_argument);
}

TEST_CASE("mobius_q: coefficients and the division oracle")
{
	CHECK(mobius_q(3) == make(Var::T, {"1", "-2", "2", "-2"}));
	CHECK(mobius_q(0).coeff(0) == 1);

	// independent route: (1-t) * invert(1+t)
	const int N = 40;
	TruncatedSeries one_minus =
	    sub(TruncatedSeries::constant(Var::T, Rational(1), N),
	        TruncatedSeries::identity(Var::T, N));
	TruncatedSeries one_plus =
	    add(TruncatedSeries::constant(Var::T, Rational(1), N),
	        TruncatedSeries::identity(Var::T, N));
	CHECK(mobius_q(N) == mul(one_minus, invert_unit(one_plus)));
}

TEST_CASE("theta_of_t: log series values and the exp oracle")
{
	CHECK(theta_of_t(5) == make(Var::T, {"0", "2", "0", "2/3", "0", "2/5"}));
	CHECK(theta_of_t(0).coeff(0) == 0);

	// exp(theta(t)) (1-t) - (1+t) vanishes identically
	const int N = 30;
	TruncatedSeries lhs = series_exp(theta_of_t(N));
	TruncatedSeries one_minus =
	    sub(TruncatedSeries::constant(Var::T, Rational(1), N),
	        TruncatedSeries::identity(Var::T, N));
	TruncatedSeries one_plus =
	    add(TruncatedSeries::constant(Var::T, Rational(1), N),
	        TruncatedSeries::identity(Var::T, N));
	CHECK(sub(mul(lhs, one_minus), one_plus).is_zero());
}

TEST_CASE("series_exp: base cases, exp/log consistency, inverse pairing")
{
	const int N = 12;
	CHECK(series_exp(TruncatedSeries(Var::T, N))
	      == TruncatedSeries::constant(Var::T, Rational(1), N));

	TruncatedSeries et = series_exp(TruncatedSeries::identity(Var::T, N));
	Rational fact(1);
	for (int k = 0; k <= N; ++k) {
		if (k > 0) fact *= k;
		CHECK(et.coeff(k) == Rational(1) / fact);
	}

	// exp(theta) = (1+t)/(1-t)
	TruncatedSeries one_minus =
	    sub(TruncatedSeries::constant(Var::T, Rational(1), N),
	        TruncatedSeries::identity(Var::T, N));
	TruncatedSeries one_plus =
	    add(TruncatedSeries::constant(Var::T, Rational(1), N),
	        TruncatedSeries::identity(Var::T, N));
	CHECK(series_exp(theta_of_t(N)) == mul(one_plus, invert_unit(one_minus)));

	std::mt19937 rng(17);
	for (int trial = 0; trial < 10; ++trial) {
		TruncatedSeries a = random_valuation1_series(rng, Var::T, 16);
		CHECK(mul(series_exp(a), series_exp(negate(a)))
		      == TruncatedSeries::constant(Var::T, Rational(1), 16));
	}

	CHECK_THROWS_AS(
	    series_exp(TruncatedSeries::constant(Var::T, Rational(1), 3)),
	    std::invalid_argument);
}

TEST_CASE("convolve_with_binomial: delta, adversarial prefix, positivity")
{
	const int N = 30;
	TruncatedSeries delta =
	    TruncatedSeries::constant(Var::T, Rational(1), N);
	TruncatedSeries out = convolve_with_binomial(delta, 2);
	for (int m = 0; m <= N; ++m)
		CHECK(out.coeff(m) == m + 1);

	// alpha_0 = -5, alpha_n = 1: output (m+1)(m/2 - 5), positive from m = 11
	std::vector<Rational> alpha(N + 1, Rational(1));
	alpha[0] = -5;
	TruncatedSeries mixed =
	    convolve_with_binomial(TruncatedSeries(Var::T, alpha), 2);
	for (int m = 0; m <= N; ++m)
		CHECK((mixed.coeff(m) > 0) == (m >= 11));

	std::mt19937 rng(19);
	std::uniform_int_distribution<int> pos(1, 9);
	std::vector<Rational> allpos(21);
	for (auto& x : allpos)
		x = pos(rng);
	for (int b = 1; b <= 5; ++b) {
		TruncatedSeries conv =
		    convolve_with_binomial(TruncatedSeries(Var::T, allpos), b);
		for (int m = 0; m <= conv.order(); ++m)
			CHECK(conv.coeff(m) > 0);
	}

	CHECK_THROWS_AS(
	    convolve_with_binomial(TruncatedSeries::identity(Var::Q, 4), 2),
	    std::invalid_argument);
}

TEST_CASE("binomial coefficients are non-decreasing in j for fixed b")
{
	for (int b = 1; b <= 8; ++b) {
		TruncatedSeries beta = binomial_series(b, 64);
		for (int j = 1; j <= 64; ++j)
			CHECK(beta.coeff(j) >= beta.coeff(j - 1));
	}
}

TEST_CASE("ring axioms on random series")
{
	std::mt19937 rng(23);
	for (int trial = 0; trial < 20; ++trial) {
		TruncatedSeries a = random_series(rng, Var::T, 18);
		TruncatedSeries b = random_series(rng, Var::T, 18);
		TruncatedSeries c = random_series(rng, Var::T, 18);
		CHECK(mul(a, b) == mul(b, a));
		CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
		CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
		CHECK(add(a, b) == add(b, a));
		CHECK(sub(a, a).is_zero());
	}
}

TEST_CASE("order zero series are legal everywhere")
{
	TruncatedSeries c = TruncatedSeries::constant(Var::T, Rational(3), 0);
	CHECK(mul(c, c).coeff(0) == 9);
	CHECK(invert_unit(c).coeff(0) == rational_from_string("1/3"));
	CHECK(add(c, c).coeff(0) == 6);
	CHECK(compose(c, TruncatedSeries(Var::T, 0)).coeff(0) == 3);
	CHECK(series_exp(TruncatedSeries(Var::T, 0)).coeff(0) == 1);
	CHECK(binomial_series(3, 0).order() == 0);
}

TEST_CASE("truncation only ever shortens")
{
	TruncatedSeries s = mobius_q(6);
	CHECK(s.truncated(2) == make(Var::T, {"1", "-2", "2"}));
	CHECK_THROWS_AS(s.truncated(7), std::invalid_argument);
	CHECK_THROWS_AS(s.truncated(-1), std::invalid_argument);
	CHECK_THROWS_AS(s.coeff(7), std::out_of_range);
}

TEST_CASE("unit and valuation predicates")
{
	CHECK(mobius_q(4).is_unit());
	CHECK_FALSE(mobius_q(4).has_positive_valuation());
	CHECK(theta_of_t(4).has_positive_valuation());
	CHECK_FALSE(theta_of_t(4).is_unit());
}
