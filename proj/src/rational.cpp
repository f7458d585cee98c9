#include "ptheta/rational.hpp"

#include <stdexcept>

namespace ptheta {

Rational rational_from_parts(const Int& num, const Int& den)
{
	if (den == 0)
		throw std::invalid_argument("rational: zero denominator");
	/* mpq division canonicalizes, mpq_set_num/den would not. */
	return Rational(num) / Rational(den);
}

namespace {

Int int_from_string(const std::string& s)
{
	size_t start = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
	if (s.size() == start)
		throw std::invalid_argument("not an integer: '" + s + "'");
	for (size_t i = start; i < s.size(); ++i)
		if (s[i] < '0' || s[i] > '9')
			throw std::invalid_argument("not an integer: '" + s + "'");
	return Int(s);
}

}  // namespace

Rational rational_from_string(const std::string& s)
{
	auto slash = s.find('/');
	if (slash == std::string::npos)
		return Rational(int_from_string(s));
	return rational_from_parts(int_from_string(s.substr(0, slash)),
	                           int_from_string(s.substr(slash + 1)));
}

std::string rational_to_string(const Rational& r)
{
	std::string out = numerator(r).str();
	if (denominator(r) != 1)
		out += "/" + denominator(r).str();
	return out;
}

bool is_integer(const Rational& r)
{
	return denominator(r) == 1;
}

Int binomial(unsigned long n, unsigned long k)
{
	Int out;
	mpz_bin_uiui(out.backend().data(), n, k);
	return out;
}

Int factorial(unsigned long n)
{
	Int out;
	mpz_fac_ui(out.backend().data(), n);
	return out;
}

}  // namespace ptheta
