#include "ptheta/bigfloat.hpp"

#include <stdexcept>
#include <utility>

namespace ptheta {

namespace {

long checked_prec(long prec_bits)
{
	if (prec_bits < MPFR_PREC_MIN)
		throw std::invalid_argument("BigFloat: precision below MPFR minimum");
	return prec_bits;
}

long join_prec(const BigFloat& a, const BigFloat& b)
{
	return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(long prec_bits)
{
	mpfr_init2(v_, checked_prec(prec_bits));
	mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o)
{
	mpfr_init2(v_, mpfr_get_prec(o.v_));
	mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept
{
	mpfr_init2(v_, mpfr_get_prec(o.v_));
	mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o)
{
	if (this != &o) {
		mpfr_set_prec(v_, mpfr_get_prec(o.v_));
		mpfr_set(v_, o.v_, MPFR_RNDN);
	}
	return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept
{
	mpfr_swap(v_, o.v_);
	return *this;
}

BigFloat::~BigFloat()
{
	mpfr_clear(v_);
}

BigFloat BigFloat::from_long(long v, long prec_bits)
{
	BigFloat x(prec_bits);
	mpfr_set_si(x.v_, v, MPFR_RNDN);
	return x;
}

BigFloat BigFloat::from_rational(const Rational& r, long prec_bits)
{
	BigFloat x(prec_bits);
	mpfr_set_q(x.v_, r.backend().data(), MPFR_RNDN);
	return x;
}

BigFloat BigFloat::from_string(const std::string& s, long prec_bits)
{
	if (s.find('/') != std::string::npos)
		return from_rational(rational_from_string(s), prec_bits);
	BigFloat x(prec_bits);
	if (mpfr_set_str(x.v_, s.c_str(), 10, MPFR_RNDN) != 0)
		throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
	return x;
}

BigFloat BigFloat::pow2(long e, long prec_bits)
{
	BigFloat x(prec_bits);
	mpfr_set_si(x.v_, 1, MPFR_RNDN);
	mpfr_mul_2si(x.v_, x.v_, e, MPFR_RNDN);
	return x;
}

BigFloat BigFloat::pi(long prec_bits)
{
	BigFloat x(prec_bits);
	mpfr_const_pi(x.v_, MPFR_RNDN);
	return x;
}

long BigFloat::precision() const
{
	return mpfr_get_prec(v_);
}

BigFloat BigFloat::at_precision(long prec_bits) const
{
	BigFloat x(prec_bits);
	mpfr_set(x.v_, v_, MPFR_RNDN);
	return x;
}

int BigFloat::sign() const
{
	return mpfr_sgn(v_);
}

bool BigFloat::is_zero() const
{
	return mpfr_zero_p(v_) != 0;
}

double BigFloat::to_double() const
{
	return mpfr_get_d(v_, MPFR_RNDN);
}

std::string BigFloat::to_string(int digits) const
{
	if (digits < 1)
		throw std::invalid_argument("BigFloat::to_string: digits must be >= 1");
	char* buf = nullptr;
	// %R*e consumes the rounding argument; RNDN ties to even in decimal
	if (mpfr_asprintf(&buf, "%.*R*e", digits - 1, MPFR_RNDN, v_) < 0)
		throw std::runtime_error("BigFloat::to_string: mpfr_asprintf failed");
	std::string out(buf);
	mpfr_free_str(buf);
	return out;
}

#define PT_BINOP(name, fn)                                                  \
	BigFloat name(const BigFloat& a, const BigFloat& b)                 \
	{                                                                   \
		BigFloat out(join_prec(a, b));                              \
		fn(out.raw(), a.raw(), b.raw(), MPFR_RNDN);                 \
		return out;                                                 \
	}

PT_BINOP(operator+, mpfr_add)
PT_BINOP(operator-, mpfr_sub)
PT_BINOP(operator*, mpfr_mul)
PT_BINOP(operator/, mpfr_div)
PT_BINOP(pow, mpfr_pow)
PT_BINOP(atan2, mpfr_atan2)

#undef PT_BINOP

BigFloat operator-(const BigFloat& a)
{
	BigFloat out(a.precision());
	mpfr_neg(out.raw(), a.raw(), MPFR_RNDN);
	return out;
}

int cmp(const BigFloat& a, const BigFloat& b)
{
	return mpfr_cmp(a.raw(), b.raw());
}

#define PT_UNOP(name, fn)                                                   \
	BigFloat name(const BigFloat& a)                                    \
	{                                                                   \
		BigFloat out(a.precision());                                \
		fn(out.raw(), a.raw(), MPFR_RNDN);                          \
		return out;                                                 \
	}

PT_UNOP(abs, mpfr_abs)
PT_UNOP(sqrt, mpfr_sqrt)
PT_UNOP(exp, mpfr_exp)
PT_UNOP(log, mpfr_log)

#undef PT_UNOP

void sin_cos(const BigFloat& x, BigFloat& s, BigFloat& c)
{
	BigFloat so(x.precision()), co(x.precision());
	mpfr_sin_cos(so.raw(), co.raw(), x.raw(), MPFR_RNDN);
	s = std::move(so);
	c = std::move(co);
}

BigComplex operator+(const BigComplex& a, const BigComplex& b)
{
	return {a.re + b.re, a.im + b.im};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b)
{
	return {a.re - b.re, a.im - b.im};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b)
{
	return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b)
{
	BigFloat n = b.re * b.re + b.im * b.im;
	if (n.is_zero())
		throw std::invalid_argument("BigComplex: division by zero");
	return {(a.re * b.re + a.im * b.im) / n,
	        (a.im * b.re - a.re * b.im) / n};
}

BigComplex operator-(const BigComplex& a)
{
	return {-a.re, -a.im};
}

BigFloat abs(const BigComplex& z)
{
	BigFloat out(z.precision());
	mpfr_hypot(out.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
	return out;
}

BigComplex exp(const BigComplex& z)
{
	BigFloat r = exp(z.re);
	BigFloat s(z.precision()), c(z.precision());
	sin_cos(z.im, s, c);
	return {r * c, r * s};
}

BigComplex sqrt_principal(const BigComplex& z)
{
	if (z.im.is_zero() && z.re.sign() <= 0)
		throw std::domain_error(
		    "sqrt_principal: argument on the branch cut");
	/* sqrt(z) = (sqrt((|z|+re)/2), sign(im) sqrt((|z|-re)/2)) */
	long prec = z.precision();
	BigFloat r = abs(z);
	BigFloat two = BigFloat::from_long(2, prec);
	BigFloat u = sqrt((r + z.re) / two);
	BigFloat v = sqrt((r - z.re) / two);
	if (z.im.sign() < 0)
		v = -v;
	return {u, v};
}

}  // namespace ptheta
