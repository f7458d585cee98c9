#pragma once

#include "ptheta/rational.hpp"

#include <mpfr.h>

#include <string>

namespace ptheta {

/* Arbitrary-precision real on top of MPFR, with the working precision in
 * bits carried by the value. Binary operations run at the larger of the
 * two operand precisions, so a computation never silently drops below the
 * precision it was asked for. All rounding is to nearest. */
class BigFloat {
public:
	explicit BigFloat(long prec_bits = 64);  // zero
	BigFloat(const BigFloat& o);
	BigFloat(BigFloat&& o) noexcept;
	BigFloat& operator=(const BigFloat& o);
	BigFloat& operator=(BigFloat&& o) noexcept;
	~BigFloat();

	static BigFloat from_long(long v, long prec_bits);
	static BigFloat from_rational(const Rational& r, long prec_bits);
	// decimal ("0.0625", "1e-3") or fraction ("1/16")
	static BigFloat from_string(const std::string& s, long prec_bits);
	static BigFloat pow2(long e, long prec_bits);  // 2^e exactly
	static BigFloat pi(long prec_bits);

	long precision() const;
	BigFloat at_precision(long prec_bits) const;  // rounded copy

	int sign() const;
	bool is_zero() const;
	double to_double() const;
	// scientific notation, `digits` significant digits, round-half-even
	std::string to_string(int digits) const;

	mpfr_srcptr raw() const { return v_; }
	mpfr_ptr raw() { return v_; }

private:
	mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);

int cmp(const BigFloat& a, const BigFloat& b);
inline bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat pow(const BigFloat& base, const BigFloat& expo);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
void sin_cos(const BigFloat& x, BigFloat& s, BigFloat& c);

/* Complex value as a BigFloat pair. Only the handful of operations the
 * eta evaluations need. */
struct BigComplex {
	BigFloat re, im;

	explicit BigComplex(long prec_bits = 64)
	    : re(prec_bits), im(prec_bits) {}
	BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

	long precision() const { return std::max(re.precision(), im.precision()); }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);

BigFloat abs(const BigComplex& z);
// exp(x + iy) = e^x (cos y + i sin y)
BigComplex exp(const BigComplex& z);
/* principal square root; rejects the branch cut (negative real axis,
 * including zero imaginary part with re < 0) */
BigComplex sqrt_principal(const BigComplex& z);

}  // namespace ptheta
