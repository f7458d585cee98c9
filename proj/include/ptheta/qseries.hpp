#pragma once

#include "ptheta/series.hpp"

#include <optional>
#include <string>

namespace ptheta {

/* Partial theta function f_b as an exact q-series: the coefficient of q^e
 * is 2(-1)^n when e = n^2 + bn for some n >= 0 and 0 otherwise. */
struct PartialTheta {
	int b;
	TruncatedSeries series;  // Var::Q

	int order() const { return series.order(); }
};

PartialTheta partial_theta_q(int b, int order);

/* Outcome of an exact coefficient-by-coefficient identity check. On
 * mismatch carries the first differing exponent and both coefficients. */
struct IdentityReport {
	std::string identity;
	int order = 0;
	bool ok = false;
	std::optional<int> first_mismatch_exponent;
	std::string lhs_coeff;
	std::string rhs_coeff;
};

// compares up to min(order lhs, order rhs)
IdentityReport compare_series(const std::string& name,
                              const TruncatedSeries& lhs,
                              const TruncatedSeries& rhs);

/* Checks f_{b+1} = -q^{-b} (f_{b-1} - 2) as an exact q-series identity to
 * order N. The q^{-b} is realized by exact coefficient shifting: f_{b-1} - 2
 * starts at -2q^b, so everything below q^b must vanish (a nonzero entry
 * there is an implementation bug, not a math failure). Both sides end up
 * with order N - b. Requires b >= 2 and N > b. */
IdentityReport recursion_check(int b, int order);

// product side of the theta identity: prod_{n>=1} (1-q^n)^2 / (1-q^{2n})
TruncatedSeries eta_quotient_series(int order);

// sum side: 1 + 2 sum_{n>=1} (-1)^n q^{n^2}
TruncatedSeries theta_sum_series(int order);

IdentityReport eta_identity_check(int order);

}  // namespace ptheta
