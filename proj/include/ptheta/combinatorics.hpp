#pragma once

#include "ptheta/rational.hpp"

#include <vector>

namespace ptheta {

/* Permutations are 1-based image lists: w[i-1] is the image of i.
 * "Alternating" means the down-up convention throughout this module:
 * w(1) > w(2) < w(3) > w(4) < ...  (the convention that matches the
 * expansion coefficients of f_1; the up-down mirror does not). */
bool is_permutation(const std::vector<int>& w);
bool is_involution(const std::vector<int>& w);
bool is_fixed_point_free(const std::vector<int>& w);
bool is_alternating_down_up(const std::vector<int>& w);

/* Number of alternating permutations of {1..n} (1, 1, 1, 2, 5, 16, 61, ...),
 * by the boustrophedon (Seidel) triangle. Works for any n. */
Int zigzag(int n);

/* Same count by filtering all n! permutations; the independent route for
 * cross-checking the triangle. Rejects n > 10 (factorial blowup). */
Int zigzag_bruteforce(int n);

/* Number of fixed-point-free involutions of S_{2n} produced by the
 * matching generator (must equal (2n-1)!!) and the number of those that
 * are alternating. Enumeration cost is (2n-1)!!, bounded by max_n. */
struct InvolutionCounts {
	Int total;
	Int alternating;
};
InvolutionCounts count_fpf_involutions(int n, int max_n = 7);

// the alternating count alone: 1, 1, 1, 2, 5, 17, ...
Int fpf_alternating_involutions(int n, int max_n = 7);

// (2n-1)!! = 1*3*5*...*(2n-1), the closed-form matching count
Int double_factorial_odd(int n);

}  // namespace ptheta
