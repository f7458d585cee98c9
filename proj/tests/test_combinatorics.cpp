#include "ptheta/combinatorics.hpp"

#include <doctest.h>

using namespace ptheta;

TEST_CASE("zigzag: classical values and the boustrophedon base case")
{
	const long expect[] = {1, 1, 1, 2, 5, 16, 61, 272};
	for (int n = 0; n <= 7; ++n)
		CHECK(zigzag(n) == expect[n]);
	CHECK(zigzag(0) == 1);
	CHECK(zigzag(10) == 50521);
	CHECK_THROWS_AS(zigzag(-1), std::invalid_argument);
}

TEST_CASE("zigzag: triangle equals brute-force enumeration up to n = 9")
{
	for (int n = 0; n <= 9; ++n)
		CHECK(zigzag(n) == zigzag_bruteforce(n));
	CHECK_THROWS_AS(zigzag_bruteforce(11), std::invalid_argument);
}

TEST_CASE("permutation predicates on the involutions of S_4")
{
	std::vector<int> w2143{2, 1, 4, 3};
	std::vector<int> w3412{3, 4, 1, 2};
	std::vector<int> w4321{4, 3, 2, 1};
	for (const auto& w : {w2143, w3412, w4321}) {
		CHECK(is_permutation(w));
		CHECK(is_involution(w));
		CHECK(is_fixed_point_free(w));
	}
	// only 2143 alternates down-up: 2 > 1 < 4 > 3
	CHECK(is_alternating_down_up(w2143));
	CHECK_FALSE(is_alternating_down_up(w3412));
	CHECK_FALSE(is_alternating_down_up(w4321));

	CHECK_FALSE(is_permutation({1, 1, 3}));
	CHECK_FALSE(is_involution({2, 3, 1}));
	CHECK_FALSE(is_fixed_point_free({1, 3, 2}));
}

TEST_CASE("fixed-point-free alternating involutions: small counts")
{
	const long expect[] = {1, 1, 1, 2, 5};
	for (int n = 0; n <= 4; ++n)
		CHECK(fpf_alternating_involutions(n) == expect[n]);
	// among the three fixed-point-free involutions of S_4 exactly one works
	CHECK(fpf_alternating_involutions(2) == 1);
	CHECK(fpf_alternating_involutions(0) == 1);
}

TEST_CASE("matching generator produces exactly (2n-1)!! involutions")
{
	for (int n = 0; n <= 7; ++n) {
		InvolutionCounts counts = count_fpf_involutions(n);
		CHECK(counts.total == double_factorial_odd(n));
	}
	CHECK(double_factorial_odd(7) == 135135);
	CHECK(double_factorial_odd(0) == 1);
}

TEST_CASE("enumeration bound is enforced")
{
	CHECK_THROWS_AS(fpf_alternating_involutions(8), std::invalid_argument);
	CHECK_THROWS_AS(count_fpf_involutions(-1), std::invalid_argument);
	// the bound itself is configurable
	CHECK(fpf_alternating_involutions(5, 6) == 17);
}
