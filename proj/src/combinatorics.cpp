#include "ptheta/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptheta {

bool is_permutation(const std::vector<int>& w)
{
	std::vector<bool> seen(w.size(), false);
	for (int v : w) {
		if (v < 1 || v > static_cast<int>(w.size())) return false;
		if (seen[static_cast<size_t>(v - 1)]) return false;
		seen[static_cast<size_t>(v - 1)] = true;
	}
	return true;
}

bool is_involution(const std::vector<int>& w)
{
	if (!is_permutation(w)) return false;
	for (size_t i = 0; i < w.size(); ++i)
		if (w[static_cast<size_t>(w[i] - 1)] != static_cast<int>(i) + 1)
			return false;
	return true;
}

bool is_fixed_point_free(const std::vector<int>& w)
{
	for (size_t i = 0; i < w.size(); ++i)
		if (w[i] == static_cast<int>(i) + 1) return false;
	return true;
}

bool is_alternating_down_up(const std::vector<int>& w)
{
	for (size_t i = 0; i + 1 < w.size(); ++i) {
		if (i % 2 == 0) {
			if (!(w[i] > w[i + 1])) return false;
		} else {
			if (!(w[i] < w[i + 1])) return false;
		}
	}
	return true;
}

Int zigzag(int n)
{
	if (n < 0)
		throw std::invalid_argument("zigzag: n must be >= 0");
	/* boustrophedon: row[k] = row[k-1] + prev[m-k], answer row[m] */
	std::vector<Int> prev{Int(1)};
	for (int m = 1; m <= n; ++m) {
		std::vector<Int> row(static_cast<size_t>(m) + 1);
		row[0] = 0;
		for (int k = 1; k <= m; ++k)
			row[static_cast<size_t>(k)] =
			    row[static_cast<size_t>(k - 1)] + prev[static_cast<size_t>(m - k)];
		prev = std::move(row);
	}
	return prev.back();
}

Int zigzag_bruteforce(int n)
{
	if (n < 0)
		throw std::invalid_argument("zigzag_bruteforce: n must be >= 0");
	if (n > 10)
		throw std::invalid_argument("zigzag_bruteforce: n too large to enumerate");
	if (n == 0)
		return 1;
	std::vector<int> w(static_cast<size_t>(n));
	std::iota(w.begin(), w.end(), 1);
	Int count = 0;
	do {
		if (is_alternating_down_up(w))
			++count;
	} while (std::next_permutation(w.begin(), w.end()));
	return count;
}

namespace {

/* Recursive perfect-matching generator over {1..2n}: always pair the
 * smallest unmatched element, so each matching is produced exactly once. */
void gen_matchings(std::vector<int>& w, InvolutionCounts& counts)
{
	size_t i = 0;
	while (i < w.size() && w[i] != 0)
		++i;
	if (i == w.size()) {
		++counts.total;
		if (is_alternating_down_up(w))
			++counts.alternating;
		return;
	}
	for (size_t j = i + 1; j < w.size(); ++j) {
		if (w[j] != 0) continue;
		w[i] = static_cast<int>(j) + 1;
		w[j] = static_cast<int>(i) + 1;
		gen_matchings(w, counts);
		w[i] = 0;
		w[j] = 0;
	}
}

}  // namespace

InvolutionCounts count_fpf_involutions(int n, int max_n)
{
	if (n < 0)
		throw std::invalid_argument("count_fpf_involutions: n must be >= 0");
	if (n > max_n)
		throw std::invalid_argument(
		    "count_fpf_involutions: n exceeds the enumeration bound "
		    + std::to_string(max_n));
	InvolutionCounts counts{Int(0), Int(0)};
	if (n == 0) {
		// the empty involution counts once and is vacuously alternating
		counts.total = 1;
		counts.alternating = 1;
		return counts;
	}
	std::vector<int> w(static_cast<size_t>(2 * n), 0);
	gen_matchings(w, counts);
	return counts;
}

Int fpf_alternating_involutions(int n, int max_n)
{
	return count_fpf_involutions(n, max_n).alternating;
}

Int double_factorial_odd(int n)
{
	if (n < 0)
		throw std::invalid_argument("double_factorial_odd: n must be >= 0");
	Int out = 1;
	for (int k = 1; k <= 2 * n - 1; k += 2)
		out *= k;
	return out;
}

}  // namespace ptheta
