// Shared generators for property-style tests.
#ifndef PBWQ_TESTS_SUPPORT_HPP
#define PBWQ_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include <pbwq/freelie.hpp>

namespace pbwq::testing
{

/// Every bracketing tree with exactly `degree` leaves drawn from `alphabet`.
inline std::vector<LieTreePtr> all_trees(const std::vector<Generator> &alphabet, int degree)
{
	std::vector<LieTreePtr> out;
	if (degree == 1)
	{
		for (auto g : alphabet)
			out.push_back(LieTree::leaf(g));
		return out;
	}
	for (int left = 1; left < degree; ++left)
	{
		auto ls = all_trees(alphabet, left);
		auto rs = all_trees(alphabet, degree - left);
		for (const auto &l : ls)
			for (const auto &r : rs)
				out.push_back(LieTree::bracket(l, r));
	}
	return out;
}

inline LieTreePtr random_tree(std::mt19937 &rng, const std::vector<Generator> &alphabet, int degree)
{
	if (degree == 1)
	{
		std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
		return LieTree::leaf(alphabet[pick(rng)]);
	}
	std::uniform_int_distribution<int> split(1, degree - 1);
	const int l = split(rng);
	return LieTree::bracket(random_tree(rng, alphabet, l), random_tree(rng, alphabet, degree - l));
}

inline Rational random_coefficient(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
	int n = num(rng);
	if (n == 0)
		n = 1;
	Rational r(n, den(rng));
	r.canonicalize();
	return r;
}

/// Random combination of one to three trees of degree <= max_degree.
inline LieElement random_lie_element(std::mt19937 &rng, const std::vector<Generator> &alphabet,
                                     int max_degree)
{
	std::uniform_int_distribution<int> terms(1, 3), deg(1, max_degree);
	LieElement out;
	const int k = terms(rng);
	for (int i = 0; i < k; ++i)
		out.add_scaled(normalize(*random_tree(rng, alphabet, deg(rng))), random_coefficient(rng));
	return out;
}

/// Number of Lyndon words of length d over q letters (necklace/Witt formula).
inline long witt_dimension(int q, int d)
{
	auto mobius = [](int n) {
		int result = 1;
		for (int p = 2; p * p <= n; ++p)
		{
			if (n % p == 0)
			{
				n /= p;
				if (n % p == 0)
					return 0;
				result = -result;
			}
		}
		if (n > 1)
			result = -result;
		return result;
	};
	long total = 0;
	for (int e = 1; e <= d; ++e)
	{
		if (d % e != 0)
			continue;
		long power = 1;
		for (int i = 0; i < d / e; ++i)
			power *= q;
		total += mobius(e) * power;
	}
	return total / d;
}

} // namespace pbwq::testing

#endif
