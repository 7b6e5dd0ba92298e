#include <set>

#include <gtest/gtest.h>

#include <pbwq/bipart.hpp>

using namespace pbwq;

namespace
{

SymElement S(const char *text)
{
	return parse_sym_element(text);
}

SymMonomial xs(int n)
{
	std::vector<LyndonWord> f;
	for (int i = 1; i <= n; ++i)
		f.emplace_back(x(i));
	return SymMonomial(f);
}

SymMonomial ys(int m)
{
	std::vector<LyndonWord> f;
	for (int j = 1; j <= m; ++j)
		f.emplace_back(y(j));
	return SymMonomial(f);
}

/// Special bipartitions counted by labelling every element with a part
/// number and deduplicating the resulting sets of parts.
long brute_force_count(int n, int m, int size)
{
	const int total = n + m;
	std::set<std::vector<SubsetPair>> seen;
	std::vector<int> label(static_cast<std::size_t>(total), 0);
	while (true)
	{
		std::vector<SubsetPair> parts(static_cast<std::size_t>(size));
		for (int e = 0; e < total; ++e)
		{
			auto &part = parts[static_cast<std::size_t>(label[static_cast<std::size_t>(e)])];
			if (e < n)
				part.xs |= 1u << e;
			else
				part.ys |= 1u << (e - n);
		}
		bool ok = true;
		for (const auto &part : parts)
			ok = ok && part.size() > 0 && part.is_special();
		if (ok)
		{
			std::sort(parts.begin(), parts.end());
			seen.insert(parts);
		}
		int pos = total - 1;
		while (pos >= 0 && ++label[static_cast<std::size_t>(pos)] == size)
			label[static_cast<std::size_t>(pos--)] = 0;
		if (pos < 0)
			break;
	}
	return static_cast<long>(seen.size());
}

} // namespace

TEST(SpecialBipartitions, Examples)
{
	auto two = special_bipartitions(1, 1, 2);
	ASSERT_EQ(two.size(), 1u);
	EXPECT_EQ(to_string(two[0]), "{({x1},{}),({},{y1})}");

	auto one = special_bipartitions(1, 1, 1);
	ASSERT_EQ(one.size(), 1u);
	EXPECT_EQ(to_string(one[0]), "{({x1},{y1})}");

	std::set<std::string> found;
	for (const auto &pi : special_bipartitions(2, 1, 2))
		found.insert(to_string(pi));
	EXPECT_EQ(found, (std::set<std::string>{"{({x1},{y1}),({x2},{})}", "{({x1},{}),({x2},{y1})}"}));
}

TEST(SpecialBipartitions, CountsMatchBruteForce)
{
	for (int n = 1; n <= 3; ++n)
		for (int m = 1; n + m <= 5; ++m)
			for (int size = 1; size <= n + m; ++size)
				EXPECT_EQ(static_cast<long>(special_bipartitions(n, m, size).size()), brute_force_count(n, m, size))
				    << n << "," << m << "," << size;
}

TEST(SpecialBipartitions, AllSingletonsIsUnique)
{
	for (int n = 1; n <= 3; ++n)
		for (int m = 1; m <= 3; ++m)
			EXPECT_EQ(special_bipartitions(n, m, n + m).size(), 1u);
}

TEST(BpFormula, Examples)
{
	EXPECT_EQ(bp_formula(1, 1, 0), S("x1·y1"));
	EXPECT_EQ(bp_formula(1, 1, 1), S("1/2·[x1,y1]"));
	EXPECT_EQ(bp_formula(2, 1, 1), S("1/2·x2·[x1,y1] + 1/2·x1·[x2,y1]"));
	EXPECT_EQ(bp_formula(2, 2, 3), sym_from(w({1, 2}, {1, 2})));
	EXPECT_TRUE(bp_formula(1, 1, 2).is_zero());
}

TEST(BpFormula, AgreesWithOracleUpToTotalDegree4)
{
	for (int n = 1; n <= 3; ++n)
		for (int m = 1; n + m <= 4; ++m)
			for (int p = 0; p < n + m; ++p)
				EXPECT_EQ(bp_formula(n, m, p), b_p_oracle(xs(n), ys(m), p)) << n << "," << m << "," << p;
}

TEST(BpFormula, IsMultilinearAndHomogeneous)
{
	for (int n = 1; n <= 3; ++n)
		for (int m = 1; n + m <= 5; ++m)
			for (int p = 0; p < n + m; ++p)
				for (const auto &[mono, c] : bp_formula(n, m, p))
				{
					EXPECT_EQ(mono.degree(), n + m - p);
					std::vector<Generator> letters;
					for (const auto &f : mono.factors())
						letters.insert(letters.end(), f.letters().begin(), f.letters().end());
					std::sort(letters.begin(), letters.end());
					EXPECT_EQ(letters.size(), static_cast<std::size_t>(n + m));
					EXPECT_TRUE(std::adjacent_find(letters.begin(), letters.end()) == letters.end());
				}
}

TEST(Bp, RepeatedAndBracketFactorsMatchOracle)
{
	const LyndonWord x1(x(1)), y1(y(1)), xy(Word{x(1), y(1)});
	const std::vector<std::pair<SymMonomial, SymMonomial>> cases{
	    {SymMonomial({x1, x1}), SymMonomial({y1})},
	    {SymMonomial({xy}), SymMonomial({x1})},
	    {SymMonomial({x1, xy}), SymMonomial({y1, y1})},
	    {SymMonomial({y1}), SymMonomial({x1})},
	    {SymMonomial{}, SymMonomial({x1, y1})},
	};
	for (const auto &[a, b] : cases)
		for (int p = 0; p <= a.degree() + b.degree(); ++p)
			EXPECT_EQ(bp(a, b, p), bp(a, b, p, Backend::Oracle)) << to_string(a) << " | " << to_string(b) << " p=" << p;
}

TEST(Bp, Substitute)
{
	std::map<Generator, LieElement> values{{x(1), parse_lie_element("[x1,y1]")}, {y(1), lie_generator(x(1))}};
	EXPECT_EQ(substitute(parse_lie_element("[x1,y1]"), values), parse_lie_element("-[x1,[x1,y1]]"));
	EXPECT_THROW(substitute(parse_lie_element("x2"), values), std::out_of_range);
}
