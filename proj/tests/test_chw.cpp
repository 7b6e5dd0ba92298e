#include <gtest/gtest.h>

#include <pbwq/assoc.hpp>
#include <pbwq/chw.hpp>

using namespace pbwq;

namespace
{

LieElement L(const char *text)
{
	return parse_lie_element(text);
}

} // namespace

TEST(Chains, CountsForSmallSizes)
{
	// n = m = 1: y1 alone (p = 1), and ad(x1)(y1) with an empty final X-block (p = 2)
	EXPECT_EQ(enumerate_chains(1, 1, ChainVariant::WPrime).size(), 2u);
	EXPECT_EQ(enumerate_chains(1, 1, ChainVariant::WPrime, FinalBlockRule::NonEmpty).size(), 1u);
	// ad(y1)(x1) with p = 2
	const auto dd = enumerate_chains(1, 1, ChainVariant::WDoublePrime);
	ASSERT_EQ(dd.size(), 1u);
	EXPECT_EQ(dd[0].p, 2);
	EXPECT_EQ(dd[0].betas[0].entries, std::vector<int>{1});
	EXPECT_TRUE(dd[0].alphas[0].entries.empty());
}

TEST(Chains, EveryChainUsesEachIndexOnce)
{
	for (auto variant : {ChainVariant::WPrime, ChainVariant::WDoublePrime})
		for_each_chain(2, 2, variant, [&](const ChainTerm &t) {
			std::vector<int> xs, ys;
			for (const auto &a : t.alphas)
				xs.insert(xs.end(), a.entries.begin(), a.entries.end());
			for (const auto &b : t.betas)
				ys.insert(ys.end(), b.entries.begin(), b.entries.end());
			(variant == ChainVariant::WPrime ? ys : xs).push_back(t.pivot);
			std::sort(xs.begin(), xs.end());
			std::sort(ys.begin(), ys.end());
			EXPECT_EQ(xs, (std::vector<int>{1, 2}));
			EXPECT_EQ(ys, (std::vector<int>{1, 2}));
		});
}

TEST(Chains, RejectEmptySides)
{
	EXPECT_THROW(enumerate_chains(0, 1, ChainVariant::WPrime), std::invalid_argument);
	EXPECT_THROW(enumerate_chains(1, 0, ChainVariant::WDoublePrime), std::invalid_argument);
}

TEST(W, Examples)
{
	EXPECT_EQ(w({1}, {}), lie_generator(x(1)));
	EXPECT_EQ(w({}, {3}), lie_generator(y(3)));
	EXPECT_EQ(w({1}, {1}), Rational(1, 2) * L("[x1,y1]"));
	EXPECT_EQ(w({1, 2}, {1}), Rational(1, 12) * L("[x1,[x2,y1]] + [x2,[x1,y1]]"));
	EXPECT_EQ(w({1}, {1, 2}), Rational(1, 12) * L("[[x1,y1],y2] + [[x1,y2],y1]"));
}

TEST(W, UndefinedOutsideSpecialPairs)
{
	EXPECT_THROW(w({}, {}), WUndefined);
	EXPECT_THROW(w({1, 2}, {}), WUndefined);
	EXPECT_THROW(w({}, {1, 2}), WUndefined);
}

TEST(W, NonEmptyFinalBlockDisagreesWithCampbellHausdorff)
{
	const LieElement literal = ratio(1, 2) * (chain_sum(1, 1, ChainVariant::WPrime, FinalBlockRule::NonEmpty) +
	                                          chain_sum(1, 1, ChainVariant::WDoublePrime));
	EXPECT_EQ(literal, Rational(3, 4) * L("[x1,y1]"));
	EXPECT_NE(literal, w({1}, {1}));
}

TEST(W, MatchesCampbellHausdorffCoefficients)
{
	for (int n = 1; n <= 4; ++n)
		for (int m = 1; n + m <= 5; ++m)
		{
			const ChLog z = ch_log(n, m, n + m);
			EXPECT_EQ(detail::w_canonical(n, m), lie_project(z.coefficient(z.full_tag())))
			    << "n=" << n << " m=" << m;
		}
}

TEST(W, RelabelingMatchesDirectSubsets)
{
	// w on {x2,x3} x {y1}, read off the Campbell-Hausdorff coefficient for that tag.
	const ChLog z = ch_log(3, 2, 5);
	for (std::uint32_t xs = 1; xs < 8; ++xs)
		for (std::uint32_t ys = 1; ys < 4; ++ys)
		{
			if (std::popcount(xs) + std::popcount(ys) > 4)
				continue;
			EXPECT_EQ(w(SubsetPair{xs, ys}), lie_project(z.coefficient({xs, ys}))) << xs << "," << ys;
		}
}
