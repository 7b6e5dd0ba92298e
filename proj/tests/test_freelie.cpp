#include <random>

#include <gtest/gtest.h>

#include <pbwq/freelie.hpp>

#include "support.hpp"

using namespace pbwq;
using pbwq::testing::all_trees;
using pbwq::testing::random_lie_element;

namespace
{

LieElement L(const char *text)
{
	return parse_lie_element(text);
}

LieElement gen(Generator g)
{
	return lie_generator(g);
}

const std::vector<Generator> kAlphabet3{x(1), x(2), y(1)};

} // namespace

TEST(Lyndon, RecognizesLyndonWords)
{
	EXPECT_TRUE(lyndon::is_lyndon(Word{x(1)}));
	EXPECT_TRUE(lyndon::is_lyndon(Word{x(1), y(1)}));
	EXPECT_FALSE(lyndon::is_lyndon(Word{y(1), x(1)}));
	EXPECT_FALSE(lyndon::is_lyndon(Word{x(1), x(1)}));
	EXPECT_TRUE(lyndon::is_lyndon(Word{x(1), x(1), x(2)}));
	EXPECT_FALSE(lyndon::is_lyndon(Word{}));
}

TEST(Lyndon, StandardFactorizationTakesLongestLyndonSuffix)
{
	auto [u, v] = lyndon::standard_factorization(Word{x(1), x(2), x(3)});
	EXPECT_EQ(u, (Word{x(1)}));
	EXPECT_EQ(v, (Word{x(2), x(3)}));
	auto [a, b] = lyndon::standard_factorization(Word{x(1), x(3), x(2)});
	EXPECT_EQ(a, (Word{x(1), x(3)}));
	EXPECT_EQ(b, (Word{x(2)}));
}

TEST(Lyndon, DuvalFactorizationIsNonincreasing)
{
	const Word w{y(1), x(1), y(1), x(1), x(1), x(2)};
	auto factors = lyndon::factorize(w);
	Word joined;
	for (std::size_t i = 0; i < factors.size(); ++i)
	{
		EXPECT_TRUE(lyndon::is_lyndon(factors[i]));
		if (i > 0)
		{
			EXPECT_FALSE(factors[i - 1] < factors[i]);
		}
		joined.insert(joined.end(), factors[i].begin(), factors[i].end());
	}
	EXPECT_EQ(joined, w);
}

TEST(Lyndon, WittDimensionCounts)
{
	for (int q = 1; q <= 3; ++q)
	{
		std::vector<Generator> alphabet;
		for (int i = 1; i <= q; ++i)
			alphabet.push_back(x(i));
		for (int d = 1; d <= 5; ++d)
			EXPECT_EQ(static_cast<long>(lyndon::words_of_length(alphabet, d).size()),
			          pbwq::testing::witt_dimension(q, d))
			    << "q=" << q << " d=" << d;
	}
}

TEST(Bracket, Examples)
{
	EXPECT_TRUE(bracket(gen(x(1)), gen(x(1))).is_zero());
	EXPECT_EQ(bracket(gen(y(1)), gen(x(1))), -L("[x1,y1]"));
	EXPECT_EQ(to_string(bracket(gen(y(1)), gen(x(1)))), "-[x1,y1]");

	// [[x1,x2],x1] = -[x1,[x1,x2]]; confirm against ab - ba in the free associative algebra.
	const LieElement lhs = bracket(L("[x1,x2]"), gen(x(1)));
	EXPECT_EQ(lhs, -LieElement(LyndonWord(Word{x(1), x(1), x(2)})));
	EXPECT_EQ(embed(lhs), commutator(embed(L("[x1,x2]")), embed(gen(x(1)))));
	EXPECT_EQ(to_string(lhs), "-[x1,[x1,x2]]");
}

TEST(Normalize, Examples)
{
	EXPECT_EQ(normalize(*LieTree::leaf(x(1))), gen(x(1)));
	EXPECT_EQ(normalize(*parse_lie_tree("[x2,x1]")), -L("[x1,x2]"));

	// Lyndon basis of multidegree (1,1,1): [x1,[x2,x3]] and [[x1,x3],x2].
	auto t = parse_lie_tree("[[x1,x2],x3]");
	const LieElement expected = L("[x1,[x2,x3]] + [[x1,x3],x2]");
	EXPECT_EQ(normalize(*t), expected);
	EXPECT_EQ(embed(expected), embed(*t));
	EXPECT_EQ(to_string(expected), "[x1,[x2,x3]] + [[x1,x3],x2]");
}

TEST(Normalize, IdempotentOnCanonicalMonomials)
{
	for (int d = 1; d <= 5; ++d)
		for (const auto &w : lyndon::words_of_length(kAlphabet3, d))
		{
			LyndonWord lw(w);
			EXPECT_EQ(normalize(*standard_bracketing(lw)), LieElement(lw)) << to_string(lw);
		}
}

TEST(Normalize, AgreesWithAssociativeEmbeddingOnAllTreesUpToDegree5)
{
	for (int d = 1; d <= 5; ++d)
		for (const auto &t : all_trees(kAlphabet3, d))
		{
			const LieElement n = normalize(*t);
			ASSERT_EQ(embed(n), embed(*t)) << to_string(*t);
			if (!n.is_zero())
			{
				ASSERT_EQ(homogeneous_degree(n), d);
			}
		}
}

TEST(Embed, LeadingWordIsTheLyndonWord)
{
	// The smallest word of the expansion is the Lyndon word itself with
	// coefficient 1, so the embedding is injective on the Lyndon basis.
	for (int d = 1; d <= 5; ++d)
		for (const auto &w : lyndon::words_of_length(kAlphabet3, d))
		{
			const AssocElement &e = embed(LyndonWord(w));
			ASSERT_FALSE(e.is_zero());
			EXPECT_EQ(e.begin()->first, w);
			EXPECT_EQ(e.begin()->second, 1);
		}
}

TEST(Bracket, AntisymmetryAndJacobiOnRandomElements)
{
	std::mt19937 rng(20240611);
	const std::vector<Generator> alphabet{x(1), x(2), y(1), y(2)};
	for (int trial = 0; trial < 60; ++trial)
	{
		auto a = random_lie_element(rng, alphabet, 3);
		auto b = random_lie_element(rng, alphabet, 3);
		auto c = random_lie_element(rng, alphabet, 3);
		EXPECT_TRUE((bracket(a, b) + bracket(b, a)).is_zero());
		auto jacobi = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
		EXPECT_TRUE(jacobi.is_zero()) << to_string(a) << " | " << to_string(b) << " | " << to_string(c);
	}
}

TEST(AdChain, Examples)
{
	EXPECT_EQ(ad_chain({Side::X, {}}, gen(y(1))), gen(y(1)));
	EXPECT_EQ(ad_chain({Side::X, {1}}, gen(y(1))), L("[x1,y1]"));
	EXPECT_EQ(ad_chain({Side::X, {1, 2}}, gen(y(1))), normalize(*parse_lie_tree("[x1,[x2,y1]]")));
	EXPECT_EQ(ad_chain({Side::Y, {2}}, gen(y(1))), -L("[y1,y2]"));
}

TEST(AdChain, Errors)
{
	EXPECT_THROW(ad_chain({Side::X, {3}}, gen(y(1)), Alphabet{2, 1}), std::out_of_range);
	EXPECT_THROW(ad_chain({Side::X, {0}}, gen(y(1))), std::out_of_range);
	EXPECT_THROW(ad_chain({Side::X, {1, 1}}, gen(y(1))), std::invalid_argument);
}

TEST(Text, RenderAndParse)
{
	EXPECT_EQ(to_string(LyndonWord(Word{x(1), x(2), y(1)})), "[x1,[x2,y1]]");
	EXPECT_EQ(to_string(LieElement{}), "0");
	const LieElement v = Rational(1, 2) * L("[x1,y1]") - Rational(1, 3) * L("[x1,[x1,y1]]");
	EXPECT_EQ(to_string(v), "1/2·[x1,y1] - 1/3·[x1,[x1,y1]]");
	EXPECT_EQ(parse_lie_element(to_string(v)), v);
	EXPECT_EQ(parse_lie_element("0"), LieElement{});
	EXPECT_THROW(parse_lie_element("[x1,y1"), std::invalid_argument);
	EXPECT_THROW(parse_lie_element("[x1,z1]"), std::invalid_argument);
}

TEST(Text, RoundTripOnRandomElements)
{
	std::mt19937 rng(7);
	for (int i = 0; i < 50; ++i)
	{
		auto v = random_lie_element(rng, kAlphabet3, 4);
		EXPECT_EQ(parse_lie_element(to_string(v)), v) << to_string(v);
	}
}
