#include <vector>

#include <gtest/gtest.h>

#include <pbwq/assoc.hpp>

using namespace pbwq;

namespace
{

LieElement L(const char *text)
{
	return parse_lie_element(text);
}

SymElement S(const char *text)
{
	return parse_sym_element(text);
}

AssocElement word(std::initializer_list<Generator> letters)
{
	return AssocElement(Word(letters));
}

/// All multisets of size <= max_size drawn from `letters`.
std::vector<SymMonomial> multisets(const std::vector<LyndonWord> &letters, int max_size)
{
	std::vector<SymMonomial> out{SymMonomial{}};
	std::vector<std::vector<LyndonWord>> frontier{{}};
	std::vector<std::size_t> last_index{0};
	for (int size = 1; size <= max_size; ++size)
	{
		std::vector<std::vector<LyndonWord>> next;
		std::vector<std::size_t> next_index;
		for (std::size_t f = 0; f < frontier.size(); ++f)
			for (std::size_t i = last_index[f]; i < letters.size(); ++i)
			{
				auto grown = frontier[f];
				grown.push_back(letters[i]);
				out.emplace_back(grown);
				next.push_back(std::move(grown));
				next_index.push_back(i);
			}
		frontier = std::move(next);
		last_index = std::move(next_index);
	}
	return out;
}

std::vector<LyndonWord> small_letters()
{
	return {LyndonWord(x(1)), LyndonWord(y(1)), LyndonWord(Word{x(1), y(1)})};
}

} // namespace

TEST(Symmetrize, Examples)
{
	EXPECT_EQ(symmetrize(SymMonomial{x(1)}), word({x(1)}));
	EXPECT_EQ(symmetrize(SymMonomial{x(1), y(1)}),
	          Rational(1, 2) * (word({x(1), y(1)}) + word({y(1), x(1)})));
	EXPECT_EQ(symmetrize(SymMonomial{x(1), x(1)}), word({x(1), x(1)}));
	EXPECT_EQ(symmetrize(SymMonomial{}), assoc_unit());
	EXPECT_EQ(to_string(symmetrize(SymMonomial{x(1), y(1)})), "1/2·x1 y1 + 1/2·y1 x1");
}

TEST(Symmetrize, BracketLettersExpandThroughTheEmbedding)
{
	const SymMonomial m({LyndonWord(Word{x(1), y(1)})});
	EXPECT_EQ(symmetrize(m), word({x(1), y(1)}) - word({y(1), x(1)}));
}

TEST(Symmetrize, IsFiltrationTriangular)
{
	// e(m) and the ordered product of m's factors share their top symbol.
	for (const auto &m : multisets(small_letters(), 4))
	{
		AssocElement ordered = assoc_unit();
		for (const auto &f : m.factors())
			ordered = ordered * embed(f);
		const SymElement diff = e_inverse(symmetrize(m) - ordered);
		for (const auto &[mono, c] : diff)
			EXPECT_LT(mono.degree(), m.degree()) << to_string(m);
	}
}

TEST(EInverse, Examples)
{
	EXPECT_EQ(e_inverse(word({x(1)})), S("x1"));
	EXPECT_EQ(e_inverse(word({x(1), y(1)})), S("x1·y1 + 1/2·[x1,y1]"));
	EXPECT_EQ(e_inverse(assoc_unit()), sym_unit());
	EXPECT_TRUE(e_inverse(AssocElement{}).is_zero());
}

TEST(EInverse, RoundTripsSymmetrization)
{
	for (const auto &m : multisets(small_letters(), 4))
		EXPECT_EQ(e_inverse(symmetrize(m)), sym_from(m)) << to_string(m);
}

TEST(PbwExpand, ReconstructsTheInput)
{
	const AssocElement u = word({y(1), x(1), x(2)}) + Rational(3) * word({x(2), y(1), x(1)});
	AssocElement rebuilt;
	for (const auto &[factors, c] : pbw_expand(u))
	{
		AssocElement prod = assoc_unit();
		for (const auto &f : factors)
			prod = prod * embed(LyndonWord(f));
		rebuilt.add_scaled(prod, c);
	}
	EXPECT_EQ(rebuilt, u);
}

TEST(BOracle, Examples)
{
	EXPECT_EQ(b_oracle(SymMonomial{}, SymMonomial{y(1)}), S("y1"));
	EXPECT_EQ(b_oracle(SymMonomial{x(1)}, SymMonomial{y(1)}), S("x1·y1 + 1/2·[x1,y1]"));
	const SymElement left = b_oracle(b_oracle(sym_from(SymMonomial{x(1)}), sym_from(SymMonomial{y(1)})),
	                                 sym_from(SymMonomial{y(2)}));
	const SymElement right = b_oracle(sym_from(SymMonomial{x(1)}),
	                                  b_oracle(sym_from(SymMonomial{y(1)}), sym_from(SymMonomial{y(2)})));
	EXPECT_EQ(left, right);
}

TEST(BOracle, Components)
{
	const SymMonomial x1{x(1)}, y1{y(1)};
	EXPECT_EQ(b_p_oracle(x1, y1, 0), S("x1·y1"));
	EXPECT_EQ(b_p_oracle(x1, y1, 1), S("1/2·[x1,y1]"));
	EXPECT_TRUE(b_p_oracle(x1, y1, 2).is_zero());
	EXPECT_TRUE(b_p_oracle(x1, y1, 7).is_zero());
	EXPECT_THROW(b_p_oracle(x1, y1, -1), std::invalid_argument);

	// Degree-3 Campbell-Hausdorff term 1/12 [x,[x,y]], multilinear part.
	EXPECT_EQ(b_p_oracle(SymMonomial{x(1), x(2)}, y1, 2), S("1/12·[x1,[x2,y1]] + 1/12·[x2,[x1,y1]]"));
}

TEST(BOracle, ZerothComponentIsTheCommutativeProduct)
{
	const auto ms = multisets(small_letters(), 2);
	for (const auto &a : ms)
		for (const auto &b : ms)
		{
			if (a.degree() + b.degree() > 4)
				continue;
			EXPECT_EQ(b_p_oracle(a, b, 0), sym_from(a * b)) << to_string(a) << " , " << to_string(b);
		}
}

TEST(BOracle, ComponentsAreHomogeneous)
{
	const auto ms = multisets(small_letters(), 2);
	for (const auto &a : ms)
		for (const auto &b : ms)
			for (int p = 0; p <= a.degree() + b.degree(); ++p)
			{
				const SymElement v = b_p_oracle(a, b, p);
				if (!v.is_zero())
				{
					EXPECT_EQ(homogeneous_degree(v), a.degree() + b.degree() - p);
				}
			}
}

TEST(ChLog, LowOrderCoefficients)
{
	const ChLog z = ch_log(2, 1, 3);
	EXPECT_EQ(z.coefficient({0b1, 0}), word({x(1)}));
	EXPECT_EQ(z.coefficient({0, 0b1}), word({y(1)}));
	EXPECT_EQ(z.coefficient({0b1, 0b1}), Rational(1, 2) * (word({x(1), y(1)}) - word({y(1), x(1)})));
	EXPECT_EQ(lie_project(z.coefficient({0b1, 0b1})), Rational(1, 2) * L("[x1,y1]"));
	EXPECT_EQ(z.coefficient({0b11, 0b1}), embed(Rational(1, 12) * L("[x1,[x2,y1]] + [x2,[x1,y1]]")));
	// pure-x tags of size >= 2 vanish: exp(x) exp(0) = exp(x)
	EXPECT_TRUE(z.coefficient({0b11, 0}).is_zero());
}

TEST(ChLog, CoefficientsArePrimitive)
{
	for (int n = 0; n <= 5; ++n)
		for (int m = 0; n + m <= 5; ++m)
		{
			const ChLog z = ch_log(n, m, n + m);
			for (const auto &[tag, coeff] : z.series())
			{
				EXPECT_NO_THROW(lie_project(coeff)) << "n=" << n << " m=" << m;
				for (const auto &[w, c] : coeff)
					EXPECT_EQ(static_cast<int>(w.size()), tag.size());
			}
		}
}

TEST(ChLog, RejectsSmallDegreeCap)
{
	EXPECT_THROW(ch_log(2, 2, 3), std::invalid_argument);
}

TEST(LieProject, Examples)
{
	EXPECT_EQ(lie_project(word({x(1)})), lie_generator(x(1)));
	EXPECT_EQ(lie_project(word({x(1), y(1)}) - word({y(1), x(1)})), L("[x1,y1]"));
	EXPECT_THROW(lie_project(word({x(1), y(1)})), std::logic_error);
	EXPECT_THROW(lie_project(assoc_unit()), std::logic_error);
}

TEST(LieProject, RoundTripsCanonicalMonomials)
{
	const std::vector<Generator> alphabet{x(1), x(2), y(1)};
	for (int d = 1; d <= 5; ++d)
		for (const auto &w : lyndon::words_of_length(alphabet, d))
		{
			const LieElement v(LyndonWord{w});
			EXPECT_EQ(lie_project(embed(v)), v);
		}
}

TEST(SymText, RenderAndParse)
{
	const SymElement v = S("x1·y1 + 1/2·[x1,y1]");
	EXPECT_EQ(to_string(v), "x1·y1 + 1/2·[x1,y1]");
	EXPECT_EQ(parse_sym_element(to_string(v)), v);
	EXPECT_EQ(S("2·x1 - 3"), Rational(2) * sym_from(SymMonomial{x(1)}) - Rational(3) * sym_unit());
	EXPECT_EQ(S("[y1,x1]"), -S("[x1,y1]"));
	EXPECT_EQ(S("0"), SymElement{});
	EXPECT_THROW(S("1/2 x1"), std::invalid_argument);
}
