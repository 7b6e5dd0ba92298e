#ifndef PBWQ_SYM_HPP
#define PBWQ_SYM_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freelie.hpp"
#include "lincomb.hpp"
#include "render.hpp"

namespace pbwq
{

/// Commutative monomial in S(g): a multiset of Lyndon-basis Lie monomials.
///
/// degree() is the polynomial degree (number of factors), the grading that B_p
/// lowers by p. weight() counts generators and is preserved by every product.
class SymMonomial
{
public:
	SymMonomial() = default;

	explicit SymMonomial(std::vector<LyndonWord> factors) : factors_(std::move(factors))
	{
		std::sort(factors_.begin(), factors_.end(), DegreeLexLess{});
	}

	SymMonomial(std::initializer_list<Generator> gens)
	{
		for (auto g : gens)
			factors_.emplace_back(g);
		std::sort(factors_.begin(), factors_.end(), DegreeLexLess{});
	}

	[[nodiscard]] const std::vector<LyndonWord> &factors() const { return factors_; }
	[[nodiscard]] int degree() const { return static_cast<int>(factors_.size()); }
	[[nodiscard]] bool is_unit() const { return factors_.empty(); }

	[[nodiscard]] int weight() const
	{
		int w = 0;
		for (const auto &f : factors_)
			w += f.degree();
		return w;
	}

	/// True when every factor is a single generator and no generator repeats.
	[[nodiscard]] bool is_multilinear_in_generators() const
	{
		for (std::size_t i = 0; i < factors_.size(); ++i)
		{
			if (!factors_[i].is_generator())
				return false;
			if (i > 0 && factors_[i] == factors_[i - 1])
				return false;
		}
		return true;
	}

	friend SymMonomial operator*(const SymMonomial &a, const SymMonomial &b)
	{
		SymMonomial out;
		out.factors_.reserve(a.factors_.size() + b.factors_.size());
		std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
		           std::back_inserter(out.factors_), DegreeLexLess{});
		return out;
	}

	friend bool operator==(const SymMonomial &, const SymMonomial &) = default;

	/// Higher polynomial degree first, then factor-wise.
	friend bool operator<(const SymMonomial &a, const SymMonomial &b)
	{
		if (a.degree() != b.degree())
			return a.degree() > b.degree();
		return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
		                                    b.factors_.end(), DegreeLexLess{});
	}

private:
	std::vector<LyndonWord> factors_;
};

/// Element of the symmetric algebra S(g) of the free Lie algebra.
using SymElement = LinComb<SymMonomial>;

inline SymElement sym_unit()
{
	return SymElement(SymMonomial{});
}

inline SymElement sym_from(const SymMonomial &m)
{
	return SymElement(m);
}

/// The degree-1 element of S(g) given by a Lie element.
inline SymElement sym_from(const LieElement &v)
{
	SymElement out;
	for (const auto &[w, c] : v)
		out.add(SymMonomial({w}), c);
	return out;
}

inline SymElement operator*(const SymElement &a, const SymElement &b)
{
	SymElement out;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
			out.add(ma * mb, Rational(ca * cb));
	return out;
}

/// Commutative product of Lie elements, expanded multilinearly.
inline SymElement sym_product(const std::vector<LieElement> &factors)
{
	SymElement out = sym_unit();
	for (const auto &f : factors)
		out = out * sym_from(f);
	return out;
}

inline SymElement homogeneous_component(const SymElement &v, int degree)
{
	SymElement out;
	for (const auto &[m, c] : v)
		if (m.degree() == degree)
			out.add(m, c);
	return out;
}

/// Polynomial degree of every term, or -1 if zero or mixed.
inline int homogeneous_degree(const SymElement &v)
{
	int d = -1;
	for (const auto &[m, c] : v)
	{
		if (d == -1)
			d = m.degree();
		else if (d != m.degree())
			return -1;
	}
	return d;
}

inline std::string to_string(const SymMonomial &m)
{
	if (m.is_unit())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < m.factors().size(); ++i)
	{
		if (i)
			out += "·";
		out += to_string(m.factors()[i]);
	}
	return out;
}

/// e.g. "x1·y1 + 1/2·[x1,y1]".
inline std::string to_string(const SymElement &v)
{
	return detail::render_linear(v, [](const SymMonomial &m) { return to_string(m); }, "·");
}

/// Inverse of to_string(SymElement). Factors may be any bracketing; they are
/// normalized and multiplied out.
inline SymElement parse_sym_element(std::string_view text)
{
	detail::Cursor cur(text);
	if (cur.consume("0") && cur.done())
		return {};
	cur.rewind(0);
	SymElement out;
	Rational sign = 1;
	if (cur.consume("-"))
		sign = -1;
	while (true)
	{
		Rational coeff = 1;
		SymElement term = sym_unit();
		const std::size_t start = cur.position();
		auto num = cur.take_while([](char c) { return (c >= '0' && c <= '9') || c == '/'; });
		bool need_factor = true;
		if (!num.empty())
		{
			coeff = parse_rational(num);
			need_factor = cur.consume("·");
			if (!need_factor && cur.peek() != '+' && cur.peek() != '-' && !cur.done())
			{
				cur.rewind(start);
				cur.fail("expected '·' after coefficient");
			}
		}
		if (need_factor)
		{
			term = term * sym_from(normalize(*detail::parse_tree(cur)));
			while (cur.consume("·"))
				term = term * sym_from(normalize(*detail::parse_tree(cur)));
		}
		out.add_scaled(term, Rational(sign * coeff));
		if (cur.done())
			break;
		if (cur.consume("+"))
			sign = 1;
		else if (cur.consume("-"))
			sign = -1;
		else
			cur.fail("expected '+' or '-'");
	}
	return out;
}

} // namespace pbwq

#endif
