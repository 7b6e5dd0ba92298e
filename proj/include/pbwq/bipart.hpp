#ifndef PBWQ_BIPART_HPP
#define PBWQ_BIPART_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "assoc.hpp"
#include "chw.hpp"
#include "sym.hpp"

namespace pbwq
{

/// Parts of a bipartition, ordered by their least element (X indices before
/// Y indices). The order is canonical, so two equal bipartitions compare equal.
using Bipartition = std::vector<SubsetPair>;

inline std::string to_string(const SubsetPair &part)
{
	auto side = [](std::uint32_t mask, char letter) {
		std::string out = "{";
		bool first = true;
		for (int i : indices_of(mask))
		{
			if (!first)
				out += ",";
			out += letter + std::to_string(i);
			first = false;
		}
		return out + "}";
	};
	return "(" + side(part.xs, 'x') + "," + side(part.ys, 'y') + ")";
}

inline std::string to_string(const Bipartition &pi)
{
	std::string out = "{";
	for (std::size_t i = 0; i < pi.size(); ++i)
	{
		if (i)
			out += ",";
		out += to_string(pi[i]);
	}
	return out + "}";
}

namespace detail
{

inline std::uint32_t low_bits(int count)
{
	if (count < 0 || count > 31)
		throw std::out_of_range("index set size out of range");
	return (1u << count) - 1u;
}

template <class Fn>
void extend_bipartition(std::uint32_t free_x, std::uint32_t free_y, int parts_left, Bipartition &acc, Fn &fn)
{
	const int remaining = std::popcount(free_x) + std::popcount(free_y);
	if (parts_left == 0)
	{
		if (remaining == 0)
			fn(static_cast<const Bipartition &>(acc));
		return;
	}
	if (remaining < parts_left)
		return;

	// The part holding the least uncovered element is chosen now; the
	// others follow in the same way, which fixes the order of parts.
	std::uint32_t pin_x = 0, pin_y = 0;
	if (free_x != 0)
		pin_x = free_x & (~free_x + 1u);
	else
		pin_y = free_y & (~free_y + 1u);
	const std::uint32_t rest_x = free_x & ~pin_x;
	const std::uint32_t rest_y = free_y & ~pin_y;

	// all submasks of the remaining free elements, via the usual decrement trick
	std::uint32_t sub_x = rest_x;
	while (true)
	{
		std::uint32_t sub_y = rest_y;
		while (true)
		{
			const SubsetPair part{pin_x | sub_x, pin_y | sub_y};
			const int left_after = remaining - part.size();
			if (part.is_special() && left_after >= parts_left - 1)
			{
				acc.push_back(part);
				extend_bipartition(free_x & ~part.xs, free_y & ~part.ys, parts_left - 1, acc, fn);
				acc.pop_back();
			}
			if (sub_y == 0)
				break;
			sub_y = (sub_y - 1) & rest_y;
		}
		if (sub_x == 0)
			break;
		sub_x = (sub_x - 1) & rest_x;
	}
}

} // namespace detail

/// Streams each special bipartition of ({1..n}, {1..m}) with exactly `size`
/// parts once.
template <class Fn>
void for_each_special_bipartition(int n, int m, int size, Fn &&fn)
{
	if (n < 0 || m < 0)
		throw std::invalid_argument("negative index set size");
	if (size < 0)
		return;
	Bipartition acc;
	detail::extend_bipartition(detail::low_bits(n), detail::low_bits(m), size, acc, fn);
}

inline std::vector<Bipartition> special_bipartitions(int n, int m, int size)
{
	std::vector<Bipartition> out;
	for_each_special_bipartition(n, m, size, [&](const Bipartition &pi) { out.push_back(pi); });
	return out;
}

namespace detail
{

inline const SymElement &w_as_sym(const SubsetPair &part)
{
	thread_local std::map<SubsetPair, SymElement> cache;
	if (auto it = cache.find(part); it != cache.end())
		return it->second;
	return cache.emplace(part, sym_from(w(part))).first->second;
}

} // namespace detail

/// B_p(x_1...x_n, y_1...y_m) as the sum over special bipartitions with
/// n + m - p parts of the product of w over the parts.
inline const SymElement &bp_formula(int n, int m, int p)
{
	thread_local std::map<std::tuple<int, int, int>, SymElement> cache;
	if (p < 0)
		throw std::invalid_argument("p must be nonnegative");
	const auto key = std::make_tuple(n, m, p);
	if (auto it = cache.find(key); it != cache.end())
		return it->second;
	SymElement sum;
	for_each_special_bipartition(n, m, n + m - p, [&](const Bipartition &pi) {
		SymElement term = sym_unit();
		for (const auto &part : pi)
			term = term * detail::w_as_sym(part);
		sum += term;
	});
	return cache.emplace(key, std::move(sum)).first->second;
}

/// Replaces every generator by a Lie element, evaluating along the standard
/// bracketing of each basis monomial.
inline LieElement substitute(const LieElement &v, const std::map<Generator, LieElement> &values)
{
	auto eval = [&](auto &self, const LieTree &t) -> LieElement {
		if (t.is_leaf())
		{
			auto it = values.find(t.generator());
			if (it == values.end())
				throw std::out_of_range("no value for generator " + to_string(t.generator()));
			return it->second;
		}
		return bracket(self(self, t.left()), self(self, t.right()));
	};
	LieElement out;
	for (const auto &[w, c] : v)
		out.add_scaled(eval(eval, *standard_bracketing(w)), c);
	return out;
}

inline SymElement substitute(const SymElement &s, const std::map<Generator, LieElement> &values)
{
	SymElement out;
	for (const auto &[mono, c] : s)
	{
		SymElement term = sym_unit();
		for (const auto &f : mono.factors())
			term = term * sym_from(substitute(LieElement(f), values));
		out.add_scaled(term, c);
	}
	return out;
}

enum class Backend
{
	Formula,
	Oracle
};

inline std::string to_string(Backend b)
{
	return b == Backend::Formula ? "formula" : "oracle";
}

/// B_p on arbitrary monomials of S(g). The formula backend labels the
/// factors of a as x_1..x_n and those of b as y_1..y_m, evaluates the free
/// formula and substitutes the factors back; repeated or bracket factors are
/// handled by that substitution.
inline SymElement bp(const SymMonomial &a, const SymMonomial &b, int p, Backend backend = Backend::Formula)
{
	if (p < 0)
		throw std::invalid_argument("p must be nonnegative");
	if (backend == Backend::Oracle)
		return b_p_oracle(a, b, p);
	if (a.is_unit() || b.is_unit())
		return p == 0 ? sym_from(a * b) : SymElement{};
	const SymElement &free = bp_formula(a.degree(), b.degree(), p);
	if (free.is_zero())
		return {};
	std::map<Generator, LieElement> values;
	for (int i = 0; i < a.degree(); ++i)
		values.emplace(x(i + 1), LieElement(a.factors()[static_cast<std::size_t>(i)]));
	for (int j = 0; j < b.degree(); ++j)
		values.emplace(y(j + 1), LieElement(b.factors()[static_cast<std::size_t>(j)]));

	bool identity = true;
	for (const auto &[g, v] : values)
		identity = identity && v == lie_generator(g);
	return identity ? free : substitute(free, values);
}

inline SymElement bp(const SymElement &a, const SymElement &b, int p, Backend backend = Backend::Formula)
{
	SymElement out;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
			out.add_scaled(bp(ma, mb, p, backend), Rational(ca * cb));
	return out;
}

/// The product B(a, b) = sum over p of B_p(a, b).
inline SymElement star_product(const SymElement &a, const SymElement &b, Backend backend = Backend::Formula)
{
	SymElement out;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
			for (int p = 0; p <= ma.degree() + mb.degree(); ++p)
				out.add_scaled(bp(ma, mb, p, backend), Rational(ca * cb));
	return out;
}

} // namespace pbwq

#endif
