#ifndef PBWQ_ASSOC_HPP
#define PBWQ_ASSOC_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "free_assoc.hpp"
#include "freelie.hpp"
#include "sym.hpp"

namespace pbwq
{

namespace detail
{

inline std::map<SymMonomial, AssocElement> &symmetrize_cache()
{
	thread_local std::map<SymMonomial, AssocElement> cache;
	return cache;
}

inline std::map<std::vector<Word>, AssocElement> &pbw_product_cache()
{
	thread_local std::map<std::vector<Word>, AssocElement> cache;
	return cache;
}

/// P_{l1} P_{l2} ... P_{lk} expanded into words.
inline const AssocElement &pbw_product(const std::vector<Word> &lyndon_factors)
{
	auto &cache = pbw_product_cache();
	if (auto it = cache.find(lyndon_factors); it != cache.end())
		return it->second;
	AssocElement prod = assoc_unit();
	for (const auto &f : lyndon_factors)
		prod = prod * embed(LyndonWord::trusted(f));
	return cache.emplace(lyndon_factors, std::move(prod)).first->second;
}

} // namespace detail

/// Symmetrization S(g) -> U(g): the average over all orderings of the
/// factors, each factor embedded as an associative polynomial. Memoized.
inline const AssocElement &symmetrize(const SymMonomial &m)
{
	auto &cache = detail::symmetrize_cache();
	if (auto it = cache.find(m); it != cache.end())
		return it->second;

	const auto &factors = m.factors();
	const std::size_t p = factors.size();
	// Every distinct arrangement is hit (prod of multiplicity factorials) times
	// among the p! permutations.
	mpz_class repeats = 1;
	for (std::size_t i = 0; i < p;)
	{
		std::size_t j = i;
		while (j < p && factors[j] == factors[i])
			++j;
		repeats *= factorial(static_cast<long>(j - i));
		i = j;
	}
	const Rational weight = ratio(repeats, factorial(static_cast<long>(p)));

	std::vector<std::size_t> order(p);
	std::iota(order.begin(), order.end(), 0);
	// compare by factor so that equal factors are interchangeable
	auto less = [&](std::size_t a, std::size_t b) { return DegreeLexLess{}(factors[a], factors[b]); };
	AssocElement out;
	do
	{
		AssocElement term = assoc_unit();
		for (std::size_t idx : order)
			term = term * embed(factors[idx]);
		out.add_scaled(term, weight);
	} while (std::next_permutation(order.begin(), order.end(), less));

	return cache.emplace(m, std::move(out)).first->second;
}

inline AssocElement symmetrize(const SymElement &s)
{
	AssocElement out;
	for (const auto &[m, c] : s)
		out.add_scaled(symmetrize(m), c);
	return out;
}

/// Decreasing Lyndon factorizations with coefficients: the expansion of u in
/// the PBW basis P_{l1}...P_{lk}, l1 >= ... >= lk.
///
/// P_{l1}...P_{lk} equals the word l1...lk plus lexicographically larger words
/// of the same length, so repeatedly peeling off the smallest word is a
/// triangular solve.
inline std::map<std::vector<Word>, Rational> pbw_expand(AssocElement u)
{
	std::map<std::vector<Word>, Rational> out;
	while (!u.is_zero())
	{
		const Word w = u.begin()->first;
		const Rational c = u.begin()->second;
		auto factors = lyndon::factorize(w);
		const AssocElement &prod = detail::pbw_product(factors);
		if (prod.begin()->first != w || prod.begin()->second != 1)
			throw std::logic_error("PBW leading word mismatch for " + to_string(w));
		u.add_scaled(prod, Rational(-c));
		out[std::move(factors)] += c;
	}
	std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
	return out;
}

/// Inverse of the symmetrization map.
///
/// Descends the PBW filtration: the top filtration layer of u (its PBW terms
/// with the most factors) gives the commutative symbol, whose symmetrization
/// is subtracted; the remainder lies one layer lower.
inline SymElement e_inverse(const AssocElement &u)
{
	SymElement result;
	AssocElement rest = u;
	while (!rest.is_zero())
	{
		const auto pbw = pbw_expand(rest);
		std::size_t top = 0;
		for (const auto &[factors, c] : pbw)
			top = std::max(top, factors.size());
		SymElement symbol;
		for (const auto &[factors, c] : pbw)
		{
			if (factors.size() != top)
				continue;
			std::vector<LyndonWord> letters;
			letters.reserve(factors.size());
			for (const auto &f : factors)
				letters.push_back(LyndonWord::trusted(f));
			symbol.add(SymMonomial(std::move(letters)), c);
		}
		result += symbol;
		rest -= symmetrize(symbol);
	}
	return result;
}

namespace detail
{

inline std::map<std::pair<SymMonomial, SymMonomial>, SymElement> &b_oracle_cache()
{
	thread_local std::map<std::pair<SymMonomial, SymMonomial>, SymElement> cache;
	return cache;
}

} // namespace detail

/// B(a, b) = e^{-1}(e(a) e(b)) computed by brute force in the enveloping
/// algebra.
inline const SymElement &b_oracle(const SymMonomial &a, const SymMonomial &b)
{
	auto &cache = detail::b_oracle_cache();
	auto key = std::make_pair(a, b);
	if (auto it = cache.find(key); it != cache.end())
		return it->second;
	SymElement value = e_inverse(symmetrize(a) * symmetrize(b));
	return cache.emplace(std::move(key), std::move(value)).first->second;
}

inline SymElement b_oracle(const SymElement &a, const SymElement &b)
{
	SymElement out;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
			out.add_scaled(b_oracle(ma, mb), Rational(ca * cb));
	return out;
}

/// Component of B(a, b) of polynomial degree deg a + deg b - p.
inline SymElement b_p_oracle(const SymMonomial &a, const SymMonomial &b, int p)
{
	if (p < 0)
		throw std::invalid_argument("p must be nonnegative");
	const int target = a.degree() + b.degree() - p;
	if (target < 0)
		return {};
	return homogeneous_component(b_oracle(a, b), target);
}

inline SymElement b_p_oracle(const SymElement &a, const SymElement &b, int p)
{
	SymElement out;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
			out.add_scaled(b_p_oracle(ma, mb, p), Rational(ca * cb));
	return out;
}

// ---------------------------------------------------------------------------
// Campbell-Hausdorff series with square-free formal variables

/// Square-free monomial t_A u_B in the formal variables; bit i-1 of xs marks
/// t_i, bit j-1 of ys marks u_j.
struct MultilinearTag
{
	std::uint32_t xs = 0;
	std::uint32_t ys = 0;

	[[nodiscard]] bool disjoint(const MultilinearTag &o) const
	{
		return (xs & o.xs) == 0 && (ys & o.ys) == 0;
	}

	[[nodiscard]] int size() const { return std::popcount(xs) + std::popcount(ys); }

	friend MultilinearTag operator|(MultilinearTag a, MultilinearTag b) { return {a.xs | b.xs, a.ys | b.ys}; }
	friend auto operator<=>(const MultilinearTag &, const MultilinearTag &) = default;
};

/// Elements of U(g)[t, u] truncated to square-free monomials: any product
/// that would repeat a formal variable is dropped on the spot.
using TaggedSeries = std::map<MultilinearTag, AssocElement>;

namespace detail
{

inline TaggedSeries tagged_product(const TaggedSeries &a, const TaggedSeries &b)
{
	TaggedSeries out;
	for (const auto &[ta, ea] : a)
		for (const auto &[tb, eb] : b)
		{
			if (!ta.disjoint(tb))
				continue;
			out[ta | tb] += ea * eb;
		}
	std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
	return out;
}

inline void tagged_add(TaggedSeries &acc, const TaggedSeries &v, const Rational &s)
{
	for (const auto &[t, e] : v)
		acc[t].add_scaled(e, s);
	std::erase_if(acc, [](const auto &kv) { return kv.second.is_zero(); });
}

/// exp of a series without constant term, truncated by nilpotency.
inline TaggedSeries tagged_exp(const TaggedSeries &s, int max_power)
{
	TaggedSeries out{{MultilinearTag{}, assoc_unit()}};
	TaggedSeries power = out;
	for (int k = 1; k <= max_power; ++k)
	{
		power = tagged_product(power, s);
		if (power.empty())
			break;
		tagged_add(out, power, ratio(1, factorial(k)));
	}
	return out;
}

} // namespace detail

/// z(t, u) = log(exp(x(t)) exp(y(u))) with x(t) = sum t_i x_i,
/// y(u) = sum u_j y_j, keeping only square-free monomials t_A u_B.
class ChLog
{
public:
	[[nodiscard]] int nx() const { return nx_; }
	[[nodiscard]] int ny() const { return ny_; }
	[[nodiscard]] const TaggedSeries &series() const { return series_; }

	/// Coefficient of t_A u_B; zero when absent.
	[[nodiscard]] AssocElement coefficient(MultilinearTag tag) const
	{
		auto it = series_.find(tag);
		return it == series_.end() ? AssocElement{} : it->second;
	}

	[[nodiscard]] MultilinearTag full_tag() const
	{
		return {static_cast<std::uint32_t>((1u << nx_) - 1), static_cast<std::uint32_t>((1u << ny_) - 1)};
	}

	friend ChLog ch_log(int nx, int ny, int degree_cap);

private:
	int nx_ = 0, ny_ = 0;
	TaggedSeries series_;
};

inline ChLog ch_log(int nx, int ny, int degree_cap)
{
	if (nx < 0 || ny < 0 || nx > 16 || ny > 16)
		throw std::invalid_argument("alphabet sizes must lie in [0, 16]");
	if (degree_cap < nx + ny)
		throw std::invalid_argument("degree cap " + std::to_string(degree_cap) +
		                            " cannot hold the square-free part of degree " + std::to_string(nx + ny));
	TaggedSeries xs, ys;
	for (int i = 1; i <= nx; ++i)
		xs[{1u << (i - 1), 0}] = assoc_generator(x(i));
	for (int j = 1; j <= ny; ++j)
		ys[{0, 1u << (j - 1)}] = assoc_generator(y(j));

	const int vars = nx + ny;
	TaggedSeries e = detail::tagged_product(detail::tagged_exp(xs, vars), detail::tagged_exp(ys, vars));
	e.erase(MultilinearTag{});

	// log(1 + D) = sum_k (-1)^{k+1} D^k / k; D^k = 0 once k exceeds the number
	// of formal variables.
	ChLog out;
	out.nx_ = nx;
	out.ny_ = ny;
	TaggedSeries power{{MultilinearTag{}, assoc_unit()}};
	for (int k = 1; k <= std::min(vars, degree_cap); ++k)
	{
		power = detail::tagged_product(power, e);
		if (power.empty())
			break;
		detail::tagged_add(out.series_, power, ratio(sign_power(k + 1), k));
	}
	return out;
}

/// Right-normed bracket [g1,[g2,[...,gd]]] of a word, in the Lyndon basis.
inline LieElement right_normed(const Word &w)
{
	if (w.empty())
		throw std::invalid_argument("right_normed needs a nonempty word");
	LieElement out = lie_generator(w.back());
	for (auto it = w.rbegin() + 1; it != w.rend(); ++it)
		out = bracket(lie_generator(*it), out);
	return out;
}

/// Recovers the Lie element whose embedding is u, via the Dynkin idempotent
/// (on degree d, w -> right_normed(w) / d). Throws std::logic_error when u is
/// not in the image of the embedding.
inline LieElement lie_project(const AssocElement &u)
{
	LieElement out;
	for (const auto &[w, c] : u)
	{
		if (w.empty())
			throw std::logic_error("lie_project: constant term is not primitive");
		out.add_scaled(right_normed(w), Rational(c / static_cast<long>(w.size())));
	}
	if (embed(out) != u)
		throw std::logic_error("lie_project: input is not a Lie element");
	return out;
}

} // namespace pbwq

#endif
