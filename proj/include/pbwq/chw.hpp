#ifndef PBWQ_CHW_HPP
#define PBWQ_CHW_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "freelie.hpp"

namespace pbwq
{

/// Which of the two Dynkin sums a chain belongs to: chains ending in a Y
/// pivot (w') or in an X pivot (w'').
enum class ChainVariant
{
	WPrime,
	WDoublePrime
};

/// Admissibility of the last X-block of a w' chain.
///
/// Dynkin's series places no constraint on it beyond the block pair being
/// nonzero, which the Y pivot already guarantees, so it may be empty. The
/// NonEmpty rule forces |alpha_p| >= 1; it drops the chains
/// ... ad(x)^{alpha_{p-1}} (y_k) counted with p blocks and gives
/// w({x1},{y1}) = 3/4 [x1,y1], which disagrees with the Campbell-Hausdorff
/// coefficient. It is kept for comparison only.
enum class FinalBlockRule
{
	MayBeEmpty,
	NonEmpty
};

/// One summand of w' or w''.
///
/// WPrime:       ad(x)^{a_1} ad(y)^{b_1} ... ad(y)^{b_{p-1}} ad(x)^{a_p} (y_k)
/// WDoublePrime: ad(x)^{a_1} ad(y)^{b_1} ... ad(x)^{a_{p-1}} ad(y)^{b_{p-1}} (x_k)
struct ChainTerm
{
	int p = 1;
	std::vector<MultiIndex> alphas; // side X
	std::vector<MultiIndex> betas;  // side Y
	int pivot = 1;
	ChainVariant variant = ChainVariant::WPrime;

	/// (-1)^{p+1} / p divided by the product of block-length factorials.
	[[nodiscard]] Rational coefficient() const
	{
		mpz_class denom = p;
		for (const auto &a : alphas)
			denom *= factorial(static_cast<long>(a.size()));
		for (const auto &b : betas)
			denom *= factorial(static_cast<long>(b.size()));
		return ratio(sign_power(p + 1), denom);
	}

	/// The ad-chain applied to the pivot, without the coefficient.
	[[nodiscard]] LieElement evaluate() const
	{
		std::vector<Generator> ops;
		for (std::size_t i = 0; i < alphas.size() || i < betas.size(); ++i)
		{
			if (i < alphas.size())
				for (int e : alphas[i].entries)
					ops.push_back(x(e));
			if (i < betas.size())
				for (int e : betas[i].entries)
					ops.push_back(y(e));
		}
		LieElement out = lie_generator(variant == ChainVariant::WPrime ? y(pivot) : x(pivot));
		for (auto it = ops.rbegin(); it != ops.rend(); ++it)
		{
			out = bracket(lie_generator(*it), out);
			if (out.is_zero())
				break;
		}
		return out;
	}
};

namespace detail
{

/// Calls fn(ordering) for every ordering of every block, as the cartesian
/// product of block permutations.
template <class Fn>
void for_each_block_ordering(std::vector<std::vector<int>> blocks, Fn &&fn, std::size_t at = 0)
{
	if (at == blocks.size())
	{
		fn(static_cast<const std::vector<std::vector<int>> &>(blocks));
		return;
	}
	std::sort(blocks[at].begin(), blocks[at].end());
	do
	{
		for_each_block_ordering(blocks, fn, at + 1);
	} while (std::next_permutation(blocks[at].begin(), blocks[at].end()));
}

/// Calls fn(assignment) for every map {0..count-1} -> {0..buckets-1}.
template <class Fn>
void for_each_assignment(int count, int buckets, Fn &&fn)
{
	if (count == 0)
	{
		fn(std::vector<int>{});
		return;
	}
	if (buckets <= 0)
		return;
	std::vector<int> a(static_cast<std::size_t>(count), 0);
	while (true)
	{
		fn(static_cast<const std::vector<int> &>(a));
		int pos = count - 1;
		while (pos >= 0 && ++a[static_cast<std::size_t>(pos)] == buckets)
		{
			a[static_cast<std::size_t>(pos)] = 0;
			--pos;
		}
		if (pos < 0)
			return;
	}
}

} // namespace detail

/// Streams every admissible chain for w'(X, Y) or w''(X, Y) with
/// X = {x_1..x_n}, Y = {y_1..y_m}, each exactly once.
///
/// Index sets are distributed over the blocks (ordered, some blocks may be
/// empty) and each block is then expanded into all of its orderings, which
/// are exactly the injective multi-indices with that image.
template <class Fn>
void for_each_chain(int n, int m, ChainVariant variant, Fn &&fn,
                    FinalBlockRule rule = FinalBlockRule::MayBeEmpty)
{
	if (n < 1 || m < 1)
		throw std::invalid_argument("chains need n >= 1 and m >= 1");

	const bool prime = variant == ChainVariant::WPrime;
	// pivot side has one element removed; the rest is spread over blocks
	const int pivot_range = prime ? m : n;
	for (int p = 1; p <= n + m; ++p)
	{
		const int x_blocks = prime ? p : p - 1;
		const int y_blocks = p - 1;
		for (int k = 1; k <= pivot_range; ++k)
		{
			std::vector<int> xs, ys;
			for (int i = 1; i <= n; ++i)
				if (prime || i != k)
					xs.push_back(i);
			for (int j = 1; j <= m; ++j)
				if (!prime || j != k)
					ys.push_back(j);

			detail::for_each_assignment(static_cast<int>(xs.size()), x_blocks, [&](const std::vector<int> &ax) {
				detail::for_each_assignment(static_cast<int>(ys.size()), y_blocks, [&](const std::vector<int> &ay) {
					std::vector<std::vector<int>> alpha(static_cast<std::size_t>(x_blocks));
					std::vector<std::vector<int>> beta(static_cast<std::size_t>(y_blocks));
					for (std::size_t t = 0; t < xs.size(); ++t)
						alpha[static_cast<std::size_t>(ax[t])].push_back(xs[t]);
					for (std::size_t t = 0; t < ys.size(); ++t)
						beta[static_cast<std::size_t>(ay[t])].push_back(ys[t]);

					for (int i = 0; i < p - 1; ++i)
						if (alpha[static_cast<std::size_t>(i)].empty() && beta[static_cast<std::size_t>(i)].empty())
							return;
					if (prime && rule == FinalBlockRule::NonEmpty && alpha.back().empty())
						return;

					std::vector<std::vector<int>> all = alpha;
					all.insert(all.end(), beta.begin(), beta.end());
					detail::for_each_block_ordering(all, [&](const std::vector<std::vector<int>> &ordered) {
						ChainTerm term;
						term.p = p;
						term.pivot = k;
						term.variant = variant;
						for (int i = 0; i < x_blocks; ++i)
							term.alphas.push_back({Side::X, ordered[static_cast<std::size_t>(i)]});
						for (int i = 0; i < y_blocks; ++i)
							term.betas.push_back({Side::Y, ordered[static_cast<std::size_t>(x_blocks + i)]});
						fn(static_cast<const ChainTerm &>(term));
					});
				});
			});
		}
	}
}

inline std::vector<ChainTerm> enumerate_chains(int n, int m, ChainVariant variant,
                                               FinalBlockRule rule = FinalBlockRule::MayBeEmpty)
{
	std::vector<ChainTerm> out;
	for_each_chain(n, m, variant, [&](const ChainTerm &t) { out.push_back(t); }, rule);
	return out;
}

/// Sum of coefficient * evaluate over one variant.
inline LieElement chain_sum(int n, int m, ChainVariant variant, FinalBlockRule rule = FinalBlockRule::MayBeEmpty)
{
	LieElement out;
	for_each_chain(
	    n, m, variant, [&](const ChainTerm &t) { out.add_scaled(t.evaluate(), t.coefficient()); }, rule);
	return out;
}

/// Thrown when w(A, B) is requested for a pair violating the special
/// condition (both empty, or one side empty and the other not a singleton).
struct WUndefined : std::domain_error
{
	using std::domain_error::domain_error;
};

/// A pair of index subsets (A of the X-indices, B of the Y-indices) as bit
/// masks: bit i-1 stands for index i.
struct SubsetPair
{
	std::uint32_t xs = 0;
	std::uint32_t ys = 0;

	[[nodiscard]] int size() const { return std::popcount(xs) + std::popcount(ys); }

	/// Definition of w: both sides nonempty, or exactly one singleton.
	[[nodiscard]] bool is_special() const
	{
		if (xs != 0 && ys != 0)
			return true;
		return size() == 1;
	}

	friend auto operator<=>(const SubsetPair &, const SubsetPair &) = default;
};

inline std::vector<int> indices_of(std::uint32_t mask)
{
	std::vector<int> out;
	for (int i = 0; mask != 0; ++i, mask >>= 1)
		if (mask & 1u)
			out.push_back(i + 1);
	return out;
}

inline std::uint32_t mask_of(const std::vector<int> &indices)
{
	std::uint32_t out = 0;
	for (int i : indices)
	{
		if (i < 1 || i > 32)
			throw std::out_of_range("subset index out of range");
		out |= 1u << (i - 1);
	}
	return out;
}

namespace detail
{

inline std::map<std::pair<int, int>, LieElement> &w_canonical_cache()
{
	thread_local std::map<std::pair<int, int>, LieElement> cache;
	return cache;
}

/// w({x_1..x_n}, {y_1..y_m}) for n, m >= 1.
inline const LieElement &w_canonical(int n, int m)
{
	auto &cache = w_canonical_cache();
	if (auto it = cache.find({n, m}); it != cache.end())
		return it->second;
	LieElement v = chain_sum(n, m, ChainVariant::WPrime) + chain_sum(n, m, ChainVariant::WDoublePrime);
	v *= ratio(1, n + m);
	return cache.emplace(std::make_pair(n, m), std::move(v)).first->second;
}

/// Renames generators and renormalizes. Only order-preserving renamings
/// within a side keep Lyndon words Lyndon, so the general case goes through
/// the bracketing tree.
inline LieElement relabel(const LieElement &v, const std::vector<int> &x_map, const std::vector<int> &y_map)
{
	auto rename = [&](Generator g) {
		const auto &table = g.side == Side::X ? x_map : y_map;
		return Generator{g.side, table.at(static_cast<std::size_t>(g.index - 1))};
	};
	const bool monotone = std::is_sorted(x_map.begin(), x_map.end()) && std::is_sorted(y_map.begin(), y_map.end());
	LieElement out;
	for (const auto &[w, c] : v)
	{
		Word letters = w.letters();
		for (auto &g : letters)
			g = rename(g);
		if (monotone)
			out.add(LyndonWord::trusted(std::move(letters)), c);
		else
			out.add_scaled(normalize(*standard_bracketing(LyndonWord(std::move(letters)))), c);
	}
	return out;
}

} // namespace detail

/// The Lie element w(A, B): the coefficient of t_A u_B in the
/// Campbell-Hausdorff series, evaluated from the Dynkin chain sums and
/// scaled by 1 / (#A + #B). Singletons on one side with the other side empty
/// give the generator itself.
inline LieElement w(const SubsetPair &part)
{
	if (!part.is_special())
		throw WUndefined("w undefined: a side is empty and the other is not a singleton");
	const auto A = indices_of(part.xs);
	const auto B = indices_of(part.ys);
	if (B.empty())
		return lie_generator(x(A.front()));
	if (A.empty())
		return lie_generator(y(B.front()));
	const LieElement &canonical = detail::w_canonical(static_cast<int>(A.size()), static_cast<int>(B.size()));
	return detail::relabel(canonical, A, B);
}

inline LieElement w(const std::vector<int> &A, const std::vector<int> &B)
{
	return w(SubsetPair{mask_of(A), mask_of(B)});
}

} // namespace pbwq

#endif
