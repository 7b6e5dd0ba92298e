#ifndef PBWQ_WORD_HPP
#define PBWQ_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbwq
{

enum class Side : std::uint8_t
{
	X = 0,
	Y = 1
};

/// A free generator x_i or y_i (1-based). The defaulted ordering puts every
/// X-generator before every Y-generator, then orders by index.
struct Generator
{
	Side side = Side::X;
	int index = 1;

	friend auto operator<=>(const Generator &, const Generator &) = default;
};

inline Generator x(int i) { return {Side::X, i}; }
inline Generator y(int i) { return {Side::Y, i}; }

inline std::string to_string(const Generator &g)
{
	return (g.side == Side::X ? "x" : "y") + std::to_string(g.index);
}

/// Parses "x3" / "y12".
inline Generator parse_generator(std::string_view s)
{
	if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
		throw std::invalid_argument("bad generator: '" + std::string(s) + "'");
	int idx = 0;
	for (std::size_t i = 1; i < s.size(); ++i)
	{
		if (s[i] < '0' || s[i] > '9')
			throw std::invalid_argument("bad generator: '" + std::string(s) + "'");
		idx = idx * 10 + (s[i] - '0');
	}
	if (idx < 1)
		throw std::invalid_argument("generator index must be positive: '" + std::string(s) + "'");
	return {s[0] == 'x' ? Side::X : Side::Y, idx};
}

/// Associative word in the generators. std::vector's ordering is the
/// lexicographic order (a proper prefix is smaller), which is the order the
/// Lyndon machinery below assumes.
using Word = std::vector<Generator>;

inline std::string to_string(std::span<const Generator> w)
{
	if (w.empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < w.size(); ++i)
	{
		if (i)
			out += ' ';
		out += to_string(w[i]);
	}
	return out;
}

inline Word concat(std::span<const Generator> a, std::span<const Generator> b)
{
	Word out(a.begin(), a.end());
	out.insert(out.end(), b.begin(), b.end());
	return out;
}

namespace lyndon
{

/// w is Lyndon iff it is nonempty and strictly smaller than each of its
/// proper suffixes.
inline bool is_lyndon(std::span<const Generator> w)
{
	if (w.empty())
		return false;
	for (std::size_t i = 1; i < w.size(); ++i)
	{
		auto suffix = w.subspan(i);
		if (!std::lexicographical_compare(w.begin(), w.end(), suffix.begin(), suffix.end()))
			return false;
	}
	return true;
}

/// Standard factorization (u, v) of a Lyndon word of length >= 2: v is the
/// longest proper suffix that is itself Lyndon.
inline std::pair<Word, Word> standard_factorization(std::span<const Generator> w)
{
	if (w.size() < 2)
		throw std::invalid_argument("standard factorization needs length >= 2");
	for (std::size_t i = 1; i < w.size(); ++i)
	{
		if (is_lyndon(w.subspan(i)))
			return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)),
			        Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end())};
	}
	// unreachable: the last letter is always Lyndon
	throw std::logic_error("standard factorization failed");
}

/// Chen-Fox-Lyndon factorization w = l_1 l_2 ... l_k with l_1 >= ... >= l_k,
/// computed with Duval's algorithm.
inline std::vector<Word> factorize(std::span<const Generator> w)
{
	std::vector<Word> out;
	std::size_t i = 0;
	const std::size_t n = w.size();
	while (i < n)
	{
		std::size_t j = i + 1, k = i;
		while (j < n && !(w[j] < w[k]))
		{
			if (w[k] < w[j])
				k = i;
			else
				++k;
			++j;
		}
		while (i <= k)
		{
			out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
			                 w.begin() + static_cast<std::ptrdiff_t>(i + j - k));
			i += j - k;
		}
	}
	return out;
}

/// All Lyndon words of the given length over an ordered alphabet, in
/// lexicographic order (brute force over all words; fine at desk scale).
inline std::vector<Word> words_of_length(std::span<const Generator> alphabet, int length)
{
	std::vector<Word> out;
	if (length <= 0 || alphabet.empty())
		return out;
	std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
	Word w(static_cast<std::size_t>(length));
	while (true)
	{
		for (std::size_t i = 0; i < digits.size(); ++i)
			w[i] = alphabet[digits[i]];
		if (is_lyndon(w))
			out.push_back(w);
		std::size_t pos = digits.size();
		while (pos > 0)
		{
			--pos;
			if (++digits[pos] < alphabet.size())
				break;
			digits[pos] = 0;
			if (pos == 0)
			{
				std::sort(out.begin(), out.end());
				return out;
			}
		}
	}
}

} // namespace lyndon

} // namespace pbwq

#endif
