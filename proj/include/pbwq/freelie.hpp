#ifndef PBWQ_FREELIE_HPP
#define PBWQ_FREELIE_HPP

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "free_assoc.hpp"
#include "lincomb.hpp"
#include "render.hpp"
#include "word.hpp"

namespace pbwq
{

/// Canonical Lie monomial: a Lyndon word, standing for its standard
/// bracketing. These form the Lyndon basis of the free Lie algebra.
class LyndonWord
{
public:
	explicit LyndonWord(Word letters) : letters_(std::move(letters))
	{
		if (!lyndon::is_lyndon(letters_))
			throw std::invalid_argument("not a Lyndon word: " + pbwq::to_string(letters_));
	}

	LyndonWord(Generator g) : letters_{g} {}

	/// Skips the Lyndon check; only for words known to be Lyndon.
	static LyndonWord trusted(Word letters)
	{
		LyndonWord out;
		out.letters_ = std::move(letters);
		return out;
	}

	[[nodiscard]] const Word &letters() const { return letters_; }
	[[nodiscard]] int degree() const { return static_cast<int>(letters_.size()); }
	[[nodiscard]] bool is_generator() const { return letters_.size() == 1; }
	[[nodiscard]] Generator generator() const { return letters_.front(); }

	[[nodiscard]] std::pair<LyndonWord, LyndonWord> standard_factors() const
	{
		auto [u, v] = lyndon::standard_factorization(letters_);
		return {trusted(std::move(u)), trusted(std::move(v))};
	}

	friend auto operator<=>(const LyndonWord &, const LyndonWord &) = default;
	friend bool operator==(const LyndonWord &, const LyndonWord &) = default;

private:
	LyndonWord() = default;
	Word letters_;
};

/// Orders basis monomials by degree first, then lexicographically; only
/// affects iteration and rendering order.
struct DegreeLexLess
{
	bool operator()(const LyndonWord &a, const LyndonWord &b) const
	{
		if (a.degree() != b.degree())
			return a.degree() < b.degree();
		return a < b;
	}
};

/// Element of the free Lie algebra, expanded in the Lyndon basis.
using LieElement = LinComb<LyndonWord, DegreeLexLess>;

inline LieElement lie_generator(Generator g)
{
	return LieElement(LyndonWord(g));
}

/// Arbitrary bracketing tree; not necessarily canonical.
class LieTree
{
public:
	static std::shared_ptr<const LieTree> leaf(Generator g)
	{
		auto t = std::make_shared<LieTree>();
		t->leaf_ = g;
		t->degree_ = 1;
		return t;
	}

	static std::shared_ptr<const LieTree> bracket(std::shared_ptr<const LieTree> l,
	                                              std::shared_ptr<const LieTree> r)
	{
		auto t = std::make_shared<LieTree>();
		t->degree_ = l->degree() + r->degree();
		t->left_ = std::move(l);
		t->right_ = std::move(r);
		return t;
	}

	[[nodiscard]] bool is_leaf() const { return leaf_.has_value(); }
	[[nodiscard]] Generator generator() const { return *leaf_; }
	[[nodiscard]] const LieTree &left() const { return *left_; }
	[[nodiscard]] const LieTree &right() const { return *right_; }
	[[nodiscard]] int degree() const { return degree_; }

private:
	std::optional<Generator> leaf_;
	std::shared_ptr<const LieTree> left_, right_;
	int degree_ = 0;
};

using LieTreePtr = std::shared_ptr<const LieTree>;

inline LieTreePtr standard_bracketing(const LyndonWord &w)
{
	if (w.is_generator())
		return LieTree::leaf(w.generator());
	auto [u, v] = w.standard_factors();
	return LieTree::bracket(standard_bracketing(u), standard_bracketing(v));
}

inline std::string to_string(const LieTree &t)
{
	if (t.is_leaf())
		return to_string(t.generator());
	return "[" + to_string(t.left()) + "," + to_string(t.right()) + "]";
}

/// Fully bracketed form of the standard bracketing, e.g. "[x1,[x2,y1]]".
inline std::string to_string(const LyndonWord &w)
{
	return to_string(*standard_bracketing(w));
}

inline std::string to_string(const LieElement &v)
{
	return detail::render_linear(v, [](const LyndonWord &w) { return to_string(w); }, "·");
}

LieElement bracket(const LieElement &a, const LieElement &b);

namespace detail
{

inline std::map<std::pair<Word, Word>, LieElement> &lyndon_bracket_cache()
{
	thread_local std::map<std::pair<Word, Word>, LieElement> cache;
	return cache;
}

} // namespace detail

/// [P_u, P_v] for Lyndon-basis elements, rewritten into the Lyndon basis.
///
/// For u < v the word uv is Lyndon, and (u, v) is its standard factorization
/// exactly when u is a letter or the right standard factor of u is >= v.
/// Otherwise u = (u1, u2) and Jacobi gives
/// [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]], which terminates.
/// Results are memoized per thread.
inline LieElement lyndon_bracket(const LyndonWord &u, const LyndonWord &v)
{
	if (u == v)
		return {};
	if (v < u)
		return -lyndon_bracket(v, u);
	auto &cache = detail::lyndon_bracket_cache();
	auto key = std::make_pair(u.letters(), v.letters());
	if (auto it = cache.find(key); it != cache.end())
		return it->second;

	LieElement result;
	if (u.is_generator() || !(u.standard_factors().second < v))
	{
		result = LieElement(LyndonWord::trusted(concat(u.letters(), v.letters())));
	}
	else
	{
		auto [u1, u2] = u.standard_factors();
		result = bracket(LieElement(u1), lyndon_bracket(u2, v));
		result -= bracket(LieElement(u2), lyndon_bracket(u1, v));
	}
	cache.emplace(std::move(key), result);
	return result;
}

inline LieElement bracket(const LieElement &a, const LieElement &b)
{
	LieElement out;
	for (const auto &[ka, ca] : a)
		for (const auto &[kb, cb] : b)
			out.add_scaled(lyndon_bracket(ka, kb), Rational(ca * cb));
	return out;
}

/// Lyndon-basis expansion of an arbitrary bracketing tree.
inline LieElement normalize(const LieTree &t)
{
	if (t.is_leaf())
		return lie_generator(t.generator());
	return bracket(normalize(t.left()), normalize(t.right()));
}

/// Bounds on generator indices, used for range checks.
struct Alphabet
{
	int nx = 0;
	int ny = 0;

	static Alphabet unbounded() { return {1 << 20, 1 << 20}; }

	[[nodiscard]] bool contains(Generator g) const
	{
		return g.index >= 1 && g.index <= (g.side == Side::X ? nx : ny);
	}
};

/// Injective sequence of indices into one side of the alphabet.
struct MultiIndex
{
	Side side = Side::X;
	std::vector<int> entries;

	[[nodiscard]] std::size_t size() const { return entries.size(); }

	[[nodiscard]] bool is_injective() const
	{
		std::set<int> seen(entries.begin(), entries.end());
		return seen.size() == entries.size();
	}

	friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
};

/// ad(g_{alpha(1)}) o ... o ad(g_{alpha(|alpha|)}) applied to target; the
/// last entry acts first.
inline LieElement ad_chain(const MultiIndex &alpha, const LieElement &target,
                           const Alphabet &alphabet = Alphabet::unbounded())
{
	if (!alpha.is_injective())
		throw std::invalid_argument("multi-index is not injective");
	for (int e : alpha.entries)
		if (!alphabet.contains({alpha.side, e}))
			throw std::out_of_range("multi-index entry " + std::to_string(e) + " outside alphabet");
	LieElement out = target;
	for (auto it = alpha.entries.rbegin(); it != alpha.entries.rend(); ++it)
		out = bracket(lie_generator({alpha.side, *it}), out);
	return out;
}

namespace detail
{

inline std::map<Word, AssocElement> &embed_cache()
{
	thread_local std::map<Word, AssocElement> cache;
	return cache;
}

} // namespace detail

/// Embedding of a Lyndon basis element into the free associative algebra,
/// [a, b] -> ab - ba on the standard bracketing.
inline const AssocElement &embed(const LyndonWord &w)
{
	auto &cache = detail::embed_cache();
	if (auto it = cache.find(w.letters()); it != cache.end())
		return it->second;
	AssocElement value;
	if (w.is_generator())
		value = assoc_generator(w.generator());
	else
	{
		auto [u, v] = w.standard_factors();
		value = commutator(embed(u), embed(v));
	}
	return cache.emplace(w.letters(), std::move(value)).first->second;
}

inline AssocElement embed(const LieElement &v)
{
	AssocElement out;
	for (const auto &[w, c] : v)
		out.add_scaled(embed(w), c);
	return out;
}

/// Associative expansion of a bracketing tree computed directly, without any
/// Lyndon rewriting. Used as an independent check of normalize.
inline AssocElement embed(const LieTree &t)
{
	if (t.is_leaf())
		return assoc_generator(t.generator());
	return commutator(embed(t.left()), embed(t.right()));
}

/// Degree in the generators, or -1 when v is zero or not homogeneous.
inline int homogeneous_degree(const LieElement &v)
{
	int d = -1;
	for (const auto &[w, c] : v)
	{
		if (d == -1)
			d = w.degree();
		else if (d != w.degree())
			return -1;
	}
	return d;
}

// ---------------------------------------------------------------------------
// Parsing: monomial := generator | '[' monomial ',' monomial ']'
//          element  := ['-'] term (('+'|'-') term)*
//          term     := [rational '·'] monomial

namespace detail
{

class Cursor
{
public:
	explicit Cursor(std::string_view s) : s_(s) {}

	void skip_ws()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	[[nodiscard]] bool done()
	{
		skip_ws();
		return pos_ >= s_.size();
	}

	[[nodiscard]] char peek()
	{
		skip_ws();
		return pos_ < s_.size() ? s_[pos_] : '\0';
	}

	bool consume(std::string_view tok)
	{
		skip_ws();
		if (s_.substr(pos_, tok.size()) == tok)
		{
			pos_ += tok.size();
			return true;
		}
		return false;
	}

	void expect(std::string_view tok)
	{
		if (!consume(tok))
			fail("expected '" + std::string(tok) + "'");
	}

	std::string_view take_while(auto pred)
	{
		skip_ws();
		const std::size_t start = pos_;
		while (pos_ < s_.size() && pred(s_[pos_]))
			++pos_;
		return s_.substr(start, pos_ - start);
	}

	[[noreturn]] void fail(const std::string &what) const
	{
		throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what +
		                            " in '" + std::string(s_) + "'");
	}

	[[nodiscard]] std::size_t position() const { return pos_; }
	void rewind(std::size_t p) { pos_ = p; }

private:
	std::string_view s_;
	std::size_t pos_ = 0;
};

inline bool is_ident_char(char c)
{
	return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline LieTreePtr parse_tree(Cursor &cur)
{
	if (cur.consume("["))
	{
		auto l = parse_tree(cur);
		cur.expect(",");
		auto r = parse_tree(cur);
		cur.expect("]");
		return LieTree::bracket(std::move(l), std::move(r));
	}
	auto tok = cur.take_while(is_ident_char);
	if (tok.empty())
		cur.fail("expected generator or '['");
	return LieTree::leaf(parse_generator(tok));
}

/// Optional "p/q·" coefficient prefix; returns 1 when absent.
inline Rational parse_coefficient_prefix(Cursor &cur, std::string_view sep)
{
	const std::size_t start = cur.position();
	auto tok = cur.take_while([](char c) { return (c >= '0' && c <= '9') || c == '/'; });
	if (tok.empty())
		return 1;
	Rational c = parse_rational(tok);
	if (cur.consume(sep))
		return c;
	// a bare rational is a constant term; the caller decides whether that is legal
	cur.rewind(start);
	return 1;
}

} // namespace detail

inline LieTreePtr parse_lie_tree(std::string_view text)
{
	detail::Cursor cur(text);
	auto t = detail::parse_tree(cur);
	if (!cur.done())
		cur.fail("trailing input");
	return t;
}

/// Parses the rendering produced by to_string(LieElement); the monomials may
/// be arbitrary bracketings, the result is normalized.
inline LieElement parse_lie_element(std::string_view text)
{
	detail::Cursor cur(text);
	if (cur.consume("0") && cur.done())
		return {};
	LieElement out;
	cur.rewind(0);
	Rational sign = 1;
	if (cur.consume("-"))
		sign = -1;
	while (true)
	{
		Rational c = detail::parse_coefficient_prefix(cur, "·");
		out.add_scaled(normalize(*detail::parse_tree(cur)), Rational(sign * c));
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
