#ifndef PBWQ_LINCOMB_HPP
#define PBWQ_LINCOMB_HPP

#include <functional>
#include <map>
#include <utility>

#include "rational.hpp"

namespace pbwq
{

/// Finite Q-linear combination of basis keys.
///
/// Zero coefficients are never stored, so the empty map is the unique zero and
/// equality is plain structural equality of the maps. Iteration order is the
/// key order, which keeps every rendering deterministic.
template <class Key, class Compare = std::less<Key>>
class LinComb
{
public:
	using key_type = Key;
	using map_type = std::map<Key, Rational, Compare>;
	using const_iterator = typename map_type::const_iterator;

	LinComb() = default;

	explicit LinComb(Key key, const Rational &coeff = 1)
	{
		add(std::move(key), coeff);
	}

	void add(const Key &key, const Rational &coeff)
	{
		if (coeff == 0)
			return;
		auto [it, inserted] = terms_.try_emplace(key, coeff);
		if (!inserted)
		{
			it->second += coeff;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	void add(Key &&key, const Rational &coeff)
	{
		if (coeff == 0)
			return;
		auto it = terms_.find(key);
		if (it == terms_.end())
		{
			terms_.emplace(std::move(key), coeff);
			return;
		}
		it->second += coeff;
		if (it->second == 0)
			terms_.erase(it);
	}

	[[nodiscard]] Rational coefficient(const Key &key) const
	{
		auto it = terms_.find(key);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	[[nodiscard]] bool is_zero() const { return terms_.empty(); }
	[[nodiscard]] std::size_t size() const { return terms_.size(); }
	[[nodiscard]] const map_type &terms() const { return terms_; }

	const_iterator begin() const { return terms_.begin(); }
	const_iterator end() const { return terms_.end(); }

	LinComb &operator+=(const LinComb &other)
	{
		for (const auto &[k, c] : other.terms_)
			add(k, c);
		return *this;
	}

	LinComb &operator-=(const LinComb &other)
	{
		for (const auto &[k, c] : other.terms_)
			add(k, -c);
		return *this;
	}

	LinComb &operator*=(const Rational &s)
	{
		if (s == 0)
		{
			terms_.clear();
			return *this;
		}
		for (auto &[k, c] : terms_)
			c *= s;
		return *this;
	}

	/// Adds s * other.
	void add_scaled(const LinComb &other, const Rational &s)
	{
		if (s == 0)
			return;
		for (const auto &[k, c] : other.terms_)
			add(k, Rational(c * s));
	}

	friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
	friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
	friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
	friend LinComb operator*(LinComb a, const Rational &s) { return a *= s; }
	friend LinComb operator*(const Rational &s, LinComb a) { return a *= s; }

	friend bool operator==(const LinComb &, const LinComb &) = default;

private:
	map_type terms_;
};

} // namespace pbwq

#endif
