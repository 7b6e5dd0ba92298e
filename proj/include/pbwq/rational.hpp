#ifndef PBWQ_RATIONAL_HPP
#define PBWQ_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pbwq
{

/// Exact coefficient field. Always kept in lowest terms.
using Rational = mpq_class;

/// num/den in lowest terms (gmpxx's two-argument constructor does not reduce).
inline Rational ratio(const mpz_class &num, const mpz_class &den)
{
	if (den == 0)
		throw std::domain_error("zero denominator");
	Rational r(num, den);
	r.canonicalize();
	return r;
}

/// Text form used everywhere in the library: integers render bare ("2", "-1"),
/// everything else as "p/q" in lowest terms.
inline std::string to_string(const Rational &r)
{
	return r.get_str();
}

/// Machine form: always "p/q", even for integers ("1/1", "0/1").
inline std::string to_fraction_string(const Rational &r)
{
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p", "p/q", "-p/q" (optionally with leading '+').
inline Rational parse_rational(std::string_view text)
{
	std::string s(text);
	if (!s.empty() && s.front() == '+')
		s.erase(0, 1);
	if (s.empty())
		throw std::invalid_argument("empty rational");
	for (std::size_t i = 0; i < s.size(); ++i)
	{
		const char ch = s[i];
		const bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0);
		if (!ok)
			throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
	}
	Rational r;
	if (r.set_str(s, 10) != 0 || r.get_den() == 0)
		throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
	r.canonicalize();
	return r;
}

inline mpz_class binomial(long n, long k)
{
	if (k < 0 || n < 0 || k > n)
		return 0;
	mpz_class out;
	mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return out;
}

inline mpz_class factorial(long n)
{
	mpz_class out;
	mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
	return out;
}

inline int sign_power(long e)
{
	return (e % 2 == 0) ? 1 : -1;
}

} // namespace pbwq

#endif
