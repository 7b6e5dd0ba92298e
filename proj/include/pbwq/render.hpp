#ifndef PBWQ_RENDER_HPP
#define PBWQ_RENDER_HPP

#include <string>
#include <string_view>

#include "lincomb.hpp"

namespace pbwq::detail
{

/// Renders "c1<sep>k1 + c2<sep>k2 - ...". A coefficient of 1 is omitted, the
/// unit key (rendered as "1") shows only its coefficient, zero renders "0".
template <class Key, class Compare, class KeyRenderer>
std::string render_linear(const LinComb<Key, Compare> &v, KeyRenderer &&render_key, std::string_view sep)
{
	if (v.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[key, coeff] : v)
	{
		const bool negative = coeff < 0;
		const Rational mag = negative ? Rational(-coeff) : coeff;
		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		first = false;
		const std::string k = render_key(key);
		if (k == "1")
			out += to_string(mag);
		else if (mag == 1)
			out += k;
		else
		{
			out += to_string(mag);
			out += sep;
			out += k;
		}
	}
	return out;
}

} // namespace pbwq::detail

#endif
