#ifndef PBWQ_FREE_ASSOC_HPP
#define PBWQ_FREE_ASSOC_HPP

#include <string>

#include "lincomb.hpp"
#include "render.hpp"
#include "word.hpp"

namespace pbwq
{

/// Element of the free associative algebra on the generators, which is the
/// enveloping algebra of the free Lie algebra. Words are a basis, the empty
/// word is the unit.
using AssocElement = LinComb<Word>;

inline AssocElement assoc_unit()
{
	return AssocElement(Word{});
}

inline AssocElement assoc_generator(Generator g)
{
	return AssocElement(Word{g});
}

inline AssocElement operator*(const AssocElement &a, const AssocElement &b)
{
	AssocElement out;
	for (const auto &[wa, ca] : a)
		for (const auto &[wb, cb] : b)
			out.add(concat(wa, wb), Rational(ca * cb));
	return out;
}

inline AssocElement commutator(const AssocElement &a, const AssocElement &b)
{
	return a * b - b * a;
}

/// Words render as space-separated letters, e.g. "1/2·x1 y1 - 1/2·y1 x1".
inline std::string to_string(const AssocElement &u)
{
	return detail::render_linear(u, [](const Word &w) { return to_string(w); }, "·");
}

} // namespace pbwq

#endif
