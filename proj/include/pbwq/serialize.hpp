#ifndef PBWQ_SERIALIZE_HPP
#define PBWQ_SERIALIZE_HPP

// Machine-readable form of results.
//
//   LieElement  {"kind":"lie",  "terms":[{"coeff":"1/2","monomial":"[x1,y1]"}, ...]}
//   SymElement  {"kind":"sym",  "terms":[{"coeff":"1/2","monomial":["x2","[x1,y1]"]}, ...]}
//   Polynomial  {"kind":"poly", "basis":["e1","e2","e3"],
//                "terms":[{"coeff":"1/2","exponents":[0,0,1]}, ...]}
//
// Coefficients are always "p/q" in lowest terms (q = 1 included). Terms come
// in the same order as the text rendering; monomials of S(g) list their
// factors in canonical order.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "specialize.hpp"

namespace pbwq
{

using Json = nlohmann::ordered_json;

inline Json to_json(const LieElement &v)
{
	Json terms = Json::array();
	for (const auto &[w, c] : v)
		terms.push_back({{"coeff", to_fraction_string(c)}, {"monomial", to_string(w)}});
	return {{"kind", "lie"}, {"terms", terms}};
}

inline Json to_json(const SymElement &v)
{
	Json terms = Json::array();
	for (const auto &[m, c] : v)
	{
		Json factors = Json::array();
		for (const auto &f : m.factors())
			factors.push_back(to_string(f));
		terms.push_back({{"coeff", to_fraction_string(c)}, {"monomial", factors}});
	}
	return {{"kind", "sym"}, {"terms", terms}};
}

inline Json to_json(const Polynomial &f, const LieAlgebra &g)
{
	Json terms = Json::array();
	for (const auto &[e, c] : f)
		terms.push_back({{"coeff", to_fraction_string(c)}, {"exponents", e}});
	return {{"kind", "poly"}, {"basis", g.constants().basis_names}, {"terms", terms}};
}

namespace detail
{

inline const Json &terms_of(const Json &j, const char *kind)
{
	if (!j.is_object() || j.value("kind", "") != kind || !j.contains("terms") || !j["terms"].is_array())
		throw std::invalid_argument(std::string("expected a '") + kind + "' object");
	return j["terms"];
}

inline LieElement single_lie_monomial(const std::string &text)
{
	const LieElement v = normalize(*parse_lie_tree(text));
	if (v.size() != 1 || v.begin()->second != 1)
		throw std::invalid_argument("not a basis monomial: " + text);
	return v;
}

} // namespace detail

inline LieElement lie_from_json(const Json &j)
{
	LieElement out;
	for (const auto &t : detail::terms_of(j, "lie"))
		out.add(detail::single_lie_monomial(t.at("monomial").get<std::string>()).begin()->first,
		        parse_rational(t.at("coeff").get<std::string>()));
	return out;
}

inline SymElement sym_from_json(const Json &j)
{
	SymElement out;
	for (const auto &t : detail::terms_of(j, "sym"))
	{
		std::vector<LyndonWord> factors;
		for (const auto &f : t.at("monomial"))
			factors.push_back(detail::single_lie_monomial(f.get<std::string>()).begin()->first);
		out.add(SymMonomial(std::move(factors)), parse_rational(t.at("coeff").get<std::string>()));
	}
	return out;
}

inline Polynomial poly_from_json(const Json &j, const LieAlgebra &g)
{
	if (j.contains("basis") && j["basis"].get<std::vector<std::string>>() != g.constants().basis_names)
		throw std::invalid_argument("basis does not match the algebra");
	Polynomial out;
	for (const auto &t : detail::terms_of(j, "poly"))
	{
		auto e = t.at("exponents").get<Exponents>();
		if (static_cast<int>(e.size()) != g.dim())
			throw std::invalid_argument("exponent vector has the wrong length");
		out.add(e, parse_rational(t.at("coeff").get<std::string>()));
	}
	return out;
}

} // namespace pbwq

#endif
