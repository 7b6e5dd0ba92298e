// The star product on polynomials over the Heisenberg algebra [e1,e2] = e3,
// printed by powers of t.

#include <iostream>

#include <pbwq/specialize.hpp>

int main()
{
	const pbwq::LieAlgebra h(*pbwq::bundled::find("heisenberg3"));
	const char *pairs[][2] = {{"e1", "e2"}, {"e2", "e1"}, {"e1^2", "e2"}, {"e1^2", "e2^2"}, {"e1 e3", "e2"}};
	for (const auto &[f, g] : pairs)
	{
		std::cout << f << " * " << g << ":\n";
		const auto series = pbwq::star_formal(pbwq::parse_polynomial(f, h), pbwq::parse_polynomial(g, h), h);
		for (std::size_t p = 0; p < series.size(); ++p)
			std::cout << "  t^" << p << ": " << pbwq::to_string(series[p], h) << "\n";
	}
}
