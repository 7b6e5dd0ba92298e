// Prints B_p(x1...xn, y1...ym) for every p, computed by the bipartition
// formula and checked against the PBW oracle.
//
//   bp_table [n] [m]

#include <cstdlib>
#include <iostream>

#include <pbwq/bipart.hpp>

int main(int argc, char **argv)
{
	const int n = argc > 1 ? std::atoi(argv[1]) : 2;
	const int m = argc > 2 ? std::atoi(argv[2]) : 2;
	if (n < 1 || m < 1 || n + m > 6)
	{
		std::cerr << "need n, m >= 1 and n + m <= 6\n";
		return 2;
	}

	std::vector<pbwq::LyndonWord> xs, ys;
	for (int i = 1; i <= n; ++i)
		xs.emplace_back(pbwq::x(i));
	for (int j = 1; j <= m; ++j)
		ys.emplace_back(pbwq::y(j));

	bool ok = true;
	for (int p = 0; p < n + m; ++p)
	{
		const auto &formula = pbwq::bp_formula(n, m, p);
		const bool same = formula == pbwq::b_p_oracle(pbwq::SymMonomial(xs), pbwq::SymMonomial(ys), p);
		ok = ok && same;
		std::cout << "B_" << p << " = " << pbwq::to_string(formula) << (same ? "" : "   [oracle differs]") << "\n";
	}
	return ok ? 0 : 1;
}
