#ifndef PBWQ_VERIFY_HPP
#define PBWQ_VERIFY_HPP

#include <string>
#include <vector>

#include "bidiff.hpp"
#include "specialize.hpp"

namespace pbwq::verify
{

/// One checked instance. `detail` holds the nonzero residual on failure.
struct Instance
{
	std::string key;
	bool pass = true;
	std::string detail;
};

struct Report
{
	std::string suite;
	std::vector<Instance> instances;

	[[nodiscard]] int failures() const
	{
		int n = 0;
		for (const auto &i : instances)
			n += i.pass ? 0 : 1;
		return n;
	}
	[[nodiscard]] bool passed() const { return failures() == 0; }
	[[nodiscard]] const Instance *first_failure() const
	{
		for (const auto &i : instances)
			if (!i.pass)
				return &i;
		return nullptr;
	}

	void expect_zero(std::string key, const SymElement &residual)
	{
		instances.push_back({std::move(key), residual.is_zero(), residual.is_zero() ? "" : to_string(residual)});
	}
	void expect_equal(std::string key, const SymElement &a, const SymElement &b)
	{
		const SymElement diff = a - b;
		instances.push_back({std::move(key), diff.is_zero(), diff.is_zero() ? "" : "difference " + to_string(diff)});
	}
};

inline SymMonomial x_monomial(int n)
{
	std::vector<LyndonWord> f;
	for (int i = 1; i <= n; ++i)
		f.emplace_back(x(i));
	return SymMonomial(std::move(f));
}

inline SymMonomial y_monomial(int m)
{
	std::vector<LyndonWord> f;
	for (int j = 1; j <= m; ++j)
		f.emplace_back(y(j));
	return SymMonomial(std::move(f));
}

/// Closed formula against the PBW oracle for n, m >= 1, n + m <= max_total,
/// 0 <= p <= n + m - 1.
inline Report thm11(int max_total = 5)
{
	Report r{"thm11", {}};
	for (int total = 2; total <= max_total; ++total)
		for (int n = 1; n < total; ++n)
		{
			const int m = total - n;
			for (int p = 0; p < total; ++p)
				r.expect_equal("n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + std::to_string(p),
				               bp_formula(n, m, p), b_p_oracle(x_monomial(n), y_monomial(m), p));
		}
	return r;
}

/// w(X, Y) against the Lie projection of the Campbell-Hausdorff coefficient.
inline Report dynkin(int max_total = 5)
{
	Report r{"dynkin", {}};
	for (int total = 2; total <= max_total; ++total)
		for (int n = 1; n < total; ++n)
		{
			const int m = total - n;
			const ChLog z = ch_log(n, m, total);
			const LieElement lhs = w(SubsetPair{detail::low_bits(n), detail::low_bits(m)});
			const LieElement rhs = lie_project(z.coefficient(z.full_tag()));
			r.expect_equal("n=" + std::to_string(n) + " m=" + std::to_string(m), sym_from(lhs), sym_from(rhs));
		}
	return r;
}

/// B_1(x, y) = 1/2 sum_{i,j} x_1..^x_i..x_n y_1..^y_j..y_m [x_i, y_j], built
/// directly from the generators.
inline SymElement b1_double_sum(int n, int m)
{
	SymElement out;
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= m; ++j)
		{
			SymElement term = sym_from(bracket(lie_generator(x(i)), lie_generator(y(j))));
			for (int k = 1; k <= n; ++k)
				if (k != i)
					term = term * sym_from(SymMonomial{x(k)});
			for (int l = 1; l <= m; ++l)
				if (l != j)
					term = term * sym_from(SymMonomial{y(l)});
			out.add_scaled(term, ratio(1, 2));
		}
	return out;
}

/// B_0 = product and B_1 = half the Poisson double sum, under both backends.
inline Report eq4(int max_total = 5)
{
	Report r{"eq4", {}};
	for (int total = 2; total <= max_total; ++total)
		for (int n = 1; n < total; ++n)
		{
			const int m = total - n;
			const SymMonomial a = x_monomial(n), b = y_monomial(m);
			for (auto backend : {Backend::Formula, Backend::Oracle})
			{
				const std::string key =
				    "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + to_string(backend);
				r.expect_equal(key + " p=0", bp(a, b, 0, backend), sym_from(a * b));
				r.expect_equal(key + " p=1", bp(a, b, 1, backend), b1_double_sum(n, m));
			}
		}
	return r;
}

inline Report lemma20(int max_pq = 3, int max_r = 2, const Caps &caps = {})
{
	Report r{"lemma20", {}};
	for (int p = 1; p <= max_pq; ++p)
		for (int q = 0; p + q <= max_pq; ++q)
			for (int rr = 1; rr <= max_r; ++rr)
				for (auto backend : {Backend::Formula, Backend::Oracle})
					for (auto order : {ArgumentOrder::XFirst, ArgumentOrder::XSecond})
						r.expect_zero("p=" + std::to_string(p) + " q=" + std::to_string(q) + " r=" + std::to_string(rr) +
						                  " " + to_string(backend) +
						                  (order == ArgumentOrder::XFirst ? " x-first" : " x-second"),
						              lemma20_residual(p, q, rr, backend, order, caps));
	return r;
}

inline Report lemma21(int qmax = 6, int mmax = 6)
{
	Report r{"lemma21", {}};
	for (int q = 1; q <= qmax; ++q)
		for (int m = 0; m <= mmax; ++m)
		{
			const Rational v = lemma21_residual(q, m);
			r.instances.push_back({"q=" + std::to_string(q) + " m=" + std::to_string(m), v == 0,
			                       v == 0 ? "" : to_string(v)});
		}
	return r;
}

/// Fixed arguments a used for the differential-operator checks, up to the
/// given polynomial degree.
inline std::vector<SymMonomial> fixed_arguments(int max_degree)
{
	const std::vector<SymMonomial> all{SymMonomial{},
	                                   SymMonomial{y(1)},
	                                   SymMonomial({LyndonWord(Word{y(1), y(2)})}),
	                                   SymMonomial{y(1), y(1)},
	                                   SymMonomial{y(1), y(2)}};
	std::vector<SymMonomial> out;
	for (const auto &a : all)
		if (a.degree() <= max_degree)
			out.push_back(a);
	return out;
}

/// The alternating-sum criterion for F = B_p(a, -) and B_p(-, a) on the
/// generators x_1..x_{p+q}, plus the probe that B_1(y1, -) is not of lower
/// order.
inline Report thm22(int pmax = 2, int qmin = 0, int qmax = 1, int max_deg_a = 2, const Caps &caps = {})
{
	Report r{"thm22", {}};
	for (int p = 1; p <= pmax; ++p)
		for (int q = qmin; q <= qmax; ++q)
			for (const auto &a : fixed_arguments(max_deg_a))
			{
				check_cap(a.weight() + p + q, caps);
				std::vector<LieElement> gens;
				for (int i = 1; i <= p + q; ++i)
					gens.push_back(lie_generator(x(i)));
				for (const auto &F : {bp_left(p, a), bp_right(p, a)})
					r.expect_zero(F.name + " p=" + std::to_string(p) + " q=" + std::to_string(q),
					              diff_op_residual(F, p, q, gens));
			}
	const SymElement probe = alternating_sum(bp_left(1, SymMonomial{y(1)}), {lie_generator(x(1))});
	r.instances.push_back({"probe: B_1(y1,-) is not of order 0", !probe.is_zero(),
	                       probe.is_zero() ? "alternating sum on x1 vanished" : ""});
	return r;
}

/// All monomials of S(g) of polynomial degree <= max_degree in the given
/// letters.
inline std::vector<SymMonomial> monomials_up_to(const std::vector<LyndonWord> &letters, int max_degree)
{
	std::vector<SymMonomial> out{SymMonomial{}};
	std::vector<std::pair<std::vector<LyndonWord>, std::size_t>> frontier{{{}, 0}};
	for (int d = 1; d <= max_degree; ++d)
	{
		std::vector<std::pair<std::vector<LyndonWord>, std::size_t>> next;
		for (const auto &[factors, from] : frontier)
			for (std::size_t i = from; i < letters.size(); ++i)
			{
				auto grown = factors;
				grown.push_back(letters[i]);
				out.emplace_back(grown);
				next.emplace_back(std::move(grown), i);
			}
		frontier = std::move(next);
	}
	return out;
}

/// Associativity and unitality of the transported product on triples of
/// monomials in x1, x2, y1 of total degree <= max_total, and B_0 = product.
inline Report assoc(int max_total = 6)
{
	Report r{"assoc", {}};
	const auto ms = monomials_up_to({LyndonWord(x(1)), LyndonWord(x(2)), LyndonWord(y(1))}, max_total);
	for (const auto &a : ms)
	{
		const SymElement A = sym_from(a);
		r.expect_equal("unit " + to_string(a), b_oracle(sym_unit(), A), A);
		r.expect_equal("unit' " + to_string(a), b_oracle(A, sym_unit()), A);
		for (const auto &b : ms)
		{
			if (a.degree() + b.degree() > max_total)
				continue;
			const SymElement B = sym_from(b);
			const SymElement AB = b_oracle(A, B);
			if (a.degree() + b.degree() <= 4)
				r.expect_equal("B_0 " + to_string(a) + " , " + to_string(b), b_p_oracle(a, b, 0), sym_from(a * b));
			for (const auto &c : ms)
			{
				if (a.degree() + b.degree() + c.degree() > max_total || a.is_unit() || b.is_unit() || c.is_unit())
					continue;
				const SymElement C = sym_from(c);
				r.expect_equal(to_string(a) + " , " + to_string(b) + " , " + to_string(c), b_oracle(AB, C),
				               b_oracle(A, b_oracle(B, C)));
			}
		}
	}
	return r;
}

/// Basis monomials of total degree exactly d in `dim` variables.
inline std::vector<Exponents> basis_monomials(int dim, int d)
{
	std::vector<Exponents> out;
	Exponents e(static_cast<std::size_t>(dim), 0);
	auto rec = [&](auto &self, int i, int left) -> void {
		if (i == dim - 1)
		{
			e[static_cast<std::size_t>(i)] = left;
			out.push_back(e);
			return;
		}
		for (int k = left; k >= 0; --k)
		{
			e[static_cast<std::size_t>(i)] = k;
			self(self, i + 1, left - k);
		}
	};
	rec(rec, 0, d);
	return out;
}

/// Coefficient of t in the polynomial (in t) through the points (t_i, v_i).
inline Polynomial linear_coefficient(const std::vector<Rational> &ts, const std::vector<Polynomial> &values)
{
	Polynomial out;
	for (std::size_t i = 0; i < ts.size(); ++i)
	{
		// prod_{j != i} (t - t_j) / (t_i - t_j); keep coefficients of t^0, t^1
		Rational c0 = 1, c1 = 0, denom = 1;
		for (std::size_t j = 0; j < ts.size(); ++j)
		{
			if (j == i)
				continue;
			c1 = c0 - ts[j] * c1;
			c0 = -ts[j] * c0;
			denom *= ts[i] - ts[j];
		}
		out.add_scaled(values[i], Rational(c1 / denom));
	}
	return out;
}

/// Associativity and unitality of *_t on the given algebra for triples of
/// total degree <= max_total and t in {0, 1, 1/2}; the t-coefficient of the
/// commutator equals the Poisson bracket for pairs of total degree <=
/// poisson_total, read off by interpolation and from the formal series.
inline Report star(const LieAlgebra &g, const std::string &name, int max_total = 5, int poisson_total = 3)
{
	Report r{"star " + name, {}};
	const std::vector<Rational> ts{Rational(0), Rational(1), ratio(1, 2)};
	auto label = [&](const Exponents &e) { return to_string(Polynomial(e), g); };
	for (int da = 0; da <= max_total; ++da)
		for (const auto &ea : basis_monomials(g.dim(), da))
		{
			const Polynomial A(ea);
			for (const auto &t : ts)
			{
				const std::string tk = " t=" + to_string(t);
				r.instances.push_back({"unit " + label(ea) + tk,
				                       star_t(g.unit(), A, t, g) == A && star_t(A, g.unit(), t, g) == A, ""});
			}
			for (int db = 1; da >= 1 && da + db <= max_total; ++db)
				for (const auto &eb : basis_monomials(g.dim(), db))
					for (int dc = 1; da + db + dc <= max_total; ++dc)
						for (const auto &ec : basis_monomials(g.dim(), dc))
						{
							const Polynomial B(eb), C(ec);
							for (const auto &t : ts)
							{
								const Polynomial diff =
								    star_t(star_t(A, B, t, g), C, t, g) - star_t(A, star_t(B, C, t, g), t, g);
								r.instances.push_back({label(ea) + " , " + label(eb) + " , " + label(ec) +
								                           " t=" + to_string(t),
								                       diff.is_zero(), diff.is_zero() ? "" : to_string(diff, g)});
							}
						}
		}
	for (int da = 1; da < poisson_total; ++da)
		for (int db = 1; da + db <= poisson_total; ++db)
			for (const auto &ea : basis_monomials(g.dim(), da))
				for (const auto &eb : basis_monomials(g.dim(), db))
				{
					const Polynomial A(ea), B(eb);
					std::vector<Rational> points;
					std::vector<Polynomial> values;
					for (int k = 0; k <= da + db; ++k)
					{
						points.emplace_back(k);
						values.push_back(star_t(A, B, k, g) - star_t(B, A, k, g));
					}
					const Polynomial bracket_part = poisson(A, B, g);
					const Polynomial interpolated = linear_coefficient(points, values);
					const auto fab = star_formal(A, B, g), fba = star_formal(B, A, g);
					const Polynomial formal = (fab.size() > 1 ? fab[1] : Polynomial{}) - (fba.size() > 1 ? fba[1] : Polynomial{});
					const bool ok = interpolated == bracket_part && formal == bracket_part;
					r.instances.push_back({"commutator " + label(ea) + " , " + label(eb), ok,
					                       ok ? "" : "t-coefficient " + to_string(interpolated, g) + " vs " +
					                                     to_string(bracket_part, g)});
				}
	return r;
}

} // namespace pbwq::verify

#endif
