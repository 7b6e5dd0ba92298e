#ifndef PBWQ_BIDIFF_HPP
#define PBWQ_BIDIFF_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipart.hpp"

namespace pbwq
{

/// Memoized table of the rationals c_k(q):
///   c_0(q) = 1,  c_k(q) = 1 - sum_{l<k} c_l(q) binom(q+k, k-l).
class CoeffTable
{
public:
	const Rational &operator()(int k, int q)
	{
		if (k < 0 || q < 0)
			throw std::invalid_argument("c_k(q) needs k, q >= 0");
		if (auto it = memo_.find({k, q}); it != memo_.end())
			return it->second;
		Rational v = 1;
		for (int l = 0; l < k; ++l)
			v -= (*this)(l, q) * Rational(binomial(q + k, k - l));
		return memo_.emplace(std::make_pair(k, q), v).first->second;
	}

private:
	std::map<std::pair<int, int>, Rational> memo_;
};

inline Rational c(int k, int q)
{
	thread_local CoeffTable table;
	return table(k, q);
}

/// (-1)^m + sum_{t=1}^{q} binom(m+q, m+t) (-1)^t c_m(t); zero for q >= 1.
inline Rational lemma21_residual(int q, int m)
{
	if (q < 1 || m < 0)
		throw std::invalid_argument("need q >= 1 and m >= 0");
	Rational sum = sign_power(m);
	for (int t = 1; t <= q; ++t)
		sum += Rational(binomial(m + q, m + t)) * sign_power(t) * c(m, t);
	return sum;
}

/// Size limits for the residual computations.
struct Caps
{
	int max_total_degree = 7;
};

struct CapExceeded : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

inline void check_cap(int total_degree, const Caps &caps)
{
	if (total_degree > caps.max_total_degree)
		throw CapExceeded("total degree " + std::to_string(total_degree) + " exceeds cap " +
		                  std::to_string(caps.max_total_degree));
}

/// Which argument of B_p carries the x's.
enum class ArgumentOrder
{
	XFirst,
	XSecond
};

namespace detail
{

inline SymMonomial monomial_of(Side side, const std::vector<int> &indices)
{
	std::vector<LyndonWord> f;
	for (int i : indices)
		f.emplace_back(Generator{side, i});
	return SymMonomial(std::move(f));
}

/// Calls fn(S, S^c) for every subset S of {1..count} given as index lists.
template <class Fn>
void for_each_subset(int count, Fn &&fn)
{
	for (std::uint32_t mask = 0; mask < (1u << count); ++mask)
	{
		std::vector<int> in, out;
		for (int i = 1; i <= count; ++i)
			(mask & (1u << (i - 1)) ? in : out).push_back(i);
		fn(static_cast<const std::vector<int> &>(in), static_cast<const std::vector<int> &>(out));
	}
}

} // namespace detail

/// Left side minus right side of the reduction identity
///   B_p(x_1..x_{p+q}, y_1..y_r)
///     = sum_{k<r} c_k(q) sum_{#S=q+k} x_S B_p(x_{S^c}, y_1..y_r),
/// or of its mirror with the arguments of B_p swapped.
inline SymElement lemma20_residual(int p, int q, int r, Backend backend = Backend::Formula,
                                   ArgumentOrder order = ArgumentOrder::XFirst, const Caps &caps = {})
{
	if (p < 1 || q < 0 || r < 1)
		throw std::invalid_argument("need p >= 1, q >= 0, r >= 1");
	check_cap(p + q + r, caps);
	const int n = p + q;
	const SymMonomial ymono = detail::monomial_of(Side::Y, [&] {
		std::vector<int> v;
		for (int j = 1; j <= r; ++j)
			v.push_back(j);
		return v;
	}());
	auto b = [&](const SymMonomial &xpart) {
		return order == ArgumentOrder::XFirst ? bp(xpart, ymono, p, backend) : bp(ymono, xpart, p, backend);
	};

	std::vector<int> all;
	for (int i = 1; i <= n; ++i)
		all.push_back(i);
	SymElement residual = b(detail::monomial_of(Side::X, all));
	detail::for_each_subset(n, [&](const std::vector<int> &S, const std::vector<int> &Sc) {
		const int k = static_cast<int>(S.size()) - q;
		if (k < 0 || k > r - 1)
			return;
		const SymElement term = sym_from(detail::monomial_of(Side::X, S)) * b(detail::monomial_of(Side::X, Sc));
		residual.add_scaled(term, -c(k, q));
	});
	return residual;
}

/// A linear endomorphism of S(g), given by its action on monomials.
struct Endomorphism
{
	std::string name;
	std::function<SymElement(const SymMonomial &)> on_monomial;

	[[nodiscard]] SymElement operator()(const SymElement &v) const
	{
		SymElement out;
		for (const auto &[m, c] : v)
			out.add_scaled(on_monomial(m), c);
		return out;
	}
};

/// F(u) = B_p(a, u).
inline Endomorphism bp_left(int p, const SymMonomial &a, Backend backend = Backend::Formula)
{
	return {"B_" + std::to_string(p) + "(" + to_string(a) + ",-)",
	        [p, a, backend](const SymMonomial &u) { return bp(a, u, p, backend); }};
}

/// F(u) = B_p(u, a).
inline Endomorphism bp_right(int p, const SymMonomial &a, Backend backend = Backend::Formula)
{
	return {"B_" + std::to_string(p) + "(-," + to_string(a) + ")",
	        [p, a, backend](const SymMonomial &u) { return bp(u, a, p, backend); }};
}

/// sum over S of {1..N} of (-1)^{#S} x_{S^c} F(x_S), N = gens.size().
/// Vanishing for every choice of N = k + 1 elements of a generating set is
/// the condition for F to be a differential operator of order <= k.
inline SymElement alternating_sum(const Endomorphism &F, const std::vector<LieElement> &gens)
{
	if (gens.size() > 20)
		throw std::invalid_argument("too many arguments");
	SymElement out;
	detail::for_each_subset(static_cast<int>(gens.size()), [&](const std::vector<int> &S, const std::vector<int> &Sc) {
		SymElement xs = sym_unit(), xc = sym_unit();
		for (int i : S)
			xs = xs * sym_from(gens[static_cast<std::size_t>(i - 1)]);
		for (int i : Sc)
			xc = xc * sym_from(gens[static_cast<std::size_t>(i - 1)]);
		out.add_scaled(xc * F(xs), Rational(sign_power(static_cast<long>(S.size()))));
	});
	return out;
}

/// The order-<= p test on p + q generators; gens must have exactly p + q
/// entries.
inline SymElement diff_op_residual(const Endomorphism &F, int p, int q, const std::vector<LieElement> &gens)
{
	if (p < 0 || q < 0)
		throw std::invalid_argument("need p, q >= 0");
	if (static_cast<int>(gens.size()) != p + q)
		throw std::invalid_argument("expected " + std::to_string(p + q) + " generators, got " +
		                            std::to_string(gens.size()));
	return alternating_sum(F, gens);
}

} // namespace pbwq

#endif
