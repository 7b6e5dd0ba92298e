#ifndef PBWQ_SPECIALIZE_HPP
#define PBWQ_SPECIALIZE_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "bipart.hpp"

namespace pbwq
{

/// Raw structure constants [e_i, e_j] = sum_k c_{ij}^k e_k, 0-based and dense.
struct StructureConstants
{
	int dim = 0;
	std::vector<std::string> basis_names;
	std::vector<Rational> table; // dim^3, index (i*dim + j)*dim + k

	StructureConstants() = default;

	StructureConstants(int d, std::vector<std::string> names) : dim(d), basis_names(std::move(names))
	{
		if (dim < 1)
			throw std::invalid_argument("dimension must be positive");
		if (static_cast<int>(basis_names.size()) != dim)
			throw std::invalid_argument("expected " + std::to_string(dim) + " basis names");
		table.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
	}

	[[nodiscard]] const Rational &at(int i, int j, int k) const
	{
		return table[static_cast<std::size_t>((i * dim + j) * dim + k)];
	}
	Rational &at(int i, int j, int k) { return table[static_cast<std::size_t>((i * dim + j) * dim + k)]; }

	[[nodiscard]] std::optional<int> index_of(std::string_view name) const
	{
		for (int i = 0; i < dim; ++i)
			if (basis_names[static_cast<std::size_t>(i)] == name)
				return i;
		return std::nullopt;
	}
};

/// Result of validate(). `where` holds the 1-based violating index tuple:
/// (i, j, k) for antisymmetry, (i, j, k, m) for Jacobi.
struct Validation
{
	enum class Kind
	{
		Ok,
		Antisymmetry,
		Jacobi
	};
	Kind kind = Kind::Ok;
	std::vector<int> where;

	[[nodiscard]] bool ok() const { return kind == Kind::Ok; }

	[[nodiscard]] std::string message() const
	{
		if (ok())
			return "ok";
		std::string out = kind == Kind::Antisymmetry ? "antisymmetry violation at (" : "Jacobi violation at (";
		for (std::size_t i = 0; i < where.size(); ++i)
			out += (i ? "," : "") + std::to_string(where[i]);
		return out + ")";
	}
};

inline Validation validate(const StructureConstants &sc)
{
	const int d = sc.dim;
	for (int i = 0; i < d; ++i)
		for (int j = i; j < d; ++j)
			for (int k = 0; k < d; ++k)
				if (sc.at(i, j, k) != -sc.at(j, i, k))
					return {Validation::Kind::Antisymmetry, {i + 1, j + 1, k + 1}};
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j)
			for (int k = 0; k < d; ++k)
				for (int m = 0; m < d; ++m)
				{
					Rational sum = 0;
					for (int l = 0; l < d; ++l)
						sum += sc.at(i, j, l) * sc.at(l, k, m) + sc.at(j, k, l) * sc.at(l, i, m) +
						       sc.at(k, i, l) * sc.at(l, j, m);
					if (sum != 0)
						return {Validation::Kind::Jacobi, {i + 1, j + 1, k + 1, m + 1}};
				}
	return {};
}

/// Reads the text format
///
///     dim 3
///     basis e1 e2 e3
///     1 2 3 1
///
/// Entry lines are `i j k p/q` with 1-based indices. An entry (i, j, k)
/// without an explicit (j, i, k) also sets c_{ji}^k = -c_{ij}^k. Lines
/// starting with '#' are ignored. No validation is done here.
inline StructureConstants parse_structure_constants(std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string line;
	int line_no = 0;
	std::optional<int> dim;
	std::vector<std::string> names;
	std::map<std::tuple<int, int, int>, Rational> given;
	auto fail = [&](const std::string &what) {
		throw std::invalid_argument("structure constants, line " + std::to_string(line_no) + ": " + what);
	};
	while (std::getline(in, line))
	{
		++line_no;
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		std::istringstream words(line);
		std::string head;
		if (!(words >> head))
			continue;
		if (head == "dim")
		{
			int d = 0;
			if (dim || !(words >> d) || d < 1)
				fail("bad dim line");
			dim = d;
		}
		else if (head == "basis")
		{
			if (!dim || !names.empty())
				fail("basis line must follow dim and appear once");
			std::string name;
			while (words >> name)
				names.push_back(name);
			if (static_cast<int>(names.size()) != *dim)
				fail("expected " + std::to_string(*dim) + " basis names");
		}
		else
		{
			if (!dim)
				fail("entry before dim line");
			int i = 0, j = 0, k = 0;
			std::string value;
			std::istringstream entry(line);
			if (!(entry >> i >> j >> k >> value))
				fail("expected 'i j k p/q'");
			std::string extra;
			if (entry >> extra)
				fail("trailing text");
			for (int idx : {i, j, k})
				if (idx < 1 || idx > *dim)
					fail("index out of range");
			Rational v;
			try
			{
				v = parse_rational(value);
			}
			catch (const std::invalid_argument &)
			{
				fail("bad coefficient '" + value + "'");
			}
			given[{i - 1, j - 1, k - 1}] = v;
		}
	}
	if (!dim)
		throw std::invalid_argument("structure constants: missing dim line");
	if (names.empty())
		for (int i = 1; i <= *dim; ++i)
			names.push_back("e" + std::to_string(i));

	StructureConstants sc(*dim, names);
	for (const auto &[key, v] : given)
	{
		auto [i, j, k] = key;
		sc.at(i, j, k) = v;
		if (!given.contains({j, i, k}))
			sc.at(j, i, k) = -v;
	}
	return sc;
}

inline StructureConstants load_structure_constants(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	std::stringstream buf;
	buf << in.rdbuf();
	return parse_structure_constants(buf.str());
}

namespace bundled
{

inline constexpr std::string_view abelian2 = "dim 2\nbasis e1 e2\n";

inline constexpr std::string_view heisenberg3 = "dim 3\nbasis e1 e2 e3\n1 2 3 1\n";

// [h,e] = 2e, [h,f] = -2f, [e,f] = h
inline constexpr std::string_view sl2 = "dim 3\nbasis h e f\n1 2 2 2\n1 3 3 -2\n2 3 1 1\n";

inline std::optional<StructureConstants> find(std::string_view name)
{
	if (name == "abelian2")
		return parse_structure_constants(abelian2);
	if (name == "heisenberg3")
		return parse_structure_constants(heisenberg3);
	if (name == "sl2")
		return parse_structure_constants(sl2);
	return std::nullopt;
}

} // namespace bundled

/// Polynomial on g*, i.e. element of S(g) in the chosen basis. Keys are
/// exponent vectors of length dim.
using Exponents = std::vector<int>;

/// Graded lexicographic, higher total degree first.
struct GrLexGreater
{
	bool operator()(const Exponents &a, const Exponents &b) const
	{
		int da = 0, db = 0;
		for (int e : a)
			da += e;
		for (int e : b)
			db += e;
		if (da != db)
			return da > db;
		return b < a;
	}
};

using Polynomial = LinComb<Exponents, GrLexGreater>;

inline int total_degree(const Exponents &e)
{
	int d = 0;
	for (int v : e)
		d += v;
	return d;
}

inline Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
	Polynomial out;
	for (const auto &[ea, ca] : a)
		for (const auto &[eb, cb] : b)
		{
			Exponents e = ea;
			for (std::size_t i = 0; i < e.size(); ++i)
				e[i] += eb[i];
			out.add(e, Rational(ca * cb));
		}
	return out;
}

/// Evaluation of free objects in a validated finite-dimensional Lie algebra.
class LieAlgebra
{
public:
	explicit LieAlgebra(StructureConstants sc) : sc_(std::move(sc))
	{
		const Validation v = validate(sc_);
		if (!v.ok())
			throw std::invalid_argument("invalid structure constants: " + v.message());
	}

	[[nodiscard]] int dim() const { return sc_.dim; }
	[[nodiscard]] const StructureConstants &constants() const { return sc_; }
	[[nodiscard]] const std::string &name(int i) const { return sc_.basis_names.at(static_cast<std::size_t>(i)); }

	/// [u, v] for coordinate vectors.
	[[nodiscard]] std::vector<Rational> bracket(const std::vector<Rational> &u, const std::vector<Rational> &v) const
	{
		std::vector<Rational> out(static_cast<std::size_t>(dim()), Rational(0));
		for (int i = 0; i < dim(); ++i)
		{
			if (u[static_cast<std::size_t>(i)] == 0)
				continue;
			for (int j = 0; j < dim(); ++j)
			{
				if (v[static_cast<std::size_t>(j)] == 0)
					continue;
				const Rational uv = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
				for (int k = 0; k < dim(); ++k)
					if (sc_.at(i, j, k) != 0)
						out[static_cast<std::size_t>(k)] += uv * sc_.at(i, j, k);
			}
		}
		return out;
	}

	[[nodiscard]] std::vector<Rational> basis_vector(int i) const
	{
		std::vector<Rational> out(static_cast<std::size_t>(dim()), Rational(0));
		out.at(static_cast<std::size_t>(i)) = 1;
		return out;
	}

	[[nodiscard]] Polynomial linear(const std::vector<Rational> &coords) const
	{
		Polynomial out;
		for (int k = 0; k < dim(); ++k)
		{
			Exponents e(static_cast<std::size_t>(dim()), 0);
			e[static_cast<std::size_t>(k)] = 1;
			out.add(e, coords[static_cast<std::size_t>(k)]);
		}
		return out;
	}

	[[nodiscard]] Polynomial unit() const { return Polynomial(Exponents(static_cast<std::size_t>(dim()), 0)); }

	[[nodiscard]] Polynomial variable(int i) const { return linear(basis_vector(i)); }

	/// Memo for B_p on basis monomials, guarded by a mutex.
	struct BpKey
	{
		Exponents f, g;
		int p;
		Backend backend;
		friend auto operator<=>(const BpKey &, const BpKey &) = default;
	};

	[[nodiscard]] std::optional<Polynomial> cached(const BpKey &key) const
	{
		std::lock_guard lock(mutex_);
		if (auto it = cache_.find(key); it != cache_.end())
			return it->second;
		return std::nullopt;
	}

	void remember(const BpKey &key, const Polynomial &value) const
	{
		std::lock_guard lock(mutex_);
		cache_.emplace(key, value);
	}

private:
	StructureConstants sc_;
	mutable std::mutex mutex_;
	mutable std::map<BpKey, Polynomial> cache_;
};

/// Basis index for each free generator.
using Assignment = std::map<Generator, int>;

inline std::vector<Rational> eval_lie(const LieElement &v, const Assignment &assignment, const LieAlgebra &g)
{
	auto eval = [&](auto &self, const LieTree &t) -> std::vector<Rational> {
		if (t.is_leaf())
		{
			auto it = assignment.find(t.generator());
			if (it == assignment.end())
				throw std::out_of_range("unassigned generator " + to_string(t.generator()));
			return g.basis_vector(it->second);
		}
		return g.bracket(self(self, t.left()), self(self, t.right()));
	};
	std::vector<Rational> out(static_cast<std::size_t>(g.dim()), Rational(0));
	for (const auto &[w, c] : v)
	{
		const auto part = eval(eval, *standard_bracketing(w));
		for (std::size_t k = 0; k < out.size(); ++k)
			out[k] += c * part[k];
	}
	return out;
}

inline Polynomial eval_sym(const SymElement &s, const Assignment &assignment, const LieAlgebra &g)
{
	std::map<LyndonWord, Polynomial, DegreeLexLess> factor_cache;
	Polynomial out;
	for (const auto &[mono, c] : s)
	{
		Polynomial term = g.unit();
		for (const auto &f : mono.factors())
		{
			auto it = factor_cache.find(f);
			if (it == factor_cache.end())
				it = factor_cache.emplace(f, g.linear(eval_lie(LieElement(f), assignment, g))).first;
			term = term * it->second;
			if (term.is_zero())
				break;
		}
		out.add_scaled(term, c);
	}
	return out;
}

/// B_p(f, g) for basis monomials f, g: each occurrence of a basis letter
/// becomes its own free generator (x_i for f, y_j for g), the free B_p is
/// computed and every generator is sent to its basis element.
inline Polynomial bp_concrete(const Exponents &f, const Exponents &h, int p, const LieAlgebra &g,
                              Backend backend = Backend::Formula)
{
	if (p < 0)
		throw std::invalid_argument("p must be nonnegative");
	const LieAlgebra::BpKey key{f, h, p, backend};
	if (auto hit = g.cached(key))
		return *hit;

	Assignment assignment;
	int n = 0, m = 0;
	for (int k = 0; k < g.dim(); ++k)
		for (int r = 0; r < f.at(static_cast<std::size_t>(k)); ++r)
			assignment[x(++n)] = k;
	for (int k = 0; k < g.dim(); ++k)
		for (int r = 0; r < h.at(static_cast<std::size_t>(k)); ++r)
			assignment[y(++m)] = k;

	Polynomial out;
	if (n == 0 || m == 0)
	{
		if (p == 0)
			out = Polynomial(f) * Polynomial(h);
	}
	else
	{
		SymElement free;
		if (backend == Backend::Formula)
			free = bp_formula(n, m, p);
		else
		{
			std::vector<LyndonWord> a, b;
			for (int i = 1; i <= n; ++i)
				a.emplace_back(x(i));
			for (int j = 1; j <= m; ++j)
				b.emplace_back(y(j));
			free = b_p_oracle(SymMonomial(a), SymMonomial(b), p);
		}
		out = eval_sym(free, assignment, g);
	}
	g.remember(key, out);
	return out;
}

inline Polynomial bp_concrete(const Polynomial &f, const Polynomial &h, int p, const LieAlgebra &g,
                              Backend backend = Backend::Formula)
{
	Polynomial out;
	for (const auto &[ef, cf] : f)
		for (const auto &[eh, ch] : h)
			out.add_scaled(bp_concrete(ef, eh, p, g, backend), Rational(cf * ch));
	return out;
}

/// Coefficients of f *_t h by power of t; entry p is B_p(f, h).
inline std::vector<Polynomial> star_formal(const Polynomial &f, const Polynomial &h, const LieAlgebra &g,
                                           Backend backend = Backend::Formula)
{
	int top = 0;
	for (const auto &[ef, cf] : f)
		for (const auto &[eh, ch] : h)
			top = std::max(top, total_degree(ef) + total_degree(eh));
	std::vector<Polynomial> out(static_cast<std::size_t>(top + 1));
	for (int p = 0; p <= top; ++p)
		out[static_cast<std::size_t>(p)] = bp_concrete(f, h, p, g, backend);
	while (out.size() > 1 && out.back().is_zero())
		out.pop_back();
	return out;
}

inline Polynomial star_t(const Polynomial &f, const Polynomial &h, const Rational &t, const LieAlgebra &g,
                         Backend backend = Backend::Formula)
{
	Polynomial out;
	Rational power = 1;
	for (const auto &coeff : star_formal(f, h, g, backend))
	{
		out.add_scaled(coeff, power);
		power *= t;
	}
	return out;
}

inline Polynomial partial(const Polynomial &f, int i)
{
	Polynomial out;
	for (const auto &[e, c] : f)
	{
		const int k = e.at(static_cast<std::size_t>(i));
		if (k == 0)
			continue;
		Exponents d = e;
		--d[static_cast<std::size_t>(i)];
		out.add(d, Rational(c * k));
	}
	return out;
}

/// {f, h} = sum_{i,j} [e_i, e_j] d_i f d_j h.
inline Polynomial poisson(const Polynomial &f, const Polynomial &h, const LieAlgebra &g)
{
	Polynomial out;
	for (int i = 0; i < g.dim(); ++i)
	{
		const Polynomial fi = partial(f, i);
		if (fi.is_zero())
			continue;
		for (int j = 0; j < g.dim(); ++j)
		{
			const Polynomial hj = partial(h, j);
			if (hj.is_zero())
				continue;
			const Polynomial bij = g.linear(g.bracket(g.basis_vector(i), g.basis_vector(j)));
			out += bij * fi * hj;
		}
	}
	return out;
}

/// e.g. "e1 e2 + 1/2 e3", "e1^2", "0".
inline std::string to_string(const Polynomial &f, const LieAlgebra &g)
{
	auto mono = [&](const Exponents &e) {
		std::string out;
		for (int i = 0; i < g.dim(); ++i)
		{
			const int k = e[static_cast<std::size_t>(i)];
			if (k == 0)
				continue;
			if (!out.empty())
				out += " ";
			out += g.name(i);
			if (k > 1)
				out += "^" + std::to_string(k);
		}
		return out.empty() ? std::string("1") : out;
	};
	return detail::render_linear(f, mono, " ");
}

/// Inverse of to_string(Polynomial): terms joined by '+'/'-', each an
/// optional p/q coefficient followed by basis names with optional ^k.
inline Polynomial parse_polynomial(std::string_view text, const LieAlgebra &g)
{
	std::vector<std::string> tokens;
	{
		std::string cur;
		auto flush = [&] {
			if (!cur.empty())
				tokens.push_back(cur);
			cur.clear();
		};
		for (char ch : text)
		{
			if (ch == ' ' || ch == '\t' || ch == '\n')
				flush();
			else if (ch == '+' || ch == '-')
			{
				flush();
				tokens.emplace_back(1, ch);
			}
			else
				cur += ch;
		}
		flush();
	}
	if (tokens.empty())
		throw std::invalid_argument("empty polynomial");

	Polynomial out;
	Rational sign = 1;
	std::size_t pos = 0;
	if (tokens[0] == "-" || tokens[0] == "+")
	{
		sign = tokens[0] == "-" ? -1 : 1;
		++pos;
	}
	while (true)
	{
		Rational coeff = 1;
		Exponents e(static_cast<std::size_t>(g.dim()), 0);
		bool any = false;
		if (pos < tokens.size() && !tokens[pos].empty() && (std::isdigit(static_cast<unsigned char>(tokens[pos][0]))))
		{
			coeff = parse_rational(tokens[pos]);
			++pos;
			any = true;
		}
		while (pos < tokens.size() && tokens[pos] != "+" && tokens[pos] != "-")
		{
			std::string name = tokens[pos];
			int power = 1;
			if (auto caret = name.find('^'); caret != std::string::npos)
			{
				try
				{
					std::size_t used = 0;
					power = std::stoi(name.substr(caret + 1), &used);
					if (used != name.size() - caret - 1 || power < 0)
						throw std::invalid_argument("");
				}
				catch (const std::exception &)
				{
					throw std::invalid_argument("bad exponent in '" + tokens[pos] + "'");
				}
				name.erase(caret);
			}
			auto idx = g.constants().index_of(name);
			if (!idx)
				throw std::invalid_argument("unknown basis element '" + name + "'");
			e[static_cast<std::size_t>(*idx)] += power;
			any = true;
			++pos;
		}
		if (!any)
			throw std::invalid_argument("empty term in polynomial");
		out.add(e, Rational(sign * coeff));
		if (pos == tokens.size())
			break;
		sign = tokens[pos] == "-" ? -1 : 1;
		if (++pos == tokens.size())
			throw std::invalid_argument("dangling sign in polynomial");
	}
	return out;
}

} // namespace pbwq

#endif
