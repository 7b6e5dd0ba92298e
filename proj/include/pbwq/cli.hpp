#ifndef PBWQ_CLI_HPP
#define PBWQ_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 verification failure or
// DIFFER verdict, 2 usage error or cap exceeded.

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "serialize.hpp"
#include "verify.hpp"

namespace pbwq::cli
{

enum ExitCode
{
	Ok = 0,
	Failure = 1,
	Usage = 2
};

/// Bad parameters detected after parsing; reported with exit code 2.
struct UsageError : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

namespace detail
{

struct Common
{
	std::string format = "text";
	int max_total_degree = Caps{}.max_total_degree;

	[[nodiscard]] bool machine() const { return format == "machine"; }
	[[nodiscard]] Caps caps() const { return Caps{max_total_degree}; }
};

inline void add_common(CLI::App *cmd, Common &c)
{
	cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
	cmd->add_option("--max-total-degree", c.max_total_degree, "Cap on the total degree of any computation")
	    ->check(CLI::PositiveNumber);
}

inline void require_cap(int total, const Common &c)
{
	try
	{
		check_cap(total, c.caps());
	}
	catch (const CapExceeded &e)
	{
		throw UsageError(e.what());
	}
}

inline Rational parse_t(const std::string &text)
{
	try
	{
		return parse_rational(text);
	}
	catch (const std::exception &)
	{
		throw UsageError("bad value for --t: '" + text + "'");
	}
}

inline LieAlgebra load_algebra(const std::string &spec)
{
	if (auto sc = bundled::find(spec))
		return LieAlgebra(*sc);
	if (!std::filesystem::exists(spec))
		throw UsageError("unknown algebra '" + spec + "' (bundled: abelian2, heisenberg3, sl2)");
	try
	{
		return LieAlgebra(load_structure_constants(spec));
	}
	catch (const std::exception &e)
	{
		throw UsageError(e.what());
	}
}

inline int print_report(const verify::Report &r, bool machine, std::ostream &out)
{
	if (machine)
	{
		Json instances = Json::array();
		for (const auto &i : r.instances)
			instances.push_back({{"key", i.key}, {"pass", i.pass}, {"residual", i.detail}});
		out << Json{{"command", "verify"}, {"suite", r.suite}, {"passed", r.passed()}, {"instances", instances}}.dump(2)
		    << "\n";
	}
	else
	{
		for (const auto &i : r.instances)
			if (!i.pass)
				out << "FAIL " << r.suite << " [" << i.key << "] " << i.detail << "\n";
		if (r.passed())
			out << "PASS " << r.suite << " (" << r.instances.size() << " instances)\n";
		else
			out << "FAIL " << r.suite << " (" << r.failures() << " of " << r.instances.size()
			    << " instances failing)\n";
	}
	return r.passed() ? Ok : Failure;
}

} // namespace detail

/// Runs one command line (without the program name); returns the exit code.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact computation of the components B_p of the PBW star product", "pbwq"};
	app.require_subcommand(1);
	std::function<int()> action;

	// bp
	detail::Common bp_common;
	int bp_n = 1, bp_m = 1, bp_p = 0;
	std::string bp_backend = "formula";
	auto *bp_cmd = app.add_subcommand("bp", "B_p(x1...xn, y1...ym)");
	bp_cmd->add_option("-n", bp_n, "Number of x generators")->required()->check(CLI::NonNegativeNumber);
	bp_cmd->add_option("-m", bp_m, "Number of y generators")->required()->check(CLI::NonNegativeNumber);
	bp_cmd->add_option("-p", bp_p, "Component index")->required();
	bp_cmd->add_option("--backend", bp_backend, "formula, oracle or both")
	    ->check(CLI::IsMember({"formula", "oracle", "both"}));
	detail::add_common(bp_cmd, bp_common);
	bp_cmd->callback([&] {
		action = [&]() -> int {
			if (bp_p < 0 || bp_p > std::max(0, bp_n + bp_m - 1))
				throw UsageError("p out of range: need 0 <= p <= n+m-1");
			detail::require_cap(bp_n + bp_m, bp_common);
			const SymMonomial a = verify::x_monomial(bp_n), b = verify::y_monomial(bp_m);
			std::vector<std::pair<std::string, SymElement>> results;
			if (bp_backend != "oracle")
				results.emplace_back("formula", bp(a, b, bp_p, Backend::Formula));
			if (bp_backend != "formula")
				results.emplace_back("oracle", bp(a, b, bp_p, Backend::Oracle));
			const bool both = results.size() == 2;
			const bool equal = !both || results[0].second == results[1].second;
			if (bp_common.machine())
			{
				Json j{{"command", "bp"}, {"n", bp_n}, {"m", bp_m}, {"p", bp_p}};
				for (const auto &[name, v] : results)
					j["results"][name] = to_json(v);
				if (both)
					j["verdict"] = equal ? "EQUAL" : "DIFFER";
				out << j.dump(2) << "\n";
			}
			else if (!both)
				out << to_string(results[0].second) << "\n";
			else
			{
				for (const auto &[name, v] : results)
					out << name << ": " << to_string(v) << "\n";
				out << "VERDICT " << (equal ? "EQUAL" : "DIFFER") << "\n";
			}
			return equal ? Ok : Failure;
		};
	});

	// w
	detail::Common w_common;
	int w_n = 1, w_m = 1;
	bool w_check = false;
	auto *w_cmd = app.add_subcommand("w", "w({x1..xn}, {y1..ym})");
	w_cmd->add_option("-n", w_n, "Number of x generators")->required()->check(CLI::NonNegativeNumber);
	w_cmd->add_option("-m", w_m, "Number of y generators")->required()->check(CLI::NonNegativeNumber);
	w_cmd->add_flag("--check", w_check, "Compare with the Campbell-Hausdorff coefficient");
	detail::add_common(w_cmd, w_common);
	w_cmd->callback([&] {
		action = [&]() -> int {
			detail::require_cap(w_n + w_m, w_common);
			if (w_n > 31 || w_m > 31)
				throw UsageError("index set too large");
			const SubsetPair part{pbwq::detail::low_bits(w_n), pbwq::detail::low_bits(w_m)};
			LieElement value;
			try
			{
				value = w(part);
			}
			catch (const WUndefined &e)
			{
				throw UsageError(e.what());
			}
			std::optional<bool> equal;
			if (w_check)
			{
				if (w_n + w_m > 16)
					throw UsageError("--check supports at most 16 generators");
				const ChLog z = ch_log(w_n, w_m, w_n + w_m);
				equal = lie_project(z.coefficient(z.full_tag())) == value;
			}
			if (w_common.machine())
			{
				Json j{{"command", "w"}, {"n", w_n}, {"m", w_m}, {"result", to_json(value)}};
				if (equal)
					j["verdict"] = *equal ? "EQUAL" : "DIFFER";
				out << j.dump(2) << "\n";
			}
			else
			{
				out << to_string(value) << "\n";
				if (equal)
					out << "VERDICT " << (*equal ? "EQUAL" : "DIFFER") << "\n";
			}
			return equal.value_or(true) ? Ok : Failure;
		};
	});

	// ck
	detail::Common ck_common;
	int ck_kmax = 4, ck_qmax = 4;
	auto *ck_cmd = app.add_subcommand("ck", "Table of c_k(q)");
	ck_cmd->add_option("--kmax", ck_kmax, "Largest k")->check(CLI::Range(0, 60));
	ck_cmd->add_option("--qmax", ck_qmax, "Largest q")->check(CLI::Range(0, 60));
	detail::add_common(ck_cmd, ck_common);
	ck_cmd->callback([&] {
		action = [&]() -> int {
			const verify::Report lemma = verify::lemma21(ck_qmax, ck_kmax);
			if (ck_common.machine())
			{
				Json rows = Json::array();
				for (int k = 0; k <= ck_kmax; ++k)
				{
					Json row = Json::array();
					for (int q = 0; q <= ck_qmax; ++q)
						row.push_back(to_fraction_string(c(k, q)));
					rows.push_back(row);
				}
				out << Json{{"command", "ck"}, {"kmax", ck_kmax}, {"qmax", ck_qmax}, {"c", rows},
				            {"lemma21", lemma.passed() ? "PASS" : "FAIL"}}
				           .dump(2)
				    << "\n";
			}
			else
			{
				std::vector<std::vector<std::string>> cells;
				std::vector<std::string> header{"k\\q"};
				for (int q = 0; q <= ck_qmax; ++q)
					header.push_back(std::to_string(q));
				cells.push_back(header);
				for (int k = 0; k <= ck_kmax; ++k)
				{
					std::vector<std::string> row{std::to_string(k)};
					for (int q = 0; q <= ck_qmax; ++q)
						row.push_back(to_string(c(k, q)));
					cells.push_back(row);
				}
				std::vector<std::size_t> width(cells[0].size(), 0);
				for (const auto &row : cells)
					for (std::size_t i = 0; i < row.size(); ++i)
						width[i] = std::max(width[i], row[i].size());
				for (const auto &row : cells)
				{
					for (std::size_t i = 0; i < row.size(); ++i)
						out << (i ? "  " : "") << std::string(width[i] - row[i].size(), ' ') << row[i];
					out << "\n";
				}
				out << "lemma21 " << (lemma.passed() ? "PASS" : "FAIL") << "\n";
			}
			return lemma.passed() ? Ok : Failure;
		};
	});

	// verify
	detail::Common v_common;
	std::string suite;
	int v_degree = 5, v_qmax = 6, v_mmax = 6, v_p = 2, v_q = 1, v_qmin = 0, v_dega = 2, v_max_pq = 3, v_max_r = 2;
	int v_poisson = 3;
	std::string v_algebra = "heisenberg3";
	auto *v_cmd = app.add_subcommand("verify", "Run a verification suite");
	v_cmd->add_option("suite", suite, "thm11, dynkin, eq4, lemma20, lemma21, thm22, assoc or star")
	    ->required()
	    ->check(CLI::IsMember({"thm11", "dynkin", "eq4", "lemma20", "lemma21", "thm22", "assoc", "star"}));
	v_cmd->add_option("--degree", v_degree, "Largest total degree (thm11, dynkin, eq4: 5; assoc: 6; star: 5)");
	v_cmd->add_option("--qmax", v_qmax, "lemma21: largest q")->check(CLI::PositiveNumber);
	v_cmd->add_option("--mmax", v_mmax, "lemma21: largest m")->check(CLI::NonNegativeNumber);
	v_cmd->add_option("--p", v_p, "thm22: largest p")->check(CLI::PositiveNumber);
	v_cmd->add_option("--q", v_q, "thm22: largest q")->check(CLI::NonNegativeNumber);
	v_cmd->add_option("--qmin", v_qmin, "thm22: smallest q")->check(CLI::NonNegativeNumber);
	v_cmd->add_option("--dega", v_dega, "thm22: largest degree of the fixed argument")->check(CLI::NonNegativeNumber);
	v_cmd->add_option("--max-pq", v_max_pq, "lemma20: largest p+q")->check(CLI::PositiveNumber);
	v_cmd->add_option("--max-r", v_max_r, "lemma20: largest r")->check(CLI::PositiveNumber);
	v_cmd->add_option("--poisson-degree", v_poisson, "star: largest total degree for the commutator check");
	v_cmd->add_option("--algebra", v_algebra, "star: bundled algebra name or structure-constant file");
	detail::add_common(v_cmd, v_common);
	bool degree_given = false;
	v_cmd->callback([&] {
		degree_given = v_cmd->count("--degree") > 0;
		action = [&]() -> int {
			verify::Report r;
			const Caps caps = v_common.caps();
			if (suite == "thm11" || suite == "dynkin" || suite == "eq4")
			{
				detail::require_cap(v_degree, v_common);
				r = suite == "thm11" ? verify::thm11(v_degree)
				    : suite == "dynkin" ? verify::dynkin(v_degree)
				                        : verify::eq4(v_degree);
			}
			else if (suite == "lemma20")
			{
				detail::require_cap(v_max_pq + v_max_r, v_common);
				r = verify::lemma20(v_max_pq, v_max_r, caps);
			}
			else if (suite == "lemma21")
				r = verify::lemma21(v_qmax, v_mmax);
			else if (suite == "thm22")
			{
				if (v_qmin > v_q)
					throw UsageError("--qmin exceeds --q");
				detail::require_cap(2 * v_dega + v_p + v_q, v_common);
				r = verify::thm22(v_p, v_qmin, v_q, v_dega, caps);
			}
			else if (suite == "assoc")
			{
				const int d = degree_given ? v_degree : 6;
				detail::require_cap(d, v_common);
				r = verify::assoc(d);
			}
			else
			{
				detail::require_cap(std::max(v_degree, v_poisson), v_common);
				const LieAlgebra g = detail::load_algebra(v_algebra);
				r = verify::star(g, v_algebra, v_degree, v_poisson);
			}
			return detail::print_report(r, v_common.machine(), out);
		};
	});

	// star
	detail::Common s_common;
	std::string s_algebra = "heisenberg3", s_f, s_g, s_t = "1", s_backend = "formula";
	bool s_formal = false;
	auto *s_cmd = app.add_subcommand("star", "f *_t g on a finite-dimensional Lie algebra");
	s_cmd->add_option("f", s_f, "Left polynomial, e.g. 'e1^2 e2'")->required();
	s_cmd->add_option("g", s_g, "Right polynomial")->required();
	s_cmd->add_option("--algebra", s_algebra, "Bundled algebra name (abelian2, heisenberg3, sl2) or file");
	s_cmd->add_option("--t", s_t, "Value of the parameter t as p/q");
	s_cmd->add_flag("--formal", s_formal, "Print the coefficient of each power of t");
	s_cmd->add_option("--backend", s_backend, "formula or oracle")->check(CLI::IsMember({"formula", "oracle"}));
	detail::add_common(s_cmd, s_common);
	s_cmd->callback([&] {
		action = [&]() -> int {
			const LieAlgebra g = detail::load_algebra(s_algebra);
			Polynomial f, h;
			try
			{
				f = parse_polynomial(s_f, g);
				h = parse_polynomial(s_g, g);
			}
			catch (const std::invalid_argument &e)
			{
				throw UsageError(e.what());
			}
			int top = 0;
			for (const auto *poly : {&f, &h})
			{
				int d = 0;
				for (const auto &[e, c] : *poly)
					d = std::max(d, total_degree(e));
				top += d;
			}
			detail::require_cap(top, s_common);
			const Backend backend = s_backend == "oracle" ? Backend::Oracle : Backend::Formula;
			if (s_formal)
			{
				const auto series = star_formal(f, h, g, backend);
				if (s_common.machine())
				{
					Json coeffs = Json::array();
					for (const auto &p : series)
						coeffs.push_back(to_json(p, g));
					out << Json{{"command", "star"}, {"formal", true}, {"coefficients", coeffs}}.dump(2) << "\n";
				}
				else
					for (std::size_t p = 0; p < series.size(); ++p)
						out << "t^" << p << ": " << to_string(series[p], g) << "\n";
				return Ok;
			}
			const Rational t = detail::parse_t(s_t);
			const Polynomial value = star_t(f, h, t, g, backend);
			if (s_common.machine())
				out << Json{{"command", "star"}, {"t", to_fraction_string(t)}, {"result", to_json(value, g)}}.dump(2)
				    << "\n";
			else
				out << to_string(value, g) << "\n";
			return Ok;
		};
	});

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try
	{
		app.parse(reversed);
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e, out, err);
	}
	catch (const CLI::CallForAllHelp &e)
	{
		return app.exit(e, out, err);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e, out, err);
		return Usage;
	}

	try
	{
		return action();
	}
	catch (const UsageError &e)
	{
		err << "error: " << e.what() << "\n";
		return Usage;
	}
	catch (const CapExceeded &e)
	{
		err << "error: " << e.what() << "\n";
		return Usage;
	}
}

} // namespace pbwq::cli

#endif
