// Batch front end: load a model config, run verification suites, compute
// truncated cohomology windows and export the JSON schemas. Exit codes:
// 0 success, 1 verification failure, 2 usage or config error.

#include "bvw/expr.hpp"
#include "bvw/hochschild.hpp"
#include "bvw/json_io.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bvw;

namespace {

struct ConfigError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct ModelConfig {
	int n = 2;
	CMatrix d0;                            // zero when omitted
	std::vector<Rational> f_coeffs;        // spectral action, coefficient per power
	std::vector<std::vector<Rational>> g;  // casimir action table
	bool use_casimir = false;
	int kmin = 0, kmax = 2, window_d = 3;
	std::string psi_source;                // empty means no gauge fixing
	ArithmeticMode mode = ArithmeticMode::exact_radical;
	std::string raw;                       // canonical dump for hashing
};

Rational parse_rational(Json const &j)
{
	if (j.is_number_integer())
		return Rational(j.get<long>());
	Rational q(j.get<std::string>());
	q.canonicalize();
	return q;
}

ArithmeticMode parse_mode(std::string const &s)
{
	if (s == "exact")
		return ArithmeticMode::exact_rational;
	if (s == "radical")
		return ArithmeticMode::exact_radical;
	if (s == "float")
		return ArithmeticMode::floating;
	throw ConfigError("unknown arithmetic mode '" + s + "'");
}

ModelConfig load_config(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw ConfigError("cannot open config file '" + path + "'");
	Json j;
	try
	{
		in >> j;
	}
	catch (Json::parse_error const &e)
	{
		throw ConfigError(std::string("config is not valid JSON: ") + e.what());
	}

	ModelConfig cfg;
	cfg.raw = j.dump();
	cfg.n = j.value("n", 2);
	if (cfg.n < 2)
		throw ConfigError("n must be at least 2");
	cfg.d0 = CMatrix(cfg.n);
	if (j.contains("d0"))
	{
		auto const &rows = j.at("d0");
		if (int(rows.size()) != cfg.n)
			throw ConfigError("d0 must be an n x n array");
		for (int i = 0; i < cfg.n; ++i)
		{
			if (int(rows[i].size()) != cfg.n)
				throw ConfigError("d0 must be an n x n array");
			for (int k = 0; k < cfg.n; ++k)
				cfg.d0(i, k) = ComplexRadical(RadicalScalar(parse_rational(rows[i][k])));
		}
	}
	if (j.contains("action"))
	{
		auto const &a = j.at("action");
		std::string type = a.value("type", "spectral");
		if (type == "spectral")
			for (auto const &c : a.at("f"))
				cfg.f_coeffs.push_back(parse_rational(c));
		else if (type == "casimir")
		{
			cfg.use_casimir = true;
			for (auto const &row : a.at("g"))
			{
				cfg.g.emplace_back();
				for (auto const &c : row)
					cfg.g.back().push_back(parse_rational(c));
			}
		}
		else
			throw ConfigError("action type must be 'spectral' or 'casimir'");
	}
	if (j.contains("window"))
	{
		auto const &w = j.at("window");
		cfg.kmin = w.value("kmin", 0);
		cfg.kmax = w.value("kmax", 2);
		cfg.window_d = w.value("D", 3);
	}
	if (j.contains("psi"))
	{
		auto const &p = j.at("psi");
		if (p.is_object() && p.contains("file"))
		{
			std::ifstream pf(p.at("file").get<std::string>());
			if (!pf)
				throw ConfigError("cannot open gauge fermion file");
			std::ostringstream buf;
			buf << pf.rdbuf();
			cfg.psi_source = buf.str();
		}
		else if (p.is_string())
			cfg.psi_source = p.get<std::string>();
		else if (!p.is_null())
			throw ConfigError("psi must be a string, {\"file\": ...} or null");
	}
	if (j.contains("mode"))
		cfg.mode = parse_mode(j.at("mode").get<std::string>());
	return cfg;
}

std::string config_hash(ModelConfig const &cfg)
{
	return fmt::format("{:016x}", std::hash<std::string>{}(cfg.raw));
}

bool has_action(ModelConfig const &cfg) { return cfg.use_casimir || !cfg.f_coeffs.empty(); }

Poly base_action(ModelConfig const &cfg, BVSpectralTriple const &t)
{
	if (!has_action(cfg))
		throw ConfigError("this command needs an 'action' entry (f or g table)");
	return cfg.use_casimir ? casimir_action(t, cfg.g) : spectral_action(t, cfg.f_coeffs);
}

Poly parse_psi(ModelConfig const &cfg, TotalSpectralTriple const &t)
{
	auto psi = parse_polynomial(t.table(), cfg.psi_source);
	validate_gauge_fermion(*t.table(), psi);
	return psi;
}

void write_json(std::filesystem::path const &path, Json const &j)
{
	std::filesystem::create_directories(path.parent_path());
	std::ofstream out(path);
	out << j.dump(2) << "\n";
}

int thread_cap()
{
	char const *env = std::getenv("BVW_THREADS");
	if (!env)
		return 1;
	int v = std::atoi(env);
	return v > 0 ? v : 1;
}

std::string poly_str_or_zero(Poly const &p) { return p.is_zero() ? "0" : p.str(); }

// ---- check ------------------------------------------------------------

int run_check(ModelConfig const &cfg, std::vector<std::string> which, std::string const &out_dir)
{
	if (which.empty())
		which = {"triple", "cme", "qme", "hochschild", "lie"};
	for (auto const &w : which)
		if (w != "triple" && w != "cme" && w != "qme" && w != "hochschild" &&
		    w != "brst" && w != "lie")
			throw ConfigError("unknown check '" + w + "'");

	TotalSpectralTriple t({cfg.n, cfg.d0});
	Json results = Json::object();
	bool all_ok = true;
	auto record = [&](std::string const &name, bool ok, Json extra = Json::object()) {
		extra["ok"] = ok;
		results[name] = std::move(extra);
		all_ok = all_ok && ok;
	};

	for (auto const &w : which)
	{
		if (w == "lie")
		{
			record("lie", t.f().totally_antisymmetric() && t.f().jacobi(),
			       {{"antisymmetry_residual", "0"}, {"jacobi_residual", "0"}});
		}
		else if (w == "triple")
		{
			auto rep = check_real_structure(t);
			record("triple", rep.all(),
			       {{"j_squared", rep.j_squared},
			        {"j_anticommutes_d", rep.j_anticommutes_d},
			        {"j_commutes_d_aux", rep.j_commutes_d_aux},
			        {"opposite_action", rep.opposite_action},
			        {"commutant", rep.commutant},
			        {"first_order", rep.first_order}});
		}
		else if (w == "cme")
		{
			auto s0 = base_action(cfg, t);
			auto inv = gauge_invariance_residual(t, s0);
			if (!inv.is_zero())
			{
				record("cme", false,
				       {{"invariance_residual", poly_str_or_zero(inv)}});
				continue;
			}
			auto res = check_cme(extended_action(t, s0));
			record("cme", res.is_zero(), {{"cme_residual", poly_str_or_zero(res)}});
		}
		else if (w == "qme")
		{
			auto s0 = base_action(cfg, t);
			auto inv = gauge_invariance_residual(t, s0);
			if (!inv.is_zero())
			{
				record("qme", false,
				       {{"invariance_residual", poly_str_or_zero(inv)}});
				continue;
			}
			auto residuals = check_qme({extended_action(t, s0)});
			bool ok = true;
			Json rs = Json::array();
			for (auto const &r : residuals)
			{
				ok = ok && r.is_zero();
				rs.push_back(poly_str_or_zero(r));
			}
			record("qme", ok, {{"residuals_by_hbar_order", rs}});
		}
		else if (w == "hochschild")
		{
			auto s0 = base_action(cfg, t);
			auto s_tilde = extended_action_closed_form(t, s0);
			auto pair = HochschildPair::bv(t, s_tilde, s0.max_poly_degree());
			auto rep = check_coalgebra_axioms(pair);
			bool square = true;
			for (int gen : pair.ghost_generators())
				square = square &&
				         check_commuting_square(
				             pair, Poly::variable(t.table(), gen));
			record("hochschild", rep.all() && square,
			       {{"degree_rule", rep.degree_rule},
			        {"coassociativity", rep.coassociativity},
			        {"compatibility", rep.compatibility},
			        {"commuting_square", square}});
		}
		else if (w == "brst")
		{
			if (cfg.psi_source.empty())
				throw ConfigError("the brst check needs a gauge fermion (psi)");
			auto psi = parse_psi(cfg, t);
			auto s_t = extended_action(t, base_action(cfg, t));
			auto fixed = gauge_fix(s_t, psi);
			bool no_starred = true;
			auto const &table = *t.table();
			for (auto const &[m, c] : fixed.terms())
				for (auto const &[id, e] : m)
				{
					auto k = table[id].kind;
					no_starred = no_starred && k != VarKind::antifield &&
					             k != VarKind::antighost &&
					             k != VarKind::aux_b_star &&
					             k != VarKind::aux_h_star;
				}
			bool on_shell = true;
			for (int id : t.table()->pairing_fields())
			{
				auto d1 = brst_differential(s_t, psi,
				                            Poly::variable(t.table(), id));
				auto d2 = brst_differential(s_t, psi, d1);
				on_shell = on_shell && in_eom_span(fixed, d2, cfg.window_d);
			}
			record("brst", no_starred && on_shell,
			       {{"no_starred_variables", no_starred},
			        {"squared_differential_on_shell", on_shell}});
		}
	}

	Json report{{"config_hash", config_hash(cfg)},
	            {"mode", mode_name(cfg.mode)},
	            {"threads", thread_cap()},
	            {"results", results}};
	write_json(std::filesystem::path(out_dir) / "check_report.json", report);
	return all_ok ? 0 : 1;
}

// ---- cohomology -------------------------------------------------------

int run_cohomology(ModelConfig const &cfg, std::string const &out_dir)
{
	TotalSpectralTriple t({cfg.n, cfg.d0});
	auto tab = t.table();
	auto s0 = base_action(cfg, t);
	auto s_tilde = extended_action_closed_form(t, s0);

	std::vector<int> bv_vars;
	for (auto const &v : tab->all())
	{
		auto k = v.kind;
		if (k == VarKind::field || k == VarKind::ghost || k == VarKind::antifield ||
		    k == VarKind::antighost)
			bv_vars.push_back(v.id);
	}
	auto d_bv = [&](Poly const &c) { return antibracket(s_tilde, c); };
	auto bv_rep = cohomology_dims(d_bv, tab, bv_vars, cfg.kmin, cfg.kmax, cfg.window_d, 1,
	                              cfg.mode);

	Json report{{"config_hash", config_hash(cfg)},
	            {"mode", mode_name(cfg.mode)},
	            {"threads", thread_cap()},
	            {"bv", to_json(bv_rep)}};

	// cross-check: the coalgebra coboundary has the same rank as the bracket
	// differential on the pair's cochain space (the square commutes)
	{
		auto pair = HochschildPair::bv(t, s_tilde, s0.max_poly_degree());
		auto basis_in = monomials_up_to(*tab, pair.cochain_variables(), cfg.window_d);
		auto basis_out =
		    monomials_up_to(*tab, pair.cochain_variables(), cfg.window_d + 1 + s0.max_poly_degree());
		auto d_pair = [&](Poly const &c) { return pair.coboundary(c); };
		auto w_bracket = coboundary_matrix(d_bv, tab, basis_in, basis_out);
		auto w_pair = coboundary_matrix(d_pair, tab, basis_in, basis_out);
		auto r1 = matrix_rank(w_bracket, cfg.mode);
		auto r2 = matrix_rank(w_pair, cfg.mode);
		report["hochschild_rank_cross_check"] =
		    Json{{"bracket_rank", r1.rank},
		         {"coalgebra_rank", r2.rank},
		         {"agree", r1.rank == r2.rank},
		         {"float_fallback", r1.float_fallback || r2.float_fallback}};
	}

	if (!cfg.psi_source.empty())
	{
		auto psi = parse_psi(cfg, t);
		auto s_t = total_action(t, s_tilde);
		std::vector<int> ghost_vars;
		for (auto const &v : tab->all())
		{
			auto k = v.kind;
			if (k == VarKind::field || k == VarKind::ghost || k == VarKind::aux_b ||
			    k == VarKind::aux_h)
				ghost_vars.push_back(v.id);
		}
		auto d_brst = [&](Poly const &c) { return brst_differential(s_t, psi, c); };
		report["brst"] = to_json(cohomology_dims(d_brst, tab, ghost_vars, cfg.kmin,
		                                         cfg.kmax, cfg.window_d, 1, cfg.mode));
	}

	write_json(std::filesystem::path(out_dir) / "cohomology_report.json", report);
	return 0;
}

// ---- export -----------------------------------------------------------

int run_export(ModelConfig const &cfg, std::string const &what, std::string const &out_dir)
{
	TotalSpectralTriple t({cfg.n, cfg.d0});
	auto dir = std::filesystem::path(out_dir);
	Json meta{{"config_hash", config_hash(cfg)}, {"mode", mode_name(cfg.mode)}};

	if (what == "triple")
	{
		auto j = triple_to_json(t);
		j["meta"] = meta;
		write_json(dir / "triple.json", j);
	}
	else if (what == "actions")
	{
		auto s0 = base_action(cfg, t);
		auto s_tilde = extended_action_closed_form(t, s0);
		auto s_t = total_action(t, s_tilde);
		Json j{{"meta", meta},
		       {"s0", to_json(s0)},
		       {"s_tilde", to_json(s_tilde)},
		       {"s_total", to_json(s_t)},
		       {"variables", to_json(*t.table())}};
		if (!cfg.psi_source.empty())
		{
			auto psi = parse_psi(cfg, t);
			j["psi"] = to_json(psi);
			j["s_fixed"] = to_json(gauge_fix(s_t, psi));
		}
		write_json(dir / "actions.json", j);
	}
	else if (what == "pair")
	{
		auto s0 = base_action(cfg, t);
		auto s_tilde = extended_action_closed_form(t, s0);
		auto pair = HochschildPair::bv(t, s_tilde, s0.max_poly_degree());
		Json gens = Json::array();
		for (int gen : pair.ghost_generators())
		{
			Monomial m{{gen, 1}};
			Json splits = Json::array();
			for (auto const &[key, wgt] : pair.coproduct(m))
			{
				Poly a(t.table()), b(t.table());
				a.add_term(key.first, RadicalScalar(1));
				b.add_term(key.second, RadicalScalar(1));
				splits.push_back(Json::array(
				    {to_json(a), to_json(b), to_json(wgt)}));
			}
			gens.push_back(Json{{"generator", (*t.table())[gen].name},
			                    {"coproduct", splits}});
		}
		Json j{{"meta", meta}, {"b0_cutoff", pair.b0_cutoff()}, {"generators", gens}};
		write_json(dir / "pair.json", j);
	}
	else if (what == "matrices")
	{
		auto s0 = base_action(cfg, t);
		auto s_tilde = extended_action_closed_form(t, s0);
		auto d = [&](Poly const &c) { return antibracket(s_tilde, c); };
		std::vector<int> vars;
		for (auto const &v : t.table()->all())
			vars.push_back(v.id);
		Json mats = Json::array();
		for (int k = cfg.kmin; k <= cfg.kmax; ++k)
		{
			auto b0 = cochain_basis(*t.table(), vars, k, cfg.window_d);
			auto b1 = cochain_basis(*t.table(), vars, k + 1,
			                        cfg.window_d + 1 + s0.max_poly_degree());
			if (b0.empty())
				continue;
			auto w = coboundary_matrix(d, t.table(), b0, b1);
			mats.push_back(Json{{"ghost_degree", k}, {"matrix", to_json(w)}});
		}
		write_json(dir / "matrices.json", Json{{"meta", meta}, {"blocks", mats}});
	}
	else
		throw ConfigError("unknown export target '" + what + "'");
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact workbench for ghost-extended finite gauge models"};
	app.require_subcommand(1);

	std::string config_path, out_dir = ".", mode_flag, window_flag, what = "triple";
	std::vector<std::string> checks;

	app.add_option("--config", config_path, "model config JSON")->required();
	app.add_option("--out", out_dir, "output directory");
	app.add_option("--mode", mode_flag, "arithmetic mode: exact|radical|float");
	app.add_option("--window", window_flag, "truncation window kmin:kmax:D");

	auto *c_check = app.add_subcommand("check", "run verification suites");
	c_check->add_option("--check", checks,
	                    "subset of triple,cme,qme,hochschild,brst,lie")
	    ->delimiter(',');
	auto *c_cohom = app.add_subcommand("cohomology", "truncated cohomology window");
	auto *c_export = app.add_subcommand("export", "write JSON artifacts");
	c_export->add_option("--what", what, "triple|actions|pair|matrices");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		return app.exit(e) ? 2 : 0;
	}

	try
	{
		auto cfg = load_config(config_path);
		if (!mode_flag.empty())
			cfg.mode = parse_mode(mode_flag);
		if (!window_flag.empty())
		{
			int kmin, kmax, D;
			if (std::sscanf(window_flag.c_str(), "%d:%d:%d", &kmin, &kmax, &D) != 3)
				throw ConfigError("--window must look like kmin:kmax:D");
			cfg.kmin = kmin;
			cfg.kmax = kmax;
			cfg.window_d = D;
		}
		if (c_check->parsed())
			return run_check(cfg, checks, out_dir);
		if (c_cohom->parsed())
			return run_cohomology(cfg, out_dir);
		return run_export(cfg, what, out_dir);
	}
	catch (ConfigError const &e)
	{
		fmt::print(stderr, "config error: {}\n", e.what());
		return 2;
	}
	catch (ParseError const &e)
	{
		fmt::print(stderr, "config error: {}\n", e.what());
		return 2;
	}
	catch (MalformedFermion const &e)
	{
		fmt::print(stderr, "config error: {}\n", e.what());
		return 2;
	}
	catch (NotInvariant const &e)
	{
		fmt::print(stderr, "verification failure: {}\n", e.what());
		return 1;
	}
	catch (std::exception const &e)
	{
		fmt::print(stderr, "error: {}\n", e.what());
		return 2;
	}
}
