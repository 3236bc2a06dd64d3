#include "bvw/json_io.hpp"

namespace bvw {

Json to_json(RadicalScalar const &a)
{
	Json terms = Json::array();
	for (auto const &[m, q] : a.terms())
		terms.push_back(Json::array({m, q.get_str()}));
	return Json{{"terms", terms}};
}

RadicalScalar radical_from_json(Json const &j)
{
	RadicalScalar a;
	for (auto const &t : j.at("terms"))
	{
		long m = t.at(0).get<long>();
		Rational q(t.at(1).get<std::string>());
		q.canonicalize();
		a += RadicalScalar::term(q, m);
	}
	return a;
}

Json to_json(ComplexRadical const &z) { return Json{{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

ComplexRadical complex_from_json(Json const &j)
{
	return {radical_from_json(j.at("re")), radical_from_json(j.at("im"))};
}

Json to_json(Poly const &p)
{
	Json out = Json::array();
	for (auto const &[m, c] : p.terms())
	{
		Json mono = Json::array();
		for (auto const &[id, e] : m)
			mono.push_back(Json::array({id, e}));
		out.push_back(Json{{"coeff", to_json(c)}, {"monomial", mono}});
	}
	return out;
}

Poly poly_from_json(VarTablePtr const &tab, Json const &j)
{
	Poly p(tab);
	for (auto const &t : j)
	{
		Monomial m;
		for (auto const &f : t.at("monomial"))
			m.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
		p.add_term(std::move(m), radical_from_json(t.at("coeff")));
	}
	return p;
}

Json to_json(VariableTable const &tab)
{
	Json out = Json::array();
	for (auto const &v : tab.all())
		out.push_back(Json{{"id", v.id},
		                   {"name", v.name},
		                   {"ghost_degree", v.ghost_degree},
		                   {"partner", v.partner}});
	return out;
}

Json to_json(StructureConstants const &f)
{
	Json table = Json::array();
	int d = f.dim();
	for (int p = 0; p < d; ++p)
		for (int q = 0; q < d; ++q)
			for (int r = 0; r < d; ++r)
				if (!f(p, q, r).is_zero())
					table.push_back(Json::array(
					    {p + 1, q + 1, r + 1, to_json(f(p, q, r))}));
	return Json{{"n", f.n()}, {"f", table}};
}

Json to_json(SparseMatrix const &m)
{
	Json entries = Json::array();
	for (auto const &[r, c, v] : m.entries)
		entries.push_back(Json::array({r, c, to_json(v)}));
	return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

Json to_json(CohomologyReport const &r)
{
	Json degs = Json::array();
	for (auto const &d : r.degrees)
		degs.push_back(Json{{"ghost_degree", d.k},
		                    {"dim_basis", d.dim_basis},
		                    {"dim_ker", d.dim_ker},
		                    {"dim_im_prev", d.dim_im_prev},
		                    {"dim", d.dim},
		                    {"stable", d.stable}});
	return Json{{"mode", mode_name(r.mode)},
	            {"float_fallback", r.float_fallback},
	            {"poly_cutoff", r.poly_cutoff},
	            {"degree_increment", r.degree_increment},
	            {"degrees", degs}};
}

namespace {

Json cpoly_to_json(CPoly const &p)
{
	Json out = Json::array();
	for (auto const &[m, c] : p.terms())
	{
		Json mono = Json::array();
		for (auto const &[id, e] : m)
			mono.push_back(Json::array({id, e}));
		out.push_back(Json{{"coeff", to_json(c)}, {"monomial", mono}});
	}
	return out;
}

} // namespace

Json triple_to_json(BVSpectralTriple const &t)
{
	Json blocks = Json::array();
	auto const &d = t.dirac_coordinates();
	for (std::size_t i = 0; i < d.size(); ++i)
		for (std::size_t j = 0; j < d[i].size(); ++j)
			if (!d[i][j].is_zero())
				blocks.push_back(Json::array({i, j, cpoly_to_json(d[i][j])}));
	Json slots = Json::array();
	for (std::size_t k = 0; k < t.effective_size(); ++k)
		slots.push_back(
		    Json::array({(*t.table())[t.slot_variable(k)].name, t.slot_sign(k)}));
	return Json{{"n", t.n()},
	            {"variables", to_json(*t.table())},
	            {"dirac", blocks},
	            {"slots", slots},
	            {"real_structure", "v -> i * conj(v) per hermitian slot"}};
}

} // namespace bvw
