#include "bvw/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace bvw {

namespace {

void enumerate(VariableTable const &tab, std::vector<int> const &vars, std::size_t i, int left,
               Monomial &cur, std::vector<Monomial> &out)
{
	if (i == vars.size())
	{
		out.push_back(cur);
		return;
	}
	enumerate(tab, vars, i + 1, left, cur, out); // exponent 0
	int cap = tab[vars[i]].odd() ? 1 : left;
	for (int e = 1; e <= cap && e <= left; ++e)
	{
		cur.push_back({vars[i], e});
		enumerate(tab, vars, i + 1, left - e, cur, out);
		cur.pop_back();
	}
}

} // namespace

std::vector<Monomial> monomials_up_to(VariableTable const &tab, std::vector<int> const &vars,
                                      int D)
{
	// keep normal order inside each monomial
	std::vector<int> sorted = vars;
	std::sort(sorted.begin(), sorted.end(),
	          [&](int a, int b) { return tab.before(a, b); });
	std::vector<Monomial> out;
	Monomial cur;
	enumerate(tab, sorted, 0, D, cur, out);
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<Monomial> cochain_basis(VariableTable const &tab, std::vector<int> const &vars, int k,
                                    int D)
{
	std::vector<Monomial> out;
	for (auto &m : monomials_up_to(tab, vars, D))
		if (monomial_ghost_degree(m, tab) == k)
			out.push_back(std::move(m));
	return out;
}

std::string mode_name(ArithmeticMode m)
{
	switch (m)
	{
	case ArithmeticMode::exact_rational:
		return "exact";
	case ArithmeticMode::exact_radical:
		return "radical";
	case ArithmeticMode::floating:
		return "float";
	}
	return "?";
}

SparseMatrix coboundary_matrix(std::function<Poly(Poly const &)> const &d, VarTablePtr const &tab,
                               std::vector<Monomial> const &basis_in,
                               std::vector<Monomial> const &basis_out)
{
	std::map<Monomial, std::size_t> index;
	for (std::size_t i = 0; i < basis_out.size(); ++i)
		index[basis_out[i]] = i;
	SparseMatrix m;
	m.rows = basis_out.size();
	m.cols = basis_in.size();
	for (std::size_t j = 0; j < basis_in.size(); ++j)
	{
		Poly p(tab);
		p.add_term(basis_in[j], RadicalScalar(1));
		Poly dp = d(p);
		for (auto const &[mono, c] : dp.terms())
		{
			auto it = index.find(mono);
			if (it == index.end())
			{
				Poly bad(tab);
				bad.add_term(mono, c);
				throw ImageOverflow(bad.str());
			}
			m.entries.emplace_back(it->second, j, c);
		}
	}
	return m;
}

bool sparse_product_is_zero(SparseMatrix const &second, SparseMatrix const &first)
{
	// rows of `second` times columns of `first`, accumulated sparsely
	std::map<std::pair<std::size_t, std::size_t>, RadicalScalar> acc;
	std::map<std::size_t, std::vector<std::pair<std::size_t, RadicalScalar>>> second_by_col;
	for (auto const &[r, c, v] : second.entries)
		second_by_col[c].push_back({r, v});
	for (auto const &[r, c, v] : first.entries)
	{
		auto it = second_by_col.find(r);
		if (it == second_by_col.end())
			continue;
		for (auto const &[rr, vv] : it->second)
			acc[{rr, c}] += vv * v;
	}
	for (auto const &[pos, v] : acc)
		if (!v.is_zero())
			return false;
	return true;
}

namespace {

std::size_t float_rank(SparseMatrix const &m)
{
	std::vector<std::vector<double>> a(m.rows, std::vector<double>(m.cols, 0.0));
	double biggest = 0;
	for (auto const &[r, c, v] : m.entries)
	{
		a[r][c] += v.to_double();
		biggest = std::max(biggest, std::fabs(a[r][c]));
	}
	if (biggest == 0)
		return 0;
	double eps = 1e-9 * biggest;
	std::size_t rank = 0;
	for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col)
	{
		std::size_t piv = rank;
		for (std::size_t i = rank + 1; i < m.rows; ++i)
			if (std::fabs(a[i][col]) > std::fabs(a[piv][col]))
				piv = i;
		if (std::fabs(a[piv][col]) <= eps)
			continue;
		std::swap(a[piv], a[rank]);
		for (std::size_t i = 0; i < m.rows; ++i)
		{
			if (i == rank || a[i][col] == 0)
				continue;
			double f = a[i][col] / a[rank][col];
			for (std::size_t k = col; k < m.cols; ++k)
				a[i][k] -= f * a[rank][k];
		}
		++rank;
	}
	return rank;
}

std::size_t exact_rank(SparseMatrix const &m, bool rational_only)
{
	std::vector<std::vector<RadicalScalar>> a(m.rows,
	                                          std::vector<RadicalScalar>(m.cols));
	for (auto const &[r, c, v] : m.entries)
	{
		if (rational_only && !v.is_rational())
			throw ExtensionOverflow(2, 1);
		a[r][c] += v;
	}
	std::size_t rank = 0;
	for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col)
	{
		std::size_t piv = rank;
		while (piv < m.rows && a[piv][col].is_zero())
			++piv;
		if (piv == m.rows)
			continue;
		std::swap(a[piv], a[rank]);
		RadicalScalar inv = a[rank][col].inverse();
		for (std::size_t k = col; k < m.cols; ++k)
			if (!a[rank][k].is_zero())
				a[rank][k] *= inv;
		for (std::size_t i = 0; i < m.rows; ++i)
		{
			if (i == rank || a[i][col].is_zero())
				continue;
			RadicalScalar f = a[i][col];
			for (std::size_t k = col; k < m.cols; ++k)
				if (!a[rank][k].is_zero())
					a[i][k] -= f * a[rank][k];
		}
		++rank;
	}
	return rank;
}

} // namespace

RankResult matrix_rank(SparseMatrix const &m, ArithmeticMode mode)
{
	if (mode == ArithmeticMode::floating)
		return {float_rank(m), false};
	try
	{
		return {exact_rank(m, mode == ArithmeticMode::exact_rational), false};
	}
	catch (ExtensionOverflow const &)
	{
		return {float_rank(m), true};
	}
}

bool polynomial_in_span(std::vector<Poly> const &span, Poly const &target)
{
	if (target.is_zero())
		return true;
	std::map<Monomial, std::size_t> index;
	auto touch = [&](Poly const &p) {
		for (auto const &[m, c] : p.terms())
			index.try_emplace(m, index.size());
	};
	for (auto const &p : span)
		touch(p);
	touch(target);
	SparseMatrix a, b;
	a.rows = b.rows = index.size();
	a.cols = span.size();
	b.cols = span.size() + 1;
	std::size_t j = 0;
	for (auto const &p : span)
	{
		for (auto const &[m, c] : p.terms())
		{
			a.entries.emplace_back(index[m], j, c);
			b.entries.emplace_back(index[m], j, c);
		}
		++j;
	}
	for (auto const &[m, c] : target.terms())
		b.entries.emplace_back(index[m], span.size(), c);
	return matrix_rank(a, ArithmeticMode::exact_radical).rank ==
	       matrix_rank(b, ArithmeticMode::exact_radical).rank;
}

namespace {

struct WindowDims {
	std::vector<DegreeReport> degrees;
	bool fallback = false;
};

WindowDims window_dims(std::function<Poly(Poly const &)> const &d, VarTablePtr const &tab,
                       std::vector<int> const &vars, int kmin, int kmax, int D,
                       int deg_increment, ArithmeticMode mode)
{
	WindowDims out;
	auto const &table = *tab;
	for (int k = kmin; k <= kmax; ++k)
	{
		DegreeReport rep;
		rep.k = k;
		auto bin = cochain_basis(table, vars, k, D);
		rep.dim_basis = bin.size();
		auto bout = cochain_basis(table, vars, k + 1, D + deg_increment);
		auto w = coboundary_matrix(d, tab, bin, bout);
		auto rk = matrix_rank(w, mode);
		out.fallback |= rk.float_fallback;
		rep.dim_ker = bin.size() - rk.rank;

		// image of the previous differential inside degree <= D: the rank
		// drop after projecting onto the degree-> D rows
		auto bprev = cochain_basis(table, vars, k - 1, D);
		auto bcod = cochain_basis(table, vars, k, D + deg_increment);
		auto wprev = coboundary_matrix(d, tab, bprev, bcod);
		SparseMatrix over;
		over.rows = wprev.rows;
		over.cols = wprev.cols;
		for (auto const &[r, c, v] : wprev.entries)
			if (monomial_poly_degree(bcod[r]) > D)
				over.entries.emplace_back(r, c, v);
		auto rk_prev = matrix_rank(wprev, mode);
		auto rk_over = matrix_rank(over, mode);
		out.fallback |= rk_prev.float_fallback | rk_over.float_fallback;
		rep.dim_im_prev = rk_prev.rank - rk_over.rank;
		rep.dim = rep.dim_ker - rep.dim_im_prev;
		out.degrees.push_back(rep);
	}
	return out;
}

} // namespace

CohomologyReport cohomology_dims(std::function<Poly(Poly const &)> const &d,
                                 VarTablePtr const &tab, std::vector<int> const &vars, int kmin,
                                 int kmax, int D, int deg_increment, ArithmeticMode mode)
{
	CohomologyReport rep;
	rep.mode = mode;
	rep.poly_cutoff = D;
	rep.degree_increment = deg_increment;
	auto cur = window_dims(d, tab, vars, kmin, kmax, D, deg_increment, mode);
	rep.float_fallback = cur.fallback;
	rep.degrees = cur.degrees;
	if (D >= 1)
	{
		auto prev = window_dims(d, tab, vars, kmin, kmax, D - 1, deg_increment, mode);
		for (std::size_t i = 0; i < rep.degrees.size(); ++i)
			rep.degrees[i].stable = rep.degrees[i].dim == prev.degrees[i].dim;
	}
	return rep;
}

} // namespace bvw
