#include "bvw/actions.hpp"

#include "bvw/complexes.hpp"

namespace bvw {

Poly spectral_action(BVSpectralTriple const &t, std::vector<Rational> const &f_coeffs)
{
	int n = t.n();
	auto const &tab = t.table();
	auto sig = hermitian_basis(n);
	// phi-dependent operator D_0 + sum_a x_a sigma_a
	PolyMatrix m = zero_matrix(n, n, tab);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
		{
			if (!t.base().d0(i, j).is_zero())
				m[i][j] += CPoly::constant(tab, t.base().d0(i, j));
			for (int a = 0; a < n * n; ++a)
				if (!sig[a](i, j).is_zero())
					m[i][j].add_term({{t.x_ids()[a], 1}}, sig[a](i, j));
		}
	CPoly acc(tab);
	PolyMatrix power = zero_matrix(n, n, tab); // identity
	for (int i = 0; i < n; ++i)
		power[i][i] = CPoly::constant(tab, ComplexRadical(1));
	for (std::size_t k = 0; k < f_coeffs.size(); ++k)
	{
		if (k > 0)
			power = compose(power, m);
		if (f_coeffs[k] == 0)
			continue;
		CPoly tr(tab);
		for (int i = 0; i < n; ++i)
			tr += power[i][i];
		acc += ComplexRadical(RadicalScalar(f_coeffs[k])) * tr;
	}
	return demote_real(acc);
}

Poly casimir_action(BVSpectralTriple const &t, std::vector<std::vector<Rational>> const &g)
{
	auto const &tab = t.table();
	Poly casimir(tab);
	for (int p = 0; p < t.dim(); ++p)
		casimir.add_term({{t.x_ids()[p], 2}}, RadicalScalar(1));
	Poly xn = Poly::variable(tab, t.x_ids()[t.dim()]);
	Poly acc(tab);
	Poly cas_pow = Poly::constant(tab, RadicalScalar(1));
	for (std::size_t k = 0; k < g.size(); ++k)
	{
		if (k > 0)
			cas_pow = cas_pow * casimir;
		Poly gk(tab);
		Poly xpow = Poly::constant(tab, RadicalScalar(1));
		for (std::size_t l = 0; l < g[k].size(); ++l)
		{
			if (l > 0)
				xpow = xpow * xn;
			if (g[k][l] != 0)
				gk += RadicalScalar(g[k][l]) * xpow;
		}
		acc += cas_pow * gk;
	}
	return acc;
}

Poly gauge_invariance_residual(BVSpectralTriple const &t, Poly const &s0)
{
	auto const &tab = t.table();
	int d = t.dim();
	std::vector<Poly> ds;
	for (int p = 0; p < d; ++p)
		ds.push_back(s0.left_derivative(t.x_ids()[p]));
	Poly r(tab);
	for (int rr = 0; rr < d; ++rr)
	{
		Poly coeff(tab);
		for (int p = 0; p < d; ++p)
		{
			if (ds[p].is_zero())
				continue;
			for (int q = 0; q < d; ++q)
			{
				auto const &fv = t.f()(p, q, rr);
				if (!fv.is_zero())
					coeff += fv * (ds[p] * Poly::variable(tab, t.x_ids()[q]));
			}
		}
		r += coeff * Poly::variable(tab, t.ghost_ids()[rr]);
	}
	return r;
}

Poly extended_action_closed_form(BVSpectralTriple const &t, Poly const &s0)
{
	auto const &tab = t.table();
	int d = t.dim();
	Poly s = s0;
	for (int p = 0; p < d; ++p)
		for (int q = 0; q < d; ++q)
			for (int r = 0; r < d; ++r)
			{
				auto const &fv = t.f()(p, q, r);
				if (fv.is_zero())
					continue;
				Poly xc = Poly::variable(tab, t.xstar_ids()[p]) *
				          Poly::variable(tab, t.x_ids()[q]) *
				          Poly::variable(tab, t.ghost_ids()[r]);
				Poly ccc = Poly::variable(tab, t.antighost_ids()[p]) *
				           Poly::variable(tab, t.ghost_ids()[q]) *
				           Poly::variable(tab, t.ghost_ids()[r]);
				s += fv * xc;
				s += (Rational(1, 2) * fv) * ccc;
			}
	return s;
}

Poly extended_action(BVSpectralTriple const &t, Poly const &s0)
{
	if (!gauge_invariance_residual(t, s0).is_zero())
		throw NotInvariant();
	Poly sf = t.fermionic_action(t.generic_effective_vector());
	sf *= RadicalScalar(Rational(1, 2));
	return s0 + sf;
}

std::vector<Poly> check_qme(std::vector<Poly> const &s_q)
{
	if (s_q.empty())
		return {};
	auto tab = s_q[0].table();
	std::size_t kmax = s_q.size() - 1;
	std::vector<Poly> res(std::max(2 * kmax, kmax + 1) + 1, Poly(tab));
	for (std::size_t a = 0; a <= kmax; ++a)
		for (std::size_t b = 0; b <= kmax; ++b)
		{
			Poly br = antibracket(s_q[a], s_q[b]);
			br *= RadicalScalar(Rational(1, 2));
			res[a + b] += br;
		}
	for (std::size_t k = 0; k <= kmax; ++k)
		res[k + 1] += bv_laplacian(s_q[k]);
	return res;
}

std::vector<AuxiliaryDegrees> auxiliary_spectrum(int L)
{
	std::vector<AuxiliaryDegrees> out;
	for (int i = 0; i <= L; ++i)
		for (int j = 1; j <= i + 1; ++j)
		{
			int deg_b = (j % 2 == 1) ? j - i - 2 : i - j + 1;
			out.push_back({i, j, deg_b, deg_b + 1});
		}
	return out;
}

Poly total_action(TotalSpectralTriple const &t, Poly const &s_tilde)
{
	auto const &tab = t.table();
	Poly s = s_tilde;
	for (int q = 0; q < t.dim(); ++q)
		s += Poly::variable(tab, t.bstar_ids()[q]) * Poly::variable(tab, t.h_ids()[q]);
	return s;
}

namespace {

bool starred_kind(VarKind k)
{
	return k == VarKind::antifield || k == VarKind::antighost || k == VarKind::aux_b_star ||
	       k == VarKind::aux_h_star;
}

bool has_starred(Poly const &p)
{
	auto const &tab = *p.table();
	for (auto const &[m, c] : p.terms())
		for (auto const &[id, e] : m)
			if (starred_kind(tab[id].kind))
				return true;
	return false;
}

} // namespace

std::map<int, Poly> gauge_substitution(Poly const &psi)
{
	auto tab = psi.table();
	std::map<int, Poly> sub;
	for (int phi : tab->pairing_fields())
		sub[(*tab)[phi].partner] = psi.left_derivative(phi);
	return sub;
}

void validate_gauge_fermion(VariableTable const &tab, Poly const &psi)
{
	if (!psi.homogeneous_of_degree(-1))
		throw MalformedFermion("every term must have ghost degree -1");
	if (has_starred(psi))
		throw MalformedFermion("starred variables are not allowed");
	(void)tab;
}

Poly gauge_fix(Poly const &s_t, Poly const &psi)
{
	validate_gauge_fermion(*psi.table(), psi);
	return s_t.substitute(gauge_substitution(psi));
}

Poly brst_differential(Poly const &s_t, Poly const &psi, Poly const &c)
{
	validate_gauge_fermion(*psi.table(), psi);
	if (has_starred(c))
		throw MalformedFermion("ghost-sector argument contains a starred variable");
	return antibracket(s_t, c).substitute(gauge_substitution(psi));
}

bool in_eom_span(Poly const &s_fixed, Poly const &r, int cutoff)
{
	if (r.is_zero())
		return true;
	auto tab = r.table();
	std::vector<int> vars;
	for (auto const &v : tab->all())
		if (!starred_kind(v.kind))
			vars.push_back(v.id);
	std::vector<Poly> cols;
	for (int id : vars)
	{
		Poly e = s_fixed.left_derivative(id);
		if (e.is_zero())
			continue;
		for (auto const &m : monomials_up_to(*tab, vars, cutoff))
		{
			Poly mult(tab);
			mult.add_term(m, RadicalScalar(1));
			Poly col = e * mult;
			if (!col.is_zero() && col.max_poly_degree() <= cutoff)
				cols.push_back(col);
		}
	}
	return polynomial_in_span(cols, r);
}

} // namespace bvw
