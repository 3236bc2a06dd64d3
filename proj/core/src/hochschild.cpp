#include "bvw/hochschild.hpp"

#include "bvw/complexes.hpp"

namespace bvw {

namespace {

bool is_field(VariableTable const &tab, int id) { return tab[id].kind == VarKind::field; }

/** split a monomial into its field part and the list of other factors */
void factorize(VariableTable const &tab, Monomial const &m, Monomial &field_part,
               std::vector<int> &others)
{
	field_part.clear();
	others.clear();
	for (auto const &[id, e] : m)
	{
		if (is_field(tab, id))
			field_part.push_back({id, e});
		else
			for (int k = 0; k < e; ++k)
				others.push_back(id);
	}
}

int monomial_sign_swap(VariableTable const &tab, Monomial const &a, Monomial const &b)
{
	return (monomial_parity(a, tab) & monomial_parity(b, tab) & 1) ? -1 : 1;
}

Monomial single(int id) { return Monomial{{id, 1}}; }

void tensor2_add(Tensor2 &t, Monomial a, Monomial b, RadicalScalar c)
{
	if (c.is_zero())
		return;
	auto key = std::make_pair(std::move(a), std::move(b));
	auto it = t.find(key);
	if (it == t.end())
		t.emplace(std::move(key), std::move(c));
	else
	{
		it->second += c;
		if (it->second.is_zero())
			t.erase(it);
	}
}

/**
 * accumulate into the graded-commutative quotient of the tensor cube: the
 * cofactors from slot `start` on are sorted with the Koszul sign, and a term
 * with a repeated odd cofactor is zero
 */
void tensor3_add(Tensor3 &t, VariableTable const &tab, Monomial a, Monomial b, Monomial c,
                 RadicalScalar v, int start)
{
	if (v.is_zero())
		return;
	Monomial slot[3] = {std::move(a), std::move(b), std::move(c)};
	int par[3];
	for (int i = 0; i < 3; ++i)
		par[i] = monomial_parity(slot[i], tab) & 1;
	for (int i = start; i < 3; ++i)
		for (int j = start; j + 1 < 3; ++j)
			if (slot[j + 1] < slot[j])
			{
				if (par[j] && par[j + 1])
					v = -v;
				std::swap(slot[j], slot[j + 1]);
				std::swap(par[j], par[j + 1]);
			}
	for (int j = start; j + 1 < 3; ++j)
		if (par[j] && par[j + 1] && slot[j] == slot[j + 1])
			return;
	auto key = std::make_tuple(std::move(slot[0]), std::move(slot[1]), std::move(slot[2]));
	auto it = t.find(key);
	if (it == t.end())
		t.emplace(std::move(key), std::move(v));
	else
	{
		it->second += v;
		if (it->second.is_zero())
			t.erase(it);
	}
}

} // namespace

HochschildPair HochschildPair::bv(BVSpectralTriple const &t, Poly const &s_tilde, int s0_degree)
{
	HochschildPair p;
	p.tab_ = t.table();
	p.action_ = s_tilde;
	p.b0_cutoff_ = s0_degree - 1;
	for (int id : t.xstar_ids())
		p.ghost_gens_.push_back(id);
	for (int id : t.antighost_ids())
		p.ghost_gens_.push_back(id);
	for (int id : t.ghost_ids())
		p.ghost_gens_.push_back(id);
	p.b0_gens_ = monomials_up_to(*p.tab_, t.x_ids(), p.b0_cutoff_);
	p.cochain_vars_ = t.x_ids();
	for (int id : t.ghost_ids())
		p.cochain_vars_.push_back(id);
	for (int id : t.xstar_ids())
		p.cochain_vars_.push_back(id);
	for (int id : t.antighost_ids())
		p.cochain_vars_.push_back(id);
	return p;
}

HochschildPair HochschildPair::total(TotalSpectralTriple const &t, Poly const &s_t, int s0_degree)
{
	HochschildPair p = bv(t, s_t, s0_degree);
	for (int id : t.b_ids())
		p.ghost_gens_.push_back(id), p.cochain_vars_.push_back(id);
	for (int id : t.hstar_ids())
		p.ghost_gens_.push_back(id), p.cochain_vars_.push_back(id);
	for (int id : t.bstar_ids())
		p.ghost_gens_.push_back(id), p.cochain_vars_.push_back(id);
	for (int id : t.h_ids())
		p.ghost_gens_.push_back(id), p.cochain_vars_.push_back(id);
	return p;
}

HochschildPair HochschildPair::brst(TotalSpectralTriple const &t, Poly const &s_t, int s0_degree,
                                    Poly const &psi)
{
	validate_gauge_fermion(*t.table(), psi);
	HochschildPair p;
	p.tab_ = t.table();
	p.action_ = s_t;
	p.psi_ = psi;
	p.gauge_fixed_ = true;
	p.b0_cutoff_ = s0_degree - 1;
	for (int id : t.h_ids())
		p.ghost_gens_.push_back(id);
	for (int id : t.b_ids())
		p.ghost_gens_.push_back(id);
	for (int id : t.ghost_ids())
		p.ghost_gens_.push_back(id);
	p.b0_gens_ = monomials_up_to(*p.tab_, t.x_ids(), p.b0_cutoff_);
	p.cochain_vars_ = t.x_ids();
	for (int id : t.ghost_ids())
		p.cochain_vars_.push_back(id);
	for (int id : t.b_ids())
		p.cochain_vars_.push_back(id);
	for (int id : t.h_ids())
		p.cochain_vars_.push_back(id);
	return p;
}

Poly HochschildPair::bracket(Poly const &z) const
{
	Poly r = antibracket(action_, z);
	if (gauge_fixed_)
		r = r.substitute(gauge_substitution(psi_));
	return r;
}

Poly HochschildPair::bracket_of(Monomial const &m) const
{
	Poly p(tab_);
	p.add_term(m, RadicalScalar(1));
	return bracket(p);
}

Tensor2 HochschildPair::coproduct(Monomial const &gen) const
{
	auto const &tab = *tab_;
	Tensor2 out;
	Monomial u;
	std::vector<int> ys;
	Poly br = bracket_of(gen);
	for (auto const &[m, c] : br.terms())
	{
		factorize(tab, m, u, ys);
		std::vector<Monomial> factors;
		if (!u.empty() || ys.empty())
			factors.push_back(u);
		for (int id : ys)
			factors.push_back(single(id));
		if (factors.size() == 1)
		{
			// f -> 1/2 (1 (x) f + f (x) 1)
			RadicalScalar half = Rational(1, 2) * c;
			tensor2_add(out, Monomial{}, factors[0], half);
			tensor2_add(out, factors[0], Monomial{}, half);
		}
		else if (factors.size() == 2)
		{
			RadicalScalar half = Rational(1, 2) * c;
			tensor2_add(out, factors[0], factors[1], half);
			int s = monomial_sign_swap(tab, factors[0], factors[1]);
			tensor2_add(out, factors[1], factors[0], s < 0 ? -half : half);
		}
		else
			throw std::logic_error("coproduct term with more than two factors");
	}
	return out;
}

Tensor2 HochschildPair::coaction(Monomial const &f) const
{
	auto const &tab = *tab_;
	Tensor2 out;
	Monomial u;
	std::vector<int> ys;
	Poly br = bracket_of(f);
	for (auto const &[m, c] : br.terms())
	{
		factorize(tab, m, u, ys);
		if (ys.size() != 1)
			throw std::logic_error("coaction term outside M (x) B");
		tensor2_add(out, u, single(ys[0]), c);
	}
	return out;
}

Poly HochschildPair::coboundary(Poly const &c) const
{
	auto const &tab = *tab_;
	Poly out(tab_);
	Monomial u;
	std::vector<int> ys;
	for (auto const &[m, coeff] : c.terms())
	{
		factorize(tab, m, u, ys);
		Poly upoly(tab_);
		upoly.add_term(u, coeff);

		// coaction on the coefficient, ghost factors multiplied back in order
		Poly acc = bracket(upoly);
		for (int id : ys)
			acc = acc * Poly::variable(tab_, id);
		out += acc;

		// sign-weighted insertion of the coproduct at each tensor slot
		int degsum = 0;
		for (std::size_t j = 0; j < ys.size(); ++j)
		{
			Poly term = upoly;
			for (std::size_t l = 0; l < ys.size(); ++l)
			{
				Poly factor = l == j ? bracket_of(single(ys[l]))
				                     : Poly::variable(tab_, ys[l]);
				term = term * factor;
			}
			if (degsum & 1)
				out -= term;
			else
				out += term;
			degsum += tab[ys[j]].ghost_degree;
		}
	}
	return out;
}

CoalgebraReport check_coalgebra_axioms(HochschildPair const &pair)
{
	auto const &tab = *pair.table();
	CoalgebraReport rep;
	rep.degree_rule = true;
	rep.coassociativity = true;
	rep.compatibility = true;

	auto generators = pair.b0_generators();
	for (int id : pair.ghost_generators())
		generators.push_back(Monomial{{id, 1}});

	Monomial u;
	std::vector<int> ys;
	for (auto const &gen : generators)
	{
		int a = monomial_ghost_degree(gen, tab);
		// degree-split rule of the coproduct
		Poly br = pair.bracket_of(gen);
		for (auto const &[m, c] : br.terms())
		{
			factorize(tab, m, u, ys);
			int du = monomial_poly_degree(u);
			if (ys.size() > 2)
				rep.degree_rule = false;
			else if (ys.size() == 2 && du != 0)
				rep.degree_rule = false;
			else if (ys.size() == 1 && du > pair.b0_cutoff())
				rep.degree_rule = false;
			else if (ys.empty() && (a + 1 != 0 || du > 2 * pair.b0_cutoff()))
				rep.degree_rule = false;
		}

		// graded coassociativity, compared in the quotient where the
		// cofactors graded-commute
		Tensor3 lhs, rhs;
		for (auto const &[key, c] : pair.coproduct(gen))
		{
			auto const &[m1, m2] = key;
			for (auto const &[k2, c2] : pair.coproduct(m1))
				tensor3_add(lhs, tab, k2.first, k2.second, m2, c * c2, 0);
			int sgn = (monomial_ghost_degree(m1, tab) + 1) & 1 ? -1 : 1;
			for (auto const &[k2, c2] : pair.coproduct(m2))
				tensor3_add(rhs, tab, m1, k2.first, k2.second,
				            sgn < 0 ? -(c * c2) : c * c2, 0);
		}
		if (lhs != rhs)
			rep.coassociativity = false;
	}

	// comodule compatibility on the field-monomial generators; the leading
	// module slot stays put, the two coalgebra slots graded-commute
	for (auto const &f : pair.b0_generators())
	{
		Tensor3 lhs, rhs;
		for (auto const &[key, c] : pair.coaction(f))
		{
			auto const &[m1, m2] = key;
			for (auto const &[k2, c2] : pair.coaction(m1))
				tensor3_add(lhs, tab, k2.first, k2.second, m2, c * c2, 1);
			for (auto const &[k2, c2] : pair.coproduct(m2))
				tensor3_add(rhs, tab, m1, k2.first, k2.second, -(c * c2), 1);
		}
		if (lhs != rhs)
			rep.compatibility = false;
	}
	return rep;
}

bool check_commuting_square(HochschildPair const &pair, Poly const &c)
{
	return pair.coboundary(c) == pair.bracket(c);
}

} // namespace bvw
