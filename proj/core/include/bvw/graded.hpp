#pragma once

// Graded-commutative polynomials in a mix of bosonic and Grassmann variables.
// Monomials are kept in a fixed normal order (fields < ghosts < antifields <
// anti-ghosts < auxiliaries); reordering picks up Koszul signs and squares of
// odd variables vanish.

#include "bvw/radical.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <tuple>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bvw {

enum class VarKind {
	field,      // x_p, degree 0
	ghost,      // C_q, degree 1
	antifield,  // x*_p, degree -1
	antighost,  // C*_q, degree -2
	aux_b,      // B_q, degree -1
	aux_h,      // h_q, degree 0
	aux_b_star, // B*_q, degree 0
	aux_h_star  // h*_q, degree -1
};

/** position of a kind in the global monomial order */
inline int kind_rank(VarKind k)
{
	switch (k)
	{
	case VarKind::field:
		return 0;
	case VarKind::ghost:
		return 1;
	case VarKind::antifield:
		return 2;
	case VarKind::antighost:
		return 3;
	case VarKind::aux_b:
		return 4;
	case VarKind::aux_h:
		return 5;
	case VarKind::aux_b_star:
		return 6;
	case VarKind::aux_h_star:
		return 7;
	}
	return -1;
}

inline int kind_degree(VarKind k)
{
	switch (k)
	{
	case VarKind::field:
	case VarKind::aux_h:
	case VarKind::aux_b_star:
		return 0;
	case VarKind::ghost:
		return 1;
	case VarKind::antifield:
	case VarKind::aux_b:
	case VarKind::aux_h_star:
		return -1;
	case VarKind::antighost:
		return -2;
	}
	return 0;
}

struct GradedVariable {
	int id = -1;
	std::string name;
	VarKind kind = VarKind::field;
	int ghost_degree = 0;
	int partner = -1; // conjugate variable under the antibracket pairing
	int index = 0;    // 1-based index within its kind

	bool odd() const { return ghost_degree & 1; }
};

/**
 * Registry of the graded variables of a model. Variable ids double as indices
 * into the registry; the normal order of two variables is (kind rank, index).
 */
class VariableTable {
  public:
	int add(std::string name, VarKind kind, int index)
	{
		GradedVariable v;
		v.id = static_cast<int>(vars_.size());
		v.name = std::move(name);
		v.kind = kind;
		v.ghost_degree = kind_degree(kind);
		v.index = index;
		vars_.push_back(v);
		return v.id;
	}

	void set_partners(int a, int b)
	{
		vars_[a].partner = b;
		vars_[b].partner = a;
	}

	GradedVariable const &operator[](int id) const { return vars_[id]; }
	std::size_t size() const { return vars_.size(); }
	std::vector<GradedVariable> const &all() const { return vars_; }

	int find(std::string const &name) const
	{
		for (auto const &v : vars_)
			if (v.name == name)
				return v.id;
		return -1;
	}

	/** strict weak order used for monomial normal form */
	bool before(int a, int b) const
	{
		auto ka = kind_rank(vars_[a].kind), kb = kind_rank(vars_[b].kind);
		if (ka != kb)
			return ka < kb;
		return vars_[a].index < vars_[b].index;
	}

	/** unstarred pair members (x, C, B, h): one generator per antibracket pair */
	std::vector<int> pairing_fields() const
	{
		std::vector<int> r;
		for (auto const &v : vars_)
			if (v.kind == VarKind::field || v.kind == VarKind::ghost ||
			    v.kind == VarKind::aux_b || v.kind == VarKind::aux_h)
				if (v.partner >= 0)
					r.push_back(v.id);
		return r;
	}

  private:
	std::vector<GradedVariable> vars_;
};

using VarTablePtr = std::shared_ptr<const VariableTable>;

/** factor list (variable id, exponent), sorted in normal order */
using Monomial = std::vector<std::pair<int, int>>;

inline int monomial_ghost_degree(Monomial const &m, VariableTable const &tab)
{
	int d = 0;
	for (auto const &[id, e] : m)
		d += e * tab[id].ghost_degree;
	return d;
}

inline int monomial_poly_degree(Monomial const &m)
{
	int d = 0;
	for (auto const &[id, e] : m)
		d += e;
	return d;
}

inline int monomial_parity(Monomial const &m, VariableTable const &tab)
{
	int p = 0;
	for (auto const &[id, e] : m)
		p += e * (tab[id].ghost_degree & 1);
	return p & 1;
}

/**
 * Polynomial with Scalar coefficients (RadicalScalar in the algebra of
 * observables, ComplexRadical inside operator entries). Terms are stored by
 * normal-ordered monomial; no zero coefficients are kept.
 */
template <class Scalar> class GradedPolynomial {
  public:
	GradedPolynomial() = default;
	explicit GradedPolynomial(VarTablePtr tab) : tab_(std::move(tab)) {}

	static GradedPolynomial constant(VarTablePtr tab, Scalar c)
	{
		GradedPolynomial p(std::move(tab));
		p.add_term({}, std::move(c));
		return p;
	}

	static GradedPolynomial variable(VarTablePtr tab, int id)
	{
		GradedPolynomial p(std::move(tab));
		p.add_term({{id, 1}}, Scalar(1));
		return p;
	}

	VarTablePtr const &table() const { return tab_; }
	std::map<Monomial, Scalar> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(Monomial m, Scalar c)
	{
		if (c.is_zero())
			return;
		auto [it, fresh] = terms_.try_emplace(std::move(m), std::move(c));
		if (!fresh)
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	GradedPolynomial operator-() const
	{
		GradedPolynomial r(tab_);
		for (auto const &[m, c] : terms_)
			r.terms_[m] = -c;
		return r;
	}

	GradedPolynomial &operator+=(GradedPolynomial const &b)
	{
		if (!tab_)
			tab_ = b.tab_;
		for (auto const &[m, c] : b.terms_)
			add_term(m, c);
		return *this;
	}
	GradedPolynomial &operator-=(GradedPolynomial const &b)
	{
		if (!tab_)
			tab_ = b.tab_;
		for (auto const &[m, c] : b.terms_)
			add_term(m, -c);
		return *this;
	}
	friend GradedPolynomial operator+(GradedPolynomial a, GradedPolynomial const &b)
	{
		return a += b;
	}
	friend GradedPolynomial operator-(GradedPolynomial a, GradedPolynomial const &b)
	{
		return a -= b;
	}

	GradedPolynomial &operator*=(Scalar const &s)
	{
		if (s.is_zero())
		{
			terms_.clear();
			return *this;
		}
		for (auto &[m, c] : terms_)
			c *= s;
		return *this;
	}
	friend GradedPolynomial operator*(Scalar const &s, GradedPolynomial a) { return a *= s; }

	friend GradedPolynomial operator*(GradedPolynomial const &a, GradedPolynomial const &b)
	{
		GradedPolynomial r(a.tab_ ? a.tab_ : b.tab_);
		for (auto const &[ma, ca] : a.terms_)
			for (auto const &[mb, cb] : b.terms_)
			{
				auto [m, sign, ok] = merge_monomials(ma, mb, *r.tab_);
				if (!ok)
					continue;
				Scalar c = ca * cb;
				if (sign < 0)
					c = -c;
				r.add_term(std::move(m), std::move(c));
			}
		return r;
	}

	bool operator==(GradedPolynomial const &b) const { return terms_ == b.terms_; }
	bool operator!=(GradedPolynomial const &b) const { return !(*this == b); }

	/** true when every term has the given ghost degree */
	bool homogeneous_of_degree(int k) const
	{
		for (auto const &[m, c] : terms_)
			if (monomial_ghost_degree(m, *tab_) != k)
				return false;
		return true;
	}

	/** sum of the terms of ghost degree k */
	GradedPolynomial component(int k) const
	{
		GradedPolynomial r(tab_);
		for (auto const &[m, c] : terms_)
			if (monomial_ghost_degree(m, *tab_) == k)
				r.terms_[m] = c;
		return r;
	}

	/** sum of the terms of polynomial degree <= d */
	GradedPolynomial truncate_poly_degree(int d) const
	{
		GradedPolynomial r(tab_);
		for (auto const &[m, c] : terms_)
			if (monomial_poly_degree(m) <= d)
				r.terms_[m] = c;
		return r;
	}

	int max_poly_degree() const
	{
		int d = 0;
		for (auto const &[m, c] : terms_)
			d = std::max(d, monomial_poly_degree(m));
		return d;
	}

	/** ghost degrees present, ascending */
	std::vector<int> ghost_degrees() const
	{
		std::vector<int> ds;
		for (auto const &[m, c] : terms_)
		{
			int d = monomial_ghost_degree(m, *tab_);
			if (std::find(ds.begin(), ds.end(), d) == ds.end())
				ds.push_back(d);
		}
		std::sort(ds.begin(), ds.end());
		return ds;
	}

	/**
	 * Left derivative: anticommute the variable to the front of each
	 * normal-ordered monomial, collecting Koszul signs, and strike it.
	 */
	GradedPolynomial left_derivative(int id) const
	{
		GradedPolynomial r(tab_);
		auto const &tab = *tab_;
		bool odd = tab[id].odd();
		for (auto const &[m, c] : terms_)
		{
			int sign = 1;
			for (std::size_t i = 0; i < m.size(); ++i)
			{
				auto [vid, e] = m[i];
				if (vid != id)
				{
					if (odd && tab[vid].odd())
						sign = -sign; // walk past an odd factor
					continue;
				}
				Monomial out = m;
				Scalar cc = c;
				if (e == 1)
					out.erase(out.begin() + i);
				else
				{
					out[i].second = e - 1;
					cc *= Scalar(e);
				}
				if (sign < 0)
					cc = -cc;
				r.add_term(std::move(out), std::move(cc));
				break;
			}
		}
		return r;
	}

	/**
	 * Right derivative, expressed through the left one per homogeneous-parity
	 * term: dR/dz = (-1)^{|z|(|f|+1)} dL/dz.
	 */
	GradedPolynomial right_derivative(int id) const
	{
		auto const &tab = *tab_;
		if (!tab[id].odd())
			return left_derivative(id);
		GradedPolynomial r(tab_);
		for (auto const &[m, c] : terms_)
		{
			GradedPolynomial t(tab_);
			t.terms_[m] = c;
			// dR/dz = (-1)^{parity+1} dL/dz when z is odd
			auto d = t.left_derivative(id);
			if (monomial_parity(m, tab) & 1)
				r += d;
			else
				r -= d;
		}
		return r;
	}

	/**
	 * Simultaneous substitution: each variable with an entry in map is
	 * replaced by its polynomial (which must match the variable's parity);
	 * factors are multiplied back in original order so Koszul signs survive.
	 */
	GradedPolynomial
	substitute(std::map<int, GradedPolynomial> const &map) const
	{
		GradedPolynomial r(tab_);
		for (auto const &[m, c] : terms_)
		{
			GradedPolynomial acc = constant(tab_, c);
			for (auto const &[id, e] : m)
			{
				auto it = map.find(id);
				GradedPolynomial f =
				    it == map.end() ? variable(tab_, id) : it->second;
				for (int k = 0; k < e && !acc.is_zero(); ++k)
					acc = acc * f;
			}
			r += acc;
		}
		return r;
	}

	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		bool first = true;
		for (auto const &[m, c] : terms_)
		{
			if (!first)
				s += " + ";
			s += "(" + c.str() + ")";
			for (auto const &[id, e] : m)
			{
				s += "*" + (*tab_)[id].name;
				if (e > 1)
					s += "^" + std::to_string(e);
			}
			first = false;
		}
		return s;
	}

	/**
	 * Merge two normal-ordered monomials. Returns (product, sign, nonzero);
	 * the sign counts transpositions of odd factors, and a repeated odd
	 * variable kills the product.
	 */
	static std::tuple<Monomial, int, bool>
	merge_monomials(Monomial const &a, Monomial const &b, VariableTable const &tab)
	{
		Monomial out;
		out.reserve(a.size() + b.size());
		int sign = 1;
		// odd factors of a not yet consumed, counted from the right
		int odd_left = 0;
		for (auto const &[id, e] : a)
			if (tab[id].odd())
				++odd_left;
		std::size_t i = 0, j = 0;
		while (i < a.size() || j < b.size())
		{
			bool take_a = j == b.size() ||
			              (i < a.size() && !tab.before(b[j].first, a[i].first));
			if (take_a)
			{
				if (tab[a[i].first].odd())
					--odd_left;
				if (!out.empty() && out.back().first == a[i].first)
				{
					if (tab[a[i].first].odd())
						return {{}, 1, false};
					out.back().second += a[i].second;
				}
				else
					out.push_back(a[i]);
				++i;
			}
			else
			{
				bool odd = tab[b[j].first].odd();
				if (odd && (odd_left & 1))
					sign = -sign;
				if (!out.empty() && out.back().first == b[j].first)
				{
					if (odd)
						return {{}, 1, false};
					out.back().second += b[j].second;
				}
				else
					out.push_back(b[j]);
				++j;
			}
		}
		return {out, sign, true};
	}

  private:
	VarTablePtr tab_;
	std::map<Monomial, Scalar> terms_;
};

using Poly = GradedPolynomial<RadicalScalar>;
using CPoly = GradedPolynomial<ComplexRadical>;

/** real polynomial from a complex one; throws if any coefficient has a residual imaginary part */
inline Poly demote_real(CPoly const &p)
{
	Poly r(p.table());
	for (auto const &[m, c] : p.terms())
	{
		if (!c.im.is_zero())
			throw std::logic_error("expected real coefficients, got " + c.str());
		r.add_term(m, c.re);
	}
	return r;
}

inline CPoly promote_complex(Poly const &p)
{
	CPoly r(p.table());
	for (auto const &[m, c] : p.terms())
		r.add_term(m, ComplexRadical(c));
	return r;
}

} // namespace bvw
