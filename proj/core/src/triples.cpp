#include "bvw/triples.hpp"

#include <fmt/format.h>

#include <functional>

namespace bvw {

namespace {

CPoly cpoly_conj(CPoly const &p)
{
	CPoly r(p.table());
	for (auto const &[m, c] : p.terms())
		r.add_term(m, c.conj());
	return r;
}

CPoly cpoly_scalar(VarTablePtr const &tab, ComplexRadical c)
{
	return CPoly::constant(tab, std::move(c));
}

} // namespace

FiniteSpectralTriple::FiniteSpectralTriple(int n_, CMatrix d0_) : n(n_), d0(std::move(d0_))
{
	if (n < 2)
		throw BadSize();
	if (d0.n == 0)
		d0 = CMatrix(n);
	if (d0.n != n || d0 != d0.adjoint())
		throw std::domain_error("base operator must be hermitian of matching size");
}

PolyMatrix zero_matrix(std::size_t rows, std::size_t cols, VarTablePtr const &tab)
{
	return PolyMatrix(rows, std::vector<CPoly>(cols, CPoly(tab)));
}

std::vector<CPoly> apply(PolyMatrix const &m, std::vector<CPoly> const &v)
{
	std::vector<CPoly> r(m.size(), CPoly(v.empty() ? nullptr : v[0].table()));
	for (std::size_t i = 0; i < m.size(); ++i)
		for (std::size_t j = 0; j < v.size(); ++j)
			if (!m[i][j].is_zero() && !v[j].is_zero())
				r[i] += m[i][j] * v[j];
	return r;
}

PolyMatrix compose(PolyMatrix const &a, PolyMatrix const &b)
{
	std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
	PolyMatrix r = zero_matrix(rows, cols, a.empty() ? nullptr : a[0][0].table());
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t k = 0; k < inner; ++k)
		{
			if (a[i][k].is_zero())
				continue;
			for (std::size_t j = 0; j < cols; ++j)
				if (!b[k][j].is_zero())
					r[i][j] += a[i][k] * b[k][j];
		}
	return r;
}

PolyMatrix mat_add(PolyMatrix a, PolyMatrix const &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < a[i].size(); ++j)
			a[i][j] += b[i][j];
	return a;
}

PolyMatrix mat_sub(PolyMatrix a, PolyMatrix const &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < a[i].size(); ++j)
			a[i][j] -= b[i][j];
	return a;
}

bool mat_is_zero(PolyMatrix const &m)
{
	for (auto const &row : m)
		for (auto const &e : row)
			if (!e.is_zero())
				return false;
	return true;
}

BVSpectralTriple::BVSpectralTriple(FiniteSpectralTriple base, bool) : base_(std::move(base))
{
	int n = base_.n;
	d_ = n * n - 1;
	mutable_tab_ = std::make_shared<VariableTable>();
	auto &tab = *mutable_tab_;
	for (int p = 1; p <= n * n; ++p)
		x_.push_back(tab.add(fmt::format("x{}", p), VarKind::field, p));
	for (int q = 1; q <= d_; ++q)
		c_.push_back(tab.add(fmt::format("C{}", q), VarKind::ghost, q));
	for (int p = 1; p <= n * n; ++p)
		xs_.push_back(tab.add(fmt::format("x*{}", p), VarKind::antifield, p));
	for (int q = 1; q <= d_; ++q)
		cs_.push_back(tab.add(fmt::format("C*{}", q), VarKind::antighost, q));
	for (int p = 0; p < n * n; ++p)
		tab.set_partners(x_[p], xs_[p]);
	for (int q = 0; q < d_; ++q)
		tab.set_partners(c_[q], cs_[q]);
	tab_ = mutable_tab_;
	f_ = std::make_shared<StructureConstants>(n);
}

BVSpectralTriple::BVSpectralTriple(FiniteSpectralTriple base)
    : BVSpectralTriple(std::move(base), true)
{
	finish_bv_sector();
}

PolyMatrix BVSpectralTriple::ad_coord(std::vector<int> const &z) const
{
	PolyMatrix m = zero_matrix(d_, d_, tab_);
	for (int p = 0; p < d_; ++p)
		for (int r = 0; r < d_; ++r)
			for (int q = 0; q < d_; ++q)
			{
				RadicalScalar fv = (*f_)(p, q, r);
				if (fv.is_zero())
					continue;
				m[p][r].add_term({{z[q], 1}}, ComplexRadical(RadicalScalar(0), -fv));
			}
	return m;
}

void BVSpectralTriple::finish_bv_sector()
{
	int n = base_.n;
	// effective coordinate slots: (C*, x*, x, C), su(n) directions only
	for (int q = 0; q < d_; ++q)
		slot_var_.push_back(cs_[q]);
	for (int p = 0; p < d_; ++p)
		slot_var_.push_back(xs_[p]);
	for (int p = 0; p < d_; ++p)
		slot_var_.push_back(x_[p]);
	for (int q = 0; q < d_; ++q)
		slot_var_.push_back(c_[q]);
	slot_sign_.assign(slot_var_.size(), 1);

	auto half = ComplexRadical(RadicalScalar(Rational(1, 2)));
	auto put = [&](PolyMatrix &dst, int gi, int gj, PolyMatrix const &blk,
	               ComplexRadical const &scale, int bs) {
		for (int p = 0; p < bs; ++p)
			for (int r = 0; r < bs; ++r)
				if (!blk[p][r].is_zero())
					dst[gi * bs + p][gj * bs + r] += scale * blk[p][r];
	};

	// coordinate picture
	dcoord_ = zero_matrix(4 * d_, 4 * d_, tab_);
	std::vector<int> x_su(x_.begin(), x_.begin() + d_);
	std::vector<int> xs_su(xs_.begin(), xs_.begin() + d_);
	PolyMatrix adC = ad_coord(c_), adX = ad_coord(x_su);
	PolyMatrix adXs = ad_coord(xs_su), adCs = ad_coord(cs_);
	put(dcoord_, 0, 3, adC, -half, d_);
	put(dcoord_, 1, 2, adC, half, d_);
	put(dcoord_, 1, 3, adX, -half, d_);
	put(dcoord_, 2, 1, adC, half, d_);
	put(dcoord_, 2, 3, adXs, ComplexRadical(1), d_);
	put(dcoord_, 3, 0, adC, -half, d_);
	put(dcoord_, 3, 1, adX, -half, d_);
	put(dcoord_, 3, 2, adXs, ComplexRadical(1), d_);
	put(dcoord_, 3, 3, adCs, ComplexRadical(1), d_);

	// matrix-space picture: ad(z) = [w(z), -] with w(z) = -1/2 sum z_q sigma_q,
	// an operator on M_n in the matrix-unit basis E_ij, flattened index i*n+j
	auto sig = hermitian_basis(n);
	auto ad_mat = [&](std::vector<int> const &z) {
		PolyMatrix w = zero_matrix(n, n, tab_);
		for (int q = 0; q < d_; ++q)
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
				{
					auto e = sig[q](i, j);
					if (!e.is_zero())
						w[i][j].add_term(
						    {{z[q], 1}},
						    ComplexRadical(RadicalScalar(Rational(-1, 2))) * e);
				}
		PolyMatrix op = zero_matrix(n * n, n * n, tab_);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				for (int k = 0; k < n; ++k)
				{
					op[i * n + j][k * n + j] += w[i][k]; // (w m)_ij = w_ik m_kj
					op[i * n + j][i * n + k] -= w[k][j]; // (m w)_ij = m_ik w_kj
				}
		return op;
	};
	int nn = n * n;
	dmat_ = zero_matrix(4 * nn, 4 * nn, tab_);
	PolyMatrix mC = ad_mat(c_), mX = ad_mat(x_su);
	PolyMatrix mXs = ad_mat(xs_su), mCs = ad_mat(cs_);
	put(dmat_, 0, 3, mC, -half, nn);
	put(dmat_, 1, 2, mC, half, nn);
	put(dmat_, 1, 3, mX, -half, nn);
	put(dmat_, 2, 1, mC, half, nn);
	put(dmat_, 2, 3, mXs, ComplexRadical(1), nn);
	put(dmat_, 3, 0, mC, -half, nn);
	put(dmat_, 3, 1, mX, -half, nn);
	put(dmat_, 3, 2, mXs, ComplexRadical(1), nn);
	put(dmat_, 3, 3, mCs, ComplexRadical(1), nn);
}

std::vector<CPoly> BVSpectralTriple::generic_effective_vector() const
{
	std::vector<CPoly> v;
	v.reserve(slot_var_.size());
	for (int id : slot_var_)
		v.push_back(CPoly::variable(tab_, id));
	return v;
}

std::vector<CPoly> BVSpectralTriple::apply_j(std::vector<CPoly> const &v) const
{
	std::vector<CPoly> r;
	r.reserve(v.size());
	for (std::size_t k = 0; k < v.size(); ++k)
	{
		auto c = cpoly_conj(v[k]);
		if (slot_sign_[k] < 0)
			c = -c;
		r.push_back(cpoly_scalar(tab_, ComplexRadical::i()) * c);
	}
	return r;
}

Poly BVSpectralTriple::fermionic_action(std::vector<CPoly> const &v) const
{
	if (v.size() != slot_var_.size())
		throw NotEffective();
	// effective vectors have real coordinates; the anti-hermitian slots carry
	// the factor i inside the basis embedding, not in the coordinate
	for (std::size_t k = 0; k < v.size(); ++k)
		if (cpoly_conj(v[k]) != v[k])
			throw NotEffective();
	auto dv = bvw::apply(dcoord_, v);
	// 1/2 <Jv, Dv> = 1/2 sum_k conj(i s_k conj(v_k)) (Dv)_k
	//              = 1/2 sum_k (-i) s_k v_k (Dv)_k
	CPoly s(tab_);
	for (std::size_t k = 0; k < v.size(); ++k)
	{
		if (dv[k].is_zero())
			continue;
		ComplexRadical w(RadicalScalar(0), RadicalScalar(slot_sign_[k] < 0 ? 1 : -1));
		s += cpoly_scalar(tab_, w) * (v[k] * dv[k]);
	}
	s = cpoly_scalar(tab_, ComplexRadical(RadicalScalar(Rational(1, 2)))) * s;
	return demote_real(s);
}

TotalSpectralTriple::TotalSpectralTriple(FiniteSpectralTriple base)
    : BVSpectralTriple(std::move(base), true)
{
	auto &tab = *mutable_tab_;
	for (int q = 1; q <= d_; ++q)
		b_.push_back(tab.add(fmt::format("B{}", q), VarKind::aux_b, q));
	for (int q = 1; q <= d_; ++q)
		h_.push_back(tab.add(fmt::format("h{}", q), VarKind::aux_h, q));
	for (int q = 1; q <= d_; ++q)
		bs_.push_back(tab.add(fmt::format("B*{}", q), VarKind::aux_b_star, q));
	for (int q = 1; q <= d_; ++q)
		hs_.push_back(tab.add(fmt::format("h*{}", q), VarKind::aux_h_star, q));
	for (int q = 0; q < d_; ++q)
	{
		tab.set_partners(b_[q], bs_[q]);
		tab.set_partners(h_[q], hs_[q]);
	}
	finish_bv_sector();

	// auxiliary coordinate slots (h*, B*, B, h); B-type slots expand along
	// the antihermitian embedding i*sigma_q
	std::size_t base_slots = slot_var_.size();
	for (int q = 0; q < d_; ++q)
		slot_var_.push_back(hs_[q]), slot_sign_.push_back(1);
	for (int q = 0; q < d_; ++q)
		slot_var_.push_back(bs_[q]), slot_sign_.push_back(-1);
	for (int q = 0; q < d_; ++q)
		slot_var_.push_back(b_[q]), slot_sign_.push_back(-1);
	for (int q = 0; q < d_; ++q)
		slot_var_.push_back(h_[q]), slot_sign_.push_back(1);

	// grow D; the only auxiliary entries exchange the B*- and h-sectors
	std::size_t m = slot_var_.size();
	PolyMatrix grown = zero_matrix(m, m, tab_);
	for (std::size_t i = 0; i < dcoord_.size(); ++i)
		for (std::size_t j = 0; j < dcoord_.size(); ++j)
			grown[i][j] = dcoord_[i][j];
	auto two_i = ComplexRadical(RadicalScalar(0), RadicalScalar(2));
	for (int q = 0; q < d_; ++q)
	{
		std::size_t bsq = base_slots + d_ + q, hq = base_slots + 3 * d_ + q;
		grown[bsq][hq] = cpoly_scalar(tab_, -two_i); // B* row <- -2i h
		grown[hq][bsq] = cpoly_scalar(tab_, two_i);  // h row <- +2i B*
	}
	dcoord_ = std::move(grown);

	// matrix picture: B*-slot <- 2 * h-slot, h-slot <- 2 * B*-slot
	int nn = base_.n * base_.n;
	std::size_t mm = 8 * static_cast<std::size_t>(nn);
	PolyMatrix gm = zero_matrix(mm, mm, tab_);
	for (std::size_t i = 0; i < dmat_.size(); ++i)
		for (std::size_t j = 0; j < dmat_.size(); ++j)
			gm[i][j] = dmat_[i][j];
	auto two = cpoly_scalar(tab_, ComplexRadical(2));
	for (int k = 0; k < nn; ++k)
	{
		gm[5 * nn + k][7 * nn + k] = two; // B* slot (index 5) from h slot (7)
		gm[7 * nn + k][5 * nn + k] = two; // h slot from B* slot
	}
	dmat_ = std::move(gm);
}

namespace {

/** antilinear slot-wise map phi -> i phi^dagger in matrix-unit coordinates */
std::vector<CPoly> apply_j_matrix(std::vector<CPoly> const &v, int n, VarTablePtr const &tab)
{
	std::size_t nn = n * n, slots = v.size() / nn;
	std::vector<CPoly> r(v.size(), CPoly(tab));
	auto ii = CPoly::constant(tab, ComplexRadical::i());
	for (std::size_t s = 0; s < slots; ++s)
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				r[s * nn + i * n + j] = ii * cpoly_conj(v[s * nn + j * n + i]);
	return r;
}

std::vector<CPoly> basis_vector(std::size_t len, std::size_t k, VarTablePtr const &tab)
{
	std::vector<CPoly> v(len, CPoly(tab));
	v[k] = CPoly::constant(tab, ComplexRadical(1));
	return v;
}

/** matrix of a linear map given by its action on basis vectors */
PolyMatrix operator_matrix(std::size_t len, VarTablePtr const &tab,
                           std::function<std::vector<CPoly>(std::vector<CPoly> const &)> op)
{
	PolyMatrix m = zero_matrix(len, len, tab);
	for (std::size_t k = 0; k < len; ++k)
	{
		auto col = op(basis_vector(len, k, tab));
		for (std::size_t i = 0; i < len; ++i)
			m[i][k] = col[i];
	}
	return m;
}

/** diagonal action of an n x n matrix by left (or right) multiplication on every slot */
PolyMatrix diagonal_mult(CMatrix const &a, bool left, std::size_t slots, VarTablePtr const &tab)
{
	int n = a.n;
	std::size_t nn = n * n;
	PolyMatrix m = zero_matrix(slots * nn, slots * nn, tab);
	for (std::size_t s = 0; s < slots; ++s)
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				for (int k = 0; k < n; ++k)
				{
					// left: (a m)_{ij} = a_{ik} m_{kj}; right: (m a)_{ij} = m_{ik} a_{kj}
					auto const &e = left ? a(i, k) : a(k, j);
					if (e.is_zero())
						continue;
					std::size_t row = s * nn + i * n + j;
					std::size_t col = left ? s * nn + k * n + j : s * nn + i * n + k;
					m[row][col] += CPoly::constant(tab, e);
				}
	return m;
}

RealStructureReport check_impl(BVSpectralTriple const &t, bool total)
{
	RealStructureReport rep;
	int n = t.n();
	auto const &tab = t.table();
	auto const &D = t.dirac_matrix_picture();
	std::size_t len = D.size(), nn = static_cast<std::size_t>(n) * n, slots = len / nn;
	auto J = [&](std::vector<CPoly> const &v) { return apply_j_matrix(v, n, tab); };

	// J^2 = Id (J is antilinear; checking on real basis vectors suffices)
	rep.j_squared = true;
	for (std::size_t k = 0; k < len && rep.j_squared; ++k)
	{
		auto e = basis_vector(len, k, tab);
		auto back = J(J(e));
		for (std::size_t i = 0; i < len; ++i)
			if (back[i] != e[i])
				rep.j_squared = false;
	}

	// anticommutation with the ghost-sector blocks, commutation with the
	// auxiliary block, checked columnwise
	std::size_t bv_len = 4 * nn;
	rep.j_anticommutes_d = true;
	rep.j_commutes_d_aux = true;
	for (std::size_t k = 0; k < len; ++k)
	{
		auto e = basis_vector(len, k, tab);
		auto jd = J(bvw::apply(D, e));
		auto dj = bvw::apply(D, J(e));
		for (std::size_t i = 0; i < len; ++i)
		{
			bool aux_row = i >= bv_len;
			if (aux_row)
			{
				if (jd[i] != dj[i])
					rep.j_commutes_d_aux = false;
			}
			else if (!(jd[i] + dj[i]).is_zero())
				rep.j_anticommutes_d = false;
		}
	}
	if (!total)
		rep.j_commutes_d_aux = true; // no auxiliary sector present

	// opposite action, commutant and first-order condition over matrix units
	rep.opposite_action = rep.commutant = rep.first_order = true;
	std::vector<PolyMatrix> right_ops;
	for (int bi = 0; bi < n; ++bi)
		for (int bj = 0; bj < n; ++bj)
		{
			CMatrix b = CMatrix::unit(n, bi, bj);
			// J b* J^{-1} as a linear operator (b* = adjoint of b)
			auto lm = diagonal_mult(b.adjoint(), true, slots, tab);
			auto right_b = operator_matrix(
			    len, tab, [&](std::vector<CPoly> const &v) { return J(bvw::apply(lm, J(v))); });
			if (right_b != diagonal_mult(b, false, slots, tab))
				rep.opposite_action = false;
			right_ops.push_back(std::move(right_b));
		}
	for (int ai = 0; ai < n; ++ai)
		for (int aj = 0; aj < n; ++aj)
		{
			auto left_a = diagonal_mult(CMatrix::unit(n, ai, aj), true, slots, tab);
			auto da = mat_sub(compose(D, left_a), compose(left_a, D));
			for (auto const &right_b : right_ops)
			{
				if (!mat_is_zero(
				        mat_sub(compose(left_a, right_b), compose(right_b, left_a))))
					rep.commutant = false;
				if (!mat_is_zero(mat_sub(compose(da, right_b), compose(right_b, da))))
					rep.first_order = false;
			}
		}
	return rep;
}

} // namespace

RealStructureReport check_real_structure(BVSpectralTriple const &t) { return check_impl(t, false); }

RealStructureReport check_real_structure(TotalSpectralTriple const &t)
{
	return check_impl(t, true);
}

} // namespace bvw
