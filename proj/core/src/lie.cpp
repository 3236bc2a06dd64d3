#include "bvw/lie.hpp"

namespace bvw {

std::vector<CMatrix> hermitian_basis(int n)
{
	std::vector<CMatrix> sig;
	sig.reserve(n * n);
	for (int k = 1; k < n; ++k)
	{
		for (int j = 0; j < k; ++j)
		{
			CMatrix s(n); // E_jk + E_kj
			s(j, k) = ComplexRadical(1);
			s(k, j) = ComplexRadical(1);
			sig.push_back(s);
			CMatrix t(n); // -i E_jk + i E_kj
			t(j, k) = -ComplexRadical::i();
			t(k, j) = ComplexRadical::i();
			sig.push_back(t);
		}
		// diag(1,...,1,-k,0,...,0) * sqrt(2/(k(k+1)))
		CMatrix d(n);
		RadicalScalar norm = RadicalScalar::term(Rational(1, k * (k + 1)), 2 * k * (k + 1));
		for (int i = 0; i < k; ++i)
			d(i, i) = ComplexRadical(norm);
		d(k, k) = ComplexRadical(Rational(-k) * norm);
		sig.push_back(d);
	}
	sig.push_back(CMatrix::identity(n));
	return sig;
}

StructureConstants::StructureConstants(int n) : n_(n), d_(n * n - 1), f_(d_ * d_ * d_)
{
	auto sig = hermitian_basis(n);
	for (int p = 0; p < d_; ++p)
		for (int q = p + 1; q < d_; ++q)
		{
			CMatrix c = commutator(sig[p], sig[q]);
			if (c.is_zero())
				continue;
			for (int r = 0; r < d_; ++r)
			{
				// -(i/4) tr([sigma_p, sigma_q] sigma_r); the trace is purely
				// imaginary, so the result lands in the real radicals
				ComplexRadical t = (c * sig[r]).trace();
				if (!t.re.is_zero())
					throw std::logic_error("commutator trace not imaginary");
				RadicalScalar v = Rational(1, 4) * t.im;
				f_[(p * d_ + q) * d_ + r] = v;
				f_[(q * d_ + p) * d_ + r] = -v;
			}
		}
}

bool StructureConstants::totally_antisymmetric() const
{
	for (int p = 0; p < d_; ++p)
		for (int q = 0; q < d_; ++q)
			for (int r = 0; r < d_; ++r)
			{
				auto const &v = (*this)(p, q, r);
				if ((*this)(q, p, r) != -v || (*this)(p, r, q) != -v ||
				    (*this)(q, r, p) != v || (*this)(r, p, q) != v ||
				    (*this)(r, q, p) != -v)
					return false;
			}
	return true;
}

bool StructureConstants::jacobi() const
{
	for (int p = 0; p < d_; ++p)
		for (int q = 0; q < d_; ++q)
			for (int r = 0; r < d_; ++r)
				for (int s = 0; s < d_; ++s)
				{
					RadicalScalar acc;
					for (int a = 0; a < d_; ++a)
						acc += (*this)(a, p, r) * (*this)(a, q, s) -
						       (*this)(a, p, s) * (*this)(a, q, r) -
						       (*this)(a, p, q) * (*this)(a, r, s);
					if (!acc.is_zero())
						return false;
				}
	return true;
}

} // namespace bvw
