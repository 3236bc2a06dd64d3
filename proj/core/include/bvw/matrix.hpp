#pragma once

// Dense square matrices over the exact complex radical scalars. Sizes here
// are tiny (n x n with n <= 4, or n^2-blocks thereof), so everything is
// straightforward row-major storage.

#include "bvw/radical.hpp"

#include <vector>

namespace bvw {

struct CMatrix {
	int n = 0;
	std::vector<ComplexRadical> a;

	CMatrix() = default;
	explicit CMatrix(int n_) : n(n_), a(n_ * n_) {}

	static CMatrix identity(int n)
	{
		CMatrix m(n);
		for (int i = 0; i < n; ++i)
			m(i, i) = ComplexRadical(1);
		return m;
	}

	static CMatrix unit(int n, int i, int j)
	{
		CMatrix m(n);
		m(i, j) = ComplexRadical(1);
		return m;
	}

	ComplexRadical &operator()(int i, int j) { return a[i * n + j]; }
	ComplexRadical const &operator()(int i, int j) const { return a[i * n + j]; }

	bool is_zero() const
	{
		for (auto const &z : a)
			if (!z.is_zero())
				return false;
		return true;
	}

	CMatrix operator-() const
	{
		CMatrix r(n);
		for (std::size_t k = 0; k < a.size(); ++k)
			r.a[k] = -a[k];
		return r;
	}
	CMatrix &operator+=(CMatrix const &b)
	{
		for (std::size_t k = 0; k < a.size(); ++k)
			a[k] += b.a[k];
		return *this;
	}
	CMatrix &operator-=(CMatrix const &b)
	{
		for (std::size_t k = 0; k < a.size(); ++k)
			a[k] -= b.a[k];
		return *this;
	}
	friend CMatrix operator+(CMatrix x, CMatrix const &y) { return x += y; }
	friend CMatrix operator-(CMatrix x, CMatrix const &y) { return x -= y; }
	friend CMatrix operator*(ComplexRadical const &s, CMatrix m)
	{
		for (auto &z : m.a)
			z *= s;
		return m;
	}
	friend CMatrix operator*(CMatrix const &x, CMatrix const &y)
	{
		CMatrix r(x.n);
		for (int i = 0; i < x.n; ++i)
			for (int k = 0; k < x.n; ++k)
			{
				if (x(i, k).is_zero())
					continue;
				for (int j = 0; j < x.n; ++j)
					r(i, j) += x(i, k) * y(k, j);
			}
		return r;
	}
	bool operator==(CMatrix const &b) const { return n == b.n && a == b.a; }
	bool operator!=(CMatrix const &b) const { return !(*this == b); }

	CMatrix transpose() const
	{
		CMatrix r(n);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				r(i, j) = (*this)(j, i);
		return r;
	}
	CMatrix adjoint() const
	{
		CMatrix r(n);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				r(i, j) = (*this)(j, i).conj();
		return r;
	}
	CMatrix conj_entrywise() const
	{
		CMatrix r(n);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				r(i, j) = (*this)(i, j).conj();
		return r;
	}

	ComplexRadical trace() const
	{
		ComplexRadical t;
		for (int i = 0; i < n; ++i)
			t += (*this)(i, i);
		return t;
	}
};

inline CMatrix commutator(CMatrix const &x, CMatrix const &y) { return x * y - y * x; }

} // namespace bvw
