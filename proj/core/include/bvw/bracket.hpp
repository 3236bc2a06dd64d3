#pragma once

// Odd Poisson structure on the graded polynomial algebra: the antibracket
// pairs each unstarred variable phi with its starred partner phi* of ghost
// degree -deg(phi)-1, and the odd Laplacian is the pairwise second derivative.

#include "bvw/graded.hpp"

namespace bvw {

/**
 * {f,g} = sum over pairs (phi, phi*) of
 *   (dR f/dphi*)(dL g/dphi) - (dR f/dphi)(dL g/dphi*).
 */
template <class Scalar>
GradedPolynomial<Scalar> antibracket(GradedPolynomial<Scalar> const &f,
                                     GradedPolynomial<Scalar> const &g)
{
	auto tab = f.table() ? f.table() : g.table();
	GradedPolynomial<Scalar> r(tab);
	for (int phi : tab->pairing_fields())
	{
		int star = (*tab)[phi].partner;
		r += f.right_derivative(star) * g.left_derivative(phi);
		r -= f.right_derivative(phi) * g.left_derivative(star);
	}
	return r;
}

/**
 * Odd Laplacian: Delta f = sum over pairs of s_phi dL_phi dL_phi* f, with
 * s_phi = (-1)^{parity(phi)+1}. Squares to zero and is a generator of the
 * antibracket.
 */
template <class Scalar>
GradedPolynomial<Scalar> bv_laplacian(GradedPolynomial<Scalar> const &f)
{
	auto tab = f.table();
	GradedPolynomial<Scalar> r(tab);
	for (int phi : tab->pairing_fields())
	{
		int star = (*tab)[phi].partner;
		auto t = f.left_derivative(star).left_derivative(phi);
		if ((*tab)[phi].odd())
			r += t;
		else
			r -= t;
	}
	return r;
}

} // namespace bvw
