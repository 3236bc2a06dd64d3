#pragma once

// Action functionals and the master-equation pipeline: trace-built and
// Casimir-built invariant actions, the ghost extension and its classical and
// quantum master equations, auxiliary pairs, gauge fixing and the induced
// ghost-sector differential.

#include "bvw/bracket.hpp"
#include "bvw/triples.hpp"

namespace bvw {

struct NotInvariant : std::domain_error {
	NotInvariant() : std::domain_error("action is not invariant under the adjoint action") {}
};

struct MalformedFermion : std::domain_error {
	explicit MalformedFermion(std::string const &why)
	    : std::domain_error("bad gauge-fixing fermion: " + why) {}
};

/** exact trace of f(D_0 + sum_a x_a sigma_a) for f = sum_k coeff[k] t^k */
Poly spectral_action(BVSpectralTriple const &t, std::vector<Rational> const &f_coeffs);

/**
 * sum_k (x_1^2 + ... + x_{n^2-1}^2)^k g_k(x_{n^2}); g[k] lists the
 * coefficients of g_k by power of x_{n^2}.
 */
Poly casimir_action(BVSpectralTriple const &t, std::vector<std::vector<Rational>> const &g);

/** sum_r (sum_pq f_pqr dS_0/dx_p x_q) C_r; zero iff s0 is invariant */
Poly gauge_invariance_residual(BVSpectralTriple const &t, Poly const &s0);

/** closed form s0 + sum f_pqr (x*_p x_q C_r + 1/2 C*_p C_q C_r) */
Poly extended_action_closed_form(BVSpectralTriple const &t, Poly const &s0);

/**
 * s0 + 1/2 S_ferm evaluated on the generic effective vector; throws
 * NotInvariant when the invariance residual of s0 is nonzero.
 */
Poly extended_action(BVSpectralTriple const &t, Poly const &s0);

/** {s, s}; the zero polynomial iff the classical master equation holds */
template <class Scalar>
GradedPolynomial<Scalar> check_cme(GradedPolynomial<Scalar> const &s)
{
	return antibracket(s, s);
}

/**
 * Residuals of 1/2 {S,S} + u Delta(S) per power of u = -i hbar, for
 * S = sum_k s_q[k] u^k. Entry m is 1/2 sum_{a+b=m} {s_a, s_b} + Delta(s_{m-1}).
 */
std::vector<Poly> check_qme(std::vector<Poly> const &s_q);

struct AuxiliaryDegrees {
	int i, j, deg_b, deg_h;
};

/** degree table of the auxiliary pairs needed at reducibility level L */
std::vector<AuxiliaryDegrees> auxiliary_spectrum(int L);

/** s_tilde + sum_q B*_q h_q */
Poly total_action(TotalSpectralTriple const &t, Poly const &s_tilde);

/** throws MalformedFermion unless psi is degree -1 and free of starred variables */
void validate_gauge_fermion(VariableTable const &tab, Poly const &psi);

/** substitution map phi* -> dL psi / d phi for every antibracket pair */
std::map<int, Poly> gauge_substitution(Poly const &psi);

/**
 * Substitute phi* := dL psi / d phi for every pair simultaneously; the result
 * carries no starred variable.
 */
Poly gauge_fix(Poly const &s_t, Poly const &psi);

/** {s_t, c} followed by the gauge-fixing substitution */
Poly brst_differential(Poly const &s_t, Poly const &psi, Poly const &c);

/**
 * Decide whether r lies in the span of { dL s / d phi * monomial } truncated
 * at polynomial degree cutoff, by an exact linear solve. Used to check that
 * the squared ghost-sector differential vanishes on the equations of motion.
 */
bool in_eom_span(Poly const &s_fixed, Poly const &r, int cutoff);

} // namespace bvw
