#pragma once

// Hermitian basis of the n x n matrices (generalized Pauli/Gell-Mann set
// plus the identity) and the structure constants of su(n) in that basis.

#include "bvw/matrix.hpp"

#include <vector>

namespace bvw {

/**
 * Basis sigma_1..sigma_{n^2} of the hermitian n x n matrices, normalized so
 * tr(sigma_a sigma_b) = 2 delta_ab for a,b < n^2. Ordering: for k = 2..n the
 * symmetric then antisymmetric off-diagonal pairs (j,k) with j < k, followed
 * by the diagonal generator of rank k-1; sigma_{n^2} is the identity.
 */
std::vector<CMatrix> hermitian_basis(int n);

/**
 * Totally antisymmetric structure constants of su(n),
 *   f_pqr = -(i/4) tr([sigma_p, sigma_q] sigma_r),
 * dense (n^2-1)^3 table indexed [p][q][r], zero-based.
 */
class StructureConstants {
  public:
	explicit StructureConstants(int n);

	int n() const { return n_; }
	int dim() const { return d_; } // n^2 - 1
	RadicalScalar const &operator()(int p, int q, int r) const
	{
		return f_[(p * d_ + q) * d_ + r];
	}

	/** max over p,q,r of |f_pqr - (antisymmetrized permutation)| == 0 */
	bool totally_antisymmetric() const;
	/** Jacobi identity sum_a (f_apr f_aqs - f_aps f_aqr - f_apq f_ars) = 0 */
	bool jacobi() const;

  private:
	int n_, d_;
	std::vector<RadicalScalar> f_;
};

} // namespace bvw
