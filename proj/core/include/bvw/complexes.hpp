#pragma once

// Finite windows into the cochain complexes: monomial basis enumeration,
// sparse coboundary matrices, exact (rational/radical) and floating ranks,
// and truncated cohomology dimensions with stability flags.

#include "bvw/graded.hpp"

#include <functional>
#include <tuple>

namespace bvw {

struct ImageOverflow : std::runtime_error {
	explicit ImageOverflow(std::string const &mono)
	    : std::runtime_error("differential leaves the codomain basis at " + mono) {}
};

/** all normal-form monomials (any ghost degree) over vars with poly degree <= D */
std::vector<Monomial> monomials_up_to(VariableTable const &tab, std::vector<int> const &vars,
                                      int D);

/** monomials of ghost degree k and poly degree <= D, deterministically ordered */
std::vector<Monomial> cochain_basis(VariableTable const &tab, std::vector<int> const &vars, int k,
                                    int D);

enum class ArithmeticMode { exact_rational, exact_radical, floating };

std::string mode_name(ArithmeticMode m);

struct SparseMatrix {
	std::size_t rows = 0, cols = 0;
	std::vector<std::tuple<std::size_t, std::size_t, RadicalScalar>> entries;
};

/** column-wise expansion of d over basis_in in the codomain basis_out */
SparseMatrix coboundary_matrix(std::function<Poly(Poly const &)> const &d, VarTablePtr const &tab,
                               std::vector<Monomial> const &basis_in,
                               std::vector<Monomial> const &basis_out);

/** entry-exact product check for consecutive coboundaries */
bool sparse_product_is_zero(SparseMatrix const &second, SparseMatrix const &first);

struct RankResult {
	std::size_t rank = 0;
	bool float_fallback = false; // extension bound exceeded, finished in doubles
};

RankResult matrix_rank(SparseMatrix const &m, ArithmeticMode mode);

/** exact membership of target in the linear span of the given polynomials */
bool polynomial_in_span(std::vector<Poly> const &span, Poly const &target);

struct DegreeReport {
	int k = 0;
	std::size_t dim_basis = 0;
	std::size_t dim_ker = 0;
	std::size_t dim_im_prev = 0;
	std::size_t dim = 0; // dim_ker - dim_im_prev
	bool stable = false; // unchanged when recomputed at D-1
};

struct CohomologyReport {
	std::vector<DegreeReport> degrees;
	ArithmeticMode mode = ArithmeticMode::exact_rational;
	bool float_fallback = false;
	int poly_cutoff = 0;
	int degree_increment = 0;
};

/**
 * Truncated cohomology of the differential d over the given variable set:
 * reported dimension at k is dim ker(d_k on degree <= D) minus the dimension
 * of im(d_{k-1}) intersected with degree <= D. deg_increment bounds how much
 * d can raise polynomial degree (codomain cutoff D + deg_increment).
 */
CohomologyReport cohomology_dims(std::function<Poly(Poly const &)> const &d,
                                 VarTablePtr const &tab, std::vector<int> const &vars, int kmin,
                                 int kmax, int D, int deg_increment, ArithmeticMode mode);

} // namespace bvw
