#pragma once

// The finite triple (M_n(C), C^n, D_0), its ghost/antifield extension with
// the block Dirac operator and real structure, and the further auxiliary-pair
// extension used for gauge fixing. Operators are kept in two synchronized
// pictures: coordinates along the generator basis (for the fermionic action)
// and n^2 x n^2 matrix-space blocks (for the algebra/real-structure axioms).

#include "bvw/graded.hpp"
#include "bvw/lie.hpp"

#include <memory>
#include <vector>

namespace bvw {

struct NotEffective : std::domain_error {
	NotEffective() : std::domain_error("vector violates the effective-subspace rule") {}
};

struct BadSize : std::domain_error {
	BadSize() : std::domain_error("matrix size must be at least 2") {}
};

struct FiniteSpectralTriple {
	int n = 0;
	CMatrix d0; // hermitian

	FiniteSpectralTriple(int n_, CMatrix d0_);
};

/** dense matrix of graded-polynomial entries (operator in a chosen basis) */
using PolyMatrix = std::vector<std::vector<CPoly>>;

PolyMatrix zero_matrix(std::size_t rows, std::size_t cols, VarTablePtr const &tab);
std::vector<CPoly> apply(PolyMatrix const &m, std::vector<CPoly> const &v);
PolyMatrix compose(PolyMatrix const &a, PolyMatrix const &b);
PolyMatrix mat_add(PolyMatrix a, PolyMatrix const &b);
PolyMatrix mat_sub(PolyMatrix a, PolyMatrix const &b);
bool mat_is_zero(PolyMatrix const &m);

/**
 * Ghost-extended triple: generators x_p (p <= n^2, degree 0) with antifields
 * x*_p (degree -1), ghosts C_q (q <= n^2-1, degree 1) with anti-ghosts C*_q
 * (degree -2). The Dirac operator acts on four summands of coordinates in
 * the su(n) directions, ordered (C*-sector, x*-sector, x-sector, C-sector).
 */
class BVSpectralTriple {
  public:
	explicit BVSpectralTriple(FiniteSpectralTriple base);

	int n() const { return base_.n; }
	int dim() const { return d_; } // n^2 - 1
	FiniteSpectralTriple const &base() const { return base_; }
	VarTablePtr const &table() const { return tab_; }
	StructureConstants const &f() const { return *f_; }

	std::vector<int> const &x_ids() const { return x_; }
	std::vector<int> const &xstar_ids() const { return xs_; }
	std::vector<int> const &ghost_ids() const { return c_; }
	std::vector<int> const &antighost_ids() const { return cs_; }

	/** number of coordinate slots of the effective subspace (4 * dim) */
	std::size_t effective_size() const { return slot_var_.size(); }
	/** variable carried by effective coordinate k */
	int slot_variable(std::size_t k) const { return slot_var_[k]; }
	/** +1 for a hermitian-basis slot, -1 for an antihermitian one */
	int slot_sign(std::size_t k) const { return slot_sign_[k]; }

	/** coordinate vector whose entries are the generators themselves */
	std::vector<CPoly> generic_effective_vector() const;

	/** Dirac operator in effective coordinates */
	PolyMatrix const &dirac_coordinates() const { return dcoord_; }
	/** Dirac operator on the four matrix-space summands (4n^2 square) */
	PolyMatrix const &dirac_matrix_picture() const { return dmat_; }

	/** antilinear real structure in coordinates: v_k -> i * sign_k * conj(v_k) */
	std::vector<CPoly> apply_j(std::vector<CPoly> const &v) const;

	/**
	 * S_ferm = 1/2 <Jv, Dv> with the normalized Hilbert-Schmidt pairing on
	 * each summand; real coefficients, ghost degree 0.
	 */
	Poly fermionic_action(std::vector<CPoly> const &v) const;

  protected:
	// used by the auxiliary extension to append its own slots
	BVSpectralTriple(FiniteSpectralTriple base, bool);
	void finish_bv_sector();

	FiniteSpectralTriple base_;
	int d_ = 0;
	std::shared_ptr<VariableTable> mutable_tab_;
	VarTablePtr tab_;
	std::shared_ptr<StructureConstants> f_;
	std::vector<int> x_, xs_, c_, cs_;
	std::vector<int> slot_var_;
	std::vector<int> slot_sign_;
	PolyMatrix dcoord_;
	PolyMatrix dmat_;

	/** d x d matrix with entry (p,r) = -i sum_q f_pqr z_q */
	PolyMatrix ad_coord(std::vector<int> const &z_ids) const;
};

/**
 * Auxiliary extension: pairs (B_q, h_q) of degrees (-1, 0) with antifields
 * B*_q (degree 0), h*_q (degree -1); D gains a block exchanging the B*- and
 * h-sectors with weight 2.
 */
class TotalSpectralTriple : public BVSpectralTriple {
  public:
	explicit TotalSpectralTriple(FiniteSpectralTriple base);

	std::vector<int> const &b_ids() const { return b_; }
	std::vector<int> const &h_ids() const { return h_; }
	std::vector<int> const &bstar_ids() const { return bs_; }
	std::vector<int> const &hstar_ids() const { return hs_; }

	/** first auxiliary coordinate slot; aux order (h*, B*, B, h) */
	std::size_t aux_slot_offset() const { return 4 * static_cast<std::size_t>(d_); }

  private:
	std::vector<int> b_, h_, bs_, hs_;
};

struct RealStructureReport {
	bool j_squared = false;        // J^2 = Id
	bool j_anticommutes_d = false; // J D = -D J on the ghost-extended sector
	bool j_commutes_d_aux = false; // J D = D J on the auxiliary sector (total only)
	bool opposite_action = false;  // J b* J^{-1} = right multiplication by b
	bool commutant = false;        // [a, J b* J^{-1}] = 0
	bool first_order = false;      // [[D, a], J b* J^{-1}] = 0

	bool all() const
	{
		return j_squared && j_anticommutes_d && j_commutes_d_aux && opposite_action &&
		       commutant && first_order;
	}
};

RealStructureReport check_real_structure(BVSpectralTriple const &t);
RealStructureReport check_real_structure(TotalSpectralTriple const &t);

} // namespace bvw
