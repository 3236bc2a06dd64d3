#pragma once

// Coalgebra picture of the ghost-sector differential: the 1-shifted graded
// coalgebra spanned by truncated field polynomials and the ghost-sector
// generators, the field-polynomial comodule, the tensor coboundary, and the
// comparison with the bracket differential on normal forms.

#include "bvw/actions.hpp"

#include <map>
#include <tuple>

namespace bvw {

/** formal sums of 2- and 3-fold tensors of normal-form monomials */
using Tensor2 = std::map<std::pair<Monomial, Monomial>, RadicalScalar>;
using Tensor3 = std::map<std::tuple<Monomial, Monomial, Monomial>, RadicalScalar>;

class HochschildPair {
  public:
	/** ghost-extended pair: coproduct from {s_tilde, -} */
	static HochschildPair bv(BVSpectralTriple const &t, Poly const &s_tilde, int s0_degree);
	/** auxiliary-extended pair: coproduct from {s_t, -} */
	static HochschildPair total(TotalSpectralTriple const &t, Poly const &s_t, int s0_degree);
	/** gauge-fixed pair: coproduct from the ghost-sector differential */
	static HochschildPair brst(TotalSpectralTriple const &t, Poly const &s_t, int s0_degree,
	                           Poly const &psi);

	VarTablePtr const &table() const { return tab_; }
	Poly const &action() const { return action_; }
	bool gauge_fixed() const { return gauge_fixed_; }
	int b0_cutoff() const { return b0_cutoff_; }

	/** single-variable coalgebra generators outside the field sector */
	std::vector<int> const &ghost_generators() const { return ghost_gens_; }
	/** field-monomial generators of the degree-0 component (constant included) */
	std::vector<Monomial> const &b0_generators() const { return b0_gens_; }
	/** variables allowed in cochains of this pair */
	std::vector<int> const &cochain_variables() const { return cochain_vars_; }

	/** the differential: {action, z}, gauge-fixed when applicable */
	Poly bracket(Poly const &z) const;
	Poly bracket_of(Monomial const &m) const;

	/** coproduct of a generator as a graded-symmetric split tensor */
	Tensor2 coproduct(Monomial const &gen) const;
	/** coaction of a field monomial: coefficient kept in the left slot */
	Tensor2 coaction(Monomial const &f) const;

	/** tensor-formula coboundary of a normal-form cochain */
	Poly coboundary(Poly const &c) const;

  private:
	VarTablePtr tab_;
	Poly action_;
	Poly psi_;
	bool gauge_fixed_ = false;
	int b0_cutoff_ = 0;
	std::vector<int> ghost_gens_;
	std::vector<Monomial> b0_gens_;
	std::vector<int> cochain_vars_;
};

struct CoalgebraReport {
	bool degree_rule = false;     // coproduct terms split across degrees a+1
	bool coassociativity = false; // (Delta x id) Delta = -(-1)^{|z1|} (id x Delta) Delta
	bool compatibility = false;   // (omega x id) omega = -(id x Delta) omega
	bool all() const { return degree_rule && coassociativity && compatibility; }
};

CoalgebraReport check_coalgebra_axioms(HochschildPair const &pair);

/** does the tensor coboundary agree with the bracket differential on c? */
bool check_commuting_square(HochschildPair const &pair, Poly const &c);

} // namespace bvw
