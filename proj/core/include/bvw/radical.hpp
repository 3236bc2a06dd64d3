#pragma once

// Exact arithmetic over Q extended by square roots of squarefree integers.
// A RadicalScalar is a finite sum q_1*sqrt(m_1) + ... with rational q_i and
// squarefree m_i >= 1 (m = 1 carries the rational part). The set of such
// values is closed under ring operations; division works inside the finite
// extension spanned by the radicands that actually show up.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace bvw {

using Rational = mpq_class;

/** thrown by inverse() on a zero argument */
struct ZeroInverse : std::domain_error {
	ZeroInverse() : std::domain_error("inverse of exact zero") {}
};

/** thrown when division would leave the configured field-extension bound */
struct ExtensionOverflow : std::runtime_error {
	ExtensionOverflow(std::size_t dim, std::size_t bound)
	    : std::runtime_error("radical extension dimension " + std::to_string(dim) +
	                         " exceeds bound " + std::to_string(bound)) {}
};

/** split n > 0 as s*s*d with d squarefree, returns (s, d) */
std::pair<long, long> extract_square(long n);

class RadicalScalar {
  public:
	RadicalScalar() = default;
	RadicalScalar(long v) { set_term(1, Rational(v)); }
	RadicalScalar(Rational const &v) { set_term(1, v); }

	/** sqrt(m) for m > 0, reduced to canonical form */
	static RadicalScalar sqrt_of(long m);
	/** q * sqrt(m), m > 0 arbitrary (square part is pulled into q) */
	static RadicalScalar term(Rational const &q, long m);

	bool is_zero() const { return terms_.empty(); }
	bool is_rational() const;
	Rational rational_part() const;

	/** coefficient of sqrt(m); zero if absent */
	Rational coeff(long m) const;
	std::map<long, Rational> const &terms() const { return terms_; }

	RadicalScalar operator-() const;
	RadicalScalar &operator+=(RadicalScalar const &b);
	RadicalScalar &operator-=(RadicalScalar const &b);
	friend RadicalScalar operator+(RadicalScalar a, RadicalScalar const &b) { return a += b; }
	friend RadicalScalar operator-(RadicalScalar a, RadicalScalar const &b) { return a -= b; }
	friend RadicalScalar operator*(RadicalScalar const &a, RadicalScalar const &b);
	RadicalScalar &operator*=(RadicalScalar const &b) { return *this = *this * b; }
	bool operator==(RadicalScalar const &b) const { return terms_ == b.terms_; }
	bool operator!=(RadicalScalar const &b) const { return !(*this == b); }
	bool operator<(RadicalScalar const &b) const { return terms_ < b.terms_; }

	/**
	 * Multiplicative inverse. The multiplication-by-*this operator is solved
	 * exactly on the Q-span of the radicand monoid generated by the keys of
	 * *this; dim_bound caps the dimension of that span.
	 */
	RadicalScalar inverse(std::size_t dim_bound = 64) const;

	double to_double() const;
	std::string str() const;

  private:
	void set_term(long m, Rational q);
	std::map<long, Rational> terms_;
};

inline RadicalScalar operator*(Rational const &q, RadicalScalar const &a)
{
	return RadicalScalar(q) * a;
}

/** a + b*i with radical-scalar components; conjugation flips the sign of im */
struct ComplexRadical {
	RadicalScalar re, im;

	ComplexRadical() = default;
	ComplexRadical(RadicalScalar r) : re(std::move(r)) {}
	ComplexRadical(long v) : re(v) {}
	ComplexRadical(RadicalScalar r, RadicalScalar i) : re(std::move(r)), im(std::move(i)) {}
	static ComplexRadical i() { return {RadicalScalar(0), RadicalScalar(1)}; }

	bool is_zero() const { return re.is_zero() && im.is_zero(); }
	bool is_real() const { return im.is_zero(); }
	ComplexRadical conj() const { return {re, -im}; }
	RadicalScalar norm_sq() const { return re * re + im * im; }

	ComplexRadical operator-() const { return {-re, -im}; }
	ComplexRadical &operator+=(ComplexRadical const &b)
	{
		re += b.re;
		im += b.im;
		return *this;
	}
	ComplexRadical &operator-=(ComplexRadical const &b)
	{
		re -= b.re;
		im -= b.im;
		return *this;
	}
	friend ComplexRadical operator+(ComplexRadical a, ComplexRadical const &b) { return a += b; }
	friend ComplexRadical operator-(ComplexRadical a, ComplexRadical const &b) { return a -= b; }
	friend ComplexRadical operator*(ComplexRadical const &a, ComplexRadical const &b)
	{
		return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
	}
	ComplexRadical &operator*=(ComplexRadical const &b) { return *this = *this * b; }
	bool operator==(ComplexRadical const &b) const { return re == b.re && im == b.im; }
	bool operator!=(ComplexRadical const &b) const { return !(*this == b); }

	ComplexRadical inverse(std::size_t dim_bound = 64) const;
	std::string str() const;
};

} // namespace bvw
