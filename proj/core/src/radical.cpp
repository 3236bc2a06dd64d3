#include "bvw/radical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

namespace bvw {

std::pair<long, long> extract_square(long n)
{
	long s = 1, d = 1;
	for (long p = 2; p * p <= n; ++p)
	{
		if (n % p)
			continue;
		int e = 0;
		while (n % p == 0)
		{
			n /= p;
			++e;
		}
		for (int k = 0; k < e / 2; ++k)
			s *= p;
		if (e % 2)
			d *= p;
	}
	d *= n; // leftover prime
	return {s, d};
}

void RadicalScalar::set_term(long m, Rational q)
{
	q.canonicalize();
	if (q == 0)
		terms_.erase(m);
	else
		terms_[m] = std::move(q);
}

RadicalScalar RadicalScalar::sqrt_of(long m) { return term(1, m); }

RadicalScalar RadicalScalar::term(Rational const &q, long m)
{
	if (m <= 0)
		throw std::domain_error("radicand must be positive");
	auto [s, d] = extract_square(m);
	RadicalScalar r;
	r.set_term(d, q * s);
	return r;
}

bool RadicalScalar::is_rational() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalScalar::rational_part() const { return coeff(1); }

Rational RadicalScalar::coeff(long m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

RadicalScalar RadicalScalar::operator-() const
{
	RadicalScalar r;
	for (auto const &[m, q] : terms_)
		r.terms_[m] = -q;
	return r;
}

RadicalScalar &RadicalScalar::operator+=(RadicalScalar const &b)
{
	for (auto const &[m, q] : b.terms_)
		set_term(m, coeff(m) + q);
	return *this;
}

RadicalScalar &RadicalScalar::operator-=(RadicalScalar const &b)
{
	for (auto const &[m, q] : b.terms_)
		set_term(m, coeff(m) - q);
	return *this;
}

RadicalScalar operator*(RadicalScalar const &a, RadicalScalar const &b)
{
	RadicalScalar r;
	for (auto const &[ma, qa] : a.terms_)
		for (auto const &[mb, qb] : b.terms_)
		{
			// sqrt(ma)*sqrt(mb) = g*sqrt((ma/g)*(mb/g)) with g = gcd
			long g = std::gcd(ma, mb);
			long m = (ma / g) * (mb / g);
			r.set_term(m, r.coeff(m) + qa * qb * g);
		}
	return r;
}

namespace {

// closure of {1} u keys(a) under the reduced radicand product
std::vector<long> radicand_closure(std::map<long, Rational> const &terms, std::size_t bound)
{
	std::set<long> keys{1};
	for (auto const &[m, q] : terms)
		keys.insert(m);
	bool grew = true;
	while (grew)
	{
		grew = false;
		std::vector<long> cur(keys.begin(), keys.end());
		for (long a : cur)
			for (long b : cur)
			{
				long g = std::gcd(a, b);
				long m = (a / g) * (b / g);
				if (keys.insert(m).second)
				{
					grew = true;
					if (keys.size() > bound)
						throw ExtensionOverflow(keys.size(), bound);
				}
			}
	}
	return {keys.begin(), keys.end()};
}

} // namespace

RadicalScalar RadicalScalar::inverse(std::size_t dim_bound) const
{
	if (is_zero())
		throw ZeroInverse();
	if (is_rational())
		return RadicalScalar(Rational(1) / rational_part());
	if (terms_.size() == 1)
	{
		auto const &[m, q] = *terms_.begin();
		// 1/(q*sqrt(m)) = sqrt(m)/(q*m)
		return term(Rational(1) / (q * m), m);
	}

	auto basis = radicand_closure(terms_, dim_bound);
	std::size_t n = basis.size();
	auto index = [&](long m) {
		return std::lower_bound(basis.begin(), basis.end(), m) - basis.begin();
	};

	// column j of M is (*this) * sqrt(basis[j]) expanded over the basis
	std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
	for (std::size_t j = 0; j < n; ++j)
	{
		RadicalScalar col = *this * sqrt_of(basis[j]);
		for (auto const &[m, q] : col.terms_)
			M[index(m)][j] = q;
	}

	// solve M x = e_1 by exact Gaussian elimination
	std::vector<Rational> rhs(n, Rational(0));
	rhs[index(1)] = 1;
	for (std::size_t c = 0, r = 0; c < n && r < n; ++c)
	{
		std::size_t piv = r;
		while (piv < n && M[piv][c] == 0)
			++piv;
		if (piv == n)
			continue;
		std::swap(M[piv], M[r]);
		std::swap(rhs[piv], rhs[r]);
		Rational inv = Rational(1) / M[r][c];
		for (std::size_t k = c; k < n; ++k)
			M[r][k] *= inv;
		rhs[r] *= inv;
		for (std::size_t i = 0; i < n; ++i)
			if (i != r && M[i][c] != 0)
			{
				Rational f = M[i][c];
				for (std::size_t k = c; k < n; ++k)
					M[i][k] -= f * M[r][k];
				rhs[i] -= f * rhs[r];
			}
		++r;
	}

	RadicalScalar x;
	for (std::size_t i = 0; i < n; ++i)
		x.set_term(basis[i], rhs[i]);
	if (!((*this * x) == RadicalScalar(1)))
		throw std::logic_error("radical inverse verification failed");
	return x;
}

double RadicalScalar::to_double() const
{
	double v = 0;
	for (auto const &[m, q] : terms_)
		v += q.get_d() * std::sqrt(static_cast<double>(m));
	return v;
}

std::string RadicalScalar::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	bool first = true;
	for (auto const &[m, q] : terms_)
	{
		std::string qs = q.get_str();
		if (!first && qs[0] != '-')
			s += "+";
		s += qs;
		if (m != 1)
			s += "*sqrt(" + std::to_string(m) + ")";
		first = false;
	}
	return s;
}

ComplexRadical ComplexRadical::inverse(std::size_t dim_bound) const
{
	// 1/z = conj(z)/|z|^2
	RadicalScalar n = norm_sq();
	if (n.is_zero())
		throw ZeroInverse();
	RadicalScalar ninv = n.inverse(dim_bound);
	return {re * ninv, -im * ninv};
}

std::string ComplexRadical::str() const
{
	if (im.is_zero())
		return re.str();
	if (re.is_zero())
		return "(" + im.str() + ")*i";
	return re.str() + " + (" + im.str() + ")*i";
}

} // namespace bvw
