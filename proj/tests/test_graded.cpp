#include <doctest.h>

#include "bvw/bracket.hpp"

#include <random>

using namespace bvw;

namespace {

struct Model {
	std::shared_ptr<VariableTable> tab;
	VarTablePtr ctab;
	std::vector<int> x, xs, c, cs;

	explicit Model(int nx = 4, int nc = 3)
	{
		tab = std::make_shared<VariableTable>();
		for (int p = 1; p <= nx; ++p)
			x.push_back(tab->add("x" + std::to_string(p), VarKind::field, p));
		for (int q = 1; q <= nc; ++q)
			c.push_back(tab->add("C" + std::to_string(q), VarKind::ghost, q));
		for (int p = 1; p <= nx; ++p)
			xs.push_back(tab->add("x*" + std::to_string(p), VarKind::antifield, p));
		for (int q = 1; q <= nc; ++q)
			cs.push_back(tab->add("C*" + std::to_string(q), VarKind::antighost, q));
		for (int p = 0; p < nx; ++p)
			tab->set_partners(x[p], xs[p]);
		for (int q = 0; q < nc; ++q)
			tab->set_partners(c[q], cs[q]);
		ctab = tab;
	}

	Poly v(int id) const { return Poly::variable(ctab, id); }
};

Poly random_homogeneous(Model const &m, std::mt19937 &rng, int max_factors = 3)
{
	// a single random monomial (homogeneous by construction)
	std::uniform_int_distribution<int> nf(0, max_factors), pick(0, int(m.tab->size()) - 1),
	    coeff(-4, 4);
	Poly p = Poly::constant(m.ctab, RadicalScalar(coeff(rng) == 0 ? 1 : coeff(rng)));
	int k = nf(rng);
	for (int i = 0; i < k; ++i)
		p = p * m.v(pick(rng));
	return p;
}

int ghost_deg(Poly const &p)
{
	auto ds = p.ghost_degrees();
	REQUIRE(ds.size() <= 1);
	return ds.empty() ? 0 : ds[0];
}

} // namespace

TEST_CASE("normal ordering and Koszul signs")
{
	Model m;
	auto C1 = m.v(m.c[0]), C2 = m.v(m.c[1]), x1 = m.v(m.x[0]);
	CHECK(C1 * C2 == -(C2 * C1));
	CHECK((C1 * C1).is_zero());
	CHECK(x1 * C1 == C1 * x1);
	CHECK((C1 * C2) * C1 == Poly(m.ctab));
	// associativity on random triples
	std::mt19937 rng(3);
	for (int i = 0; i < 200; ++i)
	{
		auto a = random_homogeneous(m, rng), b = random_homogeneous(m, rng),
		     c = random_homogeneous(m, rng);
		CHECK((a * b) * c == a * (b * c));
		int sign = (ghost_deg(a) & 1) && (ghost_deg(b) & 1) ? -1 : 1;
		Poly ba = b * a;
		if (sign < 0)
			ba = -ba;
		CHECK(a * b == ba);
	}
}

TEST_CASE("left derivative")
{
	Model m;
	auto C1 = m.v(m.c[0]), C2 = m.v(m.c[1]), C3 = m.v(m.c[2]), x1 = m.v(m.x[0]);
	CHECK((C1 * C2).left_derivative(m.c[0]) == C2);
	CHECK((C1 * C2).left_derivative(m.c[1]) == -C1);
	CHECK((x1 * x1 * C3).left_derivative(m.x[0]) == RadicalScalar(2) * (x1 * C3));
	CHECK((C1 * C2).left_derivative(m.c[2]).is_zero());
}

TEST_CASE("antibracket on generators")
{
	Model m;
	auto x1 = m.v(m.x[0]), x2 = m.v(m.x[1]), xs1 = m.v(m.xs[0]);
	CHECK(antibracket(xs1, x1) == Poly::constant(m.ctab, RadicalScalar(1)));
	CHECK(antibracket(x1, x2).is_zero());
	CHECK(antibracket(x1, x1).is_zero());
	auto C1 = m.v(m.c[0]), Cs1 = m.v(m.cs[0]);
	CHECK(!antibracket(Cs1, C1).is_zero());
	// degree +1
	auto f = xs1 * x2, g = x1 * m.v(m.c[2]);
	auto br = antibracket(f, g);
	if (!br.is_zero())
		CHECK(ghost_deg(br) == ghost_deg(f) + ghost_deg(g) + 1);
}

TEST_CASE("antibracket graded symmetry, Leibniz, Jacobi")
{
	Model m;
	std::mt19937 rng(17);
	int symmetric = 0;
	for (int i = 0; i < 500; ++i)
	{
		auto f = random_homogeneous(m, rng), g = random_homogeneous(m, rng);
		int sf = ghost_deg(f) + 1, sg = ghost_deg(g) + 1;
		auto lhs = antibracket(f, g);
		auto rhs = antibracket(g, f);
		if ((sf * sg) % 2 == 0)
			rhs = -rhs;
		// {f,g} = -(-1)^{(|f|+1)(|g|+1)} {g,f}
		CHECK(lhs == rhs);
		if (!lhs.is_zero())
			++symmetric;
	}
	CHECK(symmetric > 25); // the property was not vacuous

	// guaranteed-nonzero pairs of every parity combination
	auto x1 = m.v(m.x[0]), xs1 = m.v(m.xs[0]), C1 = m.v(m.c[0]), Cs1 = m.v(m.cs[0]);
	std::vector<std::pair<Poly, Poly>> pinned = {
	    {x1, xs1 * C1},      // even, even
	    {x1 * x1, xs1},      // even, odd
	    {Cs1 * C1, C1}};     // odd, odd
	for (auto const &[f, g] : pinned)
	{
		int sf = ghost_deg(f) + 1, sg = ghost_deg(g) + 1;
		auto lhs = antibracket(f, g);
		auto rhs = antibracket(g, f);
		if ((sf * sg) % 2 == 0)
			rhs = -rhs;
		CHECK(!lhs.is_zero());
		CHECK(lhs == rhs);
	}

	for (int i = 0; i < 200; ++i)
	{
		auto f = random_homogeneous(m, rng), g = random_homogeneous(m, rng),
		     h = random_homogeneous(m, rng);
		// {f, g h} = {f,g} h + (-1)^{(|f|+1)|g|} g {f,h}
		auto lhs = antibracket(f, g * h);
		auto rhs = antibracket(f, g) * h;
		auto second = g * antibracket(f, h);
		if (((ghost_deg(f) + 1) * ghost_deg(g)) % 2)
			rhs -= second;
		else
			rhs += second;
		CHECK(lhs == rhs);
	}

	for (int i = 0; i < 100; ++i)
	{
		auto f = random_homogeneous(m, rng, 2), g = random_homogeneous(m, rng, 2),
		     h = random_homogeneous(m, rng, 2);
		int a = ghost_deg(f) + 1, b = ghost_deg(g) + 1, cdeg = ghost_deg(h) + 1;
		// cyclic graded sum of (-1)^{(|f|+1)(|h|+1)} {f,{g,h}} vanishes
		auto t1 = antibracket(f, antibracket(g, h));
		auto t2 = antibracket(g, antibracket(h, f));
		auto t3 = antibracket(h, antibracket(f, g));
		Poly sum(m.ctab);
		sum += (a * cdeg) % 2 ? -t1 : t1;
		sum += (b * a) % 2 ? -t2 : t2;
		sum += (cdeg * b) % 2 ? -t3 : t3;
		CHECK(sum.is_zero());
	}
}

TEST_CASE("laplacian")
{
	Model m;
	auto x1 = m.v(m.x[0]), xs1 = m.v(m.xs[0]);
	auto one = Poly::constant(m.ctab, RadicalScalar(1));
	// sign convention: Delta(x1 x*1) = -1 with the bosonic pair weight -1
	CHECK(bv_laplacian(x1 * xs1) == -one);
	CHECK(bv_laplacian(x1 * m.v(m.x[1])).is_zero());
	// Delta^2 = 0 on every monomial of degree <= 4
	std::vector<int> all;
	for (auto const &v : m.tab->all())
		all.push_back(v.id);
	std::mt19937 rng(23);
	std::uniform_int_distribution<int> pick(0, int(all.size()) - 1);
	for (int i = 0; i < 500; ++i)
	{
		Poly p = Poly::constant(m.ctab, RadicalScalar(1));
		for (int k = 0; k < 4; ++k)
			p = p * m.v(all[pick(rng)]);
		CHECK(bv_laplacian(bv_laplacian(p)).is_zero());
	}
	// Delta generates the bracket: Delta(fg) = Delta(f) g + (-1)^{|f|} f Delta(g) + {f,g}
	// up to the implementation's fixed global sign on the bracket term
	for (int i = 0; i < 200; ++i)
	{
		auto f = random_homogeneous(m, rng), g = random_homogeneous(m, rng);
		auto lhs = bv_laplacian(f * g);
		auto rhs = bv_laplacian(f) * g;
		auto t = f * bv_laplacian(g);
		rhs += (ghost_deg(f) % 2) ? -t : t;
		auto br = antibracket(f, g);
		CHECK((lhs - rhs == br || lhs - rhs == -br));
	}
}

TEST_CASE("substitution is simultaneous")
{
	Model m;
	auto x1 = m.v(m.x[0]), x2 = m.v(m.x[1]);
	std::map<int, Poly> sub{{m.x[0], x2}, {m.x[1], x1}};
	auto p = x1 * x1 * x2;
	CHECK(p.substitute(sub) == x2 * x2 * x1);
}
