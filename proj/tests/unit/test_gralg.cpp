#include <doctest.h>

#include "rsyn/gralg.hpp"
#include "rsyn/homalg.hpp"
#include "rsyn/syntomic.hpp"

using namespace rsyn;

namespace {

const TriDegree T{{-1, -1}, -1, 1};
const TriDegree MU{{1, 1}, 1, 0};

Presentation tmu_quotient()
{
	Presentation p;
	p.name = "F2[t,mu]/(t mu)";
	p.add_generator({"t", GenKind::Polynomial, T, ""});
	p.add_generator({"mu", GenKind::Polynomial, MU, ""});
	p.relations.push_back(Mono{1, 1});
	return p;
}

}  // namespace

TEST_CASE("basis of M2[mubar]<epsbar0> at |mubar|")
{
	auto p = thr_mod_presentation(-1);
	auto b = basis_in_degree(p, MU);
	REQUIRE(b.size() == 1);
	CHECK(b[0].x.is_one());
	CHECK(p.mono_str(b[0].mono) == "mubar1");
}

TEST_CASE("killed relation leaves an empty basis")
{
	auto p = tmu_quotient();
	CHECK(basis_in_degree(p, T + MU).empty());
	CHECK(p.killed(Mono{1, 1}));
	CHECK_FALSE(p.mono_mul(p.gen_mono("t"), p.gen_mono("mu")));
}

TEST_CASE("M2[tbar^+-1] ranks on a 5x5 box")
{
	Presentation p;
	p.add_generator({"tbar", GenKind::Laurent, T, ""});
	Window w{-2, 2, -2, 2, -30, 30};
	auto cells = enumerate_window(p, w);
	std::map<RODegree, int> got, want;
	for (auto& [d, terms] : cells) {
		CHECK(terms.size() == 1);
		CHECK(d.f == -d.m);
		got[d.V] += int(terms.size());
	}
	/* tbar^e times M2 in degree V + e rho */
	for (int a = -2; a <= 2; ++a)
		for (int b = -2; b <= 2; ++b)
			for (int e = -30; e <= 30; ++e)
				if (m2_rank({a + e, b + e}))
					want[{a, b}]++;
	CHECK(got == want);
}

TEST_CASE("exterior, divided power and relation products")
{
	auto p = thr_mod_presentation(-1);
	auto e = p.gen_mono("epsbar0");
	CHECK_FALSE(p.mono_mul(e, e));
	CHECK(p.killed(p.gen_mono("epsbar0", 2)));

	Presentation g;
	g.add_generator({"g", GenKind::DividedPower, {{2, 2}, 2, 0}, ""});
	CHECK_FALSE(g.mono_mul(g.gen_mono("g"), g.gen_mono("g")));
	auto g3 = g.mono_mul(g.gen_mono("g"), g.gen_mono("g", 2));
	REQUIRE(g3);
	CHECK(*g3 == g.gen_mono("g", 3));
	/* binom(4,2) = 6 is even */
	CHECK_FALSE(g.mono_mul(g.gen_mono("g", 2), g.gen_mono("g", 2)));
	CHECK(g.mono_mul(g.gen_mono("g", 1), g.gen_mono("g", 4)) == g.gen_mono("g", 5));
}

TEST_CASE("element arithmetic")
{
	auto p = tmu_quotient();
	Term t{p.gen_mono("t"), M2Basis::one()};
	Term mu{p.gen_mono("mu"), M2Basis::one()};
	CHECK(mul(p, Element::of(t), Element::of(mu)).is_zero());
	Element x = Element::of(t);
	x += Element::of(t);
	CHECK(x.is_zero());

	Term ta{p.gen_mono("t"), A_SIGMA};
	auto prod = mul(p, t, ta);
	REQUIRE(prod);
	CHECK(prod->mono == p.gen_mono("t", 2));
	CHECK(prod->x == A_SIGMA);
	CHECK(term_degree(p, *prod) == TriDegree{{-2, -3}, -2, 2});

	Element inh = Element::of(t);
	inh.add(mu);
	CHECK_THROWS(element_degree(p, inh));
}

TEST_CASE("localize")
{
	Presentation p;
	p.add_generator({"tbar", GenKind::Polynomial, T, ""});
	auto l = localize(p, "tbar");
	CHECK(l.gens[0].kind == GenKind::Laurent);
	CHECK(localize(l, "tbar").gens == l.gens);

	auto q = thr_presentation(1);
	auto lq = localize(q, "mubar4");
	CHECK(lq.gens[lq.index("mubar4")].kind == GenKind::Laurent);
	CHECK(lq.gens[lq.index("lambar1")].kind == GenKind::Exterior);
	CHECK(lq.gens[lq.index("lambar2")].kind == GenKind::Exterior);

	/* t invertible kills mu */
	auto tm = localize(tmu_quotient(), "t");
	CHECK(tm.killed(tm.gen_mono("mu")));

	CHECK_THROWS_AS(localize(q, "lambar1"), std::invalid_argument);
	CHECK_THROWS_AS(localize(q, "nothing"), UnknownGenerator);
}

TEST_CASE("quotient_adjoin")
{
	for (int n = -1; n <= 2; ++n) {
		CAPTURE(n);
		int N = 1 << (n + 1);
		auto q = quotient_adjoin(thr_with_vbar(n), "vbar" + std::to_string(n + 1));
		auto& e = q.gens[q.index("epsbar" + std::to_string(n + 1))];
		CHECK(e.kind == GenKind::Exterior);
		CHECK(e.degree.V == RHO * (N - 1) + ONE);
		CHECK(adams_weight(e.degree).value() == -1);
		CHECK(q.find("vbar" + std::to_string(n + 1)) < 0);

		/* rank-wise a tensor factor Lambda(epsbar) */
		Presentation ext;
		ext.add_generator(e);
		int maxu = 24;
		auto lhs = monomial_ranks(q, maxu);
		auto rhs = convolve(monomial_ranks(thr_presentation(n), maxu), monomial_ranks(ext, maxu), maxu);
		CHECK(lhs == rhs);
	}
	CHECK_THROWS_AS(quotient_adjoin(thr_presentation(0), "lambar1"), std::invalid_argument);
}

TEST_CASE("monomial strings and json")
{
	auto p = thr_presentation(1);
	auto m = p.parse_mono("mubar4^3*lambar2");
	CHECK(p.parse_mono(p.mono_str(m)) == m);
	CHECK(p.degree(m) == TriDegree{{15, 16}, 16, 0});
	auto back = presentation_from_json(presentation_to_json(p));
	CHECK(back.gens == p.gens);
	CHECK_THROWS_AS(parse_kind("free"), std::invalid_argument);
}
